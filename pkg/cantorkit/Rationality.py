"""
:module Rationality: The rationality criterion through fractional-part collisions.

For x in [0,1) with canonical digits the trace

    {P_{k-1} sigma_k(x)} = sigma^k(x),   [P_{k-1} sigma_k(x)] = delta_{k-1}   (k >= 1)

with entry 0 defined as {x}, repeats a value exactly when x is rational. For
x = a/b every trace value lies in {0, 1/b, ..., (b-1)/b}, so a repeat among the
entries 1..b+1 is guaranteed, and any repeat (m1, m2) gives x back as

    x = (q_{m1} delta_{m1-1} - q_{m2} delta_{m2-1} + eps_{m1} - eps_{m2}) / (P_{m1} - P_{m2}).

The tail-of-(q_k - 1) branch of the fractional part never arises on canonical
digits and has no runtime case here.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from cantorkit.BaseSequence import BaseSequence
from cantorkit.Exceptions import CantorDomainError
from cantorkit.Numeric import RationalLike, check_unit_interval, frac_part, int_part
from cantorkit.Operators import IdentityCheck, OperatorContext, generalized_shift

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    k: int
    value: Fraction
    integer_component: int


@dataclass(frozen=True)
class CollisionWitness:
    """Two trace indices m1 < m2 with exactly equal trace values."""

    m1: int
    m2: int

    def __post_init__(self):
        if not 0 <= self.m1 < self.m2:
            raise ValueError(f"A collision witness needs 0 <= m1 < m2, got ({self.m1}, {self.m2})")


@dataclass
class SweepReport:
    """Outcome of :func:`sweep_certificates`."""

    Q: BaseSequence
    max_denominator: int
    checked: int = 0
    failures: List[Tuple[int, int]] = field(default_factory=list)
    max_witness_index: int = 0
    pigeonhole_violations: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.pigeonhole_violations


def fractional_trace(
    x: RationalLike,
    Q: BaseSequence,
    horizon: int,
    ctx: Optional[OperatorContext] = None,
) -> List[TraceEntry]:
    """
    The entries 0..horizon of the fractional-part trace.

    :param x: A rational in [0,1).
    :param Q: The base sequence.
    :param horizon: Index of the last entry.
    :param ctx: An existing context of x over Q to reuse, optional.
    """
    if horizon < 0:
        raise ValueError(f"fractional_trace: horizon must be non-negative, got {horizon}")
    x = check_unit_interval(x)
    if ctx is None:
        ctx = OperatorContext(x, Q)
    elif ctx.x != x or ctx.Q != Q:
        raise ValueError("fractional_trace: the context belongs to a different (x, Q)")
    ctx.resolve(horizon)
    trace = [TraceEntry(0, frac_part(x), int_part(x))]
    for k in range(1, horizon + 1):
        scaled = ctx.product(k - 1) * generalized_shift(ctx, k)
        entry = TraceEntry(k, frac_part(scaled), int_part(scaled))
        assert entry.integer_component == ctx.delta(k - 1)
        assert entry.value == ctx.tail(k)
        trace.append(entry)
    return trace


def find_collision(trace: Sequence[TraceEntry]) -> Optional[CollisionWitness]:
    """
    The lexicographically first (m1, m2) with equal trace values.

    Witnesses with m1 >= 1 are preferred since reconstruction needs eps_m and
    delta_{m-1}; a (0, m2) witness is returned only if no other exists.
    """
    first_pairs: Dict[Fraction, List[int]] = {}
    for entry in trace:
        if entry.k == 0:
            continue
        indices = first_pairs.setdefault(entry.value, [])
        if len(indices) < 2:
            indices.append(entry.k)
    candidates = [tuple(indices) for indices in first_pairs.values() if len(indices) == 2]
    if candidates:
        return CollisionWitness(*min(candidates))
    if trace and trace[0].k == 0:
        for entry in trace[1:]:
            if entry.value == trace[0].value:
                return CollisionWitness(0, entry.k)
    return None


def distinct_trace_values(trace: Sequence[TraceEntry]) -> int:
    return len({entry.value for entry in trace})


def reconstruct(ctx: OperatorContext, w: CollisionWitness) -> Fraction:
    """
    The rational recovered from a collision witness.

    :raises CantorDomainError: if either index is 0.
    """
    if w.m1 == 0 or w.m2 == 0:
        raise CantorDomainError(
            "Reconstruction needs witness indices m >= 1; extend the trace to find one"
        )
    numerator = (
        ctx.q(w.m1) * ctx.delta(w.m1 - 1)
        - ctx.q(w.m2) * ctx.delta(w.m2 - 1)
        + ctx.digit(w.m1)
        - ctx.digit(w.m2)
    )
    # P_m1 != P_m2 because P_k is strictly increasing
    return Fraction(numerator, ctx.product(w.m1) - ctx.product(w.m2))


def rationality_certificate(
    a: int, b: int, Q: BaseSequence, ctx: Optional[OperatorContext] = None
) -> CollisionWitness:
    """
    A collision witness for x = a/b, searched within the horizon b + 2.

    Existence follows from the pigeonhole principle, so not finding one is an
    assertion failure rather than a domain error.
    """
    if b <= 0:
        raise CantorDomainError(f"The denominator b must be positive, got {b}")
    if math.gcd(a, b) != 1:
        raise CantorDomainError(f"{a}/{b} is not in lowest terms")
    x = check_unit_interval(Fraction(a, b))
    trace = fractional_trace(x, Q, b + 2, ctx)
    # entries 1..b+1 take at most b values
    witness = find_collision(trace[: b + 2])
    assert witness is not None and witness.m1 >= 1, f"no collision for {a}/{b} within {b + 2}"
    assert witness.m2 <= b + 1, f"collision {witness} for {a}/{b} beyond the pigeonhole bound"
    return witness


def check_round_trip(ctx: OperatorContext) -> IdentityCheck:
    """Explicit (assert-free) check that the certificate of x reconstructs x."""
    a, b = ctx.x.numerator, ctx.x.denominator
    trace = fractional_trace(ctx.x, ctx.Q, b + 2, ctx)
    witness = find_collision(trace[: b + 2])
    passed = (
        witness is not None
        and witness.m1 >= 1
        and witness.m2 <= b + 1
        and reconstruct(ctx, witness) == ctx.x
        and distinct_trace_values(trace) <= b
    )
    if not passed:
        logger.warning("Certificate round trip fails for %s over %s", ctx.x, ctx.Q)
    return IdentityCheck("theorem1_round_trip", passed, 1, None if passed else b)


def sweep_certificates(max_denominator: int, Q: BaseSequence) -> SweepReport:
    """Round-trip every reduced a/b in [0,1) with b <= max_denominator through its certificate."""
    if max_denominator < 1:
        raise ValueError(f"sweep_certificates: max_denominator must be at least 1, got {max_denominator}")
    report = SweepReport(Q, max_denominator)
    for b in range(1, max_denominator + 1):
        for a in range(b):
            if math.gcd(a, b) != 1:
                continue
            ctx = OperatorContext(Fraction(a, b), Q)
            trace = fractional_trace(ctx.x, Q, b + 2, ctx)
            witness = find_collision(trace[: b + 2])
            report.checked += 1
            if distinct_trace_values(trace) > b:
                report.pigeonhole_violations.append((a, b))
            if witness is None or witness.m1 == 0 or witness.m2 > b + 1:
                report.failures.append((a, b))
                continue
            report.max_witness_index = max(report.max_witness_index, witness.m2)
            if reconstruct(ctx, witness) != ctx.x:
                report.failures.append((a, b))
    logger.info(
        "Swept %d fractions over %s up to b=%d: %d failures",
        report.checked,
        Q,
        max_denominator,
        len(report.failures),
    )
    return report

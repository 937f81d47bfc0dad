"""
:module Operators: Closed forms of the shift sigma^n and of the generalized shift
sigma_m, the one-step recurrence with its digit recovery, and the digit formula
eps_{m+1} = [z_{m+1}].

Every public operator asserts its cross-identity with an independent route
(closed form against tail form, recurrence against closed form, formula digit
against greedy digit). The asserts are active in normal and test runs and are
stripped under ``python -O``. :func:`identity_report` performs the same
comparisons explicitly, without asserts, for the ``verify`` command.

Index conventions: P_0 = 1 and delta_0 = theta_0 = 0.
"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from cantorkit.BaseSequence import BaseSequence
from cantorkit.Exceptions import CantorDomainError, DualFormError
from cantorkit.Expansion import DigitString, PrefixState, TailKind, limit_value
from cantorkit.Numeric import RationalLike, check_unit_interval, int_part

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DigitFormulaWitness:
    """The quantity z_{m+1} and its integer part, the digit eps_{m+1}."""

    m: int
    z: Fraction
    digit: int


@dataclass(frozen=True)
class IdentityCheck:
    """Result of checking one identity over a range of indices."""

    name: str
    passed: bool
    checked: int
    first_failure: Optional[int] = None


class OperatorContext:
    """
    The number x together with its greedy prefix states over Q.

    States are resolved on demand and cached; the cache only grows, under a
    lock, so a context can be shared for reads across threads.
    """

    def __init__(self, x: RationalLike, Q: BaseSequence, dual_form: bool = False):
        """
        :param x: A rational in [0,1).
        :param Q: The base sequence.
        :param dual_form: True when x was supplied through its tail-of-(q_k - 1) representation.
        """
        if not isinstance(Q, BaseSequence):
            raise TypeError(
                f"OperatorContext: `Q` is expected to be a BaseSequence, not {type(Q)}"
            )
        self.__x = check_unit_interval(x)
        self.__Q = Q
        self.__dual_form = dual_form
        self.__states: List[PrefixState] = [PrefixState.initial(self.__x)]
        self.__digits: List[int] = [0]
        self.__lock = threading.Lock()

    @classmethod
    def from_digit_string(cls, d: DigitString) -> "OperatorContext":
        """Build the context of the number a digit string denotes."""
        return cls(limit_value(d), d.Q, dual_form=d.tail.kind is TailKind.MAX)

    @property
    def x(self) -> Fraction:
        return self.__x

    @property
    def Q(self) -> BaseSequence:
        return self.__Q

    @property
    def dual_form(self) -> bool:
        return self.__dual_form

    @property
    def depth(self) -> int:
        """The deepest resolved state."""
        return len(self.__states) - 1

    def resolve(self, depth: int):
        """Make sure the states up to ``depth`` are available."""
        if depth < len(self.__states):
            return
        with self.__lock:
            while len(self.__states) <= depth:
                state = self.__states[-1]
                digit, state = state.advance(self.__Q.q_at(state.k + 1))
                self.__digits.append(digit)
                self.__states.append(state)

    def state(self, k: int) -> PrefixState:
        if k < 0:
            raise ValueError(f"State index must be non-negative, got {k}")
        self.resolve(k)
        return self.__states[k]

    def digit(self, k: int) -> int:
        """The greedy digit eps_k, k >= 1."""
        if k < 1:
            raise ValueError(f"Digit index starts at 1, got {k}")
        self.resolve(k)
        return self.__digits[k]

    def q(self, k: int) -> int:
        return self.__Q.q_at(k)

    def product(self, k: int) -> int:
        return self.__Q.product_prefix(k)

    def delta(self, k: int) -> int:
        return self.state(k).delta

    def theta(self, k: int) -> Fraction:
        return self.state(k).theta

    def tail(self, k: int) -> Fraction:
        """sigma^k(x) as carried by the greedy recursion."""
        return self.state(k).tail


def _check_index(name: str, value: int, lowest: int):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} is expected to be an int, not {type(value)}")
    if value < lowest:
        raise ValueError(f"{name} must be at least {lowest}, got {value}")


def _shift_closed_form(ctx: OperatorContext, n: int) -> Fraction:
    return ctx.product(n) * ctx.x - ctx.delta(n)


def shift_power(ctx: OperatorContext, n: int) -> Fraction:
    """sigma^n(x) = P_n x - delta_n; sigma^0(x) = x."""
    _check_index("n", n, 0)
    value = _shift_closed_form(ctx, n)
    assert value == ctx.tail(n), f"sigma^{n}: closed form {value} != recursion {ctx.tail(n)}"
    return value


def generalized_shift_eq2(ctx: OperatorContext, m: int) -> Fraction:
    """sigma_m(x) = q_m x - (q_m - 1) theta_{m-1} - eps_m / P_{m-1}."""
    _check_index("m", m, 1)
    q = ctx.q(m)
    return q * ctx.x - (q - 1) * ctx.theta(m - 1) - Fraction(ctx.digit(m), ctx.product(m - 1))


def generalized_shift_from_tail(ctx: OperatorContext, m: int) -> Fraction:
    """sigma_m(x) = (delta_{m-1} + sigma^m(x)) / P_{m-1}."""
    _check_index("m", m, 1)
    return (ctx.delta(m - 1) + ctx.tail(m)) / ctx.product(m - 1)


def generalized_shift(ctx: OperatorContext, m: int) -> Fraction:
    """The generalized shift sigma_m(x): delete eps_m and q_m from the series of x."""
    value = generalized_shift_eq2(ctx, m)
    assert value == generalized_shift_from_tail(ctx, m), f"sigma_{m}: closed form disagrees with the tail form"
    return value


def _lemma_recurrence(ctx: OperatorContext, m: int) -> Fraction:
    q_m, q_next = ctx.q(m), ctx.q(m + 1)
    return (
        Fraction(q_next, q_m) * generalized_shift_eq2(ctx, m)
        - Fraction(q_next - q_m, q_m) * ctx.theta(m - 1)
        - Fraction(ctx.digit(m + 1) - ctx.digit(m), ctx.product(m))
    )


def lemma_step(ctx: OperatorContext, m: int) -> Fraction:
    """
    sigma_{m+1}(x) from sigma_m(x) by the recurrence

        sigma_{m+1} = (q_{m+1}/q_m) sigma_m - ((q_{m+1} - q_m)/q_m) theta_{m-1} - (eps_{m+1} - eps_m)/P_m.
    """
    _check_index("m", m, 1)
    value = _lemma_recurrence(ctx, m)
    assert value == generalized_shift_eq2(ctx, m + 1), f"one-step recurrence fails at m={m}"
    return value


def _recovered_digit(ctx: OperatorContext, m: int) -> Fraction:
    return (
        ctx.product(m) * ctx.x
        - ctx.product(m - 1) * generalized_shift_eq2(ctx, m)
        - (ctx.q(m) - 1) * ctx.delta(m - 1)
    )


def recover_digit(ctx: OperatorContext, m: int) -> int:
    """eps_m = P_m x - P_{m-1} sigma_m(x) - (q_m - 1) delta_{m-1}."""
    _check_index("m", m, 1)
    value = _recovered_digit(ctx, m)
    assert value.denominator == 1, f"recovered eps_{m} = {value} is not an integer"
    digit = value.numerator
    assert 0 <= digit <= ctx.q(m) - 1, f"recovered eps_{m} = {digit} is outside its digit set"
    assert digit == ctx.digit(m), f"recovered eps_{m} = {digit} != greedy digit {ctx.digit(m)}"
    return digit


def _check_fraction_of(ctx: OperatorContext, a: int, b: int):
    if b <= 0:
        raise CantorDomainError(f"The denominator b must be positive, got {b}")
    if math.gcd(a, b) != 1:
        raise CantorDomainError(f"{a}/{b} is not in lowest terms")
    if Fraction(a, b) != ctx.x:
        raise CantorDomainError(f"{a}/{b} is not the number of this context ({ctx.x})")


def _digit_formula_z(a: int, b: int, ctx: OperatorContext, m: int) -> Fraction:
    if m == 0:
        return Fraction(a * ctx.q(1), b)
    q = ctx.q(m + 1)
    product = ctx.product(m)
    # P_m sigma_{m+1}(x) = delta_m + sigma^{m+1}(x)
    scaled_shift = ctx.delta(m) + ctx.tail(m + 1)
    return ((q + 1) * product * a - b * (scaled_shift + q * ctx.delta(m))) / b


def theorem2_digit(a: int, b: int, ctx: OperatorContext, m: int) -> DigitFormulaWitness:
    """
    The digit eps_{m+1} = [z_{m+1}] with

        z_{m+1} = ((q_{m+1} + 1) P_m a - b (P_m sigma_{m+1}(x) + q_{m+1} delta_m)) / b

    and z_1 = a q_1 / b. The formula consumes sigma_{m+1}(x), which already
    encodes eps_{m+1}; it verifies the greedy digit rather than producing it
    independently.

    :param a: Numerator of x.
    :param b: Denominator of x, with gcd(a, b) = 1.
    :param ctx: The context of x = a/b.
    :param m: Index, m >= 0.
    :raises DualFormError: if the context was built from a tail-of-(q_k - 1) form.
    """
    _check_index("m", m, 0)
    if ctx.dual_form:
        raise DualFormError(
            "The digit formula does not apply to a representation with a tail of (q_k - 1) digits"
        )
    _check_fraction_of(ctx, a, b)
    if m > 0:
        assert ctx.delta(m) + ctx.tail(m + 1) == ctx.product(m) * generalized_shift_eq2(ctx, m + 1)
    z = _digit_formula_z(a, b, ctx, m)
    digit = int_part(z)
    assert 0 <= digit <= ctx.q(m + 1) - 1, f"[z_{m + 1}] = {digit} is outside its digit set"
    assert digit == ctx.digit(m + 1), f"[z_{m + 1}] = {digit} != greedy digit {ctx.digit(m + 1)}"
    return DigitFormulaWitness(m, z, digit)


def theorem2_sufficiency(a: int, b: int, ctx: OperatorContext, m: int) -> Fraction:
    """Substitute [z_{m+1}] back: theta_{m+1} + sigma^{m+1}(x)/P_{m+1}, which equals a/b."""
    witness = theorem2_digit(a, b, ctx, m)
    q = ctx.q(m + 1)
    return Fraction(witness.digit + q * ctx.delta(m), ctx.product(m + 1)) + ctx.tail(
        m + 1
    ) / ctx.product(m + 1)


def shift_series(ctx: OperatorContext, n: int, depth: int) -> Fraction:
    """
    Series oracle for sigma^n(x): sum_{k=n+1}^{depth} eps_k / (q_{n+1}...q_k)
    plus the exact remainder sigma^depth(x) / (q_{n+1}...q_depth).
    """
    _check_index("n", n, 0)
    if depth < n:
        raise ValueError(f"shift_series: depth {depth} is below n = {n}")
    ctx.resolve(depth)
    head = ctx.product(n)
    value = Fraction(0)
    for k in range(n + 1, depth + 1):
        value += Fraction(ctx.digit(k) * head, ctx.product(k))
    return value + ctx.tail(depth) * head / ctx.product(depth)


def generalized_shift_series(ctx: OperatorContext, m: int, depth: int) -> Fraction:
    """
    Series oracle for sigma_m(x): the digits before m over their usual
    denominators, the digits after m with q_m removed from every denominator,
    plus the exact remainder beyond ``depth``.
    """
    _check_index("m", m, 1)
    if depth < m:
        raise ValueError(f"generalized_shift_series: depth {depth} is below m = {m}")
    ctx.resolve(depth)
    q = ctx.q(m)
    value = Fraction(0)
    for k in range(1, m):
        value += Fraction(ctx.digit(k), ctx.product(k))
    for t in range(m + 1, depth + 1):
        value += Fraction(ctx.digit(t) * q, ctx.product(t))
    return value + ctx.tail(depth) * q / ctx.product(depth)


def _sweep(name: str, indices, holds: Callable[[int], bool]) -> IdentityCheck:
    checked = 0
    for index in indices:
        checked += 1
        if not holds(index):
            logger.warning("Identity %s fails at index %d", name, index)
            return IdentityCheck(name, False, checked, index)
    return IdentityCheck(name, True, checked)


def _check_eq2_cross(ctx: OperatorContext, depth: int) -> IdentityCheck:
    return _sweep(
        "eq2_cross",
        range(1, depth + 1),
        lambda m: generalized_shift_eq2(ctx, m) == generalized_shift_from_tail(ctx, m),
    )


def _check_lemma_recurrence(ctx: OperatorContext, depth: int) -> IdentityCheck:
    return _sweep(
        "lemma_recurrence",
        range(1, depth + 1),
        lambda m: _lemma_recurrence(ctx, m) == generalized_shift_eq2(ctx, m + 1),
    )


def _check_lemma_digit(ctx: OperatorContext, depth: int) -> IdentityCheck:
    return _sweep(
        "lemma_digit",
        range(1, depth + 1),
        lambda m: _recovered_digit(ctx, m) == ctx.digit(m),
    )


def _check_digit_formula(ctx: OperatorContext, depth: int) -> IdentityCheck:
    a, b = ctx.x.numerator, ctx.x.denominator
    return _sweep(
        "digit_formula",
        range(0, depth + 1),
        lambda m: int_part(_digit_formula_z(a, b, ctx, m)) == ctx.digit(m + 1),
    )


def _check_digit_formula_sufficiency(ctx: OperatorContext, depth: int) -> IdentityCheck:
    a, b = ctx.x.numerator, ctx.x.denominator

    def holds(m: int) -> bool:
        digit = int_part(_digit_formula_z(a, b, ctx, m))
        q = ctx.q(m + 1)
        value = (digit + q * ctx.delta(m) + ctx.tail(m + 1)) / ctx.product(m + 1)
        return value == ctx.x

    return _sweep("digit_formula_sufficiency", range(0, depth + 1), holds)


def _check_shift_oracle(ctx: OperatorContext, depth: int) -> IdentityCheck:
    return _sweep(
        "shift_oracle",
        range(0, depth + 1),
        lambda n: shift_series(ctx, n, depth) == _shift_closed_form(ctx, n),
    )


def _check_gshift_oracle(ctx: OperatorContext, depth: int) -> IdentityCheck:
    return _sweep(
        "gshift_oracle",
        range(1, depth + 1),
        lambda m: generalized_shift_series(ctx, m, depth) == generalized_shift_eq2(ctx, m),
    )


def _check_convergence(ctx: OperatorContext, depth: int) -> IdentityCheck:
    def holds(n: int) -> bool:
        gap = ctx.x - ctx.theta(n)
        return gap == ctx.tail(n) / ctx.product(n) and 0 <= gap < Fraction(1, ctx.product(n))

    return _sweep("convergence", range(0, depth + 1), holds)


def _check_range(ctx: OperatorContext, depth: int) -> IdentityCheck:
    def holds(k: int) -> bool:
        in_range = 0 <= _shift_closed_form(ctx, k) < 1
        if k >= 1:
            in_range = in_range and 0 <= generalized_shift_eq2(ctx, k) < 1
        return in_range

    return _sweep("range", range(0, depth + 1), holds)


# Name -> check over indices up to a depth. Order is the reporting order.
IDENTITY_CHECKS: Dict[str, Callable[[OperatorContext, int], IdentityCheck]] = {
    "eq2_cross": _check_eq2_cross,
    "lemma_recurrence": _check_lemma_recurrence,
    "lemma_digit": _check_lemma_digit,
    "digit_formula": _check_digit_formula,
    "digit_formula_sufficiency": _check_digit_formula_sufficiency,
    "shift_oracle": _check_shift_oracle,
    "gshift_oracle": _check_gshift_oracle,
    "convergence": _check_convergence,
    "range": _check_range,
}


def identity_report(ctx: OperatorContext, depth: int) -> List[IdentityCheck]:
    """Check every operator identity for indices up to ``depth``, without asserts."""
    _check_index("depth", depth, 0)
    if ctx.dual_form:
        raise DualFormError("Identities are checked on canonical (greedy) representations only")
    return [check(ctx, depth) for check in IDENTITY_CHECKS.values()]

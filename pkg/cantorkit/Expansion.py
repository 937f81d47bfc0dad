"""
:module Expansion: Conversion between rationals and Cantor digit strings.

The canonical representation is the greedy expansion

    eps_k = [q_k * r_{k-1}],   r_0 = x,   r_k = q_k * r_{k-1} - eps_k,

where r_k is exactly sigma^k(x). The tail of (q_k - 1) digits is never produced
by the greedy rule; it only appears as the dual form of a Q-rational number.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Tuple

import json_tricks as json

from cantorkit.BaseSequence import BaseSequence
from cantorkit.Exceptions import DigitStringError, DualFormError, RationalSyntaxError
from cantorkit.Numeric import (
    RationalLike,
    check_unit_interval,
    format_rational,
    int_part,
    parse_rational,
)

logger = logging.getLogger(__name__)


class TailKind(Enum):
    REMAINDER = "remainder"
    ZEROS = "zeros"
    MAX = "max"


@dataclass(frozen=True)
class Tail:
    """What follows the explicit digits of a DigitString."""

    kind: TailKind
    remainder: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind is TailKind.REMAINDER:
            if not isinstance(self.remainder, Fraction):
                raise TypeError("An exact remainder tail needs a Fraction remainder")
            if not 0 <= self.remainder < 1:
                raise DigitStringError("The tail remainder must lie in [0,1)")
        elif self.remainder is not None:
            raise ValueError(f"A {self.kind.value} tail carries no remainder")

    @classmethod
    def exact(cls, remainder: Fraction) -> "Tail":
        return cls(TailKind.REMAINDER, remainder)

    @classmethod
    def zeros(cls) -> "Tail":
        return cls(TailKind.ZEROS)

    @classmethod
    def all_max(cls) -> "Tail":
        return cls(TailKind.MAX)

    @property
    def is_zero(self) -> bool:
        """True for an all-zeros tail or an exact remainder of 0."""
        return self.kind is TailKind.ZEROS or (
            self.kind is TailKind.REMAINDER and self.remainder == 0
        )


@dataclass(frozen=True)
class DigitString:
    """A finite prefix of Cantor digits over Q plus a tail descriptor."""

    Q: BaseSequence
    digits: Tuple[int, ...]
    tail: Tail

    def __post_init__(self):
        if not isinstance(self.Q, BaseSequence):
            raise TypeError(f"DigitString: `Q` is expected to be a BaseSequence, not {type(self.Q)}")
        object.__setattr__(self, "digits", tuple(self.digits))
        for k, digit in enumerate(self.digits, start=1):
            if not 0 <= digit <= self.Q.q_at(k) - 1:
                raise DigitStringError(
                    f"digit {digit} at position {k} is outside [0, {self.Q.q_at(k) - 1}]"
                )
        if self.tail.kind is TailKind.MAX and len(self.digits) == 0:
            raise DigitStringError("An all-max tail needs at least one explicit digit")

    def __len__(self) -> int:
        return len(self.digits)

    def digit(self, k: int) -> int:
        """eps_k, extending past the explicit digits by the tail rule."""
        if k < 1:
            raise ValueError(f"Digit index starts at 1, got {k}")
        if k <= len(self.digits):
            return self.digits[k - 1]
        if self.tail.is_zero:
            return 0
        if self.tail.kind is TailKind.MAX:
            return self.Q.q_at(k) - 1
        raise DigitStringError(
            f"digit {k} lies beyond the {len(self.digits)} explicit digits of an exact-remainder tail"
        )

    @property
    def last_nonzero_index(self) -> int:
        """Index of the last nonzero explicit digit, 0 if there is none."""
        for k in range(len(self.digits), 0, -1):
            if self.digits[k - 1] != 0:
                return k
        return 0


@dataclass(frozen=True)
class PrefixState:
    """The bundle (k, P_k, delta_k, theta_k, sigma^k(x)) of a greedy expansion at depth k."""

    k: int
    product: int
    delta: int
    tail: Fraction

    def __post_init__(self):
        assert 0 <= self.tail < 1, f"sigma^{self.k}(x) = {self.tail} left [0,1)"

    @classmethod
    def initial(cls, x: Fraction) -> "PrefixState":
        return cls(0, 1, 0, x)

    @property
    def theta(self) -> Fraction:
        """The partial sum theta_k = delta_k / P_k."""
        return Fraction(self.delta, self.product)

    def advance(self, q: int) -> Tuple[int, "PrefixState"]:
        """One greedy step with the next base q = q_{k+1}; returns (eps_{k+1}, next state)."""
        scaled = q * self.tail
        digit = int_part(scaled)
        return digit, PrefixState(
            self.k + 1, self.product * q, self.delta * q + digit, scaled - digit
        )


@dataclass(frozen=True)
class Cylinder:
    """The cylinder of rank m with base (c_1, ..., c_m)."""

    Q: BaseSequence
    base: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        for i, c in enumerate(self.base, start=1):
            if not 0 <= c <= self.Q.q_at(i) - 1:
                raise DigitStringError(
                    f"cylinder digit {c} at position {i} is outside [0, {self.Q.q_at(i) - 1}]"
                )

    @property
    def rank(self) -> int:
        return len(self.base)

    @property
    def delta(self) -> int:
        return _delta_of(self.Q, self.base)


@dataclass(frozen=True)
class QRationality:
    """Outcome of :func:`classify_q_rational`: ``m`` is None when not terminated within ``horizon``."""

    m: Optional[int]
    horizon: int

    @property
    def is_q_rational(self) -> bool:
        return self.m is not None


def _delta_of(Q: BaseSequence, digits) -> int:
    delta = 0
    for k, digit in enumerate(digits, start=1):
        delta = delta * Q.q_at(k) + digit
    return delta


def iter_prefix_states(x: RationalLike, Q: BaseSequence) -> Iterator[Tuple[int, PrefixState]]:
    """Yield (eps_k, state_k) for k = 1, 2, ... of the greedy expansion of x."""
    state = PrefixState.initial(check_unit_interval(x))
    while True:
        digit, state = state.advance(Q.q_at(state.k + 1))
        yield digit, state


def expand_greedy(x: RationalLike, Q: BaseSequence, n: int) -> Tuple[DigitString, PrefixState]:
    """
    Greedy expansion of x to depth n.

    :param x: A rational in [0,1).
    :param Q: The base sequence.
    :param n: Number of digits to produce.
    :return: The digit string with its exact remainder tail sigma^n(x), and the depth-n state.
    :raises OutOfDomainError: if x is outside [0,1).
    """
    if n < 0:
        raise ValueError(f"expand_greedy: depth must be non-negative, got {n}")
    x = check_unit_interval(x)
    state = PrefixState.initial(x)
    digits = []
    for digit, state in itertools.islice(iter_prefix_states(x, Q), n):
        digits.append(digit)
    return DigitString(Q, tuple(digits), Tail.exact(state.tail)), state


def evaluate(d: DigitString, upto: Optional[int] = None) -> Fraction:
    """
    The partial sum theta_upto = sum_{k <= upto} eps_k / P_k.

    Digits beyond the explicit ones follow the tail (zeros, or q_k - 1 for an
    all-max tail). ``upto`` defaults to the number of explicit digits.

    :raises DigitStringError: if ``upto`` runs past a nonzero exact-remainder tail.
    """
    if upto is None:
        upto = len(d)
    if upto < 0:
        raise ValueError(f"evaluate: depth must be non-negative, got {upto}")
    delta = 0
    for k in range(1, upto + 1):
        delta = delta * d.Q.q_at(k) + d.digit(k)
    return Fraction(delta, d.Q.product_prefix(upto))


def tail_value(d: DigitString) -> Fraction:
    """sigma^n(x) implied by the tail of d, n being the number of explicit digits."""
    if d.tail.kind is TailKind.REMAINDER:
        return d.tail.remainder
    if d.tail.kind is TailKind.MAX:
        # sum_{k>n} (q_k - 1)/(q_{n+1}...q_k) telescopes to 1
        return Fraction(1)
    return Fraction(0)


def limit_value(d: DigitString) -> Fraction:
    """The exact value of the infinite expansion described by d."""
    n = len(d)
    return evaluate(d, n) + tail_value(d) / d.Q.product_prefix(n)


def shift_digits(d: DigitString, n: int) -> DigitString:
    """Drop the first n explicit digits; the result lives over (q_{n+1}, q_{n+2}, ...)."""
    if not 0 <= n <= len(d):
        raise ValueError(f"shift_digits: can drop 0..{len(d)} digits, not {n}")
    rest = d.digits[n:]
    tail = d.tail
    if tail.kind is TailKind.MAX and len(rest) == 0:
        # an all-max tail with no explicit digit left is the number 1
        raise DualFormError("shifting away every explicit digit of an all-max form leaves x = 1")
    return DigitString(d.Q.shifted(n), rest, tail)


def classify_q_rational(x: RationalLike, Q: BaseSequence, horizon: int) -> QRationality:
    """
    Least m <= horizon with x = delta_m / P_m, i.e. the greedy tail hits 0.

    Classification is only semi-decidable for arbitrary Q, so the horizon is
    always supplied by the caller.
    """
    if horizon < 0:
        raise ValueError(f"classify_q_rational: horizon must be non-negative, got {horizon}")
    x = check_unit_interval(x)
    if x == 0:
        return QRationality(0, horizon)
    for digit, state in itertools.islice(iter_prefix_states(x, Q), horizon):
        if state.tail == 0:
            assert (x * state.product).denominator == 1
            return QRationality(state.k, horizon)
    return QRationality(None, horizon)


def dual_representation(d: DigitString) -> DigitString:
    """
    The tail-of-(q_k - 1) form of a terminating expansion.

    (eps_1, ..., eps_m, 0, 0, ...) becomes (eps_1, ..., eps_{m-1}, eps_m - 1)
    followed by q_{m+1} - 1, q_{m+2} - 1, ...

    :raises DualFormError: if d does not terminate, or denotes 0.
    """
    if not d.tail.is_zero:
        raise DualFormError("Only a terminating digit string (zero tail) has a dual form")
    m = d.last_nonzero_index
    if m == 0:
        raise DualFormError("0 has no dual form: there is no digit to decrement")
    digits = d.digits[: m - 1] + (d.digits[m - 1] - 1,)
    return DigitString(d.Q, digits, Tail.all_max())


def cylinder_interval(c: Cylinder) -> Tuple[Fraction, Fraction]:
    """[delta_m / P_m, (delta_m + 1) / P_m], an interval of width 1/P_m."""
    product = c.Q.product_prefix(c.rank)
    delta = c.delta
    return Fraction(delta, product), Fraction(delta + 1, product)


def cylinder_contains(c: Cylinder, x: RationalLike) -> bool:
    """
    Whether the first m greedy digits of x equal the cylinder base.

    Membership is half-open, [delta_m / P_m, (delta_m + 1) / P_m), so that it is a
    function of the canonical digits.
    """
    x = check_unit_interval(x)
    lo, hi = cylinder_interval(c)
    return lo <= x < hi


def cylinders(Q: BaseSequence, m: int) -> Iterator[Cylinder]:
    """All P_m cylinders of rank m, in increasing order of their left endpoint."""
    ranges = [range(Q.q_at(k)) for k in range(1, m + 1)]
    for base in itertools.product(*ranges):
        yield Cylinder(Q, base)


_TAIL_MARKERS = {"…0": TailKind.ZEROS, "...0": TailKind.ZEROS, "…max": TailKind.MAX, "...max": TailKind.MAX}
_REMAINDER_MARKERS = ("…r=", "...r=")
_DIGIT = re.compile(r"^\d+$", re.ASCII)


def _remainder_tail(item: str) -> Tail:
    marker = next(marker for marker in _REMAINDER_MARKERS if item.startswith(marker))
    try:
        remainder = parse_rational(item[len(marker) :])
    except RationalSyntaxError as error:
        raise DigitStringError(f"Bad tail remainder in '{item}': {error}") from error
    return Tail.exact(remainder)


def parse_digit_string(text: str, Q: BaseSequence) -> DigitString:
    """
    Parse the text form, e.g. ``"0,2,…0"``, ``"4,…max"`` or ``"0,1,…r=1/3"``
    (``...`` accepted for ``…``).

    Without a tail marker the digits are followed by zeros. A leading ``{`` selects
    the JSON form instead.
    """
    text = text.strip()
    if text.startswith("{"):
        return digit_string_from_json(text, Q)
    if text == "":
        return DigitString(Q, (), Tail.zeros())
    items = [item.strip() for item in text.split(",")]
    tail = Tail.zeros()
    if items[-1] in _TAIL_MARKERS:
        tail = Tail(_TAIL_MARKERS[items.pop()])
    elif items[-1].startswith(_REMAINDER_MARKERS):
        tail = _remainder_tail(items.pop())
    digits = []
    for item in items:
        if not _DIGIT.match(item):
            raise DigitStringError(f"'{item}' is not a digit")
        digits.append(int(item))
    return DigitString(Q, tuple(digits), tail)


def format_digit_string(d: DigitString) -> str:
    """The text form; an exact remainder tail is written as ``…r=a/b``."""
    items = [str(digit) for digit in d.digits]
    if d.tail.kind is TailKind.ZEROS:
        items.append("…0")
    elif d.tail.kind is TailKind.MAX:
        items.append("…max")
    else:
        items.append(f"…r={format_rational(d.tail.remainder)}")
    return ",".join(items)


def digit_string_to_json(d: DigitString) -> dict:
    """The JSON form ``{"digits": [...], "tail": "zeros" | "max" | {"remainder": "a/b"}}``."""
    if d.tail.kind is TailKind.REMAINDER:
        tail = {"remainder": format_rational(d.tail.remainder)}
    else:
        tail = d.tail.kind.value
    return {"digits": list(d.digits), "tail": tail}


def digit_string_from_json(payload, Q: BaseSequence) -> DigitString:
    """Inverse of :func:`digit_string_to_json`; accepts a dict or its JSON text."""
    if isinstance(payload, str):
        try:
            payload = json.loads(payload)
        except ValueError as error:
            raise DigitStringError(f"Malformed digit string JSON: {error}") from None
    if not isinstance(payload, dict) or "digits" not in payload or "tail" not in payload:
        raise DigitStringError("Digit string JSON needs the keys 'digits' and 'tail'")
    digits = payload["digits"]
    if not isinstance(digits, list) or not all(
        isinstance(digit, int) and not isinstance(digit, bool) for digit in digits
    ):
        raise DigitStringError("'digits' must be a list of integers")
    tail = payload["tail"]
    if tail == "zeros":
        tail = Tail.zeros()
    elif tail == "max":
        tail = Tail.all_max()
    elif isinstance(tail, dict) and "remainder" in tail:
        tail = Tail.exact(parse_rational(str(tail["remainder"])))
    else:
        raise DigitStringError(f"Unknown tail descriptor {tail!r}")
    return DigitString(Q, tuple(digits), tail)

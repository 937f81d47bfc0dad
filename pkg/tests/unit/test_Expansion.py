import random
from fractions import Fraction

import pytest

from cantorkit.BaseSequence import BaseSequence
from cantorkit.Exceptions import DigitStringError, DualFormError, OutOfDomainError
from cantorkit.Expansion import (
    Cylinder,
    DigitString,
    PrefixState,
    Tail,
    TailKind,
    classify_q_rational,
    cylinder_contains,
    cylinder_interval,
    cylinders,
    digit_string_from_json,
    digit_string_to_json,
    dual_representation,
    evaluate,
    expand_greedy,
    format_digit_string,
    iter_prefix_states,
    limit_value,
    parse_digit_string,
    shift_digits,
)

SPECS = ["const:2", "const:10", "cycle:2,3", "rule:succ", "list:7,5;then;cycle:3,2,4"]


def random_fraction(rng, max_denominator):
    b = rng.randint(1, max_denominator)
    return Fraction(rng.randrange(b), b)


# Tail and digit string section
def test_tail_validation():
    assert Tail.exact(Fraction(0)).is_zero
    assert Tail.zeros().is_zero
    assert not Tail.all_max().is_zero
    assert not Tail.exact(Fraction(1, 2)).is_zero
    with pytest.raises(DigitStringError):
        Tail.exact(Fraction(1))
    with pytest.raises(TypeError):
        Tail.exact(0.5)
    with pytest.raises(ValueError):
        Tail(TailKind.ZEROS, Fraction(0))


def test_digit_string_bounds():
    Q = BaseSequence("cycle:2,3")
    DigitString(Q, (1, 2), Tail.zeros())
    with pytest.raises(DigitStringError):
        DigitString(Q, (2,), Tail.zeros())
    with pytest.raises(DigitStringError):
        DigitString(Q, (0, -1), Tail.zeros())
    with pytest.raises(DigitStringError):
        DigitString(Q, (), Tail.all_max())
    with pytest.raises(TypeError):
        DigitString("cycle:2,3", (1,), Tail.zeros())


def test_digit_string_digit_follows_tail():
    Q = BaseSequence("rule:succ")
    zeros = DigitString(Q, (1,), Tail.zeros())
    assert [zeros.digit(k) for k in range(1, 4)] == [1, 0, 0]
    dual = DigitString(Q, (0, 1), Tail.all_max())
    assert [dual.digit(k) for k in range(1, 6)] == [0, 1, 3, 4, 5]
    exact = DigitString(Q, (0,), Tail.exact(Fraction(2, 3)))
    with pytest.raises(DigitStringError):
        exact.digit(2)
    with pytest.raises(ValueError):
        exact.digit(0)


def test_last_nonzero_index():
    Q = BaseSequence("const:10")
    assert DigitString(Q, (0, 3, 0, 0), Tail.zeros()).last_nonzero_index == 2
    assert DigitString(Q, (0, 0), Tail.zeros()).last_nonzero_index == 0


def test_prefix_state():
    state = PrefixState.initial(Fraction(1, 3))
    digit, state = state.advance(2)
    assert digit == 0
    digit, state = state.advance(3)
    assert digit == 2
    assert (state.k, state.product, state.delta, state.tail) == (2, 6, 2, 0)
    assert state.theta == Fraction(1, 3)


# Greedy expansion section
@pytest.mark.parametrize(
    "x, spec, n, digits",
    [
        (Fraction(1, 3), "rule:succ", 3, (0, 2, 0)),
        (Fraction(0), "const:7", 5, (0, 0, 0, 0, 0)),
        (Fraction(5, 6), "cycle:2,3", 2, (1, 2)),
    ],
)
def test_expand_greedy_terminating(x, spec, n, digits):
    d, state = expand_greedy(x, BaseSequence(spec), n)
    assert d.digits == digits
    assert d.tail == Tail.exact(Fraction(0))
    assert state.k == n
    assert state.theta == x


def test_expand_greedy_periodic():
    d, state = expand_greedy(Fraction(1, 3), BaseSequence("const:2"), 6)
    assert d.digits == (0, 1, 0, 1, 0, 1)
    assert d.tail.remainder == Fraction(1, 3)
    assert state.delta == 0b010101
    assert state.product == 64


def test_expand_greedy_depth_zero():
    d, state = expand_greedy("2/5", BaseSequence("const:2"), 0)
    assert d.digits == ()
    assert d.tail.remainder == Fraction(2, 5)
    assert state == PrefixState.initial(Fraction(2, 5))


@pytest.mark.parametrize("x", [Fraction(1), Fraction(3, 2), Fraction(-1, 7)])
def test_expand_greedy_out_of_domain(x):
    with pytest.raises(OutOfDomainError):
        expand_greedy(x, BaseSequence("const:2"), 3)


def test_expand_greedy_negative_depth():
    with pytest.raises(ValueError):
        expand_greedy(Fraction(1, 2), BaseSequence("const:2"), -1)


def test_iter_prefix_states_matches_expansion():
    Q = BaseSequence("rule:succ")
    states = iter_prefix_states(Fraction(5, 7), Q)
    d, final = expand_greedy(Fraction(5, 7), Q, 8)
    for k in range(1, 9):
        digit, state = next(states)
        assert digit == d.digit(k)
    assert state == final


def test_greedy_digit_bound_and_convergence():
    rng = random.Random(20240601)
    for _ in range(200):
        Q = BaseSequence(rng.choice(SPECS))
        x = random_fraction(rng, 1000)
        n = rng.randint(0, 40)
        d, state = expand_greedy(x, Q, n)
        for k in range(1, n + 1):
            assert 0 <= d.digit(k) <= Q.q_at(k) - 1
        gap = x - evaluate(d, n)
        assert gap == d.tail.remainder / Q.product_prefix(n)
        assert 0 <= gap < Fraction(1, Q.product_prefix(n))
        assert limit_value(d) == x
        assert d.tail != Tail.all_max()


# Evaluation section
def test_evaluate():
    d = DigitString(BaseSequence("rule:succ"), (0, 2), Tail.zeros())
    assert evaluate(d, 2) == Fraction(1, 3)
    assert evaluate(d) == Fraction(1, 3)
    d = DigitString(BaseSequence("cycle:2,3"), (1, 2), Tail.zeros())
    assert evaluate(d, 1) == Fraction(1, 2)
    assert evaluate(d, 0) == 0


def test_evaluate_zero_tail_beyond_explicit_digits():
    d = DigitString(BaseSequence("cycle:2,3"), (1, 2), Tail.zeros())
    for upto in range(2, 10):
        assert evaluate(d, upto) == Fraction(5, 6)


def test_evaluate_max_tail():
    d = DigitString(BaseSequence("const:10"), (4,), Tail.all_max())
    assert evaluate(d, 3) == Fraction(499, 1000)
    assert limit_value(d) == Fraction(1, 2)


def test_evaluate_beyond_exact_remainder():
    d, _ = expand_greedy(Fraction(1, 3), BaseSequence("const:2"), 2)
    with pytest.raises(DigitStringError):
        evaluate(d, 3)
    with pytest.raises(ValueError):
        evaluate(d, -1)


def test_evaluate_beyond_zero_remainder():
    d, _ = expand_greedy(Fraction(1, 4), BaseSequence("const:2"), 2)
    assert evaluate(d, 10) == Fraction(1, 4)


def test_shift_digits():
    Q = BaseSequence("cycle:2,3")
    d = DigitString(Q, (1, 2), Tail.zeros())
    shifted = shift_digits(d, 1)
    assert shifted.digits == (2,)
    assert shifted.Q == Q.shifted(1)
    assert limit_value(shifted) == Fraction(2, 3)
    with pytest.raises(ValueError):
        shift_digits(d, 3)
    dual = DigitString(Q, (1,), Tail.all_max())
    assert limit_value(shift_digits(dual, 0)) == 1
    with pytest.raises(DualFormError):
        shift_digits(dual, 1)


# Q-rationality section
def test_classify_q_rational():
    assert classify_q_rational(Fraction(1, 3), BaseSequence("rule:succ"), 10).m == 2
    outcome = classify_q_rational(Fraction(1, 3), BaseSequence("const:2"), 10)
    assert not outcome.is_q_rational
    assert outcome.horizon == 10
    assert classify_q_rational(Fraction(0), BaseSequence("cycle:2,3"), 0).m == 0


def test_classify_q_rational_horizon_too_short():
    assert classify_q_rational(Fraction(1, 8), BaseSequence("const:2"), 2).m is None
    assert classify_q_rational(Fraction(1, 8), BaseSequence("const:2"), 3).m == 3


def test_classify_q_rational_agrees_with_expansion():
    rng = random.Random(7)
    for _ in range(100):
        Q = BaseSequence(rng.choice(SPECS))
        x = random_fraction(rng, 60)
        outcome = classify_q_rational(x, Q, 20)
        if outcome.is_q_rational and outcome.m > 0:
            d, state = expand_greedy(x, Q, outcome.m)
            assert d.tail.remainder == 0
            assert x == Fraction(state.delta, state.product)


# Dual representation section
def test_dual_representation_decimal():
    d = DigitString(BaseSequence("const:10"), (5,), Tail.zeros())
    dual = dual_representation(d)
    assert dual.digits == (4,)
    assert dual.tail.kind is TailKind.MAX
    assert [dual.digit(k) for k in range(1, 5)] == [4, 9, 9, 9]


def test_dual_representation_factorial():
    Q = BaseSequence("rule:succ")
    d = DigitString(Q, (0, 2), Tail.zeros())
    dual = dual_representation(d)
    assert dual.digits == (0, 1)
    assert limit_value(dual) == limit_value(d) == Fraction(1, 3)


def test_dual_representation_trailing_zeros():
    Q = BaseSequence("const:10")
    dual = dual_representation(DigitString(Q, (2, 5, 0, 0), Tail.zeros()))
    assert dual.digits == (2, 4)


def test_dual_representation_of_greedy_output():
    d, _ = expand_greedy(Fraction(5, 6), BaseSequence("cycle:2,3"), 2)
    assert dual_representation(d).digits == (1, 1)


@pytest.mark.parametrize(
    "d",
    [
        DigitString(BaseSequence("const:10"), (0, 0), Tail.zeros()),
        DigitString(BaseSequence("const:10"), (), Tail.zeros()),
        DigitString(BaseSequence("const:2"), (0,), Tail.exact(Fraction(1, 3))),
        DigitString(BaseSequence("const:2"), (1,), Tail.all_max()),
    ],
)
def test_dual_representation_rejects(d):
    with pytest.raises(DualFormError):
        dual_representation(d)


def test_dual_equivalence_at_finite_depth():
    rng = random.Random(11)
    for _ in range(50):
        Q = BaseSequence(rng.choice(SPECS))
        m = rng.randint(1, 8)
        digits = [rng.randrange(Q.q_at(k)) for k in range(1, m)]
        digits.append(rng.randint(1, Q.q_at(m) - 1))
        d = DigitString(Q, digits, Tail.zeros())
        dual = dual_representation(d)
        for n in range(m, m + 10):
            assert evaluate(dual, n) == evaluate(d, m) - Fraction(1, Q.product_prefix(n))


# Cylinder section
@pytest.mark.parametrize(
    "spec, base, interval",
    [
        ("const:2", (1,), (Fraction(1, 2), Fraction(1))),
        ("rule:succ", (0, 2), (Fraction(1, 3), Fraction(1, 2))),
        ("cycle:2,3", (), (Fraction(0), Fraction(1))),
    ],
)
def test_cylinder_interval(spec, base, interval):
    c = Cylinder(BaseSequence(spec), base)
    assert cylinder_interval(c) == interval
    lo, hi = interval
    assert hi - lo == Fraction(1, c.Q.product_prefix(c.rank))


def test_cylinder_contains():
    c = Cylinder(BaseSequence("const:2"), (1,))
    assert cylinder_contains(c, Fraction(3, 4))
    assert cylinder_contains(c, Fraction(1, 2))
    assert not cylinder_contains(c, Fraction(1, 4))
    with pytest.raises(OutOfDomainError):
        cylinder_contains(c, Fraction(1))


def test_cylinder_bounds():
    with pytest.raises(DigitStringError):
        Cylinder(BaseSequence("cycle:2,3"), (0, 3))


def test_cylinder_partition():
    Q = BaseSequence("cycle:2,3")
    rank = 3
    tiles = list(cylinders(Q, rank))
    assert len(tiles) == Q.product_prefix(rank)
    intervals = [cylinder_interval(c) for c in tiles]
    assert intervals[0][0] == 0
    assert intervals[-1][1] == 1
    for (_, hi), (lo, _) in zip(intervals, intervals[1:]):
        assert hi == lo
    for numerator in range(60):
        x = Fraction(numerator, 60)
        members = [c for c in tiles if cylinder_contains(c, x)]
        assert len(members) == 1
        d, _ = expand_greedy(x, Q, rank)
        assert members[0].base == d.digits


# Text and JSON forms section
def test_parse_digit_string():
    Q = BaseSequence("rule:succ")
    d = parse_digit_string("0,2,…0", Q)
    assert d.digits == (0, 2)
    assert d.tail == Tail.zeros()
    assert parse_digit_string("0, 2", Q) == d
    dual = parse_digit_string("4,...max", BaseSequence("const:10"))
    assert dual.tail.kind is TailKind.MAX
    assert parse_digit_string("", Q).digits == ()


@pytest.mark.parametrize("text", ["0,a", "5", "…max", "1,,0", "-1"])
def test_parse_digit_string_rejects(text):
    with pytest.raises(DigitStringError):
        parse_digit_string(text, BaseSequence("const:2"))


def test_format_digit_string():
    d, _ = expand_greedy(Fraction(1, 3), BaseSequence("const:2"), 2)
    assert format_digit_string(d) == "0,1,…r=1/3"
    Q = BaseSequence("rule:succ")
    assert format_digit_string(DigitString(Q, (0, 2), Tail.zeros())) == "0,2,…0"
    assert format_digit_string(DigitString(Q, (0, 1), Tail.all_max())) == "0,1,…max"


@pytest.mark.parametrize(
    "digits, tail",
    [
        ((0, 1), Tail.exact(Fraction(1, 3))),
        ((0, 1), Tail.exact(Fraction(0))),
        ((0, 2), Tail.zeros()),
        ((0, 1), Tail.all_max()),
    ],
)
def test_text_form_reads_back(digits, tail):
    Q = BaseSequence("rule:succ")
    d = DigitString(Q, digits, tail)
    assert parse_digit_string(format_digit_string(d), Q) == d


def test_text_form_reads_back_greedy_remainder():
    Q = BaseSequence("const:2")
    d, _ = expand_greedy(Fraction(1, 3), Q, 2)
    assert parse_digit_string(format_digit_string(d), Q) == d
    assert parse_digit_string("0,1,...r=1/3", Q) == d


@pytest.mark.parametrize("text", ["0,…r=x", "0,…r=1/0", "0,…r=3/2", "0,…r=", "0,…r=٣/٤"])
def test_parse_digit_string_rejects_bad_remainder(text):
    with pytest.raises(DigitStringError):
        parse_digit_string(text, BaseSequence("const:2"))


def test_digit_string_json():
    Q = BaseSequence("const:2")
    d, _ = expand_greedy(Fraction(1, 3), Q, 2)
    payload = digit_string_to_json(d)
    assert payload == {"digits": [0, 1], "tail": {"remainder": "1/3"}}
    assert digit_string_from_json(payload, Q) == d
    dual = digit_string_from_json('{"digits": [1], "tail": "max"}', Q)
    assert dual.tail.kind is TailKind.MAX
    assert parse_digit_string('{"digits": [1, 0], "tail": "zeros"}', Q).digits == (1, 0)


@pytest.mark.parametrize(
    "payload",
    [
        "{not json",
        '{"digits": [1]}',
        '{"digits": [true], "tail": "zeros"}',
        '{"digits": [1], "tail": "ones"}',
        '{"digits": "1", "tail": "zeros"}',
    ],
)
def test_digit_string_json_rejects(payload):
    with pytest.raises(DigitStringError):
        digit_string_from_json(payload, BaseSequence("const:2"))

import math
import random
import unittest
from fractions import Fraction

import pytest

from cantorkit.BaseSequence import BaseSequence
from cantorkit.Exceptions import CantorDomainError, OutOfDomainError
from cantorkit.Operators import OperatorContext, generalized_shift
from cantorkit.Rationality import (
    CollisionWitness,
    TraceEntry,
    check_round_trip,
    distinct_trace_values,
    find_collision,
    fractional_trace,
    rationality_certificate,
    reconstruct,
    sweep_certificates,
)

SPECS = ["const:2", "const:10", "cycle:2,3", "rule:succ"]


def trace_of(values):
    return [TraceEntry(k, Fraction(value), 0) for k, value in enumerate(values)]


class Test_FractionalTrace(unittest.TestCase):
    def test_periodic_trace(self):
        trace = fractional_trace(Fraction(1, 3), BaseSequence("const:2"), 3)
        self.assertEqual([entry.k for entry in trace], [0, 1, 2, 3])
        self.assertEqual(
            [entry.value for entry in trace],
            [Fraction(1, 3), Fraction(2, 3), Fraction(1, 3), Fraction(2, 3)],
        )
        self.assertEqual([entry.integer_component for entry in trace], [0, 0, 0, 1])

    def test_zero_trace(self):
        trace = fractional_trace(Fraction(0), BaseSequence("rule:succ"), 6)
        self.assertTrue(all(entry.value == 0 for entry in trace))
        self.assertTrue(all(entry.integer_component == 0 for entry in trace))

    def test_terminating_trace(self):
        trace = fractional_trace(Fraction(1, 3), BaseSequence("rule:succ"), 3)
        self.assertEqual(
            [entry.value for entry in trace], [Fraction(1, 3), Fraction(2, 3), 0, 0]
        )

    def test_trace_identity(self):
        for spec in SPECS:
            Q = BaseSequence(spec)
            ctx = OperatorContext(Fraction(13, 29), Q)
            trace = fractional_trace(ctx.x, Q, 25, ctx)
            for entry in trace[1:]:
                k = entry.k
                scaled = ctx.product(k - 1) * generalized_shift(ctx, k)
                self.assertEqual(scaled, entry.integer_component + entry.value)
                self.assertEqual(entry.integer_component, ctx.delta(k - 1))
                self.assertEqual(entry.value, ctx.tail(k))

    def test_values_share_the_denominator(self):
        b = 37
        for spec in SPECS:
            for entry in fractional_trace(Fraction(10, b), BaseSequence(spec), 40):
                self.assertEqual(b % entry.value.denominator, 0)

    def test_invalid_arguments(self):
        Q = BaseSequence("const:2")
        with self.assertRaises(ValueError):
            fractional_trace(Fraction(1, 3), Q, -1)
        with self.assertRaises(OutOfDomainError):
            fractional_trace(Fraction(4, 3), Q, 2)
        with self.assertRaises(ValueError):
            fractional_trace(Fraction(1, 3), Q, 2, OperatorContext(Fraction(1, 5), Q))


# Collision section
def test_collision_witness_order():
    with pytest.raises(ValueError):
        CollisionWitness(2, 2)
    with pytest.raises(ValueError):
        CollisionWitness(3, 1)


def test_find_collision_prefers_positive_indices():
    trace = fractional_trace(Fraction(1, 3), BaseSequence("const:2"), 3)
    assert find_collision(trace) == CollisionWitness(1, 3)


def test_find_collision_of_zero():
    trace = fractional_trace(Fraction(0), BaseSequence("cycle:2,3"), 4)
    assert find_collision(trace) == CollisionWitness(1, 2)


def test_find_collision_lexicographic():
    trace = trace_of(["1/7", "1/2", "1/3", "1/3", "1/2"])
    assert find_collision(trace) == CollisionWitness(1, 4)


def test_find_collision_falls_back_to_entry_zero():
    trace = trace_of(["1/2", "1/3", "1/2"])
    assert find_collision(trace) == CollisionWitness(0, 2)


def test_find_collision_none():
    assert find_collision(trace_of(["0", "1/2", "1/3", "1/4"])) is None
    assert find_collision([]) is None


def test_distinct_trace_values():
    assert distinct_trace_values(trace_of(["0", "1/2", "0", "1/2"])) == 2


# Reconstruction section
def test_reconstruct_periodic():
    ctx = OperatorContext(Fraction(1, 3), BaseSequence("const:2"))
    assert reconstruct(ctx, CollisionWitness(1, 3)) == Fraction(1, 3)


def test_reconstruct_zero():
    ctx = OperatorContext(Fraction(0), BaseSequence("rule:succ"))
    assert reconstruct(ctx, CollisionWitness(1, 2)) == 0


def test_reconstruct_from_trace():
    Q = BaseSequence("cycle:2,3")
    ctx = OperatorContext(Fraction(2, 3), Q)
    witness = find_collision(fractional_trace(ctx.x, Q, 5, ctx))
    assert witness == CollisionWitness(2, 3)
    assert reconstruct(ctx, witness) == Fraction(2, 3)


def test_reconstruct_rejects_entry_zero():
    ctx = OperatorContext(Fraction(1, 2), BaseSequence("const:2"))
    with pytest.raises(CantorDomainError):
        reconstruct(ctx, CollisionWitness(0, 2))


def test_reconstruct_any_genuine_collision():
    Q = BaseSequence("cycle:2,3")
    ctx = OperatorContext(Fraction(4, 11), Q)
    trace = fractional_trace(ctx.x, Q, 30, ctx)
    for first in trace[1:]:
        for second in trace[first.k + 1 :]:
            if first.value == second.value:
                assert reconstruct(ctx, CollisionWitness(first.k, second.k)) == ctx.x


# Certificate section
@pytest.mark.parametrize(
    "a, b, spec, witness",
    [
        (1, 3, "const:2", CollisionWitness(1, 3)),
        (0, 1, "rule:succ", CollisionWitness(1, 2)),
        (1, 2, "const:10", CollisionWitness(1, 2)),
    ],
)
def test_rationality_certificate(a, b, spec, witness):
    assert rationality_certificate(a, b, BaseSequence(spec)) == witness


@pytest.mark.parametrize("a, b", [(2, 4), (1, 0), (1, -2)])
def test_rationality_certificate_rejects(a, b):
    with pytest.raises(CantorDomainError):
        rationality_certificate(a, b, BaseSequence("const:2"))


def test_rationality_certificate_outside_unit_interval():
    with pytest.raises(OutOfDomainError):
        rationality_certificate(1, 1, BaseSequence("const:2"))


def test_certificate_pigeonhole_and_round_trip():
    rng = random.Random(2718)
    for _ in range(150):
        b = rng.randint(1, 300)
        a = rng.randrange(b)
        if math.gcd(a, b) != 1:
            continue
        Q = BaseSequence(rng.choice(SPECS + ["list:3,7;then;rule:succ"]))
        ctx = OperatorContext(Fraction(a, b), Q)
        witness = rationality_certificate(a, b, Q, ctx)
        assert 1 <= witness.m1 < witness.m2 <= b + 1
        assert distinct_trace_values(fractional_trace(ctx.x, Q, b + 2, ctx)) <= b
        assert reconstruct(ctx, witness) == Fraction(a, b)


def test_check_round_trip():
    check = check_round_trip(OperatorContext(Fraction(5, 12), BaseSequence("rule:succ")))
    assert check.name == "theorem1_round_trip"
    assert check.passed
    assert check.first_failure is None


# Sweep section
def test_sweep_certificates():
    report = sweep_certificates(20, BaseSequence("cycle:2,3"))
    # sum of Euler's totient up to 20
    assert report.checked == 128
    assert report.failures == []
    assert report.pigeonhole_violations == []
    assert report.passed
    assert 2 <= report.max_witness_index <= 21


def test_sweep_certificates_rejects():
    with pytest.raises(ValueError):
        sweep_certificates(0, BaseSequence("const:2"))


if __name__ == "__main__":
    unittest.main()

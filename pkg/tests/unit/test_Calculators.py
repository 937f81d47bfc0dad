import unittest
from fractions import Fraction

import pytest

from cantorkit.BaseSequence import BaseSequence
from cantorkit.Calculators import (
    IDENTITIES,
    CylinderCalculator,
    DualCalculator,
    EvaluateCalculator,
    ExpandCalculator,
    GeneralizedShiftCalculator,
    IdentityCalculator,
    ShiftCalculator,
    SweepCalculator,
    TraceCalculator,
    read_q_spec,
)
from cantorkit.Data import SCHEMA, JSONFormat
from cantorkit.Exceptions import (
    BaseSpecSyntaxError,
    CantorDomainError,
    DigitStringError,
    DualFormError,
    OutOfDomainError,
)


def result(calculator_class, **parameters):
    calculator = calculator_class(calculator_class.command)
    calculator.set_parameters(parameters)
    calculator.backengine()
    return calculator.output[f"{calculator_class.command}_result"].get_data()


class Test_ExpandCalculator(unittest.TestCase):
    def test_periodic_expansion(self):
        data = result(ExpandCalculator, q="const:2", x=Fraction(1, 3), depth=6)
        self.assertEqual(data["schema"], SCHEMA)
        self.assertEqual(data["command"], "expand")
        self.assertEqual(data["q"], "const:2")
        self.assertEqual(data["x"], "1/3")
        self.assertEqual(data["digits"], [0, 1, 0, 1, 0, 1])
        self.assertEqual(data["tail"], "1/3")
        self.assertEqual(data["partial_sum"], "21/64")
        self.assertNotIn("q_rational", data)

    def test_default_depth(self):
        data = result(ExpandCalculator, q="const:10", x="1/7")
        self.assertEqual(data["depth"], 10)
        self.assertEqual(data["digits"], [1, 4, 2, 8, 5, 7, 1, 4, 2, 8])

    def test_q_rational_classification(self):
        data = result(ExpandCalculator, q="rule:succ", x="1/3", depth=3, horizon=10)
        self.assertEqual(data["digits"], [0, 2, 0])
        self.assertEqual(data["tail"], "0")
        self.assertEqual(data["q_rational"], {"horizon": 10, "m": 2})
        data = result(ExpandCalculator, q="const:2", x="1/3", horizon=10)
        self.assertEqual(data["q_rational"], {"horizon": 10, "m": None})

    def test_out_of_domain(self):
        with self.assertRaises(OutOfDomainError):
            result(ExpandCalculator, q="const:2", x=1)

    def test_missing_parameter(self):
        with self.assertRaises(RuntimeError):
            result(ExpandCalculator, q="const:2")

    def test_bad_q_spec(self):
        with self.assertRaises(BaseSpecSyntaxError):
            result(ExpandCalculator, q="const:1", x="1/2")

    def test_illegal_parameters(self):
        calculator = ExpandCalculator("expand")
        with self.assertRaises(ValueError):
            calculator.parameters["depth"] = -1
        with self.assertRaises(ValueError):
            calculator.parameters["format"] = "xml"

    def test_render(self):
        calculator = ExpandCalculator("expand")
        calculator.set_parameters(q="const:2", x=Fraction(1, 4), depth=3)
        calculator.backengine()
        text = calculator.render()
        self.assertIn("digits: 0,1,0\n", text)
        self.assertIn("approx: x=0.25≈", text)
        calculator.parameters["format"] = "json"
        self.assertEqual(
            JSONFormat.parse(calculator.render()),
            calculator.output.get_data(),
        )


class Test_EvaluateCalculator(unittest.TestCase):
    def test_terminating(self):
        data = result(EvaluateCalculator, q="rule:succ", base="0,2")
        self.assertEqual(data["base"], "0,2,…0")
        self.assertEqual(data["depth"], 2)
        self.assertEqual(data["partial_sum"], "1/3")
        self.assertEqual(data["value"], "1/3")

    def test_depth_beyond_zero_tail(self):
        data = result(EvaluateCalculator, q="rule:succ", base="0,2,…0", depth=5)
        self.assertEqual(data["partial_sum"], "1/3")

    def test_max_tail(self):
        data = result(EvaluateCalculator, q="const:10", base="4,…max", depth=3)
        self.assertEqual(data["partial_sum"], "499/1000")
        self.assertEqual(data["value"], "1/2")

    def test_json_base(self):
        data = result(
            EvaluateCalculator, q="const:2", base='{"digits": [0, 1], "tail": {"remainder": "1/3"}}'
        )
        self.assertEqual(data["partial_sum"], "1/4")
        self.assertEqual(data["value"], "1/3")

    def test_bad_digit(self):
        with self.assertRaises(DigitStringError):
            result(EvaluateCalculator, q="const:2", base="0,2")


class Test_ShiftCalculators(unittest.TestCase):
    def test_shift(self):
        data = result(ShiftCalculator, q="const:2", x="3/4")
        self.assertEqual(data["n"], 1)
        self.assertEqual(data["value"], "1/2")
        self.assertEqual(data["delta"], 1)

    def test_shift_zero_power(self):
        data = result(ShiftCalculator, q="cycle:2,3", x="5/9", n=0)
        self.assertEqual(data["value"], "5/9")
        self.assertEqual(data["delta"], 0)

    def test_generalized_shift(self):
        data = result(GeneralizedShiftCalculator, q="cycle:2,3", x="2/3", m=2)
        self.assertEqual(data["value"], "1/2")
        self.assertEqual(data["digit"], 1)
        self.assertEqual(data["next"], "2/3")

    def test_generalized_shift_index(self):
        calculator = GeneralizedShiftCalculator("gshift")
        with self.assertRaises(ValueError):
            calculator.parameters["m"] = 0


class Test_TraceCalculator(unittest.TestCase):
    def test_trace(self):
        data = result(TraceCalculator, q="const:2", x="1/3", horizon=4)
        self.assertEqual(
            [entry["value"] for entry in data["trace"]],
            ["1/3", "2/3", "1/3", "2/3", "1/3"],
        )
        self.assertEqual(data["trace"][0], {"k": 0, "value": "1/3", "integer": 0})
        self.assertEqual(
            data["collision"], {"m1": 1, "m2": 3, "value": "2/3", "reconstructed": "1/3"}
        )
        self.assertEqual(data["distinct"], 2)

    def test_no_collision(self):
        data = result(TraceCalculator, q="const:2", x="1/3", horizon=1)
        self.assertIsNone(data["collision"])
        self.assertEqual(data["distinct"], 2)

    def test_collision_with_entry_zero(self):
        # values 1/3, 2/3, 1/3 hold only the (0, 2) repeat
        data = result(TraceCalculator, q="const:2", x="1/3", horizon=2)
        self.assertEqual(data["collision"]["m1"], 0)
        self.assertIsNone(data["collision"]["reconstructed"])


class Test_CylinderCalculator(unittest.TestCase):
    def test_interval(self):
        data = result(CylinderCalculator, q="rule:succ", base="0,2")
        self.assertEqual(data["base"], [0, 2])
        self.assertEqual(data["rank"], 2)
        self.assertEqual(data["delta"], 2)
        self.assertEqual((data["lo"], data["hi"], data["width"]), ("1/3", "1/2", "1/6"))
        self.assertNotIn("contains", data)

    def test_membership(self):
        data = result(CylinderCalculator, q="const:2", base="1", x="1/2")
        self.assertTrue(data["contains"])
        data = result(CylinderCalculator, q="const:2", base="1", x="1/4")
        self.assertFalse(data["contains"])

    def test_rank_zero(self):
        data = result(CylinderCalculator, q="const:2", base="")
        self.assertEqual((data["lo"], data["hi"]), ("0", "1"))

    def test_tail_marker_rejected(self):
        with self.assertRaises(DigitStringError):
            result(CylinderCalculator, q="const:2", base="1,…max")


class Test_DualCalculator(unittest.TestCase):
    def test_dual(self):
        data = result(DualCalculator, q="const:10", base="5")
        self.assertEqual(data["base"], "5,…0")
        self.assertEqual(data["dual"], "4,…max")
        self.assertEqual(data["digits"], [4])
        self.assertEqual(data["tail"], "max")
        self.assertEqual(data["value"], "1/2")

    def test_zero_has_no_dual(self):
        with self.assertRaises(DualFormError):
            result(DualCalculator, q="const:10", base="0,0")


class Test_IdentityCalculator(unittest.TestCase):
    def test_every_identity_passes(self):
        for identity in IDENTITIES:
            data = result(IdentityCalculator, q="rule:succ", x="5/7", depth=10, identity=identity)
            self.assertEqual(data["name"], identity)
            self.assertTrue(data["passed"], identity)
            self.assertIsNone(data["first_failure"])

    def test_round_trip_counts_one(self):
        data = result(IdentityCalculator, q="const:2", x="1/3", identity="theorem1_round_trip")
        self.assertEqual(data["checked"], 1)
        self.assertEqual(data["depth"], 20)

    def test_unknown_identity(self):
        calculator = IdentityCalculator("verify")
        with self.assertRaises(ValueError):
            calculator.parameters["identity"] = "fermat"


class Test_SweepCalculator(unittest.TestCase):
    def test_sweep(self):
        data = result(SweepCalculator, q="const:2", max_denominator=10)
        # sum of Euler's totient up to 10
        self.assertEqual(data["checked"], 32)
        self.assertEqual(data["failures"], [])
        self.assertEqual(data["pigeonhole_violations"], [])
        self.assertTrue(data["passed"])
        self.assertLessEqual(data["max_witness_index"], 11)


def test_read_q_spec(tmp_path):
    spec_file = tmp_path / "q.txt"
    spec_file.write_text("cycle:2,3\n")
    assert read_q_spec(f"@{spec_file}") == "cycle:2,3"
    assert read_q_spec("const:2") == "const:2"
    with pytest.raises(CantorDomainError):
        read_q_spec(f"@{tmp_path / 'missing.txt'}")


def test_q_spec_from_file(tmp_path):
    spec_file = tmp_path / "q.txt"
    spec_file.write_text("rule:succ")
    data = result(ExpandCalculator, q=f"@{spec_file}", x="1/3", depth=3)
    assert data["q"] == "rule:succ"
    assert data["digits"] == [0, 2, 0]


def test_calculators_share_one_base_sequence_grammar():
    for calculator_class in [ExpandCalculator, ShiftCalculator, TraceCalculator]:
        calculator = calculator_class("c")
        calculator.parameters["q"] = "list:10,10;then;cycle:2,3"
        assert calculator.base_sequence() == BaseSequence("list:10,10;then;cycle:2,3")

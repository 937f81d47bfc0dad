#! /usr/bin/env python3
"""
:module Test: Top level test module hosting all unittest suites.
"""

import unittest
import sys

from test_BaseCalculator import BaseCalculatorTest
from test_BaseSequence import Test_BaseSequence, Test_ParseBaseSpec
from test_Calculators import (
    Test_CylinderCalculator,
    Test_DualCalculator,
    Test_EvaluateCalculator,
    Test_ExpandCalculator,
    Test_IdentityCalculator,
    Test_ShiftCalculators,
    Test_SweepCalculator,
    Test_TraceCalculator,
)
from test_Instrument import InstrumentTest
from test_Operators import Test_OperatorContext
from test_Parameters import Test_Parameter, Test_Parameters, Test_Instruments
from test_Rationality import Test_FractionalTrace


def suite():
    loader = unittest.defaultTestLoader
    cases = [
        Test_ParseBaseSpec,
        Test_BaseSequence,
        Test_OperatorContext,
        Test_FractionalTrace,
        BaseCalculatorTest,
        Test_ExpandCalculator,
        Test_EvaluateCalculator,
        Test_ShiftCalculators,
        Test_TraceCalculator,
        Test_CylinderCalculator,
        Test_DualCalculator,
        Test_IdentityCalculator,
        Test_SweepCalculator,
        Test_Parameter,
        Test_Parameters,
        Test_Instruments,
        InstrumentTest,
    ]

    return unittest.TestSuite(loader.loadTestsFromTestCase(case) for case in cases)


# Run the suite and return a success status code. This enables running an automated git-bisect.
if __name__ == "__main__":
    result = unittest.TextTestRunner(verbosity=2).run(suite())

    if result.wasSuccessful():
        print("---> OK <---")
        sys.exit(0)

    sys.exit(1)

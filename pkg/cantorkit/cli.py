"""
:module cli: The ``cantor-kit`` command line.

Every subcommand configures one calculator from its flags, runs it and prints
its payload as text or, with ``--json``, as exact JSON. ``verify`` runs an
instrument of identity checkers sharing the master parameters q, x and depth.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
``verify`` exits 1 as well when any identity fails.
"""

import argparse
import contextlib
import logging
import sys
from typing import List, Optional, TextIO, Tuple

from cantorkit import __version__
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
)
from cantorkit.Calculators.CantorCalculator import FORMATS
from cantorkit.Data import SCHEMA
from cantorkit.Exceptions import CantorDomainError
from cantorkit.Instrument import Instrument
from cantorkit.Numeric import parse_rational

logger = logging.getLogger(__name__)


def _count(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _index(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _output_format(args: argparse.Namespace) -> str:
    return "json" if args.json else "text"


def _run_calculator(args: argparse.Namespace) -> Tuple[str, int]:
    calculator = args.calculator(args.command)
    calculator.set_parameters(q=args.q, format=_output_format(args))
    for name in args.parameters:
        value = getattr(args, name)
        if value is None:
            continue
        if name == "x":
            value = parse_rational(value)
        calculator.parameters[name] = value
    calculator.backengine()
    return calculator.render(), 0


def _verify_instrument(args: argparse.Namespace) -> Instrument:
    instrument = Instrument("verify")
    for identity in IDENTITIES:
        checker = IdentityCalculator(identity)
        checker.parameters["identity"] = identity
        instrument.add_calculator(checker)
    links = {identity: "q" for identity in IDENTITIES}
    if args.sweep is not None:
        sweep = SweepCalculator("sweep")
        sweep.parameters["max_denominator"] = args.sweep
        instrument.add_calculator(sweep)
        links["sweep"] = "q"
    instrument.add_master_parameter("q", links, comment="Q-spec of every check")
    instrument.add_master_parameter(
        "x", {identity: "x" for identity in IDENTITIES}, comment="The rational checked"
    )
    instrument.add_master_parameter(
        "depth", {identity: "depth" for identity in IDENTITIES}, comment="Largest index checked"
    )
    instrument.master["q"] = args.q
    instrument.master["x"] = parse_rational(args.x)
    instrument.master["depth"] = args.depth
    return instrument


def _run_verify(args: argparse.Namespace) -> Tuple[str, int]:
    instrument = _verify_instrument(args)
    outputs = instrument.run()
    checks = [outputs[f"{identity}_result"].get_data() for identity in IDENTITIES]
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "q": checks[0]["q"],
        "x": checks[0]["x"],
        "depth": args.depth,
        "checks": [
            {
                "name": check["name"],
                "passed": check["passed"],
                "checked": check["checked"],
                "first_failure": check["first_failure"],
            }
            for check in checks
        ],
    }
    passed = all(check["passed"] for check in checks)
    if args.sweep is not None:
        sweep = dict(outputs["sweep_result"].get_data())
        for key in ("schema", "command", "q"):
            sweep.pop(key)
        payload["sweep"] = sweep
        passed = passed and sweep["passed"]
    payload["passed"] = passed
    return FORMATS[_output_format(args)].render(payload), 0 if passed else 1


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", required=True, help="Q-spec, e.g. const:2 or cycle:2,3; @file reads it from a file")
    common.add_argument("--json", action="store_true", help="Exact JSON output")
    common.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cantor-kit",
        description="Exact Cantor series expansions, shift operators and rationality certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    s = sub.add_parser("expand", parents=[common], help="Greedy digits of x")
    s.add_argument("--x", required=True, help="Rational a/b in [0,1)")
    s.add_argument("--depth", type=_count, default=10, help="Number of digits (default: 10)")
    s.add_argument("--horizon", type=_count, help="Also classify x as Q-rational within this horizon")
    s.set_defaults(func=_run_calculator, calculator=ExpandCalculator, parameters=("x", "depth", "horizon"))

    s = sub.add_parser("eval", parents=[common], help="Value of a digit string")
    s.add_argument("--base", required=True, help='Digit string, e.g. "0,2,…0", or its JSON form')
    s.add_argument("--depth", type=_count, help="Depth of the partial sum (default: explicit digits)")
    s.set_defaults(func=_run_calculator, calculator=EvaluateCalculator, parameters=("base", "depth"))

    s = sub.add_parser("shift", parents=[common], help="The shift sigma^n(x)")
    s.add_argument("--x", required=True, help="Rational a/b in [0,1)")
    s.add_argument("--n", type=_count, default=1, help="Power of the shift (default: 1)")
    s.set_defaults(func=_run_calculator, calculator=ShiftCalculator, parameters=("x", "n"))

    s = sub.add_parser("gshift", parents=[common], help="The generalized shift sigma_m(x)")
    s.add_argument("--x", required=True, help="Rational a/b in [0,1)")
    s.add_argument("--m", type=_index, default=1, help="Index of the deleted digit (default: 1)")
    s.set_defaults(func=_run_calculator, calculator=GeneralizedShiftCalculator, parameters=("x", "m"))

    s = sub.add_parser("trace", parents=[common], help="Fractional-part trace and its first collision")
    s.add_argument("--x", required=True, help="Rational a/b in [0,1)")
    s.add_argument("--horizon", type=_count, default=10, help="Index of the last entry (default: 10)")
    s.set_defaults(func=_run_calculator, calculator=TraceCalculator, parameters=("x", "horizon"))

    s = sub.add_parser("cylinder", parents=[common], help="Interval of a cylinder")
    s.add_argument("--base", required=True, help="Cylinder base c_1,...,c_m")
    s.add_argument("--x", help="Rational to test for membership")
    s.set_defaults(func=_run_calculator, calculator=CylinderCalculator, parameters=("base", "x"))

    s = sub.add_parser("dual", parents=[common], help="Tail-of-(q_k - 1) form of a terminating digit string")
    s.add_argument("--base", required=True, help="Terminating digit string")
    s.set_defaults(func=_run_calculator, calculator=DualCalculator, parameters=("base",))

    s = sub.add_parser("verify", parents=[common], help="Check every identity for x over Q")
    s.add_argument("--x", required=True, help="Rational a/b in [0,1)")
    s.add_argument("--depth", type=_count, default=20, help="Largest index checked (default: 20)")
    s.add_argument("--sweep", type=_index, help="Also round-trip every a/b with b up to this bound")
    s.set_defaults(func=_run_verify)

    return parser


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Execute one command line and return its exit status.

    :param argv: The arguments, without the program name. Defaults to ``sys.argv[1:]``.
    :param stdout: Stream for the payload. Defaults to ``sys.stdout``.
    :param stderr: Stream for errors and usage messages. Defaults to ``sys.stderr``.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return exit_request.code if isinstance(exit_request.code, int) else 2

    if args.verbose:
        logging.getLogger("cantorkit").setLevel(logging.DEBUG)
    try:
        text, status = args.func(args)
    except CantorDomainError as error:
        logger.debug("Command %s rejected its input", args.command, exc_info=True)
        stderr.write(f"error: {error}\n")
        return 1
    stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

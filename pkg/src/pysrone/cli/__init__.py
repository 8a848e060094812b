"""The `srone` command: ring construction, classification, stable range one checks and witnesses, integer matrices
and verification runs.

Output goes to stdout as JSON (default) or text, logs go to stderr. Exit codes: 0 on success, 1 when a verification
run has a failing check, 2 on bad usage or any library error.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from pysrone.base import SroneError
from pysrone.jacobson import ElementClass
from pysrone.srone import Side, VariantKind
from pysrone.suite import KINDS

from . import commands
from .output import FORMATS, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
DESCRIPTION = "Element-wise stable range one: rings, elements, witnesses, integer matrices and theorem checks."


def _int_row(text: str) -> List[int]:
    try:
        return [int(entry) for entry in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_element_sides(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--side", choices=[side.value for side in Side], default=Side.RIGHT.value)
    parser.add_argument("--variant", choices=[variant.value for variant in VariantKind], default=VariantKind.FULL.value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srone", description=DESCRIPTION)
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO logs, repeat for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="construct a ring from its spec")
    ring.add_argument("spec")
    ring.add_argument("--list", action="store_true", help="also list every element literal")
    ring.set_defaults(handler=commands.ring_command)

    classify = sub.add_parser("classify", help="element classes, or ring predicates without --element")
    classify.add_argument("spec")
    classify.add_argument("--element", help="element literal, or #index")
    classify.set_defaults(handler=commands.classify_command)

    check = sub.add_parser("check", help="decide a property of elements")
    checks = check.add_subparsers(dest="check", required=True)
    classes = [cls.value for cls in ElementClass]

    sr = checks.add_parser("sr", help="stable range one of an element")
    sr.add_argument("spec")
    sr.add_argument("--element", required=True)
    _add_element_sides(sr)
    sr.set_defaults(handler=commands.check_sr_command)

    sjl = checks.add_parser("sjl", help="class memberships of a + b - axb and a + b - bxa")
    sjl.add_argument("spec")
    sjl.add_argument("--a", required=True)
    sjl.add_argument("--b", required=True)
    sjl.add_argument("--x", required=True)
    sjl.add_argument("--class", dest="cls", choices=classes, default=ElementClass.UNIT.value)
    sjl.set_defaults(handler=commands.check_sjl_command)

    prop36 = checks.add_parser("prop36", help="the four binary specializations of a + b - axb")
    prop36.add_argument("spec")
    prop36.add_argument("--a", required=True)
    prop36.add_argument("--x", required=True)
    prop36.add_argument("--class", dest="cls", choices=classes, default=ElementClass.UNIT.value)
    prop36.set_defaults(handler=commands.check_prop36_command)

    witness = sub.add_parser("witness", help="a certified stable range one witness")
    witness.add_argument("spec")
    witness.add_argument("--element", required=True)
    operand = witness.add_mutually_exclusive_group(required=True)
    operand.add_argument("--x", help="multiplier of a + b - axb")
    operand.add_argument("--t", help="comaximal partner t, for b with a + tb a unit")
    _add_element_sides(witness)
    witness.set_defaults(handler=commands.witness_command)

    intmat = sub.add_parser("intmat", help="integer matrices")
    actions = intmat.add_subparsers(dest="action", required=True)
    for name, help_text in (
        ("check", "decide stable range one"),
        ("snf", "Smith normal form with transforms"),
        ("rules", "the structural rule that applies, if any"),
    ):
        action = actions.add_parser(name, help=help_text)
        action.add_argument("--matrix", required=True, help='JSON file {"n": n, "rows": [[...], ...]}')
    int_witness = actions.add_parser("witness", help="B with A + (I - AX)B unimodular")
    int_witness.add_argument("--matrix", required=True)
    int_witness.add_argument("--x", required=True, help="JSON matrix file")
    row = actions.add_parser("complete-row", help="complete a row to a unimodular matrix")
    row.add_argument("--row", required=True, type=_int_row, help="comma-separated integers")
    bezout = actions.add_parser("bezout", help="factor [[p, q], [0, 0]] through a unimodular matrix")
    bezout.add_argument("--p", required=True, type=int)
    bezout.add_argument("--q", required=True, type=int)
    refute = actions.add_parser("refute-3-12", help="no unit or idempotent witness for diag(7, 0)")
    refute.add_argument("--box", type=int, default=10)
    refute.add_argument("--samples", type=int, default=10**4)
    refute.add_argument("--seed", type=int, default=0)
    actions.add_parser("audit-6-12", help="which block orientation has stable range one")
    intmat.set_defaults(handler=commands.intmat_command)

    verify = sub.add_parser("verify", help="run theorem checks")
    verify.add_argument("--theorems", required=True, help="comma-separated ids or aliases (sjl, prop36, T2, int, all)")
    verify.add_argument("--rings", default="default", help='"default" or ring specs separated by ";"')
    verify.add_argument("--budget", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--omit-timing", action="store_true", help="write null elapsed_ms")
    verify.add_argument("--output", help="write the report here instead of stdout")
    verify.set_defaults(handler=commands.verify_command)

    counterexample = sub.add_parser("counterexample", help="search for a counterexample")
    counterexample.add_argument("kind", choices=KINDS)
    counterexample.add_argument("--budget", type=int)
    counterexample.set_defaults(handler=commands.counterexample_command)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one command line and returns its exit code. `argv` defaults to the process arguments."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        payload, code = args.handler(args)
    except SroneError as err:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE

    text = render(payload, args.format)
    output = getattr(args, "output", None)
    if output:
        with open(output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> int:
    return run_command()

"""Command-line interface.

Subcommands:
  scan t1|t2|t3 --radius N [--format json|csv] [--out FILE] [--jobs N]
  invariant t1 --b1 B --c1 C
  invariant t2 --a0 A --a1 B
  invariant t3 --a A --b B --c C
  ring --matrix "1,0,0;2,1,1;4,2,1" [--max-degree D]
  free --matrix ...
  verify --suite arith|ring|freeness|t1|t2|t3|all

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

# let argparse treat "-3/4" as a value, not an option
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

from . import __version__
from .biquotient import TorusActionMatrix, is_free, quotient_ring
from .checks import SUITE_NAMES, verify
from .invariants import (
    DegenerateFamilyMember,
    t1_invariant,
    t2_det_class,
    t3_discriminant_class,
)
from .report import scan

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biquo",
        description="Exact invariants of torus-quotient cohomology rings.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="scan a parameter family")
    p_scan.add_argument("family", choices=("t1", "t2", "t3"))
    p_scan.add_argument("--radius", type=int, required=True)
    p_scan.add_argument("--format", choices=("json", "csv"), default="json")
    p_scan.add_argument("--out", help="output file (default: stdout)")
    p_scan.add_argument("--jobs", type=int, default=1, help="worker processes")

    p_inv = sub.add_parser("invariant", help="one invariant value")
    inv_sub = p_inv.add_subparsers(dest="family", required=True)
    p_t1 = inv_sub.add_parser("t1")
    p_t1.add_argument("--b1", type=int, required=True)
    p_t1.add_argument("--c1", type=int, required=True)
    p_t2 = inv_sub.add_parser("t2")
    p_t2.add_argument("--a0", type=Fraction, required=True)
    p_t2.add_argument("--a1", type=Fraction, required=True)
    p_t3 = inv_sub.add_parser("t3")
    p_t3.add_argument("--a", type=Fraction, required=True)
    p_t3.add_argument("--b", type=Fraction, required=True)
    p_t3.add_argument("--c", type=Fraction, required=True)
    for rational_parser in (p_t1, p_t2, p_t3):
        rational_parser._negative_number_matcher = _NEGATIVE_VALUE

    p_ring = sub.add_parser("ring", help="quotient ring of a free torus action")
    p_ring.add_argument("--matrix", required=True, help='rows like "1,0,0;2,1,1;4,2,1"')
    p_ring.add_argument("--max-degree", type=int, default=None)

    p_free = sub.add_parser("free", help="freeness of a torus action")
    p_free.add_argument("--matrix", required=True)

    p_verify = sub.add_parser("verify", help="run the property suites")
    p_verify.add_argument(
        "--suite", required=True, choices=SUITE_NAMES + ("all",)
    )
    return parser


def _cmd_scan(args) -> int:
    report = scan(args.family, args.radius, jobs=max(1, args.jobs))
    text = report.to_json() if args.format == "json" else report.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(
            f"{report.family} radius {report.search_radius}: "
            f"{len(report.rows)} rows, {report.distinct_count} distinct -> {args.out}"
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_invariant(args) -> int:
    if args.family == "t1":
        print(t1_invariant(args.b1, args.c1).serialize())
    elif args.family == "t2":
        print(t2_det_class(args.a0, args.a1).serialize())
    else:
        print(t3_discriminant_class(args.a, args.b, args.c).serialize())
    return EXIT_OK


def _cmd_ring(args) -> int:
    matrix = TorusActionMatrix.parse(args.matrix)
    ring = quotient_ring(matrix, args.max_degree)
    print(f"generators: {ring.generators} (degree 2)")
    for rel in ring.relations:
        print(f"relation: {rel.to_str()}")
    dims = [ring.graded_dim(d) for d in range(0, ring.max_degree + 1, 2)]
    print("graded dims (even degrees 0..{}): {}".format(ring.max_degree, dims))
    print(f"complete intersection: {ring.is_complete_intersection()}")
    return EXIT_OK


def _cmd_free(args) -> int:
    matrix = TorusActionMatrix.parse(args.matrix)
    print("free" if is_free(matrix) else "not free")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = verify(args.suite)
    for result in results:
        print(result.line())
    failures = [r for r in results if not r.ok]
    print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "scan": _cmd_scan,
        "invariant": _cmd_invariant,
        "ring": _cmd_ring,
        "free": _cmd_free,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except DegenerateFamilyMember as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())

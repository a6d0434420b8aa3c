"""Command line interface.

    btkernel compute SPECFILE
    btkernel table --twist 2A --max-rank 7 --format tsv
    btkernel verify --max-a 12 --max-d 10

Exit codes: 0 success, 1 sweep mismatches, 2 invalid input,
3 oracle/closed-form disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConsistencyError, DomainError, SpecParseError, SpecSemanticError
from .groupspec import compute_kernel, parse_group_spec
from .tables import TABLE_TWISTS, emit_table, verify_sweep

EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


def _cmd_compute(args) -> int:
    try:
        with open(args.specfile, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    try:
        report = compute_kernel(parse_group_spec(text))
    except (SpecParseError, SpecSemanticError) as exc:
        print("invalid spec: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print("internal consistency error: %s" % exc, file=sys.stderr)
        return EXIT_INCONSISTENT
    print(json.dumps(report.to_json(), indent=2))
    return 0


def _cmd_table(args) -> int:
    try:
        doc = emit_table(args.twist, args.max_rank, args.format)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print("internal consistency error: %s" % exc, file=sys.stderr)
        return EXIT_INCONSISTENT
    sys.stdout.write(doc)
    return 0


def _cmd_verify(args) -> int:
    try:
        summary = verify_sweep(args.max_a, args.max_d)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    print(json.dumps(summary.to_json(), indent=2))
    return 0 if summary.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="btkernel",
        description="Kernel sizes of H^1 maps for quasi-split adjoint groups, "
                    "computed on affine Dynkin diagram types.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the kernel for a group spec file")
    p.add_argument("specfile")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("table", help="tabulate kernel counts for one twist")
    p.add_argument("--twist", required=True, choices=TABLE_TWISTS)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="exhaustive oracle vs closed-form sweep")
    p.add_argument("--max-a", type=int, default=12)
    p.add_argument("--max-d", type=int, default=10)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

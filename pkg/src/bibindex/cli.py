"""Command-line surface: indices, compare, hcore, manipulate, reproduce.

Exit codes: 0 on success, 1 on usage errors, 2 on data errors.
"""

from __future__ import annotations

import argparse
import sys

from .experiments import (
    AssociationTable,
    ManipulationMode,
    discipline_aggregate,
    manipulation_report,
    reproduce_table,
)
from .io import ParseError, parse_citations_csv, parse_citations_wide
from .metrics import INDEX_NAMES, h_core_partition, index_profile
from .ranking import association_matrix
from .reports import FORMATS, PartitionReport, ProfileReport, emit_report

_MODES = {"drop-singletons": ManipulationMode.DROP_SINGLETONS,
          "decrement": ManipulationMode.DECREMENT_ALL}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's default 2
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="bibindex",
                     description="Citation-record indices, h-core partitions and "
                                 "rank-association analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="citation CSV (long format: researcher,citations)")
            p.add_argument("--wide", action="store_true",
                           help="input rows are 'name,c1,c2,...' instead of long format")
        p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("indices", help="index profile per researcher")
    add_common(p)

    p = sub.add_parser("compare", help="association matrix between index rankings")
    add_common(p)
    p.add_argument("--left", default="T,h,g", help="comma-separated index names")
    p.add_argument("--right", default="j,jS", help="comma-separated index names")

    p = sub.add_parser("hcore", help="h-core partitions plus cohort aggregate")
    add_common(p)

    p = sub.add_parser("manipulate", help="rank stability under record manipulation")
    add_common(p)
    p.add_argument("--mode", choices=sorted(_MODES), required=True)
    p.add_argument("--index", default="j", help="index to rank by (default: j)")

    p = sub.add_parser("reproduce", help="recompute a reference table from bundled data")
    add_common(p, with_file=False)
    p.add_argument("--table", type=int, choices=[1, 2, 3, 4, 5], required=True)
    return parser


def _load_records(args):
    with open(args.file, newline="", encoding="utf-8") as stream:
        if args.wide:
            return parse_citations_wide(stream)
        return parse_citations_csv(stream)


def _parse_index_list(text: str) -> list[str]:
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise UsageError("expected at least one index name")
    for name in names:
        if name not in INDEX_NAMES:
            raise UsageError(f"unknown index name: {name!r} (expected one of {', '.join(INDEX_NAMES)})")
    return names


def _run(args) -> str:
    if args.command == "indices":
        records = _load_records(args)
        rows = tuple((r.researcher_id, index_profile(r)) for r in records)
        return emit_report(ProfileReport(rows), args.format)

    if args.command == "compare":
        left = _parse_index_list(args.left)
        right = _parse_index_list(args.right)
        records = _load_records(args)
        profiles = [index_profile(r) for r in records]
        ids = [r.researcher_id for r in records]
        reports = association_matrix(profiles, left, right, ids=ids)
        table = AssociationTable(
            table_id="compare",
            caption=f"Rank associations: {', '.join(left)} versus {', '.join(right)}",
            row_indices=tuple(left), col_indices=tuple(right),
            reports=tuple(reports))
        return emit_report(table, args.format)

    if args.command == "hcore":
        records = _load_records(args)
        rows = tuple((r.researcher_id, h_core_partition(r)) for r in records)
        aggregate = discipline_aggregate(records)
        return emit_report(PartitionReport(rows, aggregate), args.format)

    if args.command == "manipulate":
        if args.index not in INDEX_NAMES:
            raise UsageError(f"unknown index name: {args.index!r}")
        records = _load_records(args)
        report = manipulation_report(records, _MODES[args.mode], args.index)
        return emit_report(report, args.format)

    # reproduce
    return emit_report(reproduce_table(args.table), args.format)


def cli_dispatch(argv) -> int:
    """Run one CLI invocation; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        output = _run(args)
    except UsageError as err:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"error: {err}\n")
        return 1
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return 0 if code in (None, 0) else int(code)
    except (ParseError, ValueError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    sys.stdout.write(output + "\n")
    return 0


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()

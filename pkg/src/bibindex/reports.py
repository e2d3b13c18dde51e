"""Deterministic text renderings of the package's report objects.

Three formats are supported: ``plain`` (aligned tables), ``csv`` and
``json-lines``.  Association measures are printed to 3 decimals, j and jS
values to 1 decimal, A and R to 2 decimals, proportions to 3 decimals and
integers unpadded, so identical inputs always yield identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import singledispatch

from .experiments import (
    AggregateTable,
    AssociationTable,
    DisciplineAggregate,
    ManipulationReport,
    RankChangeReport,
)
from .metrics import HCorePartition, IndexProfile

FORMATS = ("plain", "csv", "json-lines")


@dataclass(frozen=True)
class ProfileReport:
    """Per-researcher index profiles, in roster order."""

    rows: tuple[tuple[str, IndexProfile], ...]


@dataclass(frozen=True)
class PartitionReport:
    """Per-researcher h-core partitions plus the cohort aggregate."""

    rows: tuple[tuple[str, HCorePartition], ...]
    aggregate: DisciplineAggregate


def _check_format(fmt: str):
    if fmt not in FORMATS:
        raise ValueError(f"unknown format: {fmt!r} (expected one of {FORMATS})")


def _measure(x: float) -> str:
    return f"{x + 0.0:.3f}"


def _index_value(index_name: str, value: float) -> str:
    if index_name in ("T", "h", "g"):
        return str(int(value))
    if index_name in ("A", "R"):
        return f"{value:.2f}"
    return f"{value:.1f}"  # j, jS


def _rank(value: float) -> str:
    return str(int(value)) if value == int(value) else f"{value:.1f}"


def _spearman_cell(report) -> str:
    return f"{_measure(report.spearman)}({report.significance.marker})"


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    out = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out)


def _csv_cell(value: str) -> str:
    if any(ch in value for ch in ',"\n'):
        return '"' + value.replace('"', '""') + '"'
    return value


def _csv_table(rows: list[list[str]]) -> str:
    return "\n".join(",".join(_csv_cell(cell) for cell in row) for row in rows)


def _json_lines(objs: list[dict]) -> str:
    return "\n".join(json.dumps(obj, ensure_ascii=False) for obj in objs)


@singledispatch
def emit_report(report, fmt: str = "plain") -> str:
    """Serialize any report object to text in the requested format."""
    raise ValueError(f"cannot emit report of type {type(report).__name__}")


@emit_report.register
def _(report: ProfileReport, fmt: str = "plain") -> str:
    _check_format(fmt)
    header = ["researcher", "T", "h", "g", "A", "R", "j", "jS"]
    if fmt == "json-lines":
        objs = []
        for name, p in report.rows:
            objs.append({
                "researcher": name,
                "T": p.total_citations, "h": p.h, "g": p.g,
                "A": None if p.a is None else round(float(p.a), 2),
                "R": round(p.r, 2),
                "j": round(p.j, 1), "jS": round(p.js, 1),
            })
        return _json_lines(objs)
    rows = [header]
    for name, p in report.rows:
        rows.append([
            name,
            str(p.total_citations), str(p.h), str(p.g),
            "-" if p.a is None else f"{float(p.a):.2f}",
            f"{p.r:.2f}", f"{p.j:.1f}", f"{p.js:.1f}",
        ])
    return _align(rows) if fmt == "plain" else _csv_table(rows)


@emit_report.register
def _(report: AssociationTable, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json-lines":
        objs = []
        for rep in report.reports:
            objs.append({
                "left": rep.pair[0], "right": rep.pair[1],
                "spearman": round(rep.spearman, 3),
                "significance": rep.significance.marker,
                "footrule": round(rep.footrule, 3),
                "m_measure": round(rep.m_measure, 3),
            })
        return _json_lines(objs)
    if fmt == "csv":
        rows = [["left", "right", "spearman", "significance", "footrule", "m_measure"]]
        for rep in report.reports:
            rows.append([rep.pair[0], rep.pair[1], _measure(rep.spearman),
                         rep.significance.marker, _measure(rep.footrule),
                         _measure(rep.m_measure)])
        return _csv_table(rows)
    # plain: one column group of (Spearman, Footrule, M) per right-hand index
    group_header = [""]
    for col in report.col_indices:
        group_header += [col, "", ""]
    sub_header = [""] + ["Spearman", "Footrule", "M"] * len(report.col_indices)
    rows = [group_header, sub_header]
    for row_name in report.row_indices:
        line = [row_name]
        for col_name in report.col_indices:
            rep = report.cell(row_name, col_name)
            if rep is None:
                line += ["-", "-", "-"]
            else:
                line += [_spearman_cell(rep), _measure(rep.footrule),
                         _measure(rep.m_measure)]
        rows.append(line)
    return report.caption + "\n" + _align(rows)


def _aggregate_row(agg: DisciplineAggregate, with_h: bool) -> list[str]:
    row = [agg.discipline]
    if with_h:
        row += [f"{v:.2f}" for v in (agg.mean_h1, agg.mean_h2, agg.mean_h3, agg.mean_h4)]
    row += [_measure(v) for v in (agg.mean_g1, agg.mean_g2, agg.mean_g3, agg.mean_g4)]
    return row


def _aggregate_obj(agg: DisciplineAggregate, with_h: bool) -> dict:
    obj = {"discipline": agg.discipline}
    if with_h:
        obj.update({"H1": round(agg.mean_h1, 2), "H2": round(agg.mean_h2, 2),
                    "H3": round(agg.mean_h3, 2), "H4": round(agg.mean_h4, 2)})
    obj.update({"G1": round(agg.mean_g1, 3), "G2": round(agg.mean_g2, 3),
                "G3": round(agg.mean_g3, 3), "G4": round(agg.mean_g4, 3)})
    return obj


@emit_report.register
def _(report: AggregateTable, fmt: str = "plain") -> str:
    _check_format(fmt)
    with_h = all(agg.mean_h1 is not None for agg in report.rows)
    if fmt == "json-lines":
        return _json_lines([_aggregate_obj(agg, with_h) for agg in report.rows])
    header = ["discipline"]
    if with_h:
        header += ["H1", "H2", "H3", "H4"]
    header += ["G1", "G2", "G3", "G4"]
    rows = [header] + [_aggregate_row(agg, with_h) for agg in report.rows]
    if fmt == "csv":
        return _csv_table(rows)
    return report.caption + "\n" + _align(rows)


@emit_report.register
def _(report: DisciplineAggregate, fmt: str = "plain") -> str:
    _check_format(fmt)
    with_h = report.mean_h1 is not None
    if fmt == "json-lines":
        return _json_lines([_aggregate_obj(report, with_h)])
    header = ["discipline"]
    if with_h:
        header += ["H1", "H2", "H3", "H4"]
    header += ["G1", "G2", "G3", "G4"]
    rows = [header, _aggregate_row(report, with_h)]
    return _align(rows) if fmt == "plain" else _csv_table(rows)


@emit_report.register
def _(report: HCorePartition, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json-lines":
        return _json_lines([{
            "H1": report.h1, "H2": report.h2, "H3": report.h3, "H4": report.h4,
            "G1": round(report.g1, 3), "G2": round(report.g2, 3),
            "G3": round(report.g3, 3), "G4": round(report.g4, 3),
        }])
    rows = [["H1", "H2", "H3", "H4", "G1", "G2", "G3", "G4"],
            [str(report.h1), str(report.h2), str(report.h3), str(report.h4),
             _measure(report.g1), _measure(report.g2),
             _measure(report.g3), _measure(report.g4)]]
    return _align(rows) if fmt == "plain" else _csv_table(rows)


@emit_report.register
def _(report: PartitionReport, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json-lines":
        objs = []
        for name, p in report.rows:
            objs.append({
                "researcher": name,
                "H1": p.h1, "H2": p.h2, "H3": p.h3, "H4": p.h4,
                "G1": round(p.g1, 3), "G2": round(p.g2, 3),
                "G3": round(p.g3, 3), "G4": round(p.g4, 3),
            })
        objs.append(_aggregate_obj(report.aggregate, with_h=True))
        return _json_lines(objs)
    header = ["researcher", "H1", "H2", "H3", "H4", "G1", "G2", "G3", "G4"]
    rows = [header]
    for name, p in report.rows:
        rows.append([name, str(p.h1), str(p.h2), str(p.h3), str(p.h4),
                     _measure(p.g1), _measure(p.g2), _measure(p.g3), _measure(p.g4)])
    agg = report.aggregate
    rows.append([f"[mean] {agg.discipline}",
                 f"{agg.mean_h1:.2f}", f"{agg.mean_h2:.2f}",
                 f"{agg.mean_h3:.2f}", f"{agg.mean_h4:.2f}",
                 _measure(agg.mean_g1), _measure(agg.mean_g2),
                 _measure(agg.mean_g3), _measure(agg.mean_g4)])
    return _align(rows) if fmt == "plain" else _csv_table(rows)


@emit_report.register
def _(report: RankChangeReport, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json-lines":
        objs = []
        for a, b, (pos_a, pos_b) in report.swaps:
            objs.append({"kind": "swap", "researcher": a, "partner": b,
                         "old_rank": pos_a, "new_rank": pos_b})
        for rid, old, new in report.moves:
            objs.append({"kind": "move", "researcher": rid,
                         "old_rank": old, "new_rank": new})
        objs.append({"kind": "summary", "index": report.index_name,
                     "unchanged_count": report.unchanged_count})
        return _json_lines(objs)
    if fmt == "csv":
        rows = [["kind", "researcher", "partner", "old_rank", "new_rank", "count"]]
        for a, b, (pos_a, pos_b) in report.swaps:
            rows.append(["swap", a, b, _rank(pos_a), _rank(pos_b), ""])
        for rid, old, new in report.moves:
            rows.append(["move", rid, "", _rank(old), _rank(new), ""])
        rows.append(["summary", "", "", "", "", str(report.unchanged_count)])
        return _csv_table(rows)
    lines = [f"rank changes under {report.index_name}:"]
    for a, b, (pos_a, pos_b) in report.swaps:
        lines.append(f"  swap: {a} <-> {b} (positions {_rank(pos_a)} and {_rank(pos_b)})")
    for rid, old, new in report.moves:
        lines.append(f"  move: {rid} from {_rank(old)} to {_rank(new)}")
    if not report.swaps and not report.moves:
        lines.append("  no changes")
    lines.append(f"  unchanged ranks: {report.unchanged_count}")
    return "\n".join(lines)


@emit_report.register
def _(report: ManipulationReport, fmt: str = "plain") -> str:
    _check_format(fmt)
    name = report.index_name
    if fmt == "json-lines":
        objs = []
        for i, rid in enumerate(report.ids):
            objs.append({
                "researcher": rid,
                f"{name}_before": round(report.before_values[i], 1),
                "rank_before": report.before_ranks[i],
                f"{name}_after": round(report.after_values[i], 1),
                "rank_after": report.after_ranks[i],
            })
        objs.append({"kind": "summary", "index": name, "mode": report.mode.value,
                     "unchanged_count": report.change.unchanged_count,
                     "swaps": len(report.change.swaps),
                     "moves": len(report.change.moves)})
        return _json_lines(objs)
    header = ["researcher", f"{name}_before", "rank_before", f"{name}_after", "rank_after"]
    rows = [header]
    for i, rid in enumerate(report.ids):
        rows.append([rid,
                     _index_value(name, report.before_values[i]),
                     _rank(report.before_ranks[i]),
                     _index_value(name, report.after_values[i]),
                     _rank(report.after_ranks[i])])
    if fmt == "csv":
        return _csv_table(rows)
    table = _align(rows)
    change = emit_report(report.change, "plain")
    return (f"{name} ranking before/after {report.mode.value}\n"
            f"{table}\n\n{change}")

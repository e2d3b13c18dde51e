"""Cohort-level procedures: record manipulations, rank-stability reports,
pooled h-core aggregates, and the reference comparison tables T1..T5."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .io import CohortDataset, load_bundled_dataset
from .metrics import (
    CitationRecord,
    HCorePartition,
    INDEX_FIELDS,
    h_core_partition,
    index_profile,
)
from .ranking import AssociationReport, Ranking, associate, rank_descending


class ManipulationMode(enum.Enum):
    """The two citation-record transforms used in the robustness analysis."""

    DROP_SINGLETONS = "drop_singletons"
    DECREMENT_ALL = "decrement_all"


@dataclass(frozen=True)
class RankChangeReport:
    """How a cohort ranking moved between two versions of the records.

    ``swaps`` lists pairs of researchers who exchanged ranks, with their
    old positions; ``moves`` lists remaining researchers whose rank
    changed without a clean exchange (id, old rank, new rank).
    """

    index_name: str
    swaps: tuple[tuple[str, str, tuple[float, float]], ...]
    moves: tuple[tuple[str, float, float], ...]
    unchanged_count: int


@dataclass(frozen=True)
class ManipulationReport:
    """Before/after values, ranks and the rank-change summary for one index."""

    index_name: str
    mode: ManipulationMode
    ids: tuple[str, ...]
    before_values: tuple[float, ...]
    after_values: tuple[float, ...]
    before_ranks: tuple[float, ...]
    after_ranks: tuple[float, ...]
    change: RankChangeReport


@dataclass(frozen=True)
class DisciplineAggregate:
    """Cohort-level h-core citation split.

    H means are plain arithmetic means of the per-researcher H values and
    are None when the cohort provides no per-researcher H data.  G values
    are pooled proportions (summed H_i over summed T), i.e. the
    citation-weighted average of the per-researcher proportions.
    """

    discipline: str
    mean_h1: float | None
    mean_h2: float | None
    mean_h3: float | None
    mean_h4: float | None
    mean_g1: float
    mean_g2: float
    mean_g3: float
    mean_g4: float


@dataclass(frozen=True)
class AssociationTable:
    """A grid of association reports between two sets of indices."""

    table_id: str
    caption: str
    row_indices: tuple[str, ...]
    col_indices: tuple[str, ...]
    reports: tuple[AssociationReport, ...]

    def cell(self, row: str, col: str) -> AssociationReport | None:
        """The report for one (row, col) pair; None on the diagonal."""
        if row == col:
            return None
        for report in self.reports:
            if report.pair == (row, col):
                return report
        raise KeyError((row, col))


@dataclass(frozen=True)
class AggregateTable:
    """One DisciplineAggregate row per discipline."""

    table_id: str
    caption: str
    rows: tuple[DisciplineAggregate, ...]


TABLE_IDS = ("T1", "T2", "T3", "T4", "T5")

_COMPARISON_ROWS = ("T", "h", "g", "j", "jS")
_ASSOCIATION_TABLES = {
    "T1": ("immunology", _COMPARISON_ROWS, ("j", "jS"),
           "Immunology: T, h and g versus the j and jS indices"),
    "T2": ("economics", _COMPARISON_ROWS, ("j", "jS"),
           "Economics: T, h and g versus the j and jS indices"),
    "T3": ("physics", _COMPARISON_ROWS, ("j", "jS"),
           "Physics: T, h and g versus the j and jS indices"),
    "T4": ("physics", _COMPARISON_ROWS, ("T", "h", "g"),
           "Physics: all five indices versus T, h and g"),
}


def apply_manipulation(record: CitationRecord, mode: ManipulationMode | str) -> CitationRecord:
    """Transform one record.

    DROP_SINGLETONS removes every publication with exactly one citation
    (shrinking the publication total).  DECREMENT_ALL lowers every count
    by one; publications falling to zero stay in the publication total but
    leave the cited list.
    """
    mode = ManipulationMode(mode)
    if mode is ManipulationMode.DROP_SINGLETONS:
        kept = tuple(c for c in record.counts if c != 1)
        removed = len(record.counts) - len(kept)
        return CitationRecord(record.researcher_id, kept,
                              record.total_publications - removed)
    kept = tuple(c - 1 for c in record.counts if c >= 2)
    return CitationRecord(record.researcher_id, kept, record.total_publications)


def _cohort_ranking(cohort: Sequence[CitationRecord], index_name: str) -> tuple[Ranking, tuple[float, ...]]:
    if index_name not in INDEX_FIELDS:
        raise ValueError(f"unknown index name: {index_name!r}")
    ids = tuple(r.researcher_id for r in cohort)
    values = tuple(index_profile(r).value(index_name) for r in cohort)
    return rank_descending(values, index_name=index_name, ids=ids), values


def _diff_rankings(before: Ranking, after: Ranking, index_name: str) -> RankChangeReport:
    changed = [i for i in range(len(before)) if before.ranks[i] != after.ranks[i]]
    unchanged = len(before) - len(changed)
    swaps = []
    moves = []
    used: set[int] = set()
    for pos, i in enumerate(changed):
        if i in used:
            continue
        partner = None
        for k in changed[pos + 1:]:
            if k in used:
                continue
            if before.ranks[i] == after.ranks[k] and before.ranks[k] == after.ranks[i]:
                partner = k
                break
        if partner is None:
            moves.append((before.ids[i], before.ranks[i], after.ranks[i]))
        else:
            used.add(partner)
            first, second = sorted((i, partner), key=lambda k: before.ranks[k])
            swaps.append((before.ids[first], before.ids[second],
                          (before.ranks[first], before.ranks[second])))
        used.add(i)
    return RankChangeReport(index_name=index_name, swaps=tuple(swaps),
                            moves=tuple(moves), unchanged_count=unchanged)


def rank_change_report(cohort_before: Sequence[CitationRecord],
                       cohort_after: Sequence[CitationRecord],
                       index_name: str) -> RankChangeReport:
    """Compare the index ranking of a cohort before and after a transform."""
    ids_before = tuple(r.researcher_id for r in cohort_before)
    ids_after = tuple(r.researcher_id for r in cohort_after)
    if ids_before != ids_after:
        raise ValueError("rosters differ between the two cohorts")
    before, _ = _cohort_ranking(cohort_before, index_name)
    after, _ = _cohort_ranking(cohort_after, index_name)
    return _diff_rankings(before, after, index_name)


def manipulation_report(cohort: Sequence[CitationRecord],
                        mode: ManipulationMode | str,
                        index_name: str = "j") -> ManipulationReport:
    """Apply a transform to a whole cohort and report the ranking effect."""
    mode = ManipulationMode(mode)
    transformed = [apply_manipulation(r, mode) for r in cohort]
    before, before_values = _cohort_ranking(cohort, index_name)
    after, after_values = _cohort_ranking(transformed, index_name)
    return ManipulationReport(
        index_name=index_name,
        mode=mode,
        ids=before.ids,
        before_values=before_values,
        after_values=after_values,
        before_ranks=before.ranks,
        after_ranks=after.ranks,
        change=_diff_rankings(before, after, index_name),
    )


def discipline_aggregate(cohort: Iterable[CitationRecord | HCorePartition],
                         discipline: str = "cohort") -> DisciplineAggregate:
    """Cohort h-core aggregate: mean H values and pooled G proportions.

    G values are computed from the pooled citation counts (sum of H_i over
    sum of T) rather than as plain means of per-researcher ratios; the
    pooled convention is what the reference discipline table uses.  Any
    member without citations is an error.
    """
    parts = [member if isinstance(member, HCorePartition) else h_core_partition(member)
             for member in cohort]
    if not parts:
        raise ValueError("empty cohort")
    n = len(parts)
    sum_h = [sum(p.h1 for p in parts), sum(p.h2 for p in parts),
             sum(p.h3 for p in parts), sum(p.h4 for p in parts)]
    sum_t = sum_h[0] + sum_h[3]
    return DisciplineAggregate(
        discipline=discipline,
        mean_h1=sum_h[0] / n, mean_h2=sum_h[1] / n,
        mean_h3=sum_h[2] / n, mean_h4=sum_h[3] / n,
        mean_g1=sum_h[0] / sum_t, mean_g2=sum_h[1] / sum_t,
        mean_g3=sum_h[2] / sum_t, mean_g4=sum_h[3] / sum_t,
    )


def _column_ranking(dataset: CohortDataset, index_name: str) -> Ranking:
    # Untied ranks for published-column reproduction: researchers with the
    # same column value are ordered by their h, then T.  The bundled
    # tables' reference coefficients were computed under this convention,
    # and fractional ranks drift up to 0.015 away from them on tied
    # columns.  (The last sort key only pins determinism.)
    values = dataset.column(index_name)
    h = dataset.column("h")
    t = dataset.column("T")
    order = sorted(range(len(values)), key=lambda i: (-values[i], -h[i], -t[i], i))
    ranks = [0.0] * len(values)
    for pos, i in enumerate(order, start=1):
        ranks[i] = float(pos)
    return Ranking(index_name, dataset.names, tuple(ranks))


def _normalise_table_id(table_id) -> str:
    if isinstance(table_id, int):
        table_id = f"T{table_id}"
    table_id = str(table_id).upper()
    if not table_id.startswith("T"):
        table_id = "T" + table_id
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table id: {table_id!r} (expected T1..T5)")
    return table_id


def _aggregate_from_index_rows(dataset: CohortDataset) -> DisciplineAggregate:
    # Published rows carry G1, h and T; the pooled proportions follow from
    # H1 = G1*T and H2 = h^2.  H means are not reconstructable to full
    # precision from the rounded G1 column, so they stay None.
    sum_t = sum(row.total_citations for row in dataset.rows)
    sum_h1 = sum(row.g1 * row.total_citations for row in dataset.rows)
    sum_h2 = sum(row.h ** 2 for row in dataset.rows)
    g1 = sum_h1 / sum_t
    g2 = sum_h2 / sum_t
    return DisciplineAggregate(
        discipline=dataset.discipline,
        mean_h1=None, mean_h2=None, mean_h3=None, mean_h4=None,
        mean_g1=g1, mean_g2=g2, mean_g3=g1 - g2, mean_g4=1.0 - g1,
    )


def reproduce_table(table_id, dataset=None) -> AssociationTable | AggregateTable:
    """Recompute one of the five reference tables from bundled cohort data.

    T1..T4 rank a discipline's researchers by each index column and emit
    the full pairwise association grid; T5 emits the pooled h-core
    proportions for all three disciplines.  ``dataset`` overrides the
    bundled data (a single cohort for T1..T4, a sequence for T5).
    """
    table_id = _normalise_table_id(table_id)
    if table_id == "T5":
        if dataset is None:
            dataset = [load_bundled_dataset(d) for d in ("immunology", "economics", "physics")]
        rows = []
        for cohort in dataset:
            if cohort.provenance != "precomputed":
                raise ValueError("table reproduction requires precomputed index columns")
            rows.append(_aggregate_from_index_rows(cohort))
        return AggregateTable(
            table_id="T5",
            caption="Citation share inside and outside the h-core, by discipline",
            rows=tuple(rows),
        )

    discipline, row_indices, col_indices, caption = _ASSOCIATION_TABLES[table_id]
    if dataset is None:
        dataset = load_bundled_dataset(discipline)
    if dataset.provenance != "precomputed":
        raise ValueError("table reproduction requires precomputed index columns")
    if dataset.discipline != discipline:
        raise ValueError(f"{table_id} expects the {discipline} cohort, got {dataset.discipline!r}")

    rankings = {
        name: _column_ranking(dataset, name)
        for name in sorted(set(row_indices) | set(col_indices))
    }
    reports = []
    for row in row_indices:
        for col in col_indices:
            if row == col:
                continue
            reports.append(associate(rankings[row], rankings[col]))
    return AssociationTable(
        table_id=table_id,
        caption=caption,
        row_indices=row_indices,
        col_indices=col_indices,
        reports=tuple(reports),
    )

"""Citation indicators for a single researcher's publication record.

Covers the classical indicator family (total citations T, h, g, A, R),
the square-root citation index j and its smoothed companion jS, and the
partition of a researcher's citations around the h-core (H1..H4, G1..G4).

All functions are pure and operate on immutable ``CitationRecord`` values,
so callers may evaluate them concurrently across researchers.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CitationRecord:
    """One researcher's citation counts, sorted in descending order.

    ``counts`` may include explicit zeros for uncited publications;
    ``total_publications`` additionally covers uncited papers that were
    never stored, so it is always >= len(counts).
    """

    researcher_id: str
    counts: tuple[int, ...]
    total_publications: int

    def __post_init__(self):
        try:
            counts = tuple(operator.index(c) for c in self.counts)
            total = operator.index(self.total_publications)
        except TypeError:
            raise ValueError("citation counts and totals must be integers") from None
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "total_publications", total)
        if any(c < 0 for c in counts):
            raise ValueError("citation counts must be non-negative")
        if any(a < b for a, b in zip(counts, counts[1:])):
            raise ValueError("counts must be non-increasing")
        if total < len(counts):
            raise ValueError("total_publications cannot be smaller than the stored counts")

    @classmethod
    def from_counts(cls, researcher_id: str, counts: Iterable[int],
                    total_publications: int | None = None) -> "CitationRecord":
        """Build a record from counts given in any order."""
        ordered = tuple(sorted(counts, reverse=True))
        if total_publications is None:
            total_publications = len(ordered)
        return cls(researcher_id, ordered, total_publications)

    @property
    def cited_counts(self) -> tuple[int, ...]:
        """The strictly positive counts, still descending."""
        return tuple(c for c in self.counts if c > 0)

    @property
    def cited_count(self) -> int:
        """Number of publications with at least one citation."""
        return sum(1 for c in self.counts if c > 0)


@dataclass(frozen=True)
class IndexProfile:
    """All indicators computed from one citation record.

    ``a`` is None for records with an empty h-core (h = 0), where the
    A-index is undefined.
    """

    total_citations: int
    h: int
    g: int
    a: Fraction | None
    r: float
    j: float
    js: float

    def value(self, index_name: str) -> float:
        """Numeric value of the indicator named by its usual label."""
        try:
            attr = INDEX_FIELDS[index_name]
        except KeyError:
            raise ValueError(f"unknown index name: {index_name!r}") from None
        value = getattr(self, attr)
        if value is None:
            raise ValueError("A is undefined for records with h = 0")
        return float(value)


INDEX_FIELDS = {
    "T": "total_citations",
    "h": "h",
    "g": "g",
    "A": "a",
    "R": "r",
    "j": "j",
    "jS": "js",
}

INDEX_NAMES = tuple(INDEX_FIELDS)


@dataclass(frozen=True)
class HCorePartition:
    """Split of a researcher's citations around the h-core.

    h1 is the number of citations to h-core papers, h2 = h**2 the minimum
    the h-index requires, h3 = h1 - h2 the excess, and h4 = T - h1 the
    citations to papers outside the core.  g1..g4 are the same quantities
    as proportions of T.
    """

    h1: int
    h2: int
    h3: int
    h4: int
    g1: float
    g2: float
    g3: float
    g4: float


def total_citations(record: CitationRecord) -> int:
    """Sum of all citation counts (0 for an empty record)."""
    return sum(record.counts)


def h_index(record: CitationRecord) -> int:
    """Largest rank h such that the paper at rank h has at least h citations."""
    h = 0
    for rank, c in enumerate(record.counts, start=1):
        if c >= rank:
            h = rank
        else:
            break
    return h


def g_index(record: CitationRecord) -> int:
    """Largest g such that the top g papers hold at least g**2 citations.

    Unbounded variant: fictitious zero-citation papers may be appended, so
    beyond the stored list the condition degenerates to T >= g**2 and g can
    reach isqrt(T) even for a short publication list.
    """
    best = 0
    running = 0
    for rank, c in enumerate(record.counts, start=1):
        running += c
        if running >= rank * rank:
            best = rank
    padded = math.isqrt(running)
    if padded >= len(record.counts):
        best = max(best, padded)
    return best


def a_index(record: CitationRecord) -> Fraction:
    """Mean number of citations per h-core paper, as an exact rational.

    Papers tied at exactly h citations are interchangeable; the top-h
    prefix of the descending sort is used, which never changes the value.
    """
    h = h_index(record)
    if h == 0:
        raise ValueError("empty h-core: A is undefined when h = 0")
    return Fraction(sum(record.counts[:h]), h)


def r_index(record: CitationRecord) -> float:
    """Square root of the citations held by the h-core (0 when h = 0)."""
    h = h_index(record)
    if h == 0:
        return 0.0
    return math.sqrt(sum(record.counts[:h]))


def j_index(record: CitationRecord) -> float:
    """Sum of the square roots of the counts of all cited publications."""
    return math.fsum(math.sqrt(c) for c in record.counts if c > 0)


def smooth(sequence: Sequence[float]) -> list[float]:
    """Prefix means of a non-increasing sequence.

    output[i] is the mean of sequence[0..i], so the first output value is
    the maximum of the input, the last is its arithmetic mean, and the
    output is itself non-increasing.
    """
    if any(a < b for a, b in zip(sequence, sequence[1:])):
        raise ValueError("sequence not sorted (must be non-increasing)")
    out = []
    running = 0
    for i, value in enumerate(sequence, start=1):
        running += value
        out.append(running / i)
    return out


def js_index(record: CitationRecord) -> float:
    """j-index computed on the smoothed (prefix-mean) cited counts.

    Only the strictly positive counts enter the smoothing, mirroring the
    summation bound of the j-index itself; smoothing a constant sequence
    is the identity, so uniform records have jS = j.
    """
    cited = record.cited_counts
    if not cited:
        return 0.0
    return math.fsum(math.sqrt(v) for v in smooth(cited))


def index_profile(record: CitationRecord) -> IndexProfile:
    """All seven indicators for one record, computed consistently."""
    h = h_index(record)
    return IndexProfile(
        total_citations=total_citations(record),
        h=h,
        g=g_index(record),
        a=a_index(record) if h > 0 else None,
        r=r_index(record),
        j=j_index(record),
        js=js_index(record),
    )


def h_core_partition(record: CitationRecord) -> HCorePartition:
    """Citation split inside/outside the h-core, with proportions of T."""
    total = total_citations(record)
    if total == 0:
        raise ValueError("no citations: partition proportions are undefined")
    h = h_index(record)
    h1 = sum(record.counts[:h])
    h2 = h * h
    h3 = h1 - h2
    h4 = total - h1
    return HCorePartition(
        h1=h1, h2=h2, h3=h3, h4=h4,
        g1=h1 / total, g2=h2 / total, g3=h3 / total, g4=h4 / total,
    )

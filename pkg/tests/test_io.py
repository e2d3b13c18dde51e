"""CSV ingestion, bundled datasets and report emission."""

import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bibindex import (
    AssociationTable,
    CitationRecord,
    CohortDataset,
    IndexRow,
    ParseError,
    PartitionReport,
    ProfileReport,
    discipline_aggregate,
    emit_report,
    h_core_partition,
    index_profile,
    load_bundled_dataset,
    parse_citations_csv,
    parse_citations_wide,
    records_to_csv,
    reproduce_table,
)
from bibindex.ranking import AssociationReport, Significance


def parse(text):
    return parse_citations_csv(io.StringIO(text))


# ---------------------------------------------------------------------------
# long-format parsing


def test_parse_groups_and_sorts():
    records = parse("researcher,citations\nA,10\nB,3\nA,8\n")
    assert [(r.researcher_id, r.counts) for r in records] == [("A", (10, 8)), ("B", (3,))]


def test_parse_negative_citation_names_line():
    with pytest.raises(ParseError, match="line 2"):
        parse("researcher,citations\nA,-1\n")


def test_parse_non_integer_citation_names_line():
    with pytest.raises(ParseError, match="line 3"):
        parse("researcher,citations\nA,5\nA,two\n")


def test_parse_empty_file():
    with pytest.raises(ParseError, match="no records"):
        parse("")
    with pytest.raises(ParseError, match="no records"):
        parse("researcher,citations\n")


def test_parse_duplicate_header():
    with pytest.raises(ParseError, match="duplicate header"):
        parse("researcher,citations\nA,5\nresearcher,citations\n")


def test_parse_bad_header():
    with pytest.raises(ParseError, match="line 1"):
        parse("name,cites\nA,5\n")


def test_parse_crlf_and_blank_lines():
    records = parse("researcher,citations\r\nA,10\r\n\r\nA,2\r\n")
    assert records[0].counts == (10, 2)


def test_parse_uncited_sidecar():
    records = parse("researcher,citations,uncited_publications\nA,10,4\nA,8,\nB,3,\n")
    a, b = records
    assert a.total_publications == 6  # two cited rows plus four uncited papers
    assert b.total_publications == 1


def test_parse_conflicting_sidecar():
    with pytest.raises(ParseError, match="conflicting"):
        parse("researcher,citations,uncited_publications\nA,10,4\nA,8,5\n")


def test_parse_ten_papers_with_ten_citations():
    rows = "\n".join(["beta,10"] * 10)
    records = parse("researcher,citations\n" + rows + "\n")
    assert index_profile(records[0]).h == 10


# ---------------------------------------------------------------------------
# wide-format parsing


def test_parse_wide():
    records = parse_citations_wide(io.StringIO("alice,5,1,12\nbob,2\ncarol\n"))
    assert [(r.researcher_id, r.counts) for r in records] == [
        ("alice", (12, 5, 1)), ("bob", (2,)), ("carol", ())]


def test_parse_wide_duplicate_name():
    with pytest.raises(ParseError, match="duplicate"):
        parse_citations_wide(io.StringIO("a,1\na,2\n"))


def test_parse_wide_bad_count():
    with pytest.raises(ParseError, match="line 2"):
        parse_citations_wide(io.StringIO("a,1\nb,x\n"))


# ---------------------------------------------------------------------------
# round trip

record_strategy = st.builds(
    lambda name, counts, extra: CitationRecord.from_counts(
        name, counts, total_publications=len(counts) + extra),
    st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc")),
            min_size=1, max_size=12),
    st.lists(st.integers(min_value=0, max_value=1000), min_size=1, max_size=20),
    st.integers(min_value=0, max_value=5),
)


@given(st.lists(record_strategy, min_size=1, max_size=6,
                unique_by=lambda r: r.researcher_id))
def test_serialize_parse_round_trip(records):
    text = records_to_csv(records)
    back = parse_citations_csv(io.StringIO(text))
    assert back == list(records)


def test_records_to_csv_rejects_rowless_records():
    with pytest.raises(ValueError, match="no stored counts"):
        records_to_csv([CitationRecord.from_counts("a", [], total_publications=3)])


# ---------------------------------------------------------------------------
# bundled datasets


def test_bundled_datasets_shape():
    for discipline in ("immunology", "economics", "physics"):
        dataset = load_bundled_dataset(discipline)
        assert dataset.provenance == "precomputed"
        assert len(dataset.rows) == 20
        assert len(set(dataset.names)) == 20


def test_bundled_immunology_top_row():
    rows = load_bundled_dataset("immunology").rows
    first = rows[0]
    assert first.name == "Marrack, Philippa C."
    assert first.total_citations == 45130
    assert first.h == 103
    assert first.g == 208


def test_bundled_economics_kahneman():
    rows = load_bundled_dataset("economics").rows
    kahneman = next(r for r in rows if r.name.startswith("Kahneman"))
    assert kahneman.j == 1373.0
    assert kahneman.js == 3197.0
    assert kahneman.g1 == 0.962


def test_bundled_physics_gurtu_and_utf8():
    rows = load_bundled_dataset("physics").rows
    gurtu = next(r for r in rows if r.name.startswith("Gurtu"))
    assert gurtu.h == 44
    assert gurtu.g == 163
    assert any(r.name == "Mättig, Peter" for r in rows)


def test_bundled_rows_satisfy_column_invariants():
    for discipline in ("immunology", "economics", "physics"):
        for row in load_bundled_dataset(discipline).rows:
            assert row.cited <= row.publications
            assert row.h <= row.g
            assert row.j <= row.js
            assert 0.0 <= row.g1 <= 1.0


def test_unknown_discipline():
    with pytest.raises(ValueError, match="unknown discipline"):
        load_bundled_dataset("astrology")


def test_cohort_validation_catches_bad_rows():
    bad = IndexRow("X", 10, 12, 100, 5, 7, 10.0, 20.0, 0.5)  # cited > pub
    with pytest.raises(ValueError, match="cited exceeds"):
        CohortDataset("d", "precomputed", (bad,))
    with pytest.raises(ValueError, match="unique"):
        CohortDataset("d", "raw", (CitationRecord.from_counts("a", [1]),
                                   CitationRecord.from_counts("a", [2])))


# ---------------------------------------------------------------------------
# emission


def test_emit_association_cell_formatting():
    report = AssociationReport(("j", "jS"), 0.9729, 0.93, 0.9621, Significance.SIG_01)
    table = AssociationTable("x", "caption", ("j",), ("jS",), (report,))
    plain = emit_report(table, "plain")
    assert "0.973(**)" in plain
    csv_text = emit_report(table, "csv")
    assert csv_text.splitlines()[1] == "j,jS,0.973,**,0.930,0.962"


def test_emit_empty_table_csv_is_header_only():
    table = AssociationTable("x", "caption", ("j",), ("j",), ())
    assert emit_report(table, "csv") == "left,right,spearman,significance,footrule,m_measure"


def test_emit_table5_csv_contains_physics_g1():
    text = emit_report(reproduce_table("T5"), "csv")
    assert "physics,0.714," in text


def test_emit_single_aggregate_csv():
    physics = next(agg for agg in reproduce_table("T5").rows
                   if agg.discipline == "physics")
    text = emit_report(physics, "csv")
    assert text.splitlines()[0] == "discipline,G1,G2,G3,G4"
    assert "physics,0.714," in text


def test_emit_profile_report_formats():
    record = CitationRecord.from_counts("alice", [10, 8, 5, 4, 3])
    report = ProfileReport(((record.researcher_id, index_profile(record)),))
    plain = emit_report(report, "plain")
    assert "alice" in plain and "6.75" in plain and "12.0" in plain
    line = json.loads(emit_report(report, "json-lines"))
    assert line["T"] == 30 and line["A"] == 6.75 and line["j"] == 12.0


def test_emit_profile_handles_missing_a():
    record = CitationRecord.from_counts("nobody", [0, 0])
    report = ProfileReport(((record.researcher_id, index_profile(record)),))
    assert "-" in emit_report(report, "plain")
    assert json.loads(emit_report(report, "json-lines"))["A"] is None


def test_emit_partition_report():
    records = [CitationRecord.from_counts("a", [10, 8, 5, 4, 3]),
               CitationRecord.from_counts("b", [4, 4])]
    rows = tuple((r.researcher_id, h_core_partition(r)) for r in records)
    report = PartitionReport(rows, discipline_aggregate(records))
    plain = emit_report(report, "plain")
    assert "27" in plain and "[mean]" in plain
    csv_lines = emit_report(report, "csv").splitlines()
    assert csv_lines[0].startswith("researcher,H1,H2,H3,H4")


def test_emit_unknown_format_and_type():
    table = reproduce_table("T5")
    with pytest.raises(ValueError, match="unknown format"):
        emit_report(table, "yaml")
    with pytest.raises(ValueError, match="cannot emit"):
        emit_report(object())


def test_emit_is_deterministic():
    a = emit_report(reproduce_table("T1"), "plain")
    b = emit_report(reproduce_table("T1"), "plain")
    assert a.encode() == b.encode()

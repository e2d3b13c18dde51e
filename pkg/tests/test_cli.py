"""End-to-end CLI behaviour: subcommands, formats and exit codes."""

import json

import pytest

from bibindex.cli import cli_dispatch

ALPHA_BETA = "researcher,citations\n" + "alpha,100\n" + "\n".join(["beta,10"] * 10) + "\n"

COHORT = """researcher,citations
ann,10
ann,8
ann,5
ann,1
ann,1
bob,9
bob,9
bob,2
cid,30
cid,1
"""


@pytest.fixture
def alpha_beta_file(tmp_path):
    path = tmp_path / "alpha_beta.csv"
    path.write_text(ALPHA_BETA, encoding="utf-8")
    return str(path)


@pytest.fixture
def cohort_file(tmp_path):
    path = tmp_path / "cohort.csv"
    path.write_text(COHORT, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    status = cli_dispatch(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_indices_alpha_beta(capsys, alpha_beta_file):
    status, out, _ = run(capsys, "indices", alpha_beta_file)
    assert status == 0
    lines = out.splitlines()
    alpha = next(line for line in lines if line.startswith("alpha"))
    beta = next(line for line in lines if line.startswith("beta"))
    # a single 100-citation paper: h = 1 but g = j = 10
    assert alpha.split() == ["alpha", "100", "1", "10", "100.00", "10.00", "10.0", "10.0"]
    assert beta.split()[2] == "10"  # beta's h


def test_indices_json_lines(capsys, alpha_beta_file):
    status, out, _ = run(capsys, "indices", alpha_beta_file, "--format", "json-lines")
    assert status == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert {row["researcher"]: row["h"] for row in rows} == {"alpha": 1, "beta": 10}


def test_indices_wide(capsys, tmp_path):
    path = tmp_path / "wide.csv"
    path.write_text("alpha,100\nbeta,10,10,10,10,10,10,10,10,10,10\n", encoding="utf-8")
    status, out, _ = run(capsys, "indices", str(path), "--wide")
    assert status == 0
    assert next(line for line in out.splitlines() if line.startswith("beta")).split()[2] == "10"


def test_compare_runs(capsys, cohort_file):
    status, out, _ = run(capsys, "compare", cohort_file, "--left", "T,h", "--right", "j,jS")
    assert status == 0
    assert "Spearman" in out and "(" in out


def test_compare_index_typo_is_usage_error(capsys, cohort_file):
    status, out, err = run(capsys, "compare", cohort_file, "--left", "T,hh", "--right", "j")
    assert status == 1
    assert "usage" in err.lower()
    assert out == ""


def test_unknown_flag_is_usage_error(capsys, cohort_file):
    status, _, err = run(capsys, "indices", cohort_file, "--bogus")
    assert status == 1
    assert "usage" in err.lower()


def test_unknown_subcommand_is_usage_error(capsys):
    status, _, err = run(capsys, "frobnicate")
    assert status == 1


def test_missing_file_is_data_error(capsys):
    status, _, err = run(capsys, "indices", "/nonexistent/file.csv")
    assert status == 2
    assert "error" in err.lower()


def test_malformed_csv_is_data_error(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("researcher,citations\nA,-1\n", encoding="utf-8")
    status, _, err = run(capsys, "indices", str(path))
    assert status == 2
    assert "line 2" in err


def test_hcore_outputs_partitions_and_aggregate(capsys, cohort_file):
    status, out, _ = run(capsys, "hcore", cohort_file)
    assert status == 0
    assert "[mean]" in out
    assert out.splitlines()[0].split()[:5] == ["researcher", "H1", "H2", "H3", "H4"]


def test_hcore_uncited_researcher_is_data_error(capsys, tmp_path):
    path = tmp_path / "zero.csv"
    path.write_text("researcher,citations\nA,0\n", encoding="utf-8")
    status, _, err = run(capsys, "hcore", str(path))
    assert status == 2
    assert "no citations" in err


def test_manipulate_drop_singletons(capsys, cohort_file):
    status, out, _ = run(capsys, "manipulate", cohort_file, "--mode", "drop-singletons")
    assert status == 0
    assert "before/after drop_singletons" in out
    assert "unchanged ranks" in out


def test_manipulate_decrement_csv(capsys, cohort_file):
    status, out, _ = run(capsys, "manipulate", cohort_file, "--mode", "decrement",
                         "--format", "csv")
    assert status == 0
    assert out.splitlines()[0] == "researcher,j_before,rank_before,j_after,rank_after"


def test_manipulate_requires_mode(capsys, cohort_file):
    status, _, _ = run(capsys, "manipulate", cohort_file)
    assert status == 1


def test_reproduce_table5_g1_cells(capsys):
    status, out, _ = run(capsys, "reproduce", "--table", "5")
    assert status == 0
    assert "0.798" in out and "0.922" in out and "0.714" in out


def test_reproduce_table1_cell(capsys):
    status, out, _ = run(capsys, "reproduce", "--table", "1")
    assert status == 0
    assert "0.973(**)" in out


def test_reproduce_rejects_table_out_of_range(capsys):
    status, _, _ = run(capsys, "reproduce", "--table", "7")
    assert status == 1


def test_output_is_deterministic(capsys, cohort_file):
    _, first, _ = run(capsys, "compare", cohort_file)
    _, second, _ = run(capsys, "compare", cohort_file)
    assert first.encode() == second.encode()


def test_help_exits_zero(capsys):
    status, out, _ = run(capsys, "--help")
    assert status == 0
    assert "indices" in out

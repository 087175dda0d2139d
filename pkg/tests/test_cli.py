import io
import json
import math

import numpy as np
import pytest

from pcrank import cli, core

E = math.e

CONSISTENT_124 = json.dumps({"n": 3, "upper": [2.0, 4.0, 2.0]})
CEX1 = json.dumps({"n": 3, "upper": [E, 1 / E, E]})
CEX3 = json.dumps({"n": 3, "upper": [math.exp(1.0), math.exp(-9.0), math.exp(-4.0)]})
TRIAD_EXAMPLE = json.dumps(
    {"n": 3, "entries": [[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]]}
)


def run_cli(args, stdin_text, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = cli.run(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(args, stdin_text, capsys, monkeypatch):
    code, out, err = run_cli(args + ["--output", "json"], stdin_text, capsys, monkeypatch)
    assert code == 0, err
    return json.loads(out)


def test_check_consistent(capsys, monkeypatch):
    result = run_json(["check"], CONSISTENT_124, capsys, monkeypatch)
    assert result["consistent"] is True
    assert result["r_condition"] is True
    assert result["admissible"] is True
    assert result["koczkodaj_index"] < 1e-12
    assert result["smooth_index"] < 1e-12


def test_check_counterexample(capsys, monkeypatch):
    result = run_json(["check"], CEX1, capsys, monkeypatch)
    assert result["consistent"] is False
    assert result["max_triad_deviation"] == pytest.approx(3.0, rel=1e-9)
    assert result["r_condition"] is True
    assert result["admissible"] is False


def test_check_single_indicator(capsys, monkeypatch):
    result = run_json(["check", "--indicator", "smooth"], TRIAD_EXAMPLE, capsys, monkeypatch)
    assert "koczkodaj_index" not in result
    assert result["smooth_index"] == pytest.approx(1 - math.exp(-math.log(2) ** 2), rel=1e-9)


def test_check_text_output(capsys, monkeypatch):
    code, out, _ = run_cli(["check"], CONSISTENT_124, capsys, monkeypatch)
    assert code == 0
    assert "consistent: True" in out


def test_rank_consistent(capsys, monkeypatch):
    result = run_json(["rank"], CONSISTENT_124, capsys, monkeypatch)
    assert result["admissible"] is True
    assert result["order"] == [2, 1, 0]  # a_ij = w_i/w_j: weights (4, 2, 1)
    assert np.allclose(result["weights"], [4.0, 2.0, 1.0])


def test_rank_inadmissible_reports_none(capsys, monkeypatch):
    result = run_json(["rank"], CEX1, capsys, monkeypatch)
    assert result["admissible"] is False
    assert result["order"] is None
    assert result["weights"] is None
    # logs (1, -1, 1): entrywise signs of the log matrix
    assert result["characteristic"] == [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]


def test_rank_inconsistent_admissible(capsys, monkeypatch):
    result = run_json(["rank"], CEX3, capsys, monkeypatch)
    assert result["admissible"] is True
    assert result["order"] == [1, 0, 2]
    assert result["weights"] is None


def test_consistencize_output_matrix(capsys, monkeypatch):
    result = run_json(["consistencize"], CEX3, capsys, monkeypatch)
    a = core.parse_matrix(json.dumps(result), "json")
    assert np.allclose(np.log(a.upper()), [-1.0, -7.0, -6.0], atol=1e-9)


def test_consistencize_with_report(capsys, monkeypatch):
    result = run_json(["consistencize", "--report"], CEX3, capsys, monkeypatch)
    assert result["report"]["r_before"] is True
    assert result["report"]["r_after"] is True
    assert result["report"]["locus_changed"] is True


def test_minimize_converges(capsys, monkeypatch):
    result = run_json(["minimize"], TRIAD_EXAMPLE, capsys, monkeypatch)
    assert result["summary"]["converged"] is True
    assert result["summary"]["termination"] == "PhiBelowTol"
    a = core.parse_matrix(json.dumps(result["matrix"]), "json")
    logs = np.log(a.upper())  # lexicographic pairs (0,1), (0,2), (1,2)
    assert abs(logs[0] + logs[2] - logs[1]) < 1e-6


def test_minimize_trace_file(tmp_path, capsys, monkeypatch):
    trace = tmp_path / "trace.jsonl"
    result = run_json(["minimize", "--trace", str(trace)], TRIAD_EXAMPLE, capsys, monkeypatch)
    lines = [json.loads(line) for line in trace.read_text().splitlines()]
    assert len(lines) == result["summary"]["iterations"] + 1
    assert lines[0]["iter"] == 0
    phis = [row["phi"] for row in lines]
    assert all(b <= a for a, b in zip(phis, phis[1:]))


def test_loci(capsys, monkeypatch):
    result = run_json(["loci", "--n", "4"], "", capsys, monkeypatch)
    assert result == {"n": 4, "total": 64, "admissible": 24}


def test_simulate(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["simulate", "--n", "3", "--trials", "3", "--seed", "0"],
        "", capsys, monkeypatch,
    )
    assert code == 0
    stats = json.loads(out)
    assert stats["r_lost_count"] == 2
    assert stats["locus_changed_count"] == 1


def test_confspace_demo(capsys, monkeypatch):
    result = run_json(
        ["confspace-demo", "--epsilon", "1e-2", "--samples", "20000"],
        "", capsys, monkeypatch,
    )
    row = result["entries"][0]
    assert row["closed_form"] == pytest.approx(4.0 * 99.0)
    assert row["length"] == pytest.approx(row["closed_form"], rel=0.02)


def test_csv_input(capsys, monkeypatch):
    csv_text = core.format_matrix(core.pc_from_weights([1, 2, 4]), "csv")
    result = run_json(["check", "--format", "csv"], csv_text, capsys, monkeypatch)
    assert result["consistent"] is True


def test_bad_matrix_exits_1(capsys, monkeypatch):
    bad = json.dumps({"n": 3, "entries": [[1, 2, 4], [0.6, 1, 2], [0.25, 0.5, 1]]})
    code, out, err = run_cli(["check"], bad, capsys, monkeypatch)
    assert code == 1
    assert "error" in err


def test_bad_matrix_json_error(capsys, monkeypatch):
    bad = json.dumps({"n": 3, "entries": [[1, 2, 4], [0.6, 1, 2], [0.25, 0.5, 1]]})
    code, out, err = run_cli(["check", "--output", "json"], bad, capsys, monkeypatch)
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "NonReciprocal"


def test_loci_out_of_range_exits_1(capsys, monkeypatch):
    code, _, err = run_cli(["loci", "--n", "9"], "", capsys, monkeypatch)
    assert code == 1
    assert "error" in err


def test_usage_error_exits_2(capsys, monkeypatch):
    with pytest.raises(SystemExit) as exc:
        run_cli(["no-such-command"], "", capsys, monkeypatch)
    assert exc.value.code == 2


def test_file_input(tmp_path, capsys, monkeypatch):
    path = tmp_path / "m.json"
    path.write_text(CONSISTENT_124)
    result = run_json(["check", "--input", str(path)], "", capsys, monkeypatch)
    assert result["consistent"] is True

import json
from pathlib import Path

import pytest

from sodcert.cli import run_command

GOLDEN = Path(__file__).parent / "golden"


def _run(capsys, *argv):
    status = run_command(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


# ---------------------------------------------------------------------------
# Golden outputs
# ---------------------------------------------------------------------------


def test_table_matches_golden(capsys):
    status, out, _ = _run(capsys, "table")
    assert status == 0
    assert out == (GOLDEN / "table.txt").read_text()


def test_trace_matches_golden(capsys):
    status, out, _ = _run(capsys, "trace")
    assert status == 0
    assert out == (GOLDEN / "trace.txt").read_text()


def test_machine_output_is_byte_stable(capsys):
    _, first, _ = _run(capsys, "--format", "machine", "trace")
    _, second, _ = _run(capsys, "--format", "machine", "trace")
    assert first == second
    for line in first.splitlines():
        record = json.loads(line)
        assert json.dumps(record, sort_keys=True) == line


def test_table_machine_records(capsys):
    status, out, _ = _run(capsys, "--format", "machine", "table")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert json.loads(lines[0]) == {
        "type": "table-row", "i": 0, "j": 0, "a": 0, "b": 0, "c": 0,
    }
    assert json.loads(lines[1]) == {
        "type": "table-row", "i": 0, "j": 1, "a": 1, "b": -2, "c": -1,
    }


# ---------------------------------------------------------------------------
# Output redirection
# ---------------------------------------------------------------------------


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "table.txt"
    status, out, _ = _run(capsys, "--output", str(target), "table")
    assert status == 0
    assert out == ""
    assert target.read_text() == (GOLDEN / "table.txt").read_text()


def test_relative_output_resolves_against_env_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SODCERT_OUTPUT_DIR", str(tmp_path))
    status, _, _ = _run(capsys, "--output", "reports/table.txt", "table")
    assert status == 0
    assert (tmp_path / "reports" / "table.txt").exists()


def test_trace_emit_writes_machine_records(tmp_path, capsys):
    emitted = tmp_path / "trace.jsonl"
    status, _, _ = _run(capsys, "trace", "--emit", str(emitted))
    assert status == 0
    _, machine, _ = _run(capsys, "--format", "machine", "trace")
    assert emitted.read_text() == machine


# ---------------------------------------------------------------------------
# Validation failures and usage errors
# ---------------------------------------------------------------------------


def test_injected_fault_fails_validation(capsys):
    status, _, err = _run(capsys, "trace", "--inject-fault")
    assert status == 1
    assert "replay mismatch" in err


def test_unknown_subcommand(capsys):
    assert _run(capsys, "frobnicate")[0] == 2


def test_missing_subcommand(capsys):
    assert _run(capsys)[0] == 2


def test_help_exits_zero(capsys):
    assert _run(capsys, "--help")[0] == 0


def test_malformed_term(capsys):
    status, _, err = _run(capsys, "ext", "--from", "Y:1", "--to", "Y:0,0,0")
    assert status == 2
    assert "Y:a,b,c or M:i,j" in err


def test_wrong_weight_count(capsys):
    status, _, err = _run(
        capsys, "cohomology", "--space", "p2", "--weights", "0,1", "--degree", "1"
    )
    assert status == 2
    assert "needs 3 weights" in err


def test_malformed_hypersurface(capsys):
    status, _, _ = _run(
        capsys, "cohomology", "--space", "p2", "--weights", "0,0,1",
        "--degree", "0", "--hypersurface", "3",
    )
    assert status == 2


def test_missing_config_file(capsys, tmp_path):
    status, _, err = _run(capsys, "--config", str(tmp_path / "nope.json"), "table")
    assert status == 2
    assert "error:" in err


def test_config_with_float_coefficient(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"F0": [[3, 0, 0, 0.5]]}))
    status, _, err = _run(capsys, "--config", str(bad), "table")
    assert status == 2
    assert "float" in err


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


def test_ext_text_reports(capsys):
    assert _run(capsys, "ext", "--from", "M:0,0", "--to", "M:1,1")[1] == "0 in all degrees\n"
    assert _run(capsys, "ext", "--from", "Y:0,0,0", "--to", "Y:0,1,1")[1] == "Ext^0: 9\n"
    assert _run(capsys, "ext", "--from", "Y:2,0,0", "--to", "Y:0,0,0")[1] == "indeterminate\n"


def test_ext_machine_record(capsys):
    _, out, _ = _run(
        capsys, "--format", "machine", "ext", "--from", "M:0,0", "--to", "M:1,2"
    )
    assert json.loads(out) == {
        "type": "ext",
        "from": "O_M(0)(x)chi_0",
        "to": "O_M(1)(x)chi_2",
        "profile": {"0": 3},
    }


def test_cohomology_text(capsys):
    _, out, _ = _run(
        capsys, "cohomology", "--space", "p1", "--weights", "0,1", "--degree", "-3"
    )
    assert out == "H^1: dim 2 = 1*chi_1 + 1*chi_2\n"
    _, out, _ = _run(
        capsys, "cohomology", "--space", "p1", "--weights", "0,1", "--degree", "-1"
    )
    assert out == "all cohomology vanishes\n"


def test_cohomology_on_a_hypersurface(capsys):
    _, out, _ = _run(
        capsys, "cohomology", "--space", "p2", "--weights", "0,0,1",
        "--degree", "0", "--hypersurface", "3,0",
    )
    assert out == "H^0: dim 1 = 1*chi_0\nH^1: dim 1 = 1*chi_2\n"


def test_cohomology_machine(capsys):
    _, out, _ = _run(
        capsys, "--format", "machine", "cohomology",
        "--space", "p2", "--weights", "0,0,1", "--degree", "2",
    )
    assert json.loads(out) == {
        "type": "cohomology",
        "space": 2,
        "weights": [0, 0, 1],
        "degree": 2,
        "cohomological_degree": 0,
        "total": 6,
        "multiplicities": {"0": 3, "1": 2, "2": 1},
    }


# ---------------------------------------------------------------------------
# Charts
# ---------------------------------------------------------------------------


def test_charts_listing(capsys):
    status, out, _ = _run(capsys, "charts")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 18
    assert "chart 0,0,3: free (x1,x2,x3,y4,y5) weights (0,0,1,0,0)" in lines
    assert "chart 3,0,3: free (x0,y1,y2,y4,y5) weights (2,0,0,0,0)" in lines


def test_charts_iso_check(capsys):
    status, out, _ = _run(capsys, "charts", "--check-iso")
    assert status == 0
    assert "isomorphism checks: 18/18 charts match" in out


def test_charts_smoothness(capsys):
    status, out, _ = _run(capsys, "charts", "--smoothness", "--primes", "5")
    assert status == 0
    assert "smoothness sweep over F_5: 18 charts, 0 singular point(s)" in out


def test_charts_smoothness_rejects_prime_three(capsys):
    status, _, err = _run(capsys, "charts", "--smoothness", "--primes", "3")
    assert status == 2
    assert "group order" in err


def test_degenerate_config_is_seen_singular(capsys, tmp_path):
    cfg = tmp_path / "degenerate.json"
    cfg.write_text(json.dumps({
        "F0": [[0, 3, 0, 1]],
        "F1": [[0, 3, 0, 1]],
        "primes": [5],
    }))
    status, out, _ = _run(capsys, "--config", str(cfg), "charts", "--smoothness")
    assert status == 1
    assert "singular point" in out

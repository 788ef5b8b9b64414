"""CLI tests: every subcommand, output formats, exit codes."""

from __future__ import annotations

import json

import pytest

from gmccodes import cli, presets

FAM1 = ["--q", "8", "--lambda", "7", "--tau", "3", "--rho", "9", "--sigma", "2", "--ny", "2"]
Q7 = ["--q", "7", "--lambda", "3", "--tau", "4", "--rho", "8", "--sigma", "2"]


def run(args, capsys):
    rc = cli.main(args)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_construct_table2_row(capsys, tmp_path):
    out_path = tmp_path / "m.csv"
    rc, out, _ = run(["construct", *FAM1, "--t", "10", "--out", str(out_path)], capsys)
    assert rc == 0
    assert "n = 84" in out and "k = 58" in out
    assert "|delta_t| = 13" in out
    assert "guaranteed (t <= T* = 10)" in out
    lines = out_path.read_text().splitlines()
    assert lines[0] == "n,k,q" and lines[1] == "84,13,8"
    assert len(lines) == 15


def test_construct_rejects_t1(capsys):
    rc, _, err = run(["construct", *FAM1, "--t", "1"], capsys)
    assert rc == 2
    assert "t=1" in err


def test_construct_q7_ny3(capsys):
    rc, out, _ = run(["construct", *Q7, "--ny", "3", "--t", "5"], capsys)
    assert rc == 0
    assert "n = 72" in out and "k = 58" in out


def test_construct_inadmissible_names_constraint(capsys):
    rc, _, err = run(
        ["construct", "--q", "8", "--lambda", "5", "--tau", "3", "--rho", "9",
         "--sigma", "2", "--ny", "2", "--t", "4"], capsys)
    assert rc == 2
    assert "divisor of q-1" in err


def test_verify_self_orthogonal(capsys):
    rc, out, _ = run(["verify", "--q", "8", "--lambda", "7", "--tau", "3", "--rho", "9",
                      "--sigma", "2", "--ny", "3", "--t", "15"], capsys)
    assert rc == 0 and "self-orthogonal: True" in out
    rc, out, _ = run(["verify", "--q", "8", "--lambda", "7", "--tau", "3", "--rho", "9",
                      "--sigma", "2", "--ny", "3", "--t", "16"], capsys)
    assert rc == 1 and "self-orthogonal: False" in out


def test_verify_dual_distance(capsys):
    rc, out, _ = run(["verify", *Q7, "--ny", "2", "--t", "3", "--dual-distance", "5"], capsys)
    assert rc == 0
    assert "dual distance: 3" in out


def test_verify_with_py_override(capsys):
    # self-orthogonality is independent of which subfield points are chosen
    rc, out, _ = run(["verify", *Q7, "--ny", "3", "--t", "5", "--py", "2,4,6"], capsys)
    assert rc == 0 and "self-orthogonal: True" in out
    rc, _, err = run(["verify", *Q7, "--ny", "3", "--t", "5", "--py", "2,4,9"], capsys)
    assert rc == 2 and "out of range" in err


def test_verify_budget_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("GMC_RANK_TEST_BUDGET", "10")
    rc, out, _ = run(["verify", *Q7, "--ny", "2", "--t", "3", "--dual-distance", "5"], capsys)
    assert rc == 3
    assert "budget exceeded" in out


def test_verify_min_distance(capsys, monkeypatch):
    rc, out, _ = run(["verify", *Q7, "--ny", "2", "--t", "3", "--min-distance"], capsys)
    assert rc == 0
    assert "minimum distance: 24 (footprint bound 24)" in out
    monkeypatch.setenv("GMC_CODEWORD_BUDGET", "100")
    rc, out, _ = run(["verify", *Q7, "--ny", "2", "--t", "3", "--min-distance"], capsys)
    assert rc == 3 and "budget exceeded" in out


def test_tstar_with_oracle(capsys):
    rc, out, _ = run(["tstar", *FAM1, "--oracle"], capsys)
    assert rc == 0
    assert "T* (closed form) = 10" in out
    assert "witness: X^4Y^1, X^7Y^0" in out
    assert "T* (exhaustive scan) = 10" in out


def test_tstar_ny3_witness(capsys):
    rc, out, _ = run(["tstar", "--q", "8", "--lambda", "7", "--tau", "3", "--rho", "9",
                      "--sigma", "2", "--ny", "3"], capsys)
    assert rc == 0
    assert "T* (closed form) = 11" in out
    assert "X^1Y^2, X^10Y^0" in out


def test_tstar_mismatch_exits_nonzero(capsys, monkeypatch):
    monkeypatch.setattr(cli.oracle, "tstar_bruteforce", lambda *a, **k: 99)
    rc, _, err = run(["tstar", *FAM1, "--oracle"], capsys)
    assert rc == 1 and "MISMATCH" in err


def test_tstar_excluded_regime(capsys):
    rc, out, _ = run(["tstar", "--q", "11", "--lambda", "5", "--tau", "3", "--rho", "2",
                      "--sigma", "2", "--ny", "2", "--oracle"], capsys)
    assert rc == 0
    assert "not available (excluded)" in out
    assert "T* (exhaustive scan)" in out


def test_family_output(capsys):
    rc, out, _ = run(["family", "--name", "fam3", "--q", "7"], capsys)
    assert rc == 0
    assert "[[72,70,2]]_7" in out and "[[72,56,6]]_7" in out
    rc, _, err = run(["family", "--name", "fam1", "--q", "7"], capsys)
    assert rc == 2 and "fam1" in err


def test_qgv_command(capsys):
    rc, out, _ = run(["qgv", "--q", "8", "--n", "84", "--k", "66", "--d", "7"], capsys)
    assert rc == 0 and "beats: yes" in out
    rc, out, _ = run(["qgv", "--q", "7", "--n", "72", "--k", "62", "--d", "4"], capsys)
    assert rc == 0 and "beats: no" in out


@pytest.mark.parametrize("preset", sorted(presets.PRESETS))
def test_table_presets_pass(preset, capsys):
    rc, out, _ = run(["table", "--preset", preset, "--format", "csv"], capsys)
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("q,lambda,tau,rho,sigma,ny,d,n,k")
    assert len(lines) == 1 + len(presets.PRESETS[preset])


def test_table5_csv_is_42_lines(capsys):
    rc, out, _ = run(["table", "--preset", "table5", "--format", "csv"], capsys)
    assert rc == 0
    assert len(out.strip().splitlines()) == 42


def test_table_json_schema(capsys):
    rc, out, _ = run(["table", "--preset", "table3", "--format", "json"], capsys)
    assert rc == 0
    payload = json.loads(out)
    assert payload["schema"] == 1 and payload["preset"] == "table3"
    row = payload["rows"][0]
    for key in ("schema", "q", "lambda", "tau", "rho", "sigma", "ny", "t", "n", "k",
                "d", "defect", "beats_qgv", "self_orthogonal_verified"):
        assert key in row
    assert row["n"] == 180 and row["k"] == 178 and row["beats_qgv"] is True


def test_table_markdown(capsys):
    rc, out, _ = run(["table", "--preset", "table2"], capsys)
    assert rc == 0
    assert "| [[84,58,10]]_8 |" in out


def test_table_verify_small_preset(capsys):
    rc, out, _ = run(["table", "--preset", "table4", "--format", "json", "--verify"], capsys)
    assert rc == 0
    payload = json.loads(out)
    assert all(r["self_orthogonal_verified"] is True for r in payload["rows"])


def test_table_verify_comparisons(capsys):
    # ad-hoc configs, several past the closed form; also exercises GF(13²)
    # and GF(23²) matrix construction
    rc, out, _ = run(["table", "--preset", "comparisons", "--format", "json", "--verify"], capsys)
    assert rc == 0
    payload = json.loads(out)
    assert all(r["self_orthogonal_verified"] is True for r in payload["rows"])


def test_table_mismatch_exits_nonzero(capsys, monkeypatch):
    bad = presets.TableRow(8, 7, 3, 9, 2, 2, 2, 84, 80, True, "")
    monkeypatch.setitem(presets.PRESETS, "table2", (bad,))
    rc, _, err = run(["table", "--preset", "table2", "--format", "csv"], capsys)
    assert rc == 1 and "TABLE MISMATCH" in err


def test_outputs_are_deterministic(capsys):
    # identical flags must produce identical data output (timings are the
    # only varying channel and construct/verify keep them on separate lines)
    first = run(["table", "--preset", "table3", "--format", "json"], capsys)
    second = run(["table", "--preset", "table3", "--format", "json"], capsys)
    assert first == second
    a = run(["tstar", *FAM1, "--oracle"], capsys)
    b = run(["tstar", *FAM1, "--oracle"], capsys)
    assert a == b


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0

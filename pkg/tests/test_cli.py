"""CLI surface: table layout, number formatting, exit codes, determinism."""

import pytest

from qposc import ConsistencyError
from qposc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def data_rows(out):
    return [line for line in out.splitlines() if not line.startswith("#")][1:]


class TestCurveCommand:
    def test_hundred_samples(self, capsys):
        code, out, _ = run_cli(capsys, "curve", "--levels", "0,2", "--samples", "100")
        assert code == 0
        rows = data_rows(out)
        assert len(rows) == 100
        q0, p0, _ = rows[0].split(",")
        assert q0 == "0"
        assert float(p0) == pytest.approx(0.618034, abs=1e-6)

    def test_neighbor_endpoint_rows(self, capsys):
        code, out, _ = run_cli(capsys, "curve", "--levels", "1,2", "--samples", "2")
        assert code == 0
        assert data_rows(out) == ["0,1,-0.5", "1,0,-2"]

    def test_all_seven_reference_curves_emit(self, capsys):
        for levels in ("0,2", "0,3", "0,4", "0,6", "1,2", "2,3", "4,5"):
            code, out, _ = run_cli(capsys, "curve", "--levels", levels,
                                   "--samples", "20")
            assert code == 0
            assert len(data_rows(out)) == 20

    def test_invalid_condition_is_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "curve", "--levels", "0,0")
        assert code == 2
        assert "domain error" in err

    def test_malformed_condition_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "curve", "--levels", "0;2")
        assert code == 1
        assert err

    def test_missing_flag_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            main(["curve"])
        assert exc.value.code == 1

    def test_consistency_error_exits_three(self, capsys, monkeypatch):
        def boom(cond, n):
            raise ConsistencyError("forced")
        monkeypatch.setattr("qposc.cli.trace_curve", boom)
        code, _, err = run_cli(capsys, "curve", "--levels", "0,2")
        assert code == 3
        assert "consistency error" in err


class TestSolveCommand:
    def test_diagonal_root(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--levels", "0,2", "--family", "power:1")
        assert code == 0
        row = data_rows(out)[0].split(",")
        assert row[0] == "0.333333333333"
        assert row[1] == "0.333333333333"
        assert float(row[2]) == pytest.approx(0.5, abs=1e-12)
        assert float(row[3]) == pytest.approx(0.5, abs=1e-12)

    def test_non_admitting_family_emits_none(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--levels", "0,2", "--family", "log:6.05")
        assert code == 0
        assert data_rows(out) == ["none"]

    def test_bad_family_grammar_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "solve", "--levels", "0,2", "--family", "poly:2")
        assert code == 1
        assert "family" in err

    def test_invalid_family_parameter_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "solve", "--levels", "0,2", "--family", "log:-1")
        assert code == 2


class TestSpectrumCommand:
    def test_row_zero_and_count(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--family", "exp:0.5",
                               "--q", "0.4", "--n-max", "40")
        assert code == 0
        rows = data_rows(out)
        assert len(rows) == 41
        assert rows[0] == "0,0.5"

    def test_undeformed_levels_exact(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--family", "power:1",
                               "--q", "1", "--n-max", "5")
        assert code == 0
        rows = data_rows(out)
        assert rows == [f"{n},{n + 0.5:.12g}" for n in range(6)]
        assert "# n0=none" in out

    def test_peak_annotation(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--family", "exp:0.5",
                               "--q", "0.01", "--n-max", "10")
        assert code == 0
        assert out.rstrip().endswith("# n0=1")

    def test_out_of_domain_q_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--family", "log:1",
                               "--q", "0.1", "--n-max", "10")
        assert code == 2


class TestInterceptCommand:
    def test_identity_curve(self, capsys):
        code, out, _ = run_cli(capsys, "intercept", "--family", "power:0",
                               "--samples", "11")
        assert code == 0
        assert "# form: exact" in out
        for row in data_rows(out):
            q, lam = row.split(",")
            assert q == lam

    def test_final_row_is_unity(self, capsys):
        code, out, _ = run_cli(capsys, "intercept", "--family", "exp:0.5",
                               "--samples", "2")
        assert code == 0
        assert data_rows(out)[-1] == "1,1"

    def test_formula_value_at_nine_tenths(self, capsys):
        code, out, _ = run_cli(capsys, "intercept", "--family", "exp:0.5",
                               "--samples", "11")
        assert code == 0
        row = [r for r in data_rows(out) if r.startswith("0.9,")]
        assert row and row[0].split(",")[1] == "0.851229424501"

    def test_extrapolated_families_labeled(self, capsys):
        _, out, _ = run_cli(capsys, "intercept", "--family", "log:2", "--samples", "3")
        assert "# form: extrapolated" in out


class TestFockCommand:
    def test_small_residuals(self, capsys):
        code, out, _ = run_cli(capsys, "fock", "--dim", "8", "--q", "0.5", "--p", "0.25")
        assert code == 0
        rows = [row.split(",") for row in data_rows(out)]
        assert [r[0] for r in rows] == ["1", "2"]
        assert all(float(r[1]) < 1e-12 for r in rows)

    def test_minimal_undeformed(self, capsys):
        code, out, _ = run_cli(capsys, "fock", "--dim", "2", "--q", "1", "--p", "1")
        assert code == 0
        assert data_rows(out) == ["1,0", "2,0"]

    def test_dimension_below_minimum(self, capsys):
        code, _, err = run_cli(capsys, "fock", "--dim", "1", "--q", "0.5", "--p", "0.5")
        assert code == 2


class TestOutputContract:
    def test_repeat_runs_byte_identical(self, capsys):
        args = ("curve", "--levels", "0,3", "--samples", "25")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_file_output_matches_stdout(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        _, out, _ = run_cli(capsys, "intercept", "--family", "exp:0.5", "--samples", "7")
        code = main(["intercept", "--family", "exp:0.5", "--samples", "7",
                     "--out", str(target)])
        capsys.readouterr()
        assert code == 0
        blob = target.read_bytes()
        assert blob == out.encode()
        assert b"\r" not in blob

    def test_numbers_round_trip_at_twelve_digits(self, capsys):
        _, out, _ = run_cli(capsys, "curve", "--levels", "2,3", "--samples", "15")
        for row in data_rows(out):
            for token in row.split(","):
                value = float(token)
                assert f"{value:.12g}" == token

    def test_comment_lines_lead_with_hash(self, capsys):
        _, out, _ = run_cli(capsys, "spectrum", "--family", "exp:0.5",
                            "--q", "0.4", "--n-max", "5")
        lines = out.splitlines()
        assert lines[0].startswith("# qposc spectrum")
        assert any(line.startswith("# version:") for line in lines)

import json

import numpy as np
import pytest

import fcont.acceptance as acceptance
from fcont.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStencilCommand:
    def test_known_weights(self, capsys):
        code, out, _ = run(capsys, "stencil", "--m", "1", "--p", "2")
        assert code == 0
        assert out.strip() == "-3/2, 2, -1/2"
        code, out, _ = run(capsys, "stencil", "--m", "1", "--p", "1")
        assert out.strip() == "-1, 1"
        code, out, _ = run(capsys, "stencil", "--m", "2", "--p", "2")
        assert out.strip() == "2, -5, 4, -1"

    def test_unsupported_stencil(self, capsys):
        code, _, err = run(capsys, "stencil", "--m", "40", "--p", "30")
        assert code == 1
        assert "unsupported" in err


class TestContinueCommand:
    def test_triangle_profile(self, capsys):
        code, out, _ = run(capsys, "continue", "--fn", "x", "--r", "0", "--n", "8")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,f"
        assert len(lines) == 18  # header + 2n+1 points
        first = [float(v) for v in lines[1].split(",")]
        assert first == [-1.0, 1.0]

    def test_cubic_oracle_value(self, capsys):
        # left half of the r=1 continuation of f(x)=x traces 4x^3+6x^2+x
        code, out, _ = run(capsys, "continue", "--fn", "x", "--r", "1",
                           "--p", "2", "--n", "64")
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        value = {float(x): float(fx) for x, fx in rows}
        assert value[-0.5] == pytest.approx(0.5, abs=1e-12)
        x = -0.25
        assert value[x] == pytest.approx(4 * x ** 3 + 6 * x ** 2 + x, abs=1e-12)

    def test_constant_profile(self, capsys):
        code, out, _ = run(capsys, "continue", "--fn", "const", "--r", "2",
                           "--p", "2", "--n", "8")
        values = [float(line.split(",")[1]) for line in out.strip().splitlines()[1:]]
        np.testing.assert_allclose(values, 1.0, atol=1e-12)


class TestApproximateCommand:
    def test_constant_has_zero_error(self, capsys):
        code, out, _ = run(capsys, "approximate", "--fn", "const", "--n", "16",
                           "--r", "1", "--p", "1", "--grid", "64")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,approx,exact,abs_error"
        errors = [float(line.split(",")[3]) for line in lines[1:]]
        assert max(errors) <= 1e-12

    def test_file_round_trip_matches_builtin(self, tmp_path, capsys):
        n = 64
        xs = np.arange(n + 1) / n
        samples = np.sin(20 * xs)
        path = tmp_path / "sin20.csv"
        path.write_text("x,f\n" + "\n".join(f"{x:.17g},{v:.17g}"
                                            for x, v in zip(xs, samples)) + "\n")
        _, from_file, _ = run(capsys, "approximate", "--data", str(path),
                              "--r", "2", "--p", "2", "--grid", "128")
        _, from_builtin, _ = run(capsys, "approximate", "--fn", "sin20", "--n", str(n),
                                 "--r", "2", "--p", "2", "--grid", "128")
        approx_file = [line.split(",")[1] for line in from_file.strip().splitlines()[1:]]
        approx_builtin = [line.split(",")[1] for line in from_builtin.strip().splitlines()[1:]]
        assert approx_file == approx_builtin

    def test_single_column_input(self, tmp_path, capsys):
        path = tmp_path / "flat.csv"
        path.write_text("\n".join("2.0" for _ in range(17)) + "\n")
        code, out, _ = run(capsys, "approximate", "--data", str(path),
                           "--r", "1", "--p", "1", "--grid", "32")
        assert code == 0
        assert out.splitlines()[0] == "x,approx"

    def test_error_column_matches_published_row(self, capsys):
        # n=2^10, r=3, p=3 for sin(20x) is published as 3.09e-9.
        code, out, _ = run(capsys, "approximate", "--fn", "sin20", "--n", "1024",
                           "--r", "3", "--p", "3")
        worst = max(float(line.split(",")[3]) for line in out.strip().splitlines()[1:])
        assert 3.09e-9 / 2 <= worst <= 3.09e-9 * 2


class TestCoeffsCommand:
    def test_shape_and_indexing(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--fn", "const", "--n", "8",
                           "--r", "1", "--p", "1")
        lines = out.strip().splitlines()
        assert lines[0] == "k,re,im"
        ks = [int(line.split(",")[0]) for line in lines[1:]]
        assert ks == list(range(-8, 8))
        re0 = float(lines[1 + 8].split(",")[1])
        assert re0 == pytest.approx(1.0, abs=1e-13)


class TestConvergenceCommand:
    def test_csv_table(self, capsys):
        code, out, _ = run(capsys, "convergence", "--fn", "sin20", "--r", "2",
                           "--p", "2", "--nmin", "64", "--nmax", "256",
                           "--grid", "1024", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,e_n,ratio,order"
        assert [int(line.split(",")[0]) for line in lines[1:]] == [64, 128, 256]
        last_order = float(lines[3].split(",")[3])
        assert abs(last_order - 3.0) <= 0.3

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "convergence", "--fn", "kink3", "--r", "2",
                           "--p", "1", "--nmin", "64", "--nmax", "128",
                           "--grid", "512", "--format", "json")
        rows = json.loads(out)
        assert rows[0]["ratio"] is None
        assert abs(rows[1]["order"] - 2.0) <= 0.5

    def test_requires_builtin(self, capsys, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("1\n2\n3\n")
        code, _, err = run(capsys, "convergence", "--data", str(path))
        assert code == 1


class TestValidationAndExitCodes:
    def test_both_sources_rejected(self, capsys):
        code, _, err = run(capsys, "approximate", "--fn", "x", "--data", "y", "--n", "8")
        assert code == 1
        assert "exactly one" in err

    def test_missing_n(self, capsys):
        code, _, err = run(capsys, "approximate", "--fn", "x")
        assert code == 1

    def test_missing_file_is_io_error(self, capsys):
        code, _, err = run(capsys, "approximate", "--data", "/nonexistent.csv")
        assert code == 3

    def test_non_equispaced_grid_names_index(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        xs = np.arange(9) / 8
        xs[3] += 3e-4
        path.write_text("\n".join(f"{x:.17g},1.0" for x in xs) + "\n")
        code, _, err = run(capsys, "approximate", "--data", str(path))
        assert code == 1
        assert "index 3" in err or "index 4" in err

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "approximate", "--fn", "sin20", "--n", "64",
                          "--r", "2", "--p", "3", "--grid", "256")
        _, second, _ = run(capsys, "approximate", "--fn", "sin20", "--n", "64",
                           "--r", "2", "--p", "3", "--grid", "256")
        assert first == second

    def test_out_writes_file(self, tmp_path, capsys):
        out_path = tmp_path / "weights.txt"
        code, out, _ = run(capsys, "stencil", "--m", "1", "--p", "1",
                           "--out", str(out_path))
        assert code == 0
        assert out == ""
        assert out_path.read_text() == "-1, 1\n"


class TestSelftest:
    def test_reports_and_exit_code(self, capsys, monkeypatch):
        ok = acceptance.CriterionResult("fine", True, "all good")
        bad = acceptance.CriterionResult("broken", False, "oops")
        monkeypatch.setattr(acceptance, "run_all", lambda: [ok, bad])
        code, out, _ = run(capsys, "selftest")
        assert code == 2
        assert "[PASS] fine" in out and "[FAIL] broken" in out
        monkeypatch.setattr(acceptance, "run_all", lambda: [ok])
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        assert "1/1 criteria passed" in out

import csv
import io
import math

import diskarea.cli as cli

TWO_PI = 2.0 * math.pi


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestAreaCommand:
    def test_identity_green_spectral(self, capsys):
        code, out, _ = run_cli(capsys, "area", "--family", "identity", "--r", "0.5",
                               "--method", "green-spectral")
        assert code == 0
        rows = parse_csv(out)
        assert abs(float(rows[0]["value"]) - 0.7853981633974483) < 1e-10

    def test_shear_jacobian_formula(self, capsys):
        code, out, _ = run_cli(capsys, "area", "--family", "shear:0.3", "--r", "0.8",
                               "--method", "jacobian")
        assert code == 0
        rows = parse_csv(out)
        assert abs(float(rows[0]["value"]) - math.pi * 0.566272) < 1e-6

    def test_kernel_pair_rows_agree(self, capsys):
        code, out, _ = run_cli(capsys, "area", "--family", "random:7:0.5", "--r", "0.6",
                               "--method", "kernel-fft,kernel-direct", "--resolution", "512")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 2
        vals = {row["method"]: float(row["value"]) for row in rows}
        assert abs(vals["kernel-fft"] - vals["kernel-direct"]) <= 1e-10 * abs(vals["kernel-fft"])

    def test_jsonl_format(self, capsys):
        import json

        code, out, _ = run_cli(capsys, "area", "--family", "identity", "--r", "0.5",
                               "--format", "jsonl")
        assert code == 0
        doc = json.loads(out.splitlines()[0])
        assert doc["map_id"] == "identity"

    def test_usage_error_on_bad_family(self, capsys):
        code, _, err = run_cli(capsys, "area", "--family", "bogus:1", "--r", "0.5")
        assert code == 64
        assert "usage error" in err

    def test_usage_error_on_radius_cap(self, capsys):
        code, _, _ = run_cli(capsys, "area", "--family", "identity", "--r", "0.99")
        assert code == 64

    def test_usage_error_on_missing_args(self, capsys):
        code, _, _ = run_cli(capsys, "area", "--family", "identity")
        assert code == 64

    def test_output_file_and_outdir_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("DISKAREA_OUTDIR", str(tmp_path))
        code, _, _ = run_cli(capsys, "area", "--family", "identity", "--r", "0.5",
                             "--out", "report.csv")
        assert code == 0
        assert (tmp_path / "report.csv").exists()


class TestVerifyCommand:
    def test_proof_suite_exit_zero(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--suite", "proof", "--r", "0.6")
        assert code == 0
        assert "failed=0" in err

    def test_contraction_small(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--suite", "contraction",
                                 "--seeds", "0..4", "--radii", "0.25,0.9")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 5 * 3 * 2  # seeds x mollification levels x radii
        assert all(row["passed"] == "true" for row in rows)

    def test_convexity_reports_designed_failure(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "convexity",
                               "--family", "shear:0.3", "--radii", "0.5")
        assert code == 0
        rows = parse_csv(out)
        shear = [row for row in rows if row["check_name"] == "convexity-fails-for-shear"]
        assert shear and all(row["passed"] == "true" for row in shear)
        assert all(float(row["lhs"]) > float(row["rhs"]) for row in shear)

    def test_equality_suite(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "equality", "--radii", "0.5")
        assert code == 0

    def test_tolerance_override(self, capsys):
        # an absurdly demanding tolerance forces failures and exit code 1
        # (r = 0.7 leaves a one-ulp rotation slack, unlike the exact 0.5 case)
        code, out, _ = run_cli(capsys, "verify", "--suite", "equality", "--radii", "0.7",
                               "--tol", "equality-rotation=1e-30")
        assert code == 1

    def test_bad_suite_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "nope")
        assert code == 64

    def test_determinism_modulo_wall_time(self, capsys):
        args = ("verify", "--suite", "schwarz", "--seeds", "0..2", "--radii", "0.5")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)

        def strip(text):
            rows = parse_csv(text)
            return [{k: v for k, v in row.items() if k != "wall_time_ms"} for row in rows]

        assert strip(out1) == strip(out2)


class TestBenchCommand:
    def test_small_sizes_agree_and_report(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--sizes", "256,512", "--repeat", "1")
        assert code == 0
        rows = parse_csv(out)
        methods = {row["method"] for row in rows}
        assert "kernel-fft" in methods
        assert any(m.startswith("kernel-direct[") for m in methods)
        for row in rows:
            assert float(row["rel_diff_vs_fft"]) <= 1e-10

    def test_resolution_column_present(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--sizes", "256", "--repeat", "1")
        rows = parse_csv(out)
        assert {row["resolution"] for row in rows} == {"256"}

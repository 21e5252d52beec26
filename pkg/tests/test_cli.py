"""Command line behavior, exercised through subprocesses."""

import csv
import json
import subprocess
import sys

import pytest


def run_cli(*args, check=True):
    result = subprocess.run(
        [sys.executable, "-m", "citesim", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )
    if check:
        assert result.returncode == 0, result.stderr
    return result


def parse_csv(text):
    return list(csv.DictReader(text.splitlines()))


class TestTable1:
    def test_analytic_first_row(self):
        rows = parse_csv(run_cli("table1", "--mode", "analytic").stdout)
        assert len(rows) == 30
        first = rows[0]
        assert first["series"] == "1"
        assert first["mu"] == "2.7"
        assert first["sigma"] == "1.2"
        assert first["n"] == "500"
        assert abs(int(first["sum_c"]) - 15280) / 15280 < 0.01
        assert first["h"] == "61"
        assert float(first["p_5"]) == pytest.approx(0.8183, abs=5e-5)
        assert float(first["p_500"]) == pytest.approx(1.70e-3, rel=0.01)

    def test_simulate_deterministic_bytes(self):
        args = ("table1", "--mode", "simulate", "--replicates", "3", "--seed", "7")
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        assert "seed=7" in first.stderr

    def test_csv_and_json_carry_identical_values(self):
        csv_rows = parse_csv(run_cli("table1").stdout)
        json_rows = json.loads(run_cli("table1", "--format", "json").stdout)
        assert len(json_rows) == 30
        for c_row, j_row in zip(csv_rows, json_rows):
            for key, c_value in c_row.items():
                assert float(c_value) == float(j_row[key]), key

    def test_out_file(self, tmp_path):
        target = tmp_path / "table.csv"
        run_cli("table1", "--out", str(target))
        assert target.read_text().startswith("series,mu,sigma,n,sum_c,h,")

    def test_simulated_probabilities_track_analytic(self):
        # fixed seed, 500 replicates: every printed P column sits within
        # 0.005 of the analytic table (verified margin ~2x)
        analytic = parse_csv(run_cli("table1").stdout)
        simulated = parse_csv(
            run_cli("table1", "--mode", "simulate", "--replicates", "500").stdout
        )
        for a_row, s_row in zip(analytic, simulated):
            for key in ("p_5", "p_10", "p_20", "p_50", "p_100", "p_500"):
                assert abs(float(a_row[key]) - float(s_row[key])) <= 0.005, key


class TestHCurve:
    def test_contains_requested_endpoints(self):
        rows = parse_csv(
            run_cli("hcurve", "--mu", "2.7", "--sigma", "1.2",
                    "--n-min", "100", "--n-max", "200", "--points", "2").stdout
        )
        by_n = {row["n"]: float(row["h_exact"]) for row in rows}
        assert by_n["100"] == pytest.approx(29, abs=1)
        assert by_n["200"] == pytest.approx(41, abs=1)

    def test_low_parameter_spots(self):
        rows = parse_csv(
            run_cli("hcurve", "--mu", "1.3", "--sigma", "0.8",
                    "--n-min", "100", "--n-max", "200", "--points", "2").stdout
        )
        values = [float(row["h_exact"]) for row in rows]
        assert values[0] == pytest.approx(10, abs=1)
        assert values[1] == pytest.approx(13, abs=1)

    def test_wide_grid_monotone_with_asymptotic(self):
        rows = parse_csv(
            run_cli("hcurve", "--mu", "2.1", "--sigma", "1.1",
                    "--n-min", "10", "--n-max", "10000", "--with-asymptotic").stdout
        )
        hs = [float(row["h_exact"]) for row in rows]
        assert all(a <= b for a, b in zip(hs, hs[1:]))
        assert all("h_asymptotic" in row for row in rows)

    def test_rejects_empty_range(self):
        result = run_cli("hcurve", "--mu", "2.0", "--sigma", "1.0",
                         "--n-min", "100", "--n-max", "100", "--points", "2", check=False)
        assert result.returncode != 0
        assert "error" in result.stderr.lower()


class TestScatter:
    def test_h_versus_counts_panel(self):
        rows = parse_csv(run_cli("scatter", "--y", "h", "--x", "counts", "--threshold", "100").stdout)
        assert len(rows) == 30
        assert rows[0]["series"] == "1"
        assert float(rows[12]["y"]) == pytest.approx(27.28, abs=0.01)

    def test_normalized_divides_both_axes(self):
        plain = parse_csv(run_cli("scatter", "--y", "sum_c", "--x", "counts", "--threshold", "10").stdout)
        norm = parse_csv(
            run_cli("scatter", "--y", "sum_c", "--x", "counts", "--threshold", "10", "--normalized").stdout
        )
        n_papers = [500, 5000, 1000]
        for i, n in enumerate(n_papers):
            assert float(norm[i]["y"]) == pytest.approx(float(plain[i]["y"]) / n, rel=1e-4)
            assert float(norm[i]["x"]) == pytest.approx(float(plain[i]["x"]) / n, rel=1e-4)

    def test_rejects_unsupported_threshold(self):
        result = run_cli("scatter", "--y", "h", "--x", "counts", "--threshold", "7", check=False)
        assert result.returncode != 0

    def test_rejects_unknown_indicator(self):
        result = run_cli("scatter", "--y", "g_index", "--x", "counts", "--threshold", "10", check=False)
        assert result.returncode != 0


class TestFit:
    def test_power_fit_h_versus_f50(self):
        result = run_cli("fit", "--kind", "power", "--y", "h", "--x", "counts",
                         "--threshold", "50", "--format", "json")
        record = json.loads(result.stdout)[0]
        assert record["amplitude"] == pytest.approx(14.6, rel=0.10)
        assert record["exponent"] == pytest.approx(0.325, rel=0.10)

    def test_linear_fit_mean_citations_versus_p30(self):
        result = run_cli("fit", "--kind", "linear", "--y", "sum_c_over_n", "--x", "probabilities",
                         "--threshold", "30", "--format", "json")
        record = json.loads(result.stdout)[0]
        assert record["intercept"] == pytest.approx(4.9, rel=0.10)
        assert record["slope"] == pytest.approx(88.7, rel=0.10)

    def test_power_exponent_h_versus_total_citations(self):
        result = run_cli("fit", "--kind", "power", "--y", "h", "--x", "sum_c", "--format", "json")
        record = json.loads(result.stdout)[0]
        assert record["exponent"] == pytest.approx(0.42, abs=0.05)

    def test_default_output_is_key_value_text(self):
        result = run_cli("fit", "--kind", "power", "--y", "h", "--x", "counts", "--threshold", "50")
        assert "amplitude = " in result.stdout
        assert "r_squared = " in result.stdout

    def test_threshold_required_for_count_axes(self):
        result = run_cli("fit", "--kind", "power", "--y", "h", "--x", "counts", check=False)
        assert result.returncode != 0


class TestSimulate:
    def test_single_spec_summary(self):
        result = run_cli("simulate", "--mu", "2.1", "--sigma", "1.1", "--n", "200",
                         "--replicates", "200", "--seed", "11", "--format", "json")
        record = json.loads(result.stdout)[0]
        assert record["n"] == 200
        assert record["replicates"] == 200
        assert record["seed"] == 11
        assert record["h_mean"] == pytest.approx(27, abs=2)
        assert record["f_5"] <= 200

    def test_deterministic(self):
        args = ("simulate", "--mu", "1.7", "--sigma", "1.0", "--n", "100",
                "--replicates", "50", "--seed", "3")
        assert run_cli(*args).stdout == run_cli(*args).stdout


class TestVerify:
    def test_filter_table1_passes(self):
        result = run_cli("verify", "--filter", "table1")
        assert result.stdout.count("[PASS]") == 3
        assert "[FAIL]" not in result.stdout

    def test_filter_determinism(self):
        result = run_cli("verify", "--filter", "determinism")
        assert "[PASS] determinism" in result.stdout

    def test_unknown_filter_errors(self):
        result = run_cli("verify", "--filter", "no-such-check", check=False)
        assert result.returncode != 0

    def test_json_format(self):
        result = run_cli("verify", "--filter", "correlations", "--format", "json")
        records = json.loads(result.stdout)
        assert records[0]["name"] == "correlations"
        assert records[0]["status"] == "pass"

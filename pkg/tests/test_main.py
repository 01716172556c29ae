import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from main import EXIT_CROSSCHECK, EXIT_DOMAIN, EXIT_OK, EXIT_VALIDATION, main as run_main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run_main(argv)
    return code, out.getvalue(), err.getvalue()


class MainIntegrationTest(unittest.TestCase):
    def test_decide_prints_json_report(self):
        """Test that decide prints a JSON report and exits 0."""
        code, out, _ = run_cli(["decide", "--field", "R", "--n", "3", "--p1", "1", "--chi", "eps*nu^{5/2}"])
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["verb"], "decide")
        self.assertTrue(report["outputs"]["reducible"])

    def test_seed_flag_reaches_report(self):
        """Test that --seed is recorded and the mc verb runs."""
        code, out, _ = run_cli(["--seed", "7", "mc", "--n", "3", "--i", "1", "--alpha", "1", "--N", "2000"])
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["seed"], 7)
        self.assertEqual(report["outputs"]["samples"], 2000)

    def test_csv_output_to_file(self):
        """Test --format csv with --out."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "spectrum.csv")
            argv = ["--format", "csv", "--out", path, "spectrum", "--n", "4", "--alpha0", "2", "--M", "3"]
            code, out, _ = run_cli(argv)
            self.assertEqual(code, EXIT_OK)
            self.assertIn("Saved spectrum report", out)
            with open(path, encoding="utf-8") as f:
                self.assertTrue(f.readline().startswith("m,"))

    def test_validation_exit_code(self):
        """Test that an unknown field exits with 2."""
        code, _, err = run_cli(["decide", "--field", "X", "--n", "3", "--p1", "1"])
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("field", err)

    def test_domain_exit_code(self):
        """Test that p1 outside [1, n - 1] exits with 3."""
        code, _, _ = run_cli(["decide", "--field", "R", "--n", "3", "--p1", "4"])
        self.assertEqual(code, EXIT_DOMAIN)

    def test_non_archimedean_infchar_exit_code(self):
        """Test that an unsupported field is a domain error."""
        code, _, _ = run_cli(["infchar", "--field", "NA", "--n", "3", "--p1", "1"])
        self.assertEqual(code, EXIT_DOMAIN)

    def test_scenario_file(self):
        """Test running a scenario file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "scenario.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"verb": "exceptional", "params": {"n": 4, "i": 1, "lo": -10, "hi": 6}}, f)
            code, out, _ = run_cli(["--scenario", path])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)["outputs"]["exceptional"]), 8)

    def test_crosscheck_failure_exit_code(self):
        """Test that failing crosscheck cells exit with 4."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "grid.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"grid": "oracle", "ns": [3], "m_max": 1, "alphas": [1], "tolerance": -1.0}, f)
            code, out, _ = run_cli(["crosscheck", "--grid-file", path])
        self.assertEqual(code, EXIT_CROSSCHECK)
        self.assertEqual(json.loads(out)["outputs"]["summary"]["failed"], 2)

    def test_crosscheck_pass_exit_code(self):
        """Test that a passing grid exits with 0."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "grid.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"grid": "translation", "ns": [4], "alpha_lo": -6, "alpha_hi": 2, "max_den": 1}, f)
            code, _, _ = run_cli(["crosscheck", "--grid-file", path])
        self.assertEqual(code, EXIT_OK)

    def test_no_verb(self):
        """Test that running without a verb prints help and exits 2."""
        code, out, _ = run_cli([])
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn("usage", out)


if __name__ == "__main__":
    unittest.main()

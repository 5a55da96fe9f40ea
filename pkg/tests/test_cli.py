import unittest
from unittest.mock import patch
import io
import json
import sys
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout

# Add parent directory to path to import app
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import app


def run(argv):
    """Run the CLI, returning (exit code, stdout)."""
    out = io.StringIO()
    with redirect_stdout(out), redirect_stderr(io.StringIO()):
        code = app.main(argv)
    return code, out.getvalue()


class TestVerifyCommand(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.out = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def test_verify_subset_passes(self):
        code, stdout = run(["verify", "--only", "strip_domain", "--samples", "500", "--format", "json", "--out", self.out])
        self.assertEqual(code, 0)
        data = json.loads(stdout)
        self.assertTrue(data["summary"]["ok"])
        self.assertTrue(all(item["name"].startswith("strip_domain.") for item in data["items"]))
        self.assertTrue(os.path.exists(os.path.join(self.out, "report.json")))
        self.assertTrue(os.path.exists(os.path.join(self.out, "report.md")))

    def test_report_is_byte_identical_across_runs(self):
        argv = ["verify", "--only", "strip_domain", "--seed", "7", "--format", "json", "--out", self.out]
        run(argv)
        with open(os.path.join(self.out, "report.json"), "rb") as handle:
            first = handle.read()
        with open(os.path.join(self.out, "report.md"), "rb") as handle:
            first_md = handle.read()
        run(argv)
        with open(os.path.join(self.out, "report.json"), "rb") as handle:
            second = handle.read()
        self.assertEqual(first, second)
        with open(os.path.join(self.out, "report.md"), "rb") as handle:
            self.assertEqual(first_md, handle.read())

    @patch("app.run_verifiers")
    def test_failed_item_exits_one(self, mock_run):
        mock_run.return_value = [
            {
                "ok": False,
                "verifier": "radius",
                "items": [{"name": "radius.x", "status": "fail", "paper_value": 1.0, "computed_value": 2.0}],
            }
        ]
        code, _ = run(["verify", "--only", "radius", "--out", self.out])
        self.assertEqual(code, 1)

    @patch("app.run_verifiers")
    def test_printed_discrepancy_does_not_fail(self, mock_run):
        mock_run.return_value = [
            {
                "ok": True,
                "verifier": "radius",
                "items": [
                    {
                        "name": "radius.delta",
                        "status": "pass",
                        "paper_value": 0.6126494,
                        "computed_value": 0.6126494,
                        "printed_value": 0.612626,
                    }
                ],
            }
        ]
        code, stdout = run(["verify", "--format", "json", "--out", self.out])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(stdout)["summary"]["flagged"], ["radius.delta"])

    @patch("app.run_verifiers")
    def test_settings_reach_verifiers(self, mock_run):
        mock_run.return_value = []
        run(["verify", "--only", "hankel", "--order", "8", "--grid", "61", "--starts", "9", "--seed", "3", "--out", self.out])
        names, settings, _ = mock_run.call_args[0]
        self.assertEqual(names, ["hankel"])
        self.assertEqual(settings["hankel"]["grid_n"], 61)
        self.assertEqual(settings["hankel"]["starts"], 9)
        self.assertEqual(settings["extremal"]["order"], 8)
        self.assertEqual(settings["radius"]["seed"], 3)

    def test_flags_below_minimum_are_usage_errors(self):
        for argv in (
            ["verify", "--only", "hankel", "--grid", "11"],
            ["verify", "--only", "extremal", "--order", "0"],
            ["verify", "--only", "extremal", "--order", "-3"],
            ["coeff-bounds", "--starts", "0"],
            ["hankel-max", "--target", "H2", "--seed", "-1"],
        ):
            code, _ = run(argv + ["--out", self.out])
            self.assertEqual(code, 2, argv)
        self.assertFalse(os.path.exists(os.path.join(self.out, "report.json")))

    def test_unknown_verifier_is_a_usage_error(self):
        code, _ = run(["verify", "--only", "nonsense", "--out", self.out])
        self.assertEqual(code, 2)

    def test_bad_tolerance_overrides(self):
        code, _ = run(["verify", "--only", "strip_domain", "--tol-overrides", "{not json", "--out", self.out])
        self.assertEqual(code, 2)
        code, _ = run(["verify", "--only", "strip_domain", "--tol-overrides", "[1, 2]", "--out", self.out])
        self.assertEqual(code, 2)


class TestOtherCommands(unittest.TestCase):
    def test_usage_errors(self):
        self.assertEqual(run([])[0], 2)
        self.assertEqual(run(["no-such-command"])[0], 2)
        self.assertEqual(run(["growth-table", "--radii", "a,b"])[0], 2)
        self.assertEqual(run(["growth-table", "--radii", "1.5"])[0], 2)

    def test_configuration_error(self):
        with patch("app._load_config", side_effect=ValueError("STAU_GRID_N must be >= 41, got 3")):
            self.assertEqual(run(["radius-table"])[0], 2)

    def test_radius_table(self):
        code, stdout = run(["radius-table", "--format", "json"])
        self.assertEqual(code, 0)
        rows = json.loads(stdout)
        self.assertEqual(len(rows), 10)
        self.assertEqual(rows[0]["name"], "S*_L -> S*_tau")

    def test_growth_table(self):
        code, stdout = run(["growth-table", "--radii", "0.25,0.5"])
        self.assertEqual(code, 0)
        lines = stdout.strip().splitlines()
        self.assertEqual(lines[0], "radius,lower,upper,rotation")
        self.assertEqual(len(lines), 3)

    def test_hankel_max(self):
        code, stdout = run(["hankel-max", "--target", "H2", "--starts", "10", "--seed", "1"])
        self.assertEqual(code, 0)
        payload = json.loads(stdout)
        self.assertEqual(payload["target"], "H2")
        self.assertLessEqual(payload["attained"], payload["bound"] + 1e-9)
        self.assertEqual(payload["seed"], 1)

    def test_plot(self):
        with tempfile.TemporaryDirectory() as out_dir:
            code, stdout = run(["plot", "--which", "strip", "--no-svg", "--out", out_dir])
            self.assertEqual(code, 0)
            self.assertEqual(len(stdout.strip().splitlines()), 4)


if __name__ == '__main__':
    unittest.main()

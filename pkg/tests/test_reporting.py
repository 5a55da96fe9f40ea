import unittest
import json
import math
import sys
import os
import tempfile

# Add parent directory to path to import utils
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.hankel import CaratheodoryPoint, SearchResult
from core.radius import radius_catalog
from utils.reporting import (
    ReportItem,
    ReportMeta,
    VerificationReport,
    coeff_bounds_table,
    growth_frame,
    items_frame,
    radius_table,
    render_table,
    to_json,
    to_markdown,
    write_report,
)

META = ReportMeta(series_order=48, grid_n=101, seed=0, version="1.0.0")


def _item(name, status="pass", **kwargs):
    record = {
        "name": name,
        "section": kwargs.pop("section", "radius problems"),
        "paper_value": kwargs.pop("paper_value", 1.0),
        "computed_value": kwargs.pop("computed_value", 1.0),
        "tolerance": kwargs.pop("tolerance", 1e-10),
        "status": status,
        "runtime_ms": kwargs.pop("runtime_ms", 3.0),
    }
    record.update(kwargs)
    return record


class TestReportItem(unittest.TestCase):
    def test_flagged_printed_value(self):
        item = ReportItem(**_item("radius.x", computed_value=0.6126494, printed_value=0.612626))
        self.assertTrue(item.flagged)

    def test_close_printed_value_not_flagged(self):
        item = ReportItem(**_item("radius.x", computed_value=0.4758383, printed_value=0.475838))
        self.assertFalse(item.flagged)

    def test_boolean_item_never_flagged(self):
        item = ReportItem(**_item("radius.x", paper_value=True, computed_value=True, printed_value=0.5))
        self.assertFalse(item.flagged)


class TestVerificationReport(unittest.TestCase):
    def test_items_sorted_and_counted(self):
        results = [
            {"ok": True, "items": [_item("b.two"), _item("b.one", status="skip")]},
            {"ok": False, "items": [_item("a.one", status="fail")]},
        ]
        report = VerificationReport.from_results(META, results)
        self.assertEqual([item.name for item in report.items], ["a.one", "b.one", "b.two"])
        self.assertEqual(report.counts(), {"pass": 1, "fail": 1, "skip": 1})
        self.assertFalse(report.ok)

    def test_aborted_verifier_becomes_a_failure(self):
        results = [{"ok": False, "items": [], "error": "boom", "verifier": "hankel"}]
        report = VerificationReport.from_results(META, results)
        self.assertEqual(report.items[0].name, "hankel.aborted")
        self.assertEqual(report.items[0].status, "fail")
        self.assertEqual(report.items[0].note, "boom")

    def test_skips_do_not_fail_the_run(self):
        report = VerificationReport.from_results(META, [{"ok": True, "items": [_item("x.y", status="skip")]}])
        self.assertTrue(report.ok)


class TestRendering(unittest.TestCase):
    def setUp(self):
        self.results = [
            {
                "ok": True,
                "items": [
                    _item("radius.delta", computed_value=0.6126494, printed_value=0.612626, runtime_ms=12.5),
                    _item("strip_domain.origin", section="strip domain", paper_value=True, computed_value=True),
                ],
            }
        ]

    def test_json_is_deterministic(self):
        first = VerificationReport.from_results(META, self.results)
        shuffled = [{"ok": True, "items": list(reversed(self.results[0]["items"]))}]
        for item in shuffled[0]["items"]:
            item["runtime_ms"] = 999.0
        second = VerificationReport.from_results(META, shuffled)
        self.assertEqual(to_json(first), to_json(second))

    def test_json_content(self):
        data = json.loads(to_json(VerificationReport.from_results(META, self.results)))
        self.assertNotIn("runtime_ms", data["items"][0])
        self.assertEqual(data["summary"]["flagged"], ["radius.delta"])
        self.assertTrue(data["summary"]["ok"])
        self.assertEqual(data["meta"]["seed"], 0)
        self.assertEqual(data["items"][0]["computed_value"], 0.6126494)

    def test_json_non_finite_values(self):
        results = [{"ok": True, "items": [_item("x.inf", computed_value=math.inf, paper_value=math.inf)]}]
        data = json.loads(to_json(VerificationReport.from_results(META, results)))
        self.assertEqual(data["items"][0]["computed_value"], "inf")

    def test_markdown(self):
        text = to_markdown(VerificationReport.from_results(META, self.results))
        self.assertIn("## radius problems", text)
        self.assertIn("## strip domain", text)
        self.assertIn("**2 passed, 0 failed, 0 skipped**", text)
        self.assertIn("`radius.delta`: printed 0.612626", text)

    def test_markdown_is_deterministic(self):
        first = to_markdown(VerificationReport.from_results(META, self.results))
        for item in self.results[0]["items"]:
            item["runtime_ms"] = 999.0
        second = to_markdown(VerificationReport.from_results(META, self.results))
        self.assertEqual(first, second)
        self.assertNotIn("runtime", first)

    def test_write_report(self):
        report = VerificationReport.from_results(META, self.results)
        with tempfile.TemporaryDirectory() as out_dir:
            paths = write_report(report, os.path.join(out_dir, "nested"))
            self.assertEqual([os.path.basename(path) for path in paths], ["report.json", "report.md"])
            for path in paths:
                self.assertTrue(os.path.exists(path))

    def test_items_frame_drops_runtime(self):
        frame = items_frame(VerificationReport.from_results(META, self.results))
        self.assertNotIn("runtime_ms", frame.columns)
        self.assertEqual(len(frame), 2)


class TestTables(unittest.TestCase):
    def test_radius_table(self):
        frame = radius_table(radius_catalog())
        self.assertEqual(len(frame), 10)
        self.assertEqual(list(frame.columns), ["name", "closed_form", "numeric", "residual", "sharp_contact"])
        csv = render_table(frame, "csv")
        self.assertEqual(len(csv.strip().splitlines()), 11)

    def test_coeff_bounds_table(self):
        search = SearchResult("a5", 323.0 / 528.0, 0.25, CaratheodoryPoint(0.0), 0, 100)
        witness = {"abs_a5": 323.0 / 528.0, "caratheodory": False}
        frame = coeff_bounds_table([search], {}, witness)
        row = frame.iloc[0]
        self.assertTrue(row["within_bound"])
        self.assertFalse(row["witness_caratheodory"])
        self.assertAlmostEqual(row["gap"], 323.0 / 528.0 - 0.25)

    def test_render_formats(self):
        frame = growth_frame([{"radius": 0.5, "lower": 0.4, "upper": 0.6, "rotation": 0.1}])
        self.assertTrue(render_table(frame, "csv").startswith("radius,lower,upper,rotation\n"))
        markdown = render_table(frame, "md")
        self.assertIn("radius", markdown)
        self.assertTrue(markdown.startswith("|"))
        self.assertEqual(json.loads(render_table(frame, "json"))[0]["upper"], 0.6)
        with self.assertRaises(ValueError):
            render_table(frame, "xml")


if __name__ == '__main__':
    unittest.main()

import unittest
import math
import sys
import os
import tempfile

# Add parent directory to path to import utils
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.radius import radius_in, tau_radius_of
from utils.plotting import export_plot, plot_targets, resolve_target


class TestPlotTargets(unittest.TestCase):
    def test_targets(self):
        targets = plot_targets()
        self.assertEqual(targets[0], "strip")
        self.assertIn("tau-in-e", targets)
        self.assertIn("L-in-tau", targets)
        self.assertEqual(len(targets), 11)

    def test_unknown_target(self):
        for which in ("circle", "tau-in-L", "SG-in-tau"):
            with self.assertRaises(ValueError):
                resolve_target(which)

    def test_default_radius_is_the_sharp_radius(self):
        self.assertEqual(resolve_target("tau-in-C")["r"], radius_in("C").numeric)
        self.assertEqual(resolve_target("e-in-tau")["r"], tau_radius_of("e").numeric)

    def test_contact_on_strip_line(self):
        plot = resolve_target("e-in-tau")
        self.assertAlmostEqual(plot["contact"].real, 1.0 + math.pi / 4.0, places=10)


class TestExport(unittest.TestCase):
    def test_csv_only(self):
        with tempfile.TemporaryDirectory() as out_dir:
            exported = export_plot("strip", out_dir, svg=False)
            names = sorted(os.path.basename(path) for path in exported["paths"])
            self.assertEqual(names, ["strip_disk.csv", "strip_strip_left.csv", "strip_strip_right.csv", "strip_tau.csv"])
            with open(os.path.join(out_dir, "strip_tau.csv")) as handle:
                self.assertEqual(handle.readline().strip(), "theta,re,im")

    def test_svg(self):
        with tempfile.TemporaryDirectory() as out_dir:
            exported = export_plot("tau-in-e", out_dir, r=0.5)
            svg = [path for path in exported["paths"] if path.endswith(".svg")]
            self.assertEqual(len(svg), 1)
            with open(svg[0]) as handle:
                self.assertIn("<svg", handle.read())
            self.assertEqual(exported["r"], 0.5)


if __name__ == '__main__':
    unittest.main()

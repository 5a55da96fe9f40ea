import unittest
import math
import sys
import os

import numpy as np

# Add parent directory to path to import core
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.errors import DomainError, SingularInputError, UnknownClassError
from core.strip_domain import (
    HALF_WIDTH,
    JanowskiParams,
    boundary_curves,
    class_names,
    conjugation_residual,
    contains_point,
    convexity_proxy,
    disk_in_strip,
    get_class,
    inscribed_disk_radius,
    janowski_branch,
    janowski_member,
    re_range_on_circle,
    reciprocal_order_check,
    sampled_deviation,
    subordination_sample,
    symmetry_diagnostics,
    tau_eval,
)


class TestTauEval(unittest.TestCase):
    def test_origin(self):
        self.assertEqual(tau_eval(0.0), 1.0 + 0j)

    def test_matches_math_atan_on_real_axis(self):
        for x in (-0.9, -0.3, 0.2, 0.75):
            self.assertAlmostEqual(tau_eval(x).real, 1.0 + math.atan(x), places=14)
            self.assertAlmostEqual(tau_eval(x).imag, 0.0, places=14)

    def test_singular_points(self):
        with self.assertRaises(SingularInputError):
            tau_eval(1j)
        with self.assertRaises(SingularInputError):
            tau_eval(-1j)

    def test_singular_is_a_domain_error(self):
        # Callers catching ValueError also see the singular case
        with self.assertRaises(ValueError):
            tau_eval(1j)

    def test_outside_disk(self):
        with self.assertRaises(DomainError):
            tau_eval(1.0)
        with self.assertRaises(DomainError):
            tau_eval(np.array([0.1, 0.5 + 0.9j]))

    def test_conjugation_symmetry(self):
        self.assertLess(conjugation_residual(2000, seed=3), 1e-13)


class TestStrip(unittest.TestCase):
    def test_re_range(self):
        lo, hi = re_range_on_circle(0.5)
        self.assertAlmostEqual(lo, 1.0 - math.atan(0.5), places=15)
        self.assertAlmostEqual(hi, 1.0 + math.atan(0.5), places=15)

    def test_re_range_rejects_bad_radius(self):
        for r in (0.0, 1.0, -0.2):
            with self.assertRaises(DomainError):
                re_range_on_circle(r)

    def test_boundary_is_closed_by_default(self):
        edge = complex(1.0 + HALF_WIDTH, 7.0)
        self.assertTrue(contains_point(edge))
        self.assertFalse(contains_point(edge, strict=True))
        self.assertTrue(contains_point(1.0 + 100j, strict=True))
        self.assertFalse(contains_point(complex(1.0 - HALF_WIDTH - 1e-6, 0.0)))

    def test_disk_in_strip(self):
        self.assertTrue(disk_in_strip(1.0, HALF_WIDTH))
        self.assertFalse(disk_in_strip(1.1, HALF_WIDTH))
        self.assertTrue(disk_in_strip(1.5, 0.2))
        with self.assertRaises(DomainError):
            disk_in_strip(1.0, -0.1)

    def test_inscribed_disk_radius(self):
        self.assertAlmostEqual(inscribed_disk_radius(0.5), math.atan(0.5), places=15)

    def test_symmetry_about_imaginary_axis(self):
        residuals = symmetry_diagnostics(0.9)
        self.assertLess(residuals["im_residual"], 1e-13)
        self.assertLess(residuals["re_residual"], 1e-13)


class TestJanowski(unittest.TestCase):
    def test_degenerate_parameters(self):
        with self.assertRaises(DomainError):
            JanowskiParams(0.5, 1.0)
        with self.assertRaises(DomainError):
            JanowskiParams(1.5, 0.0)

    def test_members(self):
        self.assertTrue(janowski_member(JanowskiParams(0.5, 0.0)))
        self.assertTrue(janowski_member(JanowskiParams(HALF_WIDTH, 0.0)))
        self.assertFalse(janowski_member(JanowskiParams(1.0, 0.0)))
        self.assertFalse(janowski_member(JanowskiParams(0.0, -0.5)))

    def test_parameters_need_b_below_a(self):
        for A, B in ((0.0, 0.5), (0.3, 0.3), (-0.9, -0.2)):
            with self.assertRaises(DomainError):
                JanowskiParams(A, B)

    def test_branch_form_matches_membership(self):
        for A, B in ((0.5, 0.0), (1.0, 0.0), (0.0, -0.3), (0.0, -0.5), (0.2, -0.2), (0.9, 0.6)):
            params = JanowskiParams(A, B)
            self.assertEqual(janowski_branch(params), janowski_member(params))

    def test_random_parameters_agree(self):
        rng = np.random.default_rng(7)
        for _ in range(500):
            B = rng.uniform(-0.99, 0.99)
            A = rng.uniform(-1.0, 1.0)
            if not B < A:
                continue
            # ContractError would surface here if the routes disagreed
            janowski_member(JanowskiParams(A, B))


class TestClasses(unittest.TestCase):
    def test_catalog(self):
        self.assertEqual(class_names(), ["tau", "L", "C", "e", "Delta", "wp", "SG"])

    def test_unknown_class(self):
        with self.assertRaises(UnknownClassError):
            get_class("Koebe")
        with self.assertRaises(KeyError):
            get_class("Koebe")

    def test_sampled_deviation_matches_closed_form(self):
        for name in class_names():
            descriptor = get_class(name)
            self.assertAlmostEqual(sampled_deviation(descriptor, 0.5), descriptor.radial_deviation(0.5), places=9)

    def test_subordination_sampling(self):
        self.assertTrue(subordination_sample(lambda z: 1.0 + z / 2.0)["ok"])
        self.assertTrue(subordination_sample(get_class("tau"))["ok"])
        report = subordination_sample(lambda z: 1.0 + z)
        self.assertFalse(report["ok"])
        self.assertLess(report["worst_margin"], 0.0)

    def test_subordination_rejects_bad_radii(self):
        with self.assertRaises(DomainError):
            subordination_sample(lambda z: 1.0 + z / 2.0, radii=[1.0])


class TestDiagnostics(unittest.TestCase):
    def test_convexity_proxy(self):
        proxy = convexity_proxy(samples=2000, seed=1)
        self.assertGreater(proxy["min_re_convexity"], 0.0)
        self.assertGreater(proxy["min_re_tau"], 1.0 - HALF_WIDTH - 1e-12)
        self.assertLess(proxy["series_residual"], 1e-10)

    def test_reciprocal_order(self):
        check = reciprocal_order_check()
        self.assertGreater(check["axis_min"], check["axis_limit"])
        self.assertAlmostEqual(check["axis_min"], check["axis_limit"], delta=1e-3)
        self.assertLess(check["circle_min"], check["axis_min"])

    def test_boundary_curves(self):
        curves = boundary_curves(0.5, ["e"], angles=64)
        self.assertEqual(sorted(curves), ["disk", "psi_e", "strip_left", "strip_right", "tau"])
        self.assertEqual(curves["tau"].shape, (64, 3))
        np.testing.assert_allclose(curves["strip_left"][:, 1], 1.0 - HALF_WIDTH)


if __name__ == '__main__':
    unittest.main()

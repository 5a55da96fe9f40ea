import unittest
import math
import sys
import os

import numpy as np

# Add parent directory to path to import core
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.errors import DomainError
from core.extremal import (
    build_f_n,
    build_from_psi,
    class_extremal,
    covering_radius,
    growth_bounds,
    growth_table,
    koebe,
    membership_check,
    order_for_radius,
    rotation_bound,
    subordination_ratio_check,
    table_one,
    tau_tilde,
)
from core.numerics import CATALAN, adaptive_simpson, arctan_power_over_t, quad_oracle
from core.series import constant, identity, ps_scale


class TestExtremalFunctions(unittest.TestCase):
    def test_tau_tilde_coefficients(self):
        expected = [0.0, 1.0, 1.0, 0.5, 1.0 / 18.0, -5.0 / 72.0]
        np.testing.assert_allclose(tau_tilde(8).coefficients[:6], expected, rtol=0, atol=1e-14)

    def test_tau_tilde_is_cached(self):
        self.assertIs(tau_tilde(12), tau_tilde(12))

    def test_f_n_leading_coefficients(self):
        for n in (3, 4, 6):
            member = build_f_n(n, 2 * n + 2)
            coeffs = member.coefficients
            self.assertAlmostEqual(coeffs[n], 1.0 / (n - 1), places=14)
            self.assertAlmostEqual(coeffs[2 * n - 1], 1.0 / (2.0 * (n - 1) ** 2), places=14)
            # nothing between z and z^n
            np.testing.assert_array_equal(coeffs[2:n], np.zeros(n - 2))

    def test_f_n_needs_n_at_least_two(self):
        with self.assertRaises(DomainError):
            build_f_n(1)

    def test_build_from_psi_identity(self):
        # psi - 1 = z/2 gives f = z exp(z/2)
        member = build_from_psi(ps_scale(identity(10), 0.5), label="half")
        expected = [0.0] + [0.5**k / math.factorial(k) for k in range(11)]
        np.testing.assert_allclose(member.coefficients, expected, rtol=0, atol=1e-15)
        self.assertEqual(member.f.order, 11)

    def test_build_from_psi_needs_zero_constant(self):
        with self.assertRaises(DomainError):
            build_from_psi(constant(1.0, 6))

    def test_class_extremal_e(self):
        member = class_extremal("e", 10)
        self.assertAlmostEqual(member.coefficients[2], 1.0, places=14)
        self.assertAlmostEqual(member.coefficients[3], 0.75, places=14)


class TestMembership(unittest.TestCase):
    def test_tau_tilde_is_a_member(self):
        self.assertTrue(membership_check(tau_tilde())["ok"])

    def test_table_one_members(self):
        for member in table_one():
            self.assertTrue(membership_check(member)["ok"], member.label)

    def test_low_order_member_uses_exact_psi(self):
        for order in (1, 4):
            report = membership_check(tau_tilde(order), radii=(0.5, 0.9))
            self.assertTrue(report["ok"], order)
            self.assertEqual(report["truncated"], [])

    def test_short_series_without_psi_is_reported(self):
        half_z = build_from_psi(ps_scale(identity(4), 0.5))
        report = membership_check(half_z, radii=(0.5,))
        self.assertEqual(report["truncated"], [0.5])
        self.assertTrue(report["ok"])
        self.assertEqual(membership_check(tau_tilde(), radii=(0.5,))["truncated"], [])

    def test_koebe_is_not_a_member(self):
        report = membership_check(koebe())
        self.assertFalse(report["ok"])
        self.assertLess(report["worst_margin"], 0.0)

    def test_subordination_ratio(self):
        self.assertTrue(subordination_ratio_check(0.9)["ok"])


class TestGrowth(unittest.TestCase):
    def test_growth_bounds_against_quadpack(self):
        lower, upper = growth_bounds(0.5)
        self.assertAlmostEqual(upper, 0.5 * math.exp(quad_oracle(arctan_power_over_t(1), 0.0, 0.5)), places=11)
        self.assertAlmostEqual(lower, 0.5 * math.exp(quad_oracle(arctan_power_over_t(1, -1.0), 0.0, 0.5)), places=11)
        self.assertLess(lower, 0.5)
        self.assertGreater(upper, 0.5)

    def test_growth_bounds_small_radius(self):
        lower, upper = growth_bounds(1e-4)
        self.assertAlmostEqual(lower, 1e-4 - 1e-8, delta=1e-11)
        self.assertAlmostEqual(upper, 1e-4 + 1e-8, delta=1e-11)

    def test_growth_bounds_near_one(self):
        # quadrature only above the series limit
        lower, upper = growth_bounds(0.99)
        self.assertLess(lower, upper)

    def test_growth_bounds_reject_bad_radius(self):
        for r in (0.0, 1.0):
            with self.assertRaises(DomainError):
                growth_bounds(r)

    def test_covering_radius(self):
        self.assertAlmostEqual(covering_radius(), math.exp(-CATALAN), places=12)
        self.assertAlmostEqual(covering_radius(), 0.40013, places=5)

    def test_lower_bound_tends_to_covering_radius(self):
        lower, _ = growth_bounds(1.0 - 1e-6)
        self.assertAlmostEqual(lower, covering_radius(), delta=1e-5)

    def test_adaptive_simpson_polynomial(self):
        self.assertAlmostEqual(adaptive_simpson(lambda t: t**3, 0.0, 2.0), 4.0, places=12)

    def test_rotation_bound(self):
        small = rotation_bound(0.3)
        large = rotation_bound(0.6)
        self.assertGreater(small, 0.0)
        self.assertLess(small, large)
        # |Im int_0^z arctan(t)/t dt| <= sum r^(2k+1)/(2k+1)^2
        self.assertLessEqual(large, sum(0.6 ** (2 * k + 1) / (2 * k + 1) ** 2 for k in range(200)))

    def test_growth_table(self):
        rows = growth_table([0.25, 0.5])
        self.assertEqual([row["radius"] for row in rows], [0.25, 0.5])
        self.assertEqual(set(rows[0]), {"radius", "lower", "upper", "rotation"})

    def test_order_for_radius(self):
        self.assertEqual(order_for_radius(0.1), 48)
        self.assertGreater(order_for_radius(0.9), 48)
        self.assertEqual(order_for_radius(0.0), 48)


if __name__ == '__main__':
    unittest.main()

import unittest
import math
import sys
import os

import numpy as np

# Add parent directory to path to import core
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.errors import ContractError, DomainError
from core.series import (
    PowerSeries,
    constant,
    identity,
    monomial,
    ps_arctan,
    ps_compose,
    ps_derivative,
    ps_div,
    ps_eval,
    ps_exp,
    ps_integrate_over_t,
    ps_shift,
    ps_sqrt,
    ps_truncate,
    ps_unshift,
)


class TestPowerSeries(unittest.TestCase):
    def test_from_coeffs_pads_to_order(self):
        f = PowerSeries.from_coeffs([1.0, 2.0], 4)
        self.assertEqual(f.order, 4)
        np.testing.assert_array_equal(f.coeffs, [1.0, 2.0, 0.0, 0.0, 0.0])

    def test_from_coeffs_rejects_overflow(self):
        with self.assertRaises(ContractError):
            PowerSeries.from_coeffs([1.0, 2.0, 3.0], 1)

    def test_coefficient_count_must_match_order(self):
        with self.assertRaises(ContractError):
            PowerSeries(3, np.zeros(3))

    def test_coefficients_are_read_only(self):
        f = identity(3)
        with self.assertRaises(ValueError):
            f.coeffs[0] = 5.0

    def test_order_mismatch_raises(self):
        with self.assertRaises(ContractError):
            identity(3) + identity(4)
        with self.assertRaises(ContractError):
            identity(3) * identity(4)

    def test_product_is_truncated(self):
        z = identity(3)
        square = z * z
        cube = square * z
        fourth = cube * z
        self.assertEqual(fourth.order, 3)
        np.testing.assert_array_equal(fourth.coeffs, np.zeros(4))
        np.testing.assert_array_equal(cube.coeffs, [0.0, 0.0, 0.0, 1.0])

    def test_monomial_beyond_order_is_zero(self):
        np.testing.assert_array_equal(monomial(5, 3).coeffs, np.zeros(4))


class TestSeriesFunctions(unittest.TestCase):
    def test_exp_of_identity(self):
        expected = [1.0 / math.factorial(k) for k in range(6)]
        np.testing.assert_allclose(ps_exp(identity(5)).coeffs, expected, rtol=0, atol=1e-15)

    def test_exp_needs_zero_constant(self):
        with self.assertRaises(DomainError):
            ps_exp(constant(1.0, 3))

    def test_arctan_coefficients(self):
        np.testing.assert_allclose(
            ps_arctan(7).coeffs, [0.0, 1.0, 0.0, -1.0 / 3.0, 0.0, 0.2, 0.0, -1.0 / 7.0], rtol=0, atol=1e-16
        )

    def test_arctan_series_value(self):
        self.assertAlmostEqual(float(ps_eval(ps_arctan(80), 0.5)), math.atan(0.5), places=14)

    def test_compose_with_square(self):
        # exp(z^2) = 1 + z^2 + z^4/2 + z^6/6
        composed = ps_compose(ps_exp(identity(6)), monomial(2, 6))
        np.testing.assert_allclose(composed.coeffs, [1.0, 0.0, 1.0, 0.0, 0.5, 0.0, 1.0 / 6.0], rtol=0, atol=1e-15)

    def test_compose_needs_zero_inner_constant(self):
        with self.assertRaises(DomainError):
            ps_compose(identity(3), constant(1.0, 3))

    def test_geometric_series_by_division(self):
        one = constant(1.0, 5)
        quotient = ps_div(one, one - identity(5))
        np.testing.assert_allclose(quotient.coeffs, np.ones(6), rtol=0, atol=1e-15)

    def test_division_by_zero_constant(self):
        with self.assertRaises(DomainError):
            ps_div(constant(1.0, 3), identity(3))

    def test_sqrt_of_square(self):
        square = PowerSeries.from_coeffs([1.0, 2.0, 1.0], 5)
        np.testing.assert_allclose(ps_sqrt(square).coeffs, [1.0, 1.0, 0.0, 0.0, 0.0, 0.0], rtol=0, atol=1e-15)

    def test_sqrt_needs_positive_constant(self):
        with self.assertRaises(DomainError):
            ps_sqrt(identity(3))

    def test_integrate_over_t(self):
        integral = ps_integrate_over_t(ps_arctan(5))
        np.testing.assert_allclose(integral.coeffs, [0.0, 1.0, 0.0, -1.0 / 9.0, 0.0, 1.0 / 25.0], rtol=0, atol=1e-16)

    def test_integrate_over_t_log_singularity(self):
        with self.assertRaises(DomainError):
            ps_integrate_over_t(constant(1.0, 3))

    def test_derivative_drops_order(self):
        d = ps_derivative(PowerSeries.from_coeffs([1.0, 2.0, 3.0, 4.0]))
        self.assertEqual(d.order, 2)
        np.testing.assert_array_equal(d.coeffs, [2.0, 6.0, 12.0])

    def test_shift_and_unshift(self):
        f = PowerSeries.from_coeffs([1.0, 2.0], 2)
        shifted = ps_shift(f)
        self.assertEqual(shifted.order, 3)
        np.testing.assert_array_equal(ps_unshift(shifted).coeffs, f.coeffs)

    def test_unshift_needs_zero_constant(self):
        with self.assertRaises(DomainError):
            ps_unshift(constant(2.0, 3))

    def test_truncate(self):
        self.assertEqual(ps_truncate(identity(6), 2).order, 2)
        with self.assertRaises(ContractError):
            ps_truncate(identity(2), 6)

    def test_complex_coefficients_stay_complex(self):
        f = PowerSeries.from_coeffs([1.0, 1j], 3)
        self.assertTrue(f.is_complex)
        self.assertTrue((f * f).is_complex)


class TestSeriesExamples(unittest.TestCase):
    def test_difference_of_squares(self):
        one, z = constant(1.0, 3), identity(3)
        np.testing.assert_array_equal(((one + z) * (one - z)).coeffs, [1.0, 0.0, -1.0, 0.0])

    def test_unit_is_the_identity_element(self):
        f = ps_arctan(9)
        np.testing.assert_array_equal((f * constant(1.0, 9)).coeffs, f.coeffs)

    def test_arctan_squared(self):
        square = ps_arctan(6) * ps_arctan(6)
        np.testing.assert_allclose(square.coeffs, [0.0, 0.0, 1.0, 0.0, -2.0 / 3.0, 0.0, 23.0 / 45.0], rtol=0, atol=1e-15)

    def test_arctan_of_cube(self):
        composed = ps_compose(ps_arctan(9), monomial(3, 9))
        expected = np.zeros(10)
        expected[3], expected[9] = 1.0, -1.0 / 3.0
        np.testing.assert_allclose(composed.coeffs, expected, rtol=0, atol=1e-16)

    def test_arctan_of_cayley_inverse(self):
        # w = (p - 1)/(p + 1) with p = (1 + z)/(1 - z) is z again
        one, z = constant(1.0, 12), identity(12)
        p = ps_div(one + z, one - z)
        w = ps_div(p - one, p + one)
        np.testing.assert_allclose(w.coeffs, z.coeffs, rtol=0, atol=1e-15)
        np.testing.assert_allclose(ps_compose(ps_arctan(12), w).coeffs, ps_arctan(12).coeffs, rtol=0, atol=1e-15)


def _random_series(rng, order=48, decay=0.9, zero_constant=False):
    coeffs = rng.uniform(-1.0, 1.0, order + 1) * decay ** np.arange(order + 1)
    if zero_constant:
        coeffs[0] = 0.0
    return PowerSeries(order, coeffs)


class TestSeriesProperties(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(2024)

    def test_mul_commutative(self):
        for _ in range(20):
            a, b = _random_series(self.rng), _random_series(self.rng)
            np.testing.assert_allclose((a * b).coeffs, (b * a).coeffs, rtol=0, atol=1e-13)

    def test_mul_associative(self):
        for _ in range(20):
            a, b, c = (_random_series(self.rng) for _ in range(3))
            np.testing.assert_allclose(((a * b) * c).coeffs, (a * (b * c)).coeffs, rtol=0, atol=1e-13)

    def test_exp_of_sum_is_product_of_exps(self):
        for _ in range(20):
            f = _random_series(self.rng, decay=0.5, zero_constant=True)
            g = _random_series(self.rng, decay=0.5, zero_constant=True)
            np.testing.assert_allclose(ps_exp(f + g).coeffs, (ps_exp(f) * ps_exp(g)).coeffs, rtol=0, atol=1e-11)

    def test_compose_with_identity_is_exact(self):
        for _ in range(10):
            f = _random_series(self.rng)
            np.testing.assert_array_equal(ps_compose(f, identity(f.order)).coeffs, f.coeffs)

    def test_integrate_over_t_round_trip(self):
        for _ in range(10):
            f = _random_series(self.rng, zero_constant=True)
            back = ps_shift(ps_derivative(ps_integrate_over_t(f)))
            self.assertEqual(back.order, f.order)
            np.testing.assert_allclose(back.coeffs, f.coeffs, rtol=1e-15, atol=0)

    def test_eval_of_product(self):
        modulus = 0.9 * np.sqrt(self.rng.uniform(0.0, 1.0, 200))
        z = modulus * np.exp(1j * self.rng.uniform(0.0, 2.0 * np.pi, 200))
        for _ in range(10):
            a = _random_series(self.rng, decay=0.5)
            b = _random_series(self.rng, decay=0.5)
            np.testing.assert_allclose(ps_eval(a * b, z), ps_eval(a, z) * ps_eval(b, z), rtol=1e-11, atol=1e-13)


if __name__ == '__main__':
    unittest.main()

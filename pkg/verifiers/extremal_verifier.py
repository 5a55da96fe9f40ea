"""
Extremal Verifier - checks of the extremal function tau_tilde and the growth theorem
"""
import logging
import math
from typing import Any, Dict

import numpy as np

from core.extremal import (
    build_f_n,
    build_from_psi,
    class_extremal,
    covering_radius,
    growth_bounds,
    koebe,
    membership_check,
    rotation_bound,
    subordination_ratio_check,
    table_one,
    tau_tilde,
)
from core.numerics import CATALAN, arctan_power_over_t, quad_oracle
from core.series import constant, identity, ps_arctan, ps_scale
from core.strip_domain import HALF_WIDTH
from .base_verifier import BaseVerifier

logger = logging.getLogger(__name__)

TAU_TILDE_COEFFS = (0.0, 1.0, 1.0, 0.5, 1.0 / 18.0, -5.0 / 72.0, -13.0 / 1800.0)
# f_n(z) = z + z^n/(n-1) + z^(2n-1)/(2(n-1)^2) + ...
F_N_DEGREES = (2, 3, 4, 6, 10, 12)


def _max_gap(values, expected) -> float:
    return float(np.max(np.abs(np.asarray(values) - np.asarray(expected))))


class ExtremalVerifier(BaseVerifier):
    """
    Verifier for the series construction of extremal functions and the
    growth, covering and rotation bounds they give.
    """

    name = "extremal"
    section = "extremal functions"

    def run(self) -> None:
        order = int(self.config.get("order", 48))
        angles = int(self.config.get("angles", 4096))

        # Series coefficients; f carries order + 1, degrees beyond it are skipped
        f_order = order + 1
        for degree, expected in enumerate(TAU_TILDE_COEFFS):
            item = f"tau_tilde.a{degree}"
            if degree > f_order:
                self.skip(item, expected, f"degree {degree} exceeds series order {f_order}")
                continue
            self.check(item, lambda k=degree: tau_tilde(order).f[k], expected, 1e-12)

        for n in F_N_DEGREES:
            item = f"f_n.n{n}.leading"
            if n > f_order:
                self.skip(item, 1.0 / (n - 1), f"degree {n} exceeds series order {f_order}")
                continue
            self.check(item, lambda n=n: build_f_n(n, order).f[n], 1.0 / (n - 1), 1e-12)
            if 2 * n - 1 <= f_order:
                self.check(
                    f"f_n.n{n}.second",
                    lambda n=n: build_f_n(n, order).f[2 * n - 1],
                    1.0 / (2.0 * (n - 1) ** 2),
                    1e-12,
                )
            if n > 2:
                self.check(f"f_n.n{n}.gap", lambda n=n: _max_gap(build_f_n(n, order).f.coeffs[2:n], 0.0), 0.0, 1e-15)

        self.check(
            "round_trip.tau_tilde",
            lambda: _max_gap(tau_tilde(order).logderiv.coeffs[: order + 1], (constant(1.0, order) + ps_arctan(order)).coeffs),
            0.0,
            1e-11,
        )
        self.check(
            "build.identity",
            lambda: _max_gap(build_from_psi(ps_scale(identity(order), 0.0)).f.coeffs, np.eye(1, order + 2, 1)[0]),
            0.0,
            1e-15,
        )
        self.check(
            "build.half_z",
            lambda: _max_gap(
                build_from_psi(ps_scale(identity(order), 0.5)).f.coeffs[1:],
                [0.5**k / math.factorial(k) for k in range(order + 1)],
            ),
            0.0,
            1e-12,
        )
        for name in ("L", "C", "e", "Delta", "wp"):
            self.check(f"class_extremal.{name}.builds", lambda name=name: class_extremal(name, order).f[1] == 1.0)

        # Growth and covering
        upper_half = 0.5 * math.exp(quad_oracle(arctan_power_over_t(1), 0.0, 0.5))
        lower_half = 0.5 * math.exp(quad_oracle(arctan_power_over_t(1, -1.0), 0.0, 0.5))
        self.check("growth.r_0.5.upper", lambda: growth_bounds(0.5, order)[1], upper_half, 1e-10)
        self.check("growth.r_0.5.lower", lambda: growth_bounds(0.5, order)[0], lower_half, 1e-10)
        self.check("growth.small_r", lambda: max(abs(b - 1e-6) for b in growth_bounds(1e-6, order)), 0.0, 1e-11)
        self.check("growth.monotone", lambda: self._growth_monotone(order))
        self.check("growth.table_one_ratio.r_0.9", lambda: subordination_ratio_check(0.9, angles, order)["ok"])
        self.check(
            "covering_radius",
            covering_radius,
            math.exp(-CATALAN),
            1e-10,
            printed=0.4006967,
            note="exp(-G), G Catalan's constant",
        )
        self.check("covering_radius.interval", lambda: 1.0 - HALF_WIDTH < covering_radius() < 1.0)
        self.check(
            "covering_radius.lower_bound_limit",
            lambda: growth_bounds(1.0 - 1e-6, order)[0],
            math.exp(-CATALAN),
            1e-5,
        )

        # Rotation
        self.check("rotation.small_r", lambda: rotation_bound(1e-4), 0.0, 1e-3)
        self.check("rotation.grid_doubling", lambda: abs(rotation_bound(0.5, 8192) - rotation_bound(0.5, 16384)), 0.0, 1e-8)
        self.check("rotation.dominates_half_z", lambda: self._rotation_dominates(0.5))

        # Membership
        self.check("membership.tau_tilde", lambda: membership_check(tau_tilde(order), angles=angles)["ok"])
        for index, member in enumerate(table_one(order), start=1):
            self.check(f"membership.table_one.f{index}", lambda m=member: membership_check(m, angles=angles)["ok"], note=member.label)
        self.check("membership.koebe", lambda: membership_check(koebe(order), angles=angles)["ok"], False)

    def _growth_monotone(self, order: int) -> bool:
        bounds = np.array([growth_bounds(r, order) for r in np.linspace(0.05, 0.95, 19)])
        return bool(np.all(bounds[:, 0] <= bounds[:, 1]) and np.all(np.diff(bounds, axis=0) > 0))

    def _rotation_dominates(self, r: float) -> bool:
        """|arg(f1(z)/z)| = |Im z/2| for f1 = z exp(z/2), on random points of |z| = r."""
        rng = np.random.default_rng(int(self.config.get("seed", 0)))
        z = r * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, 100))
        return bool(np.max(np.abs(np.imag(z / 2.0))) <= rotation_bound(r) + 1e-12)

    def get_info(self) -> Dict[str, Any]:
        return {
            "name": "Extremal Verifier",
            "description": "Builds extremal functions from psi and checks growth, covering and rotation bounds",
            "config": {key: self.config.get(key) for key in ("order", "angles")},
        }

"""
Radius Verifier - sharp radii, convexity radius and inclusion constants
"""
import logging
import math
from typing import Any, Dict

import numpy as np

from core.radius import (
    RADIUS_IN_CLASSES,
    TAU_RADIUS_CLASSES,
    convexity_function,
    convexity_radius,
    deviation_sampling_check,
    ellipse_in_strip,
    inclusion_constants,
    k_min,
    radius_in,
    sharpness_probe,
    solve_monotone,
    tau_radius_of,
)
from core.strip_domain import HALF_WIDTH, get_class
from .base_verifier import BaseVerifier

logger = logging.getLogger(__name__)

# Decimals quoted alongside the radius theorems
PRINTED_TAU_RADII = {"L": 0.953957, "C": 0.475838, "e": 0.579700, "Delta": 0.612626, "wp": 0.484035}
PRINTED_RADII_IN = {"e": 0.732368, "SG": 0.498088, "C": 0.786843, "wp": 0.385426, "Delta": 0.66347}


def _ellipse_mismatches(samples: int, seed: int) -> int:
    rng = np.random.default_rng(seed)
    k = 1.0 + 9.0 * (1.0 - rng.uniform(0.0, 1.0, samples))
    alpha = rng.uniform(0.0, 1.0, samples)
    return sum(ellipse_in_strip(kk, aa) != (kk >= k_min(aa)) for kk, aa in zip(k, alpha))


def _first_crossing(target: float, points: int = 1000001) -> float:
    """Scan oracle: first grid point where the convexity function drops to ``target``."""
    r = np.linspace(0.0, 1.0 - 1e-9, points)
    s = 1.0 - np.arctan(r)
    values = s - r / (s * (1.0 - r**4))
    return float(r[int(np.argmax(values <= target))])


class RadiusVerifier(BaseVerifier):
    """
    Verifier for the ten sharp radii between S*_tau and the comparison classes.
    """

    name = "radius"
    section = "radius problems"

    def run(self) -> None:
        angles = int(self.config.get("angles", 4096))
        seed = int(self.config.get("seed", 0))
        samples = int(self.config.get("samples", 10000))

        for name in TAU_RADIUS_CLASSES:
            self._radius_items(f"tau_radius_of.{name}", name, tau_radius_of, PRINTED_TAU_RADII[name], "tau_radius_of")
            descriptor = get_class(name)
            self.check(
                f"tau_radius_of.{name}.monotone",
                lambda d=descriptor, n=name: d.radial_deviation(0.999 * tau_radius_of(n).numeric)
                < HALF_WIDTH
                < d.radial_deviation(1.001 * tau_radius_of(n).numeric),
            )
        for name in RADIUS_IN_CLASSES:
            self._radius_items(f"radius_in.{name}", name, radius_in, PRINTED_RADII_IN[name], "radius_in")

        for name in ("tau", "L", "C", "e", "Delta", "wp", "SG"):
            self.check(f"deviation.{name}.r_0.9", lambda n=name: deviation_sampling_check(n, 0.9, angles)["ok"])

        self.check("solve_monotone.r_exp_r", lambda: solve_monotone(lambda r: r * math.exp(r), HALF_WIDTH, (0.0, 1.0)), 0.484035, 1e-6)
        self.check("solve_monotone.identity", lambda: solve_monotone(lambda r: r, 0.3, (0.0, 1.0)), 0.3, 1e-12)

        # Convexity radius
        self.check("convexity_radius.gamma_0", lambda: convexity_radius(0.0).numeric, 0.387888, 1e-5)
        self.check("convexity_radius.residual", lambda: convexity_radius(0.0).residual, 0.0, 1e-10)
        self.check(
            "convexity_radius.decreasing",
            lambda: bool(np.all(np.diff([convexity_radius(g).numeric for g in (0.0, 0.25, 0.5, 0.75)]) < 0)),
        )
        self.check("convexity_radius.gamma_0.5_scan", lambda: convexity_radius(0.5).numeric, _first_crossing(0.5), 2e-6)
        self.check("convexity_function.origin", lambda: convexity_function(0.0), 1.0, 0.0)

        # Inclusion constants
        constants = inclusion_constants()
        self.check("inclusion.alpha_star", lambda: constants["alpha_star"], 1.0 - HALF_WIDTH, 1e-15, printed=0.2146018)
        self.check("inclusion.reciprocal_bound", lambda: constants["reciprocal_bound"], 4.0 / (4.0 + math.pi), 1e-15, printed=0.560099)
        self.check("inclusion.m_threshold", lambda: constants["m_threshold"], 1.0 + HALF_WIDTH, 1e-15)
        self.check("inclusion.k_min_0", lambda: constants["k_min_0"], 1.0 + 4.0 / math.pi, 1e-15, printed=2.27324)
        self.check("ellipse.k_min_contact", lambda: ellipse_in_strip(1.0 + 4.0 / math.pi, 0.0))
        self.check("ellipse.k_2", lambda: ellipse_in_strip(2.0, 0.0), False)
        self.check("ellipse.k_10_alpha_0.9", lambda: ellipse_in_strip(10.0, 0.9))
        self.check("ellipse.random_equivalence", lambda: _ellipse_mismatches(samples, seed), 0.0, 0.0)

    def _radius_items(self, item: str, name: str, solver, printed: float, direction: str) -> None:
        result = {}

        def solved():
            if not result:
                result["value"] = solver(name)
            return result["value"]

        self.check(item, lambda: solved().numeric, solver(name).closed_form, 1e-10, printed=printed)
        self.check(f"{item}.residual", lambda: solved().residual, 0.0, 1e-10)
        self.check(f"{item}.sharpness", lambda: sharpness_probe(name, solved().numeric, direction)["ok"])

    def get_info(self) -> Dict[str, Any]:
        return {
            "name": "Radius Verifier",
            "description": "Solves the radius equations by bisection and probes sharpness at the contact points",
            "classes": {"tau_radius_of": list(TAU_RADIUS_CLASSES), "radius_in": list(RADIUS_IN_CLASSES)},
            "config": {key: self.config.get(key) for key in ("angles", "seed", "samples")},
        }

"""
Strip Domain Verifier - checks of tau = 1 + arctan z, the strip and Janowski membership
"""
import logging
import math
from typing import Any, Dict

import numpy as np

from core.errors import SingularInputError
from core.strip_domain import (
    HALF_WIDTH,
    JanowskiParams,
    contains_point,
    conjugation_residual,
    convexity_proxy,
    disk_in_strip,
    get_class,
    inscribed_disk_radius,
    janowski_member,
    re_range_on_circle,
    reciprocal_order_check,
    subordination_sample,
    symmetry_diagnostics,
    tau_eval,
)
from .base_verifier import BaseVerifier

logger = logging.getLogger(__name__)


def _raises_singular() -> bool:
    try:
        tau_eval(1j)
    except SingularInputError:
        return True
    return False


def _janowski_disagreements(samples: int, seed: int) -> int:
    """Random B < A; janowski_member raises when its three tests disagree."""
    rng = np.random.default_rng(seed)
    A = rng.uniform(-1.0, 1.0, samples)
    B = rng.uniform(-0.999, 0.999, samples)
    failures = 0
    for a, b in zip(A, B):
        if not b < a:
            continue
        try:
            janowski_member(JanowskiParams(float(a), float(b)))
        except Exception as e:
            logger.debug("janowski disagreement at A=%s, B=%s: %s", a, b, e)
            failures += 1
    return failures


class StripDomainVerifier(BaseVerifier):
    """
    Verifier for the map tau, its image strip and membership tests.
    """

    name = "strip_domain"
    section = "strip domain"

    def run(self) -> None:
        angles = int(self.config.get("angles", 4096))
        seed = int(self.config.get("seed", 0))
        samples = int(self.config.get("samples", 10000))

        # tau itself
        self.check("tau_eval.origin", lambda: abs(tau_eval(0.0) - 1.0), 0.0, 1e-15)
        self.check("tau_eval.imaginary_axis", lambda: tau_eval(0.5j).imag, math.atanh(0.5), 1e-12, printed=0.549306)
        self.check("tau_eval.singular_at_i", _raises_singular)
        self.check("tau_eval.conjugation", lambda: conjugation_residual(1000, seed), 0.0, 1e-14)
        self.check(
            "tau_eval.real_axis_increasing",
            lambda: bool(np.all(np.diff(np.real(tau_eval(np.linspace(-0.999, 0.999, 2001)))) > 0)),
        )
        self.check("re_range.r_0.5.lower", lambda: re_range_on_circle(0.5, 10000)[0], 1.0 - math.atan(0.5), 1e-12, printed=1.0 - 0.463648)
        self.check("re_range.r_0.999.upper", lambda: re_range_on_circle(0.999, angles)[1], 1.0 + math.atan(0.999), 1e-12)

        # Containment, closed and open
        self.check("contains.center", lambda: contains_point(1.0))
        self.check("contains.boundary_closed", lambda: contains_point(1.0 + HALF_WIDTH))
        self.check("contains.boundary_strict", lambda: contains_point(1.0 + HALF_WIDTH, strict=True), False)
        self.check("contains.tall_point", lambda: contains_point(1.0 + 10j))
        self.check("disk.inscribed", lambda: disk_in_strip(1.0, HALF_WIDTH))
        self.check("disk.small", lambda: disk_in_strip(1.0, 0.1))
        self.check("disk.too_far_right", lambda: disk_in_strip(1.6, 0.2), False)
        self.check("disk.inscribed_radius_r_0.9", lambda: inscribed_disk_radius(0.9, angles), math.atan(0.9), 1e-12)

        # Janowski examples: B = 0, A = 0 and B = -A
        b_limit = math.pi / (math.pi + 4.0)
        a_limit = math.pi / (math.pi + 8.0)
        self.check("janowski.B_zero.inside", lambda: janowski_member(JanowskiParams(HALF_WIDTH - 1e-9, 0.0)))
        self.check("janowski.B_zero.outside", lambda: janowski_member(JanowskiParams(HALF_WIDTH + 1e-6, 0.0)), False)
        self.check("janowski.A_zero.inside", lambda: janowski_member(JanowskiParams(0.0, -b_limit + 1e-9)))
        self.check("janowski.A_zero.outside", lambda: janowski_member(JanowskiParams(0.0, -b_limit - 1e-6)), False)
        self.check("janowski.B_minus_A.inside", lambda: janowski_member(JanowskiParams(a_limit - 1e-9, -a_limit + 1e-9)))
        self.check("janowski.B_minus_A.outside", lambda: janowski_member(JanowskiParams(a_limit + 1e-6, -a_limit - 1e-6)), False)
        self.check("janowski.random_agreement", lambda: _janowski_disagreements(samples, seed), 0.0, 0.0)

        # Sampled subordination
        psi_1 = lambda z: 1.0 + np.asarray(z) / 2.0
        psi_3 = lambda z: 1.0 + np.asarray(z) * np.sin(np.asarray(z)) / 4.0
        self.check(
            "subordination.half_z.margin",
            lambda: subordination_sample(psi_1, angles=angles)["worst_margin"],
            HALF_WIDTH - 0.5,
            1e-3,
            printed=0.285398,
        )
        self.check("subordination.z_sin_z", lambda: subordination_sample(psi_3, angles=angles)["ok"])
        self.check("subordination.one_plus_z", lambda: subordination_sample(lambda z: 1.0 + np.asarray(z), angles=angles)["ok"], False)
        self.check("subordination.tau_itself", lambda: subordination_sample(get_class("tau"), angles=angles)["ok"])

        # Symmetry, convexity and positivity
        for r in (0.5, 0.9):
            diagnostics = lambda r=r: symmetry_diagnostics(r, angles)
            self.check(f"symmetry.r_{r}.im", lambda d=diagnostics: d()["im_residual"], 0.0, 1e-12)
            self.check(f"symmetry.r_{r}.re", lambda d=diagnostics: d()["re_residual"], 0.0, 1e-12)

        proxy = {}

        def convexity(key):
            if not proxy:
                proxy.update(convexity_proxy(samples, seed))
            return proxy[key]

        self.check("convexity.min_re", lambda: convexity("min_re_convexity") > 0.0)
        self.check("convexity.series_route", lambda: convexity("series_residual"), 0.0, 1e-12)
        self.check("caratheodory.min_re_tau", lambda: convexity("min_re_tau") >= 1.0 - HALF_WIDTH)

        reciprocal = {}

        def reciprocal_value(key):
            if not reciprocal:
                reciprocal.update(reciprocal_order_check(angles=angles))
            return reciprocal[key]

        self.check(
            "reciprocal.axis_min",
            lambda: reciprocal_value("axis_min"),
            4.0 / (4.0 + math.pi),
            1e-3,
            note="minimum of 1/tau on the real diameter at r = 0.999",
        )
        self.check(
            "reciprocal.circle_below_axis",
            lambda: reciprocal_value("circle_min") < reciprocal_value("axis_min"),
            note="Re 1/tau is small near z = +-i",
        )

    def get_info(self) -> Dict[str, Any]:
        """
        Return information about the strip domain verifier.

        Returns:
            Dictionary with verifier capabilities and configuration
        """
        return {
            "name": "Strip Domain Verifier",
            "description": "Checks tau = 1 + arctan z, the strip 1 - pi/4 < Re w < 1 + pi/4 and membership tests",
            "capabilities": [
                "Principal-branch evaluation and range of Re tau on circles",
                "Point and disk containment, closed and open",
                "Janowski membership with three equivalent tests",
                "Sampled subordination of candidate psi functions",
            ],
            "config": {key: self.config.get(key) for key in ("angles", "seed", "samples")},
        }

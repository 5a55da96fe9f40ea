"""
Radius problems for S*_tau: transcendental root solves, the sharp radii in
both directions between S*_tau and the comparison classes, the convexity
radius, and the inclusion constants of the strip (starlike order, reciprocal
order, k-starlike ellipse condition).
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy import optimize, special

from .errors import BracketError, DomainError, UnknownClassError
from .strip_domain import BOUNDARY_TOL, DEFAULT_ANGLES, HALF_WIDTH, OMEGA_TAU, get_class, sampled_deviation, tau_eval

logger = logging.getLogger(__name__)

XTOL = 1e-13
TAU_RADIUS_CLASSES = ("L", "C", "e", "Delta", "wp")
RADIUS_IN_CLASSES = ("e", "SG", "C", "wp", "Delta")

CLOSED_FORMS: Dict[str, Callable[[], float]] = {
    "L": lambda: math.pi * (8.0 - math.pi) / 16.0,
    "C": lambda: math.sqrt(1.0 + 3.0 * math.pi / 8.0) - 1.0,
    "e": lambda: math.log(1.0 + math.pi / 4.0),
    "Delta": lambda: math.pi * (8.0 + math.pi) / (8.0 * (4.0 + math.pi)),
    "wp": lambda: float(special.lambertw(math.pi / 4.0).real),
}


@dataclass(frozen=True)
class RadiusResult:
    """
    A sharp radius with its closed form, numeric root and equation residual.

    Attributes:
        name: Row label, e.g. "S*_L -> S*_tau"
        closed_form: Closed-form value, None when only the root is known
        numeric: Root from bisection
        residual: |defining equation| at ``numeric``
        sharp_witness: Extremal function label and contact point
    """

    name: str
    closed_form: Optional[float]
    numeric: float
    residual: float
    sharp_witness: Optional[Dict[str, Any]] = field(default=None, compare=False)

    def __post_init__(self):
        if not 0.0 < self.numeric <= 1.0:
            raise DomainError(f"{self.name}: radius {self.numeric} outside (0, 1]")

    @property
    def closed_form_gap(self) -> Optional[float]:
        if self.closed_form is None:
            return None
        return abs(self.closed_form - self.numeric)


@dataclass(frozen=True)
class InclusionQuery:
    """Starlike order alpha, k-starlike parameter k and convexity order gamma."""

    alpha: float = 0.0
    k: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise DomainError(f"alpha must lie in [0, 1), got {self.alpha}")
        if self.k < 0.0:
            raise DomainError(f"k must be >= 0, got {self.k}")
        if not 0.0 <= self.gamma < 1.0:
            raise DomainError(f"gamma must lie in [0, 1), got {self.gamma}")


@dataclass(frozen=True)
class EllipseParams:
    """Centre (x0, y0) and semi-axes a, b of the k-starlike boundary conic for k > 1."""

    x0: float
    y0: float
    a: float
    b: float

    @property
    def right(self) -> float:
        return self.x0 + self.a

    @property
    def left(self) -> float:
        return self.x0 - self.a


def solve_monotone(h: Callable[[float], float], target: float, bracket: Tuple[float, float]) -> float:
    """
    Root of h(r) = target by bisection to an interval below 1e-13.

    Args:
        h: Continuous function on the bracket
        target: Level to solve for
        bracket: (lo, hi) with h - target changing sign

    Raises:
        BracketError: no sign change on the bracket
    """
    lo, hi = bracket
    f_lo, f_hi = h(lo) - target, h(hi) - target
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(f"no sign change on [{lo}, {hi}]: {f_lo:.3e}, {f_hi:.3e}")
    return optimize.bisect(lambda r: h(r) - target, lo, hi, xtol=XTOL, maxiter=200)


def convexity_function(r: float) -> float:
    """1 - arctan r - r/((1 - arctan r)(1 - r^4)); decreasing from 1 at r = 0."""
    s = 1.0 - math.atan(r)
    return s - r / (s * (1.0 - r**4))


def convexity_radius(gamma: float = 0.0) -> RadiusResult:
    """
    Radius of convexity of order gamma for S*_tau: least root of
    (1 - arctan r)(1 - r^4)(1 - arctan r - gamma) - r = 0.
    """
    if not 0.0 <= gamma < 1.0:
        raise DomainError(f"gamma must lie in [0, 1), got {gamma}")
    root = solve_monotone(convexity_function, gamma, (0.0, 1.0 - 1e-9))
    s = 1.0 - math.atan(root)
    residual = abs(s * (1.0 - root**4) * (s - gamma) - root)
    return RadiusResult(name=f"convexity radius (gamma={gamma:g})", closed_form=None, numeric=root, residual=residual)


def tau_radius_of(name: str) -> RadiusResult:
    """
    S*_tau-radius of a comparison class: radial_deviation(r) = pi/4.

    Raises:
        UnknownClassError: class not in the catalog or not covered here
    """
    descriptor = get_class(name)
    if name not in CLOSED_FORMS:
        raise UnknownClassError(f"no S*_tau-radius for class {name!r}")
    root = solve_monotone(descriptor.radial_deviation, HALF_WIDTH, (0.0, 1.0))
    contact_z = descriptor.contact_sign * root
    return RadiusResult(
        name=f"{descriptor.label} -> S*_tau",
        closed_form=CLOSED_FORMS[name](),
        numeric=root,
        residual=abs(descriptor.radial_deviation(root) - HALF_WIDTH),
        sharp_witness={
            "label": descriptor.witness,
            "contact_z": contact_z,
            "contact_value": 1.0 + descriptor.contact_sign * HALF_WIDTH,
        },
    )


def radius_in(name: str) -> RadiusResult:
    """
    Radius of S*_tau inside a comparison class: arctan r = delta, delta the
    class's centre-disk radius, so r = tan(delta).

    Raises:
        UnknownClassError: class not covered here
        DomainError: delta >= pi/2
    """
    descriptor = get_class(name)
    if name not in RADIUS_IN_CLASSES:
        raise UnknownClassError(f"no radius of S*_tau inside class {name!r}")
    delta = descriptor.center_disk_radius
    if delta >= math.pi / 2.0:
        raise DomainError(f"centre-disk radius {delta} leaves the range of arctan")
    if delta >= HALF_WIDTH:
        root, closed = 1.0, 1.0
    else:
        root, closed = solve_monotone(math.atan, delta, (0.0, 1.0)), math.tan(delta)
    return RadiusResult(
        name=f"S*_tau -> {descriptor.label}",
        closed_form=closed,
        numeric=root,
        residual=abs(math.atan(root) - delta) if delta < HALF_WIDTH else 0.0,
        sharp_witness={
            "label": "tau_tilde",
            "contact_z": -root,
            "contact_value": 1.0 - delta,
        },
    )


def radius_catalog() -> List[RadiusResult]:
    """All ten radii in a fixed order."""
    return [tau_radius_of(name) for name in TAU_RADIUS_CLASSES] + [radius_in(name) for name in RADIUS_IN_CLASSES]


def k_min(alpha: float) -> float:
    """Least k with the k-starlike ellipse of order alpha inside the strip."""
    return (math.pi + 4.0 * (1.0 - alpha)) / math.pi


def inclusion_constants() -> Dict[str, float]:
    return {
        "alpha_star": 1.0 - HALF_WIDTH,
        "reciprocal_bound": 4.0 / (4.0 + math.pi),
        "m_threshold": 1.0 + HALF_WIDTH,
        "k_min_0": k_min(0.0),
    }


def ellipse_params(k: float, alpha: float = 0.0) -> EllipseParams:
    """
    Boundary ellipse of {Re w > k|w - 1| + alpha} for k > 1.

    Raises:
        DomainError: k <= 1 (parabola or hyperbola) or alpha outside [0, 1)
    """
    if k <= 1.0:
        raise DomainError(f"boundary is an ellipse only for k > 1, got {k}")
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    k2 = k * k
    return EllipseParams(
        x0=(k2 - alpha) / (k2 - 1.0),
        y0=0.0,
        a=k * (1.0 - alpha) / (k2 - 1.0),
        b=(1.0 - alpha) / math.sqrt(k2 - 1.0),
    )


def ellipse_in_strip(k: float, alpha: float = 0.0) -> bool:
    """Whether the k-starlike ellipse of order alpha lies in the closed strip."""
    ellipse = ellipse_params(k, alpha)
    return ellipse.right <= OMEGA_TAU.right + BOUNDARY_TOL and ellipse.left >= OMEGA_TAU.left - BOUNDARY_TOL


def evaluate_query(query: InclusionQuery) -> Dict[str, Any]:
    """Which inclusions hold for the given alpha, k and gamma."""
    constants = inclusion_constants()
    result = {
        "starlike_of_order_alpha": query.alpha <= constants["alpha_star"],
        "kst_inside": query.k > 1.0 and ellipse_in_strip(query.k, query.alpha),
        "convexity_radius": convexity_radius(query.gamma).numeric,
    }
    return result


def sharpness_probe(name: str, r_star: float, direction: str = "tau_radius_of") -> Dict[str, Any]:
    """
    Evaluate the extremal z f'/f at the contact point of a radius.

    For ``tau_radius_of`` the witness is the class's own extremal function,
    so z f'/f = psi(+-r) must sit on a strip line. For ``radius_in`` the
    witness is tau_tilde, whose tau(-r) must meet psi(-1), the point of the
    class boundary nearest to 1.

    Returns:
        Dictionary with the contact distance, the margin at r_star/2 and the
        margin just past r_star (negative means the inclusion fails there)
    """
    descriptor = get_class(name)
    if direction == "tau_radius_of":
        sign = descriptor.contact_sign

        def margin(r):
            return float(OMEGA_TAU.margin(descriptor.psi_eval(sign * r)))

        contact_z = sign * r_star
        distance = abs(margin(r_star))
    elif direction == "radius_in":
        delta = descriptor.center_disk_radius

        def margin(r):
            return float(delta - abs(tau_eval(-r) - 1.0))

        contact_z = -r_star
        distance = abs(float(np.real(tau_eval(-min(r_star, 1.0 - 1e-12)))) - float(np.real(descriptor.psi_eval(-1.0))))
    else:
        raise DomainError(f"unknown direction {direction!r}")

    beyond = r_star * (1.0 + 1e-3)
    margin_beyond = margin(beyond) if beyond < 1.0 else -math.inf
    report = {
        "class": name,
        "direction": direction,
        "contact_z": contact_z,
        "distance": distance,
        "margin_half": margin(0.5 * r_star),
        "margin_beyond": margin_beyond,
    }
    report["ok"] = distance <= 1e-10 and report["margin_half"] > 0.0 and margin_beyond < 0.0
    return report


def deviation_sampling_check(name: str, r: float, angles: int = DEFAULT_ANGLES) -> Dict[str, Any]:
    """Closed-form radial deviation against the theta-grid maximum."""
    descriptor = get_class(name)
    closed = descriptor.radial_deviation(r)
    sampled = sampled_deviation(descriptor, r, angles)
    return {
        "class": name,
        "r": r,
        "closed": closed,
        "sampled": sampled,
        "ok": sampled <= closed + 1e-12 and closed - sampled <= 1e-9,
    }

"""
The map tau(z) = 1 + arctan z and its image, the vertical strip
1 - pi/4 < Re w < 1 + pi/4.

Also hosts the catalog of comparison Ma-Minda classes (their psi, centre-disk
radius and radial deviation), Janowski membership, and the sampling checks
used to confirm subordination into the strip.
"""
import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Sequence, Union

import numpy as np

from .errors import ContractError, DomainError, SingularInputError, UnknownClassError
from .series import (
    PowerSeries,
    constant,
    identity,
    monomial,
    ps_arctan,
    ps_div,
    ps_eval,
    ps_exp,
    ps_scale,
    ps_sqrt,
)

logger = logging.getLogger(__name__)

CENTER = 1.0
HALF_WIDTH = math.pi / 4
BOUNDARY_TOL = 1e-12
DEFAULT_RADII = (0.5, 0.9, 0.99, 0.999)
DEFAULT_ANGLES = 4096


@dataclass(frozen=True)
class StripDomain:
    """The strip {center - half_width <= Re w <= center + half_width}."""

    center: float = CENTER
    half_width: float = HALF_WIDTH

    def __post_init__(self):
        if self.half_width <= 0:
            raise DomainError("half_width must be positive")

    @property
    def left(self) -> float:
        return self.center - self.half_width

    @property
    def right(self) -> float:
        return self.center + self.half_width

    def margin(self, w):
        """Signed distance of Re w to the nearest boundary line (positive inside)."""
        return self.half_width - np.abs(np.real(w) - self.center)

    def contains(self, w, strict: bool = False):
        margin = self.margin(w)
        if strict:
            return margin > 0
        return margin >= -BOUNDARY_TOL


OMEGA_TAU = StripDomain()


def arctan_principal(z):
    """arctan z = (1/(2i)) Log((1 + iz)/(1 - iz)) on the principal branch."""
    z = np.asarray(z, dtype=np.complex128)
    return np.log((1 + 1j * z) / (1 - 1j * z)) / 2j


def tau_eval(z):
    """
    Evaluate tau(z) = 1 + arctan z for |z| < 1 (scalar or array).

    Raises:
        SingularInputError: z = +-i
        DomainError: |z| >= 1
    """
    arr = np.asarray(z, dtype=np.complex128)
    if np.any(np.isclose(arr, 1j, rtol=0, atol=1e-15) | np.isclose(arr, -1j, rtol=0, atol=1e-15)):
        raise SingularInputError("arctan is singular at z = +-i")
    if np.any(np.abs(arr) >= 1.0):
        raise DomainError("tau is evaluated on the open unit disk only")
    value = 1.0 + arctan_principal(arr)
    return value if value.ndim else complex(value)


def _circle(r: float, angles: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(angles) / angles
    return r * np.exp(1j * theta)


def re_range_on_circle(r: float, angles: int = DEFAULT_ANGLES) -> tuple:
    """
    Range of Re tau on |z| = r: (1 - arctan r, 1 + arctan r).

    The closed form is cross-checked against a theta-grid (which contains
    theta = 0 and pi when ``angles`` is even).

    Raises:
        DomainError: r outside (0, 1)
        ContractError: grid and closed form disagree
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    lo, hi = 1.0 - math.atan(r), 1.0 + math.atan(r)
    sampled = np.real(tau_eval(_circle(r, angles)))
    if sampled.min() < lo - 1e-12 or sampled.max() > hi + 1e-12:
        raise ContractError(f"Re tau leaves [{lo}, {hi}] on |z| = {r}")
    if angles % 2 == 0 and (abs(sampled.min() - lo) > 1e-12 or abs(sampled.max() - hi) > 1e-12):
        raise ContractError(f"Re tau extremes on |z| = {r} are not attained at z = -r, r")
    return lo, hi


def contains_point(w: complex, strict: bool = False) -> bool:
    """Whether w lies in the strip (closed by default, open with ``strict``)."""
    return bool(OMEGA_TAU.contains(w, strict))


def disk_in_strip(a: float, r: float) -> bool:
    """
    Whether the disk D(a, r) with real centre lies in the closed strip.

    Raises:
        DomainError: r < 0
    """
    if r < 0:
        raise DomainError(f"disk radius must be >= 0, got {r}")
    return abs(a - CENTER) <= HALF_WIDTH - r + BOUNDARY_TOL


def inscribed_disk_radius(r: float, angles: int = DEFAULT_ANGLES) -> float:
    """
    Radius of the largest disk about 1 inside tau(|z| <= r), which is arctan r.

    Cross-checked against the minimum of |tau(re^{it}) - 1| over a theta-grid.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    closed = math.atan(r)
    sampled = float(np.min(np.abs(tau_eval(_circle(r, angles)) - 1.0)))
    if abs(sampled - closed) > 1e-12:
        raise ContractError(f"inscribed disk mismatch: grid {sampled} vs arctan r {closed}")
    return closed


@dataclass(frozen=True)
class JanowskiParams:
    """Parameters of (1 + Az)/(1 + Bz) with -1 < B < A <= 1; B = +-1 is degenerate."""

    A: float
    B: float

    def __post_init__(self):
        if abs(self.B) >= 1.0:
            raise DomainError(f"degenerate Janowski map for B = {self.B}")
        if abs(self.A) > 1.0:
            raise DomainError(f"A must lie in [-1, 1], got {self.A}")
        if not self.B < self.A:
            raise DomainError(f"Janowski parameters need B < A, got A={self.A}, B={self.B}")

    @property
    def disk(self) -> tuple:
        """Centre and radius of the image disk of the unit disk."""
        denom = 1.0 - self.B**2
        return (1.0 - self.A * self.B) / denom, abs(self.A - self.B) / denom


def janowski_member(params: JanowskiParams) -> bool:
    """
    Whether (1 + Az)/(1 + Bz) is subordinate to tau.

    Uses the diameter endpoints (1 - A)/(1 - B) and (1 + A)/(1 + B) and
    asserts agreement with :func:`disk_in_strip` on the induced disk and
    with the branch form of the condition.

    Raises:
        ContractError: the three routes disagree
    """
    A, B = params.A, params.B
    ends = ((1.0 - A) / (1.0 - B), (1.0 + A) / (1.0 + B))
    by_ends = min(ends) >= OMEGA_TAU.left - BOUNDARY_TOL and max(ends) <= OMEGA_TAU.right + BOUNDARY_TOL
    a, r = params.disk
    by_disk = disk_in_strip(a, r)
    if by_ends != by_disk:
        raise ContractError(f"endpoint and disk tests disagree for A={A}, B={B}")
    if janowski_branch(params) != by_ends:
        raise ContractError(f"branch form disagrees for A={A}, B={B}")
    return by_ends


def janowski_branch(params: JanowskiParams) -> bool:
    """
    Branch form of the Janowski condition.

    The lower endpoint binds when the disk centre a <= 1, giving
    A <= pi/4 + (1 - pi/4) B; otherwise A <= pi/4 + (1 + pi/4) B.
    """
    A, B = params.A, params.B
    a, _ = params.disk
    slope = 1.0 - HALF_WIDTH if a <= CENTER else 1.0 + HALF_WIDTH
    return A <= HALF_WIDTH + slope * B + BOUNDARY_TOL


@dataclass(frozen=True)
class ClassDescriptor:
    """
    A Ma-Minda comparison class S*(psi).

    Attributes:
        name: Catalog key ("tau", "L", "C", "e", "Delta", "wp", "SG")
        label: Display name
        psi_eval: Vectorized psi with psi(0) = 1
        center_disk_radius: Largest delta with {|w - 1| < delta} inside psi(D)
        radial_deviation: r -> max over theta of |psi(re^{it}) - 1|
        psi_minus_one: order -> PowerSeries of psi - 1
        contact_sign: +1 or -1, the real point z = sign * r where the
            deviation meets the strip in the sharpness argument
        witness: Extremal function of S*(psi) used for sharpness
    """

    name: str
    label: str
    psi_eval: Callable[[Any], Any]
    center_disk_radius: float
    radial_deviation: Callable[[float], float]
    psi_minus_one: Callable[[int], PowerSeries]
    contact_sign: int = 1
    witness: str = ""


def _exp_series(order: int, scale: float = 1.0) -> PowerSeries:
    return ps_exp(ps_scale(identity(order), scale))


def _sqrt_one_plus(power: int, order: int) -> PowerSeries:
    return ps_sqrt(constant(1.0, order) + monomial(power, order))


def _sg_series(order: int) -> PowerSeries:
    e_minus = _exp_series(order, -1.0)
    one = constant(1.0, order)
    return ps_div(one - e_minus, one + e_minus)


CLASSES: Dict[str, ClassDescriptor] = {
    "tau": ClassDescriptor(
        name="tau",
        label="S*_tau",
        psi_eval=lambda z: 1.0 + arctan_principal(z),
        center_disk_radius=HALF_WIDTH,
        radial_deviation=lambda r: math.atanh(r),
        psi_minus_one=ps_arctan,
        contact_sign=1,
        witness="z exp(int_0^z arctan(t)/t dt)",
    ),
    "L": ClassDescriptor(
        name="L",
        label="S*_L",
        psi_eval=lambda z: np.sqrt(1.0 + np.asarray(z, dtype=np.complex128)),
        center_disk_radius=math.sqrt(2.0) - 1.0,
        radial_deviation=lambda r: 1.0 - math.sqrt(1.0 - r),
        psi_minus_one=lambda n: _sqrt_one_plus(1, n) - constant(1.0, n),
        contact_sign=-1,
        witness="4z/(sqrt(1+z)+1)^2 exp(2(sqrt(1+z)-1))",
    ),
    "C": ClassDescriptor(
        name="C",
        label="S*_C",
        psi_eval=lambda z: 1.0 + 4.0 * np.asarray(z) / 3.0 + 2.0 * np.asarray(z) ** 2 / 3.0,
        center_disk_radius=2.0 / 3.0,
        radial_deviation=lambda r: 4.0 * r / 3.0 + 2.0 * r * r / 3.0,
        psi_minus_one=lambda n: PowerSeries.from_coeffs([0.0, 4.0 / 3.0, 2.0 / 3.0][: n + 1], n),
        contact_sign=1,
        witness="z exp((z^2+4z)/3)",
    ),
    "e": ClassDescriptor(
        name="e",
        label="S*_e",
        psi_eval=lambda z: np.exp(np.asarray(z, dtype=np.complex128)),
        center_disk_radius=1.0 - 1.0 / math.e,
        radial_deviation=lambda r: math.expm1(r),
        psi_minus_one=lambda n: _exp_series(n) - constant(1.0, n),
        contact_sign=1,
        witness="z exp(int_0^z (e^t-1)/t dt)",
    ),
    "Delta": ClassDescriptor(
        name="Delta",
        label="Delta*",
        psi_eval=lambda z: np.asarray(z) + np.sqrt(1.0 + np.asarray(z, dtype=np.complex128) ** 2),
        center_disk_radius=2.0 - math.sqrt(2.0),
        radial_deviation=lambda r: r + math.sqrt(1.0 + r * r) - 1.0,
        psi_minus_one=lambda n: identity(n) + _sqrt_one_plus(2, n) - constant(1.0, n),
        contact_sign=1,
        witness="2z/(sqrt(1+z^2)+1) exp(z+sqrt(1+z^2)-1)",
    ),
    "wp": ClassDescriptor(
        name="wp",
        label="S*_wp",
        psi_eval=lambda z: 1.0 + np.asarray(z) * np.exp(np.asarray(z, dtype=np.complex128)),
        center_disk_radius=1.0 / math.e,
        radial_deviation=lambda r: r * math.exp(r),
        psi_minus_one=lambda n: identity(n) * _exp_series(n),
        contact_sign=1,
        witness="z exp(e^z-1)",
    ),
    "SG": ClassDescriptor(
        name="SG",
        label="S*_SG",
        psi_eval=lambda z: 2.0 / (1.0 + np.exp(-np.asarray(z, dtype=np.complex128))),
        center_disk_radius=(math.e - 1.0) / (math.e + 1.0),
        radial_deviation=lambda r: math.tan(r / 2.0),
        psi_minus_one=_sg_series,
        contact_sign=1,
        witness="z exp(int_0^z (2/(1+e^-t)-1)/t dt)",
    ),
}


def get_class(name: str) -> ClassDescriptor:
    """
    Look up a comparison class by catalog key.

    Raises:
        UnknownClassError: name not in the catalog
    """
    try:
        return CLASSES[name]
    except KeyError:
        raise UnknownClassError(f"unknown class {name!r}; known: {sorted(CLASSES)}") from None


def sampled_deviation(descriptor: ClassDescriptor, r: float, angles: int = DEFAULT_ANGLES) -> float:
    """Max over a theta-grid of |psi(re^{it}) - 1|."""
    return float(np.max(np.abs(descriptor.psi_eval(_circle(r, angles)) - 1.0)))


PsiLike = Union[ClassDescriptor, PowerSeries, Callable[[Any], Any]]


def _psi_callable(psi: PsiLike) -> Callable[[Any], Any]:
    if isinstance(psi, ClassDescriptor):
        return psi.psi_eval
    if isinstance(psi, PowerSeries):
        return lambda z: ps_eval(psi, z)
    return psi


def subordination_sample(
    psi: PsiLike,
    radii: Sequence[float] = DEFAULT_RADII,
    angles: int = DEFAULT_ANGLES,
) -> Dict[str, Any]:
    """
    Sample psi on circles and test every value against the strip.

    Sufficient for subordination here because the strip is convex and is
    exactly tau(D), so psi(0) = 1 and psi(D) inside the strip suffice.

    Args:
        psi: ClassDescriptor, series of psi, or vectorized callable
        radii: Sampling radii in (0, 1)
        angles: Points per circle

    Returns:
        Dictionary with ok, worst_margin, worst_point and per-radius margins
    """
    if any(not 0.0 < r < 1.0 for r in radii):
        raise DomainError("sampling radii must lie in (0, 1)")
    evaluate = _psi_callable(psi)
    worst_margin = math.inf
    worst_point = 0j
    per_radius = {}
    for r in radii:
        z = _circle(r, angles)
        margins = OMEGA_TAU.margin(evaluate(z))
        idx = int(np.argmin(margins))
        per_radius[r] = float(margins[idx])
        if margins[idx] < worst_margin:
            worst_margin = float(margins[idx])
            worst_point = complex(z[idx])
    return {
        "ok": worst_margin >= -BOUNDARY_TOL,
        "worst_margin": worst_margin,
        "worst_point": worst_point,
        "margins": per_radius,
    }


def symmetry_diagnostics(r: float, angles: int = DEFAULT_ANGLES) -> Dict[str, float]:
    """
    Residuals of the symmetry of g = arctan about the imaginary axis on |z| = r:
    Im g(t) = Im g(pi - t) and Re g(t) + Re g(pi - t) = 0.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    theta = np.linspace(0.0, np.pi, angles)
    g = arctan_principal(r * np.exp(1j * theta))
    g_reflected = arctan_principal(r * np.exp(1j * (np.pi - theta)))
    return {
        "im_residual": float(np.max(np.abs(g.imag - g_reflected.imag))),
        "re_residual": float(np.max(np.abs(g.real + g_reflected.real))),
    }


def _random_disk_points(rng: np.random.Generator, samples: int, radius: float = 0.999) -> np.ndarray:
    rho = radius * np.sqrt(rng.uniform(0.0, 1.0, samples))
    phase = rng.uniform(0.0, 2.0 * np.pi, samples)
    return rho * np.exp(1j * phase)


def conjugation_residual(samples: int = 1000, seed: int = 0) -> float:
    """Max of |tau(conj z) - conj tau(z)| over random points of the disk."""
    z = _random_disk_points(np.random.default_rng(seed), samples)
    return float(np.max(np.abs(tau_eval(np.conj(z)) - np.conj(tau_eval(z)))))


def convexity_proxy(samples: int = 10000, seed: int = 0, order: int = 64) -> Dict[str, float]:
    """
    Convexity of arctan: Re(1 + z g''/g') = Re((1 - z^2)/(1 + z^2)) > 0.

    Also compares the closed form with the arctan series on |z| <= 0.5,
    where the truncated series is accurate.
    """
    rng = np.random.default_rng(seed)
    z = _random_disk_points(rng, samples)
    closed = (1.0 - z**2) / (1.0 + z**2)
    carath = tau_eval(z).real

    g = ps_arctan(order)
    g1 = np.polynomial.polynomial.polyder(g.coeffs, 1)
    g2 = np.polynomial.polynomial.polyder(g.coeffs, 2)
    inner = z[np.abs(z) <= 0.5]
    from_series = 1.0 + inner * np.polynomial.polynomial.polyval(inner, g2) / np.polynomial.polynomial.polyval(inner, g1)
    inner_closed = (1.0 - inner**2) / (1.0 + inner**2)
    return {
        "min_re_convexity": float(np.min(closed.real)),
        "min_re_tau": float(np.min(carath)),
        "series_residual": float(np.max(np.abs(from_series - inner_closed))) if inner.size else 0.0,
    }


def reciprocal_order_check(points: int = 20001, r: float = 0.999, angles: int = DEFAULT_ANGLES) -> Dict[str, float]:
    """
    Minimum of 1/(1 + arctan x) on the real diameter, which tends to 4/(4 + pi)
    at x -> 1, next to the minimum of Re 1/tau on |z| = r (small near +-i).
    """
    x = np.linspace(-r, r, points)
    on_axis = 1.0 / (1.0 + np.arctan(x))
    on_circle = np.real(1.0 / tau_eval(_circle(r, angles)))
    return {
        "axis_min": float(np.min(on_axis)),
        "axis_limit": 4.0 / (4.0 + math.pi),
        "circle_min": float(np.min(on_circle)),
    }


def boundary_curves(
    r: float,
    classes: Iterable[str] = (),
    angles: int = 720,
    class_radius: float = 1.0 - 1e-9,
) -> Dict[str, np.ndarray]:
    """
    Polylines for plotting: tau(re^{it}), psi(e^{it}) per class, the strip
    lines and the inscribed disk D(1, pi/4).

    Returns:
        Dictionary name -> array of shape (angles, 3) with columns theta, re, im
    """
    theta = np.linspace(0.0, 2.0 * np.pi, angles)
    curves: Dict[str, np.ndarray] = {}

    def pack(values):
        values = np.asarray(values, dtype=np.complex128)
        return np.column_stack([theta, values.real, values.imag])

    curves["tau"] = pack(tau_eval(r * np.exp(1j * theta)))
    curves["disk"] = pack(CENTER + HALF_WIDTH * np.exp(1j * theta))
    height = np.linspace(-3.0, 3.0, angles)
    curves["strip_left"] = np.column_stack([theta, np.full(angles, OMEGA_TAU.left), height])
    curves["strip_right"] = np.column_stack([theta, np.full(angles, OMEGA_TAU.right), height])
    for name in classes:
        descriptor = get_class(name)
        curves[f"psi_{name}"] = pack(descriptor.psi_eval(class_radius * np.exp(1j * theta)))
    return curves


def class_names() -> List[str]:
    return list(CLASSES)

"""
Extremal and representative members of S*_tau and of the comparison classes.

Every member is built from z f'/f = psi through
f(z) = z exp(int_0^z (psi(t) - 1)/t dt), then checked by recomputing z f'/f
from the series. Growth, covering and rotation bounds come from the extremal
function tau_tilde (n = 2 in :func:`build_f_n`).
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ContractError, DomainError
from .numerics import CATALAN, arctan_log_integral, arctan_power_over_t, bounded_argmax, quad_oracle
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    identity,
    monomial,
    ps_arctan,
    ps_compose,
    ps_derivative,
    ps_div,
    ps_eval,
    ps_exp,
    ps_integrate_over_t,
    ps_scale,
    ps_shift,
    ps_unshift,
)
from .strip_domain import DEFAULT_ANGLES, DEFAULT_RADII, arctan_principal, get_class, subordination_sample

logger = logging.getLogger(__name__)

ROUND_TRIP_TOL = 1e-11
SERIES_RADIUS_LIMIT = 0.95
TAIL_TOL = 1e-13
MAX_AUTO_ORDER = 200000


@dataclass(frozen=True)
class ExtremalFunction:
    """
    A normalized member f(z) = z + a_2 z^2 + ... with its log-derivative.

    Attributes:
        f: Series of f
        logderiv: Series of z f'/f
        label: Display name
        psi: Exact z f'/f, used where the truncated series is unreliable
        f_exact: Exact f, when a closed form is known
    """

    f: PowerSeries
    logderiv: PowerSeries
    label: str
    psi: Optional[Callable[[Any], Any]] = field(default=None, compare=False)
    f_exact: Optional[Callable[[Any], Any]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.f.order < 1 or abs(self.f[0]) > 1e-14 or abs(self.f[1] - 1.0) > 1e-14:
            raise ContractError(f"{self.label}: f must satisfy f(0) = 0 and f'(0) = 1")
        if abs(self.logderiv[0] - 1.0) > 1e-14:
            raise ContractError(f"{self.label}: z f'/f must equal 1 at the origin")

    @property
    def coefficients(self) -> np.ndarray:
        return self.f.coeffs


def _logderiv(f: PowerSeries) -> PowerSeries:
    return ps_div(ps_derivative(f), ps_unshift(f))


def build_from_psi(
    psi_minus_one: PowerSeries,
    label: str = "",
    psi: Optional[Callable[[Any], Any]] = None,
    f_exact: Optional[Callable[[Any], Any]] = None,
) -> ExtremalFunction:
    """
    f = z exp(int_0^z (psi(t) - 1)/t dt) from the series of psi - 1.

    The result has order ``psi_minus_one.order + 1`` since the factor z is exact.

    Raises:
        DomainError: psi - 1 does not vanish at 0
        ContractError: recomputed z f'/f differs from psi
    """
    f = ps_shift(ps_exp(ps_integrate_over_t(psi_minus_one)))
    logderiv = _logderiv(f)
    expected = psi_minus_one.coeffs.astype(logderiv.coeffs.dtype, copy=True)
    expected[0] += 1.0
    scale = max(1.0, float(np.max(np.abs(f.coeffs))))
    drift = float(np.max(np.abs(logderiv.coeffs - expected)))
    if drift > ROUND_TRIP_TOL * scale:
        raise ContractError(f"{label or 'f'}: z f'/f drifts from psi by {drift:.3e}")
    return ExtremalFunction(f=f, logderiv=logderiv, label=label, psi=psi, f_exact=f_exact)


def build_f_n(n: int, order: int = DEFAULT_ORDER) -> ExtremalFunction:
    """
    f_n(z) = z exp(int_0^z arctan(t^(n-1))/t dt); a_n = 1/(n - 1) is its first
    nonzero coefficient after z.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    power = n - 1
    psi_minus_one = ps_compose(ps_arctan(order), monomial(power, order))

    def psi(z):
        return 1.0 + arctan_principal(np.asarray(z, dtype=np.complex128) ** power)

    label = "tau_tilde" if n == 2 else f"f_{n}"
    return build_from_psi(psi_minus_one, label=label, psi=psi)


@lru_cache(maxsize=16)
def tau_tilde(order: int = DEFAULT_ORDER) -> ExtremalFunction:
    """The extremal function z exp(int_0^z arctan(t)/t dt) of S*_tau."""
    return build_f_n(2, order)


def koebe(order: int = DEFAULT_ORDER) -> ExtremalFunction:
    """Koebe function z/(1 - z)^2 = sum k z^k."""
    coeffs = np.arange(order + 1, dtype=float)
    return ExtremalFunction(
        f=PowerSeries(order, coeffs),
        logderiv=_logderiv(PowerSeries(order, coeffs)),
        label="koebe",
        psi=lambda z: (1.0 + np.asarray(z)) / (1.0 - np.asarray(z)),
        f_exact=lambda z: np.asarray(z) / (1.0 - np.asarray(z)) ** 2,
    )


def order_for_radius(r: float, decay_power: int = 0, base_order: int = DEFAULT_ORDER) -> int:
    """Smallest order N >= base_order with r^N / N^decay_power below the tail tolerance."""
    if r <= 0.0:
        return base_order
    n = base_order
    while r**n / max(n, 1) ** decay_power >= TAIL_TOL:
        n = int(n * 1.25) + 1
        if n > MAX_AUTO_ORDER:
            raise DomainError(f"radius {r} is too close to 1 for series evaluation")
    return n


def _check_radius(r: float) -> None:
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")


def growth_bounds(r: float, order: int = DEFAULT_ORDER) -> tuple:
    """
    Sharp growth bounds (-tau_tilde(-r), tau_tilde(r)) for |z| = r.

    Quadrature gives the returned values; for r <= 0.95 the series of
    tau_tilde, at an order large enough for the tail to vanish, must agree
    within 1e-9.

    Raises:
        DomainError: r outside (0, 1)
        ContractError: series and quadrature disagree
    """
    _check_radius(r)
    upper = r * math.exp(arctan_log_integral(r))
    lower = r * math.exp(arctan_log_integral(r, sign=-1.0))
    if r <= SERIES_RADIUS_LIMIT:
        member = tau_tilde(order_for_radius(r, base_order=order))
        series_upper = float(np.real(ps_eval(member.f, r)))
        series_lower = -float(np.real(ps_eval(member.f, -r)))
        if abs(series_upper - upper) > 1e-9 or abs(series_lower - lower) > 1e-9:
            raise ContractError(
                f"growth bounds at r={r}: series ({series_lower}, {series_upper}) vs quadrature ({lower}, {upper})"
            )
    else:
        logger.debug("growth_bounds: r=%s above series limit, quadrature only", r)
    return lower, upper


def covering_radius() -> float:
    """
    Koebe-type covering radius -tau_tilde(-1) = exp(-G), G Catalan's constant.

    Raises:
        ContractError: adaptive Simpson and QUADPACK values of G disagree
    """
    g = arctan_log_integral(1.0)
    oracle = quad_oracle(arctan_power_over_t(1), 0.0, 1.0)
    if abs(g - oracle) > 1e-10 or abs(g - CATALAN) > 1e-10:
        raise ContractError(f"Catalan integral mismatch: simpson {g}, quad {oracle}")
    return math.exp(-g)


def _inverse_tangent_integral(r: float) -> PowerSeries:
    # int_0^z arctan(t)/t dt, coefficients decay like 1/k^2
    return ps_integrate_over_t(ps_arctan(order_for_radius(r, decay_power=2)))


def rotation_bound(r: float, angles: int = 8192) -> float:
    """
    max over |z| = r of |arg(tau_tilde(z)/z)| = |Im int_0^z arctan(t)/t dt|.

    The theta-grid maximum (smallest angle on ties) is refined with a bounded
    scalar search over the neighbouring cells.
    """
    _check_radius(r)
    ti2 = _inverse_tangent_integral(r)

    def arg_at(theta):
        return np.abs(np.imag(ps_eval(ti2, r * np.exp(1j * np.asarray(theta)))))

    theta = 2.0 * np.pi * np.arange(angles) / angles
    values = arg_at(theta)
    idx = int(np.argmax(values))
    step = 2.0 * np.pi / angles
    _, refined = bounded_argmax(lambda t: float(arg_at(t)), theta[idx] - step, theta[idx] + step)
    return max(float(values[idx]), refined)


def _evaluator_for(member: ExtremalFunction, r: float) -> Tuple[Callable[[Any], Any], bool]:
    """Evaluator of z f'/f on |z| = r, and whether it is a series truncated too early for r."""
    truncated = r > SERIES_RADIUS_LIMIT or member.logderiv.order < order_for_radius(r, base_order=1)
    if truncated and member.psi is not None:
        return member.psi, False
    if truncated:
        logger.warning("%s: no exact psi, sampling truncated series at r=%s", member.label, r)
    return (lambda z: ps_eval(member.logderiv, z)), truncated


def membership_check(
    member: ExtremalFunction,
    radii: Sequence[float] = DEFAULT_RADII,
    angles: int = DEFAULT_ANGLES,
) -> Dict[str, Any]:
    """
    Sample z f'/f on circles and test it against the strip.

    The series is sampled only while its order resolves |z| = r (and never
    beyond r = 0.95); otherwise the exact psi is used. Radii where only a too
    short series was available are listed under ``truncated``.
    """
    worst = {"ok": True, "worst_margin": math.inf, "worst_point": 0j, "margins": {}, "truncated": []}
    for r in radii:
        evaluator, truncated = _evaluator_for(member, r)
        if truncated:
            worst["truncated"].append(r)
        report = subordination_sample(evaluator, [r], angles)
        worst["margins"][r] = report["worst_margin"]
        if report["worst_margin"] < worst["worst_margin"]:
            worst["worst_margin"] = report["worst_margin"]
            worst["worst_point"] = report["worst_point"]
        worst["ok"] = worst["ok"] and report["ok"]
    worst["label"] = member.label
    return worst


def class_extremal(name: str, order: int = DEFAULT_ORDER) -> ExtremalFunction:
    """Sharpness witness of a comparison class, built from its psi - 1 series."""
    descriptor = get_class(name)
    return build_from_psi(descriptor.psi_minus_one(order), label=descriptor.witness, psi=descriptor.psi_eval)


def _sin_series(order: int) -> PowerSeries:
    coeffs = np.zeros(order + 1)
    for k in range(1, order + 1, 2):
        coeffs[k] = (-1.0) ** ((k - 1) // 2) / math.factorial(k)
    return PowerSeries(order, coeffs)


def table_one(order: int = DEFAULT_ORDER) -> List[ExtremalFunction]:
    """
    Three members of S*_tau with psi(D) inside the strip:
    psi = 1 + z/2, 1 + z e^(z/17)/2 and 1 + z sin(z)/4.
    """
    z = identity(order)
    half_z = ps_scale(z, 0.5)
    second = ps_scale(z * ps_exp(ps_scale(z, 1.0 / 17.0)), 0.5)
    third = ps_scale(z * _sin_series(order), 0.25)

    def cz(w):
        return np.asarray(w, dtype=np.complex128)

    return [
        build_from_psi(
            half_z,
            label="z exp(z/2)",
            psi=lambda w: 1.0 + cz(w) / 2.0,
            f_exact=lambda w: cz(w) * np.exp(cz(w) / 2.0),
        ),
        build_from_psi(
            second,
            label="z exp((17/2)(e^(z/17)-1))",
            psi=lambda w: 1.0 + cz(w) * np.exp(cz(w) / 17.0) / 2.0,
            f_exact=lambda w: cz(w) * np.exp(8.5 * np.expm1(cz(w) / 17.0)),
        ),
        build_from_psi(
            third,
            label="z exp((1-cos z)/4)",
            psi=lambda w: 1.0 + cz(w) * np.sin(cz(w)) / 4.0,
            f_exact=lambda w: cz(w) * np.exp((1.0 - np.cos(cz(w))) / 4.0),
        ),
    ]


def subordination_ratio_check(r: float, angles: int = DEFAULT_ANGLES, order: int = DEFAULT_ORDER) -> Dict[str, Any]:
    """|f(z)/z| <= tau_tilde(r)/r on |z| = r for every member of :func:`table_one`."""
    _check_radius(r)
    _, upper = growth_bounds(r, order)
    bound = upper / r
    z = r * np.exp(2j * np.pi * np.arange(angles) / angles)
    ratios = {}
    for member in table_one(order):
        ratios[member.label] = float(np.max(np.abs(member.f_exact(z) / z)))
    return {
        "ok": all(value <= bound + 1e-12 for value in ratios.values()),
        "bound": bound,
        "ratios": ratios,
    }


def growth_table(radii: Sequence[float], order: int = DEFAULT_ORDER, angles: int = 8192) -> List[Dict[str, float]]:
    """Rows of radius, lower and upper growth bound, and rotation bound."""
    rows = []
    for r in radii:
        lower, upper = growth_bounds(r, order)
        rows.append({"radius": r, "lower": lower, "upper": upper, "rotation": rotation_bound(r, angles)})
    return rows

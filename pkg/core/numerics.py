"""
Small numerical building blocks shared by the core modules.

Adaptive Simpson quadrature is the primary integrator for the smooth
integrands ``arctan(t**k)/t`` on [0, 1]; ``scipy.integrate.quad`` serves as
the independent oracle in the verifiers and tests.
"""
import logging
import math
from typing import Callable, Tuple

import numpy as np
from scipy import integrate, optimize

from .errors import DomainError

logger = logging.getLogger(__name__)

QUAD_TOL = 1e-12
CATALAN = 0.915965594177219015054603514932384110774


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = QUAD_TOL,
    max_depth: int = 50,
) -> float:
    """
    Adaptive Simpson quadrature with Richardson correction.

    Args:
        f: Integrand, evaluated at scalar points
        a: Lower limit
        b: Upper limit
        tol: Absolute tolerance for the whole interval
        max_depth: Maximum bisection depth per branch

    Returns:
        Approximation of the integral of f over [a, b]
    """
    if a == b:
        return 0.0

    def simpson(fa, fm, fb, lo, hi):
        return (hi - lo) * (fa + 4.0 * fm + fb) / 6.0

    def recurse(lo, hi, fa, fm, fb, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = f(lm)
        frm = f(rm)
        left = simpson(fa, flm, fm, lo, mid)
        right = simpson(fm, frm, fb, mid, hi)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15.0 * eps:
            if depth <= 0:
                logger.debug("adaptive_simpson hit max depth on [%g, %g]", lo, hi)
            return left + right + delta / 15.0
        return recurse(lo, mid, fa, flm, fm, left, 0.5 * eps, depth - 1) + recurse(
            mid, hi, fm, frm, fb, right, 0.5 * eps, depth - 1
        )

    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    return recurse(a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, max_depth)


def arctan_power_over_t(power: int = 1, sign: float = 1.0) -> Callable[[float], float]:
    """
    Integrand ``arctan(sign * t**power) / t`` with its removable value at t = 0.

    Args:
        power: Exponent k >= 1
        sign: +1 or -1 (the lower growth bound integrates arctan(-t)/t)

    Returns:
        Scalar callable
    """
    if power < 1:
        raise DomainError(f"power must be >= 1, got {power}")

    def integrand(t: float) -> float:
        if t == 0.0:
            return sign if power == 1 else 0.0
        return math.atan(sign * t**power) / t

    return integrand


def arctan_log_integral(r: float, power: int = 1, sign: float = 1.0, tol: float = QUAD_TOL) -> float:
    """Integral of arctan(sign * t**power)/t over [0, r] by adaptive Simpson."""
    return adaptive_simpson(arctan_power_over_t(power, sign), 0.0, r, tol)


def quad_oracle(f: Callable[[float], float], a: float, b: float) -> float:
    """Independent reference value from QUADPACK."""
    value, _ = integrate.quad(f, a, b, epsabs=1e-14, epsrel=1e-14, limit=200)
    return value


def bounded_argmax(
    f: Callable[[float], float], lo: float, hi: float, xatol: float = 1e-12
) -> Tuple[float, float]:
    """
    Maximize a unimodal scalar function on [lo, hi].

    Returns:
        (argmax, max value); endpoints are compared too, so boundary maxima
        are not lost to the interior search
    """
    res = optimize.minimize_scalar(lambda x: -f(x), bounds=(lo, hi), method="bounded", options={"xatol": xatol})
    candidates = [(res.x, -res.fun), (lo, f(lo)), (hi, f(hi))]
    return max(candidates, key=lambda item: (item[1], -item[0]))


def grid_argmax(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, points: int) -> Tuple[float, float]:
    """Vectorized grid maximum; ties resolve to the smallest abscissa."""
    xs = np.linspace(lo, hi, points)
    values = f(xs)
    idx = int(np.argmax(values))
    return float(xs[idx]), float(values[idx])

"""
Truncated power series with exact-order arithmetic.

A :class:`PowerSeries` holds the Taylor coefficients ``c_0 .. c_N`` of an
analytic function about 0. Every operation keeps the truncation degree ``N``
fixed: nothing is read or written beyond it, and there is no silent order
growth. Operands of binary operations must share the same order.

    >>> z = identity(5)
    >>> ps_exp(z).coeffs        # 1, 1, 1/2, 1/6, 1/24, 1/120
    >>> ps_arctan(5).coeffs     # 0, 1, 0, -1/3, 0, 1/5

Coefficients are real doubles unless a complex coefficient is supplied, in
which case the whole series is complex (needed when Carathéodory coefficients
are converted into Schwarz-function coefficients).
"""
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .errors import ContractError, DomainError

Number = Union[int, float, complex]

DEFAULT_ORDER = 48


def _as_coefficients(values: Iterable[Number]) -> np.ndarray:
    arr = np.array(list(values) if not isinstance(values, np.ndarray) else values)
    if arr.ndim != 1:
        raise ContractError("coefficients must be a one-dimensional sequence")
    dtype = np.complex128 if np.iscomplexobj(arr) else np.float64
    arr = arr.astype(dtype, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """
    Taylor coefficients ``c_0 .. c_N`` of a function truncated at degree ``order``.

    Attributes:
        order: Truncation degree N (>= 0)
        coeffs: Read-only array of exactly ``order + 1`` coefficients
    """

    order: int
    coeffs: np.ndarray

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"order must be >= 0, got {self.order}")
        coeffs = _as_coefficients(self.coeffs)
        if coeffs.shape[0] != self.order + 1:
            raise ContractError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {coeffs.shape[0]}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int = None) -> "PowerSeries":
        """
        Build a series from leading coefficients, zero-padding up to ``order``.

        Args:
            coeffs: Leading coefficients c_0, c_1, ...
            order: Truncation degree; defaults to ``len(coeffs) - 1``

        Returns:
            PowerSeries of the requested order
        """
        values = _as_coefficients(coeffs)
        if order is None:
            order = len(values) - 1
        if len(values) > order + 1:
            raise ContractError(f"{len(values)} coefficients do not fit order {order}")
        padded = np.zeros(order + 1, dtype=values.dtype)
        padded[: len(values)] = values
        return cls(order, padded)

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.coeffs)

    def __getitem__(self, k: int) -> Number:
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_arith(self, other, "add")

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_arith(self, other, "sub")

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_arith(self, other, "mul")

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_div(self, other)

    def __call__(self, z):
        return ps_eval(self, z)

    def __repr__(self) -> str:
        return f"PowerSeries(order={self.order}, coeffs={np.array2string(self.coeffs, precision=6)})"


def constant(value: Number, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Series of the constant function ``value``."""
    return PowerSeries.from_coeffs([value], order)


def identity(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Series of ``z`` (the identity map)."""
    if order == 0:
        return constant(0.0, 0)
    return PowerSeries.from_coeffs([0.0, 1.0], order)


def monomial(power: int, order: int = DEFAULT_ORDER, coefficient: Number = 1.0) -> PowerSeries:
    """Series of ``coefficient * z**power`` (zero if power exceeds the order)."""
    coeffs = np.zeros(order + 1)
    if power <= order:
        coeffs = coeffs.astype(np.result_type(coeffs, np.asarray(coefficient)))
        coeffs[power] = coefficient
    return PowerSeries(order, coeffs)


def _check_same_order(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise ContractError(f"order mismatch: {a.order} vs {b.order}")


def ps_arith(a: PowerSeries, b: PowerSeries, op: str) -> PowerSeries:
    """
    Coefficient-wise add/sub or truncated Cauchy product.

    Args:
        a: Left operand
        b: Right operand (same order as ``a``)
        op: One of "add", "sub", "mul"

    Returns:
        Result truncated at the common order

    Raises:
        ContractError: operands of different order or unknown op
    """
    _check_same_order(a, b)
    if op == "add":
        return PowerSeries(a.order, a.coeffs + b.coeffs)
    if op == "sub":
        return PowerSeries(a.order, a.coeffs - b.coeffs)
    if op == "mul":
        return PowerSeries(a.order, np.convolve(a.coeffs, b.coeffs)[: a.order + 1])
    raise ContractError(f"unknown series operation: {op!r}")


def ps_scale(a: PowerSeries, factor: Number) -> PowerSeries:
    """Multiply every coefficient by ``factor``."""
    return PowerSeries(a.order, a.coeffs * factor)


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """
    Taylor coefficients of ``f(g(z))`` through the common order.

    Horner's scheme over series; exact through degree N because g(0) = 0.

    Raises:
        ContractError: order mismatch
        DomainError: g(0) != 0
    """
    _check_same_order(f, g)
    if g.coeffs[0] != 0:
        raise DomainError("composition needs g(0) == 0")
    result = constant(f.coeffs[-1], f.order)
    for c in f.coeffs[-2::-1]:
        result = result * g
        head = result.coeffs.astype(np.result_type(result.coeffs, np.asarray(c)), copy=True)
        head[0] += c
        result = PowerSeries(f.order, head)
    return result


def ps_exp(f: PowerSeries) -> PowerSeries:
    """
    Series of ``exp(f)`` for ``f(0) == 0``.

    Uses h_0 = 1 and n h_n = sum_{k=1..n} k f_k h_{n-k}.

    Raises:
        DomainError: nonzero constant term
    """
    if f.coeffs[0] != 0:
        raise DomainError("ps_exp needs a zero constant term")
    n_max = f.order
    h = np.zeros(n_max + 1, dtype=f.coeffs.dtype)
    h[0] = 1.0
    weighted = np.arange(n_max + 1) * f.coeffs
    for n in range(1, n_max + 1):
        h[n] = np.dot(weighted[1 : n + 1], h[n - 1 :: -1][:n]) / n
    return PowerSeries(n_max, h)


def ps_integrate_over_t(f: PowerSeries) -> PowerSeries:
    """
    Antiderivative of ``f(t)/t`` vanishing at 0: g_0 = 0, g_k = f_k / k.

    Raises:
        DomainError: nonzero constant term (log singularity)
    """
    if f.coeffs[0] != 0:
        raise DomainError("f(t)/t has a log singularity when f(0) != 0")
    g = np.zeros_like(f.coeffs)
    k = np.arange(1, f.order + 1)
    g[1:] = f.coeffs[1:] / k
    return PowerSeries(f.order, g)


def ps_arctan(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Maclaurin series of arctan z: (-1)^k/(2k+1) at degree 2k+1."""
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    coeffs = np.zeros(order + 1)
    odd = np.arange(1, order + 1, 2)
    coeffs[odd] = (-1.0) ** ((odd - 1) // 2) / odd
    return PowerSeries(order, coeffs)


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """
    Quotient ``q`` with ``a = b * q`` through the common order.

    Raises:
        ContractError: order mismatch
        DomainError: b(0) == 0
    """
    _check_same_order(a, b)
    if b.coeffs[0] == 0:
        raise DomainError("division by a series with b(0) == 0")
    dtype = np.result_type(a.coeffs, b.coeffs)
    q = np.zeros(a.order + 1, dtype=dtype)
    b0 = b.coeffs[0]
    for n in range(a.order + 1):
        acc = a.coeffs[n] - np.dot(b.coeffs[1 : n + 1], q[n - 1 :: -1][:n]) if n else a.coeffs[0]
        q[n] = acc / b0
    return PowerSeries(a.order, q)


def ps_eval(f: PowerSeries, z):
    """
    Evaluate the truncated polynomial at ``z`` (scalar or array).

    Truncation error grows as |z| -> 1; see the DEFAULT_ORDER note in DESIGN.md.
    """
    return np.polynomial.polynomial.polyval(z, f.coeffs)


def ps_derivative(f: PowerSeries) -> PowerSeries:
    """Derivative; the order drops by one (a constant series stays order 0)."""
    if f.order == 0:
        return PowerSeries(0, np.zeros(1, dtype=f.coeffs.dtype))
    k = np.arange(1, f.order + 1)
    return PowerSeries(f.order - 1, f.coeffs[1:] * k)


def ps_shift(f: PowerSeries, k: int = 1) -> PowerSeries:
    """Multiply by ``z**k``; the order grows by ``k`` since those terms are known exactly."""
    coeffs = np.concatenate([np.zeros(k, dtype=f.coeffs.dtype), f.coeffs])
    return PowerSeries(f.order + k, coeffs)


def ps_unshift(f: PowerSeries) -> PowerSeries:
    """
    Divide by ``z``; the order drops by one.

    Raises:
        DomainError: f(0) != 0
    """
    if f.coeffs[0] != 0:
        raise DomainError("f/z is singular when f(0) != 0")
    if f.order == 0:
        raise DomainError("cannot divide an order-0 series by z")
    return PowerSeries(f.order - 1, f.coeffs[1:])


def ps_truncate(f: PowerSeries, order: int) -> PowerSeries:
    """Explicitly drop every coefficient above ``order``."""
    if order > f.order:
        raise ContractError(f"cannot truncate order {f.order} up to {order}")
    return PowerSeries(order, f.coeffs[: order + 1])


def ps_sqrt(f: PowerSeries) -> PowerSeries:
    """
    Principal square root of a series with f(0) > 0.

    Uses s_0 = sqrt(f_0) and 2 s_0 s_n = f_n - sum_{k=1..n-1} s_k s_{n-k}.

    Raises:
        DomainError: f(0) <= 0
    """
    f0 = f.coeffs[0]
    if np.iscomplexobj(f0) or f0 <= 0:
        raise DomainError("ps_sqrt needs a positive real constant term")
    s = np.zeros(f.order + 1, dtype=f.coeffs.dtype)
    s[0] = np.sqrt(f0)
    for n in range(1, f.order + 1):
        cross = np.dot(s[1:n], s[n - 1 : 0 : -1]) if n > 1 else 0.0
        s[n] = (f.coeffs[n] - cross) / (2.0 * s[0])
    return PowerSeries(f.order, s)

"""Left-sided Caputo derivatives on [0, T].

The derivative of order ``alpha > 0`` of a function f is

    D^alpha f(T) = 1/Gamma(n - alpha) * integral_0^T f^(n)(t) (T - t)^(n - alpha - 1) dt

with n = floor(alpha) + 1 for non-integer alpha.  Integer orders coincide
with the classical derivatives (order 0 meaning plain evaluation at T), and
that convention is applied here whenever alpha is an exact integer.

Two engines are provided:

* :func:`caputo_poly` -- exact closed form for polynomials via the power rule
  ``D^alpha t^k = Gamma(k+1)/Gamma(k+1-alpha) * T^(k-alpha)`` for k >= n,
  with ``D^alpha t^k = 0`` for k <= n-1.
* :func:`caputo_l1` / :func:`caputo_l1_extended` -- product-integration
  quadrature for uniformly sampled series.  The L1 scheme replaces f by its
  piecewise-linear interpolant inside the weakly singular integral, giving
  O(h^(2-alpha)) accuracy for smooth f and exact annihilation of constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import l1_weighted_sum
from .errors import DomainError, InsufficientData
from .specfun import gamma, log_gamma

__all__ = [
    "FracOrder",
    "Polynomial",
    "SampledSeries",
    "as_order",
    "caputo_poly",
    "caputo_l1",
    "caputo_l1_extended",
    "caputo_integer",
    "caputo_series",
]

# Above this the direct Gamma ratio overflows; switch to log form.
_GAMMA_DIRECT_LIMIT = 170.0

# Relative slack when matching a requested time against the sampling grid.
_GRID_SNAP_RTOL = 1e-9


@dataclass(frozen=True)
class FracOrder:
    """Differentiation order alpha >= 0.

    ``n`` is the number of classical derivatives taken inside the defining
    integral: floor(alpha) + 1 for non-integer alpha.  Exact integer orders
    dispatch to the classical derivative of that order instead, so for them
    ``n`` is alpha itself.
    """

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not (math.isfinite(a) and a >= 0.0):
            raise DomainError(f"order must be finite and >= 0, got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)

    @property
    def is_integer(self) -> bool:
        return self.alpha == math.floor(self.alpha)

    @property
    def n(self) -> int:
        if self.is_integer:
            return int(self.alpha)
        return int(math.floor(self.alpha)) + 1


def as_order(alpha: float | FracOrder) -> FracOrder:
    """Coerce a plain float to :class:`FracOrder` (validating it)."""
    if isinstance(alpha, FracOrder):
        return alpha
    return FracOrder(float(alpha))


@dataclass(frozen=True)
class Polynomial:
    """Polynomial sum(coeffs[k] * t^k); an empty tuple is the zero polynomial."""

    coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        cs = tuple(float(c) for c in self.coeffs)
        if any(not math.isfinite(c) for c in cs):
            raise DomainError("polynomial coefficients must be finite")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        """Index of the last non-zero coefficient; -1 for the zero polynomial."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0.0:
                return k
        return -1

    @property
    def is_zero(self) -> bool:
        return self.degree < 0

    def __call__(self, t):
        """Horner evaluation; accepts scalars or numpy arrays."""
        acc = 0.0 if np.isscalar(t) else np.zeros_like(np.asarray(t, dtype=np.float64))
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0.0,) * (n - len(self.coeffs))
        b = other.coeffs + (0.0,) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __rmul__(self, scalar: float) -> Polynomial:
        return Polynomial(tuple(float(scalar) * c for c in self.coeffs))


@dataclass(frozen=True, eq=False)
class SampledSeries:
    """Uniform samples values[k] = f(k*h), k = 0..N, anchored at t = 0.

    The derivative's memory window starts at t = 0, so series starting
    elsewhere are rejected rather than shifted.
    """

    h: float
    values: np.ndarray
    t0: float = 0.0

    def __post_init__(self):
        if float(self.t0) != 0.0:
            raise DomainError(f"series must start at t = 0, got t0={self.t0!r}")
        h = float(self.h)
        if not (math.isfinite(h) and h > 0.0):
            raise DomainError(f"step must be finite and > 0, got h={self.h!r}")
        v = np.ascontiguousarray(self.values, dtype=np.float64)
        if v.ndim != 1:
            raise DomainError("values must be one-dimensional")
        if v.shape[0] < 3:
            raise InsufficientData(f"need at least 3 samples (N >= 2), got {v.shape[0]}")
        if not np.isfinite(v).all():
            raise DomainError("all sample values must be finite")
        v.flags.writeable = False
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "t0", 0.0)

    @property
    def n_steps(self) -> int:
        return self.values.shape[0] - 1

    @property
    def t_end(self) -> float:
        return self.n_steps * self.h

    def times(self) -> np.ndarray:
        return np.arange(self.values.shape[0]) * self.h

    def truncated(self, t: float) -> SampledSeries:
        """Restrict to [0, t]; t must land on the grid (within 1e-9 relative)."""
        t = float(t)
        k = int(round(t / self.h))
        if abs(k * self.h - t) > _GRID_SNAP_RTOL * max(abs(t), self.h):
            raise DomainError(f"t={t!r} does not lie on the sampling grid (h={self.h!r})")
        if k < 2:
            raise InsufficientData(f"truncation to t={t!r} leaves fewer than 3 samples")
        if k > self.n_steps:
            raise DomainError(f"t={t!r} is beyond the sampled range [0, {self.t_end!r}]")
        if k == self.n_steps:
            return self
        return SampledSeries(self.h, self.values[: k + 1])


def _gamma_ratio(k: float, alpha: float) -> float:
    """Gamma(k+1) / Gamma(k+1-alpha), overflow-safe for large k."""
    if k + 1.0 <= _GAMMA_DIRECT_LIMIT:
        return gamma(k + 1.0) / gamma(k + 1.0 - alpha)
    return math.exp(log_gamma(k + 1.0) - log_gamma(k + 1.0 - alpha))


def _check_time(T: float) -> float:
    T = float(T)
    if not (math.isfinite(T) and T > 0.0):
        raise DomainError(f"end time must be finite and > 0, got T={T!r}")
    return T


def caputo_poly(p: Polynomial, alpha: float | FracOrder, T: float) -> float:
    """Caputo derivative of a polynomial at time T, in closed form.

    Non-integer orders use the power rule term by term (monomials of degree
    <= n-1 vanish); exact integer orders return the classical derivative,
    with order 0 meaning p(T).
    """
    order = as_order(alpha)
    T = _check_time(T)
    if order.is_integer:
        q = p
        for _ in range(order.n):
            q = q.derivative()
        return float(q(T))
    a = order.alpha
    n = order.n
    total = 0.0
    for k, c in enumerate(p.coeffs):
        if k < n or c == 0.0:
            continue
        total += c * _gamma_ratio(float(k), a) * T ** (k - a)
    return total


def caputo_l1(series: SampledSeries, alpha: float | FracOrder) -> float:
    """L1 product-integration estimate of the Caputo derivative at t_end.

    For 0 < alpha < 1:

        h^(-alpha)/Gamma(2-alpha) * sum_k [(N-k)^(1-alpha) - (N-1-k)^(1-alpha)]
                                          * (values[k+1] - values[k])

    Endpoints follow the integer conventions: alpha = 0 returns f(T) and
    alpha = 1 a second-order one-sided estimate of f'(T).
    """
    order = as_order(alpha)
    a = order.alpha
    if a > 1.0:
        raise DomainError(f"L1 scheme requires 0 <= alpha <= 1, got {a!r}")
    v = series.values
    if a == 0.0:
        return float(v[-1])
    if a == 1.0:
        # Needs only the guaranteed three samples, unlike caputo_integer.
        return float((3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * series.h))
    s = l1_weighted_sum(v, 1.0 - a)
    return s * series.h ** (-a) / gamma(2.0 - a)


def _difference_derivative(series: SampledSeries) -> SampledSeries:
    """Second-order finite-difference estimate of f' on the same grid."""
    v = series.values
    h = series.h
    d = np.empty_like(v)
    d[1:-1] = (v[2:] - v[:-2]) / (2.0 * h)
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
    d[-1] = (3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * h)
    return SampledSeries(h, d)


def caputo_l1_extended(series: SampledSeries, alpha: float | FracOrder) -> float:
    """Caputo derivative for 1 < alpha < 2 on sampled data.

    Differentiates once by finite differences (central inside, one-sided at
    the ends), then applies the L1 scheme of order alpha - 1 to the
    derivative series.
    """
    order = as_order(alpha)
    a = order.alpha
    if not 1.0 < a < 2.0:
        raise DomainError(f"extended scheme requires 1 < alpha < 2, got {a!r}")
    if series.n_steps < 4:
        raise InsufficientData(f"need N >= 4 samples, got N={series.n_steps}")
    return caputo_l1(_difference_derivative(series), a - 1.0)


def caputo_integer(series: SampledSeries, n: int) -> float:
    """Classical derivative of order n in {0, 1, 2} at t_end.

    Orders 1 and 2 use one-sided finite differences of second-order accuracy
    (exact on polynomials up to the matching degree + 1).
    """
    if n not in (0, 1, 2):
        raise DomainError(f"integer orders supported: 0, 1, 2; got {n!r}")
    if series.n_steps < n + 2:
        raise InsufficientData(f"order {n} needs N >= {n + 2}, got N={series.n_steps}")
    v = series.values
    h = series.h
    if n == 0:
        return float(v[-1])
    if n == 1:
        return float((3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * h))
    return float((2.0 * v[-1] - 5.0 * v[-2] + 4.0 * v[-3] - v[-4]) / (h * h))


def caputo_series(series: SampledSeries, alpha: float | FracOrder) -> float:
    """Numerical Caputo derivative at t_end, dispatching on the order.

    Covers 0 <= alpha < 2; larger orders are rejected because repeated
    differencing of sampled data amplifies noise beyond usefulness.
    """
    order = as_order(alpha)
    if order.alpha <= 1.0:
        return caputo_l1(series, order)
    if order.alpha < 2.0:
        return caputo_l1_extended(series, order)
    raise DomainError(f"numerical engine covers 0 <= alpha < 2, got {order.alpha!r}")

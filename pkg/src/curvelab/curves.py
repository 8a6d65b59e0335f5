"""Holomorphic curves C -> P^n in polynomial-exponential closed form.

Every component is g(z) * e^{P(z)} with g, P polynomials; the three public
variants are g alone ("poly"), e^P alone ("exppoly"), and the product
("polyexp"). All modulus arithmetic is done in log domain so that components
with Re P in the thousands never overflow: the shared exponential factors of
the Wronskian terms are cancelled against the norm analytically before any
exponentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .errors import CurveValidationError
from .polynomials import ComplexPoly

_OVERFLOW_LOG = 700.0  # exp() overflows shortly above this


def _log_abs(values):
    values = np.asarray(values)
    with np.errstate(divide="ignore"):
        return np.log(np.abs(values))


@dataclass(frozen=True)
class CurveComponent:
    """One entire component g(z) * e^{P(z)}."""

    poly_factor: ComplexPoly  # g
    exponent: ComplexPoly     # P
    kind: str                 # "poly" | "exppoly" | "polyexp"

    @classmethod
    def poly(cls, q):
        q = q if isinstance(q, ComplexPoly) else ComplexPoly(q)
        return cls(q, ComplexPoly.zero(), "poly")

    @classmethod
    def exp_poly(cls, p):
        p = p if isinstance(p, ComplexPoly) else ComplexPoly(p)
        return cls(ComplexPoly.constant(1.0), p, "exppoly")

    @classmethod
    def poly_exp(cls, q, p):
        q = q if isinstance(q, ComplexPoly) else ComplexPoly(q)
        p = p if isinstance(p, ComplexPoly) else ComplexPoly(p)
        return cls(q, p, "polyexp")

    @classmethod
    def one(cls):
        return cls.exp_poly(ComplexPoly.zero())

    @property
    def nonvanishing(self):
        return self.kind == "exppoly"

    def log_modulus(self, z):
        """log |g(z) e^{P(z)}|, vectorized; -inf at zeros of g."""
        return self.exponent(z).real + _log_abs(self.poly_factor(z))

    def log_derivative(self, z):
        """f'/f = g'/g + P', finite away from zeros of g."""
        return self.poly_factor.deriv()(z) / self.poly_factor(z) + self.exponent.deriv()(z)

    def scaled_by_exp(self, q):
        """Component multiplied by e^{q(z)} (unnormalized representation)."""
        return CurveComponent(self.poly_factor, self.exponent + q, "polyexp")


def eval_component(component: CurveComponent, z):
    """Evaluate one component at a single point.

    Returns (log_modulus, phase, value) where phase is unit-modulus and value
    is None when |f(z)| is not representable in double precision.
    """
    z = complex(z)
    g = complex(component.poly_factor(z))
    p = complex(component.exponent(z))
    if g == 0:
        return -math.inf, complex(1.0), complex(0.0)
    log_modulus = p.real + math.log(abs(g))
    phase = (g / abs(g)) * complex(math.cos(p.imag), math.sin(p.imag))
    value = None
    if log_modulus < _OVERFLOW_LOG:
        value = math.exp(log_modulus) * phase
    return log_modulus, phase, value


def log_norm(components, z):
    """log sqrt(sum_j |f_j(z)|^2) via log-sum-exp; vectorized in z."""
    z = np.asarray(z, dtype=complex)
    stack = np.stack([c.log_modulus(z) for c in components])
    with np.errstate(invalid="ignore"):
        out = 0.5 * logsumexp(2.0 * stack, axis=0)
    return out if out.shape else float(out)


def spherical_derivative_of(components, z):
    """Fubini-Study derivative of the curve with the given homogeneous
    representation, computed entirely in log domain.

    ||f'||^2 = ||f||^-4 * sum_{i<j} |f_i' f_j - f_i f_j'|^2, and with
    f_j = g_j e^{P_j} each Wronskian term factors as
    e^{P_i + P_j} * (h_i g_j - g_i h_j) with h_j = g_j' + g_j P_j'.
    """
    z = np.asarray(z, dtype=complex)
    m = len(components)
    g = [c.poly_factor for c in components]
    h = [c.poly_factor.deriv() + c.poly_factor * c.exponent.deriv() for c in components]
    re_p = [c.exponent(z).real for c in components]
    log_g = [_log_abs(c.poly_factor(z)) for c in components]

    pair_logs = []
    for i in range(m):
        for j in range(i + 1, m):
            w = h[i] * g[j] - g[i] * h[j]
            pair_logs.append(2.0 * (re_p[i] + re_p[j]) + 2.0 * _log_abs(w(z)))
    with np.errstate(invalid="ignore"):
        num = 0.5 * logsumexp(np.stack(pair_logs), axis=0)
        den = logsumexp(np.stack([2.0 * (rp + lg) for rp, lg in zip(re_p, log_g)]), axis=0)
    out = np.exp(num - den)
    out = np.where(np.isnan(out), 0.0, out)
    return out if out.shape else float(out)


@dataclass(frozen=True)
class HolomorphicCurve:
    """Homogeneous representation (f_0, ..., f_n) with f_n = 1 and
    f_1, ..., f_n nonvanishing (the omitted hyperplanes are {w_j = 0})."""

    n: int
    components: tuple
    sigma: float
    K: float | None = None

    def __post_init__(self):
        if self.n < 1:
            raise CurveValidationError("target dimension n must be >= 1")
        if len(self.components) != self.n + 1:
            raise CurveValidationError(
                f"expected {self.n + 1} components for n={self.n}, got {len(self.components)}")
        if self.sigma < 0:
            raise CurveValidationError("sigma must be nonnegative")
        if self.K is not None and self.K <= 0:
            raise CurveValidationError("K must be positive when declared")
        last = self.components[-1]
        if not (last.nonvanishing and last.exponent.is_zero) and not (
                last.kind == "poly" and last.poly_factor == ComplexPoly.constant(1.0)):
            raise CurveValidationError(f"component {self.n} must be the constant 1")
        deg_cap = math.floor(2 * self.sigma + 2)
        for j in range(1, self.n + 1):
            comp = self.components[j]
            if not comp.nonvanishing:
                raise CurveValidationError(f"component {j} must be nonvanishing")
            if comp.exponent.degree() > deg_cap:
                raise CurveValidationError(
                    f"component {j}: deg P = {comp.exponent.degree()} exceeds "
                    f"floor(2*sigma+2) = {deg_cap}")

    # -- evaluation -----------------------------------------------------------

    def u(self, z):
        """log ||f(z)||; nonnegative because |f_n| = 1."""
        return log_norm(self.components, z)

    def spherical_derivative(self, z):
        return spherical_derivative_of(self.components, z)

    def reduced_polys(self):
        """Exponents P_1, ..., P_n of the nonvanishing components."""
        return [self.components[j].exponent for j in range(1, self.n + 1)]

    def with_K(self, K):
        return HolomorphicCurve(self.n, self.components, self.sigma, K)


def component_log_moduli(curve: HolomorphicCurve, z, tie_tol_factor=1e-9):
    """All u_j = log|f_j(z)| together with u* = max_{1<=j<=n} u_j and the set
    of indices attaining that max within the tie tolerance."""
    z = complex(z)
    u_all = [float(c.log_modulus(z)) for c in curve.components]
    u_star = max(u_all[1:])
    eta = tie_tol_factor * max(1.0, abs(u_star))
    argmax = [j for j in range(1, curve.n + 1) if u_all[j] >= u_star - eta]
    return u_all, u_star, argmax


def estimate_growth(curve: HolomorphicCurve, r_min, r_max, circles=8, sigma=None,
                    theta_nodes=2048):
    """Least-squares estimate of the growth exponent of sup ||f'|| on circles,
    and the matching finite-radius surrogate for the constant K.

    K_hat uses the declared sigma when available, the fitted one otherwise.
    """
    if not (0 < r_min < r_max):
        raise ValueError("need 0 < r_min < r_max")
    if circles < 4:
        raise ValueError("need at least 4 circles")
    radii = np.geomspace(r_min, r_max, circles)
    sups = np.array([_circle_sup(curve, r, theta_nodes) for r in radii])
    if np.max(sups) <= 0.0:
        return 0.0, 0.0
    slope, _ = np.polyfit(np.log(radii), np.log(sups), 1)
    sigma_hat = float(slope)
    sigma_used = sigma if sigma is not None else (
        curve.sigma if curve.sigma is not None else sigma_hat)
    K_hat = float(np.max(sups * radii ** (-sigma_used)))
    return sigma_hat, K_hat


def _circle_sup(curve, r, theta_nodes):
    from scipy.optimize import minimize_scalar

    theta = np.linspace(0.0, 2 * np.pi, theta_nodes, endpoint=False)
    vals = np.asarray(curve.spherical_derivative(r * np.exp(1j * theta)))
    k = int(np.argmax(vals))
    step = 2 * np.pi / theta_nodes

    def neg(t):
        return -float(curve.spherical_derivative(r * np.exp(1j * t)))

    res = minimize_scalar(neg, bounds=(theta[k] - step, theta[k] + step),
                          method="bounded", options={"xatol": 1e-12})
    return max(float(vals[k]), -res.fun)

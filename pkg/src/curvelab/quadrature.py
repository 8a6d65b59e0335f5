"""Quadrature rules used throughout: periodic trapezoid with node doubling
(spectrally accurate for analytic periodic integrands) and adaptive
Gauss-Legendre panels for the radial integrals."""

from __future__ import annotations

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import QuadratureBudgetError

_GL_NODES, _GL_WEIGHTS = leggauss(15)


def periodic_trapezoid(f, tol, n_start=64, n_max=1 << 20):
    """Integral of f over [0, 2pi); f maps an angle array to a value array.

    Doubles the node count until two successive estimates agree to tol
    (relative to max(1, |I|)).
    """
    n = n_start
    theta = np.arange(n) * (2 * np.pi / n)
    total = float(np.sum(f(theta)))
    integral = total * (2 * np.pi / n)
    while n < n_max:
        mid = theta + np.pi / n
        total += float(np.sum(f(mid)))
        n *= 2
        theta = np.arange(n) * (2 * np.pi / n)
        new_integral = total * (2 * np.pi / n)
        err = abs(new_integral - integral)
        integral = new_integral
        if err <= tol * max(1.0, abs(integral)):
            return integral
    raise QuadratureBudgetError("periodic trapezoid did not converge", integral, err)


def _gl_panel(f, a, b):
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * _GL_NODES
    return half * float(np.dot(_GL_WEIGHTS, [f(xi) for xi in x]))


def adaptive_gauss(f, a, b, tol, initial_panels=4, max_panels=4096):
    """Adaptive Gauss-Legendre integration of a scalar function on [a, b].

    Panels are split until the whole-vs-halves discrepancy is below the
    tolerance share of each panel. Raises QuadratureBudgetError (carrying the
    achieved estimate and bound) when the panel budget is exhausted.
    """
    if a == b:
        return 0.0
    edges = np.linspace(a, b, initial_panels + 1)
    stack = [(edges[i], edges[i + 1], _gl_panel(f, edges[i], edges[i + 1]))
             for i in range(initial_panels)]
    total = 0.0
    err_accum = 0.0
    panels_used = initial_panels
    while stack:
        lo, hi, whole = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gl_panel(f, lo, mid)
        right = _gl_panel(f, mid, hi)
        err = abs(left + right - whole)
        if err <= tol * (hi - lo) / (b - a) or (hi - lo) < 1e-14 * abs(b - a):
            total += left + right
            err_accum += err
            continue
        panels_used += 2
        if panels_used > max_panels:
            remaining = sum(p[2] for p in stack)
            estimate = total + whole + remaining
            raise QuadratureBudgetError(
                "adaptive Gauss-Legendre panel budget exhausted", estimate, err)
        stack.append((lo, mid, left))
        stack.append((mid, hi, right))
    return total

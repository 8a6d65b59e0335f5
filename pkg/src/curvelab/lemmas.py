"""Disc potential theory: the unit-disc Green kernel and randomized
verification harnesses for the two gradient inequalities

    harmonic case:      v(a) <= 2R |grad v(z1)|,
    superharmonic case: mass of B(a, R/2) <= 3R |grad v(z1)|,

for nonnegative v on the closed disc B(a, R) vanishing at a boundary point z1.
Everything is computed in unit-disc coordinates w = (z - a)/R; both statements
are affine-covariant, so gradients pick up a single 1/R factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .polynomials import ComplexPoly

GRID_SIZE = 4096


def green_disc(z, zeta):
    """Green function of the unit disc: log|1 - z*conj(zeta)| - log|z - zeta|.

    Symmetric, zero on |z| = 1, +inf at the pole z = zeta (returned as inf for
    the caller to handle).
    """
    z = complex(z)
    zeta = complex(zeta)
    if z == zeta:
        return math.inf
    return math.log(abs(1 - z * np.conj(zeta))) - math.log(abs(z - zeta))


def green_boundary_normal(theta, zeta):
    """|dG/d|z|| at the boundary point e^{i theta}: the Poisson-kernel value
    (1 - |zeta|^2) / |e^{i theta} - zeta|^2."""
    w = np.exp(1j * np.asarray(theta))
    return (1.0 - abs(zeta) ** 2) / np.abs(w - zeta) ** 2


def green_boundary_min(zeta_abs=0.5):
    """Minimum of the boundary normal derivative over the circle for a pole of
    the given modulus; attained at the antipodal boundary point."""
    from scipy.optimize import minimize_scalar

    zeta = complex(zeta_abs)
    grid = np.linspace(0.0, 2 * np.pi, 720, endpoint=False)
    vals = green_boundary_normal(grid, zeta)
    k = int(np.argmin(vals))
    step = 2 * np.pi / len(grid)
    res = minimize_scalar(lambda t: float(green_boundary_normal(t, zeta)),
                          bounds=(grid[k] - step, grid[k] + step),
                          method="bounded", options={"xatol": 1e-13})
    theta_min = float(res.x)
    return float(green_boundary_normal(theta_min, zeta)), theta_min


def _green_gradient_unit(w, zeta):
    """Gradient (as a complex vector) of G(., zeta) at w in the unit disc."""
    return np.conj(-np.conj(zeta) / (1 - w * np.conj(zeta)) - 1.0 / (w - zeta))


class DiscHarmonic:
    """Nonnegative harmonic function on a closed disc.

    Internally v = Re h(w) in unit-disc coordinates, where h is either the
    analytic completion of a boundary trigonometric density (recovered from
    uniform boundary samples by FFT) or an explicitly supplied analytic
    function.
    """

    def __init__(self, center, radius, h, h_prime, boundary_samples=None):
        self.center = complex(center)
        self.radius = float(radius)
        self._h = h
        self._h_prime = h_prime
        self.boundary_samples = boundary_samples

    @classmethod
    def from_boundary_samples(cls, center, radius, samples):
        """Poisson extension of nonnegative boundary data given on the uniform
        angle grid; the data must be a trigonometric polynomial of degree well
        below the grid size for the FFT recovery to be exact."""
        samples = np.asarray(samples, dtype=float)
        n = len(samples)
        c = np.fft.fft(samples) / n
        scale = max(1.0, float(np.max(np.abs(c))))
        m_max = 0
        for m in range(1, n // 2):
            if abs(c[m]) > 1e-15 * scale:
                m_max = m
        coeffs = [c[0]] + [2.0 * c[m] for m in range(1, m_max + 1)]
        h = ComplexPoly(coeffs)
        hp = h.deriv()
        return cls(center, radius, h, hp, boundary_samples=samples)

    @classmethod
    def from_real_part_poly(cls, center, radius, poly, constant=0.0):
        """v = Re poly(w) + constant in unit-disc coordinates."""
        poly = poly if isinstance(poly, ComplexPoly) else ComplexPoly(poly)
        h = poly + ComplexPoly.constant(constant)
        return cls(center, radius, h, h.deriv())

    @classmethod
    def halfplane_kernel(cls):
        """v = Re((1 + w)/(1 - w)) on the unit disc: the sharpness witness of
        the harmonic inequality at z1 = -1."""
        return cls(0.0, 1.0,
                   lambda w: (1 + w) / (1 - w),
                   lambda w: 2.0 / (1 - w) ** 2)

    def _local(self, z):
        return (complex(z) - self.center) / self.radius

    def value(self, z):
        return complex(self._h(self._local(z))).real

    def grad(self, z):
        """Gradient of v as a complex vector, conj(h'(w))/R."""
        return np.conj(complex(self._h_prime(self._local(z)))) / self.radius


@dataclass
class DiscSuperharmonic:
    """Green potential of finitely many atoms plus a nonnegative harmonic
    part; the Riesz measure is exactly the listed atoms."""

    center: complex
    radius: float
    masses: list                     # (location zeta, weight) pairs, zeta inside
    harmonic_part: DiscHarmonic | None = None

    def _local(self, z):
        return (complex(z) - self.center) / self.radius

    def value(self, z):
        w = self._local(z)
        total = sum(wt * green_disc(w, self._local(zeta)) for zeta, wt in self.masses)
        if self.harmonic_part is not None:
            total += self.harmonic_part.value(z)
        return total

    def grad(self, z):
        w = self._local(z)
        g = sum(wt * _green_gradient_unit(w, self._local(zeta))
                for zeta, wt in self.masses)
        g = g / self.radius
        if self.harmonic_part is not None:
            g += self.harmonic_part.grad(z)
        return g

    def mass_inner_half(self):
        return sum(wt for zeta, wt in self.masses
                   if abs(zeta - self.center) < self.radius / 2)


def verify_lemma1(v: DiscHarmonic, z1, boundary_tol=1e-10):
    """Check v(a) <= 2R |grad v(z1)| for a nonnegative harmonic v vanishing at
    the boundary point z1. Returns (lhs, rhs, margin)."""
    val = v.value(z1)
    if abs(val) > boundary_tol * max(1.0, abs(v.value(v.center))):
        raise ValueError(f"precondition violated: v(z1) = {val!r}, expected 0")
    lhs = v.value(v.center)
    rhs = 2.0 * v.radius * abs(v.grad(z1))
    return lhs, rhs, rhs - lhs


def verify_lemma2(v: DiscSuperharmonic, z1, boundary_tol=1e-10):
    """Check mass(B(a, R/2)) <= 3R |grad v(z1)|. Returns (mass, rhs, margin)."""
    val = v.value(z1)
    scale = 1.0 + sum(wt for _, wt in v.masses)
    if abs(val) > boundary_tol * scale:
        raise ValueError(f"precondition violated: v(z1) = {val!r}, expected 0")
    for zeta, _ in v.masses:
        if abs(abs(zeta - v.center) - v.radius / 2) < 1e-6 * v.radius:
            raise ValueError("atom too close to the half-radius circle; mass ill-defined")
    mass = v.mass_inner_half()
    rhs = 3.0 * v.radius * abs(v.grad(z1))
    return mass, rhs, rhs - mass


def _random_harmonic(rng):
    """Nonnegative boundary density |q(e^{i theta})|^2 with q vanishing at a
    random grid angle theta1; its Poisson extension vanishes at z1."""
    center = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
    radius = rng.uniform(0.5, 2.5)
    k1 = int(rng.integers(0, GRID_SIZE))
    theta1 = 2 * np.pi * k1 / GRID_SIZE
    w1 = np.exp(1j * theta1)
    deg = int(rng.integers(0, 4))
    p = ComplexPoly([complex(a, b) for a, b in rng.normal(size=(deg + 1, 2))])
    if p.is_zero:
        p = ComplexPoly.constant(1.0)
    q = ComplexPoly([-w1, 1.0]) * p
    theta = np.arange(GRID_SIZE) * (2 * np.pi / GRID_SIZE)
    rho = np.abs(q(np.exp(1j * theta))) ** 2
    top = float(np.max(rho))
    if top > 0:
        rho = rho * (10.0 / top)
    z1 = center + radius * w1
    return DiscHarmonic.from_boundary_samples(center, radius, rho), z1


def _random_superharmonic(rng):
    harmonic, z1 = _random_harmonic(rng)
    center, radius = harmonic.center, harmonic.radius
    masses = []
    for _ in range(int(rng.integers(1, 5))):
        while True:
            rho = math.sqrt(rng.uniform(0.0, 0.9))
            if abs(rho - 0.5) > 1e-3:
                break
        phi = rng.uniform(0.0, 2 * np.pi)
        zeta = center + radius * rho * np.exp(1j * phi)
        masses.append((zeta, float(rng.exponential(1.0))))
    return DiscSuperharmonic(center, radius, masses, harmonic), z1


def random_lemma_family(seed, count, kind="mixed"):
    """Deterministic family of lemma instances paired with their boundary
    zero z1. kind is one of "harmonic", "superharmonic", "mixed"."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        if kind == "harmonic" or (kind == "mixed" and k % 2 == 0):
            out.append(_random_harmonic(rng))
        else:
            out.append(_random_superharmonic(rng))
    return out


def harness_report(seed, count):
    """Run both harnesses and report per-instance margins as a dict (the JSON
    interface consumed by the CLI). The failure list must be empty."""
    margins1, margins2, failures = [], [], []
    for idx, (v, z1) in enumerate(random_lemma_family(seed, count, "harmonic")):
        _, _, margin = verify_lemma1(v, z1)
        margins1.append(margin)
        if margin < -1e-8:
            failures.append({"kind": "harmonic", "index": idx, "margin": margin})
    for idx, (v, z1) in enumerate(random_lemma_family(seed + 1, count, "superharmonic")):
        _, _, margin = verify_lemma2(v, z1)
        margins2.append(margin)
        if margin < -1e-8:
            failures.append({"kind": "superharmonic", "index": idx, "margin": margin})
    kernel_min, _ = green_boundary_min(0.5)
    return {
        "seed": seed,
        "count": count,
        "harmonic_min_margin": min(margins1),
        "superharmonic_min_margin": min(margins2),
        "green_kernel_min": kernel_min,
        "failures": failures,
    }

"""Dense complex-coefficient polynomials in one complex variable.

Coefficients are stored ascending (index k holds the coefficient of z^k) and
trailing exact zeros are trimmed, so ``degree`` is the index of the last stored
coefficient. The zero polynomial has an empty coefficient tuple and degree -inf.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial import polynomial as npoly


class ComplexPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [complex(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1.0):
        return cls((0,) * k + (c,))

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Index of the last nonzero coefficient; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_constant(self):
        return len(self.coeffs) <= 1

    # -- evaluation and calculus ----------------------------------------------

    def __call__(self, z):
        if not self.coeffs:
            z = np.asarray(z)
            out = np.zeros(z.shape, dtype=complex)
            return out if out.shape else complex(out)
        return npoly.polyval(z, np.asarray(self.coeffs, dtype=complex))

    def deriv(self):
        if len(self.coeffs) <= 1:
            return ComplexPoly(())
        return ComplexPoly(npoly.polyder(np.asarray(self.coeffs, dtype=complex)))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return ComplexPoly(npoly.polyadd(np.asarray(self.coeffs), np.asarray(other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ComplexPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return ComplexPoly(())
        return ComplexPoly(npoly.polymul(np.asarray(self.coeffs), np.asarray(other.coeffs)))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ComplexPoly):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ComplexPoly({list(self.coeffs)!r})"


def _coerce(value):
    if isinstance(value, ComplexPoly):
        return value
    if isinstance(value, (int, float, complex)):
        return ComplexPoly((value,))
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


def cauchy_fraction(poly: ComplexPoly) -> float:
    """max_k |a_k / a_d| over k < d; 0 for constants.

    Every root of ``poly`` has modulus at most 1 + this value.
    """
    if poly.is_zero or poly.is_constant():
        return 0.0
    lead = abs(poly.leading)
    return max(abs(c) / lead for c in poly.coeffs[:-1])

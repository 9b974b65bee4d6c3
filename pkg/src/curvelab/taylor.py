"""Truncated Taylor-series arithmetic.

Jets of parametric curves need radius-of-curvature derivatives up to third
order in arc length, which stack quotient and chain rules five levels deep.
Doing that through series arithmetic keeps every step exact coefficient
algebra: a ``Jet`` holds the Taylor coefficients of a function around a fixed
point, and ring operations propagate them without any finite differencing.
"""

from __future__ import annotations

import numpy as np


class Jet:
    """Taylor coefficients c[k] of sum_k c[k] h^k, truncated at fixed order."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = np.asarray(coeffs, dtype=float)

    @classmethod
    def constant(cls, value: float, order: int) -> "Jet":
        c = np.zeros(order + 1)
        c[0] = value
        return cls(c)

    @classmethod
    def variable(cls, value: float, order: int) -> "Jet":
        c = np.zeros(order + 1)
        c[0] = value
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def value(self) -> float:
        return float(self.c[0])

    def derivative_value(self, k: int) -> float:
        """The k-th derivative at the expansion point: k! * c[k]."""
        from math import factorial

        return float(self.c[k]) * factorial(k)

    def __add__(self, other):
        if isinstance(other, Jet):
            m = min(len(self.c), len(other.c))
            return Jet(self.c[:m] + other.c[:m])
        c = self.c.copy()
        c[0] += other
        return Jet(c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.c)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -float(other))

    def __rsub__(self, other):
        return (-self) + float(other)

    def __mul__(self, other):
        if isinstance(other, Jet):
            m = min(len(self.c), len(other.c))
            out = np.convolve(self.c[:m], other.c[:m])[:m]
            return Jet(out)
        return Jet(self.c * float(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet(self.c / float(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * float(other)

    def reciprocal(self) -> "Jet":
        if self.c[0] == 0.0:
            raise ZeroDivisionError("reciprocal of a jet with zero constant term")
        n = len(self.c)
        out = np.zeros(n)
        out[0] = 1.0 / self.c[0]
        for k in range(1, n):
            acc = 0.0
            for j in range(1, k + 1):
                acc += self.c[j] * out[k - j]
            out[k] = -acc / self.c[0]
        return Jet(out)

    def sqrt(self) -> "Jet":
        if self.c[0] <= 0.0:
            raise ValueError("sqrt of a jet requires a positive constant term")
        n = len(self.c)
        out = np.zeros(n)
        out[0] = np.sqrt(self.c[0])
        for k in range(1, n):
            acc = 0.0
            for j in range(1, k):
                acc += out[j] * out[k - j]
            out[k] = (self.c[k] - acc) / (2.0 * out[0])
        return Jet(out)

    def deriv(self) -> "Jet":
        """Termwise derivative; the order drops by one."""
        n = len(self.c)
        if n == 1:
            return Jet(np.zeros(1))
        return Jet(self.c[1:] * np.arange(1, n))

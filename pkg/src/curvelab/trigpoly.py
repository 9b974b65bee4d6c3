"""Trigonometric polynomials with exact coefficient arithmetic.

A ``TrigPoly`` is

    p(x) = c + sum_n a_n cos(n*w*x) + b_n sin(n*w*x)

with positive integer harmonics ``n`` relative to the fundamental frequency
``w = 2*pi/period``.  Supported periods are ``2*pi`` (w = 1) and ``4*pi``
(w = 1/2, "half harmonics").  Differentiation and phase shifts are closed on
this class and are computed in coefficient space, so derivatives of any order
carry no truncation error beyond floating-point rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi


def _clean(coeffs: dict) -> dict:
    return {int(n): float(v) for n, v in sorted(coeffs.items()) if v != 0.0}


@dataclass(frozen=True)
class TrigPoly:
    constant: float = 0.0
    cos_coeffs: dict = field(default_factory=dict)
    sin_coeffs: dict = field(default_factory=dict)
    period: float = TWO_PI

    def __post_init__(self):
        if not (math.isclose(self.period, TWO_PI) or math.isclose(self.period, 2 * TWO_PI)):
            raise ValueError(f"period must be 2*pi or 4*pi, got {self.period}")
        for n in list(self.cos_coeffs) + list(self.sin_coeffs):
            if int(n) != n or n < 1:
                raise ValueError(f"harmonics must be positive integers, got {n}")
        object.__setattr__(self, "constant", float(self.constant))
        object.__setattr__(self, "cos_coeffs", _clean(self.cos_coeffs))
        object.__setattr__(self, "sin_coeffs", _clean(self.sin_coeffs))

    @property
    def omega(self) -> float:
        """Fundamental frequency 2*pi/period."""
        return TWO_PI / self.period

    @property
    def harmonics(self) -> list[int]:
        return sorted(set(self.cos_coeffs) | set(self.sin_coeffs))

    @property
    def max_frequency(self) -> float:
        hs = self.harmonics
        return hs[-1] * self.omega if hs else 0.0

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.full(x.shape, self.constant)
        w = self.omega
        for n, a in self.cos_coeffs.items():
            out += a * np.cos(n * w * x)
        for n, b in self.sin_coeffs.items():
            out += b * np.sin(n * w * x)
        return out if out.shape else float(out)

    def derivative(self, order: int = 1) -> "TrigPoly":
        """Exact derivative by coefficient shifting.

        d/dx [a cos(f x) + b sin(f x)] = f b cos(f x) - f a sin(f x).
        """
        if order < 0:
            raise ValueError("order must be >= 0")
        cur = self
        for _ in range(order):
            w = cur.omega
            cos_c = {n: n * w * b for n, b in cur.sin_coeffs.items()}
            sin_c = {n: -n * w * a for n, a in cur.cos_coeffs.items()}
            cur = TrigPoly(0.0, cos_c, sin_c, cur.period)
        return cur

    def shifted(self, delta: float) -> "TrigPoly":
        """The trig polynomial x -> p(x - delta), exactly in coefficient space."""
        w = self.omega
        cos_c: dict = {}
        sin_c: dict = {}
        for n in self.harmonics:
            a = self.cos_coeffs.get(n, 0.0)
            b = self.sin_coeffs.get(n, 0.0)
            ph = n * w * delta
            c, s = math.cos(ph), math.sin(ph)
            # cos(nw(x-d)) = cos cos + sin sin ; sin(nw(x-d)) = sin cos - cos sin
            cos_c[n] = a * c - b * s
            sin_c[n] = a * s + b * c
        return TrigPoly(self.constant, cos_c, sin_c, self.period)

    def scaled(self, factor: float) -> "TrigPoly":
        return TrigPoly(
            factor * self.constant,
            {n: factor * a for n, a in self.cos_coeffs.items()},
            {n: factor * b for n, b in self.sin_coeffs.items()},
            self.period,
        )

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        if not math.isclose(self.period, other.period):
            raise ValueError("cannot add trig polynomials with different periods")
        cos_c = dict(self.cos_coeffs)
        for n, a in other.cos_coeffs.items():
            cos_c[n] = cos_c.get(n, 0.0) + a
        sin_c = dict(self.sin_coeffs)
        for n, b in other.sin_coeffs.items():
            sin_c[n] = sin_c.get(n, 0.0) + b
        return TrigPoly(self.constant + other.constant, cos_c, sin_c, self.period)

    def mean_free_power(self) -> float:
        """sum_n (a_n^2 + b_n^2), the Parseval weight of the oscillating part."""
        return sum(a * a for a in self.cos_coeffs.values()) + sum(
            b * b for b in self.sin_coeffs.values()
        )

    def period_integral(self) -> float:
        """Integral over one full period (only the constant survives)."""
        return self.constant * self.period

    def period_square_integral(self) -> float:
        """Integral of p^2 over one full period, by Parseval."""
        return self.period * self.constant**2 + 0.5 * self.period * self.mean_free_power()

    def sup_bound(self) -> float:
        """Cheap upper bound on sup |p|: |c| + sum of coefficient magnitudes."""
        return (
            abs(self.constant)
            + sum(abs(a) for a in self.cos_coeffs.values())
            + sum(abs(b) for b in self.sin_coeffs.values())
        )

    def coefficient_arrays(self):
        """Dense (freqs, cos, sin) arrays for the evaluation kernels."""
        hs = self.harmonics
        freqs = np.array([n * self.omega for n in hs], dtype=float)
        ac = np.array([self.cos_coeffs.get(n, 0.0) for n in hs], dtype=float)
        bs = np.array([self.sin_coeffs.get(n, 0.0) for n in hs], dtype=float)
        return freqs, ac, bs

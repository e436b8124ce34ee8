"""Gaussian-envelope test functions and smooth cutoffs for pairings.

A TestFunction is p(x) exp(i beta x) exp(-(x-mu)^2/(2 sigma^2)).  The
public constructor only accepts real polynomial data (beta = 0); complex
coefficients and a nonzero phase arise internally from the closed-form
Fourier transform, which is again a function of this shape.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

MAX_DEGREE = 12


def _raw(mu: float, sigma: float, coeffs, beta: float) -> "TestFunction":
    # internal constructor: skips the real/degree validation
    obj = object.__new__(TestFunction)
    object.__setattr__(obj, "mu", float(mu))
    object.__setattr__(obj, "sigma", float(sigma))
    object.__setattr__(obj, "coeffs", tuple(complex(c) for c in coeffs))
    object.__setattr__(obj, "beta", float(beta))
    return obj


@dataclass(frozen=True)
class TestFunction:
    """poly(x) * exp(-(x-mu)^2 / (2 sigma^2)), coeffs in the monomial basis."""

    __test__ = False  # not a pytest class despite the name

    mu: float
    sigma: float
    coeffs: tuple
    beta: float = 0.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError("sigma must be positive")
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise DomainError("need at least one polynomial coefficient")
        if len(coeffs) > MAX_DEGREE + 1:
            raise DomainError(f"polynomial degree is capped at {MAX_DEGREE}")
        if self.beta != 0.0:
            raise DomainError("phase is reserved for internally built transforms")
        for c in coeffs:
            z = complex(c)
            if z.imag != 0.0 or not math.isfinite(z.real):
                raise DomainError("coefficients must be finite reals")
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "sigma", float(self.sigma))
        object.__setattr__(self, "coeffs", tuple(complex(c).real + 0.0j for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        arr = np.asarray(x, dtype=float)
        p = np.zeros(arr.shape, dtype=complex)
        for c in reversed(self.coeffs):
            p = p * arr + c
        u = (arr - self.mu) / self.sigma
        val = p * np.exp(1j * self.beta * arr - 0.5 * u * u)
        if arr.ndim == 0:
            return complex(val)
        return val

    def _d1(self) -> "TestFunction":
        # (p e^{g})' with g' = i beta - (x-mu)/sigma^2
        inv = 1.0 / self.sigma**2
        shift = 1j * self.beta + self.mu * inv
        out = [0.0 + 0.0j] * (len(self.coeffs) + 1)
        for m, c in enumerate(self.coeffs):
            if m:
                out[m - 1] += m * c
            out[m] += shift * c
            out[m + 1] -= inv * c
        return _raw(self.mu, self.sigma, out, self.beta)

    def deriv(self, order: int = 1) -> "TestFunction":
        """Exact derivative of the given order (polynomial recurrence)."""
        if not isinstance(order, int) or order < 0:
            raise DomainError("derivative order must be a nonnegative integer")
        if order > 64:
            raise DomainError("derivative order capped at 64")
        f = self
        for _ in range(order):
            f = f._d1()
        return f

    def reflect(self) -> "TestFunction":
        """The function x -> f(-x)."""
        coeffs = [c if m % 2 == 0 else -c for m, c in enumerate(self.coeffs)]
        return _raw(-self.mu, self.sigma, coeffs, -self.beta)

    def fourier(self) -> "TestFunction":
        """Closed-form transform under fhat(xi) = integral f(x) e^{-i x xi} dx.

        Multiplication by x on the input side is i d/dxi on the output side,
        so the transform of the base Gaussian is differentiated term by term.
        """
        c0 = self.sigma * math.sqrt(2.0 * math.pi) * cmath.exp(1j * self.mu * self.beta)
        base = _raw(self.beta, 1.0 / self.sigma, (c0,), -self.mu)
        total = [0.0 + 0.0j] * len(self.coeffs)
        for m, a in enumerate(self.coeffs):
            if a == 0:
                continue
            term = base.deriv(m)
            w = a * 1j**m
            for j, c in enumerate(term.coeffs):
                total[j] += w * c
        return _raw(self.beta, 1.0 / self.sigma, total, -self.mu)


def gaussian(mu: float = 0.0, sigma: float = 1.0, mass: float = 1.0) -> TestFunction:
    """Gaussian with the requested total integral."""
    c0 = mass / (sigma * math.sqrt(2.0 * math.pi))
    return TestFunction(mu, sigma, (c0,))


@dataclass(frozen=True)
class Cutoff:
    """Even smooth bump: 1 on [-a, a], 0 outside (-b, b)."""

    a: float = 0.5
    b: float = 1.0

    def __post_init__(self):
        if not 0 < self.a < self.b:
            raise DomainError("need 0 < a < b")

    def __call__(self, t):
        scalar = np.ndim(t) == 0
        arr = np.abs(np.atleast_1d(np.asarray(t, dtype=float)))
        out = np.zeros(arr.shape)
        out[arr <= self.a] = 1.0
        mid = (arr > self.a) & (arr < self.b)
        if np.any(mid):
            u = (self.b - arr[mid]) / (self.b - self.a)
            g = np.exp(-1.0 / u)
            g1 = np.exp(-1.0 / (1.0 - u))
            out[mid] = g / (g + g1)
        if scalar:
            return float(out[0])
        return out


DEFAULT_CUTOFF = Cutoff()

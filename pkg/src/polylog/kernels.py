"""Scalar special functions used by the evaluators.

Everything here is self-contained double precision: a Lanczos gamma,
digamma via recurrence plus asymptotic series, the Riemann zeta function
through Euler-Maclaurin summation with the functional equation for the
left half plane, and an exact rational Bernoulli table.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .exceptions import DomainError, PoleError

EULER_GAMMA = 0.5772156649015329
# First Stieltjes constant, the t^1 coefficient of zeta(1+t) - 1/t.
STIELTJES_GAMMA1 = -0.07281584548367672

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
_LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Lanczos coefficients, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def is_nonpositive_integer(z: complex, tol: float = 0.0) -> bool:
    """True when z sits within tol of a real integer <= 0."""
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def _lanczos_sum(w: complex) -> complex:
    acc = _LANCZOS_C[0]
    for i in range(1, 9):
        acc += _LANCZOS_C[i] / (w + i)
    return acc


def gamma(z: complex) -> complex:
    """Gamma function on C minus the nonpositive integers."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at {z}")
    if z.real < 0.5:
        # Reflection; sin(pi z) is safe because z is not an integer here.
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    w = z - 1.0
    t = w + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * t ** (w + 0.5) * cmath.exp(-t) * _lanczos_sum(w)


def log_gamma(z: complex) -> complex:
    """A branch of log(gamma(z)) for Re z >= 0.5; exp of it equals gamma(z)."""
    z = complex(z)
    if z.real < 0.5:
        raise DomainError("log_gamma requires Re z >= 0.5")
    w = z - 1.0
    t = w + _LANCZOS_G + 0.5
    return _LOG_SQRT_TWO_PI + (w + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_sum(w))


# Asymptotic tail of psi: -B_{2n}/(2n w^{2n}).
_PSI_TAIL = (
    Fraction(1, 12),
    Fraction(-1, 120),
    Fraction(1, 252),
    Fraction(-1, 240),
    Fraction(1, 132),
    Fraction(-691, 32760),
    Fraction(1, 12),
)


def digamma(z: complex) -> complex:
    """Logarithmic derivative of gamma."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"digamma pole at {z}")
    if z.real < 0.0:
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    shift = 0.0 + 0.0j
    while z.real < 12.0:
        shift -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    power = inv2
    for coeff in _PSI_TAIL:
        tail -= float(coeff) * power
        power *= inv2
    return shift + cmath.log(z) - 0.5 / z + tail


def _bernoulli_table(n_max: int = 64) -> tuple[Fraction, ...]:
    # B_0 .. B_{n_max}, convention B_1 = -1/2.
    table = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(n):
            acc += math.comb(n + 1, j) * table[j]
        table.append(-acc / (n + 1))
    return tuple(table)


BERNOULLI = _bernoulli_table()
BERNOULLI_FLOAT = tuple(float(b) for b in BERNOULLI)


def bernoulli_number(n: int) -> Fraction:
    """Exact B_n with B_1 = -1/2."""
    if n < 0:
        raise DomainError("bernoulli_number needs n >= 0")
    if n > len(BERNOULLI) - 1:
        raise DomainError(f"bernoulli table holds indices 0..{len(BERNOULLI) - 1}")
    return BERNOULLI[n]


def bernoulli_poly_shifted(n: int, q):
    """Bernoulli polynomial evaluated at q + 1.

    Exact when q is an int or Fraction, float otherwise.  The shift makes
    odd-degree values vanish at q = -1/2, which is what the smoothness
    checks on the modified polylogarithm rely on.
    """
    if n < 0:
        raise DomainError("bernoulli_poly_shifted needs n >= 0")
    base = (Fraction(q) if isinstance(q, int) else q) + 1
    acc = base * 0  # zero of the right type
    for j in range(n + 1):
        acc += math.comb(n, j) * bernoulli_number(j) * base ** (n - j)
    return acc


def harmonic(n: int, power: int = 1) -> float:
    """Generalized harmonic number sum_{k=1}^{n} k^{-power}; 0 for n <= 0."""
    if n <= 0:
        return 0.0
    return math.fsum(1.0 / k**power for k in range(1, n + 1))


@lru_cache(maxsize=None)
def _zeta_negative_integer(n: int) -> float:
    # zeta(-n) = (-1)^n B_{n+1} / (n + 1), and zeta(0) = -1/2.
    value = Fraction(-1) ** n * bernoulli_number(n + 1) / (n + 1)
    return float(value)


def riemann_zeta(s: complex) -> complex:
    """Riemann zeta by Euler-Maclaurin, functional equation for Re s < 0.5."""
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta pole at s = 1")
    if s.imag == 0.0 and s.real == round(s.real) and s.real <= 0.0:
        return complex(_zeta_negative_integer(int(-s.real)))
    if s.real < 0.5:
        # zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
        return (
            2.0**s
            * math.pi ** (s - 1.0)
            * cmath.sin(0.5 * math.pi * s)
            * gamma(1.0 - s)
            * riemann_zeta(1.0 - s)
        )
    n_cut = max(32, int(8.0 + 2.2 * abs(s.imag)))
    acc = sum(k ** (-s) for k in range(1, n_cut))
    acc += n_cut ** (1.0 - s) / (s - 1.0) + 0.5 * n_cut ** (-s)
    rising = s
    npow = n_cut ** (-s - 1.0)
    inv_n2 = 1.0 / (n_cut * n_cut)
    for j in range(1, 15):
        acc += BERNOULLI_FLOAT[2 * j] / math.factorial(2 * j) * rising * npow
        rising *= (s + (2 * j - 1)) * (s + 2 * j)
        npow *= inv_n2
    return acc

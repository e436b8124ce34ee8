"""Singular/smooth decomposition of li_s at the origin.

Non-integer orders carry a two-term boundary-value power part; integer
orders carry a power-log (n >= 1) or a pure power (n <= 0).  Whatever is
left after subtracting the singular part is smooth across x = 0, which
the ladder-extrapolation checks quantify.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .evaluate import EvalPoint, as_order, li_eval
from .exceptions import DomainError
from .extrapolate import ladder_jet
from .kernels import gamma, harmonic, riemann_zeta

KINDS = ("power_above", "power_below", "abs_power", "power_log")

INTEGER_DIST = 1e-8


@dataclass(frozen=True)
class SingularTerm:
    """coeff times a singular basis function of x."""

    coeff: complex
    exponent: complex
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "power_log":
            m = self.exponent
            if m.imag != 0 or m.real != round(m.real) or m.real < 0:
                raise DomainError("power_log exponent must be a nonnegative integer")

    def evaluate(self, x: float) -> complex:
        if x == 0.0:
            raise DomainError("singular term undefined at x = 0")
        a = self.exponent
        if self.kind == "power_log":
            m = int(a.real)
            return self.coeff * x**m * math.log(abs(x))
        if self.kind == "abs_power":
            return self.coeff * cmath.exp(a * math.log(abs(x)))
        if x > 0.0:
            return self.coeff * cmath.exp(a * math.log(x))
        if a.imag == 0.0 and a.real == round(a.real):
            # integer exponent: both boundary values equal the exact real power
            return self.coeff * float(x) ** int(a.real)
        # boundary values at x < 0: arg(x + i0) = +pi, arg(x - i0) = -pi
        arg = math.pi if self.kind == "power_above" else -math.pi
        return self.coeff * cmath.exp(a * complex(math.log(-x), arg))


@dataclass(frozen=True)
class SingularPart:
    terms: tuple[SingularTerm, ...]

    def evaluate(self, p: EvalPoint | float) -> complex:
        x = p.x if isinstance(p, EvalPoint) else float(p)
        return sum((term.evaluate(x) for term in self.terms), 0.0 + 0.0j)


def _nearest_integer(s: complex) -> int | None:
    n = round(s.real)
    if abs(s - n) <= INTEGER_DIST:
        return n
    return None


def singular_part(s) -> SingularPart:
    """Two-term boundary-value part for non-integer order."""
    s = as_order(s)
    if _nearest_integer(s) is not None:
        raise DomainError(
            f"s = {s} is within {INTEGER_DIST} of an integer; "
            "use singular_part_integer"
        )
    c = -0.5 * gamma(1.0 - s)
    a = s - 1.0
    return SingularPart(
        (
            SingularTerm(c * cmath.exp(-1j * math.pi * s), a, "power_above"),
            SingularTerm(c * cmath.exp(1j * math.pi * s), a, "power_below"),
        )
    )


def singular_part_integer(n: int) -> SingularPart:
    """Single-term part at integer order: power-log for n >= 1, pure power below."""
    if not isinstance(n, int):
        raise DomainError(f"integer order required, got {n!r}")
    if n >= 1:
        coeff = -1.0 / math.factorial(n - 1)
        return SingularPart((SingularTerm(coeff, complex(n - 1), "power_log"),))
    m = -n  # li_{-m} has the pure power (-1)^(m-1) m! x^(-m-1)
    coeff = float((-1) ** (m - 1) * math.factorial(m))
    return SingularPart((SingularTerm(coeff, complex(n - 1), "power_above"),))


def applicable_part(s) -> SingularPart:
    s = as_order(s)
    n = _nearest_integer(s)
    if n is None:
        return singular_part(s)
    return singular_part_integer(n)


def smooth_remainder(s, p: EvalPoint | float, side: str = "principal") -> complex:
    """li_eval minus the applicable singular part; smooth across x = 0."""
    if not isinstance(p, EvalPoint):
        p = EvalPoint(float(p), side)
    value = li_eval(s, p).value
    return value - applicable_part(s).evaluate(p)


def remainder_taylor(s, m: int) -> list[complex]:
    """Taylor coefficients zeta(s - k)/k! of the remainder, k = 0..m-1."""
    s = as_order(s)
    if not 0 < m <= 40:
        raise DomainError("need 0 < m <= 40")
    n = _nearest_integer(s)
    if n is not None and n >= 1:
        raise DomainError(f"s = {s} is too close to a positive integer")
    coeffs = []
    fact = 1.0
    for k in range(m):
        coeffs.append(riemann_zeta(s - k) / fact)
        fact *= k + 1
    return coeffs


def remainder_jet(s, sign: int, derivs: int = 2) -> list[complex]:
    """Extrapolated value/derivatives of the remainder at 0 from one side."""
    return ladder_jet(lambda x: smooth_remainder(s, x), sign, derivs)


def integer_remainder_value(n: int) -> complex:
    """Limit of the integer-order remainder at x = 0.

    For n >= 1 the k = 0 series term survives plus the harmonic constant
    carried by the x^{n-1} factor (only at n = 1); for n <= 0 it is the
    constant term of the rational closed form minus the pure power.
    """
    if n >= 2:
        return riemann_zeta(complex(n))
    if n == 1:
        return complex(harmonic(0))  # 0
    # n <= 0: series expansion of li_{-m} around 0 minus the power term
    # gives zeta(n - k) at k = 0, i.e. zeta(n)
    return riemann_zeta(complex(n))

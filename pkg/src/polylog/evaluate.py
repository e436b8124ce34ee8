"""Pointwise evaluation of li_s(x) = Li_s(e^x) with regime dispatch.

Four regimes cover the real line: a direct exponential series for x <= -1,
a singular-plus-regular expansion around the origin for |x| < 2*pi*0.875,
an explicit limit formula when the order sits inside the integer guard
band, and exact rational closed forms at nonpositive integer orders.
Boundary values for x > 0 are taken from above or below the cut, or as
their mean (principal).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exceptions import ConvergenceError, DomainError, OrderGuardError
from .kernels import (
    EULER_GAMMA,
    STIELTJES_GAMMA1,
    digamma,
    gamma,
    harmonic,
    log_gamma,
    riemann_zeta,
)

RADIUS = 2.0 * math.pi * 0.875
INTEGER_GUARD = 1e-4
_EPS_REL = 1e-14
_TERM_CAP = 400
_LN_TWO_PI = math.log(2.0 * math.pi)
_ZETA2 = math.pi * math.pi / 6.0

SIDES = ("above", "below", "principal")

REGIMES = (
    "direct_series",
    "zagier",
    "integer_limit",
    "negative_integer",
    "positive_side",
)


def as_order(s) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"order must be finite, got {s}")
    return s


@dataclass(frozen=True)
class EvalPoint:
    """A point on the real line plus the branch side used when x > 0."""

    x: float
    side: str = "principal"

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise DomainError(f"x must be finite, got {self.x}")
        if self.side not in SIDES:
            raise DomainError(f"side must be one of {SIDES}, got {self.side!r}")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    regime: str
    est_error: float

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise DomainError(f"unknown regime {self.regime!r}")
        if not (
            math.isfinite(self.value.real)
            and math.isfinite(self.value.imag)
            and self.est_error >= 0.0
        ):
            raise ConvergenceError(f"non-finite evaluation: {self}")


def _near_positive_integer(s: complex) -> int | None:
    """The integer n >= 1 within the guard radius of s, else None."""
    n = round(s.real)
    if n >= 1 and abs(s - n) <= INTEGER_GUARD:
        return n
    return None


def _log_neg(x: float, side: str) -> complex:
    # A branch of log(-x); for x > 0 the side picks arg(-x) = -pi or +pi.
    if x < 0.0:
        return complex(math.log(-x), 0.0)
    if side == "above":
        return complex(math.log(x), -math.pi)
    if side == "below":
        return complex(math.log(x), math.pi)
    raise ValueError("principal side is averaged by the caller")


def _Li_series(s: complex, z: complex) -> tuple[complex, float]:
    """sum_{n>=1} z^n / n^s by direct summation; |z| well inside the disc."""
    r = abs(z)
    if r >= 1.0:
        raise DomainError(f"direct series needs |z| < 1, got {r}")
    acc = 0.0 + 0.0j
    zp = 1.0 + 0.0j
    small = 0
    last = 0.0
    for n in range(1, _TERM_CAP + 1):
        zp *= z
        term = zp * n ** (-s)
        acc += term
        last = abs(term)
        if last <= _EPS_REL * abs(acc):
            small += 1
            if small >= 3:
                est = last * r / (1.0 - r) + 5e-16 * abs(acc)
                return acc, est
        else:
            small = 0
    raise ConvergenceError(f"direct series passed {_TERM_CAP} terms at |z| = {r}")


def li_direct_series(s, x: float) -> complex:
    """li_s(x) for x < 0 by summing e^{nx} n^{-s}."""
    s = as_order(s)
    if not x < 0.0:
        raise DomainError(f"direct series needs x < 0, got {x}")
    value, _ = _Li_series(s, complex(math.exp(x)))
    return value


def _regular_series(
    s: complex, x: complex, skip: int | None = None
) -> tuple[complex, float, float]:
    """sum_k zeta(s - k) x^k / k!, optionally skipping one index.

    Returns (sum, truncation estimate, peak term magnitude).  Once
    Re(s - k) drops deep negative the zeta factor outgrows double range,
    so those terms switch to a log-space reflected form.
    """
    ax = abs(x)
    lnax = math.log(ax)
    sin_h = cmath.sin(0.5 * math.pi * s)
    cos_h = cmath.cos(0.5 * math.pi * s)
    quadrant = (sin_h, -cos_h, -sin_h, cos_h)
    unit = x / ax
    acc = 0.0 + 0.0j
    pw = 1.0 + 0.0j  # x^k / k!
    ph = 1.0 + 0.0j  # (x/|x|)^k
    small = 0
    peak = 0.0
    last = 0.0
    for k in range(0, _TERM_CAP + 1):
        if k != skip:
            if s.real - k > -34.0:
                term = riemann_zeta(s - k) * pw
            else:
                w = 1.0 + k - s
                logmag = (
                    (s - k) * _LN_TWO_PI
                    + log_gamma(w)
                    - math.lgamma(k + 1)
                    + k * lnax
                )
                term = quadrant[k & 3] * riemann_zeta(w) / math.pi * cmath.exp(logmag) * ph
            acc += term
            last = abs(term)
            peak = max(peak, last)
            if last <= _EPS_REL * abs(acc):
                small += 1
                if small >= 3:
                    ratio = ax / (2.0 * math.pi)
                    est = last * ratio / (1.0 - ratio) + 5e-16 * peak
                    return acc, est, peak
            else:
                small = 0
        pw *= x / (k + 1)
        ph *= unit
    raise ConvergenceError(f"regular series passed {_TERM_CAP} terms at |x| = {ax}")


def _zagier_core(s: complex, x: complex, log_neg_x: complex) -> tuple[complex, float]:
    singular = gamma(1.0 - s) * cmath.exp((s - 1.0) * log_neg_x)
    regular, est, peak = _regular_series(s, x)
    value = singular + regular
    return value, est + 1e-15 * (abs(singular) + peak)


def _integer_limit_core(
    n: int, x: complex, log_neg_x: complex, eps: complex = 0.0 + 0.0j
) -> tuple[complex, float]:
    # Limit of the Zagier pair as s -> n: the Gamma pole cancels against
    # the k = n-1 zeta pole, leaving x^m/m! (H_m - log(-x)) plus the
    # punctured series.  For s = n + eps inside the guard band a first
    # order term in eps built from digamma and Stieltjes data is added.
    m = n - 1
    regular, est, peak = _regular_series(complex(n) + eps, x, skip=m)
    pw = 1.0 + 0.0j
    for k in range(1, m + 1):
        pw *= x / k
    L = log_neg_x
    bracket = complex(harmonic(m)) - L
    if eps != 0.0:
        psi = harmonic(m) - EULER_GAMMA  # digamma(n) for integer n
        corr = (
            psi * L
            - 0.5 * L * L
            - 0.5 * (psi * psi + _ZETA2 + harmonic(m, power=2))
            - STIELTJES_GAMMA1
        )
        bracket += eps * corr
        est += abs(eps) ** 2 * (1.0 + abs(pw))
    value = pw * bracket + regular
    return value, est + 1e-15 * (abs(pw * bracket) + peak)


def _sided(core, x: float, side: str, *args) -> tuple[complex, float]:
    """Evaluate a core at a real point, averaging sides for principal x > 0."""
    if x < 0.0:
        return core(complex(x), _log_neg(x, "above"), *args)
    if side != "principal":
        return core(complex(x), _log_neg(x, side), *args)
    va, ea = core(complex(x), _log_neg(x, "above"), *args)
    vb, eb = core(complex(x), _log_neg(x, "below"), *args)
    return 0.5 * (va + vb), 0.5 * (ea + eb)


def _check_radius(x: float):
    if not 0.0 < abs(x) < RADIUS:
        raise DomainError(f"need 0 < |x| < {RADIUS:.4f}, got x = {x}")


def li_zagier(s, p: EvalPoint) -> complex:
    """Singular term plus regular series; s must avoid the integer guard band."""
    s = as_order(s)
    _check_radius(p.x)
    if _near_positive_integer(s) is not None:
        raise OrderGuardError(
            f"s = {s} is within {INTEGER_GUARD} of a positive integer; "
            "use li_integer_limit"
        )
    value, _ = _sided(lambda x, ln: _zagier_core(s, x, ln), p.x, p.side)
    return value


def li_integer_limit(n: int, p: EvalPoint) -> complex:
    """The removable-singularity limit of the expansion at integer order n >= 1."""
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"integer limit needs an integer n >= 1, got {n}")
    _check_radius(p.x)
    value, _ = _sided(lambda x, ln: _integer_limit_core(n, x, ln), p.x, p.side)
    return value


@lru_cache(maxsize=None)
def _rational_poly(n: int) -> tuple[int, ...]:
    # A_n with li_{-n}(x) = A_n(u) / (1-u)^{n+1}, u = e^x, via
    # A_{k+1} = u ((1-u) A_k' + (k+1) A_k), A_0 = u.
    coeffs = [0, 1]
    for k in range(n):
        deriv = [j * coeffs[j] for j in range(1, len(coeffs))]
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(deriv):
            nxt[j + 1] += c  # u * A'
            nxt[j + 2] -= c  # -u^2 * A'
        for j, c in enumerate(coeffs):
            nxt[j + 1] += (k + 1) * c
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        coeffs = nxt
    return tuple(coeffs)


def li_negative_integer(n: int, x: float) -> float:
    """li_{-n}(x) as an exact rational function of e^x, n >= 0."""
    if not (isinstance(n, int) and n >= 0):
        raise DomainError(f"need an integer n >= 0, got {n}")
    if x == 0.0:
        raise DomainError("x = 0 is a pole of li at nonpositive integer order")
    coeffs = _rational_poly(n)
    if x <= 1.0:
        u = math.exp(x)
        num = 0.0
        for c in reversed(coeffs):
            num = num * u + c
        # expm1 keeps 1-u fully accurate near the pole at x = 0
        return num / (-math.expm1(x)) ** (n + 1)
    # for large x work in v = e^{-x}: A_n(1/v) v^{n+1} / (v-1)^{n+1}
    v = math.exp(-x)
    num = 0.0
    for c in coeffs:  # sum_j a_j v^{n+1-j}, ascending j
        num = num * v + c
    num *= v ** (n + 2 - len(coeffs))
    return num / math.expm1(-x) ** (n + 1)


def _dispatch(s: complex, p: EvalPoint) -> EvalResult:
    x = p.x
    if x == 0.0:
        if s.real > 1.5:
            value = riemann_zeta(s)
            return EvalResult(value, "zagier", 1e-15 * abs(value))
        raise DomainError("x = 0 requires Re s > 1.5 (the zeta(s) limit)")
    if x > 0.0 and x >= RADIUS:
        raise DomainError(f"x >= {RADIUS:.4f} is out of domain for x > 0")
    if (
        abs(s.imag) <= 1e-12
        and abs(s.real - round(s.real)) <= 1e-12
        and round(s.real) <= 0
    ):
        value = li_negative_integer(-int(round(s.real)), x)
        return EvalResult(complex(value), "negative_integer", 5e-16 * abs(value))
    if x <= -1.0:
        value, est = _Li_series(s, complex(math.exp(x)))
        return EvalResult(value, "direct_series", est)
    n = _near_positive_integer(s)
    if n is not None:
        eps = s - n
        value, est = _sided(
            lambda xc, ln: _integer_limit_core(n, xc, ln, eps), x, p.side
        )
        regime = "integer_limit" if x < 0.0 else "positive_side"
    else:
        value, est = _sided(lambda xc, ln: _zagier_core(s, xc, ln), x, p.side)
        regime = "zagier" if x < 0.0 else "positive_side"
    return EvalResult(value, regime, est)


def li_eval(s, p: EvalPoint | float, side: str = "principal") -> EvalResult:
    """Evaluate li_s at a point, selecting the regime automatically."""
    if not isinstance(p, EvalPoint):
        p = EvalPoint(float(p), side)
    return _dispatch(as_order(s), p)


def Li_eval(s, t: float, side: str = "principal") -> EvalResult:
    """The positive-axis variant Li_s(t) = li_s(log t)."""
    if not t > 0.0:
        raise DomainError(f"Li_eval needs t > 0, got {t}")
    return li_eval(s, EvalPoint(math.log(t), side))


def li_log_point(s, x: complex, side: str = "principal") -> complex:
    """li_s at a complex x = log z, used for off-axis dilogarithm values.

    For real x this defers to li_eval; otherwise the principal branch of
    log(-x) continues the boundary values off the line (Im x > 0 matches
    side above, Im x < 0 matches below).
    """
    s = as_order(s)
    x = complex(x)
    if x.imag == 0.0:
        return li_eval(s, EvalPoint(x.real, side)).value
    if not 0.0 < abs(x) < RADIUS:
        raise DomainError(f"need 0 < |x| < {RADIUS:.4f}, got |x| = {abs(x)}")
    log_neg_x = cmath.log(-x)
    n = _near_positive_integer(s)
    if n is not None:
        value, _ = _integer_limit_core(n, x, log_neg_x, s - n)
    else:
        value, _ = _zagier_core(s, x, log_neg_x)
    return value

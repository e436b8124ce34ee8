"""Modified polylogarithm combinations.

lambda_i assembles the Bernoulli-weighted sum of li values whose log
singularities cancel on the real line (even weights come out smooth at
the origin); classical_modified is the complex-plane counterpart with
log|z| weights, and bloch_wigner is its weight-two specialization.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .evaluate import RADIUS, EvalPoint, li_eval, li_log_point
from .exceptions import DomainError
from .kernels import bernoulli_number, bernoulli_poly_shifted

MAX_WEIGHT = 8
PROJECTIONS = ("real_part", "imag_part", "full")


def _check_weight(n):
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_WEIGHT:
        raise DomainError(f"weight must be an integer in [1, {MAX_WEIGHT}]")


@dataclass(frozen=True)
class ModifiedSpec:
    n: int
    projection: str = ""

    def __post_init__(self):
        _check_weight(self.n)
        if not self.projection:
            # the pairing that keeps even weights single valued and smooth
            auto = "imag_part" if self.n % 2 == 0 else "real_part"
            object.__setattr__(self, "projection", auto)
        if self.projection not in PROJECTIONS:
            raise DomainError(f"projection must be one of {PROJECTIONS}")


def modified_weights(n: int) -> tuple[Fraction, ...]:
    """Exact combination weights 2^k B_k / k! for k = 0..n-1."""
    _check_weight(n)
    return tuple(
        Fraction(2) ** k * bernoulli_number(k) / math.factorial(k) for k in range(n)
    )


def log_coefficient(n: int) -> Fraction:
    """Exact coefficient of x^{n-1} log|x| left over in lambda_i.

    Equals -2^{n-1} B_{n-1}(1/2) / (n-1)!, which vanishes for even n;
    that cancellation is the smoothness mechanism.
    """
    _check_weight(n)
    return (
        -(Fraction(2) ** (n - 1))
        * bernoulli_poly_shifted(n - 1, Fraction(-1, 2))
        / math.factorial(n - 1)
    )


def lambda_i(n: int, p: EvalPoint | float, side: str = "principal") -> float:
    """Real-line modified polylogarithm of weight n at a point.

    The imaginary part of the underlying sum is a pure branch artifact
    (zero for even n); the real part is side independent.
    """
    _check_weight(n)
    if not isinstance(p, EvalPoint):
        p = EvalPoint(float(p), side)
    acc = 0.0 + 0.0j
    xp = 1.0
    for k, w in enumerate(modified_weights(n)):
        if w != 0 and xp != 0.0:
            acc += float(w) * xp * li_eval(n - k, p).value
        xp *= p.x
    return acc.real


_SERIES_DISC = 0.6


def _Li_complex(n: int, z: complex) -> complex:
    """Li_n at complex argument: series in the disc, log variable outside."""
    if abs(z) <= _SERIES_DISC:
        acc = 0.0 + 0.0j
        zp = 1.0 + 0.0j
        for j in range(1, 240):
            zp *= z
            term = zp / j**n
            acc += term
            if abs(term) < 1e-18 * (1.0 + abs(acc)):
                break
        return acc
    x = cmath.log(z)
    if not 0.0 < abs(x) < RADIUS:
        raise DomainError(
            f"argument outside the covered region: need |z| <= {_SERIES_DISC} "
            f"or |log z| < {RADIUS:.4f}"
        )
    return li_log_point(n, x)


def classical_modified(spec: ModifiedSpec, z: complex):
    """Complex-plane modified polylogarithm with log|z|^k weights."""
    z = complex(z)
    if z == 0 or z == 1:
        raise DomainError("z must avoid 0 and 1")
    if z.imag == 0.0 and z.real > 1.0:
        warnings.warn(
            "argument on the cut (1, inf): principal (side-averaged) value used",
            RuntimeWarning,
            stacklevel=2,
        )
    lg = math.log(abs(z))
    acc = 0.0 + 0.0j
    lp = 1.0
    for k, w in enumerate(modified_weights(spec.n)):
        if w != 0:
            acc += float(w) * lp * _Li_complex(spec.n - k, z)
        lp *= lg
    if spec.projection == "real_part":
        return acc.real
    if spec.projection == "imag_part":
        return acc.imag
    return acc


def bloch_wigner(z: complex) -> float:
    """The dilogarithm D(z) = Im Li_2(z) + arg(1-z) log|z|.

    Real analytic on the plane minus {0, 1}; the branch jumps of the two
    terms cancel across (1, inf), and on that ray itself the continuous
    limit is zero.
    """
    z = complex(z)
    if z == 0 or z == 1:
        raise DomainError("z must avoid 0 and 1")
    if z.imag == 0.0:
        # odd under conjugation, hence zero on the real line
        return 0.0
    return float(_Li_complex(2, z).imag) + cmath.phase(1.0 - z) * math.log(abs(z))

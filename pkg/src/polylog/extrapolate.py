"""Polynomial extrapolation of one-sided samples to the origin.

Fits the Newton interpolant through samples at a geometric step ladder
and reads off the value and the first few derivatives at 0.  Used for
the smoothness checks on the remainder and the modified polylogarithm.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .exceptions import DomainError

# Geometric ladder defaults.  Node scale is a compromise: rounding noise in
# the sampled function grows like eps/x^(m+1) for the negative-order
# remainders while fit truncation grows with h, and divided differences
# amplify node noise by roughly 1/h^k for the k-th derivative.
LADDER_H0 = 0.1
LADDER_RATIO = 0.72
LADDER_COUNT = 5


def fit_at_zero(xs: Sequence[float], ys: Sequence[complex], derivs: int) -> list[complex]:
    """Value and derivatives at 0 of the interpolant through (xs, ys).

    Returns [p(0), p'(0), ..., p^(derivs)(0)].
    """
    n = len(xs)
    if n != len(ys) or n < derivs + 1:
        raise DomainError("need at least derivs+1 samples")
    dd = [complex(y) for y in ys]
    for order in range(1, n):
        for i in range(n - 1, order - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - order])
    # Horner on the Newton form, carrying scaled derivatives t_m = p^(m)(0)/m!
    t = [0.0 + 0.0j] * (derivs + 1)
    t[0] = dd[n - 1]
    for idx in range(n - 2, -1, -1):
        c = xs[idx]
        nxt = [0.0 + 0.0j] * (derivs + 1)
        for m in range(derivs, 0, -1):
            nxt[m] = t[m - 1] - c * t[m]
        nxt[0] = dd[idx] - c * t[0]
        t = nxt
    return [t[m] * math.factorial(m) for m in range(derivs + 1)]


def ladder_jet(
    func: Callable[[float], complex],
    sign: int,
    derivs: int = 2,
    h0: float = LADDER_H0,
    ratio: float = LADDER_RATIO,
    count: int = LADDER_COUNT,
) -> list[complex]:
    """One-sided jet of func at 0 from samples at sign*h0*ratio^j."""
    if sign not in (-1, 1):
        raise DomainError("sign must be -1 or +1")
    xs = [sign * h0 * ratio**j for j in range(count)]
    ys = [complex(func(x)) for x in xs]
    return fit_at_zero(xs, ys, derivs)

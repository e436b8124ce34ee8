"""Self-contained verification suites.

Each suite re-derives a module's invariants at runtime and reports one
CheckResult per property.  The CLI `verify` command and the acceptance
tests both run these, so there is a single definition of "healthy".
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .evaluate import RADIUS, EvalPoint, li_direct_series, li_eval
from .extrapolate import ladder_jet
from .kernels import (
    EULER_GAMMA,
    bernoulli_number,
    bernoulli_poly_shifted,
    digamma,
    gamma,
    harmonic,
    riemann_zeta,
)
from .modified import bloch_wigner, lambda_i, log_coefficient, modified_weights
from .pairing import (
    pair_direct,
    pair_eta,
    pair_li,
    pair_li0,
    verify_fourier_gamma,
    verify_functional_equation,
)
from .singular import (
    applicable_part,
    integer_remainder_value,
    remainder_jet,
    smooth_remainder,
)
from .testfun import Cutoff, TestFunction, gaussian


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tol: float
    passed: bool
    detail: str = ""


def _check(name: str, residual: float, tol: float, detail: str = "") -> CheckResult:
    residual = float(residual)
    return CheckResult(name, residual, float(tol), residual <= tol, detail)


# canonical probe set: four Hermite-Gaussian packets of varied center,
# width, and polynomial content
PROBES = (
    gaussian(0, 1),
    TestFunction(0.4, 0.8, (0.0, 1.0, 0.0, -0.3)),
    gaussian(-2, 1),
    TestFunction(-0.3, 0.9, (1.0, 0.5, -0.25, 0.0, 0.125)),
)

_ZETA_HALF = -1.4603545088095868128894991525153
_LI_2_M1 = 0.40875428734889626903318497615298
_LI_2001_M1 = 0.40872257513038357470459849984
_LI_1999_M1 = 0.408786025722903898906331502652
_CATALAN = 0.91596559417721901505460351493238
_D_MAX = 1.0149416064096536250212025542745


def suite_kernels() -> list[CheckResult]:
    out = []
    out.append(_check("zeta at 2", abs(riemann_zeta(2.0) - math.pi**2 / 6), 1e-13))
    out.append(_check("zeta at 1/2", abs(riemann_zeta(0.5) - _ZETA_HALF), 1e-12))
    s = 0.7 + 1.3j
    fe = riemann_zeta(s) - (
        2**s
        * math.pi ** (s - 1)
        * cmath.sin(math.pi * s / 2)
        * gamma(1 - s)
        * riemann_zeta(1 - s)
    )
    out.append(_check("zeta functional equation", abs(fe), 1e-10))
    out.append(_check("gamma at 1/2", abs(gamma(0.5) - math.sqrt(math.pi)), 1e-13))
    z = 0.3 + 0.7j
    refl = gamma(z) * gamma(1 - z) - math.pi / cmath.sin(math.pi * z)
    out.append(_check("gamma reflection", abs(refl), 1e-12))
    out.append(_check("digamma at 1", abs(digamma(1.0) + EULER_GAMMA), 1e-12))
    out.append(
        _check(
            "bernoulli B12",
            abs(bernoulli_number(12) - Fraction(-691, 2730)),
            1e-15,
        )
    )
    out.append(
        _check("harmonic H10", abs(harmonic(10) - 7381.0 / 2520.0), 1e-14)
    )
    return out


def suite_polylog() -> list[CheckResult]:
    out = []
    worst = 0.0
    for s in (0.5, -0.5, 1.5 + 0.7j, 2.5):
        for x in np.linspace(-1.8, -0.6, 25):
            direct = li_direct_series(s, float(x))
            cont = li_eval(s, EvalPoint(float(x))).value
            worst = max(worst, abs(direct - cont) / abs(direct))
    out.append(_check("overlap direct vs continued", worst, 1e-9))

    worst = 0.0
    for x in (-4.0, -1.0, -0.1, 0.1, 1.0):
        got = li_eval(1, EvalPoint(x, "principal")).value
        worst = max(worst, abs(got + math.log(abs(1.0 - math.exp(x)))))
    out.append(_check("weight-one log identity", worst, 1e-12))

    out.append(
        _check(
            "integer limit at s=2",
            abs(li_eval(2, EvalPoint(-1.0)).value - _LI_2_M1),
            1e-10,
        )
    )
    # walking s across the regime seam must track the analytic values
    # (the function itself moves by ~3e-5 over +/-1e-3, so the budget
    # bounds evaluation error and seam jump, not the slope)
    guard = max(
        abs(li_eval(2 + 1e-3, EvalPoint(-1.0)).value - _LI_2001_M1),
        abs(li_eval(2 - 1e-3, EvalPoint(-1.0)).value - _LI_1999_M1),
        abs(
            li_eval(2 + 1.01e-4, EvalPoint(-1.0)).value
            - li_eval(2 + 0.99e-4, EvalPoint(-1.0)).value
        ),
    )
    out.append(_check("guard-band continuity at s=2", guard, 1e-6))

    rational = li_eval(-3, EvalPoint(-0.7)).value
    series = li_direct_series(-3, -0.7)
    out.append(_check("negative integer closed form", abs(rational - series), 1e-13))
    out.append(
        _check(
            "zeta limit at x=0",
            abs(li_eval(2.5, EvalPoint(0.0)).value - riemann_zeta(2.5)),
            1e-13,
        )
    )
    return out


def suite_singular() -> list[CheckResult]:
    out = []
    worst = 0.0
    for s in (0.5, 1.5):
        for x in (-0.3, 0.3):
            p = EvalPoint(x, "above")
            total = applicable_part(s).evaluate(p) + smooth_remainder(s, p)
            worst = max(worst, abs(total - li_eval(s, p).value))
    out.append(_check("decomposition recomposes", worst, 1e-12))

    worst = 0.0
    for s, n in ((0.5, None), (1.5, None), (1, 1), (2, 2), (3, 3), (0, 0), (-1, -1)):
        left = remainder_jet(s, -1)
        right = remainder_jet(s, +1)
        worst = max(worst, max(abs(a - b) for a, b in zip(left, right)))
    out.append(_check("remainder two-sided smoothness", worst, 1e-6))

    worst = 0.0
    for n in (2, 3, 0, -1):
        jet = remainder_jet(n, -1)
        worst = max(worst, abs(jet[0] - integer_remainder_value(n)))
    out.append(_check("integer remainder limits", worst, 1e-8))
    return out


def suite_modified() -> list[CheckResult]:
    out = []
    table = []
    for n, tol in ((2, 1e-6), (4, 1e-5)):
        left = ladder_jet(lambda x: lambda_i(n, x), -1, derivs=3,
                          h0=0.05, ratio=0.72, count=6)
        right = ladder_jet(lambda x: lambda_i(n, x), +1, derivs=3,
                           h0=0.05, ratio=0.72, count=6)
        diffs = [abs(a - b) for a, b in zip(left, right)]
        table.append(
            f"n={n}: " + " ".join(f"d{j}={d:.3e}" for j, d in enumerate(diffs))
        )
        out.append(
            _check(f"lambda_{n} smooth at origin", max(diffs), tol, table[-1])
        )
        if n == 2:
            value = 0.5 * (left[0] + right[0])
            out.append(
                _check("lambda_2 value pi^2/6", abs(value - math.pi**2 / 6), 1e-8)
            )
    worst = Fraction(0)
    for n in range(1, 9):
        lhs = sum(
            w / math.factorial(n - 1 - k) for k, w in enumerate(modified_weights(n))
        )
        worst = max(worst, abs(lhs + log_coefficient(n)))
    out.append(_check("weight identity exact", float(worst), 1e-15))

    out.append(_check("dilog at i", abs(bloch_wigner(1j) - _CATALAN), 1e-10))
    out.append(
        _check(
            "dilog cut continuity",
            abs(bloch_wigner(2 + 1e-6j) - bloch_wigner(2 - 1e-6j)),
            1e-5,
        )
    )
    worst = 0.0
    for x, y in ((0.3 + 0.4j, -0.2 + 0.5j), (0.5 + 0.1j, 0.1 - 0.6j), (-0.4 - 0.3j, 0.25 + 0.55j)):
        total = (
            bloch_wigner(x)
            + bloch_wigner(y)
            + bloch_wigner((1 - x) / (1 - x * y))
            + bloch_wigner(1 - x * y)
            + bloch_wigner((1 - y) / (1 - x * y))
        )
        worst = max(worst, abs(total))
    out.append(_check("dilog five-term relation", worst, 1e-9))
    out.append(
        _check(
            "dilog max at sixth root",
            abs(bloch_wigner(cmath.exp(1j * math.pi / 3)) - _D_MAX),
            1e-10,
        )
    )
    return out


def suite_pairing() -> list[CheckResult]:
    out = []
    out.append(
        _check(
            "even-part value -1/2",
            abs(pair_li0(gaussian(0, 1)).value + 0.5),
            1e-10,
        )
    )
    worst = 0.0
    for s in (-1.5, 0.5, 1.0, 2.5):
        for f in PROBES:
            worst = max(worst, verify_functional_equation(s, f))
    out.append(_check("derivative functional equation", worst, 1e-7))

    chi_a, chi_b = Cutoff(0.5, 1.0), Cutoff(0.3, 0.8)
    worst = 0.0
    for s in (-1.5, 0.5, 1.0, 2.5):
        va = pair_li(s, PROBES[0], chi_a).value
        vb = pair_li(s, PROBES[0], chi_b).value
        worst = max(worst, abs(va - vb))
    out.append(_check("cutoff independence", worst, 1e-8))

    worst = 0.0
    for s0 in (0.0, 1.0, 2.0):
        center = pair_li(s0, PROBES[0]).value
        ring = [
            pair_li(s0 + 0.3 * cmath.exp(2j * math.pi * j / 24), PROBES[0]).value
            for j in range(24)
        ]
        worst = max(worst, abs(sum(ring) / 24 - center))
    out.append(_check("entire in the order", worst, 1e-8))

    worst = 0.0
    for s in (-1.5, 0.5, 1.0, 3.0):
        worst = max(worst, verify_fourier_gamma(s, PROBES[0]))
    out.append(_check("fourier transform identity", worst, 1e-8))

    worst = max(
        abs(pair_li(0, f).value - pair_li0(f).value) for f in (PROBES[0], PROBES[1])
    )
    out.append(_check("order-zero consistency", worst, 1e-9))

    f_narrow = gaussian(0, 0.75)
    out.append(
        _check(
            "direct vs distributional",
            abs(pair_direct(1, f_narrow).value - pair_li(1, f_narrow).value),
            1e-8,
        )
    )
    jump = pair_eta(-1, "plus", PROBES[0]).value - pair_eta(-1, "minus", PROBES[0]).value
    out.append(
        _check(
            "boundary power jump",
            abs(jump + 2j * math.pi * PROBES[0](0.0)),
            1e-9,
        )
    )
    return out


SUITES = {
    "kernels": suite_kernels,
    "polylog": suite_polylog,
    "singular": suite_singular,
    "modified": suite_modified,
    "pairing": suite_pairing,
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one named suite, or every suite for name == 'all'."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name]()

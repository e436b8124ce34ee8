"""Checks for the scalar special-function kernels.

Reference values were computed with mpmath at 30+ digits and frozen here.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from polylog import kernels
from polylog.exceptions import DomainError, PoleError


def rel_err(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


GAMMA_CASES = [
    (0.25, 3.6256099082219083119306851558677),
    (0.75, 1.2254167024651776451290983033629),
    (-2.5, -0.94530872048294188122568932444861),
    (6.3 - 4.2j, 7.2431703297510141101328910493748 - 48.872381384980496064410872189387j),
    (0.5 + 3.0j, 0.021445670552430646059552802251604 + 0.006865364837261677914238493819863j),
    (-5.5 + 2.5j, -2.2615397204061561844611273304019e-06 - 1.3865702911901958198870970772379e-05j),
]


@pytest.mark.parametrize("z, want", GAMMA_CASES)
def test_gamma_reference_values(z, want):
    assert rel_err(kernels.gamma(z), want) < 1e-12


def test_gamma_recurrence():
    # z Gamma(z) = Gamma(z + 1) across the contract window
    rng = np.random.default_rng(2026)
    for _ in range(50):
        z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        if kernels.is_nonpositive_integer(z, tol=1e-6) or kernels.is_nonpositive_integer(
            z + 1, tol=1e-6
        ):
            continue
        lhs = z * kernels.gamma(z)
        rhs = kernels.gamma(z + 1.0)
        assert rel_err(lhs, rhs) < 1e-12


def test_gamma_reflection_consistency():
    # Gamma(z) Gamma(1-z) = pi / sin(pi z)
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 50:
        z = complex(rng.uniform(-10, 0), rng.uniform(-5, 5))
        if abs(z.imag) < 0.05:
            continue
        prod = kernels.gamma(z) * kernels.gamma(1.0 - z)
        want = math.pi / (np.sin(np.pi * z))
        assert rel_err(prod, want) < 1e-10
        checked += 1


def test_gamma_pole_raises():
    for z in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            kernels.gamma(z)


def test_log_gamma_matches_gamma():
    for z in (0.5, 3.25, 17.0 + 4.0j, 41.0 + 30.0j, 0.75 - 11.0j):
        got = np.exp(complex(kernels.log_gamma(z)))
        assert rel_err(got, kernels.gamma(z)) < 1e-12
    with pytest.raises(DomainError):
        kernels.log_gamma(0.25)


DIGAMMA_CASES = [
    (3.7 + 2.1j, 1.3433740763984102591167355513566 + 0.57817225564653656138249248924703j),
    (0.5, -1.9635100260214234794409763329988),
    (-3.3, 3.6203534605921231535700306392938),
]


@pytest.mark.parametrize("z, want", DIGAMMA_CASES)
def test_digamma_reference_values(z, want):
    assert rel_err(kernels.digamma(z), want) < 1e-12


def test_digamma_recurrence():
    rng = np.random.default_rng(11)
    for _ in range(30):
        z = complex(rng.uniform(0.1, 15), rng.uniform(-8, 8))
        assert abs(kernels.digamma(z + 1) - kernels.digamma(z) - 1.0 / z) < 1e-12


ZETA_CASES = [
    (0.5, -1.4603545088095868128894991525153),
    (1.5, 2.6123753486854883433485675679241),
    (2.5, 1.3414872572509171797567696933486),
    (-0.5, -0.20788622497735456601730672539705),
    (1.0 + 1e-8, 100000001.18496276641547164500185),
    (0.5 + 14.1j, 0.0046984001834891354049188961829344 - 0.027058282374250772881980468393331j),
    (-7.3, 0.0039360408657169605833799055471346),
    (-22.5 + 3.0j, -2191.7799280979046332299706080829 + 85851.587350494074932822543007137j),
]


@pytest.mark.parametrize("s, want", ZETA_CASES)
def test_zeta_reference_values(s, want):
    assert rel_err(kernels.riemann_zeta(s), want) < 1e-11


def test_zeta_trivial_values():
    # zeta(1 - 2m) = -B_{2m} / (2m) exactly at negative odd integers
    for m in range(1, 11):
        want = float(-kernels.bernoulli_number(2 * m) / (2 * m))
        got = kernels.riemann_zeta(complex(1 - 2 * m))
        assert got.imag == 0.0
        assert rel_err(got.real, want) < 1e-12
    for m in range(1, 8):
        assert kernels.riemann_zeta(complex(-2 * m)) == 0.0
    assert kernels.riemann_zeta(complex(0.0)) == -0.5


def test_zeta_pole_raises():
    with pytest.raises(PoleError):
        kernels.riemann_zeta(1.0)


def test_bernoulli_numbers():
    table = {
        0: Fraction(1),
        1: Fraction(-1, 2),
        2: Fraction(1, 6),
        4: Fraction(-1, 30),
        12: Fraction(-691, 2730),
        64: None,
    }
    for n, want in table.items():
        got = kernels.bernoulli_number(n)
        if want is not None:
            assert got == want
    for n in range(3, 64, 2):
        assert kernels.bernoulli_number(n) == 0
    with pytest.raises(DomainError):
        kernels.bernoulli_number(65)


def test_bernoulli_poly_shifted_exact_values():
    # B_n(q + 1) at rational q; odd n vanish at q = -1/2
    assert kernels.bernoulli_poly_shifted(1, 0) == Fraction(1, 2)
    assert kernels.bernoulli_poly_shifted(2, 0) == Fraction(1, 6)
    for n in range(1, 16, 2):
        assert kernels.bernoulli_poly_shifted(n, Fraction(-1, 2)) == 0
    for n in range(0, 16, 2):
        want = (Fraction(2) ** (1 - n) - 1) * kernels.bernoulli_number(n)
        assert kernels.bernoulli_poly_shifted(n, Fraction(-1, 2)) == want


def test_bernoulli_generating_function():
    # t e^{(q+1)t} / (e^t - 1) = sum_n B_n(q+1) t^n / n!
    for q in (-0.5, 0.0, 1.0):
        for t in (0.1, 0.5):
            lhs = t * math.exp((q + 1.0) * t) / math.expm1(t)
            rhs = math.fsum(
                float(kernels.bernoulli_poly_shifted(n, q)) * t**n / math.factorial(n)
                for n in range(0, 40)
            )
            assert abs(lhs - rhs) < 1e-12


def test_harmonic():
    assert kernels.harmonic(0) == 0.0
    assert kernels.harmonic(1) == 1.0
    assert abs(kernels.harmonic(4) - 25.0 / 12.0) < 1e-15
    assert abs(kernels.harmonic(3, power=2) - 49.0 / 36.0) < 1e-15

import math

import numpy as np
import pytest

from polylog.exceptions import ConvergenceError, DomainError
from polylog.quadrature import (
    GAUSS_WEIGHTS,
    KRONROD_WEIGHTS,
    NODES,
    adaptive,
    fixed_panels,
    octave_edges,
)


def test_rule_constants():
    assert NODES.shape == (15,)
    assert abs(KRONROD_WEIGHTS.sum() - 2.0) < 1e-15
    assert abs(GAUSS_WEIGHTS.sum() - 2.0) < 1e-15
    assert np.all(np.diff(NODES) > 0)
    # Kronrod is exact through degree 22 on [-1, 1]
    for p in (8, 14, 22):
        exact = 2.0 / (p + 1)
        assert abs((KRONROD_WEIGHTS * NODES**p).sum() - exact) < 1e-14
    # embedded Gauss-7 is exact through degree 13
    assert abs((GAUSS_WEIGHTS * NODES**12).sum() - 2.0 / 13) < 1e-14


def test_fixed_panels_smooth():
    v, e = fixed_panels(np.exp, [0.0, 0.5, 1.0])
    assert abs(v - (math.e - 1)) < 1e-14
    assert e < 1e-12


def test_adaptive_smooth_and_kinked():
    v, _ = adaptive(lambda x: np.exp(x), 0, 1)
    assert abs(v - (math.e - 1)) < 1e-13
    v, _ = adaptive(lambda x: np.abs(x) * np.exp(x), -1, 1, breakpoints=(0,))
    assert abs(v - (2 - 2 / math.e)) < 1e-13


def test_adaptive_complex_integrand():
    v, _ = adaptive(lambda x: np.exp(1j * x), 0, 1)
    want = complex(math.sin(1), 1 - math.cos(1))
    assert abs(v - want) < 1e-13


def test_adaptive_oscillatory():
    v, _ = adaptive(lambda x: np.cos(10 * x), 0, 2 * math.pi, tol_abs=1e-13)
    assert abs(v) < 1e-12


def test_adaptive_refines_peak():
    # narrow bump, location hinted the way pairing integrals hint theirs
    v, _ = adaptive(
        lambda x: np.exp(-((x - 0.3) ** 2) * 4e4),
        -1,
        1,
        breakpoints=(0.25, 0.35),
        tol_abs=1e-14,
    )
    assert abs(v - math.sqrt(math.pi) / 200.0) < 1e-12


def test_adaptive_stall_raises():
    with pytest.raises(ConvergenceError):
        adaptive(lambda x: np.abs(x) ** -0.5, 1e-30, 1.0, tol_abs=1e-14, max_panels=8)


def test_octave_ladder_integrates_inverse_sqrt():
    edges = octave_edges(0.0, 1.0, 48)
    assert edges[-1] == 1.0
    assert len(edges) == 49
    v, e = fixed_panels(lambda x: x**-0.5, edges)
    stub = (2.0**-48) ** 0.5 / 0.5  # constant-term closure of the open sliver
    assert abs(v + stub - 2.0) < 1e-13
    assert e < 1e-10


def test_validation():
    with pytest.raises(DomainError):
        adaptive(np.exp, 1.0, 0.0)
    with pytest.raises(DomainError):
        fixed_panels(np.exp, [0.0])
    with pytest.raises(DomainError):
        octave_edges(0.0, 1.0, 0)

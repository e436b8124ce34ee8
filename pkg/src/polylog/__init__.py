"""Polylogarithm evaluation on the real line with distributional pairings."""

from .evaluate import (
    RADIUS,
    EvalPoint,
    EvalResult,
    Li_eval,
    li_direct_series,
    li_eval,
    li_integer_limit,
    li_log_point,
    li_negative_integer,
    li_zagier,
)
from .exceptions import (
    ConvergenceError,
    DomainError,
    OrderGuardError,
    PoleError,
    PolylogError,
)
from .kernels import (
    EULER_GAMMA,
    STIELTJES_GAMMA1,
    bernoulli_number,
    bernoulli_poly_shifted,
    digamma,
    gamma,
    harmonic,
    riemann_zeta,
)
from .modified import (
    ModifiedSpec,
    bloch_wigner,
    classical_modified,
    lambda_i,
    log_coefficient,
    modified_weights,
)
from .pairing import (
    PairingResult,
    pair_direct,
    pair_eta,
    pair_gamma_plus,
    pair_li,
    pair_li0,
    profile,
    verify_fourier_gamma,
    verify_functional_equation,
)
from .singular import (
    SingularPart,
    SingularTerm,
    applicable_part,
    integer_remainder_value,
    remainder_jet,
    remainder_taylor,
    singular_part,
    singular_part_integer,
    smooth_remainder,
)
from .testfun import Cutoff, TestFunction, gaussian
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "OrderGuardError",
    "PoleError",
    "PolylogError",
    "EULER_GAMMA",
    "STIELTJES_GAMMA1",
    "RADIUS",
    "EvalPoint",
    "EvalResult",
    "Li_eval",
    "li_direct_series",
    "li_eval",
    "li_integer_limit",
    "li_log_point",
    "li_negative_integer",
    "li_zagier",
    "bernoulli_number",
    "bernoulli_poly_shifted",
    "digamma",
    "gamma",
    "harmonic",
    "riemann_zeta",
    "ModifiedSpec",
    "bloch_wigner",
    "classical_modified",
    "lambda_i",
    "log_coefficient",
    "modified_weights",
    "PairingResult",
    "pair_direct",
    "pair_eta",
    "pair_gamma_plus",
    "pair_li",
    "pair_li0",
    "profile",
    "verify_fourier_gamma",
    "verify_functional_equation",
    "SingularPart",
    "SingularTerm",
    "applicable_part",
    "integer_remainder_value",
    "remainder_jet",
    "remainder_taylor",
    "singular_part",
    "singular_part_integer",
    "smooth_remainder",
    "Cutoff",
    "TestFunction",
    "gaussian",
    "CheckResult",
    "run_suite",
]

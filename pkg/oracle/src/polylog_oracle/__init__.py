"""Brute-force mpmath oracle that regenerates the golden-vector file."""

from .harness import (
    SCHEMA,
    OracleConfig,
    OracleError,
    emit_goldens,
    evaluate_record,
    hp_li,
    hp_li_series,
    hp_pairing,
    hp_profile,
)
from .records import RECORDS

__version__ = "0.1.0"

__all__ = [
    "SCHEMA",
    "OracleConfig",
    "OracleError",
    "RECORDS",
    "emit_goldens",
    "evaluate_record",
    "hp_li",
    "hp_li_series",
    "hp_pairing",
    "hp_profile",
]

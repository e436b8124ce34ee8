"""Golden-vector records: schema, operation registry, compare and emit.

A golden file is a JSON document {"schema": ..., "records": [...]} where
each record names an operation, its inputs, a reference value, and an
absolute tolerance.  The same schema is what the high-precision oracle
harness emits, so the two sides only ever meet through this file.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .evaluate import EvalPoint, Li_eval, li_eval
from .exceptions import DomainError
from .kernels import digamma, gamma, riemann_zeta
from .modified import ModifiedSpec, bloch_wigner, classical_modified, lambda_i
from .pairing import pair_direct, pair_eta, pair_gamma_plus, pair_li, pair_li0, profile
from .singular import applicable_part, smooth_remainder
from .testfun import Cutoff, TestFunction

SCHEMA = "polylog-goldens-v1"


@dataclass(frozen=True)
class GoldenRecord:
    op: str
    s_re: float
    s_im: float
    x: float
    side: str
    extra: dict = field(default_factory=dict)
    value_re: float = 0.0
    value_im: float = 0.0
    abs_tol: float = 1e-12

    def __post_init__(self):
        if self.op not in REGISTRY:
            raise DomainError(f"unknown golden op {self.op!r}")
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise DomainError("abs_tol must be positive and finite")
        for label, v in (
            ("s_re", self.s_re),
            ("s_im", self.s_im),
            ("x", self.x),
            ("value_re", self.value_re),
            ("value_im", self.value_im),
        ):
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"{label} must be a finite number")
        if not isinstance(self.side, str):
            raise DomainError("side must be a string")
        for key, v in self.extra.items():
            if not isinstance(key, str):
                raise DomainError("extra keys must be strings")
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"extra[{key!r}] must be a finite number")

    @property
    def order(self) -> complex:
        return complex(self.s_re, self.s_im)

    @property
    def value(self) -> complex:
        return complex(self.value_re, self.value_im)

    def to_dict(self) -> dict:
        return {
            "op": self.op,
            "s_re": self.s_re,
            "s_im": self.s_im,
            "x": self.x,
            "side": self.side,
            "extra": dict(sorted(self.extra.items())),
            "value_re": self.value_re,
            "value_im": self.value_im,
            "abs_tol": self.abs_tol,
        }


def _side(rec: GoldenRecord, default: str = "principal") -> str:
    return rec.side or default


def _testfun(extra: dict) -> TestFunction:
    coeffs = []
    while f"f_c{len(coeffs)}" in extra:
        coeffs.append(float(extra[f"f_c{len(coeffs)}"]))
    if not coeffs:
        raise DomainError("record needs test-function coefficients f_c0...")
    return TestFunction(
        float(extra.get("f_mu", 0.0)), float(extra.get("f_sigma", 1.0)), tuple(coeffs)
    )


def _cutoff(extra: dict) -> Cutoff:
    return Cutoff(float(extra.get("chi_a", 0.5)), float(extra.get("chi_b", 1.0)))


def _z_arg(rec: GoldenRecord) -> complex:
    return complex(rec.x, float(rec.extra.get("z_im", 0.0)))


REGISTRY = {}


def _register(name):
    def wrap(fn):
        REGISTRY[name] = fn
        return fn

    return wrap


@_register("li_eval")
def _op_li_eval(rec):
    return li_eval(rec.order, EvalPoint(rec.x, _side(rec))).value


@_register("Li_eval")
def _op_Li_eval(rec):
    return Li_eval(rec.order, rec.x, _side(rec)).value


@_register("riemann_zeta")
def _op_zeta(rec):
    return riemann_zeta(rec.order)


@_register("gamma")
def _op_gamma(rec):
    return gamma(rec.order)


@_register("digamma")
def _op_digamma(rec):
    return digamma(rec.order)


@_register("smooth_remainder")
def _op_smooth_remainder(rec):
    return smooth_remainder(rec.order, rec.x, _side(rec))


@_register("singular_eval")
def _op_singular_eval(rec):
    return applicable_part(rec.order).evaluate(EvalPoint(rec.x, _side(rec)))


@_register("lambda_i")
def _op_lambda_i(rec):
    return complex(lambda_i(int(rec.s_re), EvalPoint(rec.x, _side(rec))))


@_register("bloch_wigner")
def _op_bloch_wigner(rec):
    return complex(bloch_wigner(_z_arg(rec)))


@_register("classical_modified")
def _op_classical_modified(rec):
    spec = ModifiedSpec(int(rec.s_re), rec.side)
    return complex(classical_modified(spec, _z_arg(rec)))


@_register("profile")
def _op_profile(rec):
    k = int(rec.extra["k"]) if "k" in rec.extra else None
    return profile(rec.order, rec.x, _testfun(rec.extra), k)


@_register("pair_gamma_plus")
def _op_pair_gamma_plus(rec):
    return pair_gamma_plus(rec.order, _testfun(rec.extra)).value


@_register("pair_li0")
def _op_pair_li0(rec):
    return pair_li0(_testfun(rec.extra), _cutoff(rec.extra)).value


@_register("pair_li")
def _op_pair_li(rec):
    return pair_li(rec.order, _testfun(rec.extra), _cutoff(rec.extra)).value


@_register("pair_direct")
def _op_pair_direct(rec):
    return pair_direct(rec.order, _testfun(rec.extra)).value


@_register("pair_eta")
def _op_pair_eta(rec):
    return pair_eta(rec.order, _side(rec, "minus"), _testfun(rec.extra)).value


def evaluate_record(rec: GoldenRecord) -> complex:
    """Recompute the operation a record describes with current code."""
    return complex(REGISTRY[rec.op](rec))


def load_goldens(path) -> list[GoldenRecord]:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise DomainError(f"golden file must declare schema {SCHEMA!r}")
    rows = doc.get("records")
    if not isinstance(rows, list) or not rows:
        raise DomainError("golden file holds no records")
    out = []
    for i, row in enumerate(rows):
        try:
            out.append(
                GoldenRecord(
                    op=row["op"],
                    s_re=float(row.get("s_re", 0.0)),
                    s_im=float(row.get("s_im", 0.0)),
                    x=float(row.get("x", 0.0)),
                    side=row.get("side", ""),
                    extra={k: float(v) for k, v in row.get("extra", {}).items()},
                    value_re=float(row["value_re"]),
                    value_im=float(row.get("value_im", 0.0)),
                    abs_tol=float(row["abs_tol"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"record {i} is malformed: {exc}") from exc
    return out


def save_goldens(records, path):
    """Write records deterministically (sorted keys, fixed layout)."""
    doc = {"schema": SCHEMA, "records": [r.to_dict() for r in records]}
    text = json.dumps(doc, indent=2, sort_keys=False)
    Path(path).write_text(text + "\n", encoding="utf-8")


def compare_goldens(records) -> list[dict]:
    """Recompute every record; return one report row per record."""
    report = []
    for i, rec in enumerate(records):
        got = evaluate_record(rec)
        err = abs(got - rec.value)
        report.append(
            {
                "index": i,
                "op": rec.op,
                "err": err,
                "abs_tol": rec.abs_tol,
                "ok": err <= rec.abs_tol,
                "got_re": got.real,
                "got_im": got.imag,
            }
        )
    return report


def refreshed(records) -> list[GoldenRecord]:
    """Same inputs, values recomputed by the current build."""
    out = []
    for rec in records:
        got = evaluate_record(rec)
        out.append(
            GoldenRecord(
                op=rec.op,
                s_re=rec.s_re,
                s_im=rec.s_im,
                x=rec.x,
                side=rec.side,
                extra=dict(rec.extra),
                value_re=got.real,
                value_im=got.imag,
                abs_tol=rec.abs_tol,
            )
        )
    return out

"""Oracle harness: config, brute-force evaluators, emission, escalation."""

import json
import re
import subprocess
import sys
from pathlib import Path

import pytest
from mpmath import mp, mpc, mpf

from polylog_oracle import (
    RECORDS,
    SCHEMA,
    OracleConfig,
    OracleError,
    emit_goldens,
    evaluate_record,
    hp_li_series,
    hp_pairing,
    hp_profile,
)
from polylog_oracle.__main__ import main

CHECKED_PATH = Path(__file__).resolve().parent.parent.parent / "data" / "goldens.json"

UNIT_GAUSSIAN = {"f_mu": 0.0, "f_sigma": 1.0, "f_c0": 0.3989422804014327}

# 30-digit pairing references frozen into the consuming test suite
PAIR_LI_1_STD = "0.594482988538748262465358770864"
PAIR_LI_25_M3 = "0.086116588852157694395874900979"


@pytest.fixture(scope="module")
def checked():
    with open(CHECKED_PATH, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    assert payload["schema"] == SCHEMA
    return payload["records"]


@pytest.fixture(scope="module")
def hp30():
    # keep the raw mpmath values: an mpc() wrap at ambient precision
    # would round them to 15 digits and defeat the escalation check
    cfg = OracleConfig(digits=30)
    return [evaluate_record(rec, cfg) for rec in RECORDS]


@pytest.fixture(scope="module")
def hp40():
    cfg = OracleConfig(digits=40)
    return [evaluate_record(rec, cfg) for rec in RECORDS]


class TestConfig:
    def test_defaults(self):
        cfg = OracleConfig()
        assert cfg.digits == 30
        assert cfg.max_terms >= 1000

    @pytest.mark.parametrize("digits", [29, 0, -5, 30.0, True])
    def test_digits_floor(self, digits):
        with pytest.raises(OracleError):
            OracleConfig(digits=digits)

    def test_bad_caps(self):
        with pytest.raises(OracleError):
            OracleConfig(max_terms=10)
        with pytest.raises(OracleError):
            OracleConfig(quad_tol=0.5)

    def test_from_file(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"digits": 32, "max_terms": 20000}')
        cfg = OracleConfig.from_file(path)
        assert cfg.digits == 32
        assert cfg.max_terms == 20000
        path.write_text("[1, 2]")
        with pytest.raises(OracleError):
            OracleConfig.from_file(path)


class TestSeries:
    def test_log_identity(self):
        # sum e^{-n ln 2} / n telescopes to ln 2
        with mp.workdps(40):
            got = hp_li_series(1, -mp.log(2))
            assert abs(got - mp.log(2)) < mpf(10) ** -33

    def test_requires_negative_x(self):
        with pytest.raises(OracleError):
            hp_li_series(2, 0.5)
        with pytest.raises(OracleError):
            hp_li_series(2, 0.0)

    def test_cap_exceeded(self):
        cfg = OracleConfig(max_terms=1000)
        with pytest.raises(OracleError):
            hp_li_series(2, -0.001, cfg)

    def test_more_terms_change_nothing(self):
        # escalated precision drags in far more terms; the tail is dust
        a = hp_li_series(2, -1, OracleConfig(digits=30))
        b = hp_li_series(2, -1, OracleConfig(digits=45))
        assert abs(a - b) < mpf(10) ** -30

    def test_overlap_golden(self, checked):
        rec = next(
            r
            for r in checked
            if r["op"] == "li_eval" and r["s_re"] == 0.5 and r["x"] == -0.75
        )
        got = hp_li_series(0.5, -0.75)
        assert abs(got - mpc(rec["value_re"], rec["value_im"])) < rec["abs_tol"]

    def test_complex_order(self):
        # s built from decimal strings; the reference was computed that way
        with mp.workdps(40):
            got = hp_li_series(mpc(mpf("1.5"), mpf("0.7")), -1)
            ref = mpc(
                "0.418707059435672916922082401349",
                "-0.0316422880383925298925643456827",
            )
            assert abs(got - ref) < mpf(10) ** -28


class TestPairing:
    def test_even_gaussian_is_minus_half(self):
        # exact unit mass needs more digits of 1/sqrt(2 pi) than a double
        with mp.workdps(45):
            c0 = mp.nstr(1 / mp.sqrt(2 * mp.pi), 40)
            got = hp_pairing(0, {"f_mu": 0.0, "f_sigma": 1.0, "f_c0": c0})
            assert abs(got + mpf(1) / 2) < mpf(10) ** -25

    def test_standard_gaussian_weight_one(self):
        with mp.workdps(40):
            c0 = mp.nstr(1 / mp.sqrt(2 * mp.pi), 40)
            got = hp_pairing(1, {"f_mu": 0.0, "f_sigma": 1.0, "f_c0": c0})
            assert abs(got - mpf(PAIR_LI_1_STD)) < mpf(10) ** -24

    def test_shifted_gaussian(self):
        with mp.workdps(40):
            c0 = mp.nstr(1 / mp.sqrt(2 * mp.pi), 40)
            got = hp_pairing(2.5, {"f_mu": -3.0, "f_sigma": 1.0, "f_c0": c0})
            assert abs(got - mpf(PAIR_LI_25_M3)) < mpf(10) ** -24

    def test_rejects_uncovered_orders(self):
        with pytest.raises(OracleError):
            hp_pairing(-0.5, UNIT_GAUSSIAN)

    def test_rejects_malformed_spec(self):
        with pytest.raises(OracleError):
            hp_pairing(1, {"f_mu": 0.0, "f_sigma": 1.0})
        with pytest.raises(OracleError):
            hp_pairing(1, {"f_mu": 0.0, "f_sigma": -1.0, "f_c0": 1.0})

    def test_profile_matches_reference(self):
        # closed form: int_0^inf x^{-1/2} e^{-x^2/2} dx = 2^{-3/4} Gamma(1/4)
        with mp.workdps(40):
            got = hp_profile(0.5, 0.0, {"f_mu": 0.0, "f_sigma": 1.0, "f_c0": 1.0})
            ref = mpf(2) ** (mpf(-3) / 4) * mp.gamma(mpf(1) / 4) / mp.gamma(mpf(1) / 2)
            assert abs(got - ref) < mpf(10) ** -30


class TestEmission:
    def test_reemission_matches_every_checked_record(self, checked, hp30):
        # the secondary acceptance gate: same inputs, values within abs_tol
        assert len(checked) == len(RECORDS) >= 40
        bad = []
        for i, (rec, want, got) in enumerate(zip(RECORDS, checked, hp30)):
            for key in ("op", "s_re", "s_im", "x", "side", "extra", "abs_tol"):
                assert rec.get(key) == want[key], (i, key)
            err = abs(mpc(want["value_re"], want["value_im"]) - got)
            if not err <= want["abs_tol"]:
                bad.append((i, want["op"], float(err)))
        assert not bad, f"records outside tolerance: {bad}"

    def test_precision_escalation_stable(self, hp30, hp40):
        worst = max(abs(a - b) for a, b in zip(hp30, hp40))
        assert worst < mpf(10) ** -25

    def test_emitted_file_shape(self, tmp_path, hp30):
        # cheap ops are enough to pin the writer; values must round to the
        # exact doubles of the high-precision pass
        subset = RECORDS[:12]
        path = tmp_path / "subset.json"
        payload = emit_goldens(path, OracleConfig(), records=subset)
        on_disk = json.loads(path.read_text())
        assert on_disk == payload
        assert on_disk["schema"] == SCHEMA
        keys = [
            "op", "s_re", "s_im", "x", "side", "extra",
            "value_re", "value_im", "abs_tol",
        ]
        for i, rec in enumerate(on_disk["records"]):
            assert list(rec) == keys
            assert rec["value_re"] == float(hp30[i].real)
            assert rec["value_im"] == float(hp30[i].imag)

    def test_unknown_op_rejected(self):
        with pytest.raises(OracleError):
            evaluate_record({"op": "nope", "s_re": 1.0, "s_im": 0.0, "x": 0.0})


class TestCli:
    def test_emit_subset(self, tmp_path, monkeypatch):
        from polylog_oracle import harness

        monkeypatch.setattr(harness, "RECORDS", RECORDS[:3])
        out = tmp_path / "mini.json"
        assert main(["--out", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["schema"] == SCHEMA
        assert len(payload["records"]) == 3

    def test_bad_digits_fails_cleanly(self, tmp_path, capsys):
        out = tmp_path / "never.json"
        assert main(["--out", str(out), "--digits", "29"]) == 1
        assert "digits" in capsys.readouterr().err
        assert not out.exists()

    def test_config_file(self, tmp_path, monkeypatch):
        from polylog_oracle import harness

        monkeypatch.setattr(harness, "RECORDS", RECORDS[:2])
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"digits": 31}')
        out = tmp_path / "mini.json"
        assert main(["--out", str(out), "--config", str(cfg)]) == 0
        assert len(json.loads(out.read_text())["records"]) == 2


class TestIndependence:
    def test_no_primary_module_loaded(self):
        code = (
            "import polylog_oracle, sys;"
            "bad = [m for m in sys.modules"
            " if m == 'polylog' or m.startswith('polylog.')];"
            "sys.exit(1 if bad else 0)"
        )
        proc = subprocess.run([sys.executable, "-c", code], capture_output=True)
        assert proc.returncode == 0, proc.stderr

    def test_no_primary_import_in_source(self):
        src = Path(__file__).resolve().parent.parent / "src" / "polylog_oracle"
        pattern = re.compile(r"\bfrom polylog[.\s]|\bimport polylog\b(?!_oracle)")
        for path in src.glob("*.py"):
            assert not pattern.search(path.read_text()), path.name

import json
import math
from pathlib import Path

import pytest

from polylog.cli import main
from polylog.golden import load_goldens, save_goldens

GOLDEN_PATH = Path(__file__).resolve().parent.parent / "data" / "goldens.json"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEval:
    def test_weight_one_point(self, capsys):
        code, out, _ = run(capsys, ["eval", "--s", "1", "--x", "-0.6931471805599453"])
        assert code == 0
        row = json.loads(out)
        assert abs(row["value_re"] - math.log(2)) < 1e-12
        assert row["regime"] == "integer_limit"

    def test_positive_axis_zeta(self, capsys):
        code, out, _ = run(capsys, ["eval", "--s", "2", "--t", "1", "--positive-axis"])
        assert code == 0
        row = json.loads(out)
        assert abs(row["value_re"] - math.pi**2 / 6) < 1e-12

    def test_side_selection(self, capsys):
        code, out, _ = run(
            capsys, ["eval", "--s", "0.5", "--x", "0.5", "--side", "above"]
        )
        assert code == 0
        row = json.loads(out)
        assert abs(row["value_re"] - (-1.5672951289320978)) < 1e-12
        assert abs(row["value_im"] - 2.5066282746310005) < 1e-12

    def test_complex_order(self, capsys):
        code, out, _ = run(capsys, ["eval", "--s", "1.5+0.7j", "--x", "-1"])
        assert code == 0
        row = json.loads(out)
        assert abs(row["value_re"] - 0.41870705943567292) < 1e-12

    def test_domain_error_exit_two(self, capsys):
        code, _, err = run(capsys, ["eval", "--s", "2", "--x", "7"])
        assert code == 2
        assert "domain error" in err

    def test_parse_error_exit_three(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["eval", "--s", "zzz", "--x", "1"])
        assert info.value.code == 3
        capsys.readouterr()

    def test_positive_axis_marker_needs_t(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["eval", "--s", "2", "--x", "-1", "--positive-axis"])
        assert info.value.code == 3
        capsys.readouterr()


class TestScan:
    def test_grid_shape_and_order(self, capsys):
        code, out, _ = run(
            capsys, ["scan", "--s-grid=0.5,1,1.5", "--x-grid=-2,-1,-0.5"]
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].strip() == "s_re,s_im,x,side,value_re,value_im,regime,err"
        assert len(lines) == 10
        first = lines[1].split(",")
        assert first[0] == "0.5" and first[2] == "-2"
        # grid-major: s varies slowest
        assert lines[4].split(",")[0] == "1"

    def test_regime_boundary_continuity(self, capsys):
        code, out, _ = run(
            capsys,
            ["scan", "--s-grid=0.5", "--x-grid=-1.0000000001,-0.9999999999"],
        )
        assert code == 0
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        assert rows[0][6] != rows[1][6]  # the seam was actually crossed
        assert abs(float(rows[0][4]) - float(rows[1][4])) < 1e-9

    def test_partial_failure_flagged(self, capsys):
        code, out, _ = run(capsys, ["scan", "--s-grid=2", "--x-grid=-1,7"])
        assert code == 0
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        assert rows[0][6] != "error"
        assert rows[1][6] == "error" and rows[1][4] == "nan"

    def test_empty_grid_exit_three(self, capsys):
        code, _, err = run(capsys, ["scan", "--s-grid=1", "--x-grid="])
        assert code == 3
        assert "non-empty" in err

    def test_deterministic_output(self, capsys):
        argv = ["scan", "--s-grid=0.5,2.5", "--x-grid=-2,-0.3,0.4"]
        _, first, _ = run(capsys, argv)
        _, second, _ = run(capsys, argv)
        assert first == second

    def test_threaded_matches_serial(self, capsys, monkeypatch):
        argv = ["scan", "--s-grid=0.5,1,2", "--x-grid=-2,-1,-0.5,0.3"]
        _, serial, _ = run(capsys, argv)
        monkeypatch.setenv("POLYLOG_THREADS", "4")
        _, threaded, _ = run(capsys, argv)
        assert serial == threaded

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "scan.csv"
        code, out, _ = run(
            capsys, ["scan", "--s-grid=1", "--x-grid=-1", "--out", str(target)]
        )
        assert code == 0
        assert out == ""
        text = target.read_text()
        assert text.startswith("s_re,s_im,x,side")


class TestVerify:
    def test_kernels_suite_passes(self, capsys):
        code, out, _ = run(capsys, ["verify", "kernels"])
        assert code == 0
        lines = out.strip().splitlines()
        summary = json.loads(lines[-1])
        assert summary["failures"] == 0
        assert all(json.loads(line)["passed"] for line in lines[:-1])

    def test_unknown_suite_exit_three(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "everything"])
        assert info.value.code == 3
        capsys.readouterr()


class TestGolden:
    def test_compare_checked_in(self, capsys):
        code, out, _ = run(capsys, ["golden", "compare", "--path", str(GOLDEN_PATH)])
        assert code == 0
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary["records"] >= 40
        assert summary["failures"] == 0

    def test_tampered_record_exit_one(self, capsys, tmp_path):
        records = load_goldens(GOLDEN_PATH)
        doc_path = tmp_path / "tampered.json"
        save_goldens(records, doc_path)
        doc = json.loads(doc_path.read_text())
        doc["records"][0]["value_re"] += 1e-3
        doc_path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, ["golden", "compare", "--path", str(doc_path)])
        assert code == 1
        lines = out.strip().splitlines()
        assert json.loads(lines[-1])["failures"] == 1
        diff = json.loads(lines[0])
        assert diff["index"] == 0 and diff["err"] > 1e-4

    def test_missing_file_exit_three(self, capsys):
        code, _, err = run(capsys, ["golden", "compare", "--path", "no/such/file"])
        assert code == 3
        assert "no such file" in err

    def test_emit_round_trip(self, capsys, tmp_path):
        out_path = tmp_path / "regen.json"
        code, _, _ = run(
            capsys,
            ["golden", "emit", "--path", str(GOLDEN_PATH), "--out", str(out_path)],
        )
        assert code == 0
        code, out, _ = run(capsys, ["golden", "compare", "--path", str(out_path)])
        assert code == 0
        assert json.loads(out.strip().splitlines()[-1])["failures"] == 0

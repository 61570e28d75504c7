from __future__ import annotations

import json

import pytest

from phicong.cli import main
from phicong.series import QSeries
from phicong.verify import ClaimId, Failure, VerificationReport


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestGamma:
    def test_table_for_102(self, capsys):
        code, out = run_cli(capsys, "gamma", "--p", "3", "--m", "102", "--alpha-max", "9")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "alpha,gamma,f_alpha"
        gammas = [int(line.split(",")[1]) for line in lines[1:]]
        assert gammas == [0, 0, 2, 2, 4, 5, 7, 9, 11, 13]
        assert lines[1] == "0,0,102"
        assert lines[-1] == "9,13,1"

    def test_rejects_p13(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gamma", "--p", "13", "--m", "1", "--alpha-max", "2"])
        assert exc.value.code == 2


class TestExpand:
    def test_json_round_trips_byte_identically(self, capsys):
        code, out = run_cli(capsys, "expand", "--p", "3", "--m", "2", "--terms", "8")
        assert code == 0
        payload = json.loads(out)
        assert json.dumps(payload, indent=2, sort_keys=True) + "\n" == out
        series = QSeries.from_dict(payload)
        assert series.prec == 8
        assert series.coefficient(2) == 1
        assert series.coefficient(3) == 24

    def test_prec_override_below_budget_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["expand", "--p", "3", "--m", "1", "--terms", "10", "--prec", "5"])
        assert exc.value.code == 2

    def test_prec_override_above_budget_accepted(self, capsys):
        code, out = run_cli(
            capsys, "expand", "--p", "3", "--m", "1", "--terms", "6", "--prec", "30"
        )
        assert code == 0
        assert QSeries.from_dict(json.loads(out)).prec == 6


class TestUp:
    def test_single_application(self, capsys):
        code, out = run_cli(
            capsys, "up", "--p", "3", "--m", "1", "--alpha", "1", "--terms", "4"
        )
        assert code == 0
        series = QSeries.from_dict(json.loads(out))
        assert series.coefficient(1) == 90
        assert series.prec == 4

    def test_alpha_zero_returns_expansion(self, capsys):
        code, out = run_cli(
            capsys, "up", "--p", "5", "--m", "2", "--alpha", "0", "--terms", "5"
        )
        assert code == 0
        assert QSeries.from_dict(json.loads(out)).coefficient(2) == 1


class TestDecompose:
    def test_base_example(self, capsys):
        code, out = run_cli(capsys, "decompose", "--p", "3", "--m", "1", "--alpha", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["poly"]["coeffs"] == [[1, "90"], [2, "8748"], [3, "177147"]]
        assert payload["val_profile"] == [[1, 2], [2, 7], [3, 11]]

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "poly.json"
        code, out = run_cli(
            capsys,
            "decompose", "--p", "3", "--m", "2", "--alpha", "1",
            "--output", str(target),
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["poly"]["p"] == 3

    def test_cache_dir_persists_powers(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("PHICONG_CACHE_DIR", str(tmp_path))
        code, first = run_cli(capsys, "decompose", "--p", "3", "--m", "1", "--alpha", "1")
        assert code == 0
        files = list(tmp_path.glob("phi_powers_p3_prec*.json"))
        assert files
        code, second = run_cli(capsys, "decompose", "--p", "3", "--m", "1", "--alpha", "1")
        assert code == 0 and first == second


class TestVerify:
    def test_small_run_exits_zero(self, capsys):
        code, out = run_cli(
            capsys,
            "verify", "lemma-poly", "--p", "3", "--m-max", "4", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["claim"] == "LEMMA_POLY" and payload["pass"] is True

    def test_text_format_mentions_result(self, capsys):
        code, out = run_cli(
            capsys, "verify", "binarygamma", "--p", "3", "--m-max", "50", "--alpha-max", "3"
        )
        assert code == 0
        assert "result:   PASS" in out

    def test_theorem1_sweep_exits_zero(self, capsys):
        code, _ = run_cli(
            capsys, "verify", "theorem1", "--p", "5", "--m-max", "10", "--n-max", "500"
        )
        assert code == 0

    def test_failing_report_exits_one(self, capsys, monkeypatch):
        failing = VerificationReport(
            ClaimId.NEWTON, {"p": 3}, 1, [Failure({"m": 1}, 0, 2)], 0.0
        )
        monkeypatch.setattr("phicong.cli.verify_newton", lambda *a, **k: failing)
        code, out = run_cli(capsys, "verify", "newton", "--p", "3")
        assert code == 1
        assert "FAIL" in out

    def test_unknown_driver_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "theorem9"])
        assert exc.value.code == 2


class TestExplore:
    def test_small_exploration(self, capsys):
        code, out = run_cli(
            capsys,
            "explore", "p13", "--prime-max", "60", "--m-max", "3", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        claims = [r["claim"] for r in payload["reports"]]
        assert claims == ["P13_TAU", "P13_RESIDUE"]
        assert all(r["pass"] for r in payload["reports"])

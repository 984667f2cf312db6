"""End-to-end tests for the command line interface."""

import json
from fractions import Fraction as F

import pytest

from groshevlab.cli import (
    ConfigError,
    main,
    parse_psi,
    parse_schedule,
    parse_target,
)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsers:
    def test_psi_power(self):
        psi = parse_psi("power:1/4:1")
        assert psi(8) == F(1, 32)

    def test_psi_capped(self):
        psi = parse_psi("capped:1/2:1")
        assert psi.is_capped and psi(4) == F(1, 8)

    def test_psi_table(self):
        psi = parse_psi("table:1=1/8,2=1/16")
        assert psi(1) == F(1, 8) and psi(3) == 0

    def test_psi_table_rejects_half(self):
        with pytest.raises(ConfigError):
            parse_psi("table:1=1/2")

    def test_psi_sparse(self):
        psi = parse_psi("sparse:1/4:2,4,8")
        assert psi(4) == F(1, 4) and psi(3) == 0

    def test_psi_unknown_kind(self):
        with pytest.raises(ConfigError):
            parse_psi("exp:1:2")

    def test_target_rational(self):
        assert parse_target("2/7").y1 == F(2, 7)

    def test_target_pair(self):
        t = parse_target("pair:1:3")
        assert t.kind == "fixed-pair" and (t.a[0], t.b) == (1, 3)

    def test_target_surrogate(self):
        t = parse_target("surrogate:sqrt2-1:800")
        assert t.y1 == F(408, 985)

    def test_target_invalid(self):
        with pytest.raises(ConfigError):
            parse_target("surrogate:pi:100")
        with pytest.raises(ConfigError):
            parse_target("1/0")

    def test_schedule(self):
        assert parse_schedule("10-20,15-25") == [(10, 20), (15, 25)]
        with pytest.raises(ConfigError):
            parse_schedule("10:20")


class TestExitCodes:
    def test_bad_config_file(self, capsys, tmp_path):
        p = tmp_path / "cfg.json"
        p.write_text("{not json")
        code, _, err = run(["measure", "--config", str(p)], capsys)
        assert code == 2
        assert "error" in json.loads(err)

    def test_config_must_be_object(self, capsys, tmp_path):
        p = tmp_path / "cfg.json"
        p.write_text("[1, 2]")
        code, _, _ = run(["measure", "--config", str(p)], capsys)
        assert code == 2

    def test_psi_at_one_half_rejected(self, capsys):
        code, _, err = run(["qia", "--psi", "table:1=1/2"], capsys)
        assert code == 2
        assert "1/2" in json.loads(err)["error"]

    def test_unknown_variant(self, capsys):
        code, _, _ = run(["measure", "--variant", "bogus", "--d", "3"], capsys)
        assert code == 2

    def test_unknown_format(self, capsys):
        # argparse rejects the choice itself and exits with status 2
        with pytest.raises(SystemExit) as exc:
            main(["gallagher", "--format", "xml"])
        assert exc.value.code == 2

    def test_tilde_qia_needs_capped_psi(self, capsys):
        code, _, _ = run(
            ["qia", "--psi", "power:1/4:1", "--variant", "tilde", "--Q", "2"],
            capsys)
        assert code == 2


class TestMeasureCommand:
    def test_coprime_hand_value_csv(self, capsys):
        code, out, _ = run(
            ["measure", "--variant", "coprime", "--d", "12",
             "--delta", "1/10", "--target", "0"], capsys)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("d,variant,delta,target,closed_form,oracle")
        # (2/10) * (1 - 1/2) * (1 - 1/3) = 1/15
        assert "1/15" in lines[1] and lines[1].endswith("True")

    def test_tilde_sweep_matches(self, capsys):
        code, out, _ = run(
            ["measure", "--dmax", "25", "--target", "1/3"], capsys)
        assert code == 0
        assert out.count("True") == 25 and "False" not in out

    def test_json_document(self, capsys, tmp_path):
        out_path = tmp_path / "measure.json"
        code, _, _ = run(
            ["measure", "--d", "12", "--format", "json",
             "--out", str(out_path)], capsys)
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["command"] == "measure"
        assert doc["summary"]["failures"] == 0
        assert doc["rows"][0]["d"] == 12


class TestOtherCommands:
    def test_dirichlet_pairs(self, capsys):
        code, out, _ = run(
            ["dirichlet-pairs", "--target", "1/3", "--dmax", "8"], capsys)
        assert code == 0
        rows = out.strip().split("\n")[1:]
        assert len(rows) == 8
        assert rows[3].startswith("4,1,3,")  # d=4: pair (1, 3)

    def test_gallagher_hand_values(self, capsys):
        code, out, _ = run(["gallagher"], capsys)
        assert code == 0
        rows = out.strip().split("\n")[1:]
        assert rows[0].split(",")[3] == "1/1"
        assert rows[1].split(",")[3] == "4/1"

    def test_disjointness_single_tuple(self, capsys):
        code, out, _ = run(
            ["disjointness", "--d", "6", "--e", "3", "--q", "73",
             "--r", "72", "--target", "1/7"], capsys)
        assert code == 0
        assert "0/1" in out

    def test_qia_hand_value(self, capsys):
        code, out, _ = run(
            ["qia", "--psi", "power:1/4:1", "--variant", "coprime",
             "--target", "0", "--Q", "1"], capsys)
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        assert row[2] == "4/1" and row[5] == "4/5"

    def test_dichotomy_runs_and_is_reproducible(self, capsys, tmp_path):
        argv = ["dichotomy", "--psi", "power:1/100:1", "--target", "1/3",
                "--schedule", "10-20,15-25", "--samples", "1000",
                "--seed", "7", "--format", "json"]
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        assert run(argv + ["--out", str(a)], capsys)[0] == 0
        assert run(argv + ["--out", str(b)], capsys)[0] == 0
        assert a.read_bytes() == b.read_bytes()
        doc = json.loads(a.read_text())
        assert doc["summary"]["seed"] == 7
        assert len(doc["rows"]) == 2

    def test_config_merge(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"variant": "coprime", "d": 12,
                                   "delta": "1/10", "target": "0"}))
        code, out, _ = run(["measure", "--config", str(cfg)], capsys)
        assert code == 0
        assert "1/15" in out


class TestVerifySuite:
    def test_quick_passes(self, capsys):
        code, out, _ = run(["verify-suite", "--quick"], capsys)
        assert code == 0
        assert "FAIL" not in out
        assert "PASS measure-formula" in out
        assert "PASS qia-hand-value" in out

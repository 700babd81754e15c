"""
Tests for the command-line entry point.
"""
import io
import json

import pytest

from affine_delta.cli.main import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, run
from affine_delta.verification import checks


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestDelta:
    """Tests for the delta command."""

    def test_sl2(self):
        code, out, _ = invoke("delta", "--type", "A1", "--level", "3", "--weight", "1", "--coweight", "1")
        assert code == EXIT_OK
        assert out.startswith("[2]")

    def test_oracle_equal(self):
        code, out, _ = invoke(
            "delta", "--type", "a2", "--level", "2", "--weight", "1,0", "--coweight", "1", "--oracle"
        )
        assert code == EXIT_OK
        assert out.splitlines() == ["[1,1]  (l1 + l2)", "oracle: [1,1]", "EQUAL"]

    def test_json(self):
        code, out, _ = invoke(
            "delta", "--type", "E7", "--level", "1", "--weight", "0,0,0,0,0,0,0",
            "--coweight", "7", "--oracle", "--format", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["weight"] == [0, 0, 0, 0, 0, 0, 1]
        assert payload["verdict"] == "EQUAL"

    def test_coweight_vector(self):
        code, out, _ = invoke(
            "delta", "--type", "B3", "--level", "2", "--weight", "0,1,0", "--coweight-vector", "0,0,1"
        )
        assert code == EXIT_OK
        assert out.startswith("[0,1,0]")

    def test_not_admissible(self):
        code, out, err = invoke("delta", "--type", "A2", "--level", "1", "--weight", "1,1", "--coweight", "1")
        assert code == EXIT_INVALID
        assert out == ""
        assert "error" in err

    def test_not_miniscule(self):
        code, _, err = invoke("delta", "--type", "B3", "--level", "1", "--weight", "0,0,0", "--coweight", "2")
        assert code == EXIT_INVALID
        assert "miniscule" in err

    def test_negative_weight(self):
        code, _, _ = invoke("delta", "--type", "A2", "--level", "1", "--weight=-1,0", "--coweight", "1")
        assert code == EXIT_INVALID


class TestOtherCommands:
    """Tests for info, reflect, orbits, table and verify."""

    def test_info(self):
        code, out, _ = invoke("info", "--type", "D6")
        assert code == EXIT_OK
        assert "miniscule coweights: [1,5,6]" in out
        assert "|P^v/Q^v|: 4" in out
        assert "comarks: [1,2,2,2,1,1]" in out

    def test_info_json(self):
        code, out, _ = invoke("info", "--type", "E7", "--format", "json")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["fundamental_group_order"] == 2
        assert data["sigma_images"]["7"][6] == [0, 0, 0, 0, 0, 0, -1]

    def test_reflect(self):
        code, out, _ = invoke("reflect", "--type", "A3", "--word", "1,2,3", "--weight", "0,1,0")
        assert code == EXIT_OK
        assert out.startswith("[-1,0,1]")

    def test_reflect_negative_weight(self):
        code, out, _ = invoke("reflect", "--type", "A2", "--word", "1", "--weight=-1,2")
        assert code == EXIT_OK
        assert out.startswith("[1,1]")

    def test_orbits_json(self):
        code, out, _ = invoke("orbits", "--type", "E6", "--level", "1", "--format", "json")
        assert code == EXIT_OK
        assert len(json.loads(out)["orbits"]) == 1

    def test_table_json(self):
        code, out, _ = invoke("table", "--type", "A2", "--level", "1", "--format", "json")
        assert code == EXIT_OK
        maps = json.loads(out)
        assert [m["coweight"] for m in maps] == [1, 2]
        assert all(len(m["map"]) == 3 for m in maps)
        assert json.dumps(json.loads(out), separators=(",", ":")) == out.strip()

    def test_verify_trivial(self):
        code, out, _ = invoke("verify", "--type", "G2")
        assert code == EXIT_OK
        assert "G2: PASS (no miniscule coweights, 0 checks run)" in out

    def test_verify_c4(self):
        code, out, _ = invoke("verify", "--type", "C4", "--level", "3")
        assert code == EXIT_OK
        assert out.strip().endswith("overall: PASS")

    def test_verify_reports_mismatch(self, monkeypatch):
        monkeypatch.setattr(checks, "expected_permutation", lambda lie_type, i: tuple(range(lie_type.rank + 1)))
        code, out, _ = invoke("verify", "--type", "A2", "--level", "1")
        assert code == EXIT_MISMATCH
        assert "FAIL permutation[1]" in out


class TestInvalidInput:
    """Tests for flag validation."""

    @pytest.mark.parametrize("argv", [
        ["info", "--type", "D3"],
        ["info", "--type", "Q7"],
        ["info"],
        ["table", "--type", "A2", "--level", "0"],
        ["table", "--type", "A2"],
        ["reflect", "--type", "A2", "--word", "1,x", "--weight", "0,1"],
        ["reflect", "--type", "A2", "--word", "3", "--weight", "0,1"],
        ["delta", "--type", "A2", "--level", "1", "--weight", "0,0,0", "--coweight", "1"],
        ["verify", "--type", "A2", "--level", "1", "--workers", "0"],
        ["verify", "--workers", "-3"],
        ["reflect", "--type", "A2", "--word", "2", "--weight=99999999999999999999999,0"],
        ["reflect", "--type", "A2", "--word", "", "--weight=99999999999999999999999,0"],
        ["delta", "--type", "A2", "--level", "1", "--weight=0,0", "--coweight-vector=99999999999999999999999,0"],
        ["bogus"],
        [],
    ])
    def test_exit_two(self, argv):
        code, out, err = invoke(*argv)
        assert code == EXIT_INVALID
        assert out == ""
        assert err.startswith("error:")

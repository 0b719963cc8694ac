import json

import pytest

from cyclocm.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out.strip()
    return code, (json.loads(out) if out.startswith("{") else out)


def test_special_count_exact_output(capsys):
    assert run(["special-count", "--q", "7"]) == 0
    assert capsys.readouterr().out.strip() == '{"q":7,"count":36}'


def test_c_constant_exact_output(capsys):
    assert run(["c-constant", "--dlist", "1", "--d", "4"]) == 0
    assert capsys.readouterr().out.strip() == '{"c":"1/2"}'


def test_thm3_exit_codes(capsys):
    code, out = call(capsys, "thm3", "--q", "13", "--d", "2")
    assert code == 1 and out["exhausted"] and not out["found"]
    code, out = call(capsys, "thm3", "--q", "17", "--d", "2")
    assert code == 0 and out["witness"]["omega"] == 10


def test_invalid_input(capsys):
    assert run(["bogus"]) == 2
    assert run(["prop74", "--p", "7"]) == 2
    assert run(["ctype", "--q", "7", "--d", "4", "--a", "1,1,1,1"]) == 2
    assert run(["field-info", "--q", "12"]) == 2
    assert run(["table1", "--qmax", "13"]) == 2
    assert run([]) == 2


def test_report_schema(capsys):
    for argv in (["find-xi", "--q", "7", "--polys", "0,1", "1,1", "--dlist", "1,2"],
                 ["find-complete", "--q", "37", "--h", "(0,1)(2); h=3,4", "--c", "1"],
                 ["realize-cosets", "--q", "13", "--d", "2", "--c", "0,1", "--sigma", "0,1", "1,0"],
                 ["thm3", "--q", "17", "--d", "2"]):
        code, out = call(capsys, *argv)
        assert {"found", "candidates_tested", "exhausted"} <= set(out)
        assert out["found"] == ("witness" in out) == (code == 0)


def test_map_commands(capsys):
    code, out = call(capsys, "ctype", "--q", "7", "--d", "2", "--a", "3,3", "--check")
    assert code == 0 and out["cycle_type"] == {"1": 1, "6": 1} and out["agree"]
    code, out = call(capsys, "ctype", "--q", "7", "--d", "2", "--a", "1,5")
    assert code == 1 and out["permutation"] is False
    code, out = call(capsys, "gamma-h", "--q", "37", "--psi", "(0,1)(2)", "--h", "3,4")
    assert out["gamma"] == {"1": 1, "8": 3, "3": 4}
    for cmd in ("construct-h", "construct-fomega"):
        code, out = call(capsys, cmd, "--q", "37", "--h", "(0,1)(2); h=3,4")
        assert code == 0 and out["agree"]


def test_charsum_commands(capsys):
    code, out = call(capsys, "weil", "--q", "7", "--polys", "0,1", "1,1", "--chars", "3,3")
    assert code == 0 and out["sum"][0] == pytest.approx(-1)
    code, out = call(capsys, "weil", "--q", "7", "--polys", "0,1", "1,1", "--chars", "0,0")
    assert out["principal_value"] == 5
    code, out = call(capsys, "count", "--q", "7", "--polys", "0,1", "--elist", "6")
    assert out["count"] == 2
    code, out = call(capsys, "count-gen", "--q", "7", "--polys", "0,1", "--dlist", "2",
                     "--jlist", "0", "--d", "2")
    assert out["count"] == out["via_characters"] == 2
    code, out = call(capsys, "charsum-verify", "--q", "13")
    assert code == 0 and out["ok"]


def test_field_info_extension(capsys):
    code, out = call(capsys, "field-info", "--q", "5^2", "--modulus", "2,4,1", "--x", "4w+1")
    assert out["omega_text"] == "w" and out["x"] == 21 and out["order"] == 24


def test_special_count_modes(capsys, tmp_path):
    code, out = call(capsys, "special-count", "--q", "7", "--mode", "first")
    assert out["cycle"] == "(0,1,2,4,3,6,5)"
    code, out = call(capsys, "special-count", "--q", "7", "--mode", "all")
    assert "(0,6,4,1,3,5,2)" in out["cycles"] and len(out["cycles"]) == 36
    code, out = call(capsys, "special-count", "--q", "9", "--mode", "first")
    assert code == 1
    ck = str(tmp_path / "ck")
    code, out = call(capsys, "special-count", "--q", "11", "--checkpoint", ck, "--report")
    assert out["count"] == 760 and out["exhausted"]


def test_table1_deterministic(capsys):
    outs = []
    for workers in ("1", "2"):
        assert run(["table1", "--workers", workers]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    rows = json.loads(outs[0])["rows"]
    assert [r["count"] for r in rows if r["q"] <= 11] == [2, 4, 36, 0, 760]


def test_prop74_and_text_mode(capsys):
    code, out = call(capsys, "prop74", "--p", "5", "--text")
    assert code == 0 and "cycle: (0,1,2,3,4)" in out

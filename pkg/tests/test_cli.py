import json

import pytest

from argsem import extensions, parse_apx, parse_program
from argsem.cli import run
from argsem.transfer import derived_atoms

AF3_APX = b"arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\natt(c,a).\n"
CHAIN_LP = b"a.\nb :- not a.\nc :- not b.\nd :- not c.\n"
HIDDEN_LP = b"a :- not b.\nb :- c, not d.\nc.\n"


def ok(argv, stdin=b""):
    code, out, err = run(argv, stdin)
    assert code == 0, err
    return out


def test_af_solve_stable_on_three_cycle():
    assert json.loads(ok(["af-solve", "--sem", "stable"], AF3_APX)) == {"semantics": "stable", "extensions": []}


def test_af_solve_canonical_bytes():
    apx = b"arg(r1).arg(r2).arg(r3).arg(r4).\natt(r1,r2).att(r2,r3).att(r3,r4).\n"
    assert ok(["af-solve", "--sem", "preferred"], apx) == '{"semantics":"preferred","extensions":[["r1","r3"]]}\n'


def test_lp_transfer_chain():
    out = json.loads(ok(["lp-transfer", "--sem", "preferred"], CHAIN_LP))
    assert out["outcomes"] == [{"rule_in": ["r1", "r3"], "in_as": ["a", "c"], "consistent": True, "derived": ["a", "c"]}]
    assert out["derived"] == [["a", "c"]]


def test_lp_transfer_repair():
    out = json.loads(ok(["lp-transfer", "--sem", "preferred", "--repair"], HIDDEN_LP))
    assert out["derived"] == [["a", "c"], ["b", "c"]]


def test_lp_transfer_inconsistent():
    out = json.loads(ok(["lp-transfer", "--sem", "preferred"], HIDDEN_LP))
    assert out["outcomes"][0]["consistent"] is False and out["derived"] == []


def test_lp_stable():
    assert json.loads(ok(["lp-stable"], CHAIN_LP)) == {"stable_models": [["a", "c"]]}


def test_to_lp_and_back():
    apx = b"arg(a).arg(b).arg(c).arg(d).arg(e).\natt(a,b).att(c,b).att(c,d).att(d,c).att(d,e).att(e,e).\n"
    lp = ok(["to-lp"], apx)
    assert lp == "a.\nb :- not a, not c.\nc :- not d.\nd :- not c.\ne :- not d, not e.\n"
    back = json.loads(ok(["from-lp"], lp.encode()))
    assert back["valid"] and back["framework"]["args"] == ["a", "b", "c", "d", "e"]
    assert parse_apx(ok(["from-lp", "--output", "text"], lp.encode())) == parse_apx(apx.decode())


def test_to_lp_sanitizes_with_mapping_comments():
    out = ok(["to-lp"], b"arg(1).arg(2).\natt(1,2).\n")
    assert out.startswith("% arg_1 = 1\n% arg_2 = 2\n")
    assert "arg_2 :- not arg_1." in out


def test_to_canonical():
    assert ok(["to-canonical"], AF3_APX) == "a :- not b.\nb :- not c.\nc :- not a.\n"


def test_from_lp_invalid():
    out = json.loads(ok(["from-lp"], b"a :- not b.\n"))
    assert out == {"valid": False, "framework": None, "violations": [{"code": "no-defining-rule", "location": "b"}]}


def test_roundtrip_all():
    out = json.loads(ok(["roundtrip"], AF3_APX))
    assert out["equal"] and len(out["reports"]) == 8


def test_hypo():
    out = json.loads(ok(["hypo", "--sem", "preferred"], HIDDEN_LP))
    assert out["characterizations"] == [{"extension": 0, "hypothesis": ["not a", "not d"], "atoms": ["b", "c"]}]
    out = json.loads(ok(["hypo", "--sem", "preferred", "--no-maximal-only"], HIDDEN_LP))
    assert sorted(c["atoms"] for c in out["characterizations"]) == [["b", "c"], ["b", "c"], ["c"], ["c"]]
    assert len(out["arguments"]) == 5


def test_hypo_cap_exit_code(monkeypatch):
    code, out, err = run(["hypo", "--cap", "2"], HIDDEN_LP)
    assert code == 2 and out == "" and "cap" in err
    monkeypatch.setenv("ARGSEM_CAP", "3")
    assert run(["hypo"], HIDDEN_LP)[0] == 2
    assert run(["af-solve", "--sem", "grounded"], b"arg(a).arg(b).arg(c).arg(d).\n")[0] == 2


def test_oracle_check_empty_and_small():
    out = json.loads(ok(["oracle-check", "--count", "0"]))
    assert out["ok"] and out["checks"] == {}
    out = json.loads(ok(["oracle-check", "--seed", "3", "--count", "5", "--max-size", "4"]))
    assert out["ok"]


def test_oracle_check_rejects_large_instances():
    assert run(["oracle-check", "--max-size", "9"])[0] == 1


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["af-solve", "--sem", "ideal"], AF3_APX),
        (["af-solve"], AF3_APX),
        (["af-solve", "--sem", "grounded"], b"arg(a).\natt(a,b).\n"),
        (["lp-transfer"], b"a :- .\n"),
        (["lp-stable", "--repair"], CHAIN_LP),
        (["frobnicate"], b""),
        (["af-solve", "--sem", "grounded", "/nonexistent/file.apx"], b""),
    ],
)
def test_input_errors_exit_1(argv, stdin):
    code, out, err = run(argv, stdin)
    assert code == 1 and out == "" and err.startswith("argsem:")


def test_file_input(tmp_path):
    path = tmp_path / "af.apx"
    path.write_bytes(AF3_APX)
    assert json.loads(ok(["af-solve", "--sem", "cf2", str(path)]))["extensions"] == [["a"], ["b"], ["c"]]


def test_text_output():
    assert ok(["af-solve", "--sem", "stable", "--output", "text"], AF3_APX) == "stable extensions:\n(none)\n"
    text = ok(["lp-transfer", "--output", "text"], HIDDEN_LP)
    assert "inconsistent" in text


def test_cli_is_a_veneer_over_the_library():
    af = parse_apx(AF3_APX.decode())
    for sem in ("grounded", "preferred", "stable", "complete", "cf1", "cf2", "ad1", "ad2"):
        out = json.loads(ok(["af-solve", "--sem", sem], AF3_APX))
        assert out["extensions"] == [sorted(e) for e in extensions(af, sem)]
        lp = json.loads(ok(["lp-transfer", "--sem", sem], CHAIN_LP))
        assert lp["outcomes"] == [o.to_json() for o in derived_atoms(parse_program(CHAIN_LP.decode()), sem)]

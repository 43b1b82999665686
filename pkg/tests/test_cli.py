import io
import json

import pytest

from cbcalc import cli
from cbcalc.grouprank import COND
from cbcalc.modlen import OrdinalInterval
from cbcalc.ordinal import parse_ordinal


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_eval_file(tmp_path):
    f = tmp_path / "fm.cb"
    f.write_text("group FM(4)\n", encoding="utf-8")
    code, out, _ = run("eval", str(f))
    assert code == 0 and out.splitlines()[0] == "w^4*3"


def test_eval_trace_and_unicode():
    code, out, _ = run("eval", "-e", "wreath(base=Z^2, d=3)", "--trace", "--unicode")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "ω^3*2"
    assert lines[1].split()[0] == "R3" and lines[-1].split()[0] == "CBLP"


def test_eval_module():
    code, out, _ = run("eval", "-e", "module series(critical(1), critical(3))")
    assert code == 0 and out.splitlines()[0] == "length: w^3 + w"


def test_eval_json_round_trip():
    code, out, _ = run("eval", "-e", "Gn(2, 3)", "--format", "json")
    data = json.loads(out)
    assert code == 0 and cli.value_from_json(data["value"]) == parse_ordinal("w*3")
    assert [s["rule"] for s in data["trace"]][-1] == "CBLP"


@pytest.mark.parametrize("value", [parse_ordinal("w^w + 3"), COND, OrdinalInterval(parse_ordinal("w"), parse_ordinal("w*2"), True)])
def test_value_json(value):
    assert cli.value_from_json(json.loads(json.dumps(cli.value_to_json(value)))) == value


def test_external():
    assert run("eval", "-e", "ZWrZ", "--external")[:2] == (0, "COND\n")
    assert run("eval", "-e", "H(2)", "--external")[:2] == (0, "w^2\n")
    assert run("eval", "-e", "FM(3)", "--external")[0] == 3


def test_fallback_gives_interval():
    code, out, _ = run("eval", "-e", "Gamma(3)", "--fallback")
    assert code == 0 and out.startswith("[")


def test_ordinal():
    assert run("ordinal", "w+1 ⊕ w*2+3")[1] == "w*3 + 4\n"
    assert run("ordinal", "w+1", "(+)", "w*2+3")[1] == "w*3 + 4\n"
    assert run("ordinal", "reduce", "w^2 + 3")[1] == "w, 3\n"
    assert run("ordinal", "deg", "w^3*2")[1] == "3\n"
    assert run("ordinal", "w +")[0] == 2


def test_gamma():
    code, out, _ = run("gamma", "--module", "classical", "--ray", "0,1")
    assert code == 0 and out.startswith("InGamma") and "ord_{1+u}" in out
    code, out, _ = run("gamma", "--module", "classical", "--ray", "-1,-1")
    assert code == 0 and "-top_deg" in out
    code, out, _ = run("gamma", "--module", "classical", "--ray", "1,1", "--window", "6")
    assert code == 0 and out.startswith("NotInGamma")
    code, out, _ = run("gamma", "--module", "tensor(classical, classical)", "--ray", "1,0,0,1")
    assert code == 3 and out.startswith("Inconclusive")


def test_gamma_json_round_trip():
    from cbcalc.sigma import verdict_from_json, gamma_verdict, ClassicalRing

    _, out, _ = run("gamma", "--module", "classical", "--ray", "2,5", "--format", "json")
    data = json.loads(out)
    assert verdict_from_json(data) == gamma_verdict(ClassicalRing(), (2, 5))


def test_gamma_usage_errors():
    assert run("gamma", "--module", "classical", "--ray", "1,2,3")[0] == 2
    assert run("gamma", "--module", "classical")[0] == 2
    assert run("gamma", "--module", "bogus", "--ray", "1,0")[0] == 2
    assert run("gamma", "--module", "classical", "--ray", "1,0", "--window", "0")[0] == 2


def test_fp_check():
    assert run("fp-check", "--module", "A(3)")[:2][0] == 0
    assert run("fp-check", "--module", "A(3)")[1].startswith("Yes")
    assert run("fp-check", "--module", "groupring(1)")[1].startswith("No")
    assert run("fp-check", "--module", "tensor(classical, groupring(1))")[0] == 3


def test_catalog():
    code, out, _ = run("catalog", "list")
    assert code == 0 and "Gn(d, n)" in out.splitlines()
    code, out, _ = run("catalog", "check", "Gn(d=2, n=5)")
    assert code == 0 and out.startswith("Gn(d=2, n=5): PASS")
    assert run("catalog", "check", "H", "d=3")[0] == 0
    assert run("catalog", "check", "Lambda", "3")[0] == 0
    assert run("catalog", "check", "nope")[0] == 2
    assert run("catalog", "check")[0] == 2


def test_oracle():
    code, out, _ = run("oracle", "finite-action", "--samples", "10", "--seed", "2")
    assert code == 0 and out.startswith("finite-action: PASS")
    assert run("oracle", "nope")[0] == 2


def test_parse_errors_go_to_stderr():
    code, out, err = run("eval", "-e", "group wreath(base=Z^2)")
    assert code == 2 and out == "" and "line 1, column 7" in err


def test_missing_file():
    assert run("eval", "/nonexistent/file.cb")[0] == 2


def test_output_is_deterministic():
    args = ("gamma", "--module", "classical", "--sweep", "36", "--format", "json")
    assert run(*args)[1] == run(*args)[1]
    args = ("oracle", "ext-bounds", "--samples", "30", "--seed", "5", "--format", "json")
    assert run(*args)[1] == run(*args)[1]

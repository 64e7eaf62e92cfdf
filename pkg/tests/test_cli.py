import io
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from nablasym import combinat as cb
from nablasym.cli import main
from nablasym.exactalg import q, t
from nablasym.expr import ParseError, eval_expr, from_json_obj, parse, to_expr, Apply, BinOp, Pow
from nablasym.hallops import c_apply
from nablasym.macdonald import nabla
from nablasym.symfun import e, m, s, to_json_obj


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_shapes():
    assert parse("nabla(e[2])") == Apply("nabla", None, parse("e[2]"))
    node = parse("(-1)^2 * nabla(m[[2,2,1]])")
    assert isinstance(node, BinOp) and isinstance(node.left, Pow) and isinstance(node.right, Apply)
    assert parse("C[3](e[2])") == Apply("C", 3, parse("e[2]"))


def test_eval():
    assert eval_expr("(-1)^2 * nabla(m[[2,2,1]])") == nabla(m((2, 2, 1)))
    assert eval_expr("C[3](e[2])") == c_apply(3, e(2))
    assert eval_expr("G(2,4) - e[4]") == e(4) * 0
    assert eval_expr("(q+t)*s[[2,1]] - q*s[[2,1]]") == s((2, 1)) * t
    assert eval_expr("2 + 3*4 - 1") == eval_expr("13")


@pytest.mark.parametrize("bad", ["e[2", "x[1]", "e[2] +", "m[[2,a]]", "3 $ 4", "e[2]/e[1]"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, ValueError)):
        eval_expr(bad)


EXPRS = ["nabla(e[3])", "C[2](h[2]) - q*e[4]", "Cvee[1](p[[2,1]])", "Cstar[2](s[[2,2]])/(1-q)",
         "omega(m[[3,1]]) + t^2*e[1]^2"]


@pytest.mark.parametrize("src", EXPRS)
@pytest.mark.parametrize("basis", ["s", "m", "e", "h", "p"])
def test_json_roundtrip(src, basis):
    f = eval_expr(src)
    obj = json.loads(json.dumps(to_json_obj(f, basis)))
    assert from_json_obj(obj) == f
    assert eval_expr(to_expr(f, basis)) == f


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_cli_expand_roundtrip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    lam = rng.choice(cb.enumerate_partitions(n))
    src = f"nabla({rng.choice('mseh')}[[{','.join(map(str, lam))}]])"
    code, out, _ = run("expand", src)
    assert code == 0
    assert from_json_obj(json.loads(out)) == eval_expr(src)


def test_expand_example():
    code, out, _ = run("expand", "nabla(e[2])", "--basis", "schur")
    assert code == 0
    obj = json.loads(out)
    assert {tuple(x["partition"]): x["coeff"] for x in obj["terms"]} == {(2,): "1", (1, 1): "q + t"}


def test_pf_list_csv():
    code, out, _ = run("pf", "list", "--n", "2", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 3


def test_verify_pass_and_fail():
    code, out, _ = run("verify", "main", "--k", "2", "--l", "1")
    assert code == 0 and json.loads(out)["verdict"] is True
    code, out, _ = run("verify", "main", "--k", "2", "--l", "1", "--qshift", "3")
    assert code == 1 and json.loads(out)["witness"] is not None


def test_exit_code_matrix():
    assert run("positivity", "m[[2,2]]")[0] == 0
    assert run("positivity", "m[[2]]")[0] == 1
    assert run("positivity", "--sign", "-1", "m[[2]]")[0] == 0
    assert run("expand", "e[2")[0] == 2
    assert run("expand", "e[9]")[0] == 2
    assert run("--trunc", "9", "expand", "e[9]")[0] == 0
    assert run("verify", "nope")[0] == 2
    assert run("verify")[0] == 2
    assert run("bogus")[0] == 2
    assert run("--trunc", "0", "expand", "e[1]")[0] == 2
    assert run("pf", "list", "--n", "3", "--touch", "2,2")[0] == 2
    code, _, err = run("expand", "e[2")
    assert json.loads(err)["error"] == "syntax"


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("NABLASYM_FORMAT", "text")
    code, out, _ = run("expand", "e[2]")
    assert code == 0 and out.strip() == "s[1,1]: 1"
    monkeypatch.setenv("NABLASYM_TRUNC", "9")
    assert run("expand", "e[9]")[0] == 0


def test_verify_all_small():
    code, out, _ = run("verify", "--all", "--max-degree", "3")
    assert code == 0
    reports = json.loads(out)
    assert {r["identity"] for r in reports} >= {"shuffle", "main", "pn"}
    assert all(r["verdict"] for r in reports)


def test_kostka_and_genfun():
    code, out, _ = run("kostka", "--n", "2", "--format", "csv")
    assert code == 0 and "[2],\"[1,1]\",q" in out
    code, out, _ = run("pf", "genfun", "--n", "2")
    obj = json.loads(out)
    assert {tuple(x["ides"]): x["coeff"] for x in obj["terms"]} == {(): "1", (1,): "q + t"}

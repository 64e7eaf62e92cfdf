import json

import pytest

from nablasym import identities as ids
from nablasym.exactalg import q, qt
from nablasym.hallops import c_apply
from nablasym.symfun import e, m, one


REQUIRED = ["shuffle", "comp-shuffle", "pn", "pn-pf", "hook", "hook-pf", "m2k-expansion", "m2k-recursion",
            "m2k-erun", "e2k-alt", "petrie", "ak-recursion", "main", "main-pairing", "example-1-12",
            "positivity-scan", "gak-scan"]


def test_registry_names():
    assert set(REQUIRED) <= set(ids.names())


def test_main_smallest_case_by_hand():
    assert -m((2,)) == e(2) + c_apply(2, one()) * q
    r = ids.check("main", k=1, l=0)
    assert r.verdict and r.witness is None


def test_petrie_entry():
    assert ids.check("petrie", k=2, n=4).verdict


def test_example_terms():
    assert ids.c_expansion_terms(2, 1) == {k: qt(v) for k, v in ids.EXAMPLE_M221.items()}
    assert ids.check("example-1-12").verdict


def test_grid_runs_small():
    for name, prm in ids.all_cases(4):
        r = ids.check(name, prm)
        assert r.verdict, (name, prm, r.witness)


def test_report_json():
    r = ids.check("pn", n=3)
    obj = json.loads(json.dumps(r.to_json_obj()))
    assert set(obj) == {"identity", "params", "verdict", "witness", "elapsed_ms"}
    assert obj["params"] == {"n": 3} and obj["verdict"] is True and obj["witness"] is None


@pytest.mark.parametrize("k,l", [(1, 0), (1, 1), (2, 0), (2, 1), (1, 3)])
def test_mutations_caught(k, l):
    for idx in range(1, ids.main_term_count(k, l) + 1):
        for mode in ("flip", "qshift"):
            r = ids.check("main", k=k, l=l, **{mode: idx})
            assert not r.verdict
            assert r.witness["lhs"] != r.witness["rhs"]


def test_errors():
    with pytest.raises(ids.IdentityError):
        ids.check("no-such-identity")
    with pytest.raises(ids.IdentityError):
        ids.check("main", k=1)
    with pytest.raises(ids.IdentityError):
        ids.check("main", k=0, l=1)
    with pytest.raises(ids.IdentityError):
        ids.check("shuffle", n=9)
    with pytest.raises(ids.IdentityError):
        ids.check("main", k=1, l=0, flip=7)
    with pytest.raises(ids.IdentityError):
        ids.check("pn", n=2, bogus=1)


def test_parallel_matches_serial():
    serial = [(r["identity"], r["params"], r["verdict"]) for r in ids.run_all(3)]
    par = [(r["identity"], r["params"], r["verdict"]) for r in ids.run_all(3, threads=2)]
    assert serial == par

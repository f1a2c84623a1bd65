"""Smoke tests for the compiled _genera module."""

import json

import pytest

try:
    import _genera  # the in-tree build used by ctest
except ModuleNotFoundError:
    _genera = pytest.importorskip("genera._genera")

WORKSPACE = json.dumps(
    {
        "atoms": [
            {"id": "t", "gl_rank": 1, "dual": "t", "pole_type": "R", "omega": "w[t]"},
            {"id": "e", "gl_rank": 2, "dual": "e", "pole_type": "R", "omega": "w[e]"},
        ],
        "bases": [
            {"id": "L0", "family": "Sp", "rank": 0, "omega": "w[L0]"},
            {"id": "L1", "family": "Sp", "rank": 1, "omega": "w[L1]"},
        ],
        "reducibility": [
            {"atom": "t", "base": "L0", "kind": "C1"},
            {"atom": "t", "base": "L1", "kind": "C1"},
            {"atom": "e", "base": "L1", "kind": "C1"},
        ],
        "base_lifts": [
            {"base": "L0", "atoms": ["t"]},
            {"base": "L1", "atoms": ["e", "t"]},
        ],
    }
)

DS = json.dumps(
    {
        "type": "ds",
        "base": "L0",
        "beta": "0",
        "segments": [{"atom": "t", "low": "1", "len": 1}],
    }
)


def make_ws():
    ws = _genera.Workspace()
    ws.load(WORKSPACE)
    return ws


def test_segment_linking():
    assert _genera.linked('{"atom":"t","low":"0","len":2}', '{"atom":"t","low":"1","len":2}')
    assert not _genera.linked('{"atom":"t","low":"0","len":2}', '{"atom":"t","low":"1","len":0}')


def test_m_star_term_count():
    assert _genera.m_star_terms("0", 0) == 2
    assert _genera.m_star_terms("-1", 4) == 6


def test_classify_and_mu_star():
    ws = make_ws()
    assert ws.classify(DS) == "DiscreteSeries"
    ledger = ws.mu_star("Sp", "d([0,1]@t) x base(L0)", "s(1)")
    assert "d([1,1]@t)" in ledger and "d([0,0]@t)" in ledger


def test_lift_descend_roundtrip():
    ws = make_ws()
    lifted = ws.lift(DS, "ds")
    rho = json.loads(lifted)
    assert rho["level"] == "ds"
    back = json.loads(ws.descend(lifted, "ds"))
    assert back["segments"] == json.loads(DS)["segments"]
    assert ws.gamma_check(DS, lifted)


def test_param_pipeline():
    ws = make_ws()
    param = json.dumps(
        {
            "type": "param",
            "family": "Sp",
            "rank": 1,
            "summands": [{"atom": "t", "sl2": 1}, {"atom": "e", "sl2": 1}],
        }
    )
    assert ws.param_classify(param) == "SupercuspidalGeneric"
    rep = json.loads(ws.param_to_rep(param))
    assert rep["type"] == "tempered"


def test_selftest_deterministic():
    failures1, out1 = _genera.selftest(seed=7, quick=True)
    failures2, out2 = _genera.selftest(seed=7, quick=True)
    assert failures1 == 0
    assert out1 == out2


def test_errors_surface():
    ws = make_ws()
    with pytest.raises(_genera.GeneraError):
        ws.classify('{"type":"ds","base":"missing"}')

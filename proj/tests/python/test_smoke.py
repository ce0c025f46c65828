"""Smoke tests for the python bindings: dict in, dict out."""

import json
import os

import pytest

import dirzeroext as dz

FIXTURES = os.environ["DZEXT_FIXTURES"]


def fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return json.load(f)


M_CUT = {"points": ["s", "t"], "dist": ["0", "1", "0", "0"]}
M_K3 = {"points": ["s0", "s1", "s2"], "dist": [0, 1, 1, 1, 0, 1, 1, 1, 0]}


def test_classify_tractable():
    report = dz.classify(fixture("m_cut.json"))
    assert report["schema"] == 1
    assert report["outcome"] == "tractable"
    assert report["certificate"] == "modular-lattice-submodular"
    assert report["trace"][0]["check"] == "modular metric"


def test_classify_hard():
    report = dz.classify(M_K3)
    assert report["outcome"] == "np-hard"
    assert report["condition"] == "not-modular"
    assert report["witness"]["medianless_triple"] == ["s0", "s1", "s2"]


def test_classify_unknown():
    report = dz.classify(fixture("m_tree5.json"))
    assert report["outcome"] == "unknown"
    assert "condition" not in report


def test_solve_methods_agree():
    instance = {
        "metric": M_CUT,
        "variables": ["s", "t", "u", "v"],
        "costs": [
            {"from": "s", "to": "u", "c": 2},
            {"from": "u", "to": "t", "c": 1},
            {"from": "u", "to": "v", "c": 1},
            {"from": "v", "to": "t", "c": 1},
        ],
    }
    brute = dz.solve(instance, method="brute")
    auto = dz.solve(instance)
    assert brute["value"] == "2"
    assert auto["value"] == "2"
    assert auto["method"] == "blp"
    assert auto["assignment"] == brute["assignment"]


def test_gadget():
    report = dz.gadget(M_K3)
    assert report["case"] == "nonmodular"
    assert report["sextuple"]["tau_star"] == "456"
    assert report["pair"]["delta"] == "2"
    assert report["pair"]["stable_under_doubling"] is True


def test_reduce_maxcut():
    graph = fixture("triangle.json")
    report = dz.reduce_maxcut(M_K3, graph, 2, check=True)
    assert report["threshold"] == "67520"
    assert report["check"]["agrees"] is True
    assert report["check"]["cut_exists"] is True
    # the embedded instance feeds back into the solver; its relaxation is
    # fractional and one delta below the integral optimum
    lp = dz.solve(report["instance"], method="blp")
    assert lp["lp_integral"] is False
    assert lp["value"] == "67518"
    assert "assignment" not in lp


def test_verify_polymorphism():
    report = dz.verify_polymorphism(fixture("m_star3u.json"))
    assert report["valid"] is True
    assert report["weights_sum"] == "1"
    assert any(op["semilattice"] for op in report["operations"])


def test_errors_surface_as_exceptions():
    with pytest.raises(dz.Error):
        dz.classify({"points": ["a", "b"], "dist": [0, 1]})
    with pytest.raises(dz.Error):
        dz.solve({"metric": M_CUT, "variables": ["s", "t"], "costs": []}, method="magic")
    with pytest.raises(dz.Error):
        dz.verify_polymorphism(M_K3)

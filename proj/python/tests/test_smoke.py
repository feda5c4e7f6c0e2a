from fractions import Fraction

import pytest

import germkit


def test_iidual_analysis():
    report = germkit.analyze(germkit.builtin_file("iidual.graph"), index=4)
    delta = report["clusters"][0]["delta"]
    assert delta == {"v2": "3/4", "v3": "1", "v4": "3/4", "v7": "1/2"}
    kc = {c["id"]: c["k_dot_c"] for c in report["components"]}
    assert kc["v9"] == "-1/2"
    assert [kc[v] for v in ("v1", "v5", "v6", "v8")] == ["-1/4"] * 4


def test_quot_and_class_t():
    r = germkit.quot([3, 2, 5, 4, 2])
    assert r["quotient"] == "1/144(1,59)"
    assert r["t"]["index"] == 12
    assert germkit.tchain(9, 4)["t"]["verdict"] is False


def test_classify_and_flip():
    v = germkit.classify(germkit.builtin_file("ic.germ"))
    assert v["accepted"] and v["row"] == 8
    bad = germkit.classify(germkit.builtin_file("forbidden_iidual_iib.germ"))
    assert not bad["accepted"] and bad["citation"] == "iidual-iib"
    assert germkit.flip_transfer(4, Fraction(-1, 4), [2, 3]) == Fraction(1, 6)


def test_disproofs():
    t = germkit.ic_disproof(5, 3, 2)
    assert t["outcome"] == "contradiction"
    assert t["steps"][-1]["value"] == "-4/15"
    assert germkit.ic_disproof(5, 3, 1)["rejected"]
    assert germkit.kad_disproof(3, 5, 3, "k3a")["consistent"]


def test_verify_paper_small():
    report = germkit.verify_paper(9)
    assert report["ok"]


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        germkit.analyze("")
    with pytest.raises(germkit.InputError):
        germkit.tchain(6, 4)

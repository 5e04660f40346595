import json

import pytest

import heyting


def test_describe_and_size():
    d = heyting.describe("catalog:C7p")
    assert d["label"] == "C7p"
    assert d["n"] == 8
    assert heyting.size("chain:5") == 5
    assert heyting.size("cyclic:11") == 11


def test_validate_and_isomorphic():
    ok, failures = heyting.validate("cyclic:9")
    assert ok and failures == []
    assert heyting.isomorphic("cyclic:3", "chain:3")
    assert not heyting.isomorphic("cyclic:4", "chain:4")


def test_membership_facts():
    assert heyting.member("chain:5", "catalog:C16")
    assert not heyting.member("cyclic:7", "catalog:C16")
    assert heyting.q_irreducible("catalog:C10p", "catalog:C16")


def test_projectivity_verdicts():
    assert heyting.totally_non_projective("catalog:C7p") == "yes"
    assert heyting.totally_non_projective("chain:5") == "no"
    assert heyting.primitive("chain:4") == "yes"
    assert heyting.primitive("catalog:C7p") == "no"


def test_free_and_homs():
    assert heyting.free_size("chain:2", 1) == 4
    assert heyting.free_size("cyclic:7", 1) == 10
    assert heyting.hom_count("catalog:C5p", "catalog:C7p", "injective") > 0
    assert heyting.hom_count("catalog:C7p", "catalog:C10p", "injective") == 0


def test_formulas_and_rules():
    assert heyting.formula_valid("chain:2", "p \\/ ~p")
    assert not heyting.formula_valid("cyclic:7", "p \\/ ~p")
    w = heyting.refute("cyclic:7", "p \\/ ~p")
    assert w is not None and "p" in w["assignment"]
    assert heyting.refute("chain:2", "p \\/ ~p") is None
    assert heyting.rule_valid("chain:5", "harrop")
    assert not heyting.rule_valid("cyclic:7", "mints")
    r = heyting.instance_check(
        "cyclic:7", "mints", {"p1": "~~q", "p2": "~q", "r": "~~q -> q"}
    )
    assert r["counterexample"]


def test_jankov():
    assert heyting.jankov_check("catalog:C5p", "catalog:C7p")
    assert heyting.in_sh("catalog:C5p", "catalog:C7p")
    assert not heyting.in_sh("catalog:C7p", "catalog:C5p")


def test_repro_fig1_green():
    report = json.loads(heyting.repro("fig1"))
    assert report["suite"] == "fig1"
    assert len(report["rows"]) == 7
    assert report["green"] == 7
    assert report["red"] is False


def test_errors():
    with pytest.raises(ValueError):
        heyting.size("nope:3")
    with pytest.raises(ValueError):
        heyting.jankov_formula("cyclic:4")  # not subdirectly irreducible
    with pytest.raises(Exception):
        heyting.formula_valid("chain:3", "p -> (")


def test_export_round_trip():
    payload = json.loads(heyting.export_json("catalog:C5p"))
    assert payload["algebra"]["n"] == 6
    assert "frame" in payload
    assert heyting.catalog_names() == ["C5p", "C7p", "C10p", "C12p", "C16"]

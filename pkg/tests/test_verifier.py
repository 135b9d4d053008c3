import json

import pytest

from normgraphs import verifier as vf
from normgraphs.representations import direct_product, make_cyclic, make_symmetric, semidirect_product


def claims(rep):
    return {c.id: c for c in rep.claims}


def test_hierarchy_examples(C6, S3, A4):
    for G in (C6, S3):
        assert vf.verify_hierarchy(G).passed
    rep = vf.verify_hierarchy(A4)
    assert rep.passed
    c = claims(rep)["normalising-in-permuting"]
    # A4: every permuting pair also normalises, so the containment is not strict
    assert c.values["strict"] is False and c.values["edges_small"] == c.values["edges_big"]


def test_theorem1_examples(S3, A4):
    rep = vf.verify_theorem1(A4)
    c = claims(rep)
    assert rep.passed
    assert c["disconnected-implies-frobenius-criterion"].status == "pass"
    assert c["component-diameter-le-2"].values == {"max_component_diameter": 1, "components": 5}
    assert c["components-match-prediction"].status == "pass"
    rep = vf.verify_theorem1(S3)
    assert rep.passed and claims(rep)["connected-diameter-le-6"].values["diameter"] == 2
    rep = vf.verify_theorem1(make_symmetric(5))
    assert [x.status for x in rep.claims] == ["skipped"]


def test_frobenius_bound_examples(S3, A4, C7C3):
    assert claims(vf.verify_frobenius_bound(S3))["frobenius-connected-diameter-le-4"].values["diameter"] == 2
    r = vf.verify_frobenius_bound(C7C3)
    assert r.passed and r.claims[0].status == "pass" and r.claims[0].values["diameter"] <= 4
    assert vf.verify_frobenius_bound(A4).claims[0].status == "skipped"


def test_norm_distance_examples(A4):
    r = vf.verify_norm_distance(make_cyclic(12))
    assert r.passed and r.claims[0].values["max_distance"] <= 1
    G = direct_product(make_symmetric(3), make_cyclic(2))
    r = vf.verify_norm_distance(G)
    assert r.passed and r.claims[0].status == "pass" and r.claims[0].values["max_distance"] <= 3
    assert vf.verify_norm_distance(A4).claims[0].status == "skipped"


def test_corollary_examples(S3, A4):
    c = claims(vf.verify_corollary(A4))
    assert c["connectivity-agrees"].values == {"normalising_components": 5, "permuting_components": 5}
    c = claims(vf.verify_corollary(S3))
    assert c["permuting-diameter-le-6"].values["diameter"] <= 2


def test_lemma_suite_and_collapse(S3, A4):
    for G in (S3, A4, semidirect_product(3, 2, [[[0, 1], [2, 0]], [[1, 1], [1, 2]]])):
        r = vf.verify_frobenius_lemmas(G)
        assert r.passed, r.to_dict()
        assert any(c.id == "oracle-agreement" and c.status == "pass" for c in r.claims)
        r = vf.verify_collapse_equivalence(G)
        assert r.passed
        assert not any(c.status == "skipped" for c in r.claims)


def test_failing_claims_carry_witness():
    rep = vf.VerificationReport("demo", "G")
    c = rep.add("x", False)
    assert c.witness is not None and not rep.passed
    assert rep.to_dict()["claims"][0]["status"] == "fail"


def test_run_corpus_empty_and_unknown_suite():
    assert vf.run_corpus([], vf.SUITES) == []
    assert vf.all_passed([])
    with pytest.raises(ValueError):
        vf.run_corpus([], ["nonsense"])


CORRUPT = """
groups:
  - {name: C5, kind: cyclic, n: 5}
  - name: broken
    kind: table
    table: [[0, 1, 2], [1, 1, 0], [2, 0, 1]]
  - {name: missing-n, kind: cyclic}
  - {name: S3, kind: symmetric, n: 3, tags: [soluble, frobenius-expected]}
"""


def test_corrupted_table_recorded_others_pass():
    corpus = vf.load_corpus(CORRUPT)
    reports = vf.run_corpus(corpus, ["theorem1", "hierarchy"])
    by_group = {}
    for r in reports:
        by_group.setdefault(r.group, []).append(r)
    assert [r.error is not None for r in by_group["broken"]] == [True]
    assert by_group["missing-n"][0].error is not None
    assert all(r.passed for r in by_group["C5"] + by_group["S3"])
    assert not vf.all_passed(reports)


def test_reports_are_deterministic():
    corpus = vf.load_corpus(CORRUPT)
    a = vf.reports_to_json(vf.run_corpus(corpus, vf.SUITES))
    b = vf.reports_to_json(vf.run_corpus(corpus, vf.SUITES, threads=3))
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"passed", "reports"}
    assert "timestamp" in json.loads(vf.reports_to_json([], timestamp=True))


def test_default_corpus_contents():
    corpus = vf.default_corpus()
    names = {e.name for e in corpus}
    for want in ("A4", "S4", "C7:C3", "C5:C4", "C7^4:C5"):
        assert want in names
    assert all(e.error is None for e in corpus)
    assert all("soluble" in e.tags for e in corpus)


def test_enumerate_subgroups_counts(S3, A4, S4):
    assert len(vf.enumerate_subgroups(S3)) == 6
    assert len(vf.enumerate_subgroups(A4)) == 10
    assert len(vf.enumerate_subgroups(S4)) == 30

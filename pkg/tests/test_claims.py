import dataclasses

from indramsey.claims import (
    ANCHORS,
    ClaimStatus,
    Feasibility,
    VerificationReport,
    claims_table,
    verify_claim,
)
from indramsey.expr import parse_graph

# the published statements the table has to cover, listed independently of the module
EXPECTED_ANCHORS = {
    "multiple-copies-observation", "k2-versus-any", "any-versus-k2", "cliques-equal-ramsey",
    "connected-clique-lower-bound", "matching-versus-clique", "matching-versus-matching",
    "p3-versus-union-of-cliques", "p3-versus-copies-of-clique", "p3-versus-union-of-multipartite",
    "p3-versus-copies-of-multipartite", "p3-versus-copies-of-p4", "copies-versus-2k2",
    "no-isolated-versus-2k2-lower", "no-isolated-versus-2k2-interval", "paths-2k2",
    "copies-of-paths-2k2-upper", "copies-of-paths-2k2-small-s", "copies-of-paths-2k2-large-s",
    "copies-of-p3-2k2", "p3-versus-matching", "p4-versus-matching", "paths-versus-matching-upper",
    "p3-versus-copies-of-p3", "copies-of-p3-versus-clique", "2p3-versus-k3-lower",
    "ramsey-copies-of-triangles", "k3-versus-copies-of-k3", "induced-matching-partition",
    "minimal-host-connected",
}


def test_every_anchor_covered():
    table = claims_table()
    assert set(ANCHORS) == EXPECTED_ANCHORS
    assert {r.anchor for r in table} == EXPECTED_ANCHORS


def test_keys_unique_and_expressions_parse():
    table = claims_table()
    assert len({r.key for r in table}) == len(table)
    for r in table:
        parse_graph(r.red), parse_graph(r.blue)
        if r.host:
            parse_graph(r.host)
        lo, hi = r.claimed()
        assert lo <= hi


def test_no_citation_refers_to_document_structure():
    for r in claims_table():
        text = r.citation.lower()
        assert "section" not in text and "theorem" not in text and "§" not in text


def test_bounds_only_record_for_p4_copies():
    rec = next(r for r in claims_table() if r.key == "P3-sP4-s1")
    assert rec.feasibility is Feasibility.BOUNDS_ONLY and rec.claimed() == (6.1, 7)
    res = verify_claim(rec)
    assert res.status is ClaimStatus.BOUNDS_CONSISTENT and res.computed == [7, 7]


def test_wrong_claim_fails():
    rec = next(r for r in claims_table() if r.key == "Pn-2K2-n4")
    wrong = dataclasses.replace(rec, value=6)
    assert verify_claim(wrong).status is ClaimStatus.FAILED
    contradicted = dataclasses.replace(next(r for r in claims_table() if r.key == "P4-tK2-t2"), lower=8, upper=9)
    assert verify_claim(contradicted).status is ClaimStatus.FAILED


def test_budget_exhaustion_is_skipped_not_passed():
    rec = next(r for r in claims_table() if r.key == "K3-tK3-t2")
    res = verify_claim(dataclasses.replace(rec, budget=10), budget=10)
    assert res.status is ClaimStatus.SKIPPED


def test_out_of_scope_skipped():
    rec = dataclasses.replace(claims_table()[0], feasibility=Feasibility.OUT_OF_SCOPE)
    assert verify_claim(rec).status is ClaimStatus.SKIPPED


def test_construction_record():
    rec = next(r for r in claims_table() if r.key == "Pn-2K2-n7")
    res = verify_claim(rec, "quick")
    assert res.status is ClaimStatus.CONSTRUCTION_VERIFIED


def test_report_rendering():
    rec = next(r for r in claims_table() if r.key == "P3-K3")
    rep = VerificationReport("quick", 0, [verify_claim(rec)])
    assert rep.ok and rep.counts()["Verified"] == 1
    assert "P3-K3" in rep.to_text()
    assert '"seconds"' not in rep.to_json(timing=False)

import json

import pytest

from indramsey.canon import canonical_form
from indramsey.expr import parse_graph as P
from indramsey.graph6 import encode
from indramsey.generate import count
from indramsey.graphs import complete, copies, path
from indramsey.ramsey import (
    Status,
    certify_bundle,
    construction_candidates,
    ir_exact,
    ir_exact_multicopy,
    ir_lower,
    ir_upper_by_construction,
    split_copies,
    sweep_order,
    write_bundle,
)


@pytest.mark.parametrize("red,blue,want", [
    ("P5", "2K2", 7), ("K2", "K2", 2), ("P3", "K3", 6), ("P4", "2K2", 6), ("K2", "P4", 4),
    ("K3", "2K2", 5), ("2K2", "P3", 5),
])
def test_lower_bounds(red, blue, want):
    assert ir_lower(P(red), P(blue)) == want


def test_lower_bound_with_edgeless_pattern():
    assert ir_lower(P("g6:A?"), P("K3")) == 2


def test_split_copies():
    assert split_copies(P("3P3"))[0] == 3
    assert split_copies(P("P3+K2")) is None


def test_constructions():
    c = ir_upper_by_construction(P("P5"), P("2K2"))
    assert c.order == 7 and c.host.num_edges == 7
    assert ir_upper_by_construction(P("2P3"), P("2K2")).order == 9
    assert ir_upper_by_construction(P("P4"), P("2K2")).order == 7
    c = ir_upper_by_construction(P("P5"), P("3K2"))
    assert c.order == 12 and c.host == P("C7+P5")
    assert [x.order for x in construction_candidates(P("P4"), P("3K2"))] == [11, 12]
    assert ir_upper_by_construction(P("K4"), P("C5")) is None


@pytest.mark.parametrize("red,blue,value", [
    ("K2", "2K2", 4), ("2K2", "2K2", 6), ("P3", "K3", 6), ("P4", "2K2", 7), ("P5", "2K2", 7),
    ("P3", "P3", 4), ("K3", "K3", 6), ("P3", "2K2", 6), ("K2", "K3", 3),
])
def test_exact_values(red, blue, value):
    res = ir_exact(P(red), P(blue))
    assert res.status is Status.EXACT and res.value == value
    assert res.arrow_host.order == value
    # certificate completeness one order below the value
    assert len(res.witnesses_at(value - 1)) == count(value - 1)
    assert ir_lower(P(red), P(blue)) <= value


def test_cross_bound_sanity():
    for red, blue in [("P4", "2K2"), ("P3", "2P3"), ("2K2", "3K2")]:
        res = ir_exact(P(red), P(blue))
        cons = ir_upper_by_construction(P(red), P(blue))
        assert ir_lower(P(red), P(blue)) <= res.value <= cons.order


def test_cap_gives_interval():
    res = ir_exact(P("P3"), P("2K3"), order_cap=7)
    assert res.status is Status.BOUNDS
    assert res.lo >= 6 and res.hi == 12


def test_unknown_taints_order():
    res = ir_exact(P("K3"), P("K3"), order_cap=6, budget=1, use_constructions=False)
    assert res.status is not Status.EXACT or res.value == 6
    if res.status is Status.BOUNDS:
        assert res.lo <= 6 <= (res.hi or 6)


def test_multicopy_matches_direct():
    for t in (1, 2):
        a = ir_exact_multicopy(path(3), complete(2), t)
        b = ir_exact(path(3), copies(t, complete(2)))
        assert a.value == b.value == 3 * t


def test_multicopy_monotone_and_decomposition_bound():
    f = [ir_exact_multicopy(path(3), path(3), t).value for t in (1, 2)]
    assert f == [4, 8]
    assert f[1] <= 2 * f[0]
    g = [ir_exact_multicopy(complete(2), complete(2), t).value for t in (1, 2, 3)]
    assert g == sorted(g) and g == [2, 4, 6]


def test_sweep_descending_edges_finds_dense_host_first():
    rec = sweep_order(6, path(3), complete(3))
    assert rec.arrow_host is not None and rec.hosts < rec.total


def test_bundle_round_trip(tmp_path):
    res = ir_exact(P("P4"), P("2K2"))
    write_bundle(res, tmp_path / "b")
    data = json.loads((tmp_path / "b" / "result.json").read_text())
    assert data["value"] == 7 and data["status"] == "Exact"
    rep = certify_bundle(tmp_path / "b")
    assert rep.ok and rep.witnesses == 34 + 156


def test_certify_detects_tampering(tmp_path):
    res = ir_exact(P("K2"), P("2K2"))
    root = write_bundle(res, tmp_path / "b")
    files = sorted((root / "witnesses" / "order3").iterdir())
    files[0].unlink()
    rep = certify_bundle(root)
    assert not rep.ok and any(files[0].name in p for p in rep.problems)
    # drop the file from the manifest too: the class count no longer matches
    data = json.loads((root / "result.json").read_text())
    for entry in data["manifest"]:
        if files[0].name in entry["files"]:
            entry["files"].remove(files[0].name)
    (root / "result.json").write_text(json.dumps(data))
    rep = certify_bundle(root)
    assert not rep.ok and any("classes exist" in p for p in rep.problems)
    # a witness turned all red
    root2 = write_bundle(ir_exact(P("P4"), P("2K2")), tmp_path / "c")
    name = encode(canonical_form(path(6)))  # contains an induced P4
    f = root2 / "witnesses" / "order6" / f"{name}.col"
    f.write_text(f.read_text().replace("blue", "red"))
    rep = certify_bundle(root2)
    assert not rep.ok and any(name in p and "red" in p for p in rep.problems)

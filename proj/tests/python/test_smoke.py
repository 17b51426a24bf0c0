import json

import pytest

gridram = pytest.importorskip("gridram")


def test_pattern_round_trip():
    ac8 = gridram.load(gridram.pattern("ac:8"))
    assert ac8["columns"] == 4 and ac8["rows"] == 4
    assert [1, 4] in ac8["vertices"]
    assert gridram.validate(gridram.pattern("nz_stool")) == []


def test_validate_reports_violations():
    bad = gridram.dump({"columns": 2, "rows": 2, "spanning": False, "h_edges": [], "v_edges": [[1, 1, 3]]})
    assert gridram.validate(bad)


def test_counts():
    square = gridram.pattern("square")
    assert gridram.count_embeddings(gridram.pattern("vertex"), square) == 4
    assert gridram.count_embeddings(gridram.pattern("hedge"), square, workers=2) == 4
    e = gridram.find_embedding(gridram.pattern("hedge"), square)
    assert e == {"column_map": [1, 2], "row_map": [1]}
    assert gridram.find_embedding(gridram.pattern("ac:6"), gridram.pattern("ac:8")) is None


def test_gr_exact():
    r = gridram.gr_exact(gridram.pattern("hedge"), 2, 3)
    assert r["value"] == 2
    assert r["status"] == "gr = 2"
    assert r["witnesses"][0][0] == 1
    assert gridram.gr_exact(gridram.pattern("hpath:3"), 2, 3, method="brute")["value"] == 3


def test_cnf():
    text = gridram.encode_cnf(gridram.pattern("hedge"), 2, 2)
    assert "p cnf 4 6" in text.splitlines()
    assert gridram.evaluate_cnf(text) is None
    d = gridram.decode_model(text, "v 1 2 3 4 0")
    assert not d["ok"]
    assert gridram.decode_model(text, "s UNSATISFIABLE")["unsatisfiable"]


def test_bridging():
    steps = gridram.construction_script("ac", 6)
    assert len(steps) == 4
    replayed = gridram.replay(steps)
    assert gridram.find_embedding(gridram.pattern("ac:6"), replayed) is not None
    assert gridram.is_bridging_constructible(gridram.pattern("square")) is None
    r = gridram.is_bridging_constructible(gridram.pattern("row_clique:3"))
    assert r is not None and r["steps"]


def test_lower_bound_and_corners():
    r = gridram.product_lower_bound("5\n1 2\n2 3\n3 4\n4 5\n5 1\n", 3)
    assert r["certifies"] and r["independence"] == 2
    c = gridram.find_ac6_or_coclique(r["grid"], 3)
    assert c["kind"] == "inconclusive"
    assert c["completeness_threshold"] == 55 * 27
    complete = gridram.complement(gridram.dump({"columns": 3, "rows": 3, "spanning": True, "h_edges": [], "v_edges": []}))
    assert gridram.find_ac6_or_coclique(complete, 2)["kind"] == "embedding"


def test_hypergraphs():
    c8 = gridram.tight_cycle(8)
    g = gridram.fg_to_grid(c8)
    assert gridram.isomorphic(g, gridram.pattern("ac:8"), allow_transpose=True)
    back = json.loads(gridram.fg_from_grid(g))
    assert len(back["edges"]) == 8 and len(back["vertices"]) == 8
    assert gridram.fg_to_grid(gridram.fg_from_grid(g)) == g
    k4 = gridram.dump({"vertices": [1, 2, 3, 4], "edges": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]})
    edge = gridram.dump({"vertices": [1, 2, 3], "edges": [[1, 2, 3]]})
    assert gridram.count_embeddings_3(edge, k4) == 24


def test_colouring():
    full = gridram.complement(gridram.dump({"columns": 2, "rows": 2, "spanning": True, "h_edges": [], "v_edges": []}))
    chi = gridram.column_coloring(full)
    assert chi[(1, 2)] == [1, 2]
    s = gridram.uniform_subgrid(full, 2)
    assert s["colours"] == (1, 1)


def test_errors():
    with pytest.raises(gridram.InvalidArgument):
        gridram.pattern("triangle")
    with pytest.raises(ValueError):
        gridram.count_embeddings("{", "{}")
    with pytest.raises(gridram.CapExceeded):
        gridram.gr_exact(gridram.pattern("ac:6"), 3, 4, method="brute")

import random

import pytest

from cshom.graphs import (
    Graph,
    SubdivisionWitness,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    edge_pairs_by_type,
    find_kuratowski_subdivision,
    is_connected,
    is_planar,
    normalize,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    path_graph,
    petersen_graph,
    subdivide,
    to_graph6,
)


def test_from_edges_sorts_endpoints_and_list():
    g = Graph.from_edges(4, [(3, 1), (4, 2), (2, 1)])
    assert g.edges == ((1, 2), (1, 3), (2, 4))


def test_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])


def test_constructors():
    assert complete_graph(5).m == 10
    assert complete_bipartite((1, 2, 3), (4, 5, 6)).m == 9
    assert cycle_graph(6).m == 6
    assert path_graph(4).m == 3
    p = petersen_graph()
    assert (p.n, p.m) == (10, 15)
    assert all(d == 3 for d in p.degrees().values())


def test_normalize_reports_loops_and_multiedges():
    g = Graph(3, ((1, 1), (1, 2), (1, 2), (2, 3)))
    clean, report = normalize(g)
    assert clean.edges == ((1, 2), (2, 3))
    assert report.had_loop
    assert report.collapsed_multiedges == 1


def test_connectivity():
    assert is_connected(path_graph(5))
    g = Graph.from_edges(4, [(1, 2), (3, 4)])
    assert not is_connected(g)
    assert connected_components(4, g.edges) == [[1, 2], [3, 4]]


def test_edge_pairs_by_type_k4():
    noncons, cons = edge_pairs_by_type(complete_graph(4))
    # 15 pairs of 6 edges; disjoint pairs of K4 edges are the 3 perfect matchings
    assert len(noncons) == 3
    assert len(cons) == 12
    g = complete_graph(4)
    for i, j in noncons:
        assert not set(g.edges[i]) & set(g.edges[j])
    for i, j in cons:
        assert set(g.edges[i]) & set(g.edges[j])


def test_subdivide():
    g = complete_graph(4)
    s = subdivide(g, (1, 2))
    assert s.n == 5
    assert (1, 2) not in s.edges
    assert (1, 5) in s.edges and (2, 5) in s.edges
    assert s.m == g.m + 1
    with pytest.raises(ValueError):
        subdivide(s, (1, 2))


def test_graph6_round_trip_fixed():
    for g in (complete_graph(5), petersen_graph(), path_graph(7), cycle_graph(4)):
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_round_trip_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 12)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        assert parse_graph6(to_graph6(g)) == g


def test_parse_edge_list():
    g = parse_edge_list("# a triangle\n3 3\n1 2\n2 3\n1 3\n")
    assert g == complete_graph(3)
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n1 2\n")  # missing an edge
    with pytest.raises(ValueError):
        parse_edge_list("2 1\n1 5\n")  # endpoint out of range


def test_parse_graph_auto():
    g6 = to_graph6(complete_graph(5))
    assert parse_graph(g6) == complete_graph(5)
    assert parse_graph("3 2 1 2 2 3") == path_graph(3)


def test_planarity_known_cases():
    assert is_planar(complete_graph(4))
    assert is_planar(cycle_graph(8))
    assert is_planar(path_graph(6))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite((1, 2, 3), (4, 5, 6)))
    assert not is_planar(complete_graph(6))
    assert not is_planar(petersen_graph())


def test_kuratowski_witness_k5():
    w = find_kuratowski_subdivision(complete_graph(5))
    assert w is not None and w.kind == "K5"
    w.validate(complete_graph(5))
    assert w.branch_vertices == (1, 2, 3, 4, 5)


def test_kuratowski_witness_k33():
    g = complete_bipartite((1, 2, 3), (4, 5, 6))
    w = find_kuratowski_subdivision(g)
    assert w is not None and w.kind == "K33"
    w.validate(g)


def test_kuratowski_witness_petersen():
    g = petersen_graph()
    w = find_kuratowski_subdivision(g)
    assert w is not None and w.kind == "K33"
    w.validate(g)
    assert set(w.subgraph_edges()) <= set(g.edges)


def test_kuratowski_subdivided_k5():
    g = complete_graph(5)
    for e in ((1, 2), (2, 3)):
        g = subdivide(g, e)
    w = find_kuratowski_subdivision(g)
    assert w is not None
    w.validate(g)


def test_witness_validate_rejects_bad_paths():
    g = complete_graph(5)
    w = find_kuratowski_subdivision(g)
    bad = SubdivisionWitness("K5", w.branch_vertices, w.paths[:-1])
    with pytest.raises(ValueError):
        bad.validate(g)
    # swap one path's endpoints so it no longer matches its model edge
    flipped = w.paths[:1] + (tuple(reversed(w.paths[1])),) + w.paths[2:]
    bad = SubdivisionWitness("K5", w.branch_vertices, flipped)
    with pytest.raises(ValueError):
        bad.validate(g)


def test_relabel():
    g = complete_bipartite((1, 2, 3), (4, 5, 6))
    h = g.relabel({1: 1, 2: 3, 3: 5, 4: 2, 5: 4, 6: 6})
    assert h == complete_bipartite((1, 3, 5), (2, 4, 6))
    with pytest.raises(ValueError):
        g.relabel({1: 1})

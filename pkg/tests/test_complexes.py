import random

import pytest

from cshom.complexes import build_restricted_complex
from cshom.groupalg import oracle_restricted_matrices
from cshom.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from cshom.intlinalg import homology_group, mat_mul
from cshom.tableaux import Partition


def _as_lists(rows):
    return [list(r) for r in rows]


def test_k5_dimensions_and_block_layout():
    c = build_restricted_complex(complete_graph(5), Partition((2, 2, 1)))
    assert c.dims() == (15, 20, 5)
    assert c.copies1 == 2
    # one block of two copies per edge, ascending within the block
    for i, e in enumerate(c.graph.edges, start=1):
        cols = [col for col, (ei, _, _) in enumerate(c.basis1) if ei == i]
        assert cols == [2 * (i - 1), 2 * (i - 1) + 1]
        for col in cols:
            assert c.basis1[col][2].rows[0] == e


def test_k5_matches_group_algebra_oracle():
    g = complete_graph(5)
    shape = Partition((2, 2, 1))
    c = build_restricted_complex(g, shape)
    d1, d2 = oracle_restricted_matrices(g, shape)
    assert _as_lists(c.d1) == d1
    assert _as_lists(c.d2) == d2


def test_k33_matches_group_algebra_oracle():
    g = complete_bipartite((1, 3, 5), (2, 4, 6))
    shape = Partition((2, 2, 1, 1))
    c = build_restricted_complex(g, shape)
    assert c.dims() == (18, 27, 9)
    d1, d2 = oracle_restricted_matrices(g, shape)
    assert _as_lists(c.d1) == d1
    assert _as_lists(c.d2) == d2


@pytest.mark.parametrize(
    "g,parts",
    [
        (complete_graph(4), (2, 2)),
        (cycle_graph(5), (2, 2, 1)),
        (path_graph(6), (2, 2, 2)),
        (cycle_graph(6), (2, 2, 1, 1)),
    ],
)
def test_small_graphs_match_oracle(g, parts):
    shape = Partition(parts)
    c = build_restricted_complex(g, shape)
    d1, d2 = oracle_restricted_matrices(g, shape)
    assert _as_lists(c.d1) == d1
    assert _as_lists(c.d2) == d2


def test_restricted_homology_pinned_values():
    c = build_restricted_complex(complete_graph(5), Partition((2, 2, 1)))
    r = homology_group(_as_lists(c.d1), _as_lists(c.d2))
    assert (r.betti, r.invariant_factors) == (0, (2,))
    c = build_restricted_complex(
        complete_bipartite((1, 2, 3), (4, 5, 6)), Partition((2, 2, 1, 1))
    )
    r = homology_group(_as_lists(c.d1), _as_lists(c.d2))
    assert (r.betti, r.invariant_factors) == (0, (2,))


def _h1(g: Graph, parts) -> tuple:
    c = build_restricted_complex(g, Partition(parts))
    r = homology_group(_as_lists(c.d1), _as_lists(c.d2))
    return r.betti, r.invariant_factors


def test_homology_invariant_under_relabeling():
    rng = random.Random(99)
    cases = [
        (complete_graph(5), (2, 2, 1)),
        (complete_bipartite((1, 2, 3), (4, 5, 6)), (2, 2, 1, 1)),
        (cycle_graph(6), (2, 2, 2)),
    ]
    for g, parts in cases:
        want = _h1(g, parts)
        for _ in range(3):
            perm = list(range(1, g.n + 1))
            rng.shuffle(perm)
            h = g.relabel(dict(zip(range(1, g.n + 1), perm)))
            assert _h1(h, parts) == want


def test_d1_d2_composition_vanishes():
    rng = random.Random(4242)
    for _ in range(20):
        n = rng.randint(4, 7)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.55
        ]
        g = Graph.from_edges(n, edges)
        for k in range(2, n // 2 + 1):
            c = build_restricted_complex(g, Partition.two_column(n, k))
            if c.basis2:
                prod = mat_mul(_as_lists(c.d1), _as_lists(c.d2))
                assert not any(x for row in prod for x in row)


def test_k1_shape_has_no_degree2_basis():
    c = build_restricted_complex(path_graph(3), Partition((2, 1)))
    assert len(c.basis2) == 0
    assert c.dims()[0] == 0
    assert len(c.basis1) > 0


def test_shape_validation():
    with pytest.raises(ValueError):
        build_restricted_complex(complete_graph(5), Partition((2, 2, 1, 1)))
    with pytest.raises(ValueError):
        build_restricted_complex(complete_graph(5), Partition((3, 1, 1)))
    with pytest.raises(ValueError):
        build_restricted_complex(complete_graph(4), Partition((1, 1, 1, 1)))


def test_non_canonical_graph_rejected():
    bad = Graph(3, ((2, 1), (1, 3)))
    with pytest.raises(ValueError):
        build_restricted_complex(bad, Partition((2, 1)))

import json

import pytest

from cshom.certificates import (
    canonical_certificates,
    certificate_from_dict,
    certificate_to_dict,
    certify_nonplanar,
    lift_subdivision,
    lift_subgraph,
    recheck_certificate,
    seed_certificate,
)
from cshom.complexes import build_restricted_complex
from cshom.errors import NotASubgraph, PlanarInput
from cshom.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen_graph,
    subdivide,
)
from cshom.intlinalg import check_certificate, homology_group


def _homology_factors(cert):
    c = build_restricted_complex(cert.graph, cert.shape)
    r = homology_group([list(x) for x in c.d1], [list(x) for x in c.d2])
    return r.betti, r.invariant_factors


def test_seeds_verify():
    seed5, seed33 = canonical_certificates()
    assert seed5.kind == "K5" and seed33.kind == "K33"
    for seed in (seed5, seed33):
        cert = seed_certificate(seed)
        assert recheck_certificate(cert).valid


def test_bipartite_seed_resolved_sides():
    _, seed33 = canonical_certificates()
    side_with_1 = sorted(
        v for v in range(1, 7) if v == 1 or not seed33.graph.has_edge(1, v)
    )
    assert side_with_1 == [1, 3, 5]


@pytest.mark.parametrize("edge", [(1, 2), (1, 5), (3, 4)])
def test_lift_subdivision_keeps_torsion(edge):
    seed5, _ = canonical_certificates()
    cert = lift_subdivision(seed_certificate(seed5), edge)
    assert cert.graph == subdivide(complete_graph(5), edge)
    assert recheck_certificate(cert).valid
    assert _homology_factors(cert) == (0, (2,))


def test_lift_subdivision_iterates():
    seed5, _ = canonical_certificates()
    cert = seed_certificate(seed5)
    cert = lift_subdivision(cert, (1, 2))   # new vertex 6
    cert = lift_subdivision(cert, (3, 4))   # new vertex 7
    cert = lift_subdivision(cert, (1, 6))   # split a fresh edge again
    assert cert.graph.n == 8
    assert recheck_certificate(cert).valid


def test_lift_subdivision_rejects_non_edge():
    seed5, _ = canonical_certificates()
    with pytest.raises(ValueError):
        lift_subdivision(seed_certificate(seed5), (1, 1))


def test_lift_subgraph_identity():
    seed5, _ = canonical_certificates()
    cert = seed_certificate(seed5)
    again = lift_subgraph(cert, complete_graph(5))
    assert again.h == cert.h


def test_lift_subgraph_into_k6_initial_segment():
    seed5, _ = canonical_certificates()
    cert = lift_subgraph(seed_certificate(seed5), complete_graph(6))
    assert cert.graph == complete_graph(6)
    assert recheck_certificate(cert).valid
    assert _homology_factors(cert)[1] and _homology_factors(cert)[1][0] % 2 == 0


def test_lift_subgraph_shifted_embedding():
    seed5, _ = canonical_certificates()
    emb = {1: 2, 2: 3, 3: 4, 4: 5, 5: 6}
    cert = lift_subgraph(seed_certificate(seed5), complete_graph(6), emb)
    assert cert.graph == complete_graph(6)
    assert recheck_certificate(cert).valid


def test_lift_subgraph_rejects_non_embedding():
    seed5, _ = canonical_certificates()
    cert = seed_certificate(seed5)
    host = cycle_graph(6)
    with pytest.raises(NotASubgraph):
        lift_subgraph(cert, host)  # K5 edges are not all in C6
    with pytest.raises(NotASubgraph):
        lift_subgraph(cert, complete_graph(6), {1: 1, 2: 1, 3: 2, 4: 3, 5: 4})
    with pytest.raises(NotASubgraph):
        lift_subgraph(cert, complete_graph(6), {1: 1, 2: 2, 3: 3, 4: 4, 5: 9})


def test_certify_planar_raises():
    with pytest.raises(PlanarInput):
        certify_nonplanar(cycle_graph(5))
    with pytest.raises(PlanarInput):
        certify_nonplanar(complete_graph(4))


@pytest.mark.parametrize(
    "g",
    [
        complete_graph(5),
        complete_bipartite((1, 2, 3), (4, 5, 6)),
        complete_bipartite((1, 3, 5), (2, 4, 6)),
        complete_graph(6),
        subdivide(complete_graph(5), (2, 3)),
        petersen_graph(),
    ],
    ids=["k5", "k33-default", "k33-resolved", "k6", "k5-subdivided", "petersen"],
)
def test_certify_nonplanar_end_to_end(g):
    cert = certify_nonplanar(g)
    assert cert.graph == g
    assert recheck_certificate(cert).valid
    assert cert.prime == 2
    assert cert.trace is not None and cert.trace.steps[-1].op == "embed"
    assert cert.witness is not None
    cert.witness.validate(g)
    # the vertex map must realize the traced subdivision model inside g
    assert sorted(cert.vertex_map.values()) == sorted(set(cert.vertex_map.values()))


def test_certificate_dict_round_trip():
    cert = certify_nonplanar(complete_graph(5))
    doc = certificate_to_dict(cert)
    assert doc["verdict"] == {"cycle": True, "doubled": True, "not_in_image": True}
    assert doc["lift"]["kind"] == "K5"
    text = json.dumps(doc, sort_keys=True)
    back = certificate_from_dict(json.loads(text))
    assert back.graph == cert.graph
    assert back.shape == cert.shape
    assert back.h == cert.h
    assert back.witness_x == cert.witness_x
    assert recheck_certificate(back).valid


def test_certificate_from_dict_rejects_bad_documents():
    cert = certify_nonplanar(complete_graph(5))
    doc = certificate_to_dict(cert)
    bad = dict(doc)
    bad["format"] = "something-else"
    with pytest.raises(ValueError):
        certificate_from_dict(bad)
    bad = json.loads(json.dumps(doc))
    bad["h"]["99,1"] = 1
    with pytest.raises(ValueError):
        certificate_from_dict(bad)
    bad = json.loads(json.dumps(doc))
    bad["witness_x"]["1,1"] = 1  # wrong arity for a degree-2 key
    with pytest.raises(ValueError):
        certificate_from_dict(bad)


def test_tampered_certificate_fails_verification():
    cert = certify_nonplanar(complete_graph(5))
    doc = json.loads(json.dumps(certificate_to_dict(cert)))
    key = next(iter(doc["h"]))
    doc["h"][key] += 1
    tampered = certificate_from_dict(doc)
    c = build_restricted_complex(tampered.graph, tampered.shape)
    verdict = check_certificate(tampered, c)
    assert not verdict.valid

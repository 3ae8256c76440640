import json
import random

import pytest

from cshom.graphs import Graph, complete_graph, cycle_graph, to_graph6
from cshom.survey import (
    _canonical_edges,
    certificate_filename,
    generate_connected_graphs,
    run_survey,
    scan_shapes,
    survey_one,
)


def test_scan_shapes():
    assert [s.parts for s in scan_shapes(5)] == [(2, 2, 1)]
    assert [s.parts for s in scan_shapes(7)] == [(2, 2, 1, 1, 1), (2, 2, 2, 1)]
    assert scan_shapes(3) == []


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 7)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.5
        ]
        g = Graph.from_edges(n, edges)
        want = _canonical_edges(n, g.edges)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        h = g.relabel(dict(zip(range(1, n + 1), perm)))
        assert _canonical_edges(n, h.edges) == want


def test_generator_counts_match_census():
    per_n = {}
    for g in generate_connected_graphs(5):
        per_n[g.n] = per_n.get(g.n, 0) + 1
    assert per_n == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}


def test_generator_rejects_large_n():
    with pytest.raises(ValueError):
        list(generate_connected_graphs(8))


def test_survey_one_k5():
    record, cert_doc = survey_one(to_graph6(complete_graph(5)))
    assert record["planar"] is False
    assert record["has_z2"] is True
    assert record["shapes"] == ["2+2+1"]
    assert record["error"] is None
    assert record["certificate"] == certificate_filename(record["id"])
    assert cert_doc is not None and cert_doc["prime"] == 2


def test_survey_one_planar():
    record, cert_doc = survey_one(to_graph6(cycle_graph(5)))
    assert record["planar"] is True
    assert record["has_z2"] is False
    assert record["certificate"] is None
    assert cert_doc is None


def test_run_survey_cache_reuse(tmp_path):
    cache = str(tmp_path / "cache")
    graphs = [complete_graph(5), cycle_graph(4)]
    first = run_survey(graphs, cache_dir=cache)
    # the cache now fully answers the second run, runtimes included
    second = run_survey(graphs, cache_dir=cache)
    assert first == second
    cached_files = sorted(p.name for p in (tmp_path / "cache").glob("*.json"))
    assert len(cached_files) == 2


def test_run_survey_parallel_matches_serial(tmp_path):
    graphs = list(generate_connected_graphs(4))
    serial = run_survey(graphs, cache_dir=str(tmp_path / "c1"), jobs=1)
    parallel = run_survey(graphs, cache_dir=str(tmp_path / "c2"), jobs=3)

    def strip_timing(records):
        return [{k: v for k, v in r.items() if k != "runtime_s"} for r in records]

    assert strip_timing(serial) == strip_timing(parallel)


def test_run_survey_writes_verifiable_certificates(tmp_path):
    certs = tmp_path / "certs"
    run_survey(
        [complete_graph(5)],
        cache_dir=str(tmp_path / "cache"),
        cert_dir=str(certs),
    )
    files = list(certs.glob("*.cert.json"))
    assert len(files) == 1
    doc = json.loads(files[0].read_text())
    assert doc["verdict"] == {"cycle": True, "doubled": True, "not_in_image": True}

import itertools
from collections import Counter

import numpy as np
import pytest

from vertex_energy import (
    adjacency_matrix,
    class_weights,
    cluster_eigenvalues,
    eigendecompose,
    moments_for_vertex,
    named_graph,
    new_graph,
    walk_table,
    weight_matrix,
)
from vertex_energy.errors import BadParameters, OutOfRange, Overflow
from vertex_energy.graph import degrees

from helpers import PAPER_TABLE_1, brute_force_closed_walks, random_corpus


def test_structural_rows(corpus):
    for g in corpus:
        t = walk_table(g, 3)
        assert t.row(0) == [1] * g.n
        assert t.row(1) == [0] * g.n
        assert t.row(2) == degrees(g)
        assert t.counts.dtype == np.int64


def test_frucht_table_1_multiset():
    t = walk_table(named_graph("frucht"), 11)
    ours = Counter(tuple(col) for col in t.counts.T.tolist())
    paper = Counter(tuple(col) for col in np.array(PAPER_TABLE_1).T.tolist())
    assert ours == paper
    assert sorted(t.row(11)) == sorted(PAPER_TABLE_1[11])


def test_frucht_paper_v1_column_present():
    t = walk_table(named_graph("frucht"), 11)
    v1 = [1, 0, 3, 2, 15, 22, 95, 200, 701, 1756, 5653, 15422]
    assert any(moments_for_vertex(t, v) == v1 for v in range(12))


def test_petersen_k4_brute_force():
    g = named_graph("petersen")
    expected = brute_force_closed_walks(g, 0, 4)
    assert expected == 15 == (81 + 5 * 1 + 4 * 16) // 10
    assert walk_table(g, 4).row(4) == [expected] * 10


def test_small_examples():
    k2 = new_graph(2, [(0, 1)])
    assert moments_for_vertex(walk_table(k2, 3), 0) == [1, 0, 1, 0]
    k3 = new_graph(3, [(0, 1), (1, 2), (0, 2)])
    oracle = [brute_force_closed_walks(k3, 0, k) for k in range(4)]
    assert oracle == [1, 0, 2, 2]
    assert moments_for_vertex(walk_table(k3, 3), 0) == oracle
    with pytest.raises(OutOfRange):
        moments_for_vertex(walk_table(k3, 3), 3)
    with pytest.raises(BadParameters):
        walk_table(k3, -1)


def test_brute_force_equivalence_all_small_graphs():
    # every labelled graph on up to 4 vertices, plus random ones up to 6
    graphs = []
    for n in range(1, 5):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            graphs.append(new_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1]))
    graphs += random_corpus(60, seed=3, n_min=5, n_max=6)
    for g in graphs:
        t = walk_table(g, 6)
        for v in range(g.n):
            assert moments_for_vertex(t, v) == [brute_force_closed_walks(g, v, k) for k in range(7)]


@pytest.mark.parametrize("name", ["desargues", "tutte_coxeter", "heawood"])
def test_bipartite_parity(name):
    t = walk_table(named_graph(name), 11)
    assert not t.counts[1::2].any()


def test_trace_and_spectral_consistency(corpus, catalog):
    for g in list(catalog.values()) + list(corpus):
        s = eigendecompose(adjacency_matrix(g))
        c = cluster_eigenvalues(s)
        q = class_weights(weight_matrix(s), c)
        t = walk_table(g, 11)
        for k in range(12):
            actual = t.counts[k].astype(float)
            predicted = q @ c.nodes**k
            np.testing.assert_allclose(predicted, actual, rtol=1e-6, atol=1e-6)
            trace = (s.values**k).sum()
            assert abs(actual.sum() - trace) <= 1e-6 * max(1.0, abs(trace))


def test_overflow_detected():
    g = named_graph("tutte_coxeter")
    with pytest.raises(Overflow) as info:
        walk_table(g, 60)
    # 3-regular bipartite: A^k diagonal < 3^k, so the first overflow is past 3^39 < 2^63
    assert info.value.k > 39 and info.value.k % 2 == 0
    walk_table(g, 39)

import itertools
from math import comb, factorial

import pytest
from hypothesis import given, settings

from mixed_spectra.eisenstein import OMEGA, OMEGA2, ONE
from mixed_spectra.graph import (
    Graph,
    GraphError,
    MixedGraph,
    Walk,
    degree,
    gamma_weight,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_monostore,
    monostore_gauge,
    random_mixed_graph,
    simple_cycles,
    underlying_graph,
    walk_power,
)

from conftest import C4, C4_ONE_ARC, DIRECTED_C4, DIRECTED_TRIANGLE, K3, mixed_graphs


def test_invariants_rejected():
    with pytest.raises(GraphError):
        MixedGraph.from_edges(2, digons=[(0, 0)])
    with pytest.raises(GraphError):
        MixedGraph.from_edges(2, digons=[(0, 2)])
    with pytest.raises(GraphError, match="anti-parallel"):
        MixedGraph.from_edges(2, arcs=[(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        MixedGraph.from_edges(2, digons=[(0, 1)], arcs=[(0, 1)])
    with pytest.raises(GraphError):
        MixedGraph.from_edges(0)


def test_digons_normalised():
    assert MixedGraph.from_edges(2, digons=[(1, 0)]) == MixedGraph.from_edges(2, digons=[(0, 1)])


def test_underlying_graph_examples():
    assert underlying_graph(MixedGraph.from_edges(2, arcs=[(0, 1)])).edges == {(0, 1)}
    X = MixedGraph.from_edges(3, digons=[(0, 1)], arcs=[(1, 2)])
    assert underlying_graph(X).edges == {(0, 1), (1, 2)}
    X = MixedGraph.from_edges(4, digons=[(0, 1), (2, 3)], arcs=[(1, 2), (3, 0)])
    assert underlying_graph(X) == Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))


def test_degree_examples():
    assert degree(MixedGraph(3), 1) == 0
    star = MixedGraph.from_edges(4, arcs=[(0, 1), (0, 2), (0, 3)])
    assert degree(star, 0) == 3
    assert degree(K3, 2) == 2
    with pytest.raises(GraphError):
        degree(K3, 3)


@given(mixed_graphs())
def test_degree_sum(X):
    assert sum(degree(X, u) for u in range(X.n)) == 2 * X.m
    assert X.m == X.k + X.l


def test_canonical_edge_order():
    X = MixedGraph.from_edges(4, digons=[(2, 3), (0, 1)], arcs=[(3, 0), (1, 2)])
    assert [str(e) for e in X.edges()] == ["0 -- 1", "2 -- 3", "3 -> 0", "1 -> 2"]


def test_is_connected():
    assert is_connected(MixedGraph(1))
    assert not is_connected(MixedGraph(2))
    assert is_connected(MixedGraph.from_edges(3, digons=[(0, 1)], arcs=[(2, 1)]))
    with pytest.raises(GraphError):
        is_connected(Graph(0))


def test_is_bipartite_examples():
    part = is_bipartite(underlying_graph(C4))
    assert part is not None
    assert {part[0], part[1]} == {frozenset({0, 2}), frozenset({1, 3})}
    assert is_bipartite(underlying_graph(K3)) is None
    part = is_bipartite(Graph(3))
    assert part is not None and part[0] | part[1] == {0, 1, 2}


def _brute_bipartite(G):
    return any(
        all(col[u] != col[v] for u, v in G.edges)
        for col in itertools.product((0, 1), repeat=G.n)
    )


@settings(max_examples=200)
@given(mixed_graphs(max_n=8))
def test_bipartite_against_brute_force(X):
    G = underlying_graph(X)
    part = is_bipartite(G)
    assert (part is not None) == _brute_bipartite(G)
    if part is not None:
        a, b = part
        assert a | b == set(range(G.n)) and not a & b
        assert all((u in a) != (v in a) for u, v in G.edges)


def test_gamma_weight_examples():
    assert gamma_weight(K3, Walk((0, 1))) == ONE
    assert gamma_weight(DIRECTED_TRIANGLE, [0, 1, 2, 0]) == ONE
    X = MixedGraph.from_edges(2, arcs=[(1, 0)])
    assert gamma_weight(X, [0, 1]) == OMEGA2
    assert gamma_weight(X, [1, 0]) == OMEGA
    assert gamma_weight(X, [1]) == ONE
    with pytest.raises(GraphError):
        gamma_weight(MixedGraph.from_edges(3, digons=[(0, 1)]), [0, 2])


def test_monostore_examples():
    forest = MixedGraph.from_edges(5, digons=[(0, 1)], arcs=[(1, 2), (4, 3)])
    assert is_monostore(forest)
    assert is_monostore(DIRECTED_TRIANGLE)
    assert not is_monostore(C4_ONE_ARC)
    assert not is_monostore(DIRECTED_C4)
    assert is_monostore(C4)


def test_simple_cycle_counts():
    # K_n has sum_k C(n,k) (k-1)!/2 simple cycles
    for n in range(3, 7):
        Kn = Graph(n, frozenset(itertools.combinations(range(n), 2)))
        want = sum(comb(n, k) * factorial(k - 1) // 2 for k in range(3, n + 1))
        cycles = list(simple_cycles(Kn))
        assert len(cycles) == want
        assert len({frozenset(zip(c, c[1:] + c[:1])) for c in cycles}) == want


@settings(max_examples=300)
@given(mixed_graphs(max_n=8))
def test_monostore_matches_cycle_enumeration(X):
    brute = all(walk_power(X, c + (c[0],)) == 0 for c in simple_cycles(underlying_graph(X)))
    assert is_monostore(X) == brute


@given(mixed_graphs())
def test_gauge_certificate(X):
    g = monostore_gauge(X)
    if g is None:
        return
    for e in X.edges():
        assert (-g[e.u] + X.h_power(e.u, e.v) + g[e.v]) % 3 == 0


def test_random_mixed_graph():
    assert random_mixed_graph(5, 0, 0, 3).m == 0
    full = random_mixed_graph(4, 1, 0, 9)
    assert full.l == 6 and full.k == 0
    assert random_mixed_graph(6, 0.3, 0.3, 42) == random_mixed_graph(6, 0.3, 0.3, 42)
    arcs = random_mixed_graph(6, 0, 1, 1)
    assert arcs.k == 15
    with pytest.raises(GraphError):
        random_mixed_graph(4, 0.7, 0.5, 0)
    with pytest.raises(GraphError):
        random_mixed_graph(0, 0.1, 0.1, 0)


def test_induced_subgraph():
    X = MixedGraph.from_edges(4, digons=[(0, 1)], arcs=[(2, 3), (1, 3)])
    sub = induced_subgraph(X, [1, 3])
    assert sub == MixedGraph.from_edges(2, arcs=[(0, 1)])

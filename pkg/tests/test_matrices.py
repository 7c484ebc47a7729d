import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mixed_spectra.eisenstein import OMEGA, OMEGA2, Eisenstein
from mixed_spectra.graph import MixedGraph, monostore_gauge
from mixed_spectra.matrices import (
    EisensteinMatrix,
    HermitianMatrixExact,
    adjacency_matrix,
    apply_switching,
    as_underlying,
    build_H_alpha,
    build_H_gamma,
    build_incidence,
    build_Q,
    switching_matrix,
    verify_incidence_factorization,
)
from mixed_spectra.graph import random_mixed_graph
from mixed_spectra.spectra import eigenvalues

from conftest import DIRECTED_TRIANGLE, K3, SINGLE_ARC, SINGLE_DIGON, gauges, mixed_graphs

E = EisensteinMatrix.from_entries


def test_H_gamma_examples():
    assert build_H_gamma(SINGLE_DIGON) == E([[0, 1], [1, 0]])
    assert build_H_gamma(SINGLE_ARC) == E([[0, OMEGA], [OMEGA2, 0]])
    assert build_H_gamma(MixedGraph(3)) == EisensteinMatrix.zeros(3, 3)


@given(mixed_graphs())
def test_H_gamma_hermitian(X):
    h = build_H_gamma(X)
    assert h.is_hermitian()
    assert all(h[i, i] == 0 for i in range(X.n))


def test_non_hermitian_rejected():
    with pytest.raises(ValueError):
        HermitianMatrixExact.from_matrix(E([[0, OMEGA], [OMEGA, 0]]))


def test_H_alpha_examples():
    X = MixedGraph.from_edges(3, digons=[(1, 2)], arcs=[(0, 1)])
    assert np.allclose(build_H_alpha(X, 0.0), adjacency_matrix(X), atol=1e-15)
    h = build_H_alpha(SINGLE_ARC, 2 * math.pi / 3)
    assert h[0, 1] == pytest.approx(complex(-0.5, 0.8660254037844386), abs=1e-15)
    h = build_H_alpha(SINGLE_ARC, math.pi / 2)
    assert h[0, 1] == pytest.approx(1j, abs=1e-15)
    assert h[1, 0] == pytest.approx(-1j, abs=1e-15)


@given(mixed_graphs())
def test_H_alpha_matches_exact_at_two_thirds_pi(X):
    num = build_H_alpha(X, 2 * math.pi / 3)
    assert np.max(np.abs(num - build_H_gamma(X).to_complex()), initial=0) <= 1e-12
    assert np.allclose(num, num.conj().T, atol=1e-12)


def test_incidence_examples():
    assert build_incidence(SINGLE_DIGON).matrix == E([[1], [1]])
    assert build_incidence(SINGLE_ARC).matrix == E([[OMEGA2], [OMEGA]])
    X = MixedGraph.from_edges(3, digons=[(0, 1)], arcs=[(1, 2)])
    inc = build_incidence(X)
    assert inc.matrix == E([[1, 0], [1, OMEGA2], [0, OMEGA]])
    assert [str(e) for e in inc.edge_order] == ["0 -- 1", "1 -> 2"]


@given(mixed_graphs())
def test_incidence_column_weight(X):
    b = build_incidence(X).matrix
    for j in range(X.m):
        nz = [b[i, j] for i in range(X.n) if b[i, j]]
        assert len(nz) == 2
        assert (nz[0] * nz[1]).norm() == 1


def test_Q_examples():
    assert build_Q(SINGLE_DIGON) == E([[1, 1], [1, 1]])
    assert build_Q(SINGLE_ARC) == E([[1, OMEGA], [OMEGA2, 1]])
    i_plus_j = E([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    assert build_Q(K3) == i_plus_j


@settings(max_examples=200)
@given(mixed_graphs())
def test_Q_psd_and_diagonal(X):
    q = build_Q(X)
    assert [q[i, i] for i in range(X.n)] == [Eisenstein(d) for d in X.degrees()]
    assert min(eigenvalues(q).values) >= -1e-9


def test_incidence_factorization_examples():
    X = MixedGraph.from_edges(4, digons=[(0, 1), (1, 2), (2, 3)])
    r = verify_incidence_factorization(X)
    assert r.holds and all(r.details.values())
    b = build_incidence(X).matrix
    assert not np.any(b.b) and set(b.a.flat) <= {0, 1}
    assert verify_incidence_factorization(DIRECTED_TRIANGLE).holds
    assert verify_incidence_factorization(random_mixed_graph(8, 0.3, 0.3, 7)).holds
    assert verify_incidence_factorization(MixedGraph(3)).holds


def test_switching_examples():
    X = random_mixed_graph(6, 0.3, 0.3, 1)
    assert apply_switching(X, [0] * 6) == X
    assert apply_switching(SINGLE_DIGON, {0: 0, 1: 1}) == SINGLE_ARC
    with pytest.raises(ValueError):
        apply_switching(SINGLE_DIGON, {0: 1})


@settings(max_examples=100)
@given(mixed_graphs().flatmap(lambda X: gauges(X.n).map(lambda g: (X, g))))
def test_switching_is_diagonal_conjugation(case):
    X, g = case
    s = switching_matrix(g)
    Y = apply_switching(X, g)
    assert build_H_gamma(Y) == s.H @ build_H_gamma(X) @ s
    assert build_Q(Y) == s.H @ build_Q(X) @ s
    a, b = eigenvalues(build_Q(X)).as_array(), eigenvalues(build_Q(Y)).as_array()
    assert np.max(np.abs(a - b)) <= 1e-9


def test_seven_vertex_similarity_preserves_Q_spectrum():
    # diag(1, w, 1, 1, w^2, w, w)
    g = [0, 1, 0, 0, 2, 1, 1]
    for seed in range(20):
        X = random_mixed_graph(7, 0.3, 0.4, seed)
        a = eigenvalues(build_Q(X)).as_array()
        b = eigenvalues(build_Q(apply_switching(X, g))).as_array()
        assert np.max(np.abs(a - b)) <= 1e-9


@given(mixed_graphs())
def test_gauge_switches_to_adjacency(X):
    g = monostore_gauge(X)
    if g is None:
        return
    Y = apply_switching(X, g)
    assert Y == as_underlying(X)
    assert np.array_equal(build_H_gamma(Y).to_complex().real, adjacency_matrix(X))


def test_matmul_int64_and_bigint_paths_agree():
    big = 2**40
    m = E([[big, OMEGA], [Eisenstein(3, -big), 1]])
    got = m @ m
    # entrywise reference in pure Python
    for i in range(2):
        for j in range(2):
            want = sum((m[i, k] * m[k, j] for k in range(2)), Eisenstein())
            assert got[i, j] == want
    small = E([[1, OMEGA], [OMEGA2, 2]])
    assert (small @ small)[0, 1] == OMEGA + OMEGA * 2

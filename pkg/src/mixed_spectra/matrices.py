"""Exact and numeric matrices attached to a mixed graph.

Exact matrices hold Eisenstein entries as two object arrays of Python ints,
``A + w*B``, so products never overflow and equality is ring equality.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .eisenstein import Eisenstein
from .graph import Edge, Graph, GraphError, MixedGraph, underlying_graph
from .report import IDENTITY, TheoremReport

SQRT3_2 = np.sqrt(3.0) / 2.0
# every partial sum of an int64 product must stay below this
_INT64_SAFE = 2**62


def _int_array(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


class EisensteinMatrix:
    """Dense matrix over Z[w]."""

    __slots__ = ("a", "b")

    def __init__(self, a: np.ndarray, b: np.ndarray):
        if a.shape != b.shape or a.ndim != 2:
            raise ValueError("component shapes differ")
        self.a = a
        self.b = b

    @classmethod
    def zeros(cls, rows: int, cols: int) -> EisensteinMatrix:
        return cls(_int_array(rows, cols), _int_array(rows, cols))

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> EisensteinMatrix:
        m = cls.zeros(n, n)
        for i in range(n):
            m.a[i, i] = scale
        return m

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Eisenstein | int]]) -> EisensteinMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        m = cls.zeros(r, c)
        for i, row in enumerate(rows):
            if len(row) != c:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                m[i, j] = x
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __getitem__(self, ij: tuple[int, int]) -> Eisenstein:
        return Eisenstein(int(self.a[ij]), int(self.b[ij]))

    def __setitem__(self, ij: tuple[int, int], x: Eisenstein | int) -> None:
        x = Eisenstein.coerce(x)
        self.a[ij] = x.a
        self.b[ij] = x.b

    def copy(self) -> EisensteinMatrix:
        return type(self)(self.a.copy(), self.b.copy())

    def __add__(self, other: EisensteinMatrix) -> EisensteinMatrix:
        return EisensteinMatrix(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinMatrix) -> EisensteinMatrix:
        return EisensteinMatrix(self.a - other.a, self.b - other.b)

    def max_abs(self) -> int:
        if not self.a.size:
            return 0
        return max(max(map(abs, self.a.flat)), max(map(abs, self.b.flat)))

    def __matmul__(self, other: EisensteinMatrix) -> EisensteinMatrix:
        # (A + wB)(C + wD) = (AC - BD) + w(AD + BC - BD)
        inner = self.shape[1]
        bound = 3 * max(inner, 1) * self.max_abs() * other.max_abs()
        if bound < _INT64_SAFE:
            a, b = self.a.astype(np.int64), self.b.astype(np.int64)
            c, d = other.a.astype(np.int64), other.b.astype(np.int64)
        else:
            a, b, c, d = self.a, self.b, other.a, other.b
        ac, bd, ad, bc = a @ c, b @ d, a @ d, b @ c
        re, om = ac - bd, ad + bc - bd
        if re.dtype != object:
            re = re.astype(object)
            om = om.astype(object)
        return EisensteinMatrix(re, om)

    def scale(self, k: int) -> EisensteinMatrix:
        return EisensteinMatrix(self.a * k, self.b * k)

    def conj(self) -> EisensteinMatrix:
        return EisensteinMatrix(self.a - self.b, -self.b)

    @property
    def H(self) -> EisensteinMatrix:
        """Conjugate transpose."""
        c = self.conj()
        return EisensteinMatrix(c.a.T.copy(), c.b.T.copy())

    def trace(self) -> Eisenstein:
        n = min(self.shape)
        return Eisenstein(
            sum((int(self.a[i, i]) for i in range(n)), 0),
            sum((int(self.b[i, i]) for i in range(n)), 0),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, EisensteinMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and bool(np.all(self.a == other.a))
            and bool(np.all(self.b == other.b))
        )

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self, other: EisensteinMatrix) -> tuple[int, int] | None:
        """Index of the first differing entry (row-major), or None when equal."""
        if self.shape != other.shape:
            return (-1, -1)
        diff = (self.a != other.a) | (self.b != other.b)
        idx = np.argwhere(diff)
        return tuple(int(t) for t in idx[0]) if len(idx) else None

    def to_complex(self) -> np.ndarray:
        a = self.a.astype(float)
        b = self.b.astype(float)
        return (a - 0.5 * b) + 1j * (SQRT3_2 * b)

    def is_hermitian(self) -> bool:
        return self.shape[0] == self.shape[1] and self == self.H

    def rows(self) -> list[list[Eisenstein]]:
        r, c = self.shape
        return [[self[i, j] for j in range(c)] for i in range(r)]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows())
        return f"{type(self).__name__}([{body}])"


class HermitianMatrixExact(EisensteinMatrix):
    """Square Eisenstein matrix equal to its conjugate transpose (so the diagonal is real)."""

    __slots__ = ()

    def __init__(self, a: np.ndarray, b: np.ndarray):
        super().__init__(a, b)
        if not self.is_hermitian():
            raise ValueError("matrix is not Hermitian")

    @classmethod
    def from_matrix(cls, m: EisensteinMatrix) -> HermitianMatrixExact:
        return cls(m.a, m.b)

    @property
    def n(self) -> int:
        return self.shape[0]


@dataclass(frozen=True)
class IncidenceMatrixExact:
    """The gamma-incidence matrix with its column-to-edge assignment."""

    matrix: EisensteinMatrix
    edge_order: tuple[Edge, ...]

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def m(self) -> int:
        return self.matrix.shape[1]


def _h_entry_powers(X: MixedGraph):
    for e in X.edges():
        if e.directed:
            yield e.u, e.v, 1
            yield e.v, e.u, 2
        else:
            yield e.u, e.v, 0
            yield e.v, e.u, 0


def build_H_gamma(X: MixedGraph) -> HermitianMatrixExact:
    m = EisensteinMatrix.zeros(X.n, X.n)
    for i, j, p in _h_entry_powers(X):
        m[i, j] = Eisenstein.unit(p)
    return HermitianMatrixExact.from_matrix(m)


def build_H_alpha(X: MixedGraph, theta: float) -> np.ndarray:
    """Numeric H_alpha for ``alpha = exp(i*theta)``."""
    alpha = cmath.exp(1j * theta)
    h = np.zeros((X.n, X.n), dtype=complex)
    for i, j, p in _h_entry_powers(X):
        h[i, j] = (1.0, alpha, alpha.conjugate())[p]
    return h


def adjacency_matrix(X: MixedGraph) -> np.ndarray:
    """0/1 adjacency of the underlying graph."""
    a = np.zeros((X.n, X.n))
    for u, v in underlying_graph(X).edges:
        a[u, v] = a[v, u] = 1.0
    return a


def degree_matrix(X: MixedGraph) -> HermitianMatrixExact:
    m = EisensteinMatrix.zeros(X.n, X.n)
    for u, d in enumerate(X.degrees()):
        m.a[u, u] = d
    return HermitianMatrixExact.from_matrix(m)


def build_incidence(X: MixedGraph) -> IncidenceMatrixExact:
    """n x m gamma-incidence matrix; column j is the j-th edge of ``X.edges()``.

    Digon endpoints get 1, an arc's terminal vertex w and its initial vertex w**2.
    """
    edges = tuple(X.edges())
    b = EisensteinMatrix.zeros(X.n, len(edges))
    for j, e in enumerate(edges):
        if e.directed:
            b[e.u, j] = Eisenstein.unit(2)
            b[e.v, j] = Eisenstein.unit(1)
        else:
            b[e.u, j] = 1
            b[e.v, j] = 1
    return IncidenceMatrixExact(b, edges)


def classic_incidence(G: Graph) -> EisensteinMatrix:
    """0/1 vertex-edge incidence of an unoriented graph, columns in sorted edge order."""
    edges = G.sorted_edges()
    b = EisensteinMatrix.zeros(G.n, len(edges))
    for j, (u, v) in enumerate(edges):
        b.a[u, j] = 1
        b.a[v, j] = 1
    return b


def build_Q(X: MixedGraph) -> HermitianMatrixExact:
    """Gamma-signless Laplacian, computed as ``B B*`` and cross-checked against ``D + H``."""
    b = build_incidence(X).matrix
    q = b @ b.H
    expected = degree_matrix(X) + build_H_gamma(X)
    if q != expected:
        raise AssertionError(
            f"B B* != D + H at entry {q.first_difference(expected)} for {X}"
        )
    return HermitianMatrixExact.from_matrix(q)


def as_underlying(X: MixedGraph) -> MixedGraph:
    """The underlying graph as an all-digon mixed graph."""
    return MixedGraph(X.n, frozenset(e.key for e in X.edges()), frozenset())


def _gauge_powers(X: MixedGraph, g: Mapping[int, int] | Sequence[int]) -> list[int]:
    if isinstance(g, Mapping):
        missing = [v for v in range(X.n) if v not in g]
        if missing:
            raise GraphError(f"gauge is missing vertices {missing}")
        powers = [g[v] for v in range(X.n)]
    else:
        powers = list(g)
        if len(powers) != X.n:
            raise GraphError(f"gauge has {len(powers)} entries, graph has {X.n} vertices")
    return [int(p) % 3 for p in powers]


def apply_switching(X: MixedGraph, g: Mapping[int, int] | Sequence[int]) -> MixedGraph:
    """The mixed graph whose H_gamma is ``S* H_gamma(X) S`` with ``S = diag(w**g[v])``.

    Degrees are untouched, so Q transforms the same way and the spectra agree.
    """
    powers = _gauge_powers(X, g)
    digons, arcs = [], []
    for e in X.edges():
        u, v = e.u, e.v
        p = (-powers[u] + X.h_power(u, v) + powers[v]) % 3
        if p == 0:
            digons.append((u, v))
        elif p == 1:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return MixedGraph.from_edges(X.n, digons, arcs)


def switching_matrix(powers: Sequence[int]) -> EisensteinMatrix:
    s = EisensteinMatrix.zeros(len(powers), len(powers))
    for i, p in enumerate(powers):
        s[i, i] = Eisenstein.unit(p)
    return s


def verify_incidence_factorization(X: MixedGraph) -> TheoremReport:
    """Exact check of the three incidence facts.

    The gamma-incidence matrix of the underlying graph is its 0/1 incidence
    matrix, ``B B* = D + H_gamma(X)`` and ``B* B = 2I + H_gamma(AL_X)``.
    """
    from .linegraph import algebraic_line_graph

    b = build_incidence(X).matrix
    checks: dict[str, bool] = {}
    witness = None

    b_flat = build_incidence(as_underlying(X)).matrix
    b_classic = classic_incidence(underlying_graph(X))
    checks["underlying_incidence"] = b_flat == b_classic
    if not checks["underlying_incidence"]:
        witness = {"check": "underlying_incidence", "entry": b_flat.first_difference(b_classic)}

    q = b @ b.H
    dh = degree_matrix(X) + build_H_gamma(X)
    checks["q_factorization"] = q == dh
    if not checks["q_factorization"] and witness is None:
        witness = {"check": "q_factorization", "entry": q.first_difference(dh)}

    gram = b.H @ b
    if X.m:
        line = EisensteinMatrix.identity(X.m, 2) + build_H_gamma(algebraic_line_graph(X))
        checks["line_gram"] = gram == line
        if not checks["line_gram"] and witness is None:
            witness = {"check": "line_gram", "entry": gram.first_difference(line)}
    else:
        checks["line_gram"] = gram.shape == (0, 0)

    return TheoremReport(
        "incidence_factorization",
        IDENTITY,
        True,
        all(checks.values()),
        witness=witness,
        details=checks,
    )

"""Mixed graphs: digons (unoriented edges) and arcs (oriented edges) on 0..n-1."""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence


class GraphError(ValueError):
    """Invalid graph, vertex, walk or generator parameters."""


class Edge(NamedTuple):
    """One connection of a mixed graph.

    For an arc, ``u -> v``; for a digon ``u < v`` and the order carries no meaning.
    """

    u: int
    v: int
    directed: bool

    @property
    def key(self) -> tuple[int, int]:
        return (min(self.u, self.v), max(self.u, self.v))

    def __str__(self) -> str:
        return f"{self.u} {'->' if self.directed else '--'} {self.v}"


@dataclass(frozen=True)
class Graph:
    """Simple unoriented graph."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, u: int) -> int:
        return sum(1 for e in self.edges if u in e)


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise GraphError("a walk needs at least one vertex")


@dataclass(frozen=True)
class MixedGraph:
    """A simple mixed graph.

    ``digons`` holds unordered pairs normalised to ``(min, max)``; ``arcs``
    holds ordered pairs ``(u, v)`` meaning ``u -> v``. Each vertex pair
    carries at most one connection, so anti-parallel arcs are rejected:
    declare a digon instead.
    """

    n: int
    digons: frozenset[tuple[int, int]] = frozenset()
    arcs: frozenset[tuple[int, int]] = frozenset()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a mixed graph needs at least one vertex")
        index: dict[tuple[int, int], Edge] = {}
        digons = set()
        for u, v in self.digons:
            self._check_pair(u, v)
            key = (min(u, v), max(u, v))
            if key in index:
                raise GraphError(f"pair {key} declared twice")
            index[key] = Edge(key[0], key[1], False)
            digons.add(key)
        for u, v in self.arcs:
            self._check_pair(u, v)
            key = (min(u, v), max(u, v))
            if key in index:
                other = index[key]
                if other.directed and other.u == v:
                    raise GraphError(
                        f"anti-parallel arcs {v}->{u} and {u}->{v}; declare a digon"
                    )
                raise GraphError(f"pair {key} declared twice")
            index[key] = Edge(u, v, True)
        object.__setattr__(self, "digons", frozenset(digons))
        object.__setattr__(self, "arcs", frozenset((u, v) for u, v in self.arcs))
        object.__setattr__(self, "_index", index)

    def _check_pair(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"pair ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, digons: Iterable = (), arcs: Iterable = ()) -> MixedGraph:
        return cls(n, frozenset(map(tuple, digons)), frozenset(map(tuple, arcs)))

    @property
    def k(self) -> int:
        """Number of arcs."""
        return len(self.arcs)

    @property
    def l(self) -> int:  # noqa: E743
        """Number of digons."""
        return len(self.digons)

    @property
    def m(self) -> int:
        return len(self._index)

    def edges(self) -> list[Edge]:
        """All connections in canonical order: digons first, then arcs, each by (min, max)."""
        digons = [self._index[key] for key in sorted(self.digons)]
        arcs = sorted((self._index[(min(a), max(a))] for a in self.arcs), key=lambda e: e.key)
        return digons + arcs

    def connection(self, u: int, v: int) -> Edge | None:
        return self._index.get((min(u, v), max(u, v)))

    def h_power(self, u: int, v: int) -> int | None:
        """Exponent p with ``H_gamma[u, v] == w**p``, or None when u, v are not adjacent."""
        e = self.connection(u, v)
        if e is None:
            return None
        if not e.directed:
            return 0
        return 1 if e.u == u else 2

    def degree(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range for n={self.n}")
        return sum(1 for key in self._index if u in key)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self._index:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbours(self) -> list[list[int]]:
        return underlying_graph(self).neighbours()

    def __str__(self) -> str:
        body = ", ".join(str(e) for e in self.edges())
        return f"MixedGraph(n={self.n}: {body})"


def underlying_graph(X: MixedGraph) -> Graph:
    return Graph(X.n, frozenset(e.key for e in X.edges()))


def degree(X: MixedGraph, u: int) -> int:
    return X.degree(u)


def components(X: MixedGraph | Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    adj = X.neighbours()
    seen = [False] * X.n
    out = []
    for s in range(X.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(X: MixedGraph | Graph) -> bool:
    if X.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return len(components(X)) == 1


def is_bipartite(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring ``(class0, class1)`` of G, or None if G has an odd cycle."""
    adj = G.neighbours()
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return (
        frozenset(i for i in range(G.n) if colour[i] == 0),
        frozenset(i for i in range(G.n) if colour[i] == 1),
    )


def walk_power(X: MixedGraph, W: Walk | Sequence[int]) -> int:
    """Exponent of the gamma-weight of a walk, i.e. ``h(W) == w**p``."""
    verts = W.vertices if isinstance(W, Walk) else tuple(W)
    if not verts:
        raise GraphError("a walk needs at least one vertex")
    for u in verts:
        if not 0 <= u < X.n:
            raise GraphError(f"vertex {u} out of range for n={X.n}")
    total = 0
    for u, v in zip(verts, verts[1:]):
        p = X.h_power(u, v)
        if p is None:
            raise GraphError(f"{u} and {v} are not adjacent")
        total += p
    return total % 3


def gamma_weight(X: MixedGraph, W: Walk | Sequence[int]):
    """Product of the H_gamma entries along W, as an Eisenstein unit."""
    from .eisenstein import Eisenstein

    return Eisenstein.unit(walk_power(X, W))


def monostore_gauge(X: MixedGraph) -> tuple[int, ...] | None:
    """Switching gauge that turns H_gamma(X) into the 0/1 adjacency of its underlying graph.

    Returns exponents ``g`` (``S = diag(w**g[v])``) such that
    ``conj(w**g[u]) * H[u, v] * w**g[v] == 1`` on every connection, or None when
    some cycle has gamma-weight other than 1. One BFS tree per component;
    every non-tree connection is then checked against the propagated potential.
    """
    adj = X.neighbours()
    g: list[int | None] = [None] * X.n
    for root in range(X.n):
        if g[root] is not None:
            continue
        g[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                # need -g[u] + p(u,w) + g[w] == 0 (mod 3)
                want = (g[u] - X.h_power(u, w)) % 3
                if g[w] is None:
                    g[w] = want
                    queue.append(w)
                elif g[w] != want:
                    return None
    return tuple(g)  # type: ignore[arg-type]


def is_monostore(X: MixedGraph) -> bool:
    return monostore_gauge(X) is not None


def simple_cycles(G: Graph) -> Iterator[tuple[int, ...]]:
    """Every simple cycle (length >= 3) of G exactly once, as a closed-free vertex tuple.

    Brute force; intended for small graphs and test oracles.
    """
    adj = [set(a) for a in G.neighbours()]
    for start in range(G.n):
        stack = [(start, (start,))]
        while stack:
            u, path = stack.pop()
            for w in adj[u]:
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    yield path
                elif w > start and w not in path:
                    stack.append((w, path + (w,)))


def random_mixed_graph(n: int, p_digon: float, p_arc: float, seed: int) -> MixedGraph:
    """Each unordered pair independently: digon w.p. p_digon, arc w.p. p_arc (uniform direction)."""
    if n < 1:
        raise GraphError("n must be positive")
    if p_digon < 0 or p_arc < 0 or p_digon + p_arc > 1:
        raise GraphError(f"invalid probabilities p_digon={p_digon}, p_arc={p_arc}")
    rng = random.Random(seed)
    digons, arcs = [], []
    for u, v in itertools.combinations(range(n), 2):
        r = rng.random()
        if r < p_digon:
            digons.append((u, v))
        elif r < p_digon + p_arc:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return MixedGraph.from_edges(n, digons, arcs)


def induced_subgraph(X: MixedGraph, vertices: Sequence[int]) -> MixedGraph:
    """Subgraph on ``vertices``, relabelled 0.. in the given order."""
    pos = {v: i for i, v in enumerate(vertices)}
    digons, arcs = [], []
    for e in X.edges():
        if e.u in pos and e.v in pos:
            (arcs if e.directed else digons).append((pos[e.u], pos[e.v]))
    return MixedGraph.from_edges(len(vertices), digons, arcs)

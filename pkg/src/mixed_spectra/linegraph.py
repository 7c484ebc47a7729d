"""Classic line graphs and the algebraic line mixed graph of a mixed graph."""

from __future__ import annotations

import itertools
from typing import Sequence

from .graph import Edge, Graph, GraphError, MixedGraph, underlying_graph
from .matrices import EisensteinMatrix, build_H_gamma, build_incidence
from .report import IDENTITY, TheoremReport


class RuleConflict(AssertionError):
    """Two construction rules fired for the same pair of edges."""


def classic_line_graph(G: Graph, edge_order: Sequence[tuple[int, int]] | None = None) -> Graph:
    """Line graph of G; vertex i is ``edge_order[i]`` (sorted edges by default)."""
    edges = G.sorted_edges() if edge_order is None else [tuple(sorted(e)) for e in edge_order]
    if sorted(edges) != G.sorted_edges():
        raise GraphError("edge_order is not a permutation of the edges of G")
    out = set()
    for i, j in itertools.combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            out.add((i, j))
    return Graph(len(edges), frozenset(out))


def _initial(e: Edge) -> int:
    return e.u


def _terminal(e: Edge) -> int:
    return e.v


def _rules(ei: Edge, ej: Edge) -> list[tuple[str, int]]:
    """Every rule that fires for the ordered pair (ei, ej), as (rule, h_power of ei->ej)."""
    fired = []
    ends_i, ends_j = {ei.u, ei.v}, {ej.u, ej.v}
    if not ends_i & ends_j:
        return fired
    if ei.directed and ej.directed:
        if _terminal(ei) == _initial(ej):
            fired.append(("arc-arc", 1))
        if _terminal(ej) == _initial(ei):
            fired.append(("arc-arc", 2))
        if _initial(ei) == _initial(ej) or _terminal(ei) == _terminal(ej):
            fired.append(("same-end arcs", 0))
    elif not ei.directed and ej.directed:
        if _terminal(ej) in ends_i:
            fired.append(("digon-arc", 1))
        if _initial(ej) in ends_i:
            fired.append(("arc-digon", 2))
    elif ei.directed and not ej.directed:
        if _terminal(ei) in ends_j:
            fired.append(("digon-arc", 2))
        if _initial(ei) in ends_j:
            fired.append(("arc-digon", 1))
    else:
        fired.append(("digon-digon", 0))
    return fired


def algebraic_line_graph(X: MixedGraph) -> MixedGraph:
    """AL_X: one vertex per connection of X, in canonical edge order.

    Arc e_i -> arc e_j when e_i ends where e_j starts; digon -> arc when the
    arc ends on the digon; arc -> digon when the arc starts on it; a digon
    between arcs with a common start or a common end, and between digons
    sharing a vertex.
    """
    edges = X.edges()
    if not edges:
        raise GraphError("an edgeless graph has an empty line graph")
    digons, arcs = [], []
    for i, j in itertools.combinations(range(len(edges)), 2):
        fired = _rules(edges[i], edges[j])
        if not fired:
            continue
        if len(fired) > 1:
            raise RuleConflict(f"rules {fired} all fire for {edges[i]} and {edges[j]}")
        _, p = fired[0]
        if p == 0:
            digons.append((i, j))
        elif p == 1:
            arcs.append((i, j))
        else:
            arcs.append((j, i))
    return MixedGraph.from_edges(len(edges), digons, arcs)


def line_gram_matrix(X: MixedGraph) -> EisensteinMatrix:
    b = build_incidence(X).matrix
    return b.H @ b


def verify_line_gram(X: MixedGraph) -> TheoremReport:
    """``B* B == 2I + H_gamma(AL_X)`` entrywise in Z[w]."""
    lhs = line_gram_matrix(X)
    m = X.m
    if m == 0:
        return TheoremReport(
            "line_gram", IDENTITY, True, lhs.shape == (0, 0), lhs="0x0", rhs="0x0"
        )
    rhs = EisensteinMatrix.identity(m, 2) + build_H_gamma(algebraic_line_graph(X))
    bad = lhs.first_difference(rhs)
    witness = None
    if bad is not None:
        witness = {"entry": bad, "lhs": str(lhs[bad]), "rhs": str(rhs[bad])}
    return TheoremReport(
        "line_gram", IDENTITY, True, bad is None, lhs=f"{m}x{m}", rhs=f"{m}x{m}", witness=witness
    )


def verify_line_graph_underlying(X: MixedGraph) -> TheoremReport:
    """The underlying graph of AL_X is the line graph of the underlying graph of X."""
    expected = classic_line_graph(underlying_graph(X), [e.key for e in X.edges()])
    if X.m == 0:
        return TheoremReport("line_graph_underlying", IDENTITY, True, expected.n == 0)
    got = underlying_graph(algebraic_line_graph(X))
    ok = got.n == expected.n and got.edges == expected.edges
    witness = None
    if not ok:
        witness = {
            "missing": sorted(expected.edges - got.edges),
            "extra": sorted(got.edges - expected.edges),
        }
    return TheoremReport(
        "line_graph_underlying",
        IDENTITY,
        True,
        ok,
        lhs=len(got.edges),
        rhs=len(expected.edges),
        witness=witness,
    )

import itertools

import pytest
from hypothesis import strategies as st

from mixed_spectra.graph import MixedGraph


def digon(n, *pairs):
    return MixedGraph.from_edges(n, digons=pairs)


SINGLE_DIGON = MixedGraph.from_edges(2, digons=[(0, 1)])
SINGLE_ARC = MixedGraph.from_edges(2, arcs=[(0, 1)])
K3 = MixedGraph.from_edges(3, digons=[(0, 1), (1, 2), (0, 2)])
DIRECTED_TRIANGLE = MixedGraph.from_edges(3, arcs=[(0, 1), (1, 2), (2, 0)])
C4 = MixedGraph.from_edges(4, digons=[(0, 1), (1, 2), (2, 3), (0, 3)])
C4_ONE_ARC = MixedGraph.from_edges(4, digons=[(1, 2), (2, 3), (0, 3)], arcs=[(0, 1)])
DIRECTED_C4 = MixedGraph.from_edges(4, arcs=[(0, 1), (1, 2), (2, 3), (3, 0)])
STAR3 = MixedGraph.from_edges(4, digons=[(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def named_graphs():
    return {
        "single_digon": SINGLE_DIGON,
        "single_arc": SINGLE_ARC,
        "k3": K3,
        "directed_triangle": DIRECTED_TRIANGLE,
        "c4": C4,
        "c4_one_arc": C4_ONE_ARC,
        "directed_c4": DIRECTED_C4,
        "star3": STAR3,
    }


@st.composite
def mixed_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    digons, arcs = [], []
    for u, v in itertools.combinations(range(n), 2):
        kind = draw(st.sampled_from(("none", "digon", "fwd", "back")))
        if kind == "digon":
            digons.append((u, v))
        elif kind == "fwd":
            arcs.append((u, v))
        elif kind == "back":
            arcs.append((v, u))
    return MixedGraph.from_edges(n, digons, arcs)


def gauges(n):
    return st.lists(st.integers(0, 2), min_size=n, max_size=n)

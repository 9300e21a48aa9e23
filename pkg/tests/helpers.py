"""Shared graph builders and hypothesis strategies for the test suite."""

import itertools

from hypothesis import strategies as st

from falk3 import SignedGraph, loop, neg, pos


def hub4_mixed() -> SignedGraph:
    """Four vertices, eleven hyperplanes: looped hub 1, doubled 12/13/14/23,
    single positive 24 and 34.  Census (9,2,0,3,0,0,2,1), phi3 = 37."""
    return SignedGraph(4, [
        pos(1, 2), pos(1, 4), pos(3, 4), pos(2, 3), pos(2, 4), pos(1, 3),
        neg(1, 2), neg(1, 4), neg(1, 3), neg(2, 3), loop(1),
    ])


def b2_graph() -> SignedGraph:
    """The forbidden pattern itself: doubled pair plus loops at both ends."""
    return SignedGraph(2, [pos(1, 2), neg(1, 2), loop(1), loop(2)])


def graph_from_states(ell, pair_states, loop_bits) -> SignedGraph:
    """Build a graph from per-pair states (0 none, 1 +, 2 -, 3 both) and loop bits."""
    pairs = list(itertools.combinations(range(1, ell + 1), 2))
    edges = [pos(i, j) for (i, j), s in zip(pairs, pair_states) if s in (1, 3)]
    edges += [neg(i, j) for (i, j), s in zip(pairs, pair_states) if s in (2, 3)]
    edges += [loop(v) for v, bit in enumerate(loop_bits, start=1) if bit]
    return SignedGraph(ell, edges)


@st.composite
def signed_graphs(draw, min_ell=1, max_ell=5, allow_b2=True):
    ell = draw(st.integers(min_ell, max_ell))
    n_pairs = ell * (ell - 1) // 2
    states = draw(st.tuples(*[st.integers(0, 3)] * n_pairs))
    loops = draw(st.tuples(*[st.booleans()] * ell))
    g = graph_from_states(ell, states, loops)
    if not allow_b2 and g.contains_b2():
        # drop one loop of each witness instead of rejecting the draw
        keep = set(g.loop_vertices())
        for w in g.b2_witnesses():
            looped = [g.edge(k).i for k in w if g.edge(k).is_loop]
            keep.discard(looped[0])
        g = graph_from_states(ell, states, [v in keep for v in range(1, ell + 1)])
    return g


@st.composite
def graphs_with_sigma(draw, **kwargs):
    g = draw(signed_graphs(**kwargs))
    sigma = draw(st.tuples(*[st.sampled_from((1, -1))] * g.ell))
    return g, sigma

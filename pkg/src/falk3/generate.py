"""Seeded random and exhaustive streams of B2-free signed graphs.

Labels always come out densely as 1..n in the order: positive edges by
ascending vertex pair, then negative edges by ascending pair, then loops
by ascending vertex.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import SignedGraph, loop, neg, pos


@dataclass(frozen=True)
class GenConfig:
    """Sampler parameters; (seed, config) fully determines the output stream."""

    ell: int
    edge_prob_pos: float = 0.5
    edge_prob_neg: float = 0.3
    loop_prob: float = 0.3
    seed: int = 0
    samples: int = 1

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError(f"ell must be at least 1, got {self.ell}")
        for name in ("edge_prob_pos", "edge_prob_neg", "loop_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        if self.samples < 1:
            raise ValueError(f"samples must be at least 1, got {self.samples}")


def _build(ell, pos_pairs, neg_pairs, loops) -> SignedGraph:
    edges = [pos(i, j) for i, j in pos_pairs]
    edges += [neg(i, j) for i, j in neg_pairs]
    edges += [loop(v) for v in sorted(loops)]
    return SignedGraph(ell, edges)


def random_no_b2(cfg: GenConfig, rng=None) -> SignedGraph:
    """One B2-free sample.

    The draw order is the reproducibility contract (PCG64 via numpy's
    default_rng): for each vertex pair in ascending order one uniform for
    the positive then one for the negative edge, then one uniform per
    vertex for its loop, then one integer draw per repair step.  A B2
    pattern is repaired by deleting one uniformly chosen loop of the first
    remaining witness until no witness is left.
    """
    rng = np.random.default_rng(cfg.seed) if rng is None else rng
    pos_pairs = []
    neg_pairs = []
    for i, j in itertools.combinations(range(1, cfg.ell + 1), 2):
        if rng.random() < cfg.edge_prob_pos:
            pos_pairs.append((i, j))
        if rng.random() < cfg.edge_prob_neg:
            neg_pairs.append((i, j))
    loops = [v for v in range(1, cfg.ell + 1) if rng.random() < cfg.loop_prob]
    while True:
        g = _build(cfg.ell, pos_pairs, neg_pairs, loops)
        witnesses = g.b2_witnesses()
        if not witnesses:
            return g
        looped = sorted(g.edge(k).i for k in witnesses[0] if g.edge(k).is_loop)
        loops.remove(looped[int(rng.integers(0, 2))])


def sample_stream(cfg: GenConfig):
    """Yield cfg.samples graphs from a single PCG64 stream seeded with cfg.seed."""
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.samples):
        yield random_no_b2(cfg, rng)


def enumerate_all(ell: int, max_n: int | None = None):
    """Every B2-free signed graph on vertices 1..ell, each exactly once.

    Pairs run through the states absent/positive/negative/both and vertices
    through loop absent/present, in a fixed lexicographic order; graphs with
    more than max_n edges are skipped when max_n is given.
    """
    pairs = list(itertools.combinations(range(1, ell + 1), 2))
    edges_per_state = (0, 1, 1, 2)
    for pair_states in itertools.product(range(4), repeat=len(pairs)):
        base = sum(edges_per_state[s] for s in pair_states)
        pos_pairs = [p for p, s in zip(pairs, pair_states) if s in (1, 3)]
        neg_pairs = [p for p, s in zip(pairs, pair_states) if s in (2, 3)]
        for loop_bits in itertools.product((0, 1), repeat=ell):
            n = base + sum(loop_bits)
            if max_n is not None and n > max_n:
                continue
            g = _build(
                ell,
                pos_pairs,
                neg_pairs,
                [v for v, bit in enumerate(loop_bits, start=1) if bit],
            )
            if not g.contains_b2():
                yield g

import logging
from fractions import Fraction
from typing import List, Tuple

import pandas as pds

from .distribution import difference_table
from ..graphs import Graph, ensure_labellable

log = logging.getLogger(__name__)


class EdgeProfile:
    """Exact collision probabilities of a graph under a uniformly random labelling.

    Attributes
    ----------
    m: int
        number of edges
    edge_probabilities: List[Fraction]
        for every edge xy, probability that S_x = S_y
    distance2_pairs: List[Tuple[int, int]]
        pairs of vertices at distance exactly 2
    distance2_probabilities: List[Fraction]
        for every such pair, probability of equal sums
    """
    __slots__ = ['m', 'edges', 'edge_probabilities', 'distance2_pairs', 'distance2_probabilities']

    def __init__(self, m: int, edges, edge_probabilities: List[Fraction], distance2_pairs: List[Tuple[int, int]],
                 distance2_probabilities: List[Fraction]):
        self.m = m
        self.edges = list(edges)
        self.edge_probabilities = edge_probabilities
        self.distance2_pairs = distance2_pairs
        self.distance2_probabilities = distance2_probabilities

    def __repr__(self):
        return f"<EdgeProfile: m={self.m} union sum={float(self.union_sum):.4g}>"

    @property
    def tight_edges(self) -> List[int]:
        """Edges reaching the collision probability 1/m."""
        return [i for i, p in enumerate(self.edge_probabilities) if p == Fraction(1, self.m)]

    @property
    def union_sum(self) -> Fraction:
        return sum(self.edge_probabilities, Fraction(0))

    @property
    def success_lower_bound(self) -> Fraction:
        """Union bound on the probability of a local antimagic labelling, clamped at 0."""
        return max(Fraction(0), 1 - self.union_sum)

    @property
    def distance2_union_sum(self) -> Fraction:
        return sum(self.distance2_probabilities, self.union_sum)

    def to_dictionary(self) -> dict:
        return {
            "m": self.m,
            "edges": [{"edge": list(e), "p": str(p)} for e, p in zip(self.edges, self.edge_probabilities)],
            "tight_edges": self.tight_edges,
            "union_sum": str(self.union_sum),
            "success_lower_bound": str(self.success_lower_bound),
            "distance2_union_sum": str(self.distance2_union_sum)
        }

    def to_dataframe(self) -> pds.DataFrame:
        return pds.DataFrame({
            "u": [e[0] for e in self.edges],
            "v": [e[1] for e in self.edges],
            "p": [str(p) for p in self.edge_probabilities],
            "p_float": [float(p) for p in self.edge_probabilities]
        })


def edge_collision_probability(m: int, dx: int, dy: int, k: int = 1, workers: int = 1) -> Fraction:
    """P[S_x = S_y] for an edge xy with degrees dx, dy in a graph with m edges."""
    if (dx == 1) != (dy == 1):
        return Fraction(0)
    return difference_table(m, dx - 1, dy - 1, k, workers).p(0)


def edge_collision_profile(g: Graph, k: int = 1, distance2: bool = True, workers: int = 1) -> EdgeProfile:
    """Exact collision probabilities of every edge and, optionally, every pair at distance 2.

    For an edge xy the difference S_x - S_y involves the d(x) - 1 and d(y) - 1 edges meeting only one endpoint.
    Two vertices at distance 2 share no edge, so their difference involves d(x) and d(y) edges.

    Raises
    ------
    NotLabellableError
        g has an isolated edge or no edge
    SizeCapExceeded
        a needed table is above ORACLE/max_pairs
    """
    ensure_labellable(g)
    m, degrees = g.m, g.degrees.tolist()
    by_degrees = {}

    def cached(key, compute):
        if key not in by_degrees:
            by_degrees[key] = compute()
        return by_degrees[key]

    edge_probabilities = [
        cached(('edge', degrees[u], degrees[v]),
               lambda u=u, v=v: edge_collision_probability(m, degrees[u], degrees[v], k, workers))
        for u, v in g.edges]
    pairs, pair_probabilities = [], []
    if distance2:
        for v, w in g.distance2_pairs(include_adjacent=False).tolist():
            pairs.append((v, w))
            pair_probabilities.append(cached(('pair', degrees[v], degrees[w]),
                                             lambda v=v, w=w: difference_table(m, degrees[v], degrees[w], k,
                                                                               workers).p(0)))
    log.debug(f"profile of {g}: {len(edge_probabilities)} edges, {len(pairs)} distance-2 pairs")
    return EdgeProfile(m, g.edges, edge_probabilities, pairs, pair_probabilities)

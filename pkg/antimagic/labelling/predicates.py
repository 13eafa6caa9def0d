from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from .labelling import Labelling, VertexSums, vertex_sums
from ..graphs import Graph


class Predicate(Enum):
    LOCAL = 'local'
    DISTANCE2 = 'distance2'
    GLOBAL = 'global'


class ConflictReport:
    """Every vertex pair violating a distinguishing predicate.

    Attributes
    ----------
    predicate: Predicate
        which pairs must be distinguished
    conflicts: List[Tuple[int, int]]
        all violating pairs, each listed once
    """
    __slots__ = ['predicate', 'conflicts']

    def __init__(self, predicate: Predicate, conflicts: List[Tuple[int, int]]):
        self.predicate = predicate
        self.conflicts = conflicts

    @property
    def holds(self) -> bool:
        return not self.conflicts

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return f"<ConflictReport: {self.predicate.value} holds={self.holds} conflicts={len(self.conflicts)}>"

    def to_dictionary(self, g: Graph or None = None) -> dict:
        name = (lambda v: g.original_id(v)) if g is not None else int
        return {
            "predicate": self.predicate.value,
            "holds": self.holds,
            "conflicts": [[name(v), name(w)] for v, w in self.conflicts]
        }


def _pairs(first: np.ndarray, second: np.ndarray) -> List[Tuple[int, int]]:
    return list(zip(first.tolist(), second.tolist()))


def check_local_antimagic(g: Graph, s: VertexSums) -> ConflictReport:
    """Adjacent vertices with equal sums, reported as edges in edge-list order.

    Examples
    --------
    >>> from antimagic.graphs import generate
    >>> from antimagic.labelling import Labelling, vertex_sums
    >>> g = generate('path', (3,))
    >>> check_local_antimagic(g, vertex_sums(g, Labelling([1, 2]))).holds
    True
    """
    sums = s.sums
    clash = np.flatnonzero(sums[g.heads] == sums[g.tails])
    return ConflictReport(Predicate.LOCAL, _pairs(g.heads[clash], g.tails[clash]))


def check_distance2(g: Graph, s: VertexSums) -> ConflictReport:
    """Pairs v < w at distance 1 or 2 with equal sums, a pair reachable both ways is listed once."""
    sums = s.sums
    pairs = g.distance2_pairs()
    clash = sums[pairs[:, 0]] == sums[pairs[:, 1]]
    return ConflictReport(Predicate.DISTANCE2, _pairs(pairs[clash, 0], pairs[clash, 1]))


def check_global_antimagic(g: Graph, s: VertexSums) -> ConflictReport:
    """All pairs v < w of distinct vertices with equal sums, found by sorting the sums."""
    sums = s.sums
    order = np.argsort(sums, kind='stable')
    sorted_sums = sums[order]
    conflicts = []
    for group in np.split(order, np.flatnonzero(np.diff(sorted_sums)) + 1):
        if group.size > 1:
            group = sorted(group.tolist())
            conflicts += [(v, w) for i, v in enumerate(group) for w in group[i + 1:]]
    return ConflictReport(Predicate.GLOBAL, sorted(conflicts))


_CHECKS = {
    Predicate.LOCAL: check_local_antimagic,
    Predicate.DISTANCE2: check_distance2,
    Predicate.GLOBAL: check_global_antimagic
}


def check(g: Graph, s: VertexSums, predicate: Predicate or str) -> ConflictReport:
    return _CHECKS[Predicate(predicate)](g, s)


def verify(g: Graph, labelling: Labelling) -> Dict[Predicate, ConflictReport]:
    """Computes the sums once and evaluates the three predicates."""
    s = vertex_sums(g, labelling)
    return {predicate: check_fn(g, s) for predicate, check_fn in _CHECKS.items()}


def is_local_antimagic(g: Graph, labelling: Labelling) -> bool:
    return check_local_antimagic(g, vertex_sums(g, labelling)).holds

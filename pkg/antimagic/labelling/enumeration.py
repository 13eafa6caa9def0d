"""Exhaustive scan of every labelling of a small graph.

Labellings are visited in lexicographic order of their label sequence, in batches evaluated with numpy. The scan can
be split by the label of the first edge, partial results merge deterministically whatever the worker count.
"""
import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator, List, Sequence

import numpy as np

from .labelling import Labelling
from ..config import chromatic as chromatic_cfg, sampler as sampler_cfg
from ..core import progress_bar, split_work
from ..core.exceptions import SizeCapExceeded
from ..graphs import Graph

log = logging.getLogger(__name__)


def check_m_cap(m: int, m_cap: int or None) -> int:
    """Validates the edge cap of an exhaustive scan and returns the effective cap."""
    default_cap = chromatic_cfg.m_cap()
    m_cap = default_cap if m_cap is None else int(m_cap)
    limit = chromatic_cfg.m_cap_limit()
    if m_cap > limit:
        raise SizeCapExceeded(f"m_cap={m_cap} is above the hard limit {limit}")
    if m > m_cap:
        raise SizeCapExceeded(f"exhaustive scan of {math.factorial(m)} labellings ({m} edges) exceeds m_cap={m_cap}")
    if m > default_cap:
        log.warning(f"scanning all {math.factorial(m)} labellings of a {m} edges graph, this may take a while")
    return m_cap


def permutation_batches(values: Sequence[int], batch_size: int, first: int or None = None) -> Iterator[np.ndarray]:
    """Yields every permutation of values in lexicographic order as (batch, len(values)) int64 arrays.

    When first is given only the permutations starting with it are produced.
    """
    values = sorted(values)
    width = len(values)
    if first is None:
        permutations = itertools.permutations(values)
    else:
        rest = [v for v in values if v != first]
        permutations = ((first,) + p for p in itertools.permutations(rest))
    while True:
        chunk = np.fromiter(itertools.chain.from_iterable(itertools.islice(permutations, batch_size)),
                            dtype=np.int64)
        if chunk.size == 0:
            return
        yield chunk.reshape(-1, width)


class Census:
    """Counts gathered over all m! labellings of a graph.

    Attributes
    ----------
    m: int
        number of edges
    offset_k: int
        smallest label
    total: int
        number of labellings scanned, m!
    local_count: int
        local antimagic labellings
    distance2_count: int
        labellings distinguishing every pair at distance at most 2
    global_count: int
        antimagic labellings
    edge_collisions: np.ndarray
        for every edge, number of labellings giving both endpoints the same sum
    min_distinct: int or None
        smallest number of distinct sums over local antimagic labellings
    witness: Labelling or None
        lexicographically smallest local antimagic labelling reaching min_distinct
    """
    __slots__ = ['m', 'offset_k', 'total', 'local_count', 'distance2_count', 'global_count', 'edge_collisions',
                 'min_distinct', 'witness']

    def __init__(self, m: int, offset_k: int, total: int = 0, local_count: int = 0, distance2_count: int = 0,
                 global_count: int = 0, edge_collisions: np.ndarray or None = None, min_distinct: int or None = None,
                 witness: Labelling or None = None):
        self.m = m
        self.offset_k = offset_k
        self.total = total
        self.local_count = local_count
        self.distance2_count = distance2_count
        self.global_count = global_count
        self.edge_collisions = edge_collisions if edge_collisions is not None else np.zeros(m, dtype=np.int64)
        self.min_distinct = min_distinct
        self.witness = witness

    def __repr__(self):
        return f"<Census: {self.local_count}/{self.total} local antimagic labellings>"

    def merge(self, other: "Census") -> "Census":
        """Combines two scans of disjoint labelling sets, self must hold the lexicographically smaller part."""
        if other.min_distinct is not None and (self.min_distinct is None or other.min_distinct < self.min_distinct):
            min_distinct, witness = other.min_distinct, other.witness
        else:
            min_distinct, witness = self.min_distinct, self.witness
        return Census(self.m, self.offset_k, self.total + other.total, self.local_count + other.local_count,
                      self.distance2_count + other.distance2_count, self.global_count + other.global_count,
                      self.edge_collisions + other.edge_collisions, min_distinct, witness)

    @property
    def success_probability(self) -> Fraction:
        return Fraction(self.local_count, self.total)

    def edge_collision_probability(self, edge: int) -> Fraction:
        return Fraction(int(self.edge_collisions[edge]), self.total)

    def to_dictionary(self) -> dict:
        return {
            "m": self.m,
            "k": self.offset_k,
            "total": self.total,
            "local_count": self.local_count,
            "distance2_count": self.distance2_count,
            "global_count": self.global_count,
            "edge_collisions": self.edge_collisions.tolist(),
            "min_distinct": self.min_distinct,
            "witness": self.witness.tolist() if self.witness is not None else None
        }


def _distinct_counts(sums: np.ndarray) -> np.ndarray:
    ordered = np.sort(sums, axis=1)
    return 1 + np.count_nonzero(np.diff(ordered, axis=1), axis=1)


def _scan(g: Graph, k: int, firsts: List[int], batch_size: int) -> Census:
    m = g.m
    census = Census(m, k)
    incidence_t = g.incidence.toarray().T
    heads, tails = g.heads, g.tails
    pairs = g.distance2_pairs()
    labels = range(k, k + m)
    for first in firsts:
        for batch in permutation_batches(labels, batch_size, first=first):
            sums = batch @ incidence_t
            edge_clash = sums[:, heads] == sums[:, tails]
            local = ~edge_clash.any(axis=1)
            distance2 = ~(sums[:, pairs[:, 0]] == sums[:, pairs[:, 1]]).any(axis=1)
            distinct = _distinct_counts(sums) if sums.shape[1] else np.zeros(len(batch), dtype=np.int64)
            census.total += len(batch)
            census.local_count += int(local.sum())
            census.distance2_count += int(distance2.sum())
            census.global_count += int((distinct == sums.shape[1]).sum())
            census.edge_collisions += edge_clash.sum(axis=0)
            if local.any():
                candidates = np.where(local, distinct, np.iinfo(np.int64).max)
                best = int(np.argmin(candidates))
                if census.min_distinct is None or candidates[best] < census.min_distinct:
                    census.min_distinct = int(candidates[best])
                    census.witness = Labelling.from_permutation(batch[best], k)
    return census


def exhaustive_census(g: Graph, k: int = 1, m_cap: int or None = None, workers: int = 1,
                      progress: bool = False) -> Census:
    """Scans all m! labellings of g with labels {k, ..., m+k-1}.

    Parameters
    ----------
    g: Graph
        graph with at least one edge
    k: int
        smallest label
    m_cap: int, optional
        largest accepted edge count, defaults to the CHROMATIC/m_cap config entry
    workers: int
        number of processes, the scan is split by the label of the first edge
    progress: bool
        shows a progress bar over first-edge labels

    Returns
    -------
    Census
        counts and the minimal witness

    Raises
    ------
    SizeCapExceeded
        m above m_cap
    """
    if g.m < 1:
        raise ValueError("graph has no edge")
    if k < 1:
        raise ValueError(f"offset k must be positive, got {k}")
    check_m_cap(g.m, m_cap)
    firsts = list(range(k, k + g.m))
    batch_size = sampler_cfg.batch_size()
    if workers <= 1:
        census = Census(g.m, k)
        for first in progress_bar(progress=progress, desc="first edge label")(firsts):
            census = census.merge(_scan(g, k, [first], batch_size))
        return census
    chunks, start = [], 0
    for size in split_work(len(firsts), workers):
        if size:
            chunks.append(firsts[start:start + size])
        start += size
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(_scan, *zip(*[(g, k, chunk, batch_size) for chunk in chunks])))
    census = Census(g.m, k)
    for part in parts:
        census = census.merge(part)
    return census

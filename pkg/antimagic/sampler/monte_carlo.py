import logging
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from .run_stats import RunStats
from ..config import sampler as sampler_cfg
from ..core import split_work
from ..core.rng import RngStream
from ..core.statistics import Estimate
from ..graphs import Graph, ensure_labellable
from ..labelling import check_sum_range, exhaustive_census

log = logging.getLogger(__name__)


def _trial_chunk(g: Graph, k: int, trials: int, base_seed: int, stream_index: int, batch_size: int,
                 pairs: np.ndarray) -> Tuple[int, np.ndarray, np.ndarray]:
    rng = RngStream(base_seed, stream_index)
    base = np.arange(k, k + g.m, dtype=np.int64)
    incidence = g.incidence
    heads, tails = g.heads, g.tails
    successes = 0
    collisions = np.zeros(g.m, dtype=np.int64)
    pair_collisions = np.zeros(len(pairs), dtype=np.int64)
    remaining = trials
    while remaining > 0:
        rows = min(batch_size, remaining)
        labels = rng.permuted_rows(base, rows)
        sums = incidence @ labels.T
        clash = sums[heads, :] == sums[tails, :]
        successes += int((~clash.any(axis=0)).sum())
        collisions += clash.sum(axis=1)
        if len(pairs):
            pair_collisions += (sums[pairs[:, 0], :] == sums[pairs[:, 1], :]).sum(axis=1)
        remaining -= rows
    return successes, collisions, pair_collisions


def run_trials(g: Graph, k: int = 1, trials: int = 10_000, rng: RngStream or None = None, workers: int = 1,
               pairs: Sequence[Tuple[int, int]] = ()) -> RunStats:
    """Draws trials uniform labellings and counts local antimagic ones and per-edge collisions.

    Trials are split over workers, worker i draws from stream (rng.base_seed, i), so totals only depend on the seed
    and the worker count.

    Parameters
    ----------
    g: Graph
        graph with at least one edge
    k: int
        smallest label
    trials: int
        number of labellings drawn
    rng: RngStream, optional
        gives the base seed
    workers: int
        number of processes
    pairs: Sequence[Tuple[int, int]]
        extra vertex pairs whose collisions are counted in ``RunStats.pair_collisions``

    Returns
    -------
    RunStats
        rounds is 0, successes and collision counts are summed over workers
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if g.m < 1:
        raise ValueError("graph has no edge")
    check_sum_range(g.m, k)
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if pairs.size and (pairs.min() < 0 or pairs.max() >= g.vertex_count):
        raise IndexError(f"vertex pair out of range [0, {g.vertex_count})")
    rng = rng or RngStream()
    batch_size = sampler_cfg.batch_size()
    chunks = [(index, size) for index, size in enumerate(split_work(trials, workers)) if size]
    start = time.perf_counter()
    if len(chunks) == 1:
        results = [_trial_chunk(g, k, trials, rng.base_seed, 0, batch_size, pairs)]
    else:
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            futures = [pool.submit(_trial_chunk, g, k, size, rng.base_seed, index, batch_size, pairs)
                       for index, size in chunks]
            results = [f.result() for f in futures]
    successes = sum(r[0] for r in results)
    collisions = sum(r[1] for r in results)
    pair_collisions = sum(r[2] for r in results)
    wall_time = time.perf_counter() - start
    log.debug(f"{trials} trials on {g}: {successes} successes in {wall_time:.3f}s")
    return RunStats(0, trials, successes, collisions, wall_time, pair_collisions)


def estimate_edge_collision(g: Graph, edge: int, k: int = 1, trials: int = 10_000, rng: RngStream or None = None,
                            workers: int = 1, confidence: float or None = None) -> Estimate:
    """Estimates the probability that a uniform labelling gives both endpoints of edge the same sum.

    Raises
    ------
    IndexError
        edge is not a valid edge index
    """
    ensure_labellable(g)
    if not 0 <= edge < g.m:
        raise IndexError(f"edge index {edge} out of range [0, {g.m})")
    stats = run_trials(g, k, trials, rng, workers)
    return Estimate(int(stats.per_edge_collisions[edge]), stats.trials, confidence)


def estimate_pair_collision(g: Graph, v: int, w: int, k: int = 1, trials: int = 10_000,
                            rng: RngStream or None = None, workers: int = 1,
                            confidence: float or None = None) -> Estimate:
    """Estimates the probability that a uniform labelling gives vertices v and w the same sum."""
    if v == w:
        raise ValueError("v and w must be distinct")
    stats = run_trials(g, k, trials, rng, workers, pairs=[(v, w)])
    return Estimate(int(stats.pair_collisions[0]), stats.trials, confidence)


def estimate_success(g: Graph, k: int = 1, trials: int = 10_000, rng: RngStream or None = None, workers: int = 1,
                     confidence: float or None = None) -> Estimate:
    """Estimates the probability that a uniform labelling is local antimagic."""
    ensure_labellable(g)
    stats = run_trials(g, k, trials, rng, workers)
    return Estimate(stats.successes, stats.trials, confidence)


def exhaustive_success_probability(g: Graph, k: int = 1, m_cap: int or None = None) -> Fraction:
    """Exact fraction of the m! labellings which are local antimagic."""
    return exhaustive_census(g, k, m_cap).success_probability


def exhaustive_edge_collision(g: Graph, edge: int, k: int = 1, m_cap: int or None = None) -> Fraction:
    """Exact fraction of the m! labellings giving both endpoints of edge the same sum."""
    if not 0 <= edge < g.m:
        raise IndexError(f"edge index {edge} out of range [0, {g.m})")
    return exhaustive_census(g, k, m_cap).edge_collision_probability(edge)

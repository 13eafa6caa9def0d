import logging
import time
from typing import Tuple

import numpy as np

from .exceptions import RoundsExhaustedError, VerificationFailure
from .run_stats import RunStats
from ..config import sampler as sampler_cfg
from ..core.rng import RngStream
from ..graphs import Graph, ensure_labellable
from ..labelling import Labelling, check_sum_range, check_local_antimagic, vertex_sums

log = logging.getLogger(__name__)


def random_permutation(m: int, k: int = 1, rng: RngStream or None = None) -> Labelling:
    """Uniformly random labelling with labels {k, ..., m+k-1}, drawn by an in-place Fisher-Yates shuffle.

    Parameters
    ----------
    m: int
        number of labels, at least 1
    k: int
        smallest label
    rng: RngStream, optional
        random stream, a freshly seeded one is used when omitted

    Returns
    -------
    Labelling
        each of the m! orderings with probability 1/m!

    Examples
    --------
    >>> random_permutation(1, 4, RngStream(0)).tolist()
    [4]
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if k < 1:
        raise ValueError(f"offset k must be positive, got {k}")
    rng = rng or RngStream()
    return Labelling.from_permutation(rng.shuffle(np.arange(k, k + m, dtype=np.int64)), k)


def default_max_rounds(m: int) -> int:
    return sampler_cfg.max_rounds_factor() * m


def las_vegas_label(g: Graph, k: int = 1, rng: RngStream or None = None,
                    max_rounds: int or None = None) -> Tuple[Labelling, RunStats]:
    """Draws random labellings until one is local antimagic.

    Every round shuffles the label buffer in place, sums labels around vertices and compares the endpoints of every
    edge, all in preallocated arrays so a round costs O(m + |V|).

    Parameters
    ----------
    g: Graph
        graph without isolated edge
    k: int
        smallest label
    rng: RngStream, optional
        random stream, (seed, g, k) fully determine the result
    max_rounds: int, optional
        round budget, defaults to SAMPLER/max_rounds_factor times m

    Returns
    -------
    Tuple[Labelling, RunStats]
        a verified local antimagic labelling and the number of rounds it took

    Raises
    ------
    NotLabellableError
        g has an isolated edge or no edge
    RoundsExhaustedError
        no success within max_rounds
    """
    ensure_labellable(g)
    if k < 1:
        raise ValueError(f"offset k must be positive, got {k}")
    m = g.m
    check_sum_range(m, k)
    rng = rng or RngStream()
    max_rounds = default_max_rounds(m) if max_rounds is None else int(max_rounds)
    if max_rounds < 1:
        raise ValueError(f"max_rounds must be positive, got {max_rounds}")

    heads, tails = g.heads, g.tails
    labels = np.arange(k, k + m, dtype=np.int64)
    sums = np.zeros(g.vertex_count, dtype=np.int64)
    head_sums = np.empty(m, dtype=np.int64)
    tail_sums = np.empty(m, dtype=np.int64)
    clash = np.empty(m, dtype=bool)
    collisions = np.zeros(m, dtype=np.int64)

    start = time.perf_counter()
    for rounds in range(1, max_rounds + 1):
        rng.shuffle(labels)
        sums.fill(0)
        np.add.at(sums, heads, labels)
        np.add.at(sums, tails, labels)
        np.take(sums, heads, out=head_sums)
        np.take(sums, tails, out=tail_sums)
        np.equal(head_sums, tail_sums, out=clash)
        if not clash.any():
            labelling = Labelling.from_permutation(labels, k)
            if not check_local_antimagic(g, vertex_sums(g, labelling)).holds:
                raise VerificationFailure(f"labelling {labelling.tolist()} is not local antimagic")
            stats = RunStats(rounds, rounds, 1, collisions, time.perf_counter() - start)
            log.debug(f"{g} labelled in {rounds} round(s)")
            return labelling, stats
        collisions += clash
    raise RoundsExhaustedError(max_rounds)

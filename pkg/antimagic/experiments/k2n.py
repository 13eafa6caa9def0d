"""Two fixed vertices of degree 2 in K_{2,n} are at distance 2 and share no edge, their sums collide with
probability Theta(1/n). Summed over the C(n, 2) pairs this exceeds 1, so a union bound cannot give a labelling
distinguishing all pairs at distance 2.
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pds

from ..core import progress_bar
from ..core.rng import RngStream
from ..core.statistics import Estimate
from ..graphs import generate
from ..oracle import difference_table
from ..sampler import estimate_pair_collision

log = logging.getLogger(__name__)


def k2n_exact(n: int) -> Fraction:
    """Exact probability that the degree-2 vertices 2 and 3 of K_{2,n} get equal sums under labels 1..2n.

    Examples
    --------
    >>> k2n_exact(2)
    Fraction(1, 3)
    """
    if n < 2:
        raise ValueError(f"K_2,n needs n >= 2 to have two degree-2 vertices, got {n}")
    # two disjoint label pairs, for n = 2 they use all 2n labels
    return difference_table(2 * n, 2, 2).p(0)


def k2n_witness_bound(n: int) -> Fraction:
    """Lower bound from the labellings giving one vertex {x, x+2y+z} and the other {x+y, x+y+z}, 1 <= x, y, z <= n/2.

    Each (x, y, z) gives four distinct labels at most 2n, placed in 2 * 2 * 2 ways.

    Examples
    --------
    >>> k2n_witness_bound(2)
    Fraction(1, 3)
    """
    h = n // 2
    return Fraction(8 * h ** 3, math.perm(2 * n, 4))


class K2nPoint:
    __slots__ = ['n', 'estimate', 'exact', 'witness_bound']

    def __init__(self, n: int, estimate: Estimate, exact: Fraction or None, witness_bound: Fraction):
        self.n = n
        self.estimate = estimate
        self.exact = exact
        self.witness_bound = witness_bound

    def __repr__(self):
        return f"<K2nPoint: n={self.n} p_hat={float(self.estimate.p_hat):.5g}>"

    @property
    def scaled(self) -> float:
        """p_hat * n, bounded away from 0 and infinity when the probability is Theta(1/n)."""
        return float(self.estimate.p_hat) * self.n

    @property
    def union_sum(self) -> float:
        """Sum of the collision probabilities over the C(n, 2) pairs of degree-2 vertices."""
        p = self.exact if self.exact is not None else self.estimate.p_hat
        return float(p) * math.comb(self.n, 2)

    def to_dictionary(self) -> dict:
        return {
            "n": self.n,
            "trials": self.estimate.trials,
            "p_hat": float(self.estimate.p_hat),
            "ci_low": self.estimate.ci_low,
            "ci_high": self.estimate.ci_high,
            "p_hat_times_n": self.scaled,
            "exact": str(self.exact) if self.exact is not None else None,
            "exact_float": float(self.exact) if self.exact is not None else None,
            "union_sum": self.union_sum,
            "witness_bound": float(self.witness_bound)
        }


class K2nScaling:
    __slots__ = ['points', 'seed']

    def __init__(self, points: List[K2nPoint], seed: int):
        self.points = points
        self.seed = seed

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, n: int) -> K2nPoint:
        for point in self.points:
            if point.n == n:
                return point
        raise KeyError(n)

    def scaled_band(self) -> float:
        """Ratio between the largest and the smallest p_hat * n of the sweep."""
        scaled = [p.scaled for p in self.points]
        return max(scaled) / min(scaled) if min(scaled) > 0 else math.inf

    def to_dictionary(self) -> List[dict]:
        return [p.to_dictionary() for p in self.points]

    def to_dataframe(self) -> pds.DataFrame:
        return pds.DataFrame.from_records(self.to_dictionary())

    def plot(self, ax=None, **kwargs):
        from ..plotting import Plot
        df = self.to_dataframe()
        n = df["n"].values.astype(float)
        reference = df["exact_float"].values.astype(float) if df["exact_float"].notna().all() else None
        p_hat = df["p_hat"].values
        return Plot().scatter(n, p_hat, ax=ax, xlabel="n", ylabel="P[equal sums]",
                              yerr=(p_hat - df["ci_low"].values, df["ci_high"].values - p_hat),
                              reference=(n, reference, "exact") if reference is not None else None,
                              logx=True, logy=True, **kwargs)


def k2n_scaling(n_list: Sequence[int], trials: int = 100_000, rng: Optional[RngStream] = None, workers: int = 1,
                exact: bool = True, progress: bool = False) -> K2nScaling:
    """Estimates, for every n, the probability that two fixed degree-2 vertices of K_{2,n} get equal sums.

    Parameters
    ----------
    n_list: Sequence[int]
        values of n, each at least 2
    trials: int
        uniform labellings drawn per n
    rng: RngStream, optional
        gives the base seed, every n uses the same seed
    workers: int
        processes used for the trials
    exact: bool
        also computes the exact probability from the difference table of two label pairs
    progress: bool
        shows a progress bar over n_list

    Returns
    -------
    K2nScaling
        one point per n
    """
    rng = rng or RngStream()
    points = []
    for n in progress_bar(progress=progress, desc="K2n", total=len(n_list))(n_list):
        if n < 2:
            raise ValueError(f"K_2,n needs n >= 2, got {n}")
        g = generate('complete_bipartite', (2, n))
        # vertices 2 and 3 are the first two of the degree-2 side
        estimate = estimate_pair_collision(g, 2, 3, trials=trials, rng=rng, workers=workers)
        points.append(K2nPoint(n, estimate, k2n_exact(n) if exact else None, k2n_witness_bound(n)))
        log.debug(f"K2,{n}: p_hat={float(estimate.p_hat):.5g}")
    return K2nScaling(points, rng.base_seed)

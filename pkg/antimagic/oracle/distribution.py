"""Exact distribution of the signed block difference of a uniformly random labelling.

Under a uniform permutation of {k, ..., n+k-1}, the set A of the first a values and the set B of the next b values
form a uniformly random ordered pair of disjoint subsets with |A| = a and |B| = b, and the difference only depends
on (A, B). Counting over the C(n, a) * C(n - a, b) pairs therefore gives the exact distribution, all arithmetic is
done on Python integers and Fractions.
"""
import itertools
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

import pandas as pds

from .difference_spec import DifferenceSpec
from .exceptions import InvalidDifferenceSpec
from ..config import oracle as oracle_cfg
from ..core.cache import CacheCall, entries
from ..core.exceptions import SizeCapExceeded

log = logging.getLogger(__name__)

PERMUTATION_ORACLE_MAX_N = 8


def pair_count(n: int, a: int, b: int) -> int:
    """Number of ordered pairs of disjoint subsets of sizes a and b of an n-set.

    Examples
    --------
    >>> pair_count(5, 2, 2)
    30
    """
    return math.comb(n, a) * math.comb(n - a, b)


class DistributionTable:
    """Exact distribution of the difference for given (n, a, b, k).

    Attributes
    ----------
    counts: Dict[int, int]
        number of outcomes per difference value, only values with a non zero count are stored
    total: int
        number of equally likely outcomes
    """
    __slots__ = ['n', 'a', 'b', 'k', 'counts', 'total']

    def __init__(self, n: int, a: int, b: int, k: int, counts: Dict[int, int], total: int):
        self.n, self.a, self.b, self.k = n, a, b, k
        self.counts = dict(sorted(counts.items()))
        self.total = total

    def __repr__(self):
        return f"<DistributionTable: n={self.n} a={self.a} b={self.b} k={self.k} support=[{self.t_min}, {self.t_max}]>"

    def __eq__(self, other):
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return (self.n, self.a, self.b, self.k) == (other.n, other.a, other.b, other.k) and \
            self.probabilities == other.probabilities

    @property
    def probabilities(self) -> Dict[int, Fraction]:
        return {t: Fraction(c, self.total) for t, c in self.counts.items()}

    @property
    def t_min(self) -> int:
        return min(self.counts)

    @property
    def t_max(self) -> int:
        return max(self.counts)

    def p(self, t: int) -> Fraction:
        """Probability of the difference being exactly t, 0 outside the support."""
        return Fraction(self.counts.get(t, 0), self.total)

    def p_mod(self, residue: int, modulus: int) -> Fraction:
        """Probability of the difference being congruent to residue modulo modulus."""
        if modulus < 2:
            raise InvalidDifferenceSpec(f"modulus must be at least 2, got {modulus}")
        residue %= modulus
        return Fraction(sum(c for t, c in self.counts.items() if t % modulus == residue), self.total)

    def max_probability(self) -> Fraction:
        return Fraction(max(self.counts.values()), self.total)

    def is_normalized(self) -> bool:
        return sum(self.counts.values()) == self.total

    def swapped(self) -> "DistributionTable":
        """Table of (n, b, a, k), obtained by negating every difference value."""
        return DistributionTable(self.n, self.b, self.a, self.k, {-t: c for t, c in self.counts.items()}, self.total)

    def to_dictionary(self) -> dict:
        return {
            "n": self.n, "a": self.a, "b": self.b, "k": self.k,
            "t_min": self.t_min, "t_max": self.t_max,
            "probabilities": {str(t): str(p) for t, p in self.probabilities.items()}
        }

    def to_dataframe(self) -> pds.DataFrame:
        probabilities = self.probabilities
        return pds.DataFrame({
            "t": list(probabilities.keys()),
            "count": list(self.counts.values()),
            "p": [str(p) for p in probabilities.values()],
            "p_float": [float(p) for p in probabilities.values()]
        })


def _count_pairs(values: Tuple[int, ...], a: int, b: int, firsts: Iterable[int]) -> Counter:
    """Counts differences over the pairs (A, B) whose smallest index in A is one of firsts."""
    n = len(values)
    counts = Counter()
    for first in firsts:
        for tail in itertools.combinations(range(first + 1, n), a - 1):
            chosen = {first, *tail}
            sum_a = values[first] + sum(values[i] for i in tail)
            rest = [values[i] for i in range(n) if i not in chosen]
            counts.update(sum_a - sum_b for sum_b in map(sum, itertools.combinations(rest, b)))
    return counts


@CacheCall(is_pure=True, ignore=("workers",))
def _difference_counts(n: int, a: int, b: int, k: int, workers: int) -> Dict[int, int]:
    values = tuple(range(k, n + k))
    firsts = list(range(n - a + 1))
    if workers <= 1:
        counts = _count_pairs(values, a, b, firsts)
    else:
        partitions = [firsts[w::workers] for w in range(workers) if firsts[w::workers]]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=len(partitions)) as pool:
            for part in pool.map(_count_pairs, *zip(*[(values, a, b, p) for p in partitions])):
                counts.update(part)
    log.debug(f"enumerated {pair_count(n, a, b)} pairs for n={n} a={a} b={b} k={k}")
    return dict(sorted(counts.items()))


def cached_table_count() -> int:
    """Number of difference tables currently stored in the on-disk cache."""
    return len(entries(_difference_counts.cache_prefix))


def clear_table_cache() -> int:
    """Drops every stored difference table, returns how many were dropped."""
    dropped = _difference_counts.cache_clear()
    log.info(f"dropped {dropped} cached difference tables")
    return dropped


def check_pair_cap(n: int, a: int, b: int):
    pairs, cap = pair_count(n, a, b), oracle_cfg.max_pairs()
    if pairs > cap:
        raise SizeCapExceeded(f"n={n} a={a} b={b} needs {pairs} subset pairs, the limit is {cap}")


def difference_table(n: int, a: int, b: int, k: int = 1, workers: int = 1) -> DistributionTable:
    """Same as :func:`exact_distribution` without the a + b < n requirement, a + b = n is accepted."""
    if a < 1 or b < 1 or a + b > n or k < 1:
        raise InvalidDifferenceSpec(f"need a, b >= 1, a + b <= n and k >= 1, got n={n} a={a} b={b} k={k}")
    if b > a:
        return difference_table(n, b, a, k, workers).swapped()
    check_pair_cap(n, a, b)
    counts = _difference_counts(n, a, b, k, max(int(workers), 1), disable_cache=not oracle_cfg.disk_cache())
    return DistributionTable(n, a, b, k, counts, pair_count(n, a, b))


def exact_distribution(n: int, a: int, b: int, k: int = 1, workers: int = 1) -> DistributionTable:
    """Exact distribution of the difference for a uniform permutation of {k, ..., n+k-1}.

    Parameters
    ----------
    n: int
        number of labels
    a: int
        size of the positive block
    b: int
        size of the negative block, b > a is answered from the (b, a) table by negating values
    k: int
        smallest label
    workers: int
        number of processes, work is split by the smallest index of the positive block

    Returns
    -------
    DistributionTable
        exact counts, probabilities are reduced Fractions

    Raises
    ------
    InvalidDifferenceSpec
        unless a, b >= 1, a + b < n and k >= 1
    SizeCapExceeded
        more subset pairs than ORACLE/max_pairs

    Examples
    --------
    >>> exact_distribution(5, 2, 2).p(0)
    Fraction(1, 5)
    >>> exact_distribution(6, 2, 1).p(0)
    Fraction(1, 10)
    """
    DifferenceSpec(n, a, b, k)
    return difference_table(n, a, b, k, workers)


def exact_p(spec: DifferenceSpec, workers: int = 1) -> Fraction:
    """Probability that the difference equals spec.t.

    Examples
    --------
    >>> exact_p(DifferenceSpec(5, 2, 1, k=2))
    Fraction(1, 15)
    >>> exact_p(DifferenceSpec(5, 2, 2, t=1000))
    Fraction(0, 1)
    """
    return exact_distribution(spec.n, spec.a, spec.b, spec.k, workers).p(spec.t)


def exact_p_mod(n: int, a: int, b: int, k: int, residue: int, modulus: int, workers: int = 1) -> Fraction:
    """Probability that the difference is congruent to residue modulo modulus.

    Examples
    --------
    >>> [exact_p_mod(5, 2, 1, 1, r, 5) for r in range(5)] == [Fraction(1, 5)] * 5
    True
    """
    if modulus < 2:
        raise InvalidDifferenceSpec(f"modulus must be at least 2, got {modulus}")
    return exact_distribution(n, a, b, k, workers).p_mod(residue, modulus)


def permutation_distribution(n: int, a: int, b: int, k: int = 1) -> DistributionTable:
    """Slow oracle enumerating all n! permutations, accepts a + b <= n and n up to 8."""
    if a < 1 or b < 1 or a + b > n or k < 1:
        raise InvalidDifferenceSpec(f"need a, b >= 1, a + b <= n and k >= 1, got n={n} a={a} b={b} k={k}")
    if n > PERMUTATION_ORACLE_MAX_N:
        raise SizeCapExceeded(f"permutation oracle is limited to n <= {PERMUTATION_ORACLE_MAX_N}, got {n}")
    counts = Counter(sum(p[:a]) - sum(p[a:a + b]) for p in itertools.permutations(range(k, n + k)))
    return DistributionTable(n, a, b, k, counts, math.factorial(n))


def in_range_specs(n: int) -> List[Tuple[int, int]]:
    """All (a, b) with a >= b >= 1 and a + b < n."""
    return [(a, b) for a in range(1, n) for b in range(1, a + 1) if a + b < n]

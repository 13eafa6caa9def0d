import itertools
import math
from fractions import Fraction
from typing import FrozenSet

from .exceptions import InvalidDifferenceSpec


class ParityResult:
    """Parity of the sum of a uniformly random c-subset of {k, ..., n+k-1}.

    Attributes
    ----------
    p_even, p_odd: Fraction
        exact probabilities of an even and of an odd sum
    fixed_point_count: int
        subsets left unchanged by the pairing involution
    """
    __slots__ = ['n', 'c', 'k', 'p_even', 'p_odd', 'fixed_point_count']

    def __init__(self, n: int, c: int, k: int, p_even: Fraction, p_odd: Fraction, fixed_point_count: int):
        self.n, self.c, self.k = n, c, k
        self.p_even = p_even
        self.p_odd = p_odd
        self.fixed_point_count = fixed_point_count

    def __repr__(self):
        return f"<ParityResult: n={self.n} c={self.c} k={self.k} even={self.p_even} odd={self.p_odd}>"

    @property
    def worst(self) -> Fraction:
        return max(self.p_even, self.p_odd)

    def to_dictionary(self) -> dict:
        return {"n": self.n, "c": self.c, "k": self.k, "p_even": str(self.p_even), "p_odd": str(self.p_odd),
                "fixed_point_count": self.fixed_point_count}


def _check(n: int, c: int, k: int):
    if not 0 < c < n:
        raise InvalidDifferenceSpec(f"subset size must satisfy 0 < c < n, got c={c} n={n}")
    if k < 1:
        raise InvalidDifferenceSpec(f"offset k must be positive, got {k}")


def pairing_involution(subset: FrozenSet[int], n: int, k: int = 1) -> FrozenSet[int]:
    """Swaps the two elements of the first pair (k, k+1), (k+2, k+3), ... that subset meets exactly once.

    Returns subset itself when it meets every pair zero or two times. The image always has a sum of the other parity
    unless it is subset.

    Examples
    --------
    >>> sorted(pairing_involution(frozenset({1, 3}), 4))
    [2, 3]
    >>> sorted(pairing_involution(frozenset({1, 2}), 4))
    [1, 2]
    """
    for low in range(k, k + n - 1, 2):
        pair = {low, low + 1}
        inside = subset & pair
        if len(inside) == 1:
            return (subset - inside) | (pair - inside)
    return subset


def fixed_point_count(n: int, c: int, k: int = 1) -> int:
    """Counts the c-subsets fixed by :func:`pairing_involution` by applying it to every subset."""
    _check(n, c, k)
    return sum(1 for s in map(frozenset, itertools.combinations(range(k, n + k), c))
               if pairing_involution(s, n, k) == s)


def fixed_point_closed_form(n: int, c: int) -> int:
    """Closed form of :func:`fixed_point_count`.

    Examples
    --------
    >>> fixed_point_closed_form(4, 2)
    2
    >>> fixed_point_closed_form(4, 1)
    0
    >>> fixed_point_closed_form(7, 3)
    3
    """
    if n % 2 == 0:
        return math.comb(n // 2, c // 2) if c % 2 == 0 else 0
    return math.comb((n - 1) // 2, c // 2)


def parity_bound(n: int, c: int) -> Fraction:
    """Upper bound on the probability of either parity.

    Examples
    --------
    >>> parity_bound(4, 1)
    Fraction(1, 2)
    >>> parity_bound(4, 2)
    Fraction(2, 3)
    >>> parity_bound(5, 2)
    Fraction(3, 5)
    """
    if n % 2 == 0:
        return Fraction(1, 2) if c % 2 else Fraction(1, 2) * (1 + Fraction(1, n - 1))
    return Fraction(1, 2) * (1 + Fraction(1, n))


def parity_probability(n: int, c: int, k: int = 1) -> ParityResult:
    """Exact parity probabilities by enumeration of the C(n, c) subsets.

    Examples
    --------
    >>> r = parity_probability(4, 2)
    >>> r.p_even, r.p_odd, r.fixed_point_count
    (Fraction(1, 3), Fraction(2, 3), 2)
    """
    _check(n, c, k)
    total = math.comb(n, c)
    even = sum(1 for s in itertools.combinations(range(k, n + k), c) if sum(s) % 2 == 0)
    return ParityResult(n, c, k, Fraction(even, total), Fraction(total - even, total), fixed_point_count(n, c, k))
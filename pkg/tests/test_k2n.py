#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `antimagic.experiments` package."""
import math
import unittest
from fractions import Fraction

from ddt import ddt, data

from antimagic.core.rng import RngStream
from antimagic.experiments import k2n_exact, k2n_scaling, k2n_witness_bound
from antimagic.oracle import permutation_distribution


@ddt
class ExactValues(unittest.TestCase):
    def test_smallest_case(self):
        self.assertEqual(k2n_exact(2), Fraction(1, 3))
        self.assertEqual(k2n_exact(2), permutation_distribution(4, 2, 2).p(0))

    def test_matches_sum_counting(self):
        # equal sums of two disjoint label pairs out of 1..16
        pairs_per_sum = [sum(1 for x in range(1, 17) for y in range(x + 1, 17) if x + y == s) for s in range(3, 32)]
        colliding = sum(r * (r - 1) for r in pairs_per_sum)
        self.assertEqual(k2n_exact(8), Fraction(colliding, math.comb(16, 2) * math.comb(14, 2)))

    @data(2, 3, 4, 6, 8, 12)
    def test_witness_bound_is_a_lower_bound(self, n):
        self.assertLessEqual(k2n_witness_bound(n), k2n_exact(n))

    def test_n_below_two(self):
        with self.assertRaises(ValueError):
            k2n_exact(1)


class Scaling(unittest.TestCase):
    def test_probability_decreases_like_one_over_n(self):
        scaling = k2n_scaling([8, 16, 32], trials=100_000, rng=RngStream(2718))
        self.assertEqual(len(scaling), 3)
        self.assertLessEqual(scaling.scaled_band(), 2.5)
        ratio = float(scaling[8].estimate.p_hat / scaling[32].estimate.p_hat)
        self.assertGreaterEqual(ratio, 2.)
        self.assertLessEqual(ratio, 8.)
        self.assertTrue(all(point.exact is not None for point in scaling))

    def test_smallest_case_interval_contains_one_third(self):
        scaling = k2n_scaling([2], trials=20_000, rng=RngStream(5))
        self.assertTrue(scaling[2].estimate.contains(Fraction(1, 3)))
        self.assertEqual(scaling.seed, 5)

    def test_union_bound_fails_for_large_n(self):
        scaling = k2n_scaling([40], trials=10_000, rng=RngStream(9), exact=False)
        self.assertGreater(scaling[40].union_sum, 1.)

    def test_dataframe(self):
        scaling = k2n_scaling([3, 4], trials=10_000, rng=RngStream(1), exact=False)
        df = scaling.to_dataframe()
        self.assertListEqual(df["n"].tolist(), [3, 4])
        self.assertTrue(df["exact"].isna().all())
        with self.assertRaises(KeyError):
            scaling[5]

    def test_rejects_small_n(self):
        with self.assertRaises(ValueError):
            k2n_scaling([1], trials=100, rng=RngStream(0))

    def test_is_plotable(self):
        try:
            import matplotlib.pyplot as plt
        except ImportError:
            self.skipTest("Can't import matplotlib")
        scaling = k2n_scaling([3, 4], trials=10_000, rng=RngStream(1), exact=False)
        ax = scaling.plot()
        self.assertIsNotNone(ax)
        self.assertEqual(ax.get_xlabel(), "n")
        plt.close('all')


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `antimagic.core` package."""
import os
import tempfile
import unittest
from fractions import Fraction

from ddt import ddt, data, unpack

from antimagic.core import mkdir, progress_bar, split_work
from antimagic.core.rng import RngStream, fresh_seed
from antimagic.core.statistics import Estimate, family_confidence, wilson_interval


@ddt
class SplitWork(unittest.TestCase):
    @data(
        (10, 3, [4, 3, 3]),
        (2, 4, [1, 1, 0, 0]),
        (7, 1, [7]),
        (5, 0, [5])
    )
    @unpack
    def test_split_work(self, total, parts, expected):
        self.assertEqual(split_work(total, parts), expected)
        self.assertEqual(sum(split_work(total, parts)), total)


class Helpers(unittest.TestCase):
    def test_mkdir_creates_parents(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "a", "b")
            mkdir(path)
            mkdir(path)
            self.assertTrue(os.path.isdir(path))

    def test_progress_bar_is_transparent_when_disabled(self):
        values = [1, 2, 3]
        self.assertIs(progress_bar(progress=False)(values), values)
        self.assertEqual(list(progress_bar(progress=True, leave=False)(values)), values)

    def test_progress_bar_forwards_extra_arguments(self):
        bar = progress_bar(progress=True, leave=False, disable=True)([1, 2, 3])
        self.assertTrue(bar.disable)
        self.assertEqual(list(bar), [1, 2, 3])


@ddt
class Statistics(unittest.TestCase):
    @data(
        (0, 100, 0.95),
        (100, 100, 0.95),
        (37, 1000, 0.99),
        (1, 3, 0.5)
    )
    @unpack
    def test_interval_contains_point_estimate(self, successes, trials, confidence):
        estimate = Estimate(successes, trials, confidence)
        self.assertTrue(estimate.contains(Fraction(successes, trials)))
        self.assertGreaterEqual(estimate.ci_low, 0.)
        self.assertLessEqual(estimate.ci_high, 1.)

    def test_wider_with_higher_confidence(self):
        low95, high95 = wilson_interval(30, 100, 0.95)
        low99, high99 = wilson_interval(30, 100, 0.99)
        self.assertLess(low99, low95)
        self.assertGreater(high99, high95)

    def test_known_interval(self):
        low, high = wilson_interval(50, 100, 0.95)
        self.assertAlmostEqual(low, 0.4038, places=3)
        self.assertAlmostEqual(high, 0.5962, places=3)

    @data((-1, 10), (11, 10), (0, 0))
    @unpack
    def test_rejects_impossible_counts(self, successes, trials):
        with self.assertRaises(ValueError):
            Estimate(successes, trials)

    def test_rejects_bad_confidence(self):
        with self.assertRaises(ValueError):
            wilson_interval(1, 10, 1.)

    def test_default_confidence_comes_from_config(self):
        self.assertEqual(Estimate(1, 10).confidence, 0.99)

    def test_family_confidence(self):
        self.assertAlmostEqual(family_confidence(10, 0.99), 0.999)
        self.assertAlmostEqual(family_confidence(0, 0.95), 0.95)

    def test_to_dictionary(self):
        d = Estimate(3, 4, 0.9).to_dictionary()
        self.assertEqual((d["successes"], d["trials"], d["p_hat"]), (3, 4, 0.75))


class Streams(unittest.TestCase):
    def test_same_seed_and_index_give_the_same_draws(self):
        self.assertEqual(RngStream(12, 3).integers(0, 1000, size=5).tolist(),
                         RngStream(12, 3).integers(0, 1000, size=5).tolist())

    def test_indices_are_independent_streams(self):
        self.assertNotEqual(RngStream(12, 0).integers(0, 2 ** 32, size=4).tolist(),
                            RngStream(12, 1).integers(0, 2 ** 32, size=4).tolist())

    def test_spawn_keeps_base_seed(self):
        stream = RngStream(99).spawn(4)
        self.assertEqual((stream.base_seed, stream.stream_index), (99, 4))

    def test_fresh_seed(self):
        self.assertIsNotNone(RngStream().base_seed)
        self.assertLess(fresh_seed(), 2 ** 63)

    def test_permuted_rows(self):
        rows = RngStream(1).permuted_rows(list(range(1, 6)), 50)
        self.assertEqual(rows.shape, (50, 5))
        self.assertTrue(all(sorted(row) == [1, 2, 3, 4, 5] for row in rows.tolist()))


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `antimagic.oracle` package."""
import itertools
import math
import os
import unittest
from fractions import Fraction
from unittest.mock import patch

from ddt import ddt, data, unpack

from antimagic.core.exceptions import SizeCapExceeded
from antimagic.graphs import NotLabellableError, generate, parse_edge_list
from antimagic.oracle import DifferenceSpec, InvalidDifferenceSpec, cached_table_count, clear_table_cache, \
    difference_table, edge_collision_probability, \
    edge_collision_profile, exact_distribution, exact_p, exact_p_mod, fixed_point_closed_form, fixed_point_count, \
    in_range_specs, pair_count, pairing_involution, parity_bound, parity_probability, permutation_distribution


@ddt
class DifferenceSpecValidation(unittest.TestCase):
    @data(
        (5, 0, 2, 1),
        (5, 2, 0, 1),
        (4, 2, 2, 1),
        (5, 3, 2, 1),
        (5, 2, 2, 0),
        (5, 2.5, 2, 1),
        (5, True, 2, 1)
    )
    @unpack
    def test_rejects(self, n, a, b, k):
        with self.assertRaises(InvalidDifferenceSpec):
            DifferenceSpec(n, a, b, k)

    def test_swapped_negates_target(self):
        self.assertEqual(DifferenceSpec(7, 3, 1, t=4).swapped(), DifferenceSpec(7, 1, 3, t=-4))

    def test_complement_target(self):
        self.assertEqual(DifferenceSpec(7, 3, 1, k=2, t=4).complement_target(), 2 * 10 - 4)

    def test_to_dictionary(self):
        self.assertEqual(DifferenceSpec(5, 2, 2).to_dictionary(), {"n": 5, "a": 2, "b": 2, "k": 1, "t": 0})


@ddt
class ExactDistribution(unittest.TestCase):
    @data(
        (5, 2, 2, 1, 0, Fraction(1, 5)),
        (6, 2, 1, 1, 0, Fraction(1, 10)),
        (5, 2, 1, 2, 0, Fraction(1, 15)),
        (3, 1, 1, 1, 0, Fraction(0)),
        (6, 2, 2, 1, 0, Fraction(7, 45)),
        (5, 2, 2, 1, 1000, Fraction(0))
    )
    @unpack
    def test_known_values(self, n, a, b, k, t, expected):
        self.assertEqual(exact_p(DifferenceSpec(n, a, b, k, t)), expected)

    def test_table_is_normalized(self):
        for n in range(3, 9):
            for a, b in in_range_specs(n):
                table = exact_distribution(n, a, b)
                self.assertTrue(table.is_normalized(), table)
                self.assertEqual(table.total, pair_count(n, a, b))
                self.assertEqual(sum(table.probabilities.values()), 1)

    def test_support_bounds(self):
        table = exact_distribution(6, 2, 1)
        # largest: 6 + 5 - 1, smallest: 1 + 2 - 6
        self.assertEqual((table.t_min, table.t_max), (-3, 10))

    def test_matches_permutation_oracle(self):
        for n in range(2, 8):
            for a in range(1, n):
                for b in range(1, n - a + 1):
                    for k in (1, 3):
                        self.assertEqual(difference_table(n, a, b, k), permutation_distribution(n, a, b, k),
                                         (n, a, b, k))

    def test_swap_symmetry(self):
        for n in range(4, 10):
            for a, b in in_range_specs(n):
                self.assertEqual(exact_distribution(n, b, a), exact_distribution(n, a, b).swapped())
                self.assertEqual(exact_distribution(n, b, a).p(3), exact_distribution(n, a, b).p(-3))

    def test_complement_symmetry(self):
        for n in range(4, 9):
            for a, b in in_range_specs(n):
                for k in (1, 2):
                    table = exact_distribution(n, a, b, k)
                    for t in range(table.t_min, table.t_max + 1):
                        spec = DifferenceSpec(n, a, b, k, t)
                        self.assertEqual(table.p(t), table.p(spec.complement_target()), spec)

    @data((5, 2, 1, 1), (6, 2, 1, 1), (7, 3, 2, 2), (8, 4, 3, 5))
    @unpack
    def test_one_more_positive_label_is_uniform_modulo_n(self, n, a, b, k):
        for residue in range(n):
            self.assertEqual(exact_p_mod(n, a, b, k, residue, n), Fraction(1, n))

    def test_bad_modulus(self):
        with self.assertRaises(InvalidDifferenceSpec):
            exact_p_mod(5, 2, 1, 1, 0, 1)

    def test_workers_give_the_same_table(self):
        with patch.dict(os.environ, {"ANTIMAGIC_ORACLE_DISK_CACHE": "false"}):
            single = exact_distribution(9, 3, 2)
            split = exact_distribution(9, 3, 2, workers=3)
        self.assertEqual(single.counts, split.counts)

    def test_table_cache_can_be_cleared(self):
        with patch.dict(os.environ, {"ANTIMAGIC_ORACLE_DISK_CACHE": "true"}):
            table = exact_distribution(7, 3, 1)
            self.assertGreaterEqual(cached_table_count(), 1)
            self.assertGreaterEqual(clear_table_cache(), 1)
            self.assertEqual(cached_table_count(), 0)
            self.assertEqual(exact_distribution(7, 3, 1), table)
            self.assertEqual(cached_table_count(), 1)

    def test_a_plus_b_equal_n_needs_difference_table(self):
        with self.assertRaises(InvalidDifferenceSpec):
            exact_distribution(4, 2, 2)
        self.assertEqual(difference_table(4, 2, 2).p(0), Fraction(1, 3))

    def test_pair_cap(self):
        with self.assertRaises(SizeCapExceeded):
            exact_distribution(60, 20, 20)

    def test_permutation_oracle_is_limited(self):
        with self.assertRaises(SizeCapExceeded):
            permutation_distribution(9, 2, 2)

    def test_dataframe(self):
        df = exact_distribution(5, 2, 2).to_dataframe()
        self.assertListEqual(list(df.columns), ["t", "count", "p", "p_float"])
        self.assertEqual(df["count"].sum(), pair_count(5, 2, 2))

    def test_to_dictionary_uses_exact_strings(self):
        d = exact_distribution(5, 2, 2).to_dictionary()
        self.assertEqual(d["probabilities"]["0"], "1/5")


@ddt
class Parity(unittest.TestCase):
    @data(
        (4, 2, Fraction(1, 3), Fraction(2, 3), 2),
        (4, 1, Fraction(1, 2), Fraction(1, 2), 0),
        (3, 1, Fraction(1, 3), Fraction(2, 3), 1)
    )
    @unpack
    def test_known_values(self, n, c, even, odd, fixed):
        result = parity_probability(n, c)
        self.assertEqual((result.p_even, result.p_odd, result.fixed_point_count), (even, odd, fixed))

    def test_involution_flips_parity_outside_fixed_points(self):
        for n in range(2, 9):
            for c in range(1, n):
                for k in (1, 2):
                    for subset in map(frozenset, itertools.combinations(range(k, n + k), c)):
                        image = pairing_involution(subset, n, k)
                        self.assertEqual(pairing_involution(image, n, k), subset)
                        self.assertEqual(len(image), c)
                        if image != subset:
                            self.assertNotEqual(sum(image) % 2, sum(subset) % 2)

    def test_fixed_points_closed_form(self):
        for n in range(2, 15):
            for c in range(1, n):
                for k in (1, 3):
                    self.assertEqual(fixed_point_count(n, c, k), fixed_point_closed_form(n, c), (n, c, k))

    def test_worst_parity_is_below_bound(self):
        for n in range(2, 15):
            for c in range(1, n):
                for k in (1, 3):
                    result = parity_probability(n, c, k)
                    self.assertEqual(result.worst, max(result.p_even, result.p_odd))
                    self.assertEqual(result.worst, (1 + Fraction(result.fixed_point_count, math.comb(n, c))) / 2)
                    self.assertLessEqual(result.worst, parity_bound(n, c))

    @data((1, 1), (4, 0), (4, 4), (4, 2, 0))
    def test_invalid(self, args):
        with self.assertRaises(InvalidDifferenceSpec):
            parity_probability(*args)


class CollisionProfile(unittest.TestCase):
    def test_double_star(self):
        g = parse_edge_list("0 1\n0 2\n0 3\n1 4\n1 5\n")
        profile = edge_collision_profile(g)
        self.assertEqual(profile.edge_probabilities, [Fraction(1, 5), 0, 0, 0, 0])
        self.assertEqual(profile.tight_edges, [0])
        self.assertEqual(profile.union_sum, Fraction(1, 5))
        self.assertEqual(profile.success_lower_bound, Fraction(4, 5))
        self.assertEqual(sorted(profile.distance2_pairs), [(0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (4, 5)])
        self.assertGreaterEqual(profile.distance2_union_sum, profile.union_sum)

    def test_leaf_edges_never_collide(self):
        self.assertEqual(edge_collision_probability(6, 1, 3), 0)
        self.assertEqual(edge_collision_probability(6, 4, 1), 0)

    def test_paw(self):
        g = parse_edge_list("0 1\n1 2\n2 0\n2 3\n")
        profile = edge_collision_profile(g, distance2=False)
        self.assertEqual(profile.edge_probabilities, [0, Fraction(1, 6), Fraction(1, 6), 0])
        self.assertEqual(profile.distance2_pairs, [])
        self.assertEqual(profile.success_lower_bound, Fraction(2, 3))

    def test_k22_pairs(self):
        profile = edge_collision_profile(generate('complete_bipartite', (2, 2)))
        self.assertEqual(set(profile.distance2_probabilities), {Fraction(1, 3)})

    def test_not_labellable(self):
        with self.assertRaises(NotLabellableError):
            edge_collision_profile(generate('path', (2,)))

    def test_to_dictionary_and_dataframe(self):
        profile = edge_collision_profile(generate('cycle', (5,)))
        self.assertEqual(profile.to_dictionary()["union_sum"], "0")
        self.assertEqual(len(profile.to_dataframe()), 5)


if __name__ == '__main__':
    unittest.main()

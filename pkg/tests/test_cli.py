#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the `antimagic` command line."""
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest.mock import patch

from ddt import ddt, data

from antimagic.cli import build_parser, main
from antimagic.core.rng import RngStream

C4_EDGES = "0 1\n1 2\n2 3\n3 0\n"
C4_LABELS = "0 1 1\n1 2 3\n2 3 2\n3 0 4\n"


def run(*argv):
    """Runs the command line, returns (exit code, stdout, stderr)."""
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    return code, json.loads(out) if out.strip() else None, err


@ddt
class Label(unittest.TestCase):
    def test_path(self):
        code, record, err = run_json('label', '--generate', 'path:10', '--seed', '7')
        self.assertEqual(code, 0)
        self.assertIn("seed: 7", err)
        self.assertEqual(record["seed"], 7)
        self.assertEqual(record["m"], 9)
        self.assertTrue(record["local_holds"])
        self.assertEqual(sorted(label for _, _, label in record["labelling"]), list(range(1, 10)))

    def test_offset(self):
        code, record, _ = run_json('label', '--generate', 'cycle:6', '--k', '5', '--seed', '1')
        self.assertEqual(code, 0)
        self.assertEqual(record["k"], 5)
        self.assertEqual(sorted(label for _, _, label in record["labelling"]), list(range(5, 11)))

    def test_same_seed_same_output(self):
        first = run_json('label', '--generate', 'random_gnp:12,0.4', '--seed', '11')[1]
        second = run_json('label', '--generate', 'random_gnp:12,0.4', '--seed', '11')[1]
        first.pop("wall_time")
        second.pop("wall_time")
        self.assertEqual(first, second)

    def test_fresh_seed_is_printed(self):
        code, record, err = run_json('label', '--generate', 'star:4')
        self.assertEqual(code, 0)
        self.assertIn(f"seed: {record['seed']}", err)

    def test_labelling_file_can_be_verified(self):
        with tempfile.TemporaryDirectory() as directory:
            graph, labels = os.path.join(directory, "k4.edges"), os.path.join(directory, "k4.labels")
            with open(graph, 'w') as f:
                f.write("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
            code, record, _ = run_json('label', '--in', graph, '--seed', '3', '--out', labels)
            self.assertEqual(code, 0)
            self.assertEqual(record["labelling_file"], labels)
            self.assertNotIn("labelling", record)
            code, record, _ = run_json('verify', '--in', graph, '--labels', labels)
        self.assertEqual(code, 0)
        self.assertTrue(record["predicates"]["local"]["holds"])

    def test_isolated_edge(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "k2.edges")
            with open(path, 'w') as f:
                f.write("0 1\n")
            with self.assertLogs('antimagic.cli', level='ERROR') as logs:
                code, out, _ = run('label', '--in', path, '--seed', '1')
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("isolated edge", logs.output[0])

    def test_rounds_exhausted(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "triangle_tail.edges")
            with open(path, 'w') as f:
                f.write("0 1\n1 2\n2 3\n1 3\n")
            with patch.object(RngStream, 'shuffle', lambda self, values: values):
                with self.assertLogs('antimagic.cli', level='ERROR'):
                    code, _, _ = run('label', '--in', path, '--seed', '1', '--max-rounds', '3')
        self.assertEqual(code, 3)

    @data(
        ('label', '--generate', 'path:4', '--k', '0'),
        ('label', '--generate', 'path:4', '--seed', '-1'),
        ('oracle', 'table', '5', '2'),
        ('no-such-command',)
    )
    def test_usage_errors(self, argv):
        code, _, err = run(*argv)
        self.assertEqual(code, 1)
        self.assertIn("usage:", err)

    def test_graph_is_required(self):
        with self.assertLogs('antimagic.cli', level='ERROR'):
            code, _, _ = run('label')
        self.assertEqual(code, 1)

    def test_in_and_generate_are_exclusive(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "c4.edges")
            with open(path, 'w') as f:
                f.write(C4_EDGES)
            with self.assertLogs('antimagic.cli', level='ERROR'):
                code, _, _ = run('label', '--in', path, '--generate', 'cycle:4')
        self.assertEqual(code, 1)

    def test_bad_generator(self):
        with self.assertLogs('antimagic.cli', level='ERROR'):
            code, _, _ = run('label', '--generate', 'cycle:2')
        self.assertEqual(code, 1)


class Verify(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.graph = os.path.join(self.directory.name, "c4.edges")
        self.labels = os.path.join(self.directory.name, "c4.labels")
        with open(self.graph, 'w') as f:
            f.write(C4_EDGES)

    def tearDown(self):
        self.directory.cleanup()

    def _labels(self, text):
        with open(self.labels, 'w') as f:
            f.write(text)

    def test_c4_is_local_but_not_globally_antimagic(self):
        self._labels(C4_LABELS)
        code, record, _ = run_json('verify', '--in', self.graph, '--labels', self.labels)
        self.assertEqual(code, 0)
        self.assertEqual(record["sums"], [5, 4, 5, 6])
        self.assertTrue(record["predicates"]["local"]["holds"])
        self.assertFalse(record["predicates"]["global"]["holds"])
        self.assertEqual(record["predicates"]["global"]["conflicts"], [[0, 2]])

    def test_missing_edge(self):
        self._labels("0 1 1\n1 2 3\n2 3 2\n")
        with self.assertLogs('antimagic.cli', level='ERROR'):
            code, out, _ = run('verify', '--in', self.graph, '--labels', self.labels)
        self.assertEqual(code, 1)
        self.assertEqual(out, "")

    def test_missing_file(self):
        with self.assertLogs('antimagic.cli', level='ERROR'):
            code, _, _ = run('verify', '--in', self.graph, '--labels', self.labels)
        self.assertEqual(code, 1)

    def test_out_file(self):
        self._labels(C4_LABELS)
        out = os.path.join(self.directory.name, "report.json")
        code, stdout, _ = run('verify', '--in', self.graph, '--labels', self.labels, '--out', out)
        self.assertEqual(code, 0)
        self.assertEqual(stdout, "")
        with open(out) as f:
            self.assertEqual(json.load(f)["k"], 1)


class EstimateCommand(unittest.TestCase):
    def test_cycle_always_succeeds(self):
        code, record, _ = run_json('estimate', '--generate', 'cycle:5', '--trials', '2000', '--seed', '3',
                                   '--edge', '0', '--exact')
        self.assertEqual(code, 0)
        self.assertEqual(record["success"]["successes"], 2000)
        self.assertEqual(record["edge_collision"]["successes"], 0)
        self.assertEqual(record["exact_success"], "1")
        self.assertEqual(record["per_edge_collisions"], [0] * 5)

    def test_bad_edge(self):
        with self.assertLogs('antimagic.cli', level='ERROR'):
            code, _, _ = run('estimate', '--generate', 'cycle:5', '--trials', '100', '--seed', '3', '--edge', '5')
        self.assertEqual(code, 1)

    def test_workers_do_not_change_reproducibility(self):
        argv = ('estimate', '--generate', 'complete:5', '--trials', '5000', '--seed', '21', '--workers', '2')
        self.assertEqual(run_json(*argv)[1], run_json(*argv)[1])


class Oracle(unittest.TestCase):
    def test_table_json(self):
        code, record, _ = run_json('oracle', 'table', '5', '2', '2', '--t', '0')
        self.assertEqual(code, 0)
        self.assertEqual(record["p"], "1/5")
        self.assertEqual(record["probabilities"]["0"], "1/5")

    def test_table_csv(self):
        code, out, _ = run('oracle', 'table', '5', '2', '2', '--format', 'csv')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "t,count,p,p_float")

    def test_table_text(self):
        code, out, _ = run('oracle', 'table', '6', '2', '1', '--format', 'text')
        self.assertEqual(code, 0)
        self.assertIn("1/10", out)

    def test_invalid_table(self):
        with self.assertLogs('antimagic.cli', level='ERROR'):
            code, _, _ = run('oracle', 'table', '4', '2', '2')
        self.assertEqual(code, 1)

    def test_parity(self):
        code, record, _ = run_json('oracle', 'parity', '4', '2')
        self.assertEqual(code, 0)
        self.assertEqual((record["p_even"], record["p_odd"], record["worst"]), ("1/3", "2/3", "2/3"))
        self.assertEqual(record["bound"], "2/3")

    def test_profile(self):
        code, record, _ = run_json('oracle', 'profile', '--generate', 'complete_bipartite:2,2')
        self.assertEqual(code, 0)
        self.assertEqual(record["union_sum"], "0")

    def test_cache(self):
        run('oracle', 'table', '7', '3', '2')
        code, record, _ = run_json('oracle', 'cache', '--clear')
        self.assertEqual(code, 0)
        self.assertEqual(record["dropped"], record["entries"])
        record = run_json('oracle', 'cache')[1]
        self.assertEqual(record["entries"], 0)
        self.assertGreaterEqual(record["disk_size"], 0)


class Others(unittest.TestCase):
    def test_audit(self):
        code, record, _ = run_json('audit', '--n-max', '8', '--statements', 'global', 'equal')
        self.assertEqual(code, 0)
        self.assertTrue(record["passed"])

    def test_audit_failure(self):
        from fractions import Fraction
        with patch('antimagic.oracle.audit.parity_bound', return_value=Fraction(0)):
            with self.assertLogs('antimagic.cli', level='ERROR'):
                code, record, _ = run_json('audit', '--n-max', '4', '--statements', 'parity')
        self.assertEqual(code, 4)
        self.assertFalse(record["passed"])

    def test_chi_la(self):
        code, record, _ = run_json('chi-la', '--generate', 'star:3')
        self.assertEqual(code, 0)
        self.assertEqual(record["chi_la"], 4)

    def test_chi_la_random_graph_is_reproducible(self):
        first = run_json('chi-la', '--generate', 'random_tree:6', '--seed', '3')
        second = run_json('chi-la', '--generate', 'random_tree:6', '--seed', '3')
        self.assertEqual(first[0], 0)
        self.assertIn("seed: 3", first[2])
        self.assertEqual(first[1], second[1])

    def test_profile_random_graph_is_reproducible(self):
        argv = ('oracle', 'profile', '--generate', 'random_tree:8', '--seed', '5')
        first, second = run_json(*argv), run_json(*argv)
        self.assertEqual(first[0], 0)
        self.assertEqual(first[1], second[1])

    def test_verify_random_graph_with_seed(self):
        with tempfile.TemporaryDirectory() as directory:
            labels = os.path.join(directory, "tree.labels")
            code, _, _ = run_json('label', '--generate', 'random_tree:8', '--seed', '12', '--out', labels)
            self.assertEqual(code, 0)
            code, record, err = run_json('verify', '--generate', 'random_tree:8', '--seed', '12', '--labels', labels)
        self.assertEqual(code, 0)
        self.assertIn("seed: 12", err)
        self.assertTrue(record["predicates"]["local"]["holds"])

    def test_bench_one_graph(self):
        code, records, _ = run_json('bench', '--generate', 'complete:5', '--repeats', '5', '--seed', '4')
        self.assertEqual(code, 0)
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]["seed"], 4)
        self.assertEqual(records[0]["repeats"], 5)

    def test_k2n(self):
        code, records, _ = run_json('k2n', '--n-list', '4', '--trials', '10000', '--seed', '2')
        self.assertEqual(code, 0)
        self.assertEqual(records[0]["n"], 4)
        self.assertEqual(records[0]["seed"], 2)

    def test_k2n_needs_enough_trials(self):
        with self.assertLogs('antimagic.cli', level='ERROR'):
            code, _, _ = run('k2n', '--n-list', '4', '--trials', '100', '--seed', '2')
        self.assertEqual(code, 1)

    def test_k2n_plot(self):
        try:
            import matplotlib.pyplot as plt
        except ImportError:
            self.skipTest("Can't import matplotlib")
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "k2n.png")
            code, _, _ = run('k2n', '--n-list', '3', '4', '--trials', '10000', '--seed', '2', '--plot', path)
            self.assertEqual(code, 0)
            self.assertTrue(os.path.isfile(path))
        plt.close('all')

    def test_parser_lists_every_command(self):
        help_text = build_parser().format_help()
        for command in ('label', 'verify', 'estimate', 'oracle', 'audit', 'chi-la', 'bench', 'k2n'):
            self.assertIn(command, help_text)


if __name__ == '__main__':
    unittest.main()

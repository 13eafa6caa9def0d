"""
antimagic.sampler
-----------------

The randomized labeller: uniform random labellings repeated until one is local antimagic, Monte Carlo estimators of
collision and success probabilities, and the rounds benchmark.
"""
from .bench import BenchResult, BenchTable, bench_rounds, default_corpus
from .exceptions import RoundsExhaustedError, VerificationFailure
from .las_vegas import random_permutation, las_vegas_label, default_max_rounds
from .monte_carlo import run_trials, estimate_edge_collision, estimate_pair_collision, estimate_success, \
    exhaustive_success_probability, exhaustive_edge_collision
from .run_stats import RunStats

__all__ = ['RunStats', 'BenchResult', 'BenchTable', 'RoundsExhaustedError', 'VerificationFailure',
           'random_permutation', 'las_vegas_label', 'default_max_rounds', 'run_trials', 'estimate_edge_collision',
           'estimate_pair_collision', 'estimate_success', 'exhaustive_success_probability',
           'exhaustive_edge_collision', 'bench_rounds', 'default_corpus']

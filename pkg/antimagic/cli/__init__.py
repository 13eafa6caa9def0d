"""
Command line front end
----------------------

Usage::

    antimagic label --generate path:10 --seed 7
    antimagic verify --in graph.edges --labels graph.labels
    antimagic estimate --generate random_gnp:20,0.3 --trials 100000 --workers 4
    antimagic oracle table 5 2 2 --format text
    antimagic audit --n-max 12
    antimagic chi-la --generate star:3
    antimagic bench --repeats 20 --plot bench.png
    antimagic k2n --n-list 8 16 32 --trials 100000

Exit codes are 0 on success, 1 on usage or input errors, 2 when the graph has no local antimagic labelling,
3 when the round budget is exhausted and 4 when a check that must hold failed.
"""
import argparse
import logging
import sys
from typing import List, Optional

from . import commands
from .output import FORMATS
from ..core.exceptions import AntimagicError
from ..graphs import NotLabellableError
from ..sampler import RoundsExhaustedError, VerificationFailure

log = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_NOT_LABELLABLE = 2
EXIT_ROUNDS_EXHAUSTED = 3
EXIT_VERIFICATION_FAILURE = 4


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(value: str) -> int:
    try:
        as_int = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not an integer")
    if as_int < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {as_int}")
    return as_int


def _seed(value: str) -> int:
    try:
        as_int = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not an integer")
    if not 0 <= as_int < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64 bits integer, got {as_int}")
    return as_int


def _confidence(value: str) -> float:
    try:
        as_float = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not a number")
    if not 0. < as_float < 1.:
        raise argparse.ArgumentTypeError(f"confidence must lie in (0, 1), got {as_float}")
    return as_float


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    common.add_argument('--format', choices=FORMATS, default='json', help="output format (default: json)")
    common.add_argument('--k', type=_positive_int, default=1, help="smallest label (default: 1)")
    common.add_argument('--workers', type=_positive_int, default=1, help="worker processes (default: 1)")
    return common


def _graph_options() -> argparse.ArgumentParser:
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument('--in', dest='input', metavar='FILE', help="edge list file")
    graph.add_argument('--generate', metavar='FAMILY:ARGS', help="graph family, e.g. cycle:6 or random_gnp:20,0.3")
    graph.add_argument('--remap', action='store_true', help="renumber the vertex ids of --in to 0..|V|-1")
    return graph


def _seed_options() -> argparse.ArgumentParser:
    seed = argparse.ArgumentParser(add_help=False)
    seed.add_argument('--seed', type=_seed, default=None, help="base seed, a fresh one is drawn and printed if omitted")
    return seed


def _out_option(parser: argparse.ArgumentParser):
    parser.add_argument('--out', metavar='FILE', default=None, help="write the records to FILE instead of stdout")


def build_parser() -> ArgumentParser:
    common, graph, seed = _common_options(), _graph_options(), _seed_options()
    parser = ArgumentParser(prog='antimagic', description="Local antimagic labelling toolkit",
                            formatter_class=argparse.RawDescriptionHelpFormatter, epilog=__doc__)
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    label = subparsers.add_parser('label', parents=[common, graph, seed],
                                  help="find a local antimagic labelling by random sampling")
    label.add_argument('--max-rounds', type=_positive_int, default=None, help="round budget (default: 1000 m)")
    label.add_argument('--out', metavar='FILE', default=None, help="write the labelling to FILE")
    label.set_defaults(func=commands.cmd_label)

    verify = subparsers.add_parser('verify', parents=[common, graph, seed],
                                   help="check the local, distance-2 and global predicates of a labelling")
    verify.add_argument('--labels', metavar='FILE', required=True, help="labelling file, one 'u v label' per edge")
    _out_option(verify)
    verify.set_defaults(func=commands.cmd_verify)

    estimate = subparsers.add_parser('estimate', parents=[common, graph, seed],
                                     help="Monte Carlo estimate of the local antimagic probability")
    estimate.add_argument('--trials', type=_positive_int, default=10_000, help="labellings drawn (default: 10000)")
    estimate.add_argument('--edge', type=int, default=None, help="also report the collision estimate of this edge")
    estimate.add_argument('--confidence', type=_confidence, default=None, help="confidence of the intervals")
    estimate.add_argument('--exact', action='store_true', help="add the exact probability (small graphs only)")
    _out_option(estimate)
    estimate.set_defaults(func=commands.cmd_estimate)

    oracle = subparsers.add_parser('oracle', help="exact distributions of label differences")
    oracle_commands = oracle.add_subparsers(dest='oracle_command', required=True, metavar='ORACLE_COMMAND')
    table = oracle_commands.add_parser('table', parents=[common], help="difference distribution of (n, a, b)")
    table.add_argument('n', type=_positive_int)
    table.add_argument('a', type=_positive_int)
    table.add_argument('b', type=_positive_int)
    table.add_argument('--t', type=int, default=None, help="also report the probability of this value")
    _out_option(table)
    table.set_defaults(func=commands.cmd_oracle_table, seed=None)
    parity = oracle_commands.add_parser('parity', parents=[common], help="parity of a random c-subset sum")
    parity.add_argument('n', type=_positive_int)
    parity.add_argument('c', type=_positive_int)
    _out_option(parity)
    parity.set_defaults(func=commands.cmd_oracle_parity, seed=None)
    profile = oracle_commands.add_parser('profile', parents=[common, graph, seed],
                                         help="exact per-edge collision probabilities of a graph")
    _out_option(profile)
    profile.set_defaults(func=commands.cmd_oracle_profile)
    cached = oracle_commands.add_parser('cache', parents=[common], help="count or drop the cached difference tables")
    cached.add_argument('--clear', action='store_true', help="drop every cached table")
    _out_option(cached)
    cached.set_defaults(func=commands.cmd_oracle_cache, seed=None)

    audit = subparsers.add_parser('audit', parents=[common], help="check the probability bounds exactly")
    audit.add_argument('--n-max', type=_positive_int, required=True, help="largest number of labels")
    audit.add_argument('--n-min', type=_positive_int, default=2, help="smallest number of labels (default: 2)")
    audit.add_argument('--k-set', type=_positive_int, nargs='+', default=[1], help="offsets to audit (default: 1)")
    audit.add_argument('--statements', nargs='+', default=None, help="subset of the statements (default: all)")
    audit.add_argument('--progress', action='store_true', help="show a progress bar")
    _out_option(audit)
    audit.set_defaults(func=commands.cmd_audit, seed=None)

    chi_la = subparsers.add_parser('chi-la', parents=[common, graph, seed],
                                   help="local antimagic chromatic number by exhaustive search")
    chi_la.add_argument('--m-cap', type=_positive_int, default=None, help="largest edge count accepted")
    chi_la.add_argument('--progress', action='store_true', help="show a progress bar")
    _out_option(chi_la)
    chi_la.set_defaults(func=commands.cmd_chi_la)

    bench = subparsers.add_parser('bench', parents=[common, graph, seed],
                                  help="Las Vegas rounds over a graph corpus, or over one graph")
    bench.add_argument('--repeats', type=_positive_int, default=50, help="runs per graph (default: 50)")
    bench.add_argument('--max-rounds', type=_positive_int, default=None, help="round budget per run")
    bench.add_argument('--plot', metavar='FILE', default=None, help="save mean rounds against m to FILE")
    bench.add_argument('--progress', action='store_true', help="show a progress bar")
    _out_option(bench)
    bench.set_defaults(func=commands.cmd_bench)

    k2n = subparsers.add_parser('k2n', parents=[common, seed],
                                help="equal sum probability of two degree 2 vertices of K_2,n")
    k2n.add_argument('--n-list', type=_positive_int, nargs='+', default=[8, 16, 32], help="values of n")
    k2n.add_argument('--trials', type=_positive_int, default=100_000, help="labellings drawn per n")
    k2n.add_argument('--no-exact', action='store_true', help="skip the exact probabilities")
    k2n.add_argument('--plot', metavar='FILE', default=None, help="save the scaling plot to FILE")
    k2n.add_argument('--progress', action='store_true', help="show a progress bar")
    _out_option(k2n)
    k2n.set_defaults(func=commands.cmd_k2n)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parses argv, runs the sub-command and maps errors to exit codes.

    Returns
    -------
    int
        0 ok, 1 usage or input error, 2 not labellable, 3 rounds exhausted, 4 failed verification
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except NotLabellableError as e:
        log.error(str(e))
        return EXIT_NOT_LABELLABLE
    except RoundsExhaustedError as e:
        log.error(str(e))
        return EXIT_ROUNDS_EXHAUSTED
    except VerificationFailure as e:
        log.error(f"internal verification failure: {e}")
        return EXIT_VERIFICATION_FAILURE
    except (AntimagicError, ValueError, KeyError, IndexError, OSError) as e:
        log.error(str(e))
        return EXIT_USAGE


__all__ = ['main', 'build_parser']

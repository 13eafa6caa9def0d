"""Sub-command handlers, each takes the parsed arguments and returns an exit status."""
import argparse
import logging
import sys
from typing import Sequence

from .exceptions import CommandLineError
from .output import emit
from ..chromatic import chi_la_exhaustive
from ..core.cache import cache_disk_size
from ..core.rng import RngStream, fresh_seed
from ..core.statistics import Estimate
from ..experiments import K2nScaling, k2n_scaling
from ..graphs import Graph, generate, load_edge_list, parse_generator_spec, ensure_labellable
from ..labelling import Predicate, format_labelling, load_labelling, verify, vertex_sums
from ..oracle import audit_bounds, cached_table_count, clear_table_cache, edge_collision_profile, exact_distribution, \
    parity_bound, parity_probability
from ..sampler import VerificationFailure, bench_rounds, las_vegas_label, run_trials, \
    exhaustive_success_probability

log = logging.getLogger(__name__)

RANDOM_FAMILIES = ('random_gnp', 'random_tree')
MIN_K2N_TRIALS = 10_000

EXIT_OK = 0
EXIT_FAILED_CHECK = 4


def effective_seed(args: argparse.Namespace) -> int:
    """Seed given with --seed or a fresh one, printed on stderr the first time it is resolved."""
    if getattr(args, 'effective_seed', None) is None:
        args.effective_seed = args.seed if args.seed is not None else fresh_seed()
        print(f"seed: {args.effective_seed}", file=sys.stderr)
    return args.effective_seed


def load_graph(args: argparse.Namespace, required: bool = True) -> Graph or None:
    if args.input is not None and args.generate is not None:
        raise CommandLineError("--in and --generate are mutually exclusive")
    if args.input is not None:
        return load_edge_list(args.input, remap=args.remap)
    if args.generate is not None:
        family, params = parse_generator_spec(args.generate)
        seed = effective_seed(args) if family in RANDOM_FAMILIES else None
        return generate(family, params, seed=seed)
    if required:
        raise CommandLineError("a graph is needed, use --in FILE or --generate FAMILY:ARGS")
    return None


def _graph_record(g: Graph) -> dict:
    return {"graph": g.name, "vertex_count": g.vertex_count, "m": g.m}


def _write(args: argparse.Namespace, records, frame=None):
    if getattr(args, 'out', None):
        with open(args.out, 'w', encoding='utf-8') as f:
            emit(records, args.format, f, frame)
    else:
        emit(records, args.format, frame=frame)


def _save_plot(ax, path: str):
    ax.figure.savefig(path)
    log.info(f"plot written to {path}")


def cmd_label(args: argparse.Namespace) -> int:
    seed = effective_seed(args)
    g = load_graph(args)
    labelling, stats = las_vegas_label(g, args.k, RngStream(seed), args.max_rounds)
    reports = verify(g, labelling)
    if not reports[Predicate.LOCAL].holds:
        raise VerificationFailure(f"labelling {labelling.tolist()} failed re-verification")
    record = {**_graph_record(g), "seed": seed, "k": args.k, **stats.to_dictionary(),
              **{f"{predicate.value}_holds": report.holds for predicate, report in reports.items()}}
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(format_labelling(g, labelling))
        record["labelling_file"] = args.out
    else:
        record["labelling"] = [[g.original_id(u), g.original_id(v), label]
                               for (u, v), label in zip(g.edges, labelling.tolist())]
    emit(record, args.format)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args)
    labelling = load_labelling(args.labels, g)
    sums = vertex_sums(g, labelling)
    reports = verify(g, labelling)
    record = {**_graph_record(g), "k": labelling.offset_k, "sums": sums.tolist(),
              "predicates": {predicate.value: report.to_dictionary(g) for predicate, report in reports.items()}}
    _write(args, record)
    return EXIT_OK


def cmd_estimate(args: argparse.Namespace) -> int:
    seed = effective_seed(args)
    g = load_graph(args)
    ensure_labellable(g)
    if args.edge is not None and not 0 <= args.edge < g.m:
        raise CommandLineError(f"--edge must lie in [0, {g.m}), got {args.edge}")
    stats = run_trials(g, args.k, args.trials, RngStream(seed), args.workers)
    record = {**_graph_record(g), "seed": seed, "k": args.k, "workers": args.workers,
              "success": Estimate(stats.successes, stats.trials, args.confidence).to_dictionary(),
              "per_edge_collisions": stats.per_edge_collisions.tolist()}
    if args.edge is not None:
        record["edge"] = list(g.edges[args.edge])
        record["edge_collision"] = Estimate(int(stats.per_edge_collisions[args.edge]), stats.trials,
                                            args.confidence).to_dictionary()
    if args.exact:
        exact = exhaustive_success_probability(g, args.k)
        record["exact_success"] = str(exact)
        record["exact_success_float"] = float(exact)
    _write(args, record)
    return EXIT_OK


def cmd_oracle_table(args: argparse.Namespace) -> int:
    table = exact_distribution(args.n, args.a, args.b, args.k, args.workers)
    record = table.to_dictionary()
    if args.t is not None:
        p = table.p(args.t)
        record.update({"t": args.t, "p": str(p), "p_float": float(p)})
    _write(args, record, frame=table.to_dataframe())
    return EXIT_OK


def cmd_oracle_parity(args: argparse.Namespace) -> int:
    result = parity_probability(args.n, args.c, args.k)
    record = result.to_dictionary()
    record["worst"] = str(result.worst)
    if args.k == 1:
        record["bound"] = str(parity_bound(args.n, args.c))
    _write(args, record)
    return EXIT_OK


def cmd_oracle_profile(args: argparse.Namespace) -> int:
    g = load_graph(args)
    ensure_labellable(g)
    profile = edge_collision_profile(g, args.k, workers=args.workers)
    _write(args, {**_graph_record(g), "k": args.k, **profile.to_dictionary()}, frame=profile.to_dataframe())
    return EXIT_OK


def cmd_oracle_cache(args: argparse.Namespace) -> int:
    record = {"entries": cached_table_count(), "disk_size": cache_disk_size()}
    if args.clear:
        record["dropped"] = clear_table_cache()
    _write(args, record)
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    report = audit_bounds(args.n_max, args.k_set, args.statements, n_min=args.n_min, workers=args.workers,
                          progress=args.progress)
    _write(args, report.to_dictionary(), frame=report.to_dataframe())
    if not report.passed:
        for record in report.failures:
            log.error(f"bound violated: {record.to_dictionary()}")
        return EXIT_FAILED_CHECK
    return EXIT_OK


def cmd_chi_la(args: argparse.Namespace) -> int:
    g = load_graph(args)
    result = chi_la_exhaustive(g, args.k, args.m_cap, workers=args.workers, progress=args.progress)
    _write(args, {**_graph_record(g), "k": args.k, **result.to_dictionary(g)})
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    seed = effective_seed(args)
    g = load_graph(args, required=False)
    table = bench_rounds([g] if g is not None else None, args.repeats, RngStream(seed), args.k, args.max_rounds,
                         progress=args.progress)
    records = [{**record, "seed": seed} for record in table.to_dictionary()]
    _write(args, records, frame=table.to_dataframe())
    if args.plot:
        _save_plot(table.plot(), args.plot)
    return EXIT_OK


def cmd_k2n_experiment(n_list: Sequence[int], trials: int, seed: int, workers: int = 1,
                       exact: bool = True, progress: bool = False) -> K2nScaling:
    """Monte Carlo estimate of the equal sum probability of two degree 2 vertices of K_2,n for every n."""
    if any(n < 2 for n in n_list):
        raise CommandLineError(f"every n must be at least 2, got {list(n_list)}")
    if trials < MIN_K2N_TRIALS:
        raise CommandLineError(f"k2n needs at least {MIN_K2N_TRIALS} trials, got {trials}")
    scaling = k2n_scaling(n_list, trials, RngStream(seed), workers, exact=exact, progress=progress)
    log.info(f"p_hat * n spans a factor {scaling.scaled_band():.3g} over n = {list(n_list)}")
    return scaling


def cmd_k2n(args: argparse.Namespace) -> int:
    seed = effective_seed(args)
    scaling = cmd_k2n_experiment(args.n_list, args.trials, seed, args.workers, exact=not args.no_exact,
                                 progress=args.progress)
    records = [{**point.to_dictionary(), "seed": seed} for point in scaling.points]
    _write(args, records, frame=scaling.to_dataframe())
    if args.plot:
        _save_plot(scaling.plot(), args.plot)
    return EXIT_OK


__all__ = ['cmd_label', 'cmd_verify', 'cmd_estimate', 'cmd_oracle_table', 'cmd_oracle_parity', 'cmd_oracle_profile',
           'cmd_audit', 'cmd_chi_la', 'cmd_bench', 'cmd_k2n', 'cmd_k2n_experiment', 'effective_seed', 'load_graph']

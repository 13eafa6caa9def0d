import logging
import time
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pds

from .las_vegas import las_vegas_label
from .run_stats import RunStats
from ..core import progress_bar
from ..core.rng import RngStream
from ..graphs import Graph, generate

log = logging.getLogger(__name__)

GraphSpec = Tuple[str, Tuple]


def default_corpus() -> List[GraphSpec]:
    """Labellable graphs with up to 200 edges used by the rounds benchmark."""
    return [('path', (11,)), ('path', (51,)), ('path', (101,)), ('path', (201,)),
            ('cycle', (10,)), ('cycle', (50,)), ('cycle', (200,)),
            ('star', (10,)), ('star', (200,)),
            ('complete_bipartite', (2, 5)), ('complete_bipartite', (2, 10)), ('complete_bipartite', (2, 50)),
            ('complete_bipartite', (2, 100)), ('complete_bipartite', (5, 8)),
            ('complete', (5,)), ('complete', (10,)), ('complete', (20,)),
            ('random_tree', (30,)), ('random_tree', (200,)),
            ('random_gnp', (30, 0.2)), ('random_gnp', (60, 0.1))]


class BenchResult:
    """Las Vegas rounds measured on one graph."""
    __slots__ = ['name', 'vertex_count', 'm', 'runs']

    def __init__(self, name: str, vertex_count: int, m: int, runs: List[RunStats]):
        self.name = name
        self.vertex_count = vertex_count
        self.m = m
        self.runs = runs

    def __repr__(self):
        return f"<BenchResult: {self.name} m={self.m} mean rounds={self.mean_rounds:.3f}>"

    @property
    def mean_rounds(self) -> float:
        return float(np.mean([r.rounds for r in self.runs]))

    @property
    def max_rounds(self) -> int:
        return max(r.rounds for r in self.runs)

    @property
    def wall_time(self) -> float:
        return sum(r.wall_time for r in self.runs)

    def to_dictionary(self) -> dict:
        return {
            "graph": self.name,
            "vertex_count": self.vertex_count,
            "m": self.m,
            "repeats": len(self.runs),
            "mean_rounds": self.mean_rounds,
            "max_rounds": self.max_rounds,
            "wall_time": self.wall_time
        }


class BenchTable:
    __slots__ = ['results', 'seed']

    def __init__(self, results: List[BenchResult], seed: int):
        self.results = results
        self.seed = seed

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __getitem__(self, item):
        return self.results[item]

    def to_dictionary(self) -> List[dict]:
        return [r.to_dictionary() for r in self.results]

    def to_dataframe(self) -> pds.DataFrame:
        return pds.DataFrame.from_records(self.to_dictionary())

    def plot(self, ax=None, **kwargs):
        from ..plotting import Plot
        df = self.to_dataframe().sort_values("m")
        return Plot().scatter(df["m"].values, df["mean_rounds"].values, ax=ax, xlabel="edges m",
                              ylabel="mean rounds", reference=(df["m"].values, df["m"].values, "m"), **kwargs)


def bench_rounds(corpus: Optional[Sequence[GraphSpec]] = None, repeats: int = 50, rng: Optional[RngStream] = None,
                 k: int = 1, max_rounds: Optional[int] = None, progress: bool = False) -> BenchTable:
    """Runs the Las Vegas labeller repeats times on every graph of the corpus.

    Graph i of the corpus is generated with the base seed and labelled with stream (base seed, i), so the table is a
    deterministic function of the seed, wall times aside.

    Parameters
    ----------
    corpus: Sequence[Tuple[str, Tuple]], optional
        (family, params) pairs or ready made graphs, defaults to :func:`default_corpus`
    repeats: int
        Las Vegas runs per graph
    rng: RngStream, optional
        gives the base seed
    k: int
        smallest label
    max_rounds: int, optional
        forwarded to :func:`las_vegas_label`
    progress: bool
        shows a progress bar over the corpus

    Returns
    -------
    BenchTable
        one BenchResult per graph
    """
    rng = rng or RngStream()
    corpus = default_corpus() if corpus is None else list(corpus)
    results = []
    for index, spec in enumerate(progress_bar(progress=progress, desc="bench", total=len(corpus))(corpus)):
        g = spec if isinstance(spec, Graph) else generate(spec[0], spec[1], seed=rng.base_seed)
        stream = rng.spawn(index)
        runs = []
        start = time.perf_counter()
        for _ in range(repeats):
            _, stats = las_vegas_label(g, k, stream, max_rounds)
            runs.append(stats)
        log.debug(f"{g.name}: {repeats} runs in {time.perf_counter() - start:.3f}s")
        results.append(BenchResult(g.name or repr(g), g.vertex_count, g.m, runs))
    return BenchTable(results, rng.base_seed)

import logging

from ..graphs import Graph, ensure_labellable
from ..labelling import Census, Labelling, exhaustive_census, vertex_sums

log = logging.getLogger(__name__)


class ChiLaResult:
    """Smallest number of distinct vertex sums over the local antimagic labellings of a graph.

    Attributes
    ----------
    chi_la: int
        the local antimagic chromatic number
    witness: Labelling
        lexicographically smallest local antimagic labelling using chi_la sums
    total_labellings: int
        m!
    local_antimagic_count: int
        number of local antimagic labellings
    distance2_count: int
        labellings distinguishing every pair at distance at most 2
    antimagic_count: int
        labellings giving all vertices distinct sums
    """
    __slots__ = ['chi_la', 'witness', 'total_labellings', 'local_antimagic_count', 'distance2_count',
                 'antimagic_count']

    def __init__(self, census: Census):
        self.chi_la = census.min_distinct
        self.witness = census.witness
        self.total_labellings = census.total
        self.local_antimagic_count = census.local_count
        self.distance2_count = census.distance2_count
        self.antimagic_count = census.global_count

    def __repr__(self):
        return f"<ChiLaResult: chi_la={self.chi_la} witness={self.witness.tolist()}>"

    def to_dictionary(self, g: Graph or None = None) -> dict:
        d = {
            "chi_la": self.chi_la,
            "counts": {
                "total_labellings": self.total_labellings,
                "local_antimagic": self.local_antimagic_count,
                "distance2": self.distance2_count,
                "antimagic": self.antimagic_count
            },
            "witness": self.witness.tolist()
        }
        if g is not None:
            d["witness"] = [[g.original_id(u), g.original_id(v), label]
                            for (u, v), label in zip(g.edges, self.witness.tolist())]
        return d


def chi_la_exhaustive(g: Graph, k: int = 1, m_cap: int or None = None, workers: int = 1,
                      progress: bool = False) -> ChiLaResult:
    """Scans all m! labellings and keeps the local antimagic one with fewest distinct sums.

    Parameters
    ----------
    g: Graph
        graph without isolated edge
    k: int
        smallest label
    m_cap: int, optional
        largest edge count accepted, CHROMATIC/m_cap by default, may be raised up to CHROMATIC/m_cap_limit
    workers: int
        number of processes
    progress: bool
        shows a progress bar

    Returns
    -------
    ChiLaResult
        chi_la, witness and counts

    Raises
    ------
    NotLabellableError
        g has an isolated edge or no edge
    SizeCapExceeded
        m above m_cap

    Examples
    --------
    >>> from antimagic.graphs import generate
    >>> chi_la_exhaustive(generate('path', (3,))).chi_la
    3
    """
    ensure_labellable(g)
    census = exhaustive_census(g, k, m_cap, workers=workers, progress=progress)
    if census.local_count == 0:
        # unreachable for a graph without isolated edge
        raise RuntimeError(f"no local antimagic labelling found for {g}")
    log.debug(f"{g}: chi_la={census.min_distinct} over {census.local_count} local antimagic labellings")
    return ChiLaResult(census)


def distinct_sum_count(g: Graph, labelling: Labelling) -> int:
    """Number of distinct vertex sums, the number of colours the labelling uses.

    Examples
    --------
    >>> from antimagic.graphs import generate
    >>> from antimagic.labelling import Labelling
    >>> distinct_sum_count(generate('cycle', (3,)), Labelling([1, 2, 3]))
    3
    """
    return vertex_sums(g, labelling).distinct_count()

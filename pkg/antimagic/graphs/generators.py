import logging
from typing import Sequence, Tuple

import networkx as nx
import numpy as np

from .exceptions import InvalidGraphParameters
from .graph import Graph, from_networkx
from .validation import validate
from ..config import graph as graph_cfg
from ..core.rng import fresh_seed

log = logging.getLogger(__name__)

FAMILIES = ('path', 'cycle', 'star', 'complete', 'complete_bipartite', 'random_gnp', 'random_tree')


def _expect(params: Sequence, count: int, family: str, usage: str):
    if len(params) != count:
        raise InvalidGraphParameters(f"{family} expects {usage}, got {tuple(params)}")


def _as_int(value, family: str) -> int:
    try:
        as_float = float(value)
    except (TypeError, ValueError):
        raise InvalidGraphParameters(f"{family}: '{value}' is not an integer")
    if not as_float.is_integer():
        raise InvalidGraphParameters(f"{family}: '{value}' is not an integer")
    return int(as_float)


def _salted_seed(seed: int, salt: int) -> int:
    return int(np.random.SeedSequence([seed, salt]).generate_state(1, dtype=np.uint64)[0])


def _path(n: int) -> Graph:
    if n < 2:
        raise InvalidGraphParameters(f"path needs at least 2 vertices, got {n}")
    return from_networkx(nx.path_graph(n), name=f"path:{n}")


def _cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphParameters(f"cycle length must be at least 3, got {n}")
    return Graph(n, nx.utils.pairwise(range(n), cyclic=True), name=f"cycle:{n}")


def _star(leaves: int) -> Graph:
    if leaves < 1:
        raise InvalidGraphParameters(f"star needs at least one leaf, got {leaves}")
    return from_networkx(nx.star_graph(leaves), name=f"star:{leaves}")


def _complete(n: int) -> Graph:
    if n < 2:
        raise InvalidGraphParameters(f"complete graph needs at least 2 vertices, got {n}")
    return from_networkx(nx.complete_graph(n), name=f"complete:{n}")


def _complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise InvalidGraphParameters(f"complete_bipartite sides must be positive, got ({p}, {q})")
    # side A is 0 .. p-1, side B is p .. p+q-1, edges listed for u in A for v in B
    return Graph(p + q, ((u, p + v) for u in range(p) for v in range(q)), name=f"complete_bipartite:{p},{q}")


def _random_gnp(n: int, p: float, seed: int) -> Graph:
    if n < 3:
        raise InvalidGraphParameters(f"random_gnp needs at least 3 vertices, got {n}")
    if not 0. < p <= 1.:
        raise InvalidGraphParameters(f"random_gnp edge probability must lie in (0, 1], got {p}")
    retries = graph_cfg.gnp_max_retries()
    for salt in range(retries):
        g = from_networkx(nx.gnp_random_graph(n, p, seed=_salted_seed(seed, salt)), name=f"random_gnp:{n},{p}")
        if validate(g).is_labellable:
            if salt:
                log.warning(f"random_gnp({n}, {p}) seed {seed} needed {salt} regeneration(s)")
            return g
    raise InvalidGraphParameters(f"random_gnp({n}, {p}) produced no labellable graph in {retries} attempts")


def _random_tree(n: int, seed: int) -> Graph:
    if n < 3:
        raise InvalidGraphParameters(f"random_tree needs at least 3 vertices, got {n}")
    generator = np.random.Generator(np.random.PCG64(seed))
    prufer = generator.integers(0, n, size=n - 2).tolist()
    return from_networkx(nx.from_prufer_sequence(prufer), name=f"random_tree:{n}")


def generate(family: str, params: Sequence = (), seed: int or None = None) -> Graph:
    """Builds a graph of the given family.

    Parameters
    ----------
    family: str
        one of path, cycle, star, complete, complete_bipartite, random_gnp, random_tree
    params: Sequence
        family parameters: path n, cycle n, star leaves, complete n, complete_bipartite p q,
        random_gnp n p, random_tree n
    seed: int, optional
        only used by random families, the output is a deterministic function of (family, params, seed)

    Returns
    -------
    Graph
        the generated graph

    Raises
    ------
    InvalidGraphParameters
        unknown family or parameters out of range

    Examples
    --------
    >>> generate('cycle', (3,)).edges
    ((0, 1), (1, 2), (2, 0))
    >>> generate('complete_bipartite', (2, 4)).m
    8
    """
    params = tuple(params)
    if family == 'path':
        _expect(params, 1, family, "(n,)")
        return _path(_as_int(params[0], family))
    if family == 'cycle':
        _expect(params, 1, family, "(n,)")
        return _cycle(_as_int(params[0], family))
    if family == 'star':
        _expect(params, 1, family, "(leaves,)")
        return _star(_as_int(params[0], family))
    if family == 'complete':
        _expect(params, 1, family, "(n,)")
        return _complete(_as_int(params[0], family))
    if family == 'complete_bipartite':
        _expect(params, 2, family, "(p, q)")
        return _complete_bipartite(_as_int(params[0], family), _as_int(params[1], family))
    if family in ('random_gnp', 'random_tree'):
        if seed is None:
            seed = fresh_seed()
            log.info(f"{family} uses generated seed {seed}")
        if family == 'random_gnp':
            _expect(params, 2, family, "(n, p)")
            try:
                p = float(params[1])
            except (TypeError, ValueError):
                raise InvalidGraphParameters(f"random_gnp: '{params[1]}' is not a probability")
            return _random_gnp(_as_int(params[0], family), p, int(seed))
        _expect(params, 1, family, "(n,)")
        return _random_tree(_as_int(params[0], family), int(seed))
    raise InvalidGraphParameters(f"unknown graph family '{family}', expected one of {FAMILIES}")


def parse_generator_spec(spec: str) -> Tuple[str, Tuple[str, ...]]:
    """Splits a ``FAMILY:ARGS`` string.

    Examples
    --------
    >>> parse_generator_spec("complete_bipartite:2,4")
    ('complete_bipartite', ('2', '4'))
    >>> parse_generator_spec("random_gnp:10,0.3")
    ('random_gnp', ('10', '0.3'))
    """
    family, _, args = spec.partition(':')
    family = family.strip().replace('-', '_')
    params = tuple(arg.strip() for arg in args.split(',') if arg.strip())
    return family, params

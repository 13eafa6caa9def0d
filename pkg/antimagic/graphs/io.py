"""Edge-list text format.

Lines are either ``# comment``, blank, or ``u v`` with non-negative decimal ids. An optional header
``p <vertex_count> <edge_count>`` may appear before the first edge.
"""
import logging
from typing import Iterable, TextIO, Union

from .exceptions import GraphFormatError
from .graph import Graph
from ..config import graph as graph_cfg
from ..core.exceptions import SizeCapExceeded

log = logging.getLogger(__name__)


def _parse_id(token: str, line_number: int) -> int:
    if not token.isdecimal():
        raise GraphFormatError(f"expected a non negative integer vertex id, got '{token}'", line_number)
    return int(token)


def _lines(text: Union[str, TextIO, Iterable[str]]) -> Iterable[str]:
    if isinstance(text, str):
        return text.splitlines()
    return text


def parse_edge_list(text: Union[str, TextIO, Iterable[str]], remap: bool = False, name: str = "") -> Graph:
    """Parses an edge list.

    Parameters
    ----------
    text: str or file like
        edge-list content
    remap: bool
        when True, sparse vertex ids are mapped to 0 .. n-1 in increasing id order and the original ids are
        kept in ``Graph.vertex_ids``
    name: str
        graph name

    Returns
    -------
    Graph
        edges in file order, vertex_count is the header count or 1 + the largest id

    Raises
    ------
    GraphFormatError
        malformed line, self-loop, duplicate edge or header mismatch, the message names the line number

    Examples
    --------
    >>> parse_edge_list("0 1\\n1 2").edges
    ((0, 1), (1, 2))
    """
    header = None
    edges = []
    seen = {}
    max_edges = graph_cfg.max_edges()
    for line_number, raw in enumerate(_lines(text), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        if tokens[0] == 'p':
            if header is not None or edges:
                raise GraphFormatError("header must appear once, before the first edge", line_number)
            if len(tokens) != 3:
                raise GraphFormatError("header must read 'p <vertex_count> <edge_count>'", line_number)
            header = (_parse_id(tokens[1], line_number), _parse_id(tokens[2], line_number), line_number)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got '{line}'", line_number)
        u, v = _parse_id(tokens[0], line_number), _parse_id(tokens[1], line_number)
        if u == v:
            raise GraphFormatError(f"self-loop on vertex {u}", line_number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v}), first seen on line {seen[key]}", line_number)
        seen[key] = line_number
        edges.append((u, v))
        if len(edges) > max_edges:
            raise SizeCapExceeded(f"more than {max_edges} edges at line {line_number}")

    if header is not None:
        declared_vertices, declared_edges, header_line = header
        if declared_edges != len(edges):
            raise GraphFormatError(f"header declares {declared_edges} edges, found {len(edges)}", header_line)

    if remap:
        ids = sorted({x for edge in edges for x in edge})
        if header is not None and declared_vertices < len(ids):
            raise GraphFormatError(f"header declares {declared_vertices} vertices but {len(ids)} ids are used",
                                   header_line)
        index = {original: i for i, original in enumerate(ids)}
        edges = [(index[u], index[v]) for u, v in edges]
        log.debug(f"remapped {len(ids)} vertex ids")
        return Graph(len(ids), edges, vertex_ids=ids, name=name)

    vertex_count = 1 + max((max(edge) for edge in edges), default=-1)
    if header is not None:
        if declared_vertices < vertex_count:
            raise GraphFormatError(f"header declares {declared_vertices} vertices but id {vertex_count - 1} is used",
                                   header_line)
        vertex_count = declared_vertices
    return Graph(vertex_count, edges, name=name)


def load_edge_list(path: str, remap: bool = False) -> Graph:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_edge_list(f, remap=remap, name=path)


def format_edge_list(g: Graph, header: bool = True) -> str:
    """Inverse of :func:`parse_edge_list` (original ids are written back when the graph was remapped)."""
    lines = [f"p {g.vertex_count} {g.m}"] if header and g.vertex_ids is None else []
    lines += [f"{g.original_id(u)} {g.original_id(v)}" for u, v in g.edges]
    return "\n".join(lines) + "\n"

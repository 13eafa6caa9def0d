import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy import sparse

from .exceptions import InvalidGraphParameters
from ..config import graph as graph_cfg
from ..core.exceptions import SizeCapExceeded

log = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Graph:
    """Undirected simple graph with dense 0-based vertex ids.

    A Graph is immutable once built, derived arrays (degrees, incidence matrix, distance-2 pairs) are computed
    lazily and shared by every reader.

    Parameters
    ----------
    vertex_count: int
        number of vertices, ids are 0 .. vertex_count-1
    edges: Iterable[Tuple[int, int]]
        edge list, order is kept and defines the edge indices used by labellings
    vertex_ids: Sequence[int], optional
        original vertex ids when the graph was loaded with id remapping
    name: str, optional
        free text name used in reports

    Examples
    --------
    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.m
    2
    >>> g.degrees.tolist()
    [1, 2, 1]
    """
    __slots__ = ['_vertex_count', '_edges', '_heads', '_tails', '_degrees', '_incidence', '_adjacency',
                 '_distance2', '_vertex_ids', 'name']

    def __init__(self, vertex_count: int, edges: Iterable[Edge], vertex_ids: Optional[Sequence[int]] = None,
                 name: str = ""):
        vertex_count = int(vertex_count)
        if vertex_count < 0:
            raise InvalidGraphParameters(f"vertex count must be non negative, got {vertex_count}")
        edges = tuple((int(u), int(v)) for u, v in edges)
        if len(edges) > graph_cfg.max_edges():
            raise SizeCapExceeded(f"graph has {len(edges)} edges, the limit is {graph_cfg.max_edges()}")
        seen = set()
        for index, (u, v) in enumerate(edges):
            if u == v:
                raise InvalidGraphParameters(f"edge {index} is a self-loop on vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidGraphParameters(f"edge {index} ({u}, {v}) uses a vertex outside [0, {vertex_count})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidGraphParameters(f"edge {index} ({u}, {v}) is duplicated")
            seen.add(key)
        if vertex_ids is not None and len(vertex_ids) != vertex_count:
            raise ValueError(f"vertex_ids has {len(vertex_ids)} entries for {vertex_count} vertices")
        self._vertex_count = vertex_count
        self._edges = edges
        self._heads = np.fromiter((u for u, _ in edges), dtype=np.int64, count=len(edges))
        self._tails = np.fromiter((v for _, v in edges), dtype=np.int64, count=len(edges))
        self._heads.setflags(write=False)
        self._tails.setflags(write=False)
        self._degrees = None
        self._incidence = None
        self._adjacency = None
        self._distance2 = None
        self._vertex_ids = tuple(vertex_ids) if vertex_ids is not None else None
        self.name = name

    def __repr__(self):
        name = f"{self.name} " if self.name else ""
        return f"<Graph: {name}{self._vertex_count} vertices, {self.m} edges>"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertex_count == other._vertex_count and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertex_count, self._edges))

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def heads(self) -> np.ndarray:
        """First endpoint of every edge."""
        return self._heads

    @property
    def tails(self) -> np.ndarray:
        """Second endpoint of every edge."""
        return self._tails

    @property
    def vertex_ids(self) -> Tuple[int, ...] or None:
        return self._vertex_ids

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            degrees = np.bincount(np.concatenate((self._heads, self._tails)), minlength=self._vertex_count)
            degrees = degrees.astype(np.int64)
            degrees.setflags(write=False)
            self._degrees = degrees
        return self._degrees

    @property
    def incidence(self) -> sparse.csr_matrix:
        """Vertex by edge incidence matrix, ``incidence @ labels`` gives the vertex sums."""
        if self._incidence is None:
            m = self.m
            rows = np.concatenate((self._heads, self._tails))
            columns = np.concatenate((np.arange(m), np.arange(m)))
            self._incidence = sparse.csr_matrix((np.ones(2 * m, dtype=np.int64), (rows, columns)),
                                                shape=(self._vertex_count, m), dtype=np.int64)
        return self._incidence

    @property
    def adjacency(self) -> sparse.csr_matrix:
        if self._adjacency is None:
            rows = np.concatenate((self._heads, self._tails))
            columns = np.concatenate((self._tails, self._heads))
            self._adjacency = sparse.csr_matrix((np.ones(rows.size, dtype=np.int64), (rows, columns)),
                                                shape=(self._vertex_count, self._vertex_count), dtype=np.int64)
        return self._adjacency

    def neighbours(self, vertex: int) -> np.ndarray:
        adjacency = self.adjacency
        return adjacency.indices[adjacency.indptr[vertex]:adjacency.indptr[vertex + 1]]

    def distance2_pairs(self, include_adjacent: bool = True) -> np.ndarray:
        """Pairs (v, w), v < w, at graph distance 1 or 2.

        Parameters
        ----------
        include_adjacent: bool
            when False only the pairs at distance exactly 2 are returned

        Returns
        -------
        np.ndarray
            (P, 2) array sorted lexicographically, each unordered pair listed once
        """
        if self._distance2 is None:
            adjacency = self.adjacency
            reach = (adjacency + adjacency @ adjacency).tocoo()
            mask = reach.row < reach.col
            pairs = np.stack((reach.row[mask], reach.col[mask]), axis=1).astype(np.int64)
            order = np.lexsort((pairs[:, 1], pairs[:, 0]))
            pairs = pairs[order]
            pairs.setflags(write=False)
            self._distance2 = pairs
        if include_adjacent:
            return self._distance2
        adjacent = set(map(tuple, self.sorted_edges().tolist()))
        keep = [i for i, (v, w) in enumerate(self._distance2.tolist()) if (v, w) not in adjacent]
        return self._distance2[keep]

    def sorted_edges(self) -> np.ndarray:
        """Edges as a (m, 2) array with the smaller endpoint first."""
        return np.stack((np.minimum(self._heads, self._tails), np.maximum(self._heads, self._tails)), axis=1)

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge {u, v} in the edge list.

        Raises
        ------
        KeyError
            when {u, v} is not an edge
        """
        for index, (x, y) in enumerate(self._edges):
            if (x, y) == (u, v) or (y, x) == (u, v):
                return index
        raise KeyError(f"({u}, {v}) is not an edge")

    def original_id(self, vertex: int) -> int:
        if self._vertex_ids is None:
            return int(vertex)
        return self._vertex_ids[vertex]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph(name=self.name)
        g.add_nodes_from(range(self._vertex_count))
        g.add_edges_from(self._edges)
        return g


def from_networkx(g: nx.Graph, name: str = "") -> Graph:
    """Builds a Graph from a networkx graph, edge order follows ``g.edges()``.

    Non integer or non dense node labels are mapped to 0 .. n-1 in ``g.nodes()`` order.
    """
    nodes = list(g.nodes())
    if nodes == list(range(len(nodes))):
        return Graph(len(nodes), g.edges(), name=name or g.name)
    index = {node: i for i, node in enumerate(nodes)}
    return Graph(len(nodes), ((index[u], index[v]) for u, v in g.edges()), name=name or g.name)


def disjoint_union(graphs: List[Graph], name: str = "") -> Graph:
    """Disjoint union, vertices of each graph are shifted after those of the previous ones."""
    offset = 0
    edges = []
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.vertex_count
    return Graph(offset, edges, name=name)

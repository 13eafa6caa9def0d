from typing import List, Tuple

import numpy as np

from .exceptions import NotLabellableError
from .graph import Graph


class ValidationReport:
    """Structural facts deciding whether a graph admits a local antimagic labelling.

    A graph is labellable iff it has at least one edge and no component made of a single edge.
    """
    __slots__ = ['isolated_edges', 'isolated_vertices', 'degrees', 'vertex_ids', 'm']

    def __init__(self, isolated_edges: List[Tuple[int, int]], isolated_vertices: List[int], degrees: np.ndarray,
                 m: int, vertex_ids=None):
        self.isolated_edges = isolated_edges
        self.isolated_vertices = isolated_vertices
        self.degrees = degrees
        self.m = m
        self.vertex_ids = vertex_ids

    @property
    def is_labellable(self) -> bool:
        return self.m >= 1 and not self.isolated_edges

    def __repr__(self):
        return f"<ValidationReport: labellable={self.is_labellable}, isolated edges={self.isolated_edges}>"

    def to_dictionary(self) -> dict:
        d = {
            "m": self.m,
            "is_labellable": self.is_labellable,
            "isolated_edges": [list(e) for e in self.isolated_edges],
            "isolated_vertices": list(self.isolated_vertices),
            "degrees": self.degrees.tolist()
        }
        if self.vertex_ids is not None:
            d["vertex_ids"] = list(self.vertex_ids)
        return d


def validate(g: Graph) -> ValidationReport:
    """Finds isolated edges and isolated vertices.

    Examples
    --------
    >>> from antimagic.graphs import generate
    >>> validate(generate('path', (2,))).isolated_edges
    [(0, 1)]
    >>> validate(generate('path', (3,))).is_labellable
    True
    """
    degrees = g.degrees
    isolated = (degrees[g.heads] == 1) & (degrees[g.tails] == 1)
    isolated_edges = [g.edges[i] for i in np.flatnonzero(isolated)]
    isolated_vertices = np.flatnonzero(degrees == 0).tolist()
    return ValidationReport(isolated_edges, isolated_vertices, degrees, g.m, g.vertex_ids)


def ensure_labellable(g: Graph) -> ValidationReport:
    """Same as :func:`validate` but raises NotLabellableError when no local antimagic labelling exists."""
    report = validate(g)
    if not report.is_labellable:
        if g.m == 0:
            raise NotLabellableError(message="graph has no edge")
        raise NotLabellableError(report.isolated_edges)
    return report

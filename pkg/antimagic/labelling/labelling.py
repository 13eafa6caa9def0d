import logging
from typing import Sequence

import numpy as np

from .exceptions import LabellingFormatError
from ..core.exceptions import SizeCapExceeded
from ..graphs import Graph

log = logging.getLogger(__name__)

_INT64_LIMIT = 2 ** 63


class Labelling:
    """Bijection from the edges of a graph onto the integer interval {k, ..., m+k-1}.

    Parameters
    ----------
    labels: Sequence[int]
        label of every edge, aligned with ``Graph.edges``
    offset_k: int, optional
        smallest label, inferred as ``min(labels)`` when omitted

    Raises
    ------
    LabellingFormatError
        labels are not a permutation of {k, ..., m+k-1}

    Examples
    --------
    >>> Labelling([2, 1, 3]).offset_k
    1
    >>> Labelling([5, 7, 6]).labels.tolist()
    [5, 7, 6]
    """
    __slots__ = ['_labels', '_offset_k']

    def __init__(self, labels: Sequence[int], offset_k: int or None = None):
        labels = np.array(labels, dtype=np.int64)
        if labels.ndim != 1:
            raise ValueError(f"labels must be one dimensional, got shape {labels.shape}")
        if offset_k is None:
            if labels.size == 0:
                raise ValueError("offset_k is required for an empty labelling")
            offset_k = int(labels.min())
        offset_k = int(offset_k)
        if offset_k < 1:
            raise LabellingFormatError(f"smallest label must be positive, got {offset_k}")
        if not np.array_equal(np.sort(labels), np.arange(offset_k, offset_k + labels.size, dtype=np.int64)):
            raise LabellingFormatError(
                f"labels are not a permutation of {{{offset_k}, ..., {offset_k + labels.size - 1}}}")
        labels.setflags(write=False)
        self._labels = labels
        self._offset_k = offset_k

    @classmethod
    def from_permutation(cls, labels: np.ndarray, offset_k: int) -> "Labelling":
        """Wraps labels already known to be a permutation of {k, ..., m+k-1}, no check is done."""
        labelling = cls.__new__(cls)
        labels = np.array(labels, dtype=np.int64)
        labels.setflags(write=False)
        labelling._labels = labels
        labelling._offset_k = int(offset_k)
        return labelling

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def offset_k(self) -> int:
        return self._offset_k

    @property
    def m(self) -> int:
        return int(self._labels.size)

    def __len__(self):
        return self.m

    def __eq__(self, other):
        if not isinstance(other, Labelling):
            return NotImplemented
        return self._offset_k == other._offset_k and np.array_equal(self._labels, other._labels)

    def __repr__(self):
        return f"<Labelling: k={self._offset_k} {self._labels.tolist()}>"

    def tolist(self):
        return self._labels.tolist()


class VertexSums:
    """Per-vertex sums of incident edge labels, the colours of a labelling."""
    __slots__ = ['_sums']

    def __init__(self, sums: np.ndarray):
        sums = np.asarray(sums, dtype=np.int64)
        sums.setflags(write=False)
        self._sums = sums

    @property
    def sums(self) -> np.ndarray:
        return self._sums

    def __getitem__(self, vertex):
        return self._sums[vertex]

    def __len__(self):
        return int(self._sums.size)

    def __repr__(self):
        return f"<VertexSums: {self._sums.tolist()}>"

    def total(self) -> int:
        return int(self._sums.sum())

    def distinct_count(self) -> int:
        return int(np.unique(self._sums).size)

    def tolist(self):
        return self._sums.tolist()


def check_sum_range(m: int, k: int):
    if m * (m + k) >= _INT64_LIMIT:
        raise SizeCapExceeded(f"vertex sums of a graph with {m} edges and offset {k} may overflow 64 bits")


def vertex_sums(g: Graph, labelling: Labelling) -> VertexSums:
    """Sums the labels of the edges meeting each vertex.

    Examples
    --------
    >>> from antimagic.graphs import generate
    >>> vertex_sums(generate('cycle', (3,)), Labelling([1, 2, 3])).tolist()
    [4, 3, 5]
    """
    if labelling.m != g.m:
        raise ValueError(f"labelling has {labelling.m} labels for a graph with {g.m} edges")
    check_sum_range(g.m, labelling.offset_k)
    return VertexSums(g.incidence @ labelling.labels)


def expected_total(m: int, k: int) -> int:
    """Sum of all vertex sums, every label is counted once per endpoint.

    Examples
    --------
    >>> expected_total(3, 1)
    12
    """
    return m * (2 * k + m - 1)

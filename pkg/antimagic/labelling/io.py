"""Labelling text format: one ``u v label`` line per edge, in any order, ``#`` comments and blank lines allowed."""
from typing import Iterable, TextIO, Union

from .exceptions import LabellingFormatError
from .labelling import Labelling
from ..graphs import Graph


def parse_labelling(text: Union[str, TextIO, Iterable[str]], g: Graph) -> Labelling:
    """Reads a labelling of g, the offset k is inferred as the smallest label.

    Raises
    ------
    LabellingFormatError
        malformed line, unknown or repeated edge, missing edge, or labels not forming an integer interval

    Examples
    --------
    >>> from antimagic.graphs import generate
    >>> parse_labelling("1 2 1\\n0 1 2", generate('path', (3,))).labels.tolist()
    [2, 1]
    """
    index = {}
    for i, (u, v) in enumerate(g.edges):
        u, v = g.original_id(u), g.original_id(v)
        index[(min(u, v), max(u, v))] = i
    labels = [None] * g.m
    lines = text.splitlines() if isinstance(text, str) else text
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        if len(tokens) != 3 or not all(t.isdecimal() for t in tokens):
            raise LabellingFormatError(f"expected 'u v label' with non negative integers, got '{line}'",
                                       line_number)
        u, v, label = map(int, tokens)
        key = (min(u, v), max(u, v))
        if key not in index:
            raise LabellingFormatError(f"({u}, {v}) is not an edge of the graph", line_number)
        if labels[index[key]] is not None:
            raise LabellingFormatError(f"edge ({u}, {v}) is labelled twice", line_number)
        labels[index[key]] = label
    missing = [g.edges[i] for i, label in enumerate(labels) if label is None]
    if missing:
        raise LabellingFormatError(f"{len(missing)} edge(s) have no label, first one is {missing[0]}")
    return Labelling(labels)


def load_labelling(path: str, g: Graph) -> Labelling:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_labelling(f, g)


def format_labelling(g: Graph, labelling: Labelling) -> str:
    if labelling.m != g.m:
        raise ValueError(f"labelling has {labelling.m} labels for a graph with {g.m} edges")
    return "".join(f"{g.original_id(u)} {g.original_id(v)} {label}\n"
                   for (u, v), label in zip(g.edges, labelling.tolist()))

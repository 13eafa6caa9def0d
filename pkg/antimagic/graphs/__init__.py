"""
antimagic.graphs
----------------

Graph representation, edge-list parsing, family generators and structural validation.
"""
from .exceptions import GraphFormatError, InvalidGraphParameters, NotLabellableError
from .generators import FAMILIES, generate, parse_generator_spec
from .graph import Graph, from_networkx, disjoint_union
from .io import parse_edge_list, load_edge_list, format_edge_list
from .validation import ValidationReport, validate, ensure_labellable

__all__ = ['Graph', 'ValidationReport', 'FAMILIES', 'generate', 'parse_generator_spec', 'from_networkx',
           'disjoint_union', 'parse_edge_list', 'load_edge_list', 'format_edge_list', 'validate',
           'ensure_labellable', 'GraphFormatError', 'InvalidGraphParameters', 'NotLabellableError']

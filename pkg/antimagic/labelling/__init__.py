"""
antimagic.labelling
-------------------

Edge labellings, vertex sums, the local / distance-2 / global distinguishing predicates and the exhaustive census of
small graphs.
"""
from .enumeration import Census, exhaustive_census, permutation_batches, check_m_cap
from .exceptions import LabellingFormatError
from .io import parse_labelling, load_labelling, format_labelling
from .labelling import Labelling, VertexSums, vertex_sums, expected_total, check_sum_range
from .predicates import Predicate, ConflictReport, check_local_antimagic, check_distance2, check_global_antimagic, \
    check, verify, is_local_antimagic

__all__ = ['Labelling', 'VertexSums', 'Predicate', 'ConflictReport', 'Census', 'LabellingFormatError',
           'vertex_sums', 'expected_total', 'check_sum_range', 'check_local_antimagic', 'check_distance2',
           'check_global_antimagic', 'check', 'verify', 'is_local_antimagic', 'parse_labelling', 'load_labelling',
           'format_labelling', 'exhaustive_census', 'permutation_batches', 'check_m_cap']

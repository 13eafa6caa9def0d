"""
antimagic.chromatic
-------------------

Local antimagic chromatic number of tiny graphs by exhaustive scan of all labellings.
"""
from .chi_la import ChiLaResult, chi_la_exhaustive, distinct_sum_count

__all__ = ['ChiLaResult', 'chi_la_exhaustive', 'distinct_sum_count']

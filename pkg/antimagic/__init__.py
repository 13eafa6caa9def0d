# -*- coding: utf-8 -*-
"""
.. testsetup:: *

   import antimagic as am

"""

__author__ = """Antimagic developers"""
__version__ = '0.1.0'
__all__ = ['Graph', 'Labelling', 'generate', 'parse_edge_list', 'las_vegas_label', 'verify', 'exact_distribution',
           'audit_bounds', 'chi_la_exhaustive', 'k2n_scaling']
__docformat__ = "numpy"

from .graphs import Graph, generate, parse_edge_list
from .labelling import Labelling, verify
from .sampler import las_vegas_label
from .oracle import exact_distribution, audit_bounds
from .chromatic import chi_la_exhaustive
from .experiments import k2n_scaling

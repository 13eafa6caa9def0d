"""
antimagic.experiments
---------------------

Scaling experiment on K_{2,n}: collision probability of two fixed degree-2 vertices.
"""
from .k2n import K2nPoint, K2nScaling, k2n_scaling, k2n_exact, k2n_witness_bound

__all__ = ['K2nPoint', 'K2nScaling', 'k2n_scaling', 'k2n_exact', 'k2n_witness_bound']

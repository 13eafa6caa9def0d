"""
antimagic.oracle
----------------

Exact rational distribution of the signed block difference, subset parity probabilities, exact per-edge collision
profiles and the bound auditor.
"""
from .audit import AuditRecord, AuditReport, STATEMENTS, audit_bounds
from .difference_spec import DifferenceSpec
from .distribution import DistributionTable, exact_distribution, exact_p, exact_p_mod, difference_table, \
    permutation_distribution, pair_count, in_range_specs, cached_table_count, clear_table_cache
from .exceptions import InvalidDifferenceSpec
from .parity import ParityResult, parity_probability, parity_bound, fixed_point_count, fixed_point_closed_form, \
    pairing_involution
from .profile import EdgeProfile, edge_collision_profile, edge_collision_probability

__all__ = ['DifferenceSpec', 'DistributionTable', 'ParityResult', 'AuditRecord', 'AuditReport', 'EdgeProfile',
           'InvalidDifferenceSpec', 'STATEMENTS', 'exact_distribution', 'exact_p', 'exact_p_mod', 'difference_table',
           'permutation_distribution', 'pair_count', 'in_range_specs', 'cached_table_count', 'clear_table_cache',
           'parity_probability', 'parity_bound',
           'fixed_point_count', 'fixed_point_closed_form', 'pairing_involution',
           'audit_bounds', 'edge_collision_profile', 'edge_collision_probability']

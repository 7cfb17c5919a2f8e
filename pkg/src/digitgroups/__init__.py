"""Finite groups from closed-form digit-function composition laws."""
from .abelian import cyclic_law, direct_sum_law, mult_inverse, mult_mod_law
from .digitcore import digit, digit_sum, expand, mixed_from_digits, mixed_to_digits
from .grouptools import GroupSpec, analyze, build_table, find_isomorphism, is_abelian, verify_group
from .nonabelian import MetacyclicSpec, dicyclic_law, dihedral_law, metacyclic_law, quaternion_label

__version__ = "0.1.0"

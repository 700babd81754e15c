"""
affine-delta: miniscule coweight actions on level-k integrable modules over
untwisted affine Lie algebras, in exact integer arithmetic.
"""

from .models.algebra import LevelWeight, LieType
from .roots.root_system import (
    cartan_matrix,
    comarks,
    coweight_in_coroot_lattice,
    fundamental_group_order,
    highest_long_root,
    miniscule_coweight_indices,
    pairing_with_theta,
    positive_roots,
)
from .weyl.words import apply_word, canonical_word, reflect
from .weyl.permutations import affine_root_image, expected_permutation
from .action.delta import delta_brute_force, delta_closed_form
from .action.tables import action_table, enumerate_admissible, orbit

__version__ = "0.1.0"

__all__ = [
    "LieType",
    "LevelWeight",
    "cartan_matrix",
    "positive_roots",
    "highest_long_root",
    "comarks",
    "pairing_with_theta",
    "miniscule_coweight_indices",
    "fundamental_group_order",
    "coweight_in_coroot_lattice",
    "reflect",
    "apply_word",
    "canonical_word",
    "affine_root_image",
    "expected_permutation",
    "delta_closed_form",
    "delta_brute_force",
    "enumerate_admissible",
    "orbit",
    "action_table",
]

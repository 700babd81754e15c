"""Root system data and exact lattice arithmetic."""

from .lattice import bareiss_determinant, check_int64, hermite_basis, lattice_contains
from .root_system import (
    cartan_matrix,
    comarks,
    coset_representative,
    coweight_in_coroot_lattice,
    coxeter_number,
    dual_coxeter_number,
    fundamental_group_order,
    highest_long_root,
    marks,
    miniscule_coweight_indices,
    pairing_with_theta,
    positive_roots,
    root_inner_product,
    simple_root_lengths,
    weight_inner_product,
)

__all__ = [
    "cartan_matrix",
    "simple_root_lengths",
    "root_inner_product",
    "weight_inner_product",
    "positive_roots",
    "highest_long_root",
    "marks",
    "comarks",
    "pairing_with_theta",
    "miniscule_coweight_indices",
    "fundamental_group_order",
    "coweight_in_coroot_lattice",
    "coset_representative",
    "coxeter_number",
    "dual_coxeter_number",
    "hermite_basis",
    "lattice_contains",
    "bareiss_determinant",
    "check_int64",
]

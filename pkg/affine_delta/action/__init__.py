"""Coweight actions on admissible weights."""

from .delta import check_admissible, delta_brute_force, delta_closed_form, delta_for_coweight, is_admissible, iterate
from .tables import action_table, enumerate_admissible, orbit, orbits, permutation_order

__all__ = [
    "check_admissible",
    "is_admissible",
    "delta_closed_form",
    "delta_brute_force",
    "delta_for_coweight",
    "iterate",
    "enumerate_admissible",
    "orbit",
    "orbits",
    "action_table",
    "permutation_order",
]

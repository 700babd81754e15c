"""
Admissible weights, orbits and full action tables for one (type, level).
"""

import itertools
import logging
import math
from typing import Dict, FrozenSet, List, Sequence, Tuple

from ..exceptions import ActionTableError, NotAdmissibleError
from ..models.algebra import LieType, Weight
from ..models.results import ActionTable
from ..roots.root_system import comarks, miniscule_coweight_indices, pairing_with_theta
from .delta import check_admissible, delta_closed_form, is_admissible

logger = logging.getLogger(__name__)


def enumerate_admissible(lie_type: LieType, level: int) -> List[Weight]:
    """
    All dominant weights with <lambda, theta> <= level, in lexicographic order.

    Raises:
        NotAdmissibleError: if level is negative
    """
    if level < 0:
        raise NotAdmissibleError(f"level {level} is negative")
    bounds = [range(level // c + 1) for c in comarks(lie_type)]
    return [w for w in itertools.product(*bounds) if pairing_with_theta(lie_type, w) <= level]


def orbit(lie_type: LieType, level: int, weight: Sequence[int]) -> FrozenSet[Weight]:
    """Closure of {weight} under every miniscule coweight action."""
    check_admissible(lie_type, level, weight)
    start = tuple(weight)
    seen = {start}
    frontier = [start]
    indices = miniscule_coweight_indices(lie_type)
    while frontier:
        current = frontier.pop()
        for i in indices:
            image = delta_closed_form(lie_type, level, current, i)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return frozenset(seen)


def orbits(lie_type: LieType, level: int) -> List[Tuple[Weight, ...]]:
    """Partition of the admissible set into sorted orbits, ordered by smallest member."""
    remaining = enumerate_admissible(lie_type, level)
    placed = set()
    out = []
    for weight in remaining:
        if weight in placed:
            continue
        members = tuple(sorted(orbit(lie_type, level, weight)))
        placed.update(members)
        out.append(members)
    return out


def action_table(lie_type: LieType, level: int) -> ActionTable:
    """
    Every miniscule coweight action as a total map on the admissible set.

    Raises:
        NotAdmissibleError: if level < 1
        ActionTableError: if some image is not admissible or a map is not injective
    """
    if level < 1:
        raise NotAdmissibleError(f"action tables need level >= 1, got {level}")
    admissible = tuple(enumerate_admissible(lie_type, level))
    maps: Dict[int, Dict[Weight, Weight]] = {}
    for i in miniscule_coweight_indices(lie_type):
        mapping = {w: delta_closed_form(lie_type, level, w, i) for w in admissible}
        for source, image in mapping.items():
            if not is_admissible(lie_type, level, image):
                raise ActionTableError(f"{lie_type} level {level}: H^({i}) sends {source} to non-admissible {image}")
        if len(set(mapping.values())) != len(mapping):
            raise ActionTableError(f"{lie_type} level {level}: H^({i}) is not injective")
        maps[i] = mapping
    logger.debug(f"{lie_type} level {level}: {len(admissible)} admissible weights, {len(maps)} maps")
    return ActionTable(lie_type=lie_type, level=level, admissible=admissible, maps=maps)


def permutation_order(table: ActionTable, index: int) -> int:
    """Order of the permutation induced by coweight index on the admissible set."""
    mapping = table.maps[index]
    order = 1
    for start in table.admissible:
        length, current = 1, mapping[start]
        while current != start:
            current = mapping[current]
            length += 1
        order = math.lcm(order, length)
    return order

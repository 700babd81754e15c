"""
The action of miniscule coweights on level-k admissible weights.

For a miniscule index i the canonical word sigma permutes the affine simple
roots with alpha_0 -> alpha_i, and on labels

    lambda^(i) = sigma(lambda) + k lambda_i
               = sum_j m_j lambda_{pi(j)} + (k - <lambda, theta>) lambda_i

where pi is that permutation and lambda_0 = 0. The first line is computed by
delta_brute_force, the second by delta_closed_form.
"""

import logging
from typing import Sequence

from ..exceptions import NotAdmissibleError
from ..models.algebra import CoweightVector, LieType, Weight
from ..roots.lattice import check_int64
from ..roots.root_system import coset_representative, pairing_with_theta, require_length
from ..weyl.permutations import expected_permutation
from ..weyl.words import apply_word, canonical_word

logger = logging.getLogger(__name__)


def is_admissible(lie_type: LieType, level: int, weight: Sequence[int]) -> bool:
    """Dominant with <weight, theta> <= level."""
    require_length(lie_type, weight)
    return level >= 0 and all(m >= 0 for m in weight) and pairing_with_theta(lie_type, weight) <= level


def check_admissible(lie_type: LieType, level: int, weight: Sequence[int]) -> None:
    """
    Raises:
        DimensionMismatchError: if weight has the wrong length
        NotAdmissibleError: if (level, weight) is not an admissible pair
    """
    require_length(lie_type, weight)
    if level < 0:
        raise NotAdmissibleError(f"level {level} is negative")
    if any(m < 0 for m in weight):
        raise NotAdmissibleError(f"{tuple(weight)} is not dominant")
    pairing = pairing_with_theta(lie_type, weight)
    if pairing > level:
        raise NotAdmissibleError(f"<{tuple(weight)}, theta> = {pairing} exceeds level {level} for {lie_type}")


def _check_action_input(lie_type: LieType, level: int, weight: Sequence[int]) -> None:
    if level < 1:
        raise NotAdmissibleError(f"the action needs level >= 1, got {level}")
    check_admissible(lie_type, level, weight)


def delta_closed_form(lie_type: LieType, level: int, weight: Sequence[int], index: int) -> Weight:
    """
    lambda^(i) from the closed-form relabelling.

    Args:
        lie_type: validated LieType
        level: k >= 1
        weight: admissible weight at level k
        index: miniscule coweight index i

    Returns:
        Admissible weight at level k

    Raises:
        NotAdmissibleError: if (level, weight) is not admissible
        NotMinisculeError: if index is not miniscule
    """
    _check_action_input(lie_type, level, weight)
    targets = expected_permutation(lie_type, index)
    image = [0] * (lie_type.rank + 1)
    for j, m in enumerate(weight, start=1):
        image[targets[j]] += m
    image[index] += level - pairing_with_theta(lie_type, weight)
    # Position 0 is lambda_0 = 0
    return check_int64(image[1:], "weight")


def delta_brute_force(lie_type: LieType, level: int, weight: Sequence[int], index: int) -> Weight:
    """lambda^(i) = sigma(lambda) + k lambda_i with sigma applied letter by letter."""
    _check_action_input(lie_type, level, weight)
    moved = apply_word(lie_type, canonical_word(lie_type, index), weight)
    return check_int64(
        (m + (level if j == index else 0) for j, m in enumerate(moved, start=1)), "weight"
    )


def delta_for_coweight(
    lie_type: LieType, level: int, weight: Sequence[int], coweight: CoweightVector
) -> Weight:
    """
    Action of an arbitrary integral coweight.

    Coroots act trivially, so the coweight acts through its coset
    representative among 0 and the miniscule coweights.
    """
    _check_action_input(lie_type, level, weight)
    representative = coset_representative(lie_type, coweight)
    logger.debug(f"{lie_type}: coweight {tuple(coweight)} acts as H^({representative})")
    if representative == 0:
        return tuple(weight)
    return delta_closed_form(lie_type, level, weight, representative)


def iterate(lie_type: LieType, level: int, weight: Sequence[int], index: int, times: int) -> Weight:
    """Apply the index action times-many times."""
    result = tuple(weight)
    for _ in range(times):
        result = delta_closed_form(lie_type, level, result, index)
    return result

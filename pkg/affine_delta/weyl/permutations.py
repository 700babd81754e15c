"""
Permutations of the affine simple roots alpha_0 = -theta, alpha_1, ..., alpha_l.
"""

import logging
from typing import Dict, Sequence, Tuple

from ..exceptions import IndexOutOfRangeError, NotAPermutationError, NotMinisculeError
from ..models.algebra import LieType, Weight
from ..roots.root_system import cartan_matrix, highest_long_root, miniscule_coweight_indices
from .words import apply_word

logger = logging.getLogger(__name__)


def affine_root_candidates(lie_type: LieType) -> Tuple[Weight, ...]:
    """Weight coordinates of alpha_0 = -theta followed by the rows alpha_1..alpha_l."""
    theta = highest_long_root(lie_type)[1]
    return (tuple(-x for x in theta),) + tuple(cartan_matrix(lie_type))


def affine_root_image(lie_type: LieType, word: Sequence[int], index: int) -> int:
    """
    Index m with w(alpha_index) = alpha_m, found by exact comparison.

    Raises:
        IndexOutOfRangeError: if index is not in 0..rank
        NotAPermutationError: if the image is none of the affine simple roots
    """
    if not 0 <= index <= lie_type.rank:
        raise IndexOutOfRangeError(f"affine root index {index} outside 0..{lie_type.rank}")
    candidates = affine_root_candidates(lie_type)
    image = apply_word(lie_type, word, candidates[index])
    for m, candidate in enumerate(candidates):
        if candidate == image:
            return m
    logger.warning(f"{lie_type}: word {tuple(word)} sends alpha_{index} to {image}")
    raise NotAPermutationError(
        f"{lie_type}: word {tuple(word)} sends alpha_{index} to {image}, not an affine simple root"
    )


def affine_permutation(lie_type: LieType, word: Sequence[int]) -> Tuple[int, ...]:
    """Images of alpha_0..alpha_l under word, as affine root indices."""
    images = tuple(affine_root_image(lie_type, word, j) for j in range(lie_type.rank + 1))
    if len(set(images)) != len(images):
        logger.warning(f"{lie_type}: word {tuple(word)} repeats affine roots: {images}")
        raise NotAPermutationError(f"{lie_type}: word {tuple(word)} is not injective on affine roots: {images}")
    return images


def expected_permutation(lie_type: LieType, index: int) -> Tuple[int, ...]:
    """
    Closed-form permutation of 0..l induced by the canonical word for index.

    Entry j is the m with sigma(alpha_j) = alpha_m.

    Raises:
        NotMinisculeError: if index is not a miniscule coweight index
    """
    if index not in miniscule_coweight_indices(lie_type):
        raise NotMinisculeError(f"H^({index}) is not a miniscule coweight of {lie_type}")
    family, n = lie_type.family, lie_type.rank

    if family == "A":
        return tuple((j + index) % (n + 1) for j in range(n + 1))
    if family == "B":
        return (1, 0) + tuple(range(2, n + 1))
    if family == "C":
        return tuple(n - j for j in range(n + 1))
    if family == "D":
        return _d_permutation(n, index)
    return {
        (6, 1): (1, 6, 3, 5, 4, 2, 0),
        (6, 6): (6, 0, 5, 2, 4, 3, 1),
        (7, 7): (7, 6, 2, 5, 4, 3, 1, 0),
    }[(n, index)]


def _d_permutation(n: int, index: int) -> Tuple[int, ...]:
    if index == 1:
        images: Dict[int, int] = {j: j for j in range(n + 1)}
        images.update({0: 1, 1: 0, n - 1: n, n: n - 1})
    elif index == n - 1:
        images = {j: n - j for j in range(2, n - 1)}
        images.update({0: n - 1, 1: n})
        if n % 2 == 1:
            images.update({n - 1: 1, n: 0})
        else:
            images.update({n - 1: 0, n: 1})
    else:
        images = {j: n - j for j in range(n + 1)}
        if n % 2 == 1:
            images.update({0: n, n - 1: 0, n: 1})
    return tuple(images[j] for j in range(n + 1))

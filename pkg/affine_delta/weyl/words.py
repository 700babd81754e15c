"""
Simple reflections on weights and the canonical Weyl words.

A word (w_1, ..., w_r) stands for the product sigma_{w_1} ... sigma_{w_r}
acting on the left, so the rightmost letter acts first.
"""

import logging
from typing import Sequence, Tuple

from ..exceptions import IndexOutOfRangeError, NotMinisculeError
from ..models.algebra import LieType, Weight, WeylWord
from ..roots.lattice import check_int64
from ..roots.root_system import cartan_matrix, miniscule_coweight_indices, require_length, unit_vector

logger = logging.getLogger(__name__)

# Literal words, Bourbaki labelling
_E_WORDS = {
    (6, 1): (1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6),
    (6, 6): (6, 5, 4, 2, 3, 4, 5, 6, 1, 3, 4, 2, 5, 4, 3, 1),
    (7, 7): (
        7, 6, 5, 4, 3, 2, 4, 5, 6, 7,
        1, 3, 4, 5, 6, 2, 4, 5, 3, 4,
        1, 3, 2, 4, 5, 6, 7,
    ),
}


def _require_index(lie_type: LieType, index: int) -> None:
    if not 1 <= index <= lie_type.rank:
        raise IndexOutOfRangeError(f"simple reflection index {index} outside 1..{lie_type.rank} for {lie_type}")


def reflect(lie_type: LieType, index: int, weight: Sequence[int]) -> Weight:
    """
    Apply the simple reflection sigma_index to a weight.

    Args:
        lie_type: validated LieType
        index: 1-based simple root index
        weight: fundamental-weight coordinates

    Returns:
        weight - m_index * alpha_index

    Raises:
        IndexOutOfRangeError: if index is not in 1..rank
        DimensionMismatchError: if weight has the wrong length
    """
    _require_index(lie_type, index)
    require_length(lie_type, weight)
    coefficient = weight[index - 1]
    if coefficient == 0:
        return tuple(weight)
    row = cartan_matrix(lie_type)[index - 1]
    return check_int64((m - coefficient * a for m, a in zip(weight, row)), "weight")


def apply_word(lie_type: LieType, word: Sequence[int], weight: Sequence[int]) -> Weight:
    """Apply a Weyl word to a weight, rightmost letter first."""
    for letter in word:
        _require_index(lie_type, letter)
    require_length(lie_type, weight)
    result = tuple(weight)
    for letter in reversed(word):
        result = reflect(lie_type, letter, result)
    return result


def _descending(top: int, bottom: int) -> Tuple[int, ...]:
    return tuple(range(top, bottom - 1, -1))


def _d_spin_word(rank: int, index: int) -> WeylWord:
    # Blocks (x_m, l-2, l-3, ..., m) for m = 1..l-1, x_m alternating between
    # l-1 and l and starting at index; the last block is the singleton (x_{l-1}).
    other = 2 * rank - 1 - index
    word: Tuple[int, ...] = ()
    for m in range(1, rank):
        head = index if m % 2 == 1 else other
        word += (head,) + _descending(rank - 2, m)
    return word


def canonical_word(lie_type: LieType, index: int) -> WeylWord:
    """
    The Weyl group element attached to a miniscule coweight.

    Args:
        lie_type: validated LieType
        index: miniscule coweight index

    Returns:
        Word as a tuple of 1-based letters

    Raises:
        NotMinisculeError: if index is not a miniscule coweight index
    """
    if index not in miniscule_coweight_indices(lie_type):
        raise NotMinisculeError(f"H^({index}) is not a miniscule coweight of {lie_type}")
    family, n = lie_type.family, lie_type.rank

    if family == "A":
        return tuple(range(1, n + 1)) * index
    if family == "B":
        return tuple(range(1, n + 1)) + _descending(n - 1, 1)
    if family == "C":
        return sum((_descending(n, m) for m in range(1, n + 1)), ())
    if family == "D":
        if index == 1:
            return tuple(range(1, n + 1)) + _descending(n - 2, 1)
        return _d_spin_word(n, index)
    return _E_WORDS[(n, index)]


def fundamental_weight_images(lie_type: LieType, index: int) -> Tuple[Weight, ...]:
    """Images of lambda_1, ..., lambda_l under the canonical word for index."""
    word = canonical_word(lie_type, index)
    logger.debug(f"{lie_type}: canonical word for H^({index}) has length {len(word)}")
    return tuple(
        apply_word(lie_type, word, unit_vector(lie_type, j))
        for j in range(1, lie_type.rank + 1)
    )

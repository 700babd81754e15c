"""Weyl group words and affine simple root permutations."""

from .permutations import affine_permutation, affine_root_image, expected_permutation
from .words import apply_word, canonical_word, fundamental_weight_images, reflect

__all__ = [
    "reflect",
    "apply_word",
    "canonical_word",
    "fundamental_weight_images",
    "affine_root_image",
    "affine_permutation",
    "expected_permutation",
]

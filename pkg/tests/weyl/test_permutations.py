"""
Tests for the permutation of the affine simple roots.
"""
import pytest

from affine_delta.exceptions import IndexOutOfRangeError, NotAPermutationError, NotMinisculeError
from affine_delta.models.algebra import LieType
from affine_delta.roots.root_system import miniscule_coweight_indices
from affine_delta.verification.checks import supported_types
from affine_delta.weyl.permutations import (
    affine_permutation,
    affine_root_candidates,
    affine_root_image,
    expected_permutation,
)
from affine_delta.weyl.words import canonical_word

T = LieType.parse

MINISCULE_CASES = [
    (lie_type, i)
    for lie_type in supported_types(8)
    for i in miniscule_coweight_indices(lie_type)
]


class TestAffineRootImage:
    """Tests for identifying images among alpha_0..alpha_l."""

    def test_candidates_a2(self):
        assert affine_root_candidates(T("A2")) == ((-1, -1), (2, -1), (-1, 2))

    @pytest.mark.parametrize("j", range(5))
    def test_a4_rotation(self, j):
        a4 = T("A4")
        assert affine_root_image(a4, canonical_word(a4, 2), j) == (j + 2) % 5

    @pytest.mark.parametrize("j", range(7))
    def test_d6_reversal(self, j):
        d6 = T("D6")
        assert affine_root_image(d6, canonical_word(d6, 6), j) == 6 - j

    def test_e7_alpha7_to_minus_theta(self):
        e7 = T("E7")
        assert affine_root_image(e7, canonical_word(e7, 7), 7) == 0

    def test_not_a_permutation(self):
        # sigma_1(-theta) = -alpha_2 in A2
        with pytest.raises(NotAPermutationError):
            affine_root_image(T("A2"), (1,), 0)

    def test_not_a_permutation_is_logged(self, caplog):
        with caplog.at_level("WARNING", logger="affine_delta.weyl.permutations"):
            with pytest.raises(NotAPermutationError):
                affine_root_image(T("A2"), (1,), 0)
        assert "sends alpha_0" in caplog.text

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            affine_root_image(T("A2"), (), 3)


class TestExpectedPermutation:
    """Tests for the closed-form permutations."""

    def test_b(self):
        assert expected_permutation(T("B5"), 1) == (1, 0, 2, 3, 4, 5)

    def test_c(self):
        assert expected_permutation(T("C4"), 4) == (4, 3, 2, 1, 0)

    def test_e6(self):
        assert expected_permutation(T("E6"), 1) == (1, 6, 3, 5, 4, 2, 0)
        assert expected_permutation(T("E6"), 6) == (6, 0, 5, 2, 4, 3, 1)

    def test_a3(self):
        assert expected_permutation(T("A3"), 2) == (2, 3, 0, 1)

    def test_d_odd(self):
        d5 = T("D5")
        assert expected_permutation(d5, 1) == (1, 0, 2, 3, 5, 4)
        assert expected_permutation(d5, 4) == (4, 5, 3, 2, 1, 0)
        assert expected_permutation(d5, 5) == (5, 4, 3, 2, 0, 1)

    def test_d_even(self):
        d6 = T("D6")
        assert expected_permutation(d6, 5) == (5, 6, 4, 3, 2, 0, 1)
        assert expected_permutation(d6, 6) == (6, 5, 4, 3, 2, 1, 0)

    def test_not_miniscule(self):
        with pytest.raises(NotMinisculeError):
            expected_permutation(T("F4"), 1)

    @pytest.mark.parametrize("case", MINISCULE_CASES, ids=lambda c: f"{c[0]}-{c[1]}")
    def test_is_permutation_sending_zero_to_index(self, case):
        lie_type, i = case
        images = expected_permutation(lie_type, i)
        assert sorted(images) == list(range(lie_type.rank + 1))
        assert images[0] == i

    @pytest.mark.parametrize("case", MINISCULE_CASES, ids=lambda c: f"{c[0]}-{c[1]}")
    def test_matches_canonical_word(self, case):
        lie_type, i = case
        assert affine_permutation(lie_type, canonical_word(lie_type, i)) == expected_permutation(lie_type, i)

"""
Tests for the closed-form and Weyl-word actions.
"""
import pytest
from pydantic import ValidationError

from affine_delta.action.delta import (
    check_admissible,
    delta_brute_force,
    delta_closed_form,
    delta_for_coweight,
    is_admissible,
    iterate,
)
from affine_delta.action.tables import enumerate_admissible
from affine_delta.exceptions import DimensionMismatchError, NotAdmissibleError, NotMinisculeError
from affine_delta.models.algebra import LevelWeight, LieType
from affine_delta.roots.root_system import cartan_matrix, miniscule_coweight_indices, unit_vector
from affine_delta.verification.checks import supported_types

T = LieType.parse

ACTING_TYPES = [t for t in supported_types(8) if miniscule_coweight_indices(t)]


class TestClosedForm:
    """Tests for delta_closed_form."""

    def test_sl2(self):
        assert delta_closed_form(T("A1"), 3, (1,), 1) == (2,)

    def test_a2_level2(self):
        assert delta_closed_form(T("A2"), 2, (1, 0), 1) == (1, 1)

    @pytest.mark.parametrize("lie_type", ACTING_TYPES, ids=str)
    def test_vacuum(self, lie_type):
        zero = (0,) * lie_type.rank
        for i in miniscule_coweight_indices(lie_type):
            assert delta_closed_form(lie_type, 2, zero, i) == tuple(2 * e for e in unit_vector(lie_type, i))

    def test_c_keeps_last_coefficient_non_negative(self):
        # Level 2, lambda = lambda_1: the last node receives +(k - <lambda, theta>) = +1
        assert delta_closed_form(T("C3"), 2, (1, 0, 0), 3) == (0, 1, 1)

    def test_e6_cycle(self):
        e6 = T("E6")
        assert delta_closed_form(e6, 1, (1, 0, 0, 0, 0, 0), 1) == (0, 0, 0, 0, 0, 1)
        assert delta_closed_form(e6, 1, (0, 0, 0, 0, 0, 1), 1) == (0, 0, 0, 0, 0, 0)

    def test_not_admissible(self):
        with pytest.raises(NotAdmissibleError):
            delta_closed_form(T("A2"), 1, (1, 1), 1)
        with pytest.raises(NotAdmissibleError):
            delta_closed_form(T("A2"), 3, (-1, 1), 1)

    def test_level_zero_rejected(self):
        with pytest.raises(NotAdmissibleError):
            delta_closed_form(T("A2"), 0, (0, 0), 1)

    def test_not_miniscule(self):
        with pytest.raises(NotMinisculeError):
            delta_closed_form(T("B3"), 1, (0, 0, 0), 2)

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            delta_closed_form(T("A2"), 1, (0, 0, 0), 1)


class TestBruteForce:
    """Tests for delta_brute_force."""

    def test_b3_lambda2(self):
        assert delta_brute_force(T("B3"), 2, (0, 1, 0), 1) == (0, 1, 0)

    def test_e7_vacuum(self):
        assert delta_brute_force(T("E7"), 1, (0,) * 7, 7) == (0, 0, 0, 0, 0, 0, 1)

    def test_c3_lambda3(self):
        assert delta_brute_force(T("C3"), 1, (0, 0, 1), 3) == (0, 0, 0)


class TestOracleEquivalence:
    """Closed form against the word oracle on every admissible weight."""

    @pytest.mark.parametrize("lie_type", ACTING_TYPES, ids=str)
    @pytest.mark.parametrize("level", [1, 2, 3])
    def test_closed_form_equals_oracle(self, lie_type, level):
        for weight in enumerate_admissible(lie_type, level):
            for i in miniscule_coweight_indices(lie_type):
                closed = delta_closed_form(lie_type, level, weight, i)
                assert closed == delta_brute_force(lie_type, level, weight, i)
                assert is_admissible(lie_type, level, closed)

    @pytest.mark.parametrize("level", range(1, 11))
    def test_sl2_law(self, level):
        a1 = T("A1")
        for n in range(0, level + 1):
            assert delta_closed_form(a1, level, (n,), 1) == (level - n,)


class TestArbitraryCoweights:
    """Tests for delta_for_coweight."""

    def test_zero_acts_trivially(self):
        assert delta_for_coweight(T("A2"), 2, (1, 0), (0, 0)) == (1, 0)

    def test_coroot_acts_trivially(self):
        d5 = T("D5")
        column = tuple(row[1] for row in cartan_matrix(d5))
        assert delta_for_coweight(d5, 2, (1, 0, 0, 0, 0), column) == (1, 0, 0, 0, 0)

    def test_fundamental_coweight(self):
        assert delta_for_coweight(T("A2"), 2, (1, 0), (1, 0)) == delta_closed_form(T("A2"), 2, (1, 0), 1)

    def test_non_miniscule_coweight(self):
        b3 = T("B3")
        assert delta_for_coweight(b3, 2, (0, 1, 0), (0, 0, 1)) == delta_closed_form(b3, 2, (0, 1, 0), 1)

    def test_twice_lambda1_in_a2(self):
        assert delta_for_coweight(T("A2"), 1, (0, 0), (2, 0)) == (0, 1)


class TestIterate:
    """Tests for repeated application."""

    def test_a2_cycle(self):
        a2 = T("A2")
        assert iterate(a2, 1, (0, 0), 1, 3) == (0, 0)
        assert iterate(a2, 1, (0, 0), 1, 1) == (1, 0)

    def test_zero_times(self):
        assert iterate(T("E6"), 1, (1, 0, 0, 0, 0, 0), 1, 0) == (1, 0, 0, 0, 0, 0)


class TestAdmissibility:
    """Tests for the admissibility check and LevelWeight."""

    def test_check_admissible(self):
        check_admissible(T("E7"), 1, (0, 0, 0, 0, 0, 0, 1))
        with pytest.raises(NotAdmissibleError):
            check_admissible(T("E7"), 1, (1, 0, 0, 0, 0, 0, 0))

    def test_level_weight(self):
        lw = LevelWeight(lie_type=T("B4"), level=3, weight=(0, 1, 0, 1))
        assert lw.weight == (0, 1, 0, 1)

    def test_level_weight_rejects(self):
        with pytest.raises(ValidationError):
            LevelWeight(lie_type=T("B4"), level=2, weight=(0, 1, 0, 1))
        with pytest.raises(ValidationError):
            LevelWeight(lie_type=T("A2"), level=2, weight=(1, -1))

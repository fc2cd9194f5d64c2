"""Tests for the six-step construction of H(phi, eta) and its inversion."""

import pytest

from g2_rigid.chargroup import TRIVIAL, Character
from g2_rigid.errors import ConditionViolatedError, InvalidDataError
from g2_rigid.g2.catalog import recognize
from g2_rigid.g2.construction import (
    ALPHA1_MONODROMY,
    ALPHA2_MONODROMY,
    ConstructionRecipe,
    candidate_system,
    condition_violations,
    construct_h,
    infinity_case,
    invert_construction,
    table_pairs,
    table_row,
)
from g2_rigid.localdata import FormalLocalSystem, Provenance, rank, rigidity_index, validate
from g2_rigid.motivic import hyp_for_characters, recipe_for
from tests.conftest import CASE1_TABLE, CASE2_TABLE, CASE_TABLES, ch, fls, lm


class TestConstructionTables:
    """H0..H6 against the worked tables."""

    @pytest.mark.parametrize("row", range(7))
    def test_case1(self, case1_systems: list[FormalLocalSystem], row: int):
        """phi = eta = 1."""
        assert case1_systems[row].same_local_data(fls(*CASE1_TABLE[row]))

    @pytest.mark.parametrize("row", range(7))
    def test_case2(self, case2_systems: list[FormalLocalSystem], row: int):
        """phi = eta of order 3."""
        assert case2_systems[row].same_local_data(fls(*CASE2_TABLE[row]))

    @pytest.mark.parametrize("case", [3, 4, 5])
    @pytest.mark.parametrize("row", range(7))
    def test_cases_3_to_5(self, case: int, row: int):
        """phi = eta = 1/5, then phi = 1/5 with eta = phi^-1, then phi = 1/7 with eta = 2/7."""
        phi, eta, table = CASE_TABLES[case]
        systems = construct_h(ch(phi), ch(eta))
        assert infinity_case(ch(phi), ch(eta)).case == case
        assert systems[row].same_local_data(fls(*table[row]))

    @pytest.mark.parametrize("case", [1, 2, 3, 4, 5])
    def test_tables_balance_determinants(self, case: int):
        """det at infinity is the product of the finite determinants on every row."""
        for alpha1, alpha2, infinity in CASE_TABLES[case][2]:
            assert lm(infinity).determinant == lm(alpha1).determinant * lm(alpha2).determinant

    @pytest.mark.parametrize("case", [1, 2, 3, 4, 5])
    def test_every_case_stays_rigid(self, case: int):
        phi, eta, _ = CASE_TABLES[case]
        systems = construct_h(ch(phi), ch(eta))
        assert [rank(h) for h in systems] == list(range(1, 8))
        assert all(rigidity_index(h) == 2 for h in systems)

    def test_ranks_and_rigidity(self, case1_systems: list[FormalLocalSystem]):
        """Rank grows by one per step, rigidity index stays 2."""
        assert [rank(h) for h in case1_systems] == list(range(1, 8))
        assert all(rigidity_index(h) == 2 for h in case1_systems)
        assert all(validate(h) == [] for h in case1_systems)

    def test_provenance(self, case1_systems: list[FormalLocalSystem]):
        assert case1_systems[-1].provenance is Provenance.CONSTRUCTED

    @pytest.mark.parametrize("phi,eta", [
        ("1/5", "1/5"),
        ("2/7", "2/7"),
        ("1/5", "4/5"),
        ("1/3", "2/3"),
        ("1/7", "2/7"),
        ("1/11", "3/11"),
        ("1/9", "1/3"),
    ])
    def test_h6_is_g2(self, phi: str, eta: str):
        """Every local monodromy of H6 is a G2 class."""
        h6 = construct_h(ch(phi), ch(eta))[-1]
        assert h6.monodromy("alpha1") == ALPHA1_MONODROMY
        assert h6.monodromy("alpha2") == ALPHA2_MONODROMY
        for _, m in h6.points():
            assert recognize(m) is not None


class TestConditions:
    """Pairs the construction refuses."""

    def test_quadratic_phi(self):
        """phi = -1 violates the first condition."""
        with pytest.raises(ConditionViolatedError) as excinfo:
            construct_h(ch("1/2"), TRIVIAL)
        assert "phi" in excinfo.value.products

    @pytest.mark.parametrize("phi,eta,products", [
        ("1/8", "1/4", ["eta*phi^2"]),
        ("1/12", "7/12", ["phi/eta"]),
        ("1/4", "1/4", ["phi*eta"]),
    ])
    def test_violation_names(self, phi: str, eta: str, products: list[str]):
        assert condition_violations(ch(phi), ch(eta)) == products

    @pytest.mark.parametrize("phi,eta", [("1/6", "1/6"), ("1/4", "3/4")])
    def test_flagged_pairs_refused(self, phi: str, eta: str):
        """No rigid system exists for these pairs."""
        with pytest.raises(ConditionViolatedError):
            construct_h(ch(phi), ch(eta))


class TestInfinityCase:
    """Selection of the class at infinity."""

    @pytest.mark.parametrize("phi,eta,case,row", [
        ("0/1", "0/1", 1, "J(7)"),
        ("1/3", "1/3", 2, "(εJ(3),ε^-1J(3),1)"),
        ("1/5", "1/5", 3, "(xJ(2),x^-1J(2),x^2,x^-2,1)"),
        ("1/5", "4/5", 4, "(xJ(2),x^-1J(2),J(3))"),
        ("1/7", "2/7", 5, "(x,y,xy,1,(xy)^-1,y^-1,x^-1)"),
    ])
    def test_cases(self, phi: str, eta: str, case: int, row: str):
        result = infinity_case(ch(phi), ch(eta))
        assert result.case == case
        assert result.label.startswith(row)
        assert not result.flagged

    def test_regular_unipotent_at_infinity(self):
        assert lm(CASE1_TABLE[6][2]).to_dict() == infinity_case(TRIVIAL, TRIVIAL).expected

    @pytest.mark.parametrize("phi,eta,case,reason", [
        ("1/6", "1/6", 3, "order 6"),
        ("1/4", "3/4", 4, "order 4"),
        ("1/8", "1/4", 5, "eta*phi^2"),
    ])
    def test_flagged(self, phi: str, eta: str, case: int, reason: str):
        """Pairs without a rigid system are reported, not refused."""
        result = infinity_case(ch(phi), ch(eta))
        assert result.case == case
        assert result.flagged
        assert reason in result.reason

    def test_outside_table(self):
        with pytest.raises(ConditionViolatedError):
            infinity_case(ch("1/2"), TRIVIAL)
        assert table_row(ch("1/2"), TRIVIAL) is None

    def test_table_pairs(self):
        """Order dividing 3: (1,1), the two order-3 diagonals and the two inverse pairs."""
        pairs = {(str(p), str(e)): c.case for p, e, c in table_pairs(3)}
        assert pairs == {
            ("0/1", "0/1"): 1,
            ("1/3", "1/3"): 2,
            ("2/3", "2/3"): 2,
            ("1/3", "2/3"): 4,
            ("2/3", "1/3"): 4,
        }


class TestRecipe:
    """Twists and characters."""

    def test_case1_recipe(self):
        recipe = ConstructionRecipe.for_pair(TRIVIAL, TRIVIAL)
        assert [str(recipe.character(i)) for i in range(1, 7)] == ["1/2"] * 6
        assert str(recipe.twist(1)) == "L(1/2, 1/2)"
        assert str(recipe.twist(7)) == "L(1/2, 0/1)"

    @pytest.mark.parametrize("phi,eta", [("0/1", "0/1"), ("1/3", "1/3"), ("1/7", "2/7"), ("1/5", "4/5")])
    def test_matches_hypersurface_exponents(self, phi: str, eta: str):
        """The exponent tables of Hyp encode the same recipe."""
        assert recipe_for(hyp_for_characters(ch(phi), ch(eta))) == ConstructionRecipe.for_pair(ch(phi), ch(eta))


class TestInversion:
    """Undoing the construction on rank-7 candidates."""

    def test_clean_descent(self, case1_systems: list[FormalLocalSystem]):
        report = invert_construction(case1_systems[-1], TRIVIAL, TRIVIAL)
        assert report.outcome == "clean"
        assert report.ranks == [6, 5, 4, 3, 2, 1]
        assert all(step.rigidity == 2 for step in report.steps)

    def test_clean_descent_case2(self):
        phi = eta = Character.of(1, 3)
        report = invert_construction(candidate_system(phi, eta), phi, eta)
        assert report.outcome == "clean"

    @pytest.mark.parametrize("phi,eta", [("1/4", "3/4"), ("1/6", "1/6")])
    def test_flagged_candidates_contradict(self, phi: str, eta: str):
        """Flagged pairs fail during descent, at step 4."""
        report = invert_construction(candidate_system(ch(phi), ch(eta)), ch(phi), ch(eta))
        assert report.outcome == "contradiction"
        assert report.failed_step == 4
        assert report.reason

    def test_needs_rank_seven(self, h0_case1: FormalLocalSystem):
        with pytest.raises(InvalidDataError):
            invert_construction(h0_case1, TRIVIAL, TRIVIAL)

"""Tests for the representation ring of (tame characters) x SL2."""

import pytest
from hypothesis import given, settings, strategies as st

from g2_rigid.chargroup import QUADRATIC, TRIVIAL, Character
from g2_rigid.errors import InvalidDataError, NotInG2Error
from g2_rigid.g2.catalog import TEMPLATES
from g2_rigid.reprring import (
    RepRingElement,
    adams,
    g2_centralizer_dim,
    inertia_invariant_dim,
    lambda2,
    lambda3,
    sym2,
    tensor,
)
from tests.conftest import CASE1_TABLE, lm

basis = RepRingElement.basis

# one admissible parameter choice per row
SAMPLE_PARAMS = {
    10: (Character.of(1, 3),),
    11: (Character.of(1, 3),),
    12: (Character.of(1, 3),),
    13: (Character.of(1, 4),),
    14: (Character.of(1, 4),),
    15: (Character.of(1, 3),),
    16: (Character.of(1, 5),),
    17: (Character.of(1, 5),),
    18: (Character.of(1, 5),),
    19: (Character.of(1, 5),),
    20: (Character.of(1, 7), Character.of(2, 7)),
}

actual_elements = st.lists(
    st.tuples(st.integers(0, 5), st.integers(1, 4), st.integers(1, 2)),
    min_size=1,
    max_size=3,
).map(lambda terms: RepRingElement.from_terms([((Character.of(c, 6), n), k) for c, n, k in terms]))


class TestTensor:
    """Clebsch-Gordan products."""

    def test_sl2_standard_squared(self):
        """[2] x [2] = [3] + [1]."""
        assert tensor(basis(TRIVIAL, 2), basis(TRIVIAL, 2)) == basis(TRIVIAL, 3) + basis(TRIVIAL, 1)

    def test_characters_multiply(self):
        """(-1) x (-1) = 1."""
        assert basis(QUADRATIC, 1) * basis(QUADRATIC, 1) == basis(TRIVIAL, 1)

    @given(actual_elements, actual_elements)
    def test_dimension_is_multiplicative(self, a: RepRingElement, b: RepRingElement):
        assert (a * b).dim == a.dim * b.dim


class TestAdams:
    """psi^k."""

    @pytest.mark.parametrize("k,expected", [
        (2, basis(TRIVIAL, 3) - basis(TRIVIAL, 1)),
        (3, basis(TRIVIAL, 4) - basis(TRIVIAL, 2)),
    ])
    def test_on_standard(self, k: int, expected: RepRingElement):
        assert adams(basis(TRIVIAL, 2), k) == expected

    def test_on_characters(self):
        """psi^k raises the character to the k-th power."""
        assert adams(basis(Character.of(1, 5), 1), 3) == basis(Character.of(3, 5), 1)

    def test_needs_positive_k(self):
        with pytest.raises(InvalidDataError):
            adams(basis(TRIVIAL, 2), 0)


class TestExteriorPowers:
    """lambda^2, lambda^3 and Sym^2 through the Newton identities."""

    def test_lambda2_standard(self):
        """Lambda^2 of the SL2 standard representation is trivial."""
        assert lambda2(basis(TRIVIAL, 2)) == basis(TRIVIAL, 1)

    def test_lambda3_regular_unipotent(self):
        """Lambda^3 of U(7) splits as [13] + [9] + [7] + [5] + [1]."""
        expected = RepRingElement.from_terms({(TRIVIAL, n): 1 for n in (13, 9, 7, 5, 1)})
        assert lambda3(basis(TRIVIAL, 7)) == expected

    @pytest.mark.parametrize("point,expected", [(0, 19), (1, 13), (2, 5)])
    def test_lambda3_invariants_of_h6(self, point: int, expected: int):
        """Invariant dimensions of lambda^3 at alpha1, alpha2, infinity."""
        m = lm(CASE1_TABLE[6][point])
        assert inertia_invariant_dim(lambda3(RepRingElement.from_local_monodromy(m))) == expected

    def test_lambda3_euler_sum(self):
        """-35 + 19 + 13 + 5 = 2."""
        total = sum(
            inertia_invariant_dim(lambda3(RepRingElement.from_local_monodromy(lm(parts))))
            for parts in CASE1_TABLE[6]
        )
        assert -35 + total == 2

    def test_refuses_virtual(self):
        with pytest.raises(InvalidDataError):
            lambda2(basis(TRIVIAL, 2) - basis(TRIVIAL, 1))

    def test_refuses_small_dimension(self):
        with pytest.raises(InvalidDataError):
            lambda3(basis(TRIVIAL, 2))

    @settings(max_examples=40, deadline=None)
    @given(actual_elements)
    def test_dimensions(self, a: RepRingElement):
        """dim Lambda^2 + dim Sym^2 = dim^2, and both are actual."""
        n = a.dim
        if n < 2:
            return
        l2, s2 = lambda2(a), sym2(a)
        assert l2.dim == n * (n - 1) // 2
        assert s2.dim == n * (n + 1) // 2
        assert l2.is_actual and s2.is_actual

    def test_round_trip_local_monodromy(self):
        """Actual classes convert back to Jordan data."""
        m = lm({"1/6": [2, 1, 1], "0/1": [1, 1]})
        assert RepRingElement.from_local_monodromy(m).to_local_monodromy() == m


class TestG2Centralizer:
    """dim C_G2 = inv(lambda^2 V) - inv(V)."""

    @pytest.mark.parametrize("tpl", TEMPLATES, ids=lambda t: f"row{t.template_id}")
    def test_matches_table(self, tpl):
        """Every row of the G2 class table has its tabulated dimension."""
        m = tpl.instantiate(*SAMPLE_PARAMS.get(tpl.template_id, ()))
        assert g2_centralizer_dim(m) == tpl.dim_c_g2

    def test_not_in_g2(self):
        """A single Jordan block with nontrivial character is not in G2."""
        with pytest.raises(NotInG2Error):
            g2_centralizer_dim(lm({"1/3": [7]}))

    def test_wrong_degree(self):
        with pytest.raises(NotInG2Error):
            g2_centralizer_dim(lm({"0/1": [3]}))

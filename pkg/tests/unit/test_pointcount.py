"""Tests for fiber point counts of the double cover."""

import itertools

import pytest

from g2_rigid.errors import InvalidDataError
from g2_rigid.pointcount import (
    count_fiber,
    legendre_table,
    predicted_domain_size,
    sweep,
)


def brute_force(q: int, t: int) -> tuple[int, int]:
    """(domain size, character sum) by plain enumeration."""
    domain = s_value = 0
    values = range(2, q)
    for x in itertools.product(values, repeat=6):
        chain = x + (t,)
        if any(chain[k] == chain[k + 1] for k in range(6)):
            continue
        domain += 1
        f = 1
        for k in range(6):
            f *= chain[k + 1] - chain[k]
        f *= chain[0] * chain[2] * chain[4] * chain[6]
        f *= (chain[0] - 1) * (chain[1] - 1) * (chain[3] - 1) * (chain[5] - 1)
        f %= q
        s_value += 1 if pow(f, (q - 1) // 2, q) == 1 else -1
    return domain, s_value


def brute_force_points(q: int, t: int) -> int:
    """Points (x, y) on the fiber with y != 0, by plain enumeration of both coordinates."""
    points = 0
    for x in itertools.product(range(2, q), repeat=6):
        chain = x + (t,)
        if any(chain[k] == chain[k + 1] for k in range(6)):
            continue
        f = 1
        for k in range(6):
            f *= chain[k + 1] - chain[k]
        f *= chain[0] * chain[2] * chain[4] * chain[6]
        f *= (chain[0] - 1) * (chain[1] - 1) * (chain[3] - 1) * (chain[5] - 1)
        points += sum(1 for y in range(1, q) if (y * y - f) % q == 0)
    return points


class TestTables:
    """Lookup tables over F_q."""

    def test_legendre(self):
        assert list(legendre_table(7)) == [0, 1, 1, -1, 1, -1, -1]


class TestDomainSize:
    @pytest.mark.parametrize("q,t", [(5, 2), (5, 4), (7, 3)])
    def test_matches_enumeration(self, q: int, t: int):
        assert predicted_domain_size(q, t) == brute_force(q, t)[0]

    def test_smallest_field(self):
        """F_3 minus {0, 1} has one element, so no chain has distinct neighbours."""
        assert predicted_domain_size(3, 2) == 0


class TestCountFiber:
    """Both counting methods against enumeration."""

    @pytest.mark.parametrize("q,t", [(5, 2), (5, 3), (7, 2), (7, 5)])
    def test_against_brute_force(self, q: int, t: int):
        domain, s_value = brute_force(q, t)
        report = count_fiber(q, t)
        assert report.domain_size == domain
        assert report.s_value == s_value
        assert report.hyp_count == domain + s_value
        assert report.direct_count == report.hyp_count
        assert report.agrees

    def test_empty_fiber(self):
        report = count_fiber(3, 2)
        assert (report.domain_size, report.s_value, report.hyp_count) == (0, 0, 0)

    @pytest.mark.parametrize("method", ["char-sum", "direct"])
    def test_single_method(self, method: str):
        both = count_fiber(7, 4)
        single = count_fiber(7, 4, method=method)
        assert single.s_value == both.s_value
        assert single.hyp_count == both.hyp_count
        assert (single.direct_count is None) == (method == "char-sum")

    @pytest.mark.parametrize("threads", [1, 2, 8])
    def test_thread_count_is_irrelevant(self, threads: int):
        one = count_fiber(11, 3, threads=1)
        other = count_fiber(11, 3, threads=threads)
        assert (one.s_value, one.hyp_count, one.direct_count, one.visited) == (
            other.s_value,
            other.hyp_count,
            other.direct_count,
            other.visited,
        )
        assert other.threads == threads

    @pytest.mark.parametrize("q,t", [(5, 2), (7, 3)])
    def test_direct_counts_point_pairs(self, q: int, t: int):
        """The direct method finds exactly the (x, y) pairs with y != 0 and y^2 = f(x)."""
        assert count_fiber(q, t, method="direct").direct_count == brute_force_points(q, t)

    @pytest.mark.parametrize("q", [1, 2, 9, 15, 2**31 + 11])
    def test_invalid_q(self, q: int):
        with pytest.raises(InvalidDataError):
            count_fiber(q, 2)

    @pytest.mark.parametrize("t", [0, 1, 7, -1])
    def test_invalid_t(self, t: int):
        with pytest.raises(InvalidDataError):
            count_fiber(7, t)

    def test_unknown_method(self):
        with pytest.raises(InvalidDataError):
            count_fiber(5, 2, method="guess")


class TestSweep:
    def test_every_fiber(self):
        reports = sweep([3, 5])
        assert [(r.q, r.t) for r in reports] == [(3, 2), (5, 2), (5, 3), (5, 4)]
        assert all(r.agrees for r in reports)

    def test_validates_all_q_first(self):
        with pytest.raises(InvalidDataError):
            sweep([5, 4])

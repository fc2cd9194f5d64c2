"""Shared test fixtures and configuration."""

import pytest
from typer.testing import CliRunner

from g2_rigid.chargroup import Character
from g2_rigid.g2.construction import construct_h
from g2_rigid.localdata import FormalLocalSystem, LocalMonodromy, Partition, Provenance


def ch(text: str) -> Character:
    return Character.parse(text)


def lm(parts: dict[str, list[int]]) -> LocalMonodromy:
    """Local monodromy from {"p/q": [blocks]}."""
    return LocalMonodromy(tuple((ch(c), Partition(tuple(b))) for c, b in parts.items()))


def fls(alpha1: dict, alpha2: dict, infinity: dict) -> FormalLocalSystem:
    return FormalLocalSystem(
        (("alpha1", lm(alpha1)), ("alpha2", lm(alpha2))), lm(infinity), Provenance.USER_SUPPLIED
    )


# H0..H6 as (alpha1, alpha2, infinity)
CASE1_TABLE = [
    ({"1/2": [1]}, {"1/2": [1]}, {"0/1": [1]}),
    ({"0/1": [2]}, {"1/2": [2]}, {"0/1": [2]}),
    ({"1/2": [1, 1], "0/1": [1]}, {"0/1": [3]}, {"0/1": [3]}),
    ({"0/1": [2, 2]}, {"1/2": [1, 1], "0/1": [2]}, {"0/1": [4]}),
    ({"1/2": [1, 1, 1], "0/1": [1, 1]}, {"0/1": [2, 2], "1/2": [1]}, {"0/1": [5]}),
    ({"0/1": [2, 2, 2]}, {"1/2": [2, 1, 1], "0/1": [1, 1]}, {"0/1": [6]}),
    ({"1/2": [1, 1, 1, 1], "0/1": [1, 1, 1]}, {"0/1": [3, 2, 2]}, {"0/1": [7]}),
]

# phi = eta = 1/3
CASE2_TABLE = [
    ({"1/2": [1]}, {"1/6": [1]}, {"2/3": [1]}),
    ({"0/1": [2]}, {"5/6": [1], "1/6": [1]}, {"1/3": [1], "2/3": [1]}),
    ({"1/2": [1, 1], "0/1": [1]}, {"1/3": [1], "2/3": [1], "0/1": [1]}, {"1/3": [1], "2/3": [1], "0/1": [1]}),
    ({"1/3": [1, 1], "0/1": [1, 1]}, {"2/3": [1], "0/1": [1], "1/2": [1, 1]}, {"2/3": [1], "0/1": [1], "1/3": [2]}),
    ({"0/1": [1, 1], "1/2": [1, 1, 1]}, {"5/6": [1], "2/3": [1, 1], "0/1": [1, 1]}, {"1/3": [1], "0/1": [2], "2/3": [2]}),
    ({"2/3": [1, 1, 1], "0/1": [1, 1, 1]}, {"1/6": [2, 1, 1], "0/1": [1, 1]}, {"2/3": [1], "0/1": [2], "1/3": [3]}),
    ({"1/2": [1, 1, 1, 1], "0/1": [1, 1, 1]}, {"0/1": [3, 2, 2]}, {"0/1": [1], "1/3": [3], "2/3": [3]}),
]

# phi = eta = 1/5
CASE3_TABLE = [
    ({"1/2": [1]}, {"9/10": [1]}, {"2/5": [1]}),
    ({"2/5": [1], "0/1": [1]}, {"1/10": [1], "3/10": [1]}, {"3/5": [1], "1/5": [1]}),
    ({"1/2": [1, 1], "0/1": [1]}, {"1/5": [1], "2/5": [1], "0/1": [1]}, {"1/5": [1], "4/5": [1], "3/5": [1]}),
    ({"3/5": [1, 1], "0/1": [1, 1]}, {"4/5": [1], "0/1": [1], "1/2": [1, 1]}, {"4/5": [1], "2/5": [1], "1/5": [1], "3/5": [1]}),
    (
        {"0/1": [1, 1], "1/2": [1, 1, 1]},
        {"7/10": [1], "2/5": [1, 1], "0/1": [1, 1]},
        {"1/5": [1], "4/5": [1], "3/5": [1], "0/1": [1], "2/5": [1]},
    ),
    (
        {"4/5": [1, 1, 1], "0/1": [1, 1, 1]},
        {"3/10": [2, 1, 1], "0/1": [1, 1]},
        {"4/5": [1], "2/5": [1], "1/5": [1], "0/1": [1], "3/5": [2]},
    ),
    (
        {"1/2": [1, 1, 1, 1], "0/1": [1, 1, 1]},
        {"0/1": [3, 2, 2]},
        {"0/1": [1], "3/5": [1], "2/5": [1], "4/5": [2], "1/5": [2]},
    ),
]

# phi = 1/5, eta = 4/5
CASE4_TABLE = [
    ({"1/2": [1]}, {"1/2": [1]}, {"0/1": [1]}),
    ({"1/5": [1], "0/1": [1]}, {"1/2": [1], "3/10": [1]}, {"0/1": [2]}),
    ({"1/2": [1, 1], "0/1": [1]}, {"4/5": [1], "3/5": [1], "0/1": [1]}, {"4/5": [3]}),
    ({"0/1": [2, 2]}, {"1/5": [1], "0/1": [1], "9/10": [1, 1]}, {"1/5": [3], "2/5": [1]}),
    ({"0/1": [1, 1], "1/2": [1, 1, 1]}, {"7/10": [1], "2/5": [1, 1], "0/1": [1, 1]}, {"1/5": [3], "2/5": [1], "0/1": [1]}),
    ({"4/5": [1, 1, 1], "0/1": [1, 1, 1]}, {"3/10": [2, 1, 1], "0/1": [1, 1]}, {"4/5": [3], "0/1": [1], "3/5": [2]}),
    ({"1/2": [1, 1, 1, 1], "0/1": [1, 1, 1]}, {"0/1": [3, 2, 2]}, {"0/1": [3], "4/5": [2], "1/5": [2]}),
]

# phi = 1/7, eta = 2/7
CASE5_TABLE = [
    ({"1/2": [1]}, {"13/14": [1]}, {"3/7": [1]}),
    ({"2/7": [1], "0/1": [1]}, {"1/14": [1], "5/14": [1]}, {"4/7": [1], "1/7": [1]}),
    ({"1/2": [1, 1], "0/1": [1]}, {"2/7": [1], "4/7": [1], "0/1": [1]}, {"2/7": [1], "6/7": [1], "5/7": [1]}),
    ({"4/7": [1, 1], "0/1": [1, 1]}, {"5/7": [1], "0/1": [1], "5/14": [1, 1]}, {"5/7": [1], "2/7": [1], "1/7": [1], "3/7": [1]}),
    (
        {"0/1": [1, 1], "1/2": [1, 1, 1]},
        {"9/14": [1], "2/7": [1, 1], "0/1": [1, 1]},
        {"1/7": [1], "5/7": [1], "4/7": [1], "6/7": [1], "3/7": [1]},
    ),
    (
        {"6/7": [1, 1, 1], "0/1": [1, 1, 1]},
        {"5/14": [2, 1, 1], "0/1": [1, 1]},
        {"6/7": [1], "3/7": [1], "2/7": [1], "4/7": [1], "1/7": [1], "5/7": [1]},
    ),
    (
        {"1/2": [1, 1, 1, 1], "0/1": [1, 1, 1]},
        {"0/1": [3, 2, 2]},
        {"0/1": [1], "4/7": [1], "3/7": [1], "5/7": [1], "2/7": [1], "6/7": [1], "1/7": [1]},
    ),
]

# (phi, eta, table) for every case
CASE_TABLES = {
    1: ("0/1", "0/1", CASE1_TABLE),
    2: ("1/3", "1/3", CASE2_TABLE),
    3: ("1/5", "1/5", CASE3_TABLE),
    4: ("1/5", "4/5", CASE4_TABLE),
    5: ("1/7", "2/7", CASE5_TABLE),
}


@pytest.fixture
def case1_systems() -> list[FormalLocalSystem]:
    """H0..H6 for phi = eta = 1."""
    return construct_h(ch("0/1"), ch("0/1"))


@pytest.fixture
def case2_systems() -> list[FormalLocalSystem]:
    """H0..H6 for phi = eta of order 3."""
    return construct_h(ch("1/3"), ch("1/3"))


@pytest.fixture
def h0_case1() -> FormalLocalSystem:
    return fls(*CASE1_TABLE[0])


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()

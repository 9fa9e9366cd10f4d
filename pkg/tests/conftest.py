"""Shared fixtures; puts src/ on the import path like the entry points do."""

import random
import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from catalog import get  # noqa: E402
from tableau.model import Tableau  # noqa: E402


@pytest.fixture
def euler() -> Tableau:
    return Tableau.build(A=[[0]], b=[1], name="euler")


@pytest.fixture
def erk322() -> Tableau:
    return get("(3,2,2)").tableau


@pytest.fixture
def erk533() -> Tableau:
    return get("(5,3,3)").tableau


@pytest.fixture
def rk4() -> Tableau:
    return get("rk4").tableau


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def random_explicit_tableau(rng: random.Random, s: int, nonnegative: bool = False, denominator: int = 6) -> Tableau:
    """Random strictly lower A and b with small rational entries."""
    low = 0 if nonnegative else -denominator
    def entry():
        return f"{rng.randint(low, denominator)}/{denominator}"
    A = [[entry() if j < i else "0" for j in range(s)] for i in range(s)]
    b = [entry() for _ in range(s)]
    return Tableau.build(A=A, b=b)


@pytest.fixture
def random_tableau():
    return random_explicit_tableau

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from topolab.finspace import FinSpace, chain, discrete, enumerate_topologies, indiscrete, make_space, sierpinski


@pytest.fixture(scope="session")
def s() -> FinSpace:
    return sierpinski()


@pytest.fixture(scope="session")
def chain2() -> FinSpace:
    """Two points with opens {}, {0}, {0,1}."""
    return chain(2)


@pytest.fixture(scope="session")
def disc2() -> FinSpace:
    return discrete(2)


@pytest.fixture(scope="session")
def indisc2() -> FinSpace:
    return indiscrete(2)


@pytest.fixture(scope="session")
def pt() -> FinSpace:
    return make_space(1, [0, 1])


def all_spaces_up_to(n: int) -> list[FinSpace]:
    out: list[FinSpace] = []
    for k in range(1, n + 1):
        out.extend(enumerate_topologies(k))
    return out

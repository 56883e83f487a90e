"""Shared fixtures: worked-example posets and upsets, seeded generators, small fields."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add the src directory to the Python path
sys.path.append(str(Path(__file__).parent.parent / "src"))

from poset_scaffolds.linalg import PrimeField  # noqa: E402
from poset_scaffolds.posets import Poset  # noqa: E402

FIXTURES = Path(__file__).parent.parent / "fixtures"

FIG1_EDGES = (
    ("t", "x"), ("u", "x"), ("u", "y"), ("v", "y"), ("x", "z"), ("y", "z"), ("w", "z"),
)

SWEEP_GENERATORS = (
    (0, 6, 0), (1, 5, 0), (3, 4, 0), (4, 2, 0), (5, 0, 0),
    (1, 3, 1), (2, 2, 1), (4, 1, 1),
)


@pytest.fixture
def fig1() -> Poset:
    return Poset(tuple("tuvwxyz"), FIG1_EDGES)


@pytest.fixture
def sweep_generators():
    return SWEEP_GENERATORS


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture(params=[2, 5, 2147483647], ids=["F2", "F5", "F_2^31-1"])
def field(request) -> PrimeField:
    return PrimeField(request.param)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES

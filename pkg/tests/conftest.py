import cmath
import math
from pathlib import Path

import pytest

from hypergon import validate
from hypergon.corpus import random_corpus

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# Frozen reference values.  Each was computed by a route that shares no code
# with the package: scipy quad of rho^2 in polar coordinates for areas, quad of
# rho |dz| along the explicit orthogonal circle for lengths, mpmath for the
# distance formula.
SQUARE_AREA = 1.9598293050149131  # 8 atan(1/4)
SQUARE_SIDE = 1.6806997724280037  # d(0.5, 0.5i)
SQUARE_PERIMETER = 4 * SQUARE_SIDE
SQUARE_INTERIOR_ANGLE = 1.0808390005411683  # angle between the two orthogonal circles at 0.5
HALF_SQUARE_AREA = 0.4899573262537283  # triangle [0, 0.5, 0.5i], 2 atan(1/4)

CORPUS_SEED = 20261015


def roots_of_unity(n):
    return [cmath.exp(2j * math.pi * k / n) for k in range(n)]


@pytest.fixture
def square():
    return validate([0.5, 0.5j, -0.5, -0.5j])


@pytest.fixture
def ideal_triangle():
    return validate(roots_of_unity(3))


@pytest.fixture
def collinear_triangle():
    return validate([0.2, 0.6, -0.4])


@pytest.fixture(scope="session")
def corpus():
    """500 simple positively oriented polygons, n <= 10, |z| <= 0.9."""
    return random_corpus(CORPUS_SEED, 500, n_max=10, radius=0.9)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for label, _, _ in test_acceptance.CRITERIA:
            if label in test_acceptance.RESULTS:
                terminalreporter.write_line(test_acceptance.RESULTS[label])

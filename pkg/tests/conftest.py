import random
from fractions import Fraction

import pytest

from e2quiver import (
    EuclideanModule,
    Matrix,
    Window,
    enumerate_thin_indecomposables,
    partitions_up_to,
    young_module,
)
from e2quiver.quiver import DimensionVector


@pytest.fixture(scope="session")
def thin16():
    """The sixteen thin orbit representatives on the window [0, 4]."""
    return enumerate_thin_indecomposables(Window(0, 4))


@pytest.fixture(scope="session")
def young_corpus():
    """All 29 single-generator modules with at most 6 boxes, anchored at 0."""
    return [(p, young_module(p, 0)) for p in partitions_up_to(6)]


def random_thin_euclidean(rng: random.Random) -> EuclideanModule:
    """A seeded relation-satisfying module with all weight spaces of
    dimension at most one.

    The commutator through each weight vanishes because at most one of the
    two maps at each adjacent pair is nonzero; scalars are random nonzero
    rationals, so these are not torus-normalized.
    """
    a = rng.randint(-3, 3)
    width = rng.randint(0, 4)
    dims = {a: 1, a + width: 1}
    for k in range(a + 1, a + width):
        dims[k] = rng.randint(0, 1)
    dv = DimensionVector(dims)
    p_plus = {}
    p_minus = {}
    for k in range(a, a + width):
        if dv[k] == 1 and dv[k + 1] == 1:
            scalar = Fraction(rng.randint(1, 3), rng.randint(1, 2))
            if rng.random() < 0.5:
                scalar = -scalar
            choice = rng.randint(0, 2)
            if choice == 0:
                p_plus[k] = Matrix.from_rows([[scalar]])
            elif choice == 1:
                p_minus[k + 1] = Matrix.from_rows([[scalar]])
    return EuclideanModule(dv, p_plus, p_minus)


@pytest.fixture(scope="session")
def random_thin_corpus():
    rng = random.Random(20240)
    return [random_thin_euclidean(rng) for _ in range(50)]

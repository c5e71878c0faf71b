import random

import pytest

from hexsat.geometry import point, random_general_position

# Orientation figure: sigma(P,R,Q) = CW, sigma(R,S,Q) = CCW, sigma(P,S,T) = 0.
FIGURE_P = point(0, 0)
FIGURE_Q = point(5, 1)
FIGURE_R = point(2, 3)
FIGURE_S = point("3/2", 1)
FIGURE_T = point("9/2", 3)
FIGURE_POINTS = [FIGURE_P, FIGURE_Q, FIGURE_R, FIGURE_S, FIGURE_T]

# Nine-point demonstration set used for the symmetry-breaking walkthrough;
# note the duplicated x-coordinates, which exercise the shear step.
NINE_POINTS = [
    point("-13/10", "1/4"),
    point("-13/10", "9/10"),
    point("-7/10", "-9/20"),
    point("-7/20", "7/20"),
    point("-7/20", "-4/5"),
    point("3/5", "1/2"),
    point("9/10", "-3/5"),
    point("7/5", "11/10"),
    point("3/5", "-11/10"),
]


@pytest.fixture
def rng():
    return random.Random(2024061)


def make_rng(seed: int = 2024061) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def solver_cmd():
    from hexsat.solver import discover_solver

    cmd = discover_solver()
    if cmd is None:
        pytest.skip("no SAT solver available on PATH")
    return cmd


def random_sets(seed: int, count: int, n_range, bound: int = 10**6):
    """Deterministic stream of general-position point sets."""
    rng = random.Random(seed)
    lo, hi = n_range
    for _ in range(count):
        yield random_general_position(rng, rng.randint(lo, hi), bound)

import math

import pytest

import diskarea as da

TWO_PI = 2.0 * math.pi


@pytest.fixture(scope="session")
def random_map():
    return da.make_random_homeomorphism(42, n_knots=256, roughness=0.5)


@pytest.fixture(scope="session")
def mollified_map():
    return da.mollify_map(da.make_random_homeomorphism(7, n_knots=256, roughness=0.5))


@pytest.fixture(scope="session")
def mobius_half():
    return da.make_mobius_boundary(0.5)


@pytest.fixture(scope="session")
def step_two_jump():
    # +1 on the right half circle, -1 on the left
    return da.make_step_map([math.pi / 2, 3 * math.pi / 2], [math.pi, TWO_PI])


@pytest.fixture(scope="session")
def step_four_jump():
    return da.make_step_map(
        [math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 4, 7 * math.pi / 4],
        [0.0, math.pi / 2, math.pi, 3 * math.pi / 2],
    )

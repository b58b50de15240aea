import pytest

from isicap import ChannelSpec, build_operators, enumerate_profile

DELTA = 0.3


@pytest.fixture(scope="session")
def two_tap_ops():
    return build_operators(ChannelSpec((1.0, 0.2), DELTA, 12))


@pytest.fixture(scope="session")
def two_tap_profile(two_tap_ops):
    return enumerate_profile(two_tap_ops)


@pytest.fixture(scope="session")
def three_tap_ops():
    # Not diagonally dominant: energies below go through the QP solver.
    return build_operators(ChannelSpec((-0.3, 1.0, 0.6), DELTA, 12))


@pytest.fixture(scope="session")
def three_tap_profile(three_tap_ops):
    return enumerate_profile(three_tap_ops)

"""Shared fixtures: parameters and cached balls for the default graph."""

import pytest

from dlstar import DLParams, ball_distances, identity


@pytest.fixture(scope="session")
def params():
    return DLParams(d=3, q=2)


@pytest.fixture(scope="session")
def origin(params):
    return identity(params)


@pytest.fixture(scope="session")
def ball3(params):
    """Distance map for the radius-3 ball around the identity (319 vertices)."""
    return ball_distances(params, 3)


@pytest.fixture(scope="session")
def ball4(params):
    """Distance map for the radius-4 ball around the identity (1129 vertices)."""
    return ball_distances(params, 4)

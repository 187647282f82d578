"""Shared fixtures for walkzeta tests."""

import os

import numpy as np
import pytest

from walkzeta.coin_models import (
    GROVER_ETA,
    four_state_qw_1d,
    four_state_qw_2d,
    simple_rw,
    three_state_qw,
)
from walkzeta.graph_zeta import build_graph
from walkzeta.schemas import TorusSpec

WALKZETA_ENV = (
    "WALKZETA_DENSE_CAP",
    "WALKZETA_N_QUAD",
    "WALKZETA_SERIAL",
    "WALKZETA_LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def clean_environment():
    """Keep WALKZETA_* settings from the shell (or a .env load) out of every test."""
    saved = {name: os.environ.pop(name) for name in WALKZETA_ENV if name in os.environ}
    yield
    for name in WALKZETA_ENV:
        os.environ.pop(name, None)
    os.environ.update(saved)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def rw():
    return simple_rw()


@pytest.fixture
def grover3_f():
    return three_state_qw(GROVER_ETA, "f")


@pytest.fixture
def grover3_m():
    return three_state_qw(GROVER_ETA, "m")


@pytest.fixture
def qw4_line():
    return four_state_qw_1d(0.3, "f")


@pytest.fixture
def qw4_plane():
    return four_state_qw_2d(0.7, "m")


@pytest.fixture
def line6():
    return TorusSpec(d=1, N=6)


@pytest.fixture
def plane3():
    return TorusSpec(d=2, N=3)


@pytest.fixture
def k4():
    return build_graph("complete", n=4)


@pytest.fixture
def cycle5():
    return build_graph("cycle", N=5)


@pytest.fixture
def petersen():
    return build_graph("petersen")

"""Shared fixtures: small windows and the default prime field."""

import pytest

from dinfty_cluster.ar_translate import Window
from dinfty_cluster.matrix_oracle import DEFAULT_FIELD, ExactField


@pytest.fixture
def field() -> ExactField:
    return DEFAULT_FIELD


@pytest.fixture(scope="session")
def window7() -> Window:
    return Window(7)


@pytest.fixture(scope="session")
def window9() -> Window:
    return Window(9)


@pytest.fixture(scope="session")
def window13() -> Window:
    return Window(13)

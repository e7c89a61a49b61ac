from __future__ import annotations

import pytest

import fixtures as fx


@pytest.fixture(scope="session")
def s5_class():
    return fx.s5_class_quandle()


@pytest.fixture(scope="session")
def a5():
    return fx.a5_quandle()


@pytest.fixture(scope="session")
def a6():
    return fx.a6_quandle()

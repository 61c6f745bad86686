"""Pytest fixtures for pronorm tests."""

import pytest

from pronorm import EngineConfig, PermGroup, Permutation, build


@pytest.fixture
def config() -> EngineConfig:
    """Return the default engine configuration."""
    return EngineConfig()


@pytest.fixture(scope="session")
def sym3() -> PermGroup:
    return build("sym:3")


@pytest.fixture(scope="session")
def sym4() -> PermGroup:
    return build("sym:4")


@pytest.fixture(scope="session")
def alt4() -> PermGroup:
    return build("alt:4")


@pytest.fixture(scope="session")
def sym5() -> PermGroup:
    return build("sym:5")


@pytest.fixture(scope="session")
def alt5() -> PermGroup:
    return build("alt:5")


@pytest.fixture(scope="session")
def psl2_7() -> PermGroup:
    """PSL2(7) on the 8 points of the projective line."""
    return build("psl2:7")


@pytest.fixture
def klein_in_s4() -> PermGroup:
    """The normal Klein four-subgroup of Sym_4."""
    return PermGroup(
        [Permutation.parse("(0 1)(2 3)", 4), Permutation.parse("(0 2)(1 3)", 4)], 4
    )


@pytest.fixture
def double_transposition() -> PermGroup:
    """``<(0 1)(2 3)>`` on 4 points: subnormal but not normal in Sym_4 and Alt_4."""
    return PermGroup([Permutation.parse("(0 1)(2 3)", 4)], 4)

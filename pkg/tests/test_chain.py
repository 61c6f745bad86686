"""Tests for stabilizer chains, checked against sympy."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup as SymGroup

from pronorm import EngineConfig, OrderBoundExceeded, Permutation, build
from pronorm.chain import ProductReplacement, StabilizerChain


def sympy_order(gens: list[Permutation]) -> int:
    return int(SymGroup([SymPermutation(list(g.images)) for g in gens]).order())


def perms(degree: int) -> st.SearchStrategy[Permutation]:
    return st.permutations(list(range(degree))).map(Permutation)


class TestOrderOracle:
    """Chain orders agree with sympy's Schreier-Sims."""

    @pytest.mark.parametrize(
        "spec", ["sym:5", "alt:6", "dih:12", "psl2:7", "psl2:8", "psl3:2", "gl2:3", "wr:3,2"]
    )
    def test_catalog_orders(self, spec: str) -> None:
        """Test the orders of built groups."""
        G = build(spec)
        assert G.order() == sympy_order(list(G.generators))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(perms(7), min_size=1, max_size=3))
    def test_random_generators(self, gens: list[Permutation]) -> None:
        """Test random generating sets on 7 points."""
        chain = StabilizerChain(gens, 7)
        assert chain.order == sympy_order(gens)

    @settings(max_examples=10, deadline=None)
    @given(st.lists(perms(6), min_size=1, max_size=2), st.integers(0, 2**31))
    def test_seed_does_not_change_order(self, gens: list[Permutation], seed: int) -> None:
        """Test that the randomized prefill never changes the exact order."""
        seeded = StabilizerChain(gens, 6, config=EngineConfig(seed=seed))
        plain = StabilizerChain(gens, 6, config=EngineConfig(prefill_rounds=0))
        assert seeded.order == plain.order


class TestMembership:
    """Tests for sifting."""

    def test_contains_generators_and_products(self) -> None:
        """Test membership of products of generators."""
        gens = [Permutation.parse("(0 1 2)", 5), Permutation.parse("(2 3 4)", 5)]
        chain = StabilizerChain(gens, 5)
        assert chain.order == 60
        assert chain.contains(gens[0] * gens[1])
        assert not chain.contains(Permutation.parse("(0 1)", 5))

    def test_elements_are_distinct(self) -> None:
        """Test that elements() lists the group once."""
        chain = StabilizerChain(list(build("sym:4").generators), 4)
        elements = list(chain.elements())
        assert len(elements) == 24
        assert len(set(elements)) == 24

    def test_random_elements_are_members(self) -> None:
        """Test that random elements lie in the group."""
        G = build("psl2:7")
        rng = random.Random(1)
        assert all(G.contains(G.random_element(rng)) for _ in range(20))

    def test_product_replacement_stays_in_group(self) -> None:
        """Test product replacement samples."""
        G = build("alt:5")
        sampler = ProductReplacement(list(G.generators), random.Random(3))
        assert all(G.contains(sampler.sample()) for _ in range(20))

    def test_extend(self) -> None:
        """Test growing a chain in place."""
        chain = StabilizerChain([Permutation.parse("(0 1 2)", 4)], 4)
        assert chain.order == 3
        assert chain.extend(Permutation.parse("(0 1)", 4))
        assert chain.order == 6
        assert not chain.extend(Permutation.parse("(0 2)", 4))

    def test_order_bound(self) -> None:
        """Test that a chain refuses to grow past its bound."""
        with pytest.raises(OrderBoundExceeded):
            StabilizerChain(list(build("sym:5").generators), 5, order_bound=50)

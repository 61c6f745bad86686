"""Tests for prime sets and pi-parts."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pronorm import (
    ParseError,
    PermGroup,
    PiSet,
    PronormError,
    complement,
    factorize,
    is_pi_group,
    pi_part,
    prime_set,
)
from pronorm.arith import is_pi_number

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


class TestPiSet:
    """Tests for PiSet."""

    def test_parse(self) -> None:
        """Test parsing is order and brace insensitive."""
        assert PiSet.parse("2,3,5").primes == (2, 3, 5)
        assert PiSet.parse("{5, 3, 3}") == PiSet((3, 5))
        assert PiSet.parse("") == PiSet()

    def test_parse_errors(self) -> None:
        """Test that non-primes and junk are refused."""
        with pytest.raises(ParseError):
            PiSet.parse("2,4")
        with pytest.raises(ParseError):
            PiSet.parse("two")

    def test_constructor_rejects_composites(self) -> None:
        """Test direct construction."""
        with pytest.raises(PronormError):
            PiSet((6,))

    def test_text(self) -> None:
        """Test printing."""
        assert str(PiSet((3, 2))) == "{2,3}"

    def test_restrict_and_complement(self) -> None:
        """Test the primes of |G| inside and outside pi."""
        pi = PiSet((2, 3, 7))
        assert pi.restrict(60) == PiSet((2, 3))
        assert complement(pi, 60) == PiSet((5,))
        assert 3 in pi and 5 not in pi


class TestArithmetic:
    """Tests for factorization and pi-parts."""

    def test_factorize(self) -> None:
        """Test factorization of 7920."""
        f = factorize(7920)
        assert f.pairs == ((2, 4), (3, 2), (5, 1), (11, 1))
        assert str(f) == "2^4 * 3^2 * 5 * 11"
        assert f.value == 7920

    def test_factorize_rejects_zero(self) -> None:
        """Test that only positive integers factor."""
        with pytest.raises(PronormError):
            factorize(0)

    def test_prime_set(self) -> None:
        """Test pi(n)."""
        assert prime_set(360) == PiSet((2, 3, 5))
        assert prime_set(1) == PiSet()
        assert prime_set(5040) == PiSet((2, 3, 5, 7))

    def test_pi_part(self) -> None:
        """Test pi-parts of group orders."""
        assert pi_part(360, PiSet((2, 3))) == 72
        assert pi_part(7920, (2, 3)) == 144
        assert pi_part(660, PiSet((5,))) == 5
        assert pi_part(13, PiSet((2,))) == 1

    @pytest.mark.parametrize("n", [0, -12])
    def test_pi_part_rejects_non_positive(self, n: int) -> None:
        """Test pi-parts are only taken of positive integers."""
        with pytest.raises(PronormError):
            pi_part(n, PiSet((2, 3)))

    @given(st.integers(1, 10**7), st.sets(st.sampled_from(SMALL_PRIMES)))
    def test_pi_and_complement_parts_multiply(self, n: int, primes: set[int]) -> None:
        """Test n = n_pi * n_pi'."""
        pi = PiSet(tuple(primes))
        assert pi_part(n, pi) * pi_part(n, complement(pi, n)) == n

    @given(st.integers(1, 10**6), st.sets(st.sampled_from(SMALL_PRIMES)))
    def test_pi_part_is_pi_number(self, n: int, primes: set[int]) -> None:
        """Test that n_pi divides n and is a pi-number."""
        pi = PiSet(tuple(primes))
        part = pi_part(n, pi)
        assert n % part == 0
        assert is_pi_number(part, pi)

    def test_is_pi_group(self, sym4: PermGroup, alt5: PermGroup) -> None:
        """Test pi-groups among small groups."""
        assert is_pi_group(PermGroup.trivial(3), PiSet())
        assert is_pi_group(sym4, PiSet((2, 3)))
        assert not is_pi_group(alt5, PiSet((2, 3)))

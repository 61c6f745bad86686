"""Tests for finite field tables."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pronorm import UnsupportedGroupError
from pronorm.fields import finite_field

SUPPORTED = [2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 31]


class TestFiniteField:
    """Tests for GF(q)."""

    @pytest.mark.parametrize("q", SUPPORTED)
    def test_primitive_element(self, q: int) -> None:
        """Test that the multiplicative group is cyclic of order q - 1."""
        F = finite_field(q)
        w = F.primitive_element
        assert len({F.power(w, e) for e in range(q - 1)}) == q - 1

    @pytest.mark.parametrize("q", SUPPORTED)
    def test_characteristic(self, q: int) -> None:
        """Test that p copies of 1 add up to 0."""
        F = finite_field(q)
        total = 0
        for _ in range(F.p):
            total = F.add(total, 1)
        assert total == 0
        assert F.p**F.k == q

    def test_inverse_and_division(self) -> None:
        """Test unit inverses in GF(9)."""
        F = finite_field(9)
        assert all(F.mul(a, F.inv(a)) == 1 for a in F.units)
        assert all(F.div(a, a) == 1 for a in F.units)
        with pytest.raises(ZeroDivisionError):
            F.inv(0)

    def test_negation(self) -> None:
        """Test additive inverses in GF(8)."""
        F = finite_field(8)
        assert all(F.neg(a) == a for a in F.elements)

    @pytest.mark.parametrize("q", [1, 6, 10, 32, 49, 257])
    def test_unsupported_orders(self, q: int) -> None:
        """Test orders without tables."""
        with pytest.raises(UnsupportedGroupError):
            finite_field(q)

    @given(st.integers(0, 26), st.integers(0, 26))
    def test_frobenius_is_additive(self, a: int, b: int) -> None:
        """Test (a + b)^3 = a^3 + b^3 in GF(27)."""
        F = finite_field(27)
        assert F.power(F.add(a, b), 3) == F.add(F.power(a, 3), F.power(b, 3))

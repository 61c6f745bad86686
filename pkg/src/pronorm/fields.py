"""Small finite fields as addition and multiplication tables."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from sympy import factorint, isprime

from .exceptions import UnsupportedGroupError

logger = logging.getLogger(__name__)

# Irreducible moduli, coefficients from the constant term up (monic).
_MODULI: dict[int, tuple[int, tuple[int, ...]]] = {
    4: (2, (1, 1, 1)),  # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, (1, 0, 1)),  # x^2 + 1
    16: (2, (1, 1, 0, 0, 1)),  # x^4 + x + 1
    25: (5, (2, 1, 1)),  # x^2 + x + 2
    27: (3, (1, 2, 0, 1)),  # x^3 + 2x + 1
}

MAX_PRIME = 251


@dataclass(frozen=True)
class FiniteField:
    """The field with ``q = p^k`` elements, encoded as the integers ``0..q-1``.

    An element ``sum c_i p^i`` stands for the polynomial ``sum c_i x^i`` modulo
    the field's irreducible modulus; ``0`` and ``1`` are the field's zero and one.
    """

    q: int
    p: int
    k: int
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.add_table[a].index(0)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.mul_table[a].index(1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        result = 1
        for _ in range(e):
            result = self.mul(result, a)
        return result

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    @property
    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        return next(a for a in range(1, self.q) if self.multiplicative_order(a) == self.q - 1)

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def units(self) -> range:
        return range(1, self.q)


def _poly_tables(p: int, modulus: tuple[int, ...]) -> tuple[list[list[int]], list[list[int]]]:
    k = len(modulus) - 1
    q = p**k
    digits = [tuple((a // p**i) % p for i in range(k)) for a in range(q)]

    def encode(coeffs: list[int]) -> int:
        return sum(c * p**i for i, c in enumerate(coeffs))

    def multiply(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        full = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                full[i + j] = (full[i + j] + x * y) % p
        for top in range(2 * k - 2, k - 1, -1):
            c = full[top]
            if c:
                full[top] = 0
                for i, m in enumerate(modulus[:-1]):
                    full[top - k + i] = (full[top - k + i] - c * m) % p
        return encode(full[:k])

    add = [
        [encode([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
        for a in range(q)
    ]
    mul = [[multiply(digits[a], digits[b]) for b in range(q)] for a in range(q)]
    return add, mul


def _check_axioms(field: FiniteField) -> None:
    q = field.q
    add, mul = field.add_table, field.mul_table
    for a in range(q):
        if add[0][a] != a or mul[1][a] != a:
            raise ValueError(f"identity law fails at {a} in GF({q})")
        if a and 1 not in mul[a]:
            raise ValueError(f"{a} has no inverse in GF({q})")
        if 0 not in add[a]:
            raise ValueError(f"{a} has no negative in GF({q})")
    for a, b in product(range(q), repeat=2):
        if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
            raise ValueError(f"commutativity fails at ({a}, {b}) in GF({q})")
    for a, b, c in product(range(q), repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            raise ValueError(f"additive associativity fails in GF({q})")
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise ValueError(f"multiplicative associativity fails in GF({q})")
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            raise ValueError(f"distributivity fails in GF({q})")


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    """Build ``GF(q)`` for a prime ``q <= 251`` or ``q`` in {4, 8, 9, 16, 25, 27}.

    The tables are checked against the field axioms exhaustively before the
    field is returned.

    Raises:
        UnsupportedGroupError: If ``q`` is not a supported order.
    """
    if q in _MODULI:
        p, modulus = _MODULI[q]
        add, mul = _poly_tables(p, modulus)
        k = len(modulus) - 1
    elif isprime(q) and q <= MAX_PRIME:
        p, k = q, 1
        add = [[(a + b) % q for b in range(q)] for a in range(q)]
        mul = [[(a * b) % q for b in range(q)] for a in range(q)]
    else:
        factors = factorint(q) if q > 1 else {}
        raise UnsupportedGroupError(
            f"No field tables for q = {q}", context=f"factorization {factors}"
        )
    field = FiniteField(
        q=q,
        p=p,
        k=k,
        add_table=tuple(map(tuple, add)),
        mul_table=tuple(map(tuple, mul)),
    )
    if q <= 32:
        _check_axioms(field)
    logger.debug("built GF(%d)", q)
    return field

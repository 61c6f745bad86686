"""Prime sets and pi-parts of integers."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from math import prod
from typing import TYPE_CHECKING

from sympy import factorint, isprime

from .exceptions import ParseError, PronormError

if TYPE_CHECKING:
    from .groups import PermGroup


@dataclass(frozen=True, order=True)
class PiSet:
    """A finite set of primes, kept sorted and duplicate-free.

    The complement pi' is never stored; "not in pi" stands for it.
    """

    primes: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        normalized = tuple(sorted(set(self.primes)))
        for p in normalized:
            if not isprime(p):
                raise PronormError(f"{p} is not prime", context="prime set")
        object.__setattr__(self, "primes", normalized)

    @classmethod
    def parse(cls, text: str) -> PiSet:
        """Parse a comma-separated prime list such as ``"2,3,5"`` (empty text is the empty set)."""
        stripped = text.strip().strip("{}")
        if not stripped:
            return cls()
        try:
            values = [int(part) for part in stripped.split(",") if part.strip()]
        except ValueError as e:
            raise ParseError(f"Could not parse prime set {text!r}") from e
        try:
            return cls(tuple(values))
        except PronormError as e:
            raise ParseError(e.message, context=repr(text)) from e

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.primes)) + "}"

    def issubset(self, other: PiSet) -> bool:
        return set(self.primes) <= set(other.primes)

    def restrict(self, n: int) -> PiSet:
        """Primes of this set that divide ``n``."""
        return PiSet(tuple(p for p in self.primes if n % p == 0))


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``(prime, exponent)`` pairs sorted by prime."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.pairs)

    @property
    def primes(self) -> PiSet:
        return PiSet(tuple(p for p, _ in self.pairs))

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise PronormError(f"Cannot factor {n}", context="factorize")
    return Factorization(tuple(sorted(factorint(n).items())))


def prime_set(n: int) -> PiSet:
    """``pi(n)``, the primes dividing ``n``; raises for ``n < 1``."""
    if n < 1:
        raise PronormError(f"prime_set needs a positive integer, got {n}")
    return PiSet(tuple(factorint(n)))


def pi_part(n: int, pi: PiSet | Iterable[int]) -> int:
    """``n_pi``, the largest divisor of ``n`` whose prime factors all lie in ``pi``."""
    if n < 1:
        raise PronormError(f"pi_part needs a positive integer, got {n}")
    primes = pi.primes if isinstance(pi, PiSet) else tuple(pi)
    result = 1
    for p in primes:
        while n % p == 0:
            n //= p
            result *= p
    return result


def complement(pi: PiSet, n: int) -> PiSet:
    """``pi'`` relative to ``n``: primes dividing ``n`` outside ``pi``."""
    return PiSet(tuple(p for p in prime_set(n) if p not in pi))


def is_pi_number(n: int, pi: PiSet) -> bool:
    return pi_part(n, pi) == n


def is_pi_group(G: PermGroup, pi: PiSet) -> bool:
    return is_pi_number(G.order(), pi)

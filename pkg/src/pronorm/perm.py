"""Permutations on the points 0..n-1.

Permutations act on the right: ``p * q`` applies ``p`` first and then ``q``,
so ``(p * q)(i) == q(p(i))`` and the conjugate h^g is
``h.conjugate(g) == ~g * h * g``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from functools import reduce
from math import lcm

from .exceptions import DegreeError, ParseError, PermutationError

MAX_DEGREE = 255

_SEP = r" *[, ] *"
_CYCLE_RE = re.compile(rf"\(( *\d+(?:{_SEP}\d+)* *)?\) *")


class Permutation:
    """An immutable permutation stored as a ``bytes`` image table."""

    __slots__ = ("_images", "_table", "_hash")

    def __init__(self, images: Iterable[int] | bytes):
        data = bytes(images)
        degree = len(data)
        if degree == 0:
            raise DegreeError("Permutation degree must be positive", actual=0)
        if degree > MAX_DEGREE:
            raise DegreeError(
                f"Degree {degree} exceeds the supported maximum {MAX_DEGREE}",
                expected=MAX_DEGREE,
                actual=degree,
            )
        if sorted(data) != list(range(degree)):
            raise PermutationError(f"Images {list(data)} are not a bijection on 0..{degree - 1}")
        self._images = data
        self._table: bytes | None = None
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, data: bytes) -> Permutation:
        perm = object.__new__(cls)
        perm._images = data
        perm._table = None
        perm._hash = None
        return perm

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        """Return the identity on ``degree`` points."""
        if not 0 < degree <= MAX_DEGREE:
            raise DegreeError(f"Unsupported degree {degree}", actual=degree)
        return cls._trusted(bytes(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build a permutation from disjoint or overlapping cycles, composed left to right."""
        result = cls.identity(degree)
        for cycle in cycles:
            if not cycle:
                continue
            if len(set(cycle)) != len(cycle):
                raise PermutationError(f"Cycle {tuple(cycle)} repeats a point")
            if max(cycle) >= degree or min(cycle) < 0:
                raise DegreeError(
                    f"Cycle {tuple(cycle)} does not fit on {degree} points", expected=degree
                )
            images = list(range(degree))
            for a, b in zip(cycle, [*cycle[1:], cycle[0]]):
                images[a] = b
            result = result * cls._trusted(bytes(images))
        return result

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Permutation:
        """Parse disjoint-cycle text such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity.

        Args:
            text: Cycle notation, points separated by spaces or commas.
            degree: Number of points. Defaults to one more than the largest point.

        Raises:
            ParseError: If the text is not a product of cycles.
        """
        return cls.from_cycles(*_parse_cycles(text, degree))

    # -- access -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self._images)

    @property
    def raw(self) -> bytes:
        """The image table as bytes (point ``i`` maps to ``raw[i]``)."""
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point]

    def is_identity(self) -> bool:
        return self._images == bytes(range(len(self._images)))

    def support(self) -> list[int]:
        """Points moved by the permutation."""
        return [i for i, x in enumerate(self._images) if i != x]

    def first_moved(self) -> int | None:
        for i, x in enumerate(self._images):
            if i != x:
                return i
        return None

    # -- algebra ----------------------------------------------------------

    def _lookup(self) -> bytes:
        if self._table is None:
            self._table = self._images + bytes(range(len(self._images), 256))
        return self._table

    def _check_degree(self, other: Permutation) -> None:
        if len(other._images) != len(self._images):
            raise DegreeError(
                f"Degree mismatch: {self.degree} != {other.degree}",
                expected=self.degree,
                actual=other.degree,
            )

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        self._check_degree(other)
        return Permutation._trusted(self._images.translate(other._lookup()))

    def __invert__(self) -> Permutation:
        inverse = bytearray(len(self._images))
        for i, x in enumerate(self._images):
            inverse[x] = i
        return Permutation._trusted(bytes(inverse))

    def __pow__(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else ~self
        exponent = abs(exponent)
        result = Permutation.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """Return ``g^-1 * self * g``."""
        return ~g * self * g

    def commutator(self, other: Permutation) -> Permutation:
        """Return ``self^-1 * other^-1 * self * other``."""
        return ~self * ~other * self * other

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start, image in enumerate(self._images):
            if start in seen or image == start:
                continue
            cycle = [start]
            seen.add(start)
            point = image
            while point != start:
                seen.add(point)
                cycle.append(point)
                point = self._images[point]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted lengths of the nontrivial cycles."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Permutation) -> bool:
        return (len(self._images), self._images) < (len(other._images), other._images)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images)
        return self._hash

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, degree={self.degree})"


def _parse_cycles(text: str, degree: int | None) -> tuple[list[list[int]], int]:
    stripped = re.sub(r"\s", " ", text).strip()
    if not stripped:
        raise ParseError("Empty permutation text", context=repr(text))
    cycles: list[list[int]] = []
    position = 0
    while position < len(stripped):
        match = _CYCLE_RE.match(stripped, position)
        if match is None:
            raise ParseError(f"Could not parse permutation {text!r}", context=f"offset {position}")
        body = (match.group(1) or "").strip()
        if body:
            cycles.append([int(x) for x in re.split(_SEP, body)])
        position = match.end()
    largest = max((max(c) for c in cycles), default=-1)
    if degree is None:
        degree = max(largest + 1, 1)
    elif largest >= degree:
        raise DegreeError(f"Point {largest} does not fit on {degree} points", expected=degree)
    return cycles, degree


def parse_permutations(text: str, degree: int | None = None) -> list[Permutation]:
    """Parse a comma-separated list of cycle products sharing one degree.

    ``"(0 1)(2 3), (0 2)(1 3)"`` yields two permutations on 4 points.
    """
    chunks = [chunk.strip() for chunk in re.split(r"(?<=\))\s*,\s*(?=\()", text.strip())]
    chunks = [chunk for chunk in chunks if chunk]
    if not chunks:
        raise ParseError("No permutations given", context=repr(text))
    parsed = [_parse_cycles(chunk, degree) for chunk in chunks]
    width = degree if degree is not None else max(d for _, d in parsed)
    return [Permutation.from_cycles(cycles, width) for cycles, _ in parsed]

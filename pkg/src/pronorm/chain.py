"""Stabilizer chains (base and strong generating sets).

The chain is built by the deterministic Schreier-Sims algorithm, checking each
Schreier generator exactly once, after an optional randomized prefill that
sifts product-replacement samples into the chain. The prefill only adds strong
generators, so order and membership are exact either way.
"""

from __future__ import annotations

import logging
import random
import zlib
from collections.abc import Iterable, Iterator, Sequence
from math import prod

from ._config import EngineConfig, current_config
from .exceptions import DegreeError, OrderBoundExceeded
from .perm import Permutation

logger = logging.getLogger(__name__)


class ProductReplacement:
    """Approximately uniform random elements from a generating set.

    Reservoir-and-accumulator variant of the product replacement algorithm.
    """

    def __init__(self, generators: Sequence[Permutation], rng: random.Random, extra_slots: int = 4):
        degree = generators[0].degree
        identity = Permutation.identity(degree)
        self._rng = rng
        self._reservoir = [identity] * extra_slots + list(generators)
        self._accumulator = identity
        for _ in range(max(30, 2 * len(self._reservoir))):
            self.sample()

    def sample(self) -> Permutation:
        rng = self._rng
        i = rng.randrange(len(self._reservoir))
        j = rng.randrange(len(self._reservoir))
        if i == j:
            j = (j + 1) % len(self._reservoir)
        step = self._reservoir[i] if rng.randrange(2) else ~self._reservoir[i]
        self._reservoir[j] = self._reservoir[j] * step
        self._accumulator = self._accumulator * self._reservoir[j]
        return self._accumulator


def seeded_rng(seed: int, generators: Iterable[Permutation]) -> random.Random:
    """A generator-dependent RNG so that equal inputs give equal runs."""
    digest = 0
    for g in generators:
        digest = zlib.crc32(g.raw, digest)
    return random.Random((seed << 32) ^ digest)


class _Level:
    __slots__ = ("point", "generators", "transversal", "inverses", "checked")

    def __init__(self, point: int, degree: int):
        identity = Permutation.identity(degree)
        self.point = point
        self.generators: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {point: identity}
        self.inverses: dict[int, Permutation] = {point: identity}
        self.checked: set[tuple[int, int]] = set()

    def add_generator(self, g: Permutation) -> None:
        self.generators.append(g)
        self._close_orbit()

    def _close_orbit(self) -> None:
        queue = list(self.transversal)
        while queue:
            x = queue.pop()
            u = self.transversal[x]
            for s in self.generators:
                y = s(x)
                if y not in self.transversal:
                    v = u * s
                    self.transversal[y] = v
                    self.inverses[y] = ~v
                    queue.append(y)

    def copy(self) -> _Level:
        twin = object.__new__(_Level)
        twin.point = self.point
        twin.generators = list(self.generators)
        twin.transversal = dict(self.transversal)
        twin.inverses = dict(self.inverses)
        twin.checked = set(self.checked)
        return twin


class StabilizerChain:
    """Base, basic orbits with transversals, and strong generators of a permutation group.

    Args:
        generators: Generators of the group, all of the same degree.
        degree: Number of points.
        base_prefix: Points forced to the front of the base, in order.
        base_order: Preference order for further base points (defaults to 0..n-1).
        order_bound: Abort with ``OrderBoundExceeded`` once the group is known to
            be larger than this.
        config: Engine configuration (seed and prefill size).
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: int,
        base_prefix: Sequence[int] = (),
        base_order: Sequence[int] | None = None,
        order_bound: int | None = None,
        config: EngineConfig | None = None,
    ):
        for g in generators:
            if g.degree != degree:
                raise DegreeError(
                    f"Generator {g} has degree {g.degree}, expected {degree}",
                    expected=degree,
                    actual=g.degree,
                )
        self.degree = degree
        self._order_bound = order_bound
        self._preference = list(base_order) if base_order is not None else list(range(degree))
        self._levels: list[_Level] = [_Level(b, degree) for b in base_prefix]
        gens = [g for g in generators if not g.is_identity()]

        for g in gens:
            if all(g(level.point) == level.point for level in self._levels):
                self._append_level(self._moved_point(g))
        for g in gens:
            self._add_from(g, 0, self._fixing_depth(g))

        cfg = current_config(config)
        if gens and cfg.prefill_rounds:
            sampler = ProductReplacement(gens, seeded_rng(cfg.seed, gens))
            for _ in range(cfg.prefill_rounds):
                residue, depth = self.sift(sampler.sample())
                if depth < len(self._levels) or not residue.is_identity():
                    if depth == len(self._levels):
                        self._append_level(self._moved_point(residue))
                    self._add_from(residue, 0, depth)
        self._complete(len(self._levels) - 1)
        logger.debug("chain base=%s orbits=%s", self.base, self.orbit_sizes)

    # -- construction -------------------------------------------------------

    def _moved_point(self, g: Permutation) -> int:
        for point in self._preference:
            if g(point) != point:
                return point
        moved = g.first_moved()
        assert moved is not None
        return moved

    def _append_level(self, point: int) -> None:
        self._levels.append(_Level(point, self.degree))

    def _fixing_depth(self, g: Permutation) -> int:
        """Index of the last level whose earlier base points ``g`` fixes."""
        depth = 0
        for level in self._levels[:-1]:
            if g(level.point) != level.point:
                break
            depth += 1
        return depth

    def _add_from(self, g: Permutation, start: int, stop: int) -> None:
        for level in self._levels[start : stop + 1]:
            level.add_generator(g)
        self._check_bound()

    def _check_bound(self) -> None:
        if self._order_bound is not None and self.order > self._order_bound:
            raise OrderBoundExceeded(
                f"Group order exceeds {self._order_bound}", bound=self._order_bound
            )

    def _complete(self, start: int) -> None:
        i = start
        while i >= 0:
            level = self._levels[i]
            dropped_to = None
            for x in list(level.transversal):
                u = level.transversal[x]
                for index, s in enumerate(level.generators):
                    if (x, index) in level.checked:
                        continue
                    y = s(x)
                    residue, depth = self.sift(u * s * level.inverses[y], i + 1)
                    if depth < len(self._levels) or not residue.is_identity():
                        if depth == len(self._levels):
                            self._append_level(self._moved_point(residue))
                        self._add_from(residue, i + 1, depth)
                        dropped_to = depth
                        break
                    level.checked.add((x, index))
                if dropped_to is not None:
                    break
            if dropped_to is not None:
                i = dropped_to
            else:
                i -= 1

    def extend(self, g: Permutation) -> bool:
        """Add ``g`` to the group in place. Returns False if ``g`` was already a member."""
        residue, depth = self.sift(g)
        if depth == len(self._levels) and residue.is_identity():
            return False
        if depth == len(self._levels):
            self._append_level(self._moved_point(residue))
        self._add_from(residue, 0, depth)
        self._complete(depth)
        return True

    def copy(self, order_bound: int | None = None) -> StabilizerChain:
        twin = object.__new__(StabilizerChain)
        twin.degree = self.degree
        twin._order_bound = order_bound
        twin._preference = list(self._preference)
        twin._levels = [level.copy() for level in self._levels]
        return twin

    # -- queries ------------------------------------------------------------

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip ``g`` through the levels from ``start``.

        Returns the residue and the index of the level where it stopped
        (``len(base)`` when it passed every level).
        """
        for index in range(start, len(self._levels)):
            level = self._levels[index]
            x = g(level.point)
            inverse = level.inverses.get(x)
            if inverse is None:
                return g, index
            g = g * inverse
        return g, len(self._levels)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeError(
                f"Degree mismatch: {g.degree} != {self.degree}",
                expected=self.degree,
                actual=g.degree,
            )
        residue, depth = self.sift(g)
        return depth == len(self._levels) and residue.is_identity()

    @property
    def base(self) -> list[int]:
        return [level.point for level in self._levels]

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(level.transversal) for level in self._levels]

    @property
    def order(self) -> int:
        return prod(len(level.transversal) for level in self._levels)

    @property
    def strong_generators(self) -> list[Permutation]:
        seen: dict[bytes, Permutation] = {}
        for level in self._levels:
            for g in level.generators:
                seen.setdefault(g.raw, g)
        return list(seen.values())

    def orbit(self, index: int) -> list[int]:
        return list(self._levels[index].transversal)

    def transversal(self, index: int) -> dict[int, Permutation]:
        """Point to transversal element mapping of a level (do not mutate)."""
        return self._levels[index].transversal

    def stabilizer_generators(self, index: int) -> list[Permutation]:
        """Generators of the pointwise stabilizer of the first ``index`` base points."""
        if index >= len(self._levels):
            return []
        return list(self._levels[index].generators)

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as products of transversal elements."""
        current = [Permutation.identity(self.degree)]
        for level in reversed(self._levels):
            reps = list(level.transversal.values())
            current = [e * u for e in current for u in reps]
        yield from current

    def random_element(self, rng: random.Random) -> Permutation:
        """A uniformly distributed element."""
        g = Permutation.identity(self.degree)
        for level in reversed(self._levels):
            reps = level.transversal
            g = g * reps[rng.choice(list(reps))]
        return g

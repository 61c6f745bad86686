"""Permutation groups and the structural operations built on stabilizer chains.

Subgroup orbits under conjugation are computed directly on element sets, so
every normalizer, centralizer and conjugacy test here is exact. At the orders
this engine targets (up to about 10^5) an orbit-stabilizer pass costs at most
``|G|`` conjugations per generator.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from collections.abc import Callable, Iterable, Iterator, Sequence
from functools import reduce
from math import lcm

from ._config import EngineConfig, current_config
from .arith import prime_set
from .chain import StabilizerChain, seeded_rng
from .exceptions import (
    ContainmentError,
    DegreeError,
    HomomorphismError,
    NotNormalError,
)
from .perm import MAX_DEGREE, Permutation

logger = logging.getLogger(__name__)

ElementKey = frozenset[bytes]


class PermGroup:
    """A permutation group given by generators, with a lazily built stabilizer chain.

    Treat instances as immutable: every operation returns a new group. Cached
    data (chain, element set, class representatives) is filled in on first use.
    """

    def __init__(
        self,
        generators: Iterable[Permutation] = (),
        degree: int | None = None,
        *,
        name: str | None = None,
        config: EngineConfig | None = None,
    ):
        gens = [g for g in generators if not g.is_identity()]
        if degree is None:
            if not gens:
                raise DegreeError("A degree is required for an empty generating set")
            degree = gens[0].degree
        if not 0 < degree <= MAX_DEGREE:
            raise DegreeError(f"Unsupported degree {degree}", actual=degree)
        for g in gens:
            if g.degree != degree:
                raise DegreeError(
                    f"Generator {g} has degree {g.degree}, expected {degree}",
                    expected=degree,
                    actual=g.degree,
                )
        self._generators = tuple(dict.fromkeys(gens))
        self._degree = degree
        self.name = name
        self._config = config
        self._chain: StabilizerChain | None = None
        self._key: ElementKey | None = None
        self._class_reps: list[Permutation] | None = None

    @classmethod
    def _from_chain(
        cls, chain: StabilizerChain, generators: Sequence[Permutation], name: str | None = None
    ) -> PermGroup:
        group = cls(generators, chain.degree, name=name)
        group._chain = chain
        return group

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls((), degree)

    # -- basic data ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._generators

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self._generators, self._degree, config=self._config)
        return self._chain

    def order(self) -> int:
        if not self._generators:
            return 1
        return self.chain.order

    def is_trivial(self) -> bool:
        return not self._generators

    def contains(self, p: Permutation) -> bool:
        if p.degree != self._degree:
            raise DegreeError(
                f"Degree mismatch: {p.degree} != {self._degree}",
                expected=self._degree,
                actual=p.degree,
            )
        if not self._generators:
            return p.is_identity()
        return self.chain.contains(p)

    def __contains__(self, p: object) -> bool:
        return isinstance(p, Permutation) and self.contains(p)

    def elements(self) -> Iterator[Permutation]:
        if not self._generators:
            return iter([self.identity])
        return self.chain.elements()

    def element_key(self) -> ElementKey:
        """The element set as a hashable key (equal keys mean equal subgroups)."""
        if self._key is None:
            self._key = frozenset(g.raw for g in self.elements())
        return self._key

    def random_element(self, rng: random.Random) -> Permutation:
        if not self._generators:
            return self.identity
        return self.chain.random_element(rng)

    def rng(self, salt: int = 0) -> random.Random:
        """A deterministic RNG derived from the active seed and this group's generators."""
        seed = current_config(self._config).seed + salt
        return seeded_rng(seed, self._generators)

    def exponent(self) -> int:
        return reduce(lcm, (g.order() for g in self.elements()), 1)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self._degree == other._degree and all(other.contains(g) for g in self._generators)

    def same_as(self, other: PermGroup) -> bool:
        """True iff both groups have the same elements."""
        return (
            self._degree == other._degree
            and self.order() == other.order()
            and all(self.contains(g) for g in other._generators)
        )

    def conjugate(self, g: Permutation) -> PermGroup:
        """The conjugate subgroup ``H^g``."""
        return PermGroup((h.conjugate(g) for h in self._generators), self._degree)

    def join(
        self, *others: PermGroup | Permutation, order_bound: int | None = None
    ) -> PermGroup:
        """The subgroup generated by this group and ``others``.

        With ``order_bound`` set, raises ``OrderBoundExceeded`` as soon as the join
        is known to be larger.
        """
        extra: list[Permutation] = []
        for item in others:
            if isinstance(item, PermGroup):
                extra.extend(item._generators)
            else:
                extra.append(item)
        for g in extra:
            if g.degree != self._degree:
                raise DegreeError(
                    f"Degree mismatch: {g.degree} != {self._degree}",
                    expected=self._degree,
                    actual=g.degree,
                )
        if self._generators:
            chain = self.chain.copy(order_bound=order_bound)
        else:
            chain = StabilizerChain((), self._degree, order_bound=order_bound, config=self._config)
        added = [g for g in extra if chain.extend(g)]
        if not added:
            return self
        return PermGroup._from_chain(chain, [*self._generators, *added])

    def __repr__(self) -> str:
        label = self.name or ", ".join(str(g) for g in self._generators[:4])
        if len(self._generators) > 4:
            label += ", ..."
        return f"PermGroup(<{label}>, degree={self._degree})"


def group_from_generators(
    gens: Sequence[Permutation], degree: int, name: str | None = None
) -> PermGroup:
    """Build a group from generators; raises ``DegreeError`` on a degree mismatch."""
    for g in gens:
        if g.degree != degree:
            raise DegreeError(
                f"Generator {g} has degree {g.degree}, expected {degree}",
                expected=degree,
                actual=g.degree,
            )
    return PermGroup(gens, degree, name=name)


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def _require_subgroup(G: PermGroup, H: PermGroup, what: str = "subgroup") -> None:
    if H.degree != G.degree:
        raise DegreeError(
            f"{what} has degree {H.degree}, ambient group has degree {G.degree}",
            expected=G.degree,
            actual=H.degree,
        )
    if not H.is_subgroup_of(G):
        raise ContainmentError(f"{what} {H!r} is not contained in {G!r}")


def subgroup_closure(G: PermGroup, seeds: Sequence[PermGroup | Permutation]) -> PermGroup:
    """The smallest subgroup containing every seed (``<A, B, ...>``)."""
    groups = [s for s in seeds if isinstance(s, PermGroup)]
    for s in seeds:
        if s.degree != G.degree:
            raise DegreeError(
                f"Seed has degree {s.degree}, expected {G.degree}",
                expected=G.degree,
                actual=s.degree,
            )
    if not groups:
        return PermGroup.trivial(G.degree).join(*seeds)
    largest = max(groups, key=lambda g: g.order())
    rest = [s for s in seeds if s is not largest]
    return largest.join(*rest)


class JoinCache:
    """Memoizes joins keyed by their sorted generator sets."""

    def __init__(self) -> None:
        self._store: dict[tuple[bytes, ...], PermGroup] = {}
        self.hits = 0

    def join(self, *parts: PermGroup) -> PermGroup:
        key = tuple(sorted({g.raw for part in parts for g in part.generators}))
        cached = self._store.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        largest = max(parts, key=lambda g: g.order())
        joined = largest.join(*(p for p in parts if p is not largest))
        self._store[key] = joined
        return joined


def conjugate_subgroup(H: PermGroup, g: Permutation) -> PermGroup:
    return H.conjugate(g)


# -- orbits of subgroups and tuples under conjugation ---------------------------


def _conjugate_key(key: ElementKey, s: Permutation, s_inv: Permutation) -> ElementKey:
    tail = bytes(range(s.degree, 256))
    s_table = s.raw + tail
    # s^-1 * h * s for every h
    return frozenset(s_inv.raw.translate(h + tail).translate(s_table) for h in key)


def conjugates(G: PermGroup, H: PermGroup) -> list[tuple[Permutation, PermGroup]]:
    """The ``G``-conjugates of ``H``, each with a conjugating element.

    The conjugating elements form a right transversal of ``N_G(H)`` in ``G``,
    in breadth-first order from the identity.
    """
    orbit, _ = conjugation_orbit(G, H)
    return [(g, H.conjugate(g)) for g, _key in orbit]


def conjugation_orbit(
    G: PermGroup, H: PermGroup, stop_at: ElementKey | None = None
) -> tuple[list[tuple[Permutation, ElementKey]], dict[ElementKey, int]]:
    """Breadth-first orbit of ``H``'s element set under conjugation by ``G``.

    Returns ``(conjugator, key)`` pairs and a key-to-position index; the search
    stops early once ``stop_at`` is reached.
    """
    start = H.element_key()
    orbit: list[tuple[Permutation, ElementKey]] = [(G.identity, start)]
    index = {start: 0}
    if stop_at is not None and stop_at == start:
        return orbit, index
    pairs = [(s, ~s) for s in G.generators]
    i = 0
    while i < len(orbit):
        g, key = orbit[i]
        for s, s_inv in pairs:
            image = _conjugate_key(key, s, s_inv)
            if image not in index:
                index[image] = len(orbit)
                orbit.append((g * s, image))
                if stop_at is not None and image == stop_at:
                    return orbit, index
        i += 1
    return orbit, index


def conjugating_element(G: PermGroup, H: PermGroup, K: PermGroup) -> Permutation | None:
    """Some ``g`` in ``G`` with ``H^g == K``, or None when none exists."""
    if H.order() != K.order():
        return None
    if _orbit_signature(H) != _orbit_signature(K):
        return None
    target = K.element_key()
    orbit, index = conjugation_orbit(G, H, stop_at=target)
    if target not in index:
        return None
    return orbit[index[target]][0]


def _orbit_signature(H: PermGroup) -> tuple[int, ...]:
    return tuple(sorted(len(o) for o in orbits(H)))


def _stabilizer_from_orbit(
    G: PermGroup,
    orbit: Sequence[Permutation],
    index: dict[bytes, int] | dict[ElementKey, int],
    act: Callable[[int, Permutation], bytes | ElementKey],
    seed: PermGroup,
) -> PermGroup:
    """Stabilizer from Schreier generators, stopping at the order ``|G| / |orbit|``."""
    target = G.order() // len(orbit)
    stab = seed
    if stab.order() == target:
        return stab
    for i, g in enumerate(orbit):
        for s in G.generators:
            j = index[act(i, s)]  # type: ignore[index]
            schreier = g * s * ~orbit[j]
            if not stab.contains(schreier):
                stab = stab.join(schreier)
                if stab.order() == target:
                    return stab
    return stab


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """``N_G(H)``; raises ``ContainmentError`` unless ``H <= G``."""
    _require_subgroup(G, H)
    if H.is_trivial():
        return G
    orbit, index = conjugation_orbit(G, H)
    keys = [key for _, key in orbit]
    reps = [g for g, _ in orbit]
    pairs = {s.raw: ~s for s in G.generators}

    def act(i: int, s: Permutation) -> ElementKey:
        return _conjugate_key(keys[i], s, pairs[s.raw])

    result = _stabilizer_from_orbit(G, reps, index, act, H)
    logger.debug("normalizer of order %d, orbit %d", result.order(), len(orbit))
    return result


def centralizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """``C_G(H)``: orbit-stabilizer on the tuple of ``H``'s generators."""
    _require_subgroup(G, H)
    gens = H.generators
    if not gens:
        return G
    start = b"".join(h.raw for h in gens)
    orbit: list[Permutation] = [G.identity]
    tuples: list[tuple[Permutation, ...]] = [tuple(gens)]
    index: dict[bytes, int] = {start: 0}
    i = 0
    while i < len(orbit):
        for s in G.generators:
            image = tuple(h.conjugate(s) for h in tuples[i])
            key = b"".join(h.raw for h in image)
            if key not in index:
                index[key] = len(orbit)
                orbit.append(orbit[i] * s)
                tuples.append(image)
        i += 1

    def act(i: int, s: Permutation) -> bytes:
        return b"".join(h.conjugate(s).raw for h in tuples[i])

    return _stabilizer_from_orbit(G, orbit, index, act, PermGroup.trivial(G.degree))


def center(G: PermGroup) -> PermGroup:
    return centralizer(G, G)


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    _require_subgroup(G, H)
    return all(H.contains(h.conjugate(s)) for h in H.generators for s in G.generators)


def normal_closure(G: PermGroup, seeds: Sequence[PermGroup | Permutation]) -> PermGroup:
    """The smallest normal subgroup of ``G`` containing the seeds."""
    gens: list[Permutation] = []
    for s in seeds:
        gens.extend(s.generators if isinstance(s, PermGroup) else [s])
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return PermGroup.trivial(G.degree)
    chain = StabilizerChain((), G.degree)
    kept: list[Permutation] = []
    for g in gens:
        if chain.extend(g):
            kept.append(g)
    i = 0
    while i < len(kept):
        for s in G.generators:
            c = kept[i].conjugate(s)
            if chain.extend(c):
                kept.append(c)
        i += 1
    return PermGroup._from_chain(chain, kept)


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    commutators = [a.commutator(b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
    return normal_closure(G, commutators)


def derived_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order() == series[-1].order():
            return series
        series.append(nxt)


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def lower_central_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    while True:
        current = series[-1]
        commutators = [x.commutator(s) for x in current.generators for s in G.generators]
        nxt = normal_closure(G, commutators)
        if nxt.order() == current.order():
            return series
        series.append(nxt)


def is_nilpotent(G: PermGroup) -> bool:
    return lower_central_series(G)[-1].is_trivial()


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """Every normal subgroup of ``G``, smallest first.

    Grows normal closures one class representative at a time, which reaches
    every normal subgroup since each is the normal closure of its classes.
    """
    trivial = PermGroup.trivial(G.degree)
    found: dict[ElementKey, PermGroup] = {trivial.element_key(): trivial}
    reps = [x for x in conjugacy_class_reps(G) if not x.is_identity()]
    frontier = [trivial]
    while frontier:
        grown: list[PermGroup] = []
        for N in frontier:
            for x in reps:
                if N.contains(x):
                    continue
                M = normal_closure(G, [N, x])
                key = M.element_key()
                if key not in found:
                    found[key] = M
                    grown.append(M)
        frontier = grown
    return sorted(found.values(), key=lambda M: M.order())


def is_subnormal(G: PermGroup, H: PermGroup) -> bool:
    """True iff the series of repeated normal closures of ``H`` descends to ``H``."""
    _require_subgroup(G, H)
    K = G
    while True:
        closure = normal_closure(K, [H]) if not H.is_trivial() else H
        if closure.order() == K.order():
            return K.order() == H.order()
        K = closure


def is_simple(G: PermGroup) -> bool:
    """True iff ``G`` is nontrivial and each nontrivial class generates all of ``G`` normally."""
    if G.is_trivial():
        return False
    n = G.order()
    return all(
        normal_closure(G, [x]).order() == n
        for x in conjugacy_class_reps(G)
        if not x.is_identity()
    )


def intersection(H: PermGroup, K: PermGroup) -> PermGroup:
    """``H ∩ K``, by filtering the smaller group's elements."""
    if H.degree != K.degree:
        raise DegreeError("Degree mismatch", expected=H.degree, actual=K.degree)
    small, big = (H, K) if H.order() <= K.order() else (K, H)
    if big.order() % small.order() == 0 and small.is_subgroup_of(big):
        return small
    chain = StabilizerChain((), H.degree)
    kept = [g for g in small.elements() if big.contains(g) and chain.extend(g)]
    return PermGroup._from_chain(chain, kept)


# -- conjugacy classes and characteristic subgroups ----------------------------


def conjugacy_class_reps(G: PermGroup) -> list[Permutation]:
    """One element per conjugacy class, identity first, then by element order."""
    if G._class_reps is None:
        seen: set[bytes] = set()
        reps: list[Permutation] = []
        pairs = [(s, ~s) for s in G.generators]
        for g in G.elements():
            if g.raw in seen:
                continue
            reps.append(g)
            seen.add(g.raw)
            queue = [g]
            while queue:
                x = queue.pop()
                for s, s_inv in pairs:
                    y = s_inv * x * s
                    if y.raw not in seen:
                        seen.add(y.raw)
                        queue.append(y)
        reps.sort(key=lambda x: (x.order(), x.raw))
        G._class_reps = reps
    return list(G._class_reps)


def largest_normal_with(
    G: PermGroup,
    accept: Callable[[PermGroup], bool],
    candidates: Callable[[Permutation], bool] = lambda _x: True,
    start: PermGroup | None = None,
) -> PermGroup:
    """The largest normal subgroup ``M >= start`` for which ``accept(M)`` holds.

    ``accept`` must be closed under products of normal subgroups, and every
    element of the answer must pass ``candidates``. One pass over the class
    representatives suffices: a representative inside the answer always yields
    an accepted candidate.
    """
    result = start if start is not None else PermGroup.trivial(G.degree)
    for x in conjugacy_class_reps(G):
        if x.is_identity() or not candidates(x) or result.contains(x):
            continue
        candidate = normal_closure(G, [result, x])
        if accept(candidate):
            result = candidate
    return result


def _is_prime_power(n: int) -> bool:
    return len(prime_set(n)) == 1


def solvable_radical(G: PermGroup) -> PermGroup:
    """``O_inf(G)``, the largest normal solvable subgroup."""
    return largest_normal_with(G, is_solvable, lambda x: _is_prime_power(x.order()))


# -- cosets --------------------------------------------------------------------


def canonical_coset_rep(H: PermGroup, x: Permutation) -> Permutation:
    """The element of the right coset ``Hx`` with lexicographically least base images."""
    if H.is_trivial():
        return x
    chain = H.chain
    for index in range(len(chain.base)):
        transversal = chain.transversal(index)
        best = min(transversal, key=lambda y: x(y))
        x = transversal[best] * x
    return x


def right_transversal(G: PermGroup, H: PermGroup) -> list[Permutation]:
    """Canonical representatives of the right cosets ``Hg``, identity first."""
    first = canonical_coset_rep(H, G.identity)
    reps = [first]
    seen = {first.raw}
    i = 0
    while i < len(reps):
        for s in G.generators:
            r = canonical_coset_rep(H, reps[i] * s)
            if r.raw not in seen:
                seen.add(r.raw)
                reps.append(r)
        i += 1
    return reps


# -- orbits and transitivity ---------------------------------------------------


def orbits(G: PermGroup) -> list[list[int]]:
    seen: set[int] = set()
    out: list[list[int]] = []
    for point in range(G.degree):
        if point in seen:
            continue
        orbit = [point]
        seen.add(point)
        for x in orbit:
            for s in G.generators:
                y = s(x)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        out.append(orbit)
    return out


def transitivity_degree(G: PermGroup) -> int:
    """Largest ``k`` such that ``G`` is transitive on ordered ``k``-tuples of distinct points."""
    n = G.degree
    k = 0
    while k < n:
        start = tuple(range(k + 1))
        expected = 1
        for i in range(k + 1):
            expected *= n - i
        if expected > G.order():
            break
        seen = {start}
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for s in G.generators:
                image = tuple(s(p) for p in t)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        if len(seen) != expected:
            break
        k += 1
    return k


# -- products, quotients and homomorphisms ------------------------------------


def _shift(p: Permutation, offset: int, degree: int) -> Permutation:
    images = list(range(degree))
    for i, x in enumerate(p.raw):
        images[offset + i] = offset + x
    return Permutation(images)


def direct_product(*groups: PermGroup) -> PermGroup:
    """External direct product acting on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    if degree > MAX_DEGREE:
        raise DegreeError(f"Product degree {degree} exceeds {MAX_DEGREE}", actual=degree)
    gens: list[Permutation] = []
    offset = 0
    for G in groups:
        gens.extend(_shift(g, offset, degree) for g in G.generators)
        offset += G.degree
    name = " x ".join(G.name or "?" for G in groups) if all(G.name for G in groups) else None
    return PermGroup(gens, degree, name=name)


def embed_factor(G: PermGroup, groups: Sequence[PermGroup], index: int) -> PermGroup:
    """The ``index``-th factor of ``direct_product(*groups)`` as a subgroup of it."""
    offset = sum(g.degree for g in groups[:index])
    return PermGroup((_shift(g, offset, G.degree) for g in groups[index].generators), G.degree)


class Homomorphism:
    """A homomorphism given by generator images, checked to be well defined.

    Images and preimages are read off stabilizer chains of the graph
    ``{(g, phi(g))}`` acting on the disjoint union of the two point sets.
    """

    def __init__(self, source: PermGroup, target: PermGroup, images: Sequence[Permutation]):
        if len(images) != len(source.generators):
            raise HomomorphismError(
                f"Expected {len(source.generators)} generator images, got {len(images)}"
            )
        n, m = source.degree, target.degree
        if n + m > MAX_DEGREE:
            raise DegreeError(f"Graph degree {n + m} exceeds {MAX_DEGREE}", actual=n + m)
        self.source = source
        self.target = target
        self.images = list(images)
        self._n = n
        self._m = m
        self._graph_gens = [self._pair(g, h) for g, h in zip(source.generators, images)]
        graph = StabilizerChain(self._graph_gens, n + m, base_order=range(n + m))
        if graph.order != source.order():
            raise HomomorphismError(
                "Generator images do not define a homomorphism",
                context=f"graph order {graph.order}, source order {source.order()}",
            )
        self._forward = graph
        self._backward: StabilizerChain | None = None

    def _pair(self, g: Permutation, h: Permutation) -> Permutation:
        n = self._n
        return Permutation(bytes(g.raw) + bytes(n + y for y in h.raw))

    def _split(self, p: Permutation) -> tuple[Permutation, Permutation]:
        n = self._n
        raw = p.raw
        return Permutation(raw[:n]), Permutation(bytes(y - n for y in raw[n:]))

    def _backward_chain(self) -> StabilizerChain:
        if self._backward is None:
            n, m = self._n, self._m
            self._backward = StabilizerChain(
                self._graph_gens, n + m, base_prefix=range(n, n + m)
            )
        return self._backward

    def image(self, g: Permutation) -> Permutation:
        if not self.source.contains(g):
            raise ContainmentError(f"{g} is not in the source group")
        residue, _ = self._forward.sift(self._pair(g, Permutation.identity(self._m)))
        _, tail = self._split(residue)
        return ~tail

    def image_subgroup(self, H: PermGroup) -> PermGroup:
        _require_subgroup(self.source, H)
        return PermGroup((self.image(h) for h in H.generators), self._m)

    def kernel(self) -> PermGroup:
        chain = self._backward_chain()
        gens = [self._split(g)[0] for g in chain.stabilizer_generators(self._m)]
        return PermGroup(gens, self._n)

    def preimage(self, y: Permutation) -> Permutation:
        """Some element mapping to ``y``."""
        chain = self._backward_chain()
        residue, depth = chain.sift(self._pair(Permutation.identity(self._n), y))
        head, tail = self._split(residue)
        if depth < self._m or not tail.is_identity():
            raise ContainmentError(f"{y} is not in the image")
        return ~head

    def preimage_subgroup(self, K: PermGroup) -> PermGroup:
        """Full preimage: the kernel joined with preimages of ``K``'s generators."""
        kernel = self.kernel()
        return kernel.join(*(self.preimage(y) for y in K.generators))


def quotient_by_normal(G: PermGroup, A: PermGroup) -> tuple[PermGroup, Homomorphism]:
    """``G/A`` as the action of ``G`` on the right cosets of ``A``.

    Raises:
        NotNormalError: If ``A`` is not normal in ``G``.
        DegreeError: If the index exceeds the degree cap.
    """
    if not is_normal(G, A):
        raise NotNormalError(f"{A!r} is not normal in {G!r}")
    index = G.order() // A.order()
    if index > MAX_DEGREE or G.degree + index > MAX_DEGREE:
        raise DegreeError(f"Quotient of index {index} does not fit the degree cap", actual=index)
    reps = right_transversal(G, A)
    position = {r.raw: i for i, r in enumerate(reps)}
    images = []
    for s in G.generators:
        action = [position[canonical_coset_rep(A, r * s).raw] for r in reps]
        images.append(Permutation(action))
    Q = PermGroup(images, index)
    return Q, Homomorphism(G, Q, images)

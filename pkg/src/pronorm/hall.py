"""Sylow and Hall subgroups, the E/C/D properties, Sylow towers and pi-separability."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from ._config import EngineConfig, current_config
from .arith import PiSet, is_pi_number, pi_part, prime_set
from .exceptions import ExhaustiveBoundError, OrderBoundExceeded
from .groups import (
    ElementKey,
    PermGroup,
    centralizer,
    conjugacy_class_reps,
    conjugates,
    conjugation_orbit,
    largest_normal_with,
    normal_closure,
    normalizer,
)
from .perm import Permutation

logger = logging.getLogger(__name__)


class SearchMode(str, Enum):
    """How Hall subgroups are searched for."""

    EXHAUSTIVE = "exhaustive"
    SEEDED = "seeded"


@dataclass(frozen=True)
class SylowComplexion:
    """Primes ``(p1, ..., pn)`` of a Sylow series ``G = G0 > G1 > ... > Gn = 1``.

    The section ``G_{i-1}/G_i`` is a Sylow ``p_i``-subgroup, so ``p1`` is the top factor.
    """

    primes: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.primes)) + ")"


@dataclass
class HallClassification:
    """Conjugacy classes of pi-Hall subgroups of a group and its E/C/D flags.

    ``satisfies_D`` is None when it was not computed. ``d_pi_exact`` tells
    whether a computed D flag covers every pi-subgroup or only the two-generated ones.
    """

    pi: PiSet
    ambient: PermGroup
    class_reps: list[PermGroup]
    satisfies_E: bool
    satisfies_C: bool
    satisfies_D: bool | None
    search_mode: SearchMode
    complete: bool
    class_sizes: list[int] = field(default_factory=list)
    d_pi_exact: bool = False

    @property
    def hall_order(self) -> int:
        return pi_part(self.ambient.order(), self.pi)

    @property
    def orders(self) -> list[int]:
        return [H.order() for H in self.class_reps]


class ConjugacyIndex:
    """Subgroups of ``G`` collected up to conjugacy.

    Every conjugate's element set is recorded, so membership of a new subgroup's
    class is a single dictionary lookup.
    """

    def __init__(self, G: PermGroup):
        self.G = G
        self.reps: list[PermGroup] = []
        self.sizes: list[int] = []
        self.keys: list[list[ElementKey]] = []
        self._known: dict[ElementKey, int] = {}

    def class_of(self, K: PermGroup) -> int | None:
        return self._known.get(K.element_key())

    def add(self, K: PermGroup) -> bool:
        """Record ``K``'s class; returns False when the class was already known."""
        if K.element_key() in self._known:
            return False
        orbit, _ = conjugation_orbit(self.G, K)
        position = len(self.reps)
        for _, key in orbit:
            self._known[key] = position
        self.reps.append(K)
        self.sizes.append(len(orbit))
        self.keys.append([key for _, key in orbit])
        return True

    def __len__(self) -> int:
        return len(self.reps)


# -- Sylow subgroups -------------------------------------------------------------


def _p_part_power(g: Permutation, p: int) -> Permutation:
    m = g.order()
    return g ** (m // pi_part(m, (p,)))


def _find_p_element(
    N: PermGroup, P: PermGroup, p: int, tries: int, rng_salt: int
) -> Permutation | None:
    rng = N.rng(salt=rng_salt)
    for _ in range(tries):
        z = _p_part_power(N.random_element(rng), p)
        if not z.is_identity() and not P.contains(z):
            return z
    for x in N.elements():
        z = _p_part_power(x, p)
        if not z.is_identity() and not P.contains(z):
            return z
    return None


def sylow(G: PermGroup, p: int, config: EngineConfig | None = None) -> PermGroup:
    """A Sylow ``p``-subgroup of ``G`` (trivial when ``p`` does not divide ``|G|``).

    Starts from a ``p``-element and repeatedly adjoins ``p``-elements of the
    current normalizer until the full ``p``-part is reached.
    """
    cfg = current_config(config)
    target = pi_part(G.order(), (p,))
    P = PermGroup.trivial(G.degree)
    step = 0
    while P.order() < target:
        N = G if P.is_trivial() else normalizer(G, P)
        z = _find_p_element(N, P, p, cfg.sylow_random_tries, rng_salt=p * 1000 + step)
        if z is None:
            # p-subgroups below Sylow order always have a p-element in N(P) \ P
            raise AssertionError(f"no {p}-element found above order {P.order()}")
        P = P.join(z)
        step += 1
    logger.debug("sylow %d-subgroup of order %d after %d steps", p, P.order(), step)
    return P


def sylow_conjugates(G: PermGroup, S: PermGroup) -> list[PermGroup]:
    return [K for _, K in conjugates(G, S)]


# -- pi-subgroup enumeration -------------------------------------------------------


def _is_prime_power_in(n: int, pi: PiSet) -> bool:
    primes = prime_set(n).primes if n > 1 else ()
    return len(primes) == 1 and primes[0] in pi


def _conjugation_orbit_reps(N: PermGroup, elements: Sequence[Permutation]) -> list[Permutation]:
    """One element per orbit of ``N`` acting by conjugation on an ``N``-invariant list."""
    remaining = {z.raw for z in elements}
    pairs = [(s, ~s) for s in N.generators]
    reps: list[Permutation] = []
    for z in elements:
        if z.raw not in remaining:
            continue
        reps.append(z)
        remaining.discard(z.raw)
        queue = [z]
        while queue:
            x = queue.pop()
            for s, s_inv in pairs:
                y = s_inv * x * s
                if y.raw in remaining:
                    remaining.discard(y.raw)
                    queue.append(y)
    return reps


def pi_subgroup_classes(
    G: PermGroup, pi: PiSet, config: EngineConfig | None = None
) -> ConjugacyIndex:
    """Every conjugacy class of pi-subgroups of ``G``, trivial subgroup first.

    Each class representative ``K`` is joined with one element per
    ``N_G(K)``-class of prime-power pi-elements outside ``K``. Every pi-subgroup
    arises this way along a chain of subgroups generated by its prime-power
    elements, so the enumeration is complete, perfect subgroups included.

    Raises:
        ExhaustiveBoundError: If ``|G|`` exceeds the configured exhaustive bound.
    """
    cfg = current_config(config)
    n = G.order()
    if n > cfg.exhaustive_bound:
        raise ExhaustiveBoundError(
            f"Exhaustive search needs |G| <= {cfg.exhaustive_bound}, got {n}",
            bound=cfg.exhaustive_bound,
        )
    pi = pi.restrict(n)
    target = pi_part(n, pi)
    elements = [g for g in G.elements() if _is_prime_power_in(g.order(), pi)]
    index = ConjugacyIndex(G)
    index.add(PermGroup.trivial(G.degree))
    joins = 0
    i = 0
    while i < len(index):
        K = index.reps[i]
        outside = [z for z in elements if not K.contains(z)]
        for z in _conjugation_orbit_reps(normalizer(G, K), outside):
            joins += 1
            try:
                J = K.join(z, order_bound=target)
            except OrderBoundExceeded:
                continue
            if target % J.order() == 0:
                index.add(J)
        i += 1
    logger.debug("%d classes of %s-subgroups after %d joins", len(index), pi, joins)
    return index


def subgroup_classes(G: PermGroup, config: EngineConfig | None = None) -> list[PermGroup]:
    """Representatives of all conjugacy classes of subgroups (exhaustive bound applies)."""
    return list(pi_subgroup_classes(G, prime_set(G.order()), config).reps)


def _seeded_hall_classes(G: PermGroup, pi: PiSet, config: EngineConfig) -> ConjugacyIndex:
    """Hall pi-subgroups by sweeping joins with every conjugate of each Sylow subgroup.

    A Hall subgroup is generated by Sylow subgroups of ``G`` it contains; up to
    conjugacy it contains the first Sylow subgroup, and each later Sylow
    subgroup is one of the swept conjugates, so no class is missed.
    """
    n = G.order()
    target = pi_part(n, pi)
    primes = sorted(pi, key=lambda p: (-pi_part(n, (p,)), p))
    layer = ConjugacyIndex(G)
    layer.add(sylow(G, primes[0], config))
    for p in primes[1:]:
        swept = sylow_conjugates(G, sylow(G, p, config))
        nxt = ConjugacyIndex(G)
        for K in layer.reps:
            for Q in swept:
                if Q.is_subgroup_of(K):
                    nxt.add(K)
                    continue
                try:
                    J = K.join(Q, order_bound=target)
                except OrderBoundExceeded:
                    continue
                if target % J.order() == 0:
                    nxt.add(J)
        logger.debug("sweep over %d-Sylow conjugates: %d classes", p, len(nxt))
        layer = nxt
    hall = ConjugacyIndex(G)
    for K in layer.reps:
        if K.order() == target:
            hall.add(K)
    return hall


def _sort_key(H: PermGroup) -> tuple[int, tuple[bytes, ...]]:
    return H.order(), tuple(sorted(g.raw for g in H.generators))


def _resolve_mode(G: PermGroup, mode: SearchMode | str | None, cfg: EngineConfig) -> SearchMode:
    if mode is None:
        return SearchMode.EXHAUSTIVE if G.order() <= cfg.exhaustive_bound else SearchMode.SEEDED
    return SearchMode(mode)


def _d_pi_from_classes(hall: ConjugacyIndex, every: ConjugacyIndex) -> bool:
    hall_keys = [key for keys in hall.keys for key in keys]
    return all(any(K.element_key() <= key for key in hall_keys) for K in every.reps)


def hall_subgroups(
    G: PermGroup,
    pi: PiSet,
    mode: SearchMode | str | None = None,
    config: EngineConfig | None = None,
) -> HallClassification:
    """Conjugacy classes of pi-Hall subgroups of ``G``.

    Args:
        G: The ambient group.
        pi: The prime set; primes not dividing ``|G|`` are ignored.
        mode: ``exhaustive`` enumerates every pi-subgroup class (and decides
            D_pi exactly); ``seeded`` sweeps Sylow joins. Defaults to exhaustive
            when ``|G|`` is within the exhaustive bound.
        config: Engine configuration.

    Raises:
        ExhaustiveBoundError: If exhaustive mode is requested for a large group.
    """
    cfg = current_config(config)
    search = _resolve_mode(G, mode, cfg)
    n = G.order()
    effective = pi.restrict(n)
    if search is SearchMode.EXHAUSTIVE and n > cfg.exhaustive_bound:
        raise ExhaustiveBoundError(
            f"Exhaustive search needs |G| <= {cfg.exhaustive_bound}, got {n}",
            bound=cfg.exhaustive_bound,
        )

    satisfies_D: bool | None = None
    d_exact = False
    if len(effective) == len(prime_set(n)) or len(effective) <= 1:
        if len(effective) == len(prime_set(n)):
            reps = [G]
        elif not effective:
            reps = [PermGroup.trivial(G.degree)]
        else:
            reps = [sylow(G, effective.primes[0], cfg)]
        sizes = [len(conjugation_orbit(G, reps[0])[0])]
        # improper subgroups and Sylow subgroups: D_pi holds by Sylow's theorem
        satisfies_D, d_exact = True, True
    elif search is SearchMode.EXHAUSTIVE:
        every = pi_subgroup_classes(G, effective, cfg)
        target = pi_part(n, effective)
        hall = ConjugacyIndex(G)
        for K in every.reps:
            if K.order() == target:
                hall.add(K)
        reps, sizes = hall.reps, hall.sizes
        satisfies_D = len(hall) == 1 and _d_pi_from_classes(hall, every)
        d_exact = True
    else:
        hall = _seeded_hall_classes(G, effective, cfg)
        reps, sizes = hall.reps, hall.sizes

    order_ = sorted(range(len(reps)), key=lambda i: _sort_key(reps[i]))
    reps = [reps[i] for i in order_]
    sizes = [sizes[i] for i in order_]
    logger.info("%s-Hall subgroups of a group of order %d: %d classes", pi, n, len(reps))
    return HallClassification(
        pi=effective,
        ambient=G,
        class_reps=reps,
        satisfies_E=bool(reps),
        satisfies_C=len(reps) == 1,
        satisfies_D=satisfies_D,
        search_mode=search,
        complete=True,
        class_sizes=sizes,
        d_pi_exact=d_exact,
    )


def _two_generated_d_pi(G: PermGroup, pi: PiSet, hall: HallClassification) -> bool:
    """D_pi tested on every pi-subgroup generated by two elements.

    Pairs are taken up to conjugacy: the first generator runs over class
    representatives of pi-elements, the second over the orbits of the first
    one's centralizer on pi-elements.
    """
    if len(hall.class_reps) != 1:
        return False
    target = hall.hall_order
    keys = [key for _, key in conjugation_orbit(G, hall.class_reps[0])[0]]
    elements = [g for g in G.elements() if is_pi_number(g.order(), pi)]
    seen: set[ElementKey] = set()
    for x in conjugacy_class_reps(G):
        if x.is_identity() or not is_pi_number(x.order(), pi):
            continue
        C = centralizer(G, PermGroup([x], G.degree))
        for y in _conjugation_orbit_reps(C, elements):
            if any(x.raw in key and y.raw in key for key in keys):
                continue
            try:
                K = PermGroup.trivial(G.degree).join(x, y, order_bound=target)
            except OrderBoundExceeded:
                continue
            key = K.element_key()
            if target % K.order() or key in seen:
                continue
            seen.add(key)
            if not any(key <= k for k in keys):
                logger.debug("pi-subgroup of order %d lies in no Hall subgroup", K.order())
                return False
    logger.debug("%d two-generated pi-subgroups checked for D_pi", len(seen))
    return True


def classify_pi_properties(
    G: PermGroup,
    pi: PiSet,
    mode: SearchMode | str | None = None,
    config: EngineConfig | None = None,
) -> HallClassification:
    """``hall_subgroups`` with the D_pi flag always filled in.

    In seeded mode D_pi is decided over the two-generated pi-subgroups only,
    so ``d_pi_exact`` is False.
    """
    cfg = current_config(config)
    result = hall_subgroups(G, pi, mode, cfg)
    if result.satisfies_D is None:
        result.satisfies_D = _two_generated_d_pi(G, result.pi, result)
        result.d_pi_exact = False
    return result


# -- normal pi-structure ---------------------------------------------------------


def largest_normal_pi_subgroup(G: PermGroup, pi: PiSet) -> PermGroup:
    """``O_pi(G)``."""
    return largest_normal_with(
        G,
        lambda M: is_pi_number(M.order(), pi),
        lambda x: is_pi_number(x.order(), pi),
    )


def _is_pi_prime_number(n: int, pi: PiSet) -> bool:
    return pi_part(n, pi) == 1


def is_pi_separable(G: PermGroup, pi: PiSet) -> tuple[bool, list[PermGroup]]:
    """Decide pi-separability by climbing the upper pi'/pi series.

    Returns the verdict and, when separable, a normal series from ``G`` down to
    the trivial group whose factors are alternately pi'- and pi-groups.
    """
    n = G.order()
    series = [PermGroup.trivial(G.degree)]
    while series[-1].order() < n:
        grown = False
        for want_pi in (False, True):
            N = series[-1]
            size = N.order()

            def accept(M: PermGroup, size: int = size, want_pi: bool = want_pi) -> bool:
                ratio = M.order() // size
                return is_pi_number(ratio, pi) if want_pi else _is_pi_prime_number(ratio, pi)

            M = largest_normal_with(G, accept, start=N)
            if M.order() > size:
                series.append(M)
                grown = True
        if not grown:
            return False, []
    return True, list(reversed(series))


def sylow_complexion(H: PermGroup, config: EngineConfig | None = None) -> SylowComplexion | None:
    """A complexion of a Sylow series of ``H``, or None when ``H`` has none.

    Builds the series bottom-up: a prime is accepted when the normal closure of
    the Sylow subgroups chosen so far has exactly the matching Hall order.
    """
    n = H.order()
    primes = list(prime_set(n))
    sylows = {p: sylow(H, p, config) for p in primes}
    chosen: list[int] = []
    while len(chosen) < len(primes):
        for q in primes:
            if q in chosen:
                continue
            sigma = [*chosen, q]
            M = normal_closure(H, [sylows[r] for r in sigma])
            if M.order() == pi_part(n, sigma):
                chosen.append(q)
                break
        else:
            return None
    return SylowComplexion(tuple(reversed(chosen)))


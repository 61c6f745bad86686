"""Pronormality deciders and their certificates.

``H`` is pronormal in ``G`` when, for every ``g`` in ``G``, the subgroups ``H``
and ``H^g`` are conjugate inside ``<H, H^g>``. Every verdict comes with the
tested conjugators and either a witness per test or a counterexample, so a
certificate can be checked again without trusting the search that produced it.
"""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from ._config import EngineConfig, current_config
from .arith import pi_part, prime_set
from .exceptions import ContainmentError, NotHallError, PronormError
from .groups import (
    JoinCache,
    PermGroup,
    conjugating_element,
    conjugation_orbit,
    normalizer,
    right_transversal,
)
from .hall import SylowComplexion, sylow, sylow_complexion
from .perm import Permutation

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    PRONORMAL = "pronormal"
    NOT_PRONORMAL = "not_pronormal"


class Method(str, Enum):
    """Which decider produced a certificate."""

    DEFINITION = "definition"
    REDUCED = "reduced"
    SYLOW_TOWER = "sylow_tower"


@dataclass(frozen=True)
class ConjugacyTest:
    """One tested conjugator ``g`` with the order of ``<H, H^g>`` and a witness, if any."""

    g: Permutation
    join_order: int
    witness: Permutation | None


@dataclass
class PronormalityCertificate:
    """Outcome of a pronormality decision with everything needed to re-check it."""

    ambient: PermGroup
    subject: PermGroup
    verdict: Verdict
    method: Method
    tests: list[ConjugacyTest] = field(default_factory=list)
    counterexample: Permutation | None = None
    anchor: PermGroup | None = None
    complexion: SylowComplexion | None = None

    @property
    def is_pronormal(self) -> bool:
        return self.verdict is Verdict.PRONORMAL

    @property
    def nontrivial_tests(self) -> int:
        return sum(1 for t in self.tests if not t.g.is_identity())


def _require(G: PermGroup, H: PermGroup, what: str) -> None:
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise ContainmentError(f"{what} is not contained in the ambient group", context=repr(H))


def are_conjugate_in(M: PermGroup, H: PermGroup, K: PermGroup) -> Permutation | None:
    """Some ``m`` in ``M`` with ``H^m == K``, or None.

    Raises:
        ContainmentError: If ``H`` or ``K`` is not a subgroup of ``M``.
    """
    _require(M, H, "H")
    _require(M, K, "K")
    if H.same_as(K):
        return M.identity
    return conjugating_element(M, H, K)


def _run_tests(
    H: PermGroup, conjugators: Sequence[Permutation], cache: JoinCache
) -> tuple[list[ConjugacyTest], Permutation | None]:
    tests: list[ConjugacyTest] = []
    counterexample: Permutation | None = None
    for g in conjugators:
        Hg = H.conjugate(g)
        if Hg.same_as(H):
            tests.append(ConjugacyTest(g, H.order(), H.identity))
            continue
        J = cache.join(H, Hg)
        witness = g if J.contains(g) else conjugating_element(J, H, Hg)
        tests.append(ConjugacyTest(g, J.order(), witness))
        if witness is None and counterexample is None:
            counterexample = g
    logger.debug("%d conjugacy tests, %d cached joins reused", len(tests), cache.hits)
    return tests, counterexample


def _certificate(
    G: PermGroup,
    H: PermGroup,
    method: Method,
    tests: list[ConjugacyTest],
    counterexample: Permutation | None,
    **extra: object,
) -> PronormalityCertificate:
    verdict = Verdict.PRONORMAL if counterexample is None else Verdict.NOT_PRONORMAL
    return PronormalityCertificate(
        ambient=G,
        subject=H,
        verdict=verdict,
        method=method,
        tests=tests,
        counterexample=counterexample,
        **extra,  # type: ignore[arg-type]
    )


def is_pronormal_definition(G: PermGroup, H: PermGroup) -> PronormalityCertificate:
    """Decide pronormality straight from the definition.

    ``g`` runs over a right transversal of ``N_G(H)``, since ``H^g`` only depends
    on the coset ``N_G(H)g``; that is exactly ``|G : N_G(H)|`` tests.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
    """
    _require(G, H, "subject")
    conjugators = [g for g, _ in conjugation_orbit(G, H)[0]]
    tests, counterexample = _run_tests(H, conjugators, JoinCache())
    return _certificate(G, H, Method.DEFINITION, tests, counterexample)


def is_pronormal_reduced(G: PermGroup, H: PermGroup, S: PermGroup) -> PronormalityCertificate:
    """Decide pronormality testing only ``g`` in ``N_G(S)``.

    ``S`` must be a pronormal subgroup of ``G`` inside ``H`` (a Sylow subgroup of
    ``G`` contained in ``H`` always qualifies). Then ``H`` is pronormal iff ``H``
    and ``H^g`` are conjugate in their join for every ``g`` in ``N_G(S)``, and
    ``g`` may run over a right transversal of ``N_H(S)`` in ``N_G(S)``.

    Raises:
        ContainmentError: If ``S`` is not inside ``H`` or ``H`` is not inside ``G``.
    """
    _require(G, H, "subject")
    if S.degree != H.degree or not S.is_subgroup_of(H):
        raise ContainmentError("anchor subgroup is not contained in the subject", context=repr(S))
    NG = normalizer(G, S)
    NH = normalizer(H, S)
    conjugators = right_transversal(NG, NH)
    tests, counterexample = _run_tests(H, conjugators, JoinCache())
    return _certificate(G, H, Method.REDUCED, tests, counterexample, anchor=S)


def is_hall_subgroup(G: PermGroup, H: PermGroup) -> bool:
    return gcd(H.order(), G.order() // H.order()) == 1


def is_pronormal_sylow_tower(G: PermGroup, H: PermGroup) -> PronormalityCertificate | None:
    """Pronormality of a Hall subgroup with a Sylow series.

    Two Hall subgroups with Sylow series of the same complexion are conjugate,
    so such an ``H`` is pronormal; the witnesses are still searched for and
    recorded. Returns None when ``H`` has no Sylow series.

    Raises:
        NotHallError: If ``H`` is not a Hall subgroup of ``G``.
    """
    _require(G, H, "subject")
    if not is_hall_subgroup(G, H):
        raise NotHallError(
            f"Subgroup of order {H.order()} is not a Hall subgroup of a group of order {G.order()}"
        )
    complexion = sylow_complexion(H)
    if complexion is None:
        return None
    conjugators = [g for g, _ in conjugation_orbit(G, H)[0]]
    tests, counterexample = _run_tests(H, conjugators, JoinCache())
    if counterexample is not None:
        logger.error("Hall subgroup with Sylow series %s failed a conjugacy test", complexion)
    return _certificate(
        G, H, Method.SYLOW_TOWER, tests, counterexample, complexion=complexion
    )


def decide(
    G: PermGroup,
    H: PermGroup,
    method: Method | str = Method.DEFINITION,
    anchor: PermGroup | None = None,
    config: EngineConfig | None = None,
) -> PronormalityCertificate | None:
    """Run one decider. ``reduced`` uses ``anchor``, defaulting to ``sylow_anchor(G, H)``."""
    choice = Method(method)
    if choice is Method.DEFINITION:
        return is_pronormal_definition(G, H)
    if choice is Method.SYLOW_TOWER:
        return is_pronormal_sylow_tower(G, H)
    if anchor is None:
        anchor = sylow_anchor(G, H, config)
    return is_pronormal_reduced(G, H, anchor)


def sylow_anchor(G: PermGroup, H: PermGroup, config: EngineConfig | None = None) -> PermGroup:
    """A Sylow subgroup of ``G`` inside ``H``, for the smallest prime whose full part ``H`` has."""
    cfg = current_config(config)
    for p in prime_set(H.order()):
        if pi_part(H.order(), (p,)) == pi_part(G.order(), (p,)):
            return sylow(H, p, cfg)
    raise PronormError("Subject contains no Sylow subgroup of the ambient group")


async def decide_async(
    G: PermGroup,
    H: PermGroup,
    method: Method | str = Method.DEFINITION,
    anchor: PermGroup | None = None,
) -> PronormalityCertificate | None:
    """Run ``decide`` in the default executor."""
    loop = asyncio.get_event_loop()
    return await loop.run_in_executor(None, lambda: decide(G, H, method, anchor))


def verify_certificate(cert: PronormalityCertificate) -> list[str]:
    """Re-check a certificate from its groups and permutations alone.

    Returns a list of problems; an empty list means the certificate holds.
    """
    problems: list[str] = []
    G, H = cert.ambient, cert.subject
    if not H.is_subgroup_of(G):
        return ["subject is not a subgroup of the ambient group"]
    for i, test in enumerate(cert.tests):
        if not G.contains(test.g):
            problems.append(f"test {i}: conjugator {test.g} is not in the ambient group")
            continue
        Hg = H.conjugate(test.g)
        J = H.join(Hg)
        if J.order() != test.join_order:
            problems.append(f"test {i}: join order {J.order()} != recorded {test.join_order}")
        if test.witness is None:
            continue
        if not J.contains(test.witness):
            problems.append(f"test {i}: witness {test.witness} is not in the join")
        elif not H.conjugate(test.witness).same_as(Hg):
            problems.append(f"test {i}: witness {test.witness} does not conjugate H to H^g")
    missing = [t for t in cert.tests if t.witness is None]
    if cert.verdict is Verdict.PRONORMAL and missing:
        problems.append(f"pronormal verdict with {len(missing)} tests lacking a witness")
    if cert.verdict is Verdict.NOT_PRONORMAL:
        g = cert.counterexample
        if g is None:
            problems.append("not_pronormal verdict without a counterexample")
        else:
            Hg = H.conjugate(g)
            if are_conjugate_in(H.join(Hg), H, Hg) is not None:
                problems.append(f"counterexample {g}: H and H^g are conjugate in their join")
    if cert.method is Method.DEFINITION:
        expected = G.order() // normalizer(G, H).order()
        if len(cert.tests) != expected:
            problems.append(f"{len(cert.tests)} tests recorded, |G : N_G(H)| = {expected}")
    return problems

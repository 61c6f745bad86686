"""Property suites for the structural facts the pronormality deciders rest on.

Each property is instantiated on small catalog groups, their direct products
and quotients, and every instance is checked with the definition-level
decider. A property whose hypotheses do not hold for a candidate simply skips
it; only instances that meet the hypotheses are recorded.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, combinations_with_replacement

from ._config import EngineConfig, current_config
from .arith import PiSet, pi_part, prime_set
from .atlas import build, is_maximal
from .exceptions import DegreeError
from .groups import (
    ElementKey,
    Homomorphism,
    PermGroup,
    direct_product,
    embed_factor,
    intersection,
    is_normal,
    is_solvable,
    is_subnormal,
    normal_subgroups,
    normalizer,
    quotient_by_normal,
    right_transversal,
)
from .hall import (
    SearchMode,
    classify_pi_properties,
    hall_subgroups,
    is_pi_separable,
    subgroup_classes,
    sylow,
    sylow_complexion,
)
from .pronormality import (
    are_conjugate_in,
    is_pronormal_definition,
    is_pronormal_reduced,
    is_pronormal_sylow_tower,
    sylow_anchor,
)

logger = logging.getLogger(__name__)

SOLVABLE_POOL = (
    "sym:3",
    "sym:4",
    "alt:4",
    "dih:8",
    "dih:10",
    "dih:12",
    "cyc:6",
    "cyc:12",
    "klein",
    "sl2:3",
    "gl2:3",
    "wr:3,2",
    "wr:2,3",
)
NONSOLVABLE_POOL = ("sym:5", "alt:5", "psl2:7")
PRODUCT_FACTORS = ("sym:3", "alt:4", "dih:8", "dih:10", "cyc:6", "klein", "sym:4", "dih:12")
SUBGROUP_SCAN_LIMIT = 500


class Property(str, Enum):
    """Checked properties, named by what they assert."""

    HALL_SECTIONS = "hall-sections"
    SEPARABLE_D_PI = "separable-d-pi"
    CONJUGACY_TRANSFER = "conjugacy-transfer"
    NORMALIZER_REDUCTION = "normalizer-reduction"
    HOMOMORPHIC_IMAGE = "homomorphic-image"
    COMMUTING_PRODUCT = "commuting-product"
    HALL_TIMES_NORMAL = "hall-times-normal"
    QUOTIENT_LIFT = "quotient-lift"
    SYLOW_SERIES = "sylow-series"
    CLASSICAL_EXAMPLES = "classical-examples"
    SUBNORMAL_CONTROL = "subnormal-control"


# checked on every candidate in the pool rather than sampled
FULL_SCAN = frozenset({Property.CLASSICAL_EXAMPLES, Property.SUBNORMAL_CONTROL})


@dataclass
class Instance:
    """One checked instance of a property."""

    prop: Property
    group: str
    subject: str
    passed: bool
    detail: str = ""


@dataclass
class LemmaReport:
    """All instances checked, with the minimum instance count each property needs."""

    requested: tuple[Property, ...]
    instances: list[Instance] = field(default_factory=list)
    minimum: int = 25

    def counts(self) -> dict[Property, int]:
        totals = {p: 0 for p in self.requested}
        for inst in self.instances:
            totals[inst.prop] = totals.get(inst.prop, 0) + 1
        return totals

    def failures(self) -> list[Instance]:
        return [inst for inst in self.instances if not inst.passed]

    def thin(self) -> list[Property]:
        """Sampled properties with fewer instances than ``minimum``."""
        return [
            p for p, n in self.counts().items() if p not in FULL_SCAN and n < self.minimum
        ]

    @property
    def passed(self) -> bool:
        return not self.failures() and not self.thin()


@dataclass
class Sample:
    """A pool group with memoized structural data."""

    label: str
    group: PermGroup
    _normals: list[PermGroup] | None = None
    _subgroups: list[PermGroup] | None = None
    _verdicts: dict[ElementKey, bool] = field(default_factory=dict)

    def normals(self) -> list[PermGroup]:
        """Proper nontrivial normal subgroups."""
        if self._normals is None:
            n = self.group.order()
            self._normals = [
                A for A in normal_subgroups(self.group) if 1 < A.order() < n
            ]
        return self._normals

    def subgroups(self) -> list[PermGroup]:
        """Class representatives of proper nontrivial subgroups (empty above the scan limit)."""
        if self._subgroups is None:
            n = self.group.order()
            if n > SUBGROUP_SCAN_LIMIT:
                self._subgroups = []
            else:
                self._subgroups = [
                    H for H in subgroup_classes(self.group) if 1 < H.order() < n
                ]
        return self._subgroups

    def pronormal(self, H: PermGroup) -> bool:
        key = H.element_key()
        if key not in self._verdicts:
            self._verdicts[key] = is_pronormal_definition(self.group, H).is_pronormal
        return self._verdicts[key]

    def pi_sets(self) -> list[PiSet]:
        """Nonempty proper subsets of the primes dividing the order."""
        primes = prime_set(self.group.order()).primes
        return [
            PiSet(combo)
            for size in range(1, len(primes))
            for combo in combinations(primes, size)
        ]

    def halls(self, pi: PiSet) -> list[PermGroup]:
        return hall_subgroups(self.group, pi, SearchMode.EXHAUSTIVE).class_reps


def _describe(H: PermGroup) -> str:
    return f"order {H.order()}"


def default_pool(config: EngineConfig | None = None) -> list[Sample]:
    """Small solvable and nonsolvable catalog groups, a few products and a quotient."""
    pool = [Sample(spec, build(spec, config)) for spec in (*SOLVABLE_POOL, *NONSOLVABLE_POOL)]
    for a, b in (("sym:3", "sym:3"), ("alt:4", "cyc:2"), ("dih:8", "cyc:3"), ("sym:3", "dih:10")):
        pool.append(Sample(f"{a} x {b}", direct_product(build(a, config), build(b, config))))
    S4 = build("sym:4", config)
    V4 = next(A for A in normal_subgroups(S4) if A.order() == 4)
    pool.append(Sample("sym:4 / klein", quotient_by_normal(S4, V4)[0]))
    return pool


def _quotients(sample: Sample) -> Iterator[tuple[PermGroup, PermGroup, Homomorphism]]:
    for A in sample.normals():
        try:
            Q, hom = quotient_by_normal(sample.group, A)
        except DegreeError:
            continue
        yield A, Q, hom


# -- individual properties -----------------------------------------------------


def _hall_sections(sample: Sample) -> Iterator[Instance]:
    for pi in sample.pi_sets():
        for H in sample.halls(pi):
            for A, Q, hom in _quotients(sample):
                meet = intersection(H, A).order()
                inside = meet == pi_part(A.order(), pi)
                image = hom.image_subgroup(H)
                above = image.order() == pi_part(Q.order(), pi)
                yield Instance(
                    Property.HALL_SECTIONS,
                    sample.label,
                    f"{pi}-Hall {_describe(H)}, normal {_describe(A)}",
                    inside and above,
                    f"|H∩A| = {meet}, |HA/A| = {image.order()}",
                )


def _separable_d_pi(sample: Sample) -> Iterator[Instance]:
    G = sample.group
    for pi in sample.pi_sets():
        separable, series = is_pi_separable(G, pi)
        if not separable:
            continue
        result = classify_pi_properties(G, pi, SearchMode.EXHAUSTIVE)
        yield Instance(
            Property.SEPARABLE_D_PI,
            sample.label,
            f"pi = {pi}, series of length {len(series)}",
            result.satisfies_D is True,
        )


def _conjugacy_transfer(sample: Sample) -> Iterator[Instance]:
    G = sample.group
    rng = G.rng(salt=41)
    for H in sample.subgroups():
        for g in right_transversal(G, normalizer(G, H))[1:3]:
            Hg = H.conjugate(g)
            J = H.join(Hg)
            y = J.random_element(rng)
            Hy = H.conjugate(y)
            z = are_conjugate_in(Hy.join(Hg), Hy, Hg)
            if z is None:
                continue
            x = y * z
            yield Instance(
                Property.CONJUGACY_TRANSFER,
                sample.label,
                f"{_describe(H)}, g = {g}",
                J.contains(x) and H.conjugate(x).same_as(Hg),
                f"x = {x}",
            )


def _normalizer_reduction(sample: Sample) -> Iterator[Instance]:
    G = sample.group
    candidates = [H for pi in sample.pi_sets() for H in sample.halls(pi)]
    candidates += [
        H for H in sample.subgroups() if any(
            pi_part(H.order(), (p,)) == pi_part(G.order(), (p,)) for p in prime_set(H.order())
        )
    ]
    for H in candidates:
        S = sylow_anchor(G, H)
        reduced = is_pronormal_reduced(G, H, S)
        yield Instance(
            Property.NORMALIZER_REDUCTION,
            sample.label,
            f"{_describe(H)}, anchor {_describe(S)}",
            reduced.is_pronormal == sample.pronormal(H),
            f"{len(reduced.tests)} reduced tests",
        )


def _homomorphic_image(sample: Sample) -> Iterator[Instance]:
    subjects = sample.subgroups() or [
        H for pi in sample.pi_sets() for H in sample.halls(pi)
    ]
    for A, Q, hom in _quotients(sample):
        for H in subjects:
            if not sample.pronormal(H):
                continue
            image = hom.image_subgroup(H)
            yield Instance(
                Property.HOMOMORPHIC_IMAGE,
                sample.label,
                f"{_describe(H)} modulo {_describe(A)}",
                is_pronormal_definition(Q, image).is_pronormal,
            )


def _commuting_products(config: EngineConfig | None) -> Iterator[Instance]:
    for a, b in combinations_with_replacement(PRODUCT_FACTORS, 2):
        G1, G2 = build(a, config), build(b, config)
        P = direct_product(G1, G2)
        primes1 = prime_set(G1.order()).primes
        primes2 = prime_set(G2.order()).primes
        H1, H2 = sylow(G1, primes1[-1], config), sylow(G2, primes2[0], config)
        H = embed_factor(P, [H1, H2], 0).join(embed_factor(P, [H1, H2], 1))
        yield Instance(
            Property.COMMUTING_PRODUCT,
            f"{a} x {b}",
            f"Sylow {primes1[-1]} x Sylow {primes2[0]}",
            is_pronormal_definition(P, H).is_pronormal,
        )


def _hall_times_normal(sample: Sample) -> Iterator[Instance]:
    G = sample.group
    for pi in sample.pi_sets():
        for H in sample.halls(pi):
            for A in sample.normals():
                meet = intersection(H, A)
                if H.order() * A.order() // meet.order() != G.order():
                    continue
                if not is_pronormal_definition(A, meet).is_pronormal:
                    continue
                yield Instance(
                    Property.HALL_TIMES_NORMAL,
                    sample.label,
                    f"{pi}-Hall {_describe(H)}, normal {_describe(A)}",
                    sample.pronormal(H),
                )


def _quotient_lift(sample: Sample) -> Iterator[Instance]:
    for pi in sample.pi_sets():
        for H in sample.halls(pi):
            for A, Q, hom in _quotients(sample):
                if not is_solvable(A):
                    continue
                image = hom.image_subgroup(H)
                below = sample.pronormal(H)
                above = is_pronormal_definition(Q, image).is_pronormal
                yield Instance(
                    Property.QUOTIENT_LIFT,
                    sample.label,
                    f"{pi}-Hall {_describe(H)} modulo solvable {_describe(A)}",
                    below == above,
                    f"in G: {below}, in G/A: {above}",
                )


def _sylow_series(sample: Sample) -> Iterator[Instance]:
    G = sample.group
    for pi in sample.pi_sets():
        for H in sample.halls(pi):
            complexion = sylow_complexion(H)
            if complexion is None:
                continue
            cert = is_pronormal_sylow_tower(G, H)
            yield Instance(
                Property.SYLOW_SERIES,
                sample.label,
                f"{pi}-Hall {_describe(H)}, complexion {complexion}",
                cert is not None and cert.is_pronormal and sample.pronormal(H),
            )


def _classical_examples(sample: Sample) -> Iterator[Instance]:
    G = sample.group
    for A in sample.normals():
        yield Instance(
            Property.CLASSICAL_EXAMPLES, sample.label, f"normal {_describe(A)}",
            sample.pronormal(A),
        )
    for p in prime_set(G.order()):
        S = sylow(G, p)
        yield Instance(
            Property.CLASSICAL_EXAMPLES, sample.label, f"Sylow {p}-subgroup",
            sample.pronormal(S),
        )
    for H in sample.subgroups():
        if is_maximal(G, H):
            yield Instance(
                Property.CLASSICAL_EXAMPLES, sample.label, f"maximal {_describe(H)}",
                sample.pronormal(H),
            )


def _subnormal_control(sample: Sample) -> Iterator[Instance]:
    G = sample.group
    for H in sample.subgroups():
        if is_normal(G, H) or not is_subnormal(G, H):
            continue
        yield Instance(
            Property.SUBNORMAL_CONTROL,
            sample.label,
            f"subnormal, non-normal {_describe(H)}",
            not sample.pronormal(H),
        )


_PER_SAMPLE: dict[Property, Callable[[Sample], Iterator[Instance]]] = {
    Property.HALL_SECTIONS: _hall_sections,
    Property.SEPARABLE_D_PI: _separable_d_pi,
    Property.CONJUGACY_TRANSFER: _conjugacy_transfer,
    Property.NORMALIZER_REDUCTION: _normalizer_reduction,
    Property.HOMOMORPHIC_IMAGE: _homomorphic_image,
    Property.HALL_TIMES_NORMAL: _hall_times_normal,
    Property.QUOTIENT_LIFT: _quotient_lift,
    Property.SYLOW_SERIES: _sylow_series,
    Property.CLASSICAL_EXAMPLES: _classical_examples,
    Property.SUBNORMAL_CONTROL: _subnormal_control,
}


def verify_reduction_lemmas(
    properties: Iterable[Property | str] | None = None,
    pool: list[Sample] | None = None,
    limit: int = 40,
    minimum: int = 25,
    config: EngineConfig | None = None,
) -> LemmaReport:
    """Check each requested property on up to ``limit`` instances.

    The classical-examples and subnormal checks ignore ``limit`` and
    ``minimum``: they cover every candidate in the pool.

    Args:
        properties: Properties to check; all of them by default.
        pool: Groups to instantiate on; ``default_pool()`` by default.
        limit: Instances recorded per property.
        minimum: Instances each property needs for the report to pass.
        config: Engine configuration.

    Returns:
        A report listing every instance and its outcome.
    """
    cfg = current_config(config)
    wanted = tuple(Property(p) for p in properties) if properties else tuple(Property)
    samples = pool if pool is not None else default_pool(cfg)
    report = LemmaReport(requested=wanted, minimum=minimum)
    for prop in wanted:
        if prop is Property.COMMUTING_PRODUCT:
            source: Iterable[Instance] = _commuting_products(cfg)
        else:
            check = _PER_SAMPLE[prop]
            source = (inst for sample in samples for inst in check(sample))
        taken = 0
        for inst in source:
            report.instances.append(inst)
            taken += 1
            if not inst.passed:
                logger.error("%s failed on %s: %s", prop.value, inst.group, inst.subject)
            if taken >= limit and prop not in FULL_SCAN:
                break
        logger.info("%s: %d instances", prop.value, taken)
    return report

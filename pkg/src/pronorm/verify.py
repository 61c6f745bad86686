"""Named verification suites run by ``pronorm verify``.

Each suite builds its groups from the atlas, runs the Hall search and the
deciders, and compares what it finds with the atlas expectations. A suite
returns every check it made, plus the classifications and certificates behind
them so a report can embed them.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from ._config import EngineConfig, current_config
from .arith import PiSet, prime_set
from .atlas import (
    CATALOG,
    CATALOG_SIMPLE,
    Expectation,
    Family,
    GroupSpec,
    Source,
    build,
    classical_order,
    expectations,
    fingerprint,
    is_maximal,
)
from .exceptions import UnsupportedGroupError
from .groups import PermGroup, normalizer
from .hall import HallClassification, SearchMode, hall_subgroups, sylow
from .lemmas import verify_reduction_lemmas
from .perm import Permutation
from .pronormality import (
    PronormalityCertificate,
    is_pronormal_definition,
    is_pronormal_reduced,
    verify_certificate,
)

logger = logging.getLogger(__name__)


class Suite(str, Enum):
    TABLE1 = "table1"
    TABLE2_M11 = "table2-m11"
    TABLE3 = "table3"
    LEMMA12 = "lemma12"
    LEMMAS = "lemmas"
    THEOREM = "theorem"
    ORACLE = "oracle"


@dataclass
class Check:
    """One comparison between an expectation and what the engine found."""

    name: str
    passed: bool
    expected: str = ""
    found: str = ""


@dataclass
class SuiteResult:
    suite: Suite
    checks: list[Check] = field(default_factory=list)
    classifications: list[HallClassification] = field(default_factory=list)
    certificates: list[PronormalityCertificate] = field(default_factory=list)
    expectations: list[Expectation] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + time.perf_counter() - start

    def add(self, name: str, passed: bool, expected: str = "", found: str = "") -> None:
        self.checks.append(Check(name, passed, expected, found))
        if not passed:
            logger.warning("check failed: %s (expected %s, found %s)", name, expected, found)


def _shape(H: PermGroup) -> str:
    fp = fingerprint(H)
    return f"order {fp.order}, derived {fp.derived}, abelianization {fp.abelianization}"


def _compare_rows(G: PermGroup, found: Sequence[PermGroup], rows: Sequence[Expectation]) -> bool:
    """Every found class matches a row, every row is matched, and class counts agree."""
    if not rows:
        return not found
    needs_maximal = any(r.descriptor.maximal is not None for r in rows)
    hits: list[list[int]] = []
    for H in found:
        fp = fingerprint(H)
        maximal = is_maximal(G, H) if needs_maximal else None
        hits.append(
            [
                i
                for i, r in enumerate(rows)
                if r.descriptor.matches(fp, maximal)
                and (r.index is None or G.order() // H.order() == r.index)
            ]
        )
    if any(not h for h in hits):
        return False
    for i, row in enumerate(rows):
        matching = sum(1 for h in hits if i in h)
        if matching == 0 or (row.class_count is not None and matching != row.class_count):
            return False
    return True


def _rows_text(rows: Sequence[Expectation]) -> str:
    if not rows:
        return "no Hall subgroup"
    return "; ".join(f"{r.label} (order {r.order})" for r in rows)


def _table_check(
    result: SuiteResult,
    source: Source,
    spec: GroupSpec,
    pi: PiSet,
    config: EngineConfig,
) -> tuple[PermGroup, HallClassification, list[Expectation]] | None:
    try:
        rows = expectations(source, spec, pi)
        result.expectations.extend(rows)
    except UnsupportedGroupError as e:
        logger.debug("skipping %s with pi = %s: %s", spec, pi, e)
        return None
    with result.phase("build"):
        G = build(spec, config)
    with result.phase("hall search"):
        found = hall_subgroups(G, pi, config=config)
    result.classifications.append(found)
    with result.phase("compare"):
        passed = _compare_rows(G, found.class_reps, rows)
    result.add(
        f"{spec.label}, pi = {pi}",
        passed,
        expected=_rows_text(rows),
        found="; ".join(_shape(H) for H in found.class_reps) or "no Hall subgroup",
    )
    return G, found, rows


# -- suites ------------------------------------------------------------------------


def _symmetric_suite(result: SuiteResult, specs: Sequence[GroupSpec], cfg: EngineConfig) -> None:
    cases = [
        (GroupSpec(Family.SYMMETRIC, (n,)), PiSet(pi))
        for n, pi in ((5, (2, 3)), (6, (2, 3)), (7, (2, 3)), (7, (2, 3, 5)), (8, (2, 3)))
    ]
    for spec, pi in cases:
        if specs and spec not in specs:
            continue
        _table_check(result, Source.TABLE_1, spec, pi, cfg)


def _m11_suite(result: SuiteResult, specs: Sequence[GroupSpec], cfg: EngineConfig) -> None:
    spec = GroupSpec(Family.M11)
    for primes in ((2, 3), (2, 3, 5), (2, 3, 11)):
        outcome = _table_check(result, Source.TABLE_2_M11, spec, PiSet(primes), cfg)
        if outcome is None:
            continue
        G, found, rows = outcome
        for row in rows:
            if row.sylow_normalizer is None:
                continue
            with result.phase("normalizers"):
                N = normalizer(G, sylow(G, row.sylow_normalizer, cfg))
            target = fingerprint(N)
            result.add(
                f"{row.label} against N(Sylow {row.sylow_normalizer})",
                bool(found.class_reps) and all(fingerprint(H) == target for H in found.class_reps),
                expected=_shape(N),
                found="; ".join(_shape(H) for H in found.class_reps),
            )


def _psl2_pi_sets(q: int) -> list[PiSet]:
    n = classical_order(GroupSpec(Family.PSL2, (q,)))
    p = next(iter(prime_set(q)))
    extra = [r for r in prime_set(n) if r not in (2, 3, p)]
    return [PiSet((2, 3)), *(PiSet((2, 3, r)) for r in extra)]


def _psl2_suite(result: SuiteResult, specs: Sequence[GroupSpec], cfg: EngineConfig) -> None:
    chosen = specs or [
        GroupSpec(Family.PSL2, (q,)) for q in (5, 7, 11, 13, 17, 19, 23, 25)
    ]
    for spec in chosen:
        if spec.family is not Family.PSL2 or spec.params[0] % 2 == 0:
            continue
        for pi in _psl2_pi_sets(spec.params[0]):
            outcome = _table_check(result, Source.TABLE_3, spec, pi, cfg)
            if outcome is None:
                continue
            G, found, _ = outcome
            if found.search_mode is SearchMode.EXHAUSTIVE:
                with result.phase("seeded search"):
                    seeded = hall_subgroups(G, pi, SearchMode.SEEDED, cfg)
                _agreement(result, spec, pi, seeded, found)


def _sylow_normalizer_suite(
    result: SuiteResult, specs: Sequence[GroupSpec], cfg: EngineConfig
) -> None:
    for spec in specs or CATALOG_SIMPLE:
        try:
            (row,) = expectations(Source.LEMMA_12, spec)
            result.expectations.append(row)
        except UnsupportedGroupError as e:
            logger.debug("skipping %s: %s", spec, e)
            continue
        with result.phase("build"):
            G = build(spec, cfg)
        with result.phase("normalizers"):
            S = sylow(G, 2, cfg)
            N = normalizer(G, S)
        fp = fingerprint(N)
        passed = row.descriptor.matches(fp)
        if row.label == "S":
            passed = passed and N.order() == S.order()
        result.add(
            f"N_G(S) in {spec.label}",
            passed,
            expected=f"{row.label} (order {row.order})",
            found=_shape(N),
        )


def _lemmas_suite(result: SuiteResult, specs: Sequence[GroupSpec], cfg: EngineConfig) -> None:
    with result.phase("properties"):
        report = verify_reduction_lemmas(config=cfg)
    counts = report.counts()
    for prop in report.requested:
        failed = [i for i in report.failures() if i.prop is prop]
        short = prop in report.thin()
        result.add(
            f"property {prop.value}",
            not failed and not short,
            expected=f"all pass, at least {report.minimum} instances",
            found=f"{counts[prop]} instances, {len(failed)} failed",
        )
    A4 = build("alt:4", cfg)
    H = PermGroup([Permutation.parse("(0 1)(2 3)", 4)], 4)
    cert = is_pronormal_definition(A4, H)
    result.certificates.append(cert)
    problems = verify_certificate(cert)
    result.add(
        "involution subgroup of Alt_4",
        not cert.is_pronormal and cert.counterexample is not None and not problems,
        expected="not pronormal, verifiable counterexample",
        found=f"{cert.verdict.value}, counterexample {cert.counterexample}, "
        f"{len(problems)} problems",
    )


def _theorem_pi_sets(n: int) -> list[PiSet]:
    primes = prime_set(n).primes
    return [
        PiSet(combo)
        for size in range(2, len(primes))
        for combo in combinations(primes, size)
    ]


def _theorem_suite(result: SuiteResult, specs: Sequence[GroupSpec], cfg: EngineConfig) -> None:
    for spec in specs or CATALOG_SIMPLE:
        with result.phase("build"):
            G = build(spec, cfg)
        for pi in _theorem_pi_sets(G.order()):
            with result.phase("hall search"):
                found = hall_subgroups(G, pi, config=cfg)
            result.classifications.append(found)
            for H in found.class_reps:
                with result.phase("definition decider"):
                    cert = is_pronormal_definition(G, H)
                result.certificates.append(cert)
                name = f"{spec.label}, {pi}-Hall of order {H.order()}"
                result.add(name, cert.is_pronormal, "pronormal", cert.verdict.value)
                if 2 not in pi:
                    continue
                with result.phase("reduced decider"):
                    reduced = is_pronormal_reduced(G, H, sylow(H, 2, cfg))
                result.certificates.append(reduced)
                result.add(
                    f"{name}, reduced decider agrees",
                    reduced.verdict is cert.verdict,
                    cert.verdict.value,
                    reduced.verdict.value,
                )


def _agreement(
    result: SuiteResult,
    spec: GroupSpec,
    pi: PiSet,
    seeded: HallClassification,
    exhaustive: HallClassification,
) -> None:
    left = sorted(fingerprint(H) for H in seeded.class_reps)
    right = sorted(fingerprint(H) for H in exhaustive.class_reps)
    result.add(
        f"{spec.label}, pi = {pi}: seeded search matches exhaustive",
        left == right,
        expected=f"{len(right)} classes",
        found=f"{len(left)} classes",
    )


def _oracle_suite(result: SuiteResult, specs: Sequence[GroupSpec], cfg: EngineConfig) -> None:
    for spec in specs or CATALOG:
        if classical_order(spec) > cfg.exhaustive_bound:
            continue
        with result.phase("build"):
            G = build(spec, cfg)
        primes = prime_set(G.order()).primes
        for size in range(2, len(primes)):
            for combo in combinations(primes, size):
                pi = PiSet(combo)
                with result.phase("seeded search"):
                    seeded = hall_subgroups(G, pi, SearchMode.SEEDED, cfg)
                with result.phase("exhaustive search"):
                    exhaustive = hall_subgroups(G, pi, SearchMode.EXHAUSTIVE, cfg)
                _agreement(result, spec, pi, seeded, exhaustive)


_SUITES: dict[Suite, Callable[[SuiteResult, Sequence[GroupSpec], EngineConfig], None]] = {
    Suite.TABLE1: _symmetric_suite,
    Suite.TABLE2_M11: _m11_suite,
    Suite.TABLE3: _psl2_suite,
    Suite.LEMMA12: _sylow_normalizer_suite,
    Suite.LEMMAS: _lemmas_suite,
    Suite.THEOREM: _theorem_suite,
    Suite.ORACLE: _oracle_suite,
}


def run_suite(
    suite: Suite | str,
    specs: Sequence[GroupSpec] = (),
    config: EngineConfig | None = None,
) -> SuiteResult:
    """Run one named suite, optionally restricted to ``specs``.

    Args:
        suite: Suite name.
        specs: Restrict the suite to these groups (ignored where a suite has a
            fixed group list that does not contain them).
        config: Engine configuration.

    Returns:
        Every check the suite made, with timings per phase.
    """
    cfg = current_config(config)
    chosen = Suite(suite)
    result = SuiteResult(chosen)
    start = time.perf_counter()
    _SUITES[chosen](result, list(specs), cfg)
    result.timings["total"] = time.perf_counter() - start
    logger.info(
        "suite %s: %d checks, %d failed", chosen.value, len(result.checks), len(result.failures())
    )
    return result

"""Pydantic records for reports, and converters to and from engine objects."""

from __future__ import annotations

from pydantic import BaseModel, Field

from .arith import PiSet
from .atlas import Expectation
from .groups import PermGroup
from .hall import HallClassification, SearchMode, SylowComplexion
from .perm import Permutation
from .pronormality import (
    ConjugacyTest,
    Method,
    PronormalityCertificate,
    Verdict,
    verify_certificate,
)
from .verify import Check, SuiteResult


class PermutationRecord(BaseModel):
    """A permutation in cycle notation on a fixed number of points."""

    degree: int = Field(..., description="Number of points acted on")
    cycles: str = Field(..., description="Disjoint cycles such as '(0 1 2)(3 4)', '()' for 1")

    @classmethod
    def from_permutation(cls, p: Permutation) -> PermutationRecord:
        return cls(degree=p.degree, cycles=str(p))

    def to_permutation(self) -> Permutation:
        return Permutation.parse(self.cycles, self.degree)


class GroupRecord(BaseModel):
    """A permutation group by its generators."""

    degree: int = Field(..., description="Number of points acted on")
    generators: list[str] = Field(default_factory=list, description="Generators in cycle notation")
    name: str | None = Field(None, description="Catalog name, when known")
    order: int | None = Field(None, description="Group order")

    @classmethod
    def from_group(cls, G: PermGroup) -> GroupRecord:
        return cls(
            degree=G.degree,
            generators=[str(g) for g in G.generators],
            name=G.name,
            order=G.order(),
        )

    def to_group(self) -> PermGroup:
        gens = [Permutation.parse(text, self.degree) for text in self.generators]
        return PermGroup(gens, self.degree, name=self.name)


class HallClassRecord(BaseModel):
    """One conjugacy class of Hall subgroups."""

    representative: GroupRecord
    class_size: int = Field(..., description="Number of conjugates")


class HallClassificationRecord(BaseModel):
    pi: str = Field(..., description="Prime set, e.g. '{2,3}'")
    ambient: GroupRecord
    hall_order: int
    classes: list[HallClassRecord] = Field(default_factory=list)
    satisfies_E: bool
    satisfies_C: bool
    satisfies_D: bool | None = Field(None, description="None when D was not computed")
    d_pi_exact: bool = False
    search_mode: SearchMode
    complete: bool

    @classmethod
    def from_classification(cls, result: HallClassification) -> HallClassificationRecord:
        sizes = result.class_sizes or [0] * len(result.class_reps)
        return cls(
            pi=str(result.pi),
            ambient=GroupRecord.from_group(result.ambient),
            hall_order=result.hall_order,
            classes=[
                HallClassRecord(representative=GroupRecord.from_group(H), class_size=size)
                for H, size in zip(result.class_reps, sizes)
            ],
            satisfies_E=result.satisfies_E,
            satisfies_C=result.satisfies_C,
            satisfies_D=result.satisfies_D,
            d_pi_exact=result.d_pi_exact,
            search_mode=result.search_mode,
            complete=result.complete,
        )

    def to_classification(self) -> HallClassification:
        return HallClassification(
            pi=PiSet.parse(self.pi),
            ambient=self.ambient.to_group(),
            class_reps=[c.representative.to_group() for c in self.classes],
            satisfies_E=self.satisfies_E,
            satisfies_C=self.satisfies_C,
            satisfies_D=self.satisfies_D,
            search_mode=self.search_mode,
            complete=self.complete,
            class_sizes=[c.class_size for c in self.classes],
            d_pi_exact=self.d_pi_exact,
        )


class ConjugacyTestRecord(BaseModel):
    g: str = Field(..., description="Tested conjugator")
    join_order: int = Field(..., description="Order of <H, H^g>")
    witness: str | None = Field(None, description="x in <H, H^g> with H^x = H^g, if any")


class CertificateRecord(BaseModel):
    """A pronormality certificate with every permutation spelled out."""

    ambient: GroupRecord
    subject: GroupRecord
    verdict: Verdict
    method: Method
    tests: list[ConjugacyTestRecord] = Field(default_factory=list)
    counterexample: str | None = None
    anchor: GroupRecord | None = None
    complexion: list[int] | None = None

    @classmethod
    def from_certificate(cls, cert: PronormalityCertificate) -> CertificateRecord:
        return cls(
            ambient=GroupRecord.from_group(cert.ambient),
            subject=GroupRecord.from_group(cert.subject),
            verdict=cert.verdict,
            method=cert.method,
            tests=[
                ConjugacyTestRecord(
                    g=str(t.g),
                    join_order=t.join_order,
                    witness=None if t.witness is None else str(t.witness),
                )
                for t in cert.tests
            ],
            counterexample=None if cert.counterexample is None else str(cert.counterexample),
            anchor=None if cert.anchor is None else GroupRecord.from_group(cert.anchor),
            complexion=None if cert.complexion is None else list(cert.complexion.primes),
        )

    def to_certificate(self) -> PronormalityCertificate:
        n = self.ambient.degree

        def perm(text: str | None) -> Permutation | None:
            return None if text is None else Permutation.parse(text, n)

        tests = [
            ConjugacyTest(Permutation.parse(t.g, n), t.join_order, perm(t.witness))
            for t in self.tests
        ]
        return PronormalityCertificate(
            ambient=self.ambient.to_group(),
            subject=self.subject.to_group(),
            verdict=self.verdict,
            method=self.method,
            tests=tests,
            counterexample=perm(self.counterexample),
            anchor=None if self.anchor is None else self.anchor.to_group(),
            complexion=None if self.complexion is None else SylowComplexion(tuple(self.complexion)),
        )


class ExpectationRecord(BaseModel):
    source: str
    group: str
    pi: str
    label: str
    order: int
    abelianization: int | None = None
    derived: int | None = None
    maximal: bool | None = None
    class_count: int | None = None
    index: int | None = None

    @classmethod
    def from_expectation(cls, row: Expectation) -> ExpectationRecord:
        d = row.descriptor
        return cls(
            source=row.source.value,
            group=str(row.group),
            pi=str(row.pi),
            label=row.label,
            order=d.order,
            abelianization=d.abelianization,
            derived=d.derived,
            maximal=d.maximal,
            class_count=row.class_count,
            index=row.index,
        )


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    expected: str = ""
    found: str = ""

    @classmethod
    def from_check(cls, check: Check) -> CheckOutcome:
        return cls(name=check.name, passed=check.passed, expected=check.expected, found=check.found)


class GroupSummary(BaseModel):
    """Basic facts about one built catalog group."""

    spec: str
    label: str
    degree: int
    order: int
    transitivity: int = Field(..., description="Largest k with k-transitive action")
    simple: bool
    solvable: bool
    generators: list[str] = Field(default_factory=list)


class PhaseTiming(BaseModel):
    phase: str
    seconds: float


class Report(BaseModel):
    """Everything one command produced, in a form that can be re-verified offline."""

    command: str = Field(..., description="The command line that produced the report")
    engine_version: str
    seed: int
    group: str | None = None
    pi: str | None = None
    passed: bool = True
    summary: GroupSummary | None = None
    classifications: list[HallClassificationRecord] = Field(default_factory=list)
    certificates: list[CertificateRecord] = Field(default_factory=list)
    expectations: list[ExpectationRecord] = Field(default_factory=list)
    checks: list[CheckOutcome] = Field(default_factory=list)
    timings: list[PhaseTiming] = Field(default_factory=list)

    def add_suite(self, result: SuiteResult) -> None:
        self.classifications.extend(
            HallClassificationRecord.from_classification(c) for c in result.classifications
        )
        self.certificates.extend(CertificateRecord.from_certificate(c) for c in result.certificates)
        self.expectations.extend(ExpectationRecord.from_expectation(r) for r in result.expectations)
        self.checks.extend(CheckOutcome.from_check(c) for c in result.checks)
        self.timings.extend(PhaseTiming(phase=k, seconds=v) for k, v in result.timings.items())
        self.passed = self.passed and result.passed


def reverify_report(report: Report) -> list[str]:
    """Re-check every embedded certificate from its serialized permutations.

    Returns a list of problems, each prefixed with the certificate's position.
    """
    problems: list[str] = []
    for i, record in enumerate(report.certificates):
        cert = record.to_certificate()
        problems.extend(f"certificate {i}: {p}" for p in verify_certificate(cert))
    return problems

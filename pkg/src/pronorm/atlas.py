"""Catalog groups as permutation groups, and the expected Hall structure of each.

Group specs have a compact text form (``sym:8``, ``psl2:11``, ``m11``,
``wr:4,2``). Expectations describe subgroups by isomorphism-invariant
fingerprints (order, abelianization order, derived subgroup order,
maximality), never by generators.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from math import factorial, gcd

from sympy import factorint, isprime

from ._config import EngineConfig
from .arith import PiSet, pi_part, prime_set
from .exceptions import ContainmentError, ParseError, PronormError, UnsupportedGroupError
from .fields import FiniteField, finite_field
from .groups import (
    PermGroup,
    derived_subgroup,
    is_nilpotent,
    is_solvable,
    right_transversal,
)
from .perm import MAX_DEGREE, Permutation

logger = logging.getLogger(__name__)

PSL2_FIELDS = (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)
PSL3_FIELDS = (2, 3)
LINEAR2_FIELDS = (3, 5, 7, 9)
MAX_SYMMETRIC = 10


class Family(str, Enum):
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    DIHEDRAL = "dihedral"
    CYCLIC = "cyclic"
    PSL2 = "psl2"
    PSL3 = "psl3"
    SL2 = "sl2"
    GL2 = "gl2"
    M11 = "m11"
    KLEIN = "klein"
    SYM_WR_SYM = "sym_wr_sym"


_SHORT = {
    Family.SYMMETRIC: "sym",
    Family.ALTERNATING: "alt",
    Family.DIHEDRAL: "dih",
    Family.CYCLIC: "cyc",
    Family.SYM_WR_SYM: "wr",
}
_ALIASES = {**{v: k for k, v in _SHORT.items()}, **{f.value: f for f in Family}}
_ARITY = {Family.M11: 0, Family.KLEIN: 0, Family.SYM_WR_SYM: 2}
_SPEC_RE = re.compile(r"^\s*([a-z][a-z0-9_]*)\s*(?:[:(]\s*([\d,\s]*?)\s*\)?)?\s*$")


@dataclass(frozen=True)
class GroupSpec:
    """A catalog group: a family and its integer parameters."""

    family: Family
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        arity = _ARITY.get(self.family, 1)
        if len(self.params) != arity:
            raise UnsupportedGroupError(
                f"{self.family.value} takes {arity} parameter(s), got {len(self.params)}"
            )
        problem = _range_problem(self.family, self.params)
        if problem:
            raise UnsupportedGroupError(problem, context=str(self))

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        return parse_group_spec(text)

    def __str__(self) -> str:
        name = _SHORT.get(self.family, self.family.value)
        if not self.params:
            return name
        return f"{name}:{','.join(map(str, self.params))}"

    @property
    def label(self) -> str:
        """Conventional name, e.g. ``PSL2(11)`` or ``Sym_4 wr Sym_2``."""
        p = self.params
        match self.family:
            case Family.SYMMETRIC:
                return f"Sym_{p[0]}"
            case Family.ALTERNATING:
                return f"Alt_{p[0]}"
            case Family.DIHEDRAL:
                return f"D_{p[0]}"
            case Family.CYCLIC:
                return f"C_{p[0]}"
            case Family.PSL2 | Family.PSL3 | Family.SL2 | Family.GL2:
                return f"{self.family.value.upper()}({p[0]})"
            case Family.M11:
                return "M11"
            case Family.KLEIN:
                return "Klein four-group"
            case Family.SYM_WR_SYM:
                return f"Sym_{p[0]} wr Sym_{p[1]}"
        return str(self)


def _range_problem(family: Family, params: tuple[int, ...]) -> str | None:
    if any(x < 1 for x in params):
        return "parameters must be positive"
    if family in (Family.SYMMETRIC, Family.ALTERNATING) and params[0] > MAX_SYMMETRIC:
        return f"degree {params[0]} is above {MAX_SYMMETRIC}"
    if family is Family.DIHEDRAL:
        m = params[0]
        if m % 2 or m > 2 * MAX_DEGREE:
            return f"dihedral order must be even and at most {2 * MAX_DEGREE}, got {m}"
    if family is Family.CYCLIC:
        parts = [p**e for p, e in factorint(params[0]).items()]
        if sum(parts) > MAX_DEGREE:
            return f"cyclic group of order {params[0]} needs more than {MAX_DEGREE} points"
    if family is Family.PSL2 and params[0] not in PSL2_FIELDS:
        return f"PSL2(q) is built for q in {PSL2_FIELDS}"
    if family is Family.PSL3 and params[0] not in PSL3_FIELDS:
        return f"PSL3(q) is built for q in {PSL3_FIELDS}"
    if family in (Family.SL2, Family.GL2) and params[0] not in LINEAR2_FIELDS:
        return f"{family.value.upper()}(q) is built for q in {LINEAR2_FIELDS}"
    if family is Family.SYM_WR_SYM and params[0] * params[1] > 12:
        return "wreath products are built on at most 12 points"
    return None


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``"sym:8"``, ``"psl2:11"``, ``"m11"``, ``"wr:4,2"`` or ``"symmetric(8)"``.

    Raises:
        ParseError: If the text does not name a family.
        UnsupportedGroupError: If the parameters are out of range.
    """
    match = _SPEC_RE.match(text.lower())
    if not match or match.group(1) not in _ALIASES:
        raise ParseError(f"Unknown group {text!r}", context="expected e.g. sym:8, psl2:11, m11")
    family = _ALIASES[match.group(1)]
    raw = match.group(2) or ""
    try:
        params = tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError as e:
        raise ParseError(f"Bad parameters in {text!r}") from e
    return GroupSpec(family, params)


# -- builders --------------------------------------------------------------------


def classical_order(spec: GroupSpec) -> int:
    """The textbook order of the group ``spec`` names."""
    p = spec.params
    match spec.family:
        case Family.SYMMETRIC:
            return factorial(p[0])
        case Family.ALTERNATING:
            return max(1, factorial(p[0]) // 2)
        case Family.DIHEDRAL | Family.CYCLIC:
            return p[0]
        case Family.PSL2:
            q = p[0]
            return q * (q * q - 1) // gcd(2, q - 1)
        case Family.PSL3:
            q = p[0]
            return q**3 * (q * q - 1) * (q**3 - 1) // gcd(3, q - 1)
        case Family.SL2:
            q = p[0]
            return q * (q * q - 1)
        case Family.GL2:
            q = p[0]
            return q * (q - 1) * (q * q - 1)
        case Family.M11:
            return 7920
        case Family.KLEIN:
            return 4
        case Family.SYM_WR_SYM:
            a, b = p
            return factorial(a) ** b * factorial(b)
    raise UnsupportedGroupError(f"No order formula for {spec}")


def _cycle(points: list[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


def _symmetric_gens(n: int) -> list[Permutation]:
    if n < 2:
        return []
    return [_cycle([0, 1], n), _cycle(list(range(n)), n)]


def _alternating_gens(n: int) -> list[Permutation]:
    if n < 3:
        return []
    long = list(range(n)) if n % 2 else list(range(1, n))
    return [_cycle([0, 1, 2], n), _cycle(long, n)]


def _dihedral_gens(m: int) -> tuple[list[Permutation], int]:
    if m == 2:
        return [_cycle([0, 1], 2)], 2
    if m == 4:
        return _klein_gens(), 4
    k = m // 2
    rotation = Permutation([(i + 1) % k for i in range(k)])
    reflection = Permutation([(-i) % k for i in range(k)])
    return [rotation, reflection], k


def _cyclic_gens(m: int) -> tuple[list[Permutation], int]:
    parts = [p**e for p, e in sorted(factorint(m).items())]
    degree = max(1, sum(parts))
    cycles, start = [], 0
    for size in parts:
        cycles.append(list(range(start, start + size)))
        start += size
    return [Permutation.from_cycles(cycles, degree)], degree


def _klein_gens() -> list[Permutation]:
    return [
        Permutation.from_cycles([[0, 1], [2, 3]], 4),
        Permutation.from_cycles([[0, 2], [1, 3]], 4),
    ]


def _psl2_gens(F: FiniteField) -> list[Permutation]:
    """Generators on the projective line ``GF(q) + {inf}``, with ``inf`` as point ``q``."""
    q = F.q
    square = F.mul(F.primitive_element, F.primitive_element)
    translate = [F.add(x, 1) for x in range(q)] + [q]
    scale = [F.mul(square, x) for x in range(q)] + [q]
    invert = [q] + [F.neg(F.inv(x)) for x in range(1, q)] + [0]
    return [Permutation(translate), Permutation(scale), Permutation(invert)]


def _projective_points(F: FiniteField, dim: int) -> list[tuple[int, ...]]:
    points = []
    for v in _vectors(F, dim):
        lead = next((c for c in v if c), 0)
        if lead == 1:
            points.append(v)
    return points


def _vectors(F: FiniteField, dim: int) -> list[tuple[int, ...]]:
    vectors: list[tuple[int, ...]] = [()]
    for _ in range(dim):
        vectors = [(*v, c) for v in vectors for c in F.elements]
    return vectors


def _normalize(F: FiniteField, v: tuple[int, ...]) -> tuple[int, ...]:
    lead = next(c for c in v if c)
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in v)


def _psl3_gens(F: FiniteField) -> tuple[list[Permutation], int]:
    """The six elementary transvections acting on projective points of ``GF(q)^3``."""
    points = _projective_points(F, 3)
    index = {v: i for i, v in enumerate(points)}
    gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            images = []
            for v in points:
                w = list(v)
                w[i] = F.add(w[i], w[j])
                images.append(index[_normalize(F, tuple(w))])
            gens.append(Permutation(images))
    return gens, len(points)


def _matrix_action(F: FiniteField, matrix: tuple[tuple[int, int], tuple[int, int]]) -> list[int]:
    points = [v for v in _vectors(F, 2) if any(v)]
    index = {v: i for i, v in enumerate(points)}
    (a, b), (c, d) = matrix
    images = []
    for x, y in points:
        image = (F.add(F.mul(x, a), F.mul(y, c)), F.add(F.mul(x, b), F.mul(y, d)))
        images.append(index[image])
    return images


def _linear2_gens(F: FiniteField, general: bool) -> tuple[list[Permutation], int]:
    """SL2 or GL2 acting on the nonzero row vectors of ``GF(q)^2``."""
    w = F.primitive_element
    matrices = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
    if F.k > 1:
        matrices.append(((w, 0), (0, F.inv(w))))
    if general:
        matrices.append(((w, 0), (0, 1)))
    return [Permutation(_matrix_action(F, m)) for m in matrices], F.q * F.q - 1


def _m11_gens() -> list[Permutation]:
    return [
        _cycle(list(range(11)), 11),
        Permutation.from_cycles([[2, 6, 10, 7], [3, 9, 4, 5]], 11),
    ]


def _wreath_gens(a: int, b: int) -> tuple[list[Permutation], int]:
    """``Sym_a wr Sym_b`` on ``b`` blocks of ``a`` points each."""
    n = a * b
    gens = [Permutation(list(g.images) + list(range(a, n))) for g in _symmetric_gens(a)]
    for top in _symmetric_gens(b):
        gens.append(Permutation([top(j) * a + i for j in range(b) for i in range(a)]))
    return gens, n


def build(spec: GroupSpec | str, config: EngineConfig | None = None) -> PermGroup:
    """Build a catalog group and check it has the textbook order.

    Raises:
        UnsupportedGroupError: If the parameters are out of range.
        PronormError: If the built group does not have the expected order.
    """
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    p = spec.params
    match spec.family:
        case Family.SYMMETRIC:
            gens, degree = _symmetric_gens(p[0]), p[0]
        case Family.ALTERNATING:
            gens, degree = _alternating_gens(p[0]), p[0]
        case Family.DIHEDRAL:
            gens, degree = _dihedral_gens(p[0])
        case Family.CYCLIC:
            gens, degree = _cyclic_gens(p[0])
        case Family.PSL2:
            gens, degree = _psl2_gens(finite_field(p[0])), p[0] + 1
        case Family.PSL3:
            gens, degree = _psl3_gens(finite_field(p[0]))
        case Family.SL2 | Family.GL2:
            gens, degree = _linear2_gens(finite_field(p[0]), spec.family is Family.GL2)
        case Family.M11:
            gens, degree = _m11_gens(), 11
        case Family.KLEIN:
            gens, degree = _klein_gens(), 4
        case Family.SYM_WR_SYM:
            gens, degree = _wreath_gens(*p)
        case _:
            raise UnsupportedGroupError(f"No builder for {spec.family.value}")
    G = PermGroup(gens, degree, name=spec.label, config=config)
    expected = classical_order(spec)
    if G.order() != expected:
        raise PronormError(
            f"Built group has order {G.order()}, expected {expected}", context=str(spec)
        )
    logger.debug("built %s: degree %d, order %d", spec.label, degree, expected)
    return G


def epsilon(q: int) -> int:
    """``+1`` if ``q = 1 mod 4``, else ``-1``; defined for odd ``q`` only."""
    if q % 2 == 0:
        raise PronormError(f"epsilon(q) needs an odd q, got {q}")
    return 1 if q % 4 == 1 else -1


# -- fingerprints ------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Fingerprint:
    """Isomorphism invariants that tell the catalog's Hall subgroups apart."""

    order: int
    derived: int
    abelianization: int
    exponent: int
    nilpotent: bool
    solvable: bool


def fingerprint(G: PermGroup) -> Fingerprint:
    derived = derived_subgroup(G).order()
    return Fingerprint(
        order=G.order(),
        derived=derived,
        abelianization=G.order() // derived,
        exponent=G.exponent(),
        nilpotent=is_nilpotent(G),
        solvable=is_solvable(G),
    )


def is_maximal(G: PermGroup, H: PermGroup) -> bool:
    """True iff ``H`` is a maximal subgroup of ``G``.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
    """
    if not H.is_subgroup_of(G):
        raise ContainmentError("subject is not contained in the ambient group", context=repr(H))
    n = G.order()
    if H.order() == n:
        return False
    return all(H.join(x).order() == n for x in right_transversal(G, H)[1:])


# -- expectations ------------------------------------------------------------------


class Source(str, Enum):
    TABLE_1 = "table-1"
    TABLE_2_M11 = "table-2-m11"
    TABLE_3 = "table-3"
    LEMMA_12 = "lemma-12"


@dataclass(frozen=True)
class Descriptor:
    """Expected invariants of a subgroup; None fields are not checked."""

    order: int
    abelianization: int | None = None
    derived: int | None = None
    maximal: bool | None = None

    def matches(self, fp: Fingerprint, maximal: bool | None = None) -> bool:
        if fp.order != self.order:
            return False
        if self.abelianization is not None and fp.abelianization != self.abelianization:
            return False
        if self.derived is not None and fp.derived != self.derived:
            return False
        return self.maximal is None or maximal is None or self.maximal == maximal


@dataclass(frozen=True)
class Expectation:
    """One expected row: a subgroup shape, with its class count and index when known.

    ``sylow_normalizer`` names a prime ``p`` when the subgroup must share its
    fingerprint with the normalizer of a Sylow ``p``-subgroup.
    """

    source: Source
    group: GroupSpec
    pi: PiSet
    label: str
    descriptor: Descriptor
    class_count: int | None = None
    index: int | None = None
    sylow_normalizer: int | None = None

    @property
    def order(self) -> int:
        return self.descriptor.order


def _dihedral_descriptor(order: int) -> Descriptor:
    k = order // 2
    derived = k // 2 if k % 2 == 0 else k
    return Descriptor(order, order // derived, derived)


def _proper_with_two_three(spec: GroupSpec, pi: PiSet) -> PiSet:
    n = classical_order(spec)
    if 2 not in pi or 3 not in pi:
        raise UnsupportedGroupError(f"Rows need 2 and 3 in pi, got {pi}", context=str(spec))
    effective = pi.restrict(n)
    if effective == prime_set(n):
        raise UnsupportedGroupError(f"pi = {pi} covers every prime of |G|", context=str(spec))
    return effective


def _symmetric_rows(spec: GroupSpec, pi: PiSet) -> list[Expectation]:
    if spec.family is not Family.SYMMETRIC:
        raise UnsupportedGroupError(
            "Symmetric group rows need a symmetric group", context=str(spec)
        )
    n = spec.params[0]
    effective = _proper_with_two_three(spec, pi)
    rows: list[Expectation] = []

    def row(label: str, descriptor: Descriptor, index: int) -> None:
        rows.append(
            Expectation(Source.TABLE_1, spec, effective, label, descriptor, 1, index)
        )

    if n >= 5 and isprime(n) and effective == prime_set(factorial(n - 1)):
        m = factorial(n - 1)
        row(f"Sym_{n - 1}", Descriptor(m, 2, m // 2, True), n)
    if n == 7 and effective == PiSet((2, 3)):
        row("Sym_3 x Sym_4", Descriptor(144, 4, 36, True), 35)
    if n == 8 and effective == PiSet((2, 3)):
        row("Sym_4 wr Sym_2", Descriptor(1152, 4, 288, True), 35)
    return rows


def _m11_rows(spec: GroupSpec, pi: PiSet) -> list[Expectation]:
    if spec.family is not Family.M11:
        raise UnsupportedGroupError("M11 rows need M11", context=str(spec))
    effective = _proper_with_two_three(spec, pi)
    if effective == PiSet((2, 3)):
        return [
            Expectation(
                Source.TABLE_2_M11,
                spec,
                effective,
                "3^2:Q8.2",
                Descriptor(144, 4, 36, True),
                sylow_normalizer=3,
            )
        ]
    if effective == PiSet((2, 3, 5)):
        return [
            Expectation(
                Source.TABLE_2_M11, spec, effective, "Alt_6.2", Descriptor(720, 2, 360, True)
            )
        ]
    return []


def _psl2_rows(spec: GroupSpec, pi: PiSet) -> list[Expectation]:
    if spec.family is not Family.PSL2 or spec.params[0] % 2 == 0:
        raise UnsupportedGroupError("Rows cover PSL2(q) with q odd", context=str(spec))
    q = spec.params[0]
    p = next(iter(factorint(q)))
    if p in pi:
        raise UnsupportedGroupError(f"Rows need the characteristic {p} outside pi", str(spec))
    effective = _proper_with_two_three(spec, pi)
    eps = epsilon(q)
    rows: list[Expectation] = []

    def row(label: str, descriptor: Descriptor) -> None:
        rows.append(Expectation(Source.TABLE_3, spec, effective, label, descriptor))

    if effective.issubset(prime_set(q - eps)):
        row(f"D_{q - eps}", _dihedral_descriptor(pi_part(classical_order(spec), effective)))
    if effective == PiSet((2, 3)):
        part = pi_part(q * q - 1, (2, 3))
        if part == 24:
            row("Alt_4", Descriptor(12, 3, 4))
        if part == 48:
            row("Sym_4", Descriptor(24, 2, 12))
    if effective == PiSet((2, 3, 5)) and pi_part(q * q - 1, (2, 3, 5)) == 120:
        row("Alt_5", Descriptor(60, 1, 60))
    return rows


def _sylow_two_normalizer_rows(spec: GroupSpec) -> list[Expectation]:
    n = classical_order(spec)
    two = PiSet((2,))

    def row(label: str, descriptor: Descriptor) -> list[Expectation]:
        return [Expectation(Source.LEMMA_12, spec, two, label, descriptor, sylow_normalizer=2)]

    self_normalizing = row("S", Descriptor(pi_part(n, two)))
    match spec.family:
        case Family.PSL2:
            q = spec.params[0]
            if q % 2 == 0:
                return row("Borel subgroup", Descriptor(q * (q - 1), q - 1, q))
            if q % 8 in (3, 5):
                return row("Alt_4", Descriptor(12, 3, 4))
            return self_normalizing
        case Family.ALTERNATING if spec.params[0] == 5:
            return row("Alt_4", Descriptor(12, 3, 4))
        case Family.ALTERNATING if spec.params[0] >= 6:
            return self_normalizing
        case Family.PSL3 | Family.M11:
            return self_normalizing
    raise UnsupportedGroupError("No Sylow 2-normalizer row for this group", context=str(spec))


def expectations(
    source: Source | str, spec: GroupSpec | str, pi: PiSet | None = None
) -> list[Expectation]:
    """Expected Hall subgroups (or Sylow 2-normalizers) of a catalog group.

    An empty list means no proper pi-Hall subgroup exists. For the
    ``lemma-12`` source ``pi`` is ignored and the single row describes
    ``N_G(S)`` for a Sylow 2-subgroup ``S``; a row labelled ``S`` means
    ``N_G(S) = S``.

    Raises:
        UnsupportedGroupError: If the combination is not covered by the rows.
    """
    source = Source(source)
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if source is Source.LEMMA_12:
        return _sylow_two_normalizer_rows(spec)
    if pi is None:
        raise UnsupportedGroupError(f"{source.value} rows need a prime set", context=str(spec))
    if source is Source.TABLE_1:
        return _symmetric_rows(spec, pi)
    if source is Source.TABLE_2_M11:
        return _m11_rows(spec, pi)
    return _psl2_rows(spec, pi)


CATALOG_SIMPLE: tuple[GroupSpec, ...] = (
    *(GroupSpec(Family.ALTERNATING, (n,)) for n in range(5, 9)),
    *(GroupSpec(Family.PSL2, (q,)) for q in PSL2_FIELDS),
    *(GroupSpec(Family.PSL3, (q,)) for q in PSL3_FIELDS),
    GroupSpec(Family.M11),
)

CATALOG: tuple[GroupSpec, ...] = (
    *(GroupSpec(Family.SYMMETRIC, (n,)) for n in range(3, MAX_SYMMETRIC + 1)),
    *CATALOG_SIMPLE,
    *(GroupSpec(Family.SL2, (q,)) for q in LINEAR2_FIELDS),
    *(GroupSpec(Family.GL2, (q,)) for q in LINEAR2_FIELDS),
    GroupSpec(Family.DIHEDRAL, (12,)),
    GroupSpec(Family.CYCLIC, (6,)),
    GroupSpec(Family.KLEIN),
    GroupSpec(Family.SYM_WR_SYM, (4, 2)),
)

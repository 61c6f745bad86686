"""Tests for the pronormality deciders and certificates."""

import dataclasses

import pytest

from pronorm import (
    ContainmentError,
    Method,
    NotHallError,
    PermGroup,
    Permutation,
    PiSet,
    Verdict,
    build,
    decide,
    decide_async,
    hall_subgroups,
    is_pronormal_definition,
    is_pronormal_reduced,
    is_pronormal_sylow_tower,
    normalizer,
    sylow,
    verify_certificate,
)
from pronorm.pronormality import are_conjugate_in, sylow_anchor


class TestDefinitionDecider:
    """Tests for the decider that follows the definition."""

    def test_involution_in_alt4(self, alt4: PermGroup, double_transposition: PermGroup) -> None:
        """Test <(0 1)(2 3)> is not pronormal in Alt_4."""
        cert = is_pronormal_definition(alt4, double_transposition)
        assert cert.verdict is Verdict.NOT_PRONORMAL
        assert cert.counterexample is not None
        assert verify_certificate(cert) == []

    def test_counterexample_is_genuine(
        self, alt4: PermGroup, double_transposition: PermGroup
    ) -> None:
        """Test H and H^g are not conjugate in their join, which is abelian."""
        cert = is_pronormal_definition(alt4, double_transposition)
        assert cert.counterexample is not None
        Hg = double_transposition.conjugate(cert.counterexample)
        J = double_transposition.join(Hg)
        assert J.order() == 4
        assert are_conjugate_in(J, double_transposition, Hg) is None

    def test_sylow_is_pronormal(self, sym5: PermGroup) -> None:
        """Test Sylow subgroups are pronormal."""
        cert = is_pronormal_definition(sym5, sylow(sym5, 2))
        assert cert.is_pronormal
        assert len(cert.tests) == 15
        assert verify_certificate(cert) == []

    def test_normal_subgroup(self, sym4: PermGroup, klein_in_s4: PermGroup) -> None:
        """Test a normal subgroup needs only the identity test."""
        cert = is_pronormal_definition(sym4, klein_in_s4)
        assert cert.is_pronormal
        assert cert.nontrivial_tests == 0

    def test_subnormal_not_normal(self, sym4: PermGroup, double_transposition: PermGroup) -> None:
        """Test a subnormal subgroup that is not normal is not pronormal."""
        assert not is_pronormal_definition(sym4, double_transposition).is_pronormal

    def test_maximal_subgroup(self, sym5: PermGroup) -> None:
        """Test the Hall {2,3}-subgroup Sym_4 of Sym_5."""
        (H,) = hall_subgroups(sym5, PiSet((2, 3))).class_reps
        assert is_pronormal_definition(sym5, H).is_pronormal

    def test_containment(self, alt4: PermGroup) -> None:
        """Test that a subgroup outside the group is refused."""
        with pytest.raises(ContainmentError):
            is_pronormal_definition(alt4, PermGroup([Permutation.parse("(0 1)", 4)], 4))


class TestReducedDecider:
    """Tests for the decider that only tests N_G(S)."""

    def test_agrees_on_psl2_7(self, psl2_7: PermGroup) -> None:
        """Test both deciders on the two Sym_4 classes of PSL2(7)."""
        for H in hall_subgroups(psl2_7, PiSet((2, 3))).class_reps:
            definition = is_pronormal_definition(psl2_7, H)
            reduced = is_pronormal_reduced(psl2_7, H, sylow(H, 2))
            assert reduced.verdict is definition.verdict is Verdict.PRONORMAL
            assert len(reduced.tests) <= len(definition.tests)
            assert verify_certificate(reduced) == []

    def test_sym7_test_count(self) -> None:
        """Test the reduced decider runs |N_G(S) : N_H(S)| tests on Sym_3 x Sym_4 in Sym_7."""
        G = build("sym:7")
        (H,) = hall_subgroups(G, PiSet((2, 3))).class_reps
        S = sylow(H, 2)
        cert = is_pronormal_reduced(G, H, S)
        assert cert.is_pronormal
        assert len(cert.tests) == normalizer(G, S).order() // normalizer(H, S).order()

    def test_anchor_must_lie_in_subject(self, sym4: PermGroup) -> None:
        """Test that the anchor has to be inside H."""
        H = sylow(sym4, 3)
        with pytest.raises(ContainmentError):
            is_pronormal_reduced(sym4, H, sylow(sym4, 2))

    def test_sylow_anchor(self, sym5: PermGroup) -> None:
        """Test the default anchor is a Sylow subgroup of G inside H."""
        (H,) = hall_subgroups(sym5, PiSet((2, 3))).class_reps
        S = sylow_anchor(sym5, H)
        assert S.is_subgroup_of(H)
        assert S.order() == 8


class TestSylowTower:
    """Tests for Hall subgroups with a Sylow series."""

    def test_sylow_two_subgroup(self, sym4: PermGroup) -> None:
        """Test a 2-group Hall subgroup has complexion (2)."""
        cert = is_pronormal_sylow_tower(sym4, sylow(sym4, 2))
        assert cert is not None
        assert cert.is_pronormal
        assert cert.complexion is not None and cert.complexion.primes == (2,)

    def test_alt4_in_alt5(self, alt5: PermGroup) -> None:
        """Test the Hall {2,3}-subgroup Alt_4 of Alt_5 with complexion (3,2)."""
        (H,) = hall_subgroups(alt5, PiSet((2, 3))).class_reps
        cert = is_pronormal_sylow_tower(alt5, H)
        assert cert is not None and cert.is_pronormal
        assert cert.complexion is not None and cert.complexion.primes == (3, 2)
        assert all(t.witness is not None for t in cert.tests)

    def test_sym4_in_sym5(self, sym5: PermGroup) -> None:
        """Test the Hall {2,3}-subgroup Sym_4 of Sym_5.

        Sym_4 has no normal subgroup of index 3 or 8, so it has no Sylow series
        and the definition decider settles it with a witness for every test.
        """
        (H,) = hall_subgroups(sym5, PiSet((2, 3))).class_reps
        assert is_pronormal_sylow_tower(sym5, H) is None
        cert = is_pronormal_definition(sym5, H)
        assert cert.is_pronormal
        assert len(cert.tests) == 5
        assert all(t.witness is not None for t in cert.tests)

    def test_no_series(self, psl2_7: PermGroup) -> None:
        """Test that Sym_4 has no Sylow series."""
        H = hall_subgroups(psl2_7, PiSet((2, 3))).class_reps[0]
        assert is_pronormal_sylow_tower(psl2_7, H) is None

    def test_not_hall(self, sym4: PermGroup) -> None:
        """Test that non-Hall subgroups are refused."""
        with pytest.raises(NotHallError):
            is_pronormal_sylow_tower(sym4, PermGroup([Permutation.parse("(0 1)", 4)], 4))


class TestCertificates:
    """Tests for certificate re-verification."""

    def test_flipped_verdict_is_caught(
        self, alt4: PermGroup, double_transposition: PermGroup
    ) -> None:
        """Test that a forged pronormal verdict fails re-verification."""
        cert = is_pronormal_definition(alt4, double_transposition)
        forged = dataclasses.replace(cert, verdict=Verdict.PRONORMAL)
        assert verify_certificate(forged)

    def test_wrong_join_order_is_caught(self, sym5: PermGroup) -> None:
        """Test that a tampered join order is reported."""
        cert = is_pronormal_definition(sym5, sylow(sym5, 3))
        test = cert.tests[-1]
        tampered = dataclasses.replace(test, join_order=test.join_order + 1)
        forged = dataclasses.replace(cert, tests=[*cert.tests[:-1], tampered])
        assert any("join order" in problem for problem in verify_certificate(forged))

    def test_missing_test_is_caught(self, sym5: PermGroup) -> None:
        """Test that dropping a conjugator breaks a definition certificate."""
        cert = is_pronormal_definition(sym5, sylow(sym5, 3))
        forged = dataclasses.replace(cert, tests=cert.tests[:-1])
        assert verify_certificate(forged)


class TestDispatch:
    """Tests for decide and decide_async."""

    def test_decide_methods(self, sym4: PermGroup) -> None:
        """Test every method through the dispatcher."""
        S = sylow(sym4, 2)
        for method in Method:
            cert = decide(sym4, S, method)
            assert cert is not None
            assert cert.method is method
            assert cert.is_pronormal

    async def test_decide_async(self, alt4: PermGroup, double_transposition: PermGroup) -> None:
        """Test the executor wrapper returns the same verdict."""
        cert = await decide_async(alt4, double_transposition, "definition")
        assert cert is not None
        assert cert.verdict is Verdict.NOT_PRONORMAL

    def test_m11_hall_reduced(self) -> None:
        """Test the reduced decider on the Hall {2,3}-subgroup of M11."""
        M11 = build("m11")
        (H,) = hall_subgroups(M11, PiSet((2, 3))).class_reps
        cert = decide(M11, H, Method.REDUCED)
        assert cert is not None
        assert cert.is_pronormal

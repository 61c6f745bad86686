"""Tests for Sylow and Hall subgroup search."""

import pytest

from pronorm import (
    EngineConfig,
    ExhaustiveBoundError,
    PermGroup,
    PiSet,
    SearchMode,
    Source,
    build,
    classify_pi_properties,
    expectations,
    fingerprint,
    hall_subgroups,
    is_pi_separable,
    sylow,
    sylow_complexion,
)
from pronorm.atlas import is_maximal
from pronorm.hall import (
    largest_normal_pi_subgroup,
    pi_subgroup_classes,
    subgroup_classes,
    sylow_conjugates,
)
from pronorm.perm import parse_permutations


class TestSylow:
    """Tests for Sylow subgroups."""

    def test_orders(self, sym4: PermGroup, psl2_7: PermGroup) -> None:
        """Test Sylow orders are the full prime parts."""
        assert sylow(sym4, 2).order() == 8
        assert sylow(sym4, 3).order() == 3
        assert sylow(psl2_7, 7).order() == 7
        assert sylow(build("m11"), 3).order() == 9

    def test_prime_not_dividing(self, sym4: PermGroup) -> None:
        """Test that a prime not dividing |G| gives the trivial group."""
        assert sylow(sym4, 5).order() == 1

    def test_deterministic(self, psl2_7: PermGroup) -> None:
        """Test that the same seed gives the same Sylow subgroup."""
        first = sylow(psl2_7, 2, EngineConfig(seed=5))
        second = sylow(psl2_7, 2, EngineConfig(seed=5))
        assert first.element_key() == second.element_key()


class TestSubgroupEnumeration:
    """Tests for the exhaustive oracle."""

    def test_two_subgroups_of_sym4(self, sym4: PermGroup) -> None:
        """Test the seven classes of 2-subgroups of Sym_4."""
        classes = pi_subgroup_classes(sym4, PiSet((2,)))
        assert sorted(K.order() for K in classes.reps) == [1, 2, 2, 4, 4, 4, 8]

    def test_all_subgroups(self, sym4: PermGroup, alt5: PermGroup) -> None:
        """Test the numbers of subgroup classes of Sym_4 and Alt_5."""
        assert len(subgroup_classes(sym4)) == 11
        assert len(subgroup_classes(alt5)) == 9

    def test_bound(self) -> None:
        """Test that the oracle refuses groups above the bound."""
        with pytest.raises(ExhaustiveBoundError):
            pi_subgroup_classes(build("sym:7"), PiSet((2, 3)))


class TestHallSubgroups:
    """Tests for hall_subgroups."""

    def test_sym5(self, sym5: PermGroup) -> None:
        """Test Sym_5 with pi = {2,3}: one class of Sym_4, D_pi fails."""
        result = hall_subgroups(sym5, PiSet((2, 3)))
        assert result.search_mode is SearchMode.EXHAUSTIVE
        assert result.orders == [24]
        assert result.class_sizes == [5]
        assert result.satisfies_E and result.satisfies_C
        assert result.satisfies_D is False
        assert result.d_pi_exact

    def test_psl2_7_two_classes(self, psl2_7: PermGroup) -> None:
        """Test PSL2(7) with pi = {2,3}: two classes of Sym_4."""
        result = hall_subgroups(psl2_7, PiSet((2, 3)))
        assert result.orders == [24, 24]
        assert result.class_sizes == [7, 7]
        assert result.satisfies_E
        assert not result.satisfies_C
        assert all(fingerprint(H).derived == 12 for H in result.class_reps)

    def test_psl2_7_other_sets(self, psl2_7: PermGroup) -> None:
        """Test {3,7} has the Borel subgroup and {2,7} has nothing."""
        assert hall_subgroups(psl2_7, PiSet((3, 7))).orders == [21]
        none = hall_subgroups(psl2_7, PiSet((2, 7)))
        assert none.class_reps == []
        assert not none.satisfies_E

    def test_psl2_11_orders(self) -> None:
        """Test PSL2(11) with pi = {2,3}: Alt_4 and dihedral classes of order 12."""
        result = hall_subgroups(build("psl2:11"), PiSet((2, 3)), SearchMode.EXHAUSTIVE)
        assert result.orders and all(order == 12 for order in result.orders)
        derived = {fingerprint(H).derived for H in result.class_reps}
        assert derived == {3, 4}

    def test_seeded_matches_exhaustive(self, psl2_7: PermGroup) -> None:
        """Test the two search modes agree on PSL2(7)."""
        pi = PiSet((2, 3))
        seeded = hall_subgroups(psl2_7, pi, SearchMode.SEEDED)
        exhaustive = hall_subgroups(psl2_7, pi, SearchMode.EXHAUSTIVE)
        assert seeded.satisfies_D is None
        assert sorted(map(fingerprint, seeded.class_reps)) == sorted(
            map(fingerprint, exhaustive.class_reps)
        )

    def test_single_prime_is_sylow(self) -> None:
        """Test that a one-prime set gives the Sylow subgroup."""
        result = hall_subgroups(build("dih:12"), PiSet((2,)))
        assert result.orders == [4]
        assert result.satisfies_D is True

    def test_improper_sets(self, sym4: PermGroup) -> None:
        """Test the empty set and the full prime set."""
        assert hall_subgroups(sym4, PiSet()).orders == [1]
        assert hall_subgroups(sym4, PiSet((2, 3, 5))).orders == [24]

    def test_exhaustive_bound(self) -> None:
        """Test exhaustive mode on M11 is refused."""
        with pytest.raises(ExhaustiveBoundError):
            hall_subgroups(build("m11"), PiSet((2, 3)), SearchMode.EXHAUSTIVE)

    def test_default_mode_for_large_groups(self) -> None:
        """Test that large groups default to seeded search."""
        result = hall_subgroups(build("sym:7"), PiSet((2, 3)))
        assert result.search_mode is SearchMode.SEEDED
        assert result.orders == [144]

    def test_seeded_d_pi_finds_uncovered_subgroup(self, sym5: PermGroup) -> None:
        """Test seeded D_pi on Sym_5 finds a {2,3}-subgroup moving every point."""
        result = classify_pi_properties(sym5, PiSet((2, 3)), SearchMode.SEEDED)
        assert result.satisfies_D is False
        assert not result.d_pi_exact
        S = PermGroup(parse_permutations("(0 1 2), (0 1)(3 4)", 5), 5)
        assert S.order() == 6
        assert not any(S.is_subgroup_of(H) for H in sylow_conjugates(sym5, result.class_reps[0]))

    @pytest.mark.parametrize("text", ["sym:5", "alt:5", "dih:30", "psl2:7"])
    def test_seeded_d_pi_matches_exhaustive(self, text: str) -> None:
        """Test the two-generated D_pi check agrees with the exhaustive one."""
        G = build(text)
        seeded = classify_pi_properties(G, PiSet((2, 3)), SearchMode.SEEDED)
        exhaustive = classify_pi_properties(G, PiSet((2, 3)), SearchMode.EXHAUSTIVE)
        assert seeded.satisfies_D is exhaustive.satisfies_D
        assert exhaustive.d_pi_exact and not seeded.d_pi_exact

    def test_seeded_d_pi_holds_for_solvable(self) -> None:
        """Test D_30 with pi = {2,3}: every {2,3}-subgroup lies in a Sym_3."""
        result = classify_pi_properties(build("dih:30"), PiSet((2, 3)), SearchMode.SEEDED)
        assert result.orders == [6]
        assert result.satisfies_D is True

    def test_seeded_run_matches_atlas_row(self) -> None:
        """Test a seeded Sym_7 run reports complete and matches its expected row."""
        G = build("sym:7")
        result = hall_subgroups(G, PiSet((2, 3)), SearchMode.SEEDED)
        (row,) = expectations(Source.TABLE_1, "sym:7", PiSet((2, 3)))
        assert result.complete
        assert len(result.class_reps) == row.class_count
        (H,) = result.class_reps
        assert H.order() == row.order
        assert G.order() // H.order() == row.index
        assert row.descriptor.matches(fingerprint(H), is_maximal(G, H))


class TestNormalStructure:
    """Tests for O_pi, pi-separability and Sylow series."""

    def test_largest_normal_pi_subgroup(self, sym4: PermGroup) -> None:
        """Test O_2(Sym_4) = V_4 and O_3(Sym_4) = 1."""
        assert largest_normal_pi_subgroup(sym4, PiSet((2,))).order() == 4
        assert largest_normal_pi_subgroup(sym4, PiSet((3,))).order() == 1

    def test_pi_separable(self, sym4: PermGroup, alt5: PermGroup) -> None:
        """Test that solvable groups are pi-separable and Alt_5 is not."""
        separable, series = is_pi_separable(sym4, PiSet((2,)))
        assert separable
        assert series[0].order() == 24 and series[-1].order() == 1
        assert is_pi_separable(alt5, PiSet((2, 3))) == (False, [])
        assert not is_pi_separable(alt5, PiSet((5,)))[0]

    def test_sylow_complexions(self, sym3: PermGroup, alt4: PermGroup, sym4: PermGroup) -> None:
        """Test the Sylow series of Sym_3 and Alt_4, and that Sym_4 has none."""
        assert sylow_complexion(sym3).primes == (2, 3)
        assert sylow_complexion(alt4).primes == (3, 2)
        assert sylow_complexion(sym4) is None

    def test_complexion_text(self, sym3: PermGroup) -> None:
        """Test printing a complexion."""
        assert str(sylow_complexion(sym3)) == "(2,3)"

"""Tests for the group catalog and the expected Hall rows."""

import pytest

from pronorm import (
    CATALOG,
    Family,
    GroupSpec,
    ParseError,
    PermGroup,
    PiSet,
    PronormError,
    Source,
    UnsupportedGroupError,
    build,
    classical_order,
    epsilon,
    expectations,
    fingerprint,
    hall_subgroups,
    parse_group_spec,
    sylow,
)
from pronorm.atlas import is_maximal
from pronorm.groups import is_simple, transitivity_degree


class TestGroupSpec:
    """Tests for group spec parsing."""

    def test_parse_forms(self) -> None:
        """Test the short and long spellings."""
        assert parse_group_spec("sym:8") == GroupSpec(Family.SYMMETRIC, (8,))
        assert parse_group_spec("symmetric(8)") == GroupSpec(Family.SYMMETRIC, (8,))
        assert parse_group_spec(" PSL2:11 ") == GroupSpec(Family.PSL2, (11,))
        assert parse_group_spec("wr:4,2").params == (4, 2)
        assert GroupSpec.parse("m11").family is Family.M11

    def test_text_and_labels(self) -> None:
        """Test canonical text and conventional names."""
        assert str(parse_group_spec("symmetric(8)")) == "sym:8"
        assert parse_group_spec("sym:8").label == "Sym_8"
        assert parse_group_spec("psl2:11").label == "PSL2(11)"
        assert parse_group_spec("wr:4,2").label == "Sym_4 wr Sym_2"
        assert parse_group_spec("m11").label == "M11"

    @pytest.mark.parametrize("text", ["foo:3", "sym:x", "", "sym:3:4"])
    def test_parse_errors(self, text: str) -> None:
        """Test text that does not name a family."""
        with pytest.raises(ParseError):
            parse_group_spec(text)

    @pytest.mark.parametrize("text", ["sym:11", "psl2:6", "dih:7", "m11:3", "wr:4,4", "gl2:4"])
    def test_out_of_range(self, text: str) -> None:
        """Test parameters without a builder."""
        with pytest.raises(UnsupportedGroupError):
            parse_group_spec(text)

    def test_catalog_specs_are_valid(self) -> None:
        """Test every catalog entry round-trips through its text."""
        for spec in CATALOG:
            assert parse_group_spec(str(spec)) == spec


class TestBuilders:
    """Tests for the permutation representations."""

    def test_psl2_7(self, psl2_7: PermGroup) -> None:
        """Test PSL2(7) on the projective line."""
        assert psl2_7.degree == 8
        assert psl2_7.order() == 168
        assert is_simple(psl2_7)

    def test_psl2_even_characteristic(self) -> None:
        """Test PSL2(8) is simple of order 504."""
        G = build("psl2:8")
        assert G.order() == 504
        assert is_simple(G)

    def test_m11(self) -> None:
        """Test M11 is sharply 4-transitive of order 7920."""
        G = build("m11")
        assert G.order() == 7920
        assert transitivity_degree(G) == 4

    @pytest.mark.parametrize(
        ("text", "order"),
        [("psl3:3", 5616), ("sl2:3", 24), ("gl2:3", 48), ("wr:4,2", 1152), ("alt:8", 20160)],
    )
    def test_classical_orders(self, text: str, order: int) -> None:
        """Test the order formulas."""
        assert classical_order(parse_group_spec(text)) == order

    @pytest.mark.parametrize("text", ["sl2:3", "gl2:5", "psl3:2", "wr:3,2", "cyc:12", "klein"])
    def test_built_orders(self, text: str) -> None:
        """Test the builders reach the formula orders."""
        assert build(text).order() == classical_order(parse_group_spec(text))

    def test_epsilon(self) -> None:
        """Test epsilon(q) for odd q."""
        assert epsilon(5) == 1
        assert epsilon(7) == -1
        assert epsilon(13) == 1
        with pytest.raises(PronormError):
            epsilon(4)


class TestFingerprints:
    """Tests for fingerprints and maximality."""

    def test_groups_of_order_twelve(self) -> None:
        """Test Alt_4, D_12 and C_12 get different fingerprints."""
        prints = {fingerprint(build(text)) for text in ("alt:4", "dih:12", "cyc:12")}
        assert len(prints) == 3

    def test_alt4_fingerprint(self, alt4: PermGroup) -> None:
        """Test the invariants of Alt_4."""
        fp = fingerprint(alt4)
        assert (fp.order, fp.derived, fp.abelianization, fp.exponent) == (12, 4, 3, 6)
        assert fp.solvable and not fp.nilpotent

    def test_is_maximal(self, sym4: PermGroup, sym5: PermGroup) -> None:
        """Test maximality of Sym_4 in Sym_5 and of C_3 in Sym_4."""
        (H,) = hall_subgroups(sym5, PiSet((2, 3))).class_reps
        assert is_maximal(sym5, H)
        assert not is_maximal(sym4, sylow(sym4, 3))
        assert not is_maximal(sym4, sym4)


class TestExpectations:
    """Tests for the expected rows."""

    def test_sym7(self) -> None:
        """Test Sym_7 with pi = {2,3} has one row, Sym_3 x Sym_4."""
        (row,) = expectations(Source.TABLE_1, "sym:7", PiSet((2, 3)))
        assert row.order == 144
        assert row.index == 35
        assert row.class_count == 1

    def test_sym_prime_degree(self) -> None:
        """Test Sym_5 has the point stabilizer as Hall {2,3}-subgroup."""
        (row,) = expectations("table-1", "sym:5", PiSet((2, 3)))
        assert row.label == "Sym_4"
        assert (row.order, row.index) == (24, 5)
        assert row.descriptor.maximal

    def test_sym_without_rows(self) -> None:
        """Test Sym_6 has no proper Hall {2,3}-subgroup."""
        assert expectations(Source.TABLE_1, "sym:6", PiSet((2, 3))) == []

    def test_psl2_rows(self) -> None:
        """Test the rows for PSL2(7) and PSL2(11)."""
        assert [r.label for r in expectations("table-3", "psl2:7", PiSet((2, 3)))] == ["Sym_4"]
        rows = expectations("table-3", "psl2:11", PiSet((2, 3)))
        assert [r.label for r in rows] == ["D_12", "Alt_4"]
        assert all(r.order == 12 for r in rows)

    def test_psl2_13(self) -> None:
        """Test the Alt_4 row for q = 13, where (q^2 - 1) has {2,3}-part 24."""
        labels = [r.label for r in expectations("table-3", "psl2:13", PiSet((2, 3)))]
        assert "Alt_4" in labels

    def test_symmetric_eight(self) -> None:
        """Test Sym_8 with pi = {2,3} expects the maximal Sym_4 wr Sym_2."""
        (row,) = expectations("table-1", "sym:8", PiSet((2, 3)))
        assert (row.order, row.descriptor.maximal) == (1152, True)

    def test_m11_rows(self) -> None:
        """Test the M11 rows."""
        (row,) = expectations("table-2-m11", "m11", PiSet((2, 3)))
        assert row.order == 144
        assert row.sylow_normalizer == 3
        assert expectations("table-2-m11", "m11", PiSet((2, 3, 5)))[0].order == 720

    def test_sylow_two_normalizers(self) -> None:
        """Test the Sylow 2-normalizer rows."""
        assert expectations(Source.LEMMA_12, "psl2:13")[0].label == "Alt_4"
        assert expectations(Source.LEMMA_12, "psl2:9")[0].label == "S"
        assert expectations(Source.LEMMA_12, "psl2:11")[0].order == 12
        assert expectations(Source.LEMMA_12, "psl2:8")[0].order == 56
        assert expectations(Source.LEMMA_12, "alt:5")[0].label == "Alt_4"
        assert expectations(Source.LEMMA_12, "psl2:7")[0].label == "S"

    @pytest.mark.parametrize(
        ("source", "text", "primes"),
        [
            ("table-1", "sym:5", (2, 5)),
            ("table-1", "sym:5", (2, 3, 5)),
            ("table-1", "psl2:7", (2, 3)),
            ("table-3", "psl2:7", (2, 3, 7)),
            ("table-3", "psl2:8", (2, 3)),
        ],
    )
    def test_uncovered(self, source: str, text: str, primes: tuple[int, ...]) -> None:
        """Test combinations the rows do not cover."""
        with pytest.raises(UnsupportedGroupError):
            expectations(source, text, PiSet(primes))

    def test_prime_set_required(self) -> None:
        """Test Hall rows need a prime set."""
        with pytest.raises(UnsupportedGroupError):
            expectations(Source.TABLE_1, "sym:5")

    def test_descriptor_matches_hall_subgroup(self, sym5: PermGroup) -> None:
        """Test the Sym_5 row matches the subgroup found by search."""
        (row,) = expectations(Source.TABLE_1, "sym:5", PiSet((2, 3)))
        (H,) = hall_subgroups(sym5, PiSet((2, 3))).class_reps
        assert row.descriptor.matches(fingerprint(H), is_maximal(sym5, H))

"""Tests for utility functions."""

from pathlib import Path

import pytest

from pronorm import Permutation, Report
from pronorm.models import PhaseTiming
from pronorm.utils import (
    format_generators,
    format_seconds,
    format_timings,
    load_report,
    report_json,
    save_report,
)

LONG_CYCLE = Permutation.parse("(0 1 2 3 4 5 6 7 8 9)", 10)


class TestFormatTimings:
    """Tests for phase timing text."""

    @pytest.mark.parametrize(
        ("seconds", "text"),
        [
            (0.0042, "4 ms"),
            (0.5, "500 ms"),
            (12.5, "12.50 s"),
            (90, "90.00 s"),
            (754, "12m34s"),
            (5400, "90m00s"),
        ],
    )
    def test_units(self, seconds: float, text: str) -> None:
        """Test each unit boundary."""
        assert format_seconds(seconds) == text

    def test_total_last(self) -> None:
        """Test the total comes after the phases."""
        timings = [
            PhaseTiming(phase="total", seconds=1.5),
            PhaseTiming(phase="build", seconds=0.004),
            PhaseTiming(phase="hall search", seconds=1.25),
        ]
        assert format_timings(timings) == "build 4 ms, hall search 1.25 s, total 1.50 s"


class TestFormatGenerators:
    """Tests for generator lists in cycle notation."""

    def test_short_list(self) -> None:
        """Test a list that fits is printed whole."""
        gens = [Permutation.parse("(0 1 2)", 5), Permutation.parse("(3 4)", 5)]
        assert format_generators(gens) == "(0 1 2), (3 4)"

    def test_trivial_group(self) -> None:
        """Test the trivial group has the identity as its text."""
        assert format_generators([]) == "()"

    def test_cut_at_whole_generator(self) -> None:
        """Test a long list keeps whole generators and counts the rest."""
        text = format_generators([LONG_CYCLE] * 6, limit=50)
        assert text == "(0 1 2 3 4 5 6 7 8 9) +5 more"
        assert len(text) <= 50

    def test_nothing_fits(self) -> None:
        """Test a limit below one generator reports the count."""
        assert format_generators([LONG_CYCLE] * 2, limit=10) == "2 generators"


class TestReportFiles:
    """Tests for saving and loading reports."""

    def test_save_and_load(self, tmp_path: Path) -> None:
        """Test a saved report loads back unchanged."""
        report = Report(command="hall sym:5 --pi 2,3", engine_version="0.1.0", seed=7)
        path = tmp_path / "report.json"
        save_report(report, path)
        assert path.read_text(encoding="utf-8").endswith("}\n")
        assert load_report(path) == report

    def test_json_layout(self) -> None:
        """Test the document is indented and keeps field order."""
        text = report_json(Report(command="c", engine_version="0.1.0", seed=1))
        assert text.startswith('{\n  "command": "c",\n  "engine_version": "0.1.0"')

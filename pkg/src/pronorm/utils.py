"""Utility functions for pronorm."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .models import PhaseTiming, Report
    from .perm import Permutation


def save_report(report: Report, filepath: str | Path) -> None:
    """Save a report as its structured JSON document.

    Args:
        report: The report to save.
        filepath: Path to save the file to.
    """
    Path(filepath).write_text(report_json(report) + "\n", encoding="utf-8")


def report_json(report: Report) -> str:
    """The structured document: UTF-8 JSON, fields in declaration order, indent 2."""
    return report.model_dump_json(indent=2)


def load_report(filepath: str | Path) -> Report:
    from .models import Report

    return Report.model_validate_json(Path(filepath).read_text(encoding="utf-8"))


def format_seconds(seconds: float) -> str:
    """A phase time: milliseconds below a second, then seconds, then minutes and seconds."""
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 600:
        return f"{seconds:.2f} s"
    minutes, rest = divmod(round(seconds), 60)
    return f"{minutes}m{rest:02d}s"


def format_timings(timings: Iterable[PhaseTiming]) -> str:
    """Phase timings on one line, ``total`` last."""
    ordered = sorted(timings, key=lambda t: t.phase == "total")
    return ", ".join(f"{t.phase} {format_seconds(t.seconds)}" for t in ordered)


def format_generators(generators: Sequence[Permutation], limit: int = 70) -> str:
    """Generators in cycle notation, cut at a whole generator.

    Generators that do not fit in ``limit`` characters are counted instead,
    as in ``"(0 1 2), (3 4) +2 more"``.
    """
    texts = [str(g) for g in generators]
    if not texts:
        return "()"
    full = ", ".join(texts)
    if len(full) <= limit:
        return full
    kept: list[str] = []
    for text in texts:
        rest = len(texts) - len(kept) - 1
        candidate = ", ".join([*kept, text]) + f" +{rest} more"
        if len(candidate) > limit:
            break
        kept.append(text)
    if not kept:
        return f"{len(texts)} generators"
    return ", ".join(kept) + f" +{len(texts) - len(kept)} more"

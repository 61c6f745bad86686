"""Command-line interface for pronorm."""

import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from typing import Annotated, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table
from sympy import isprime

from . import __version__
from ._config import DEFAULT_SEED, EngineConfig, use_config
from .arith import PiSet
from .atlas import (
    CATALOG,
    Family,
    GroupSpec,
    Source,
    build,
    classical_order,
    expectations,
    fingerprint,
    parse_group_spec,
)
from .exceptions import (
    ContainmentError,
    ExhaustiveBoundError,
    OrderBoundExceeded,
    ParseError,
    PronormError,
    UnsupportedGroupError,
)
from .groups import PermGroup, is_simple, is_solvable, transitivity_degree
from .hall import HallClassification, SearchMode, classify_pi_properties, hall_subgroups, sylow
from .models import (
    CertificateRecord,
    CheckOutcome,
    ExpectationRecord,
    GroupSummary,
    HallClassificationRecord,
    PhaseTiming,
    Report,
)
from .perm import parse_permutations
from .pronormality import Method, PronormalityCertificate, decide, sylow_anchor, verify_certificate
from .utils import format_generators, format_timings, report_json, save_report
from .verify import Suite, run_suite

app = typer.Typer(
    name="pronorm",
    help="Hall subgroups and pronormality in finite permutation groups.",
    no_args_is_help=True,
)
console = Console()

# Exit code for refused input; other engine errors exit with 1.
EXIT_INPUT = 2


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


class MethodChoice(str, Enum):
    DEFINITION = "definition"
    REDUCED = "reduced"
    TOWER = "tower"
    BOTH = "both"


SeedOption = Annotated[int, typer.Option("--seed", help="Seed for every randomized step")]
MaxOrderOption = Annotated[
    int, typer.Option("--max-order", help="Refuse groups of larger order")
]
FormatOption = Annotated[
    OutputFormat, typer.Option("--format", "-f", help="text or structured (JSON)")
]
SaveOption = Annotated[
    Optional[str], typer.Option("--save", "-s", help="Save the structured report to a file")
]


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"pronorm version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        bool,
        typer.Option("--version", "-v", callback=version_callback, is_eager=True),
    ] = False,
    verbose: Annotated[
        bool,
        typer.Option("--verbose", "-V", help="Log engine progress to stderr"),
    ] = False,
    quiet: Annotated[
        bool,
        typer.Option("--quiet", "-q", help="Suppress text output; report through the exit code"),
    ] = False,
) -> None:
    """pronorm - Hall subgroups and pronormality in finite permutation groups."""
    console.quiet = quiet
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(message)s",
            handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
            force=True,
        )


# -- shared plumbing ---------------------------------------------------------------


@contextmanager
def _engine_errors() -> Iterator[None]:
    """Turn engine errors into exit codes: 2 for refused input, 1 otherwise."""
    try:
        yield
    except (UnsupportedGroupError, ParseError, OrderBoundExceeded, ExhaustiveBoundError) as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(EXIT_INPUT)
    except PronormError as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(1)


def _parse_spec(text: str, max_order: int) -> GroupSpec:
    spec = parse_group_spec(text)
    order = classical_order(spec)
    if order > max_order:
        raise OrderBoundExceeded(
            f"{spec.label} has order {order}, above --max-order {max_order}", bound=max_order
        )
    return spec


def _new_report(command: str, seed: int, group: str | None = None, pi: str | None = None) -> Report:
    return Report(command=command, engine_version=__version__, seed=seed, group=group, pi=pi)


def _finish(report: Report, fmt: OutputFormat, save: Optional[str]) -> None:
    if fmt is OutputFormat.STRUCTURED:
        typer.echo(report_json(report))
    else:
        _print_checks(report)
        if report.timings:
            console.print(f"[dim]Timings: {format_timings(report.timings)}[/dim]")
    if save:
        save_report(report, save)
        if fmt is OutputFormat.TEXT:
            console.print(f"Saved to: [cyan]{save}[/cyan]")
    if not report.passed:
        raise typer.Exit(1)


def _print_checks(report: Report) -> None:
    if not report.checks:
        return
    failed = [c for c in report.checks if not c.passed]
    shown = failed or report.checks
    table = Table(title=f"{len(report.checks)} checks, {len(failed)} failed")
    table.add_column("Check")
    table.add_column("Result")
    table.add_column("Expected", max_width=60, overflow="ellipsis", no_wrap=True)
    table.add_column("Found", max_width=60, overflow="ellipsis", no_wrap=True)
    for check in shown[:40]:
        table.add_row(
            check.name,
            "[green]pass[/green]" if check.passed else "[red]FAIL[/red]",
            check.expected,
            check.found,
        )
    console.print(table)
    if len(shown) > 40:
        console.print(f"  ... and {len(shown) - 40} more")


def _add_check(
    report: Report, name: str, passed: bool, expected: str = "", found: str = ""
) -> None:
    report.checks.append(CheckOutcome(name=name, passed=passed, expected=expected, found=found))
    report.passed = report.passed and passed


def _print_classification(result: HallClassification) -> None:
    G = result.ambient
    table = Table(title=f"{result.pi}-Hall subgroups of {G.name or 'G'} (order {G.order()})")
    table.add_column("#", justify="right")
    table.add_column("Order", justify="right")
    table.add_column("Class size", justify="right")
    table.add_column("Derived", justify="right")
    table.add_column("Abelianization", justify="right")
    table.add_column("Generators")
    sizes = result.class_sizes or [0] * len(result.class_reps)
    for i, (H, size) in enumerate(zip(result.class_reps, sizes), 1):
        fp = fingerprint(H)
        table.add_row(
            str(i),
            str(H.order()),
            str(size),
            str(fp.derived),
            str(fp.abelianization),
            format_generators(H.generators),
        )
    console.print(table)
    d_flag = "not computed" if result.satisfies_D is None else str(result.satisfies_D)
    if result.satisfies_D is not None and not result.d_pi_exact:
        d_flag += " (two-generated pi-subgroups)"
    console.print(
        f"  E: {result.satisfies_E}  C: {result.satisfies_C}  D: {d_flag}  "
        f"mode: {result.search_mode.value}  complete: {result.complete}"
    )


# -- commands ------------------------------------------------------------------------


@app.command()
def hall(
    group: Annotated[str, typer.Argument(help="Group spec, e.g. sym:7, psl2:11, m11")],
    pi: Annotated[str, typer.Option("--pi", help="Prime set, e.g. 2,3")],
    mode: Annotated[
        Optional[SearchMode],
        typer.Option("--mode", help="exhaustive or seeded (default: by group order)"),
    ] = None,
    seed: SeedOption = DEFAULT_SEED,
    max_order: MaxOrderOption = 100_000,
    fmt: FormatOption = OutputFormat.TEXT,
    save: SaveOption = None,
) -> None:
    """Classify the pi-Hall subgroups of a catalog group up to conjugacy.

    Examples:
        pronorm hall sym:7 --pi 2,3
        pronorm hall psl2:11 --pi 2,3 --mode exhaustive
    """
    command = f"hall {group} --pi {pi}" + (f" --mode {mode.value}" if mode else "")
    config = EngineConfig(seed=seed, max_order=max_order)
    with _engine_errors(), use_config(config):
        spec = _parse_spec(group, max_order)
        primes = PiSet.parse(pi)
        report = _new_report(command, seed, str(spec), str(primes))
        start = time.perf_counter()
        G = build(spec, config)
        built = time.perf_counter()
        result = classify_pi_properties(G, primes, mode, config)
        done = time.perf_counter()
        report.classifications.append(HallClassificationRecord.from_classification(result))
        try:
            rows = expectations(_source_for(spec), spec, primes)
        except UnsupportedGroupError:
            rows = []
        report.expectations.extend(ExpectationRecord.from_expectation(r) for r in rows)
        report.timings = [
            PhaseTiming(phase="build", seconds=built - start),
            PhaseTiming(phase="hall search", seconds=done - built),
        ]
    if fmt is OutputFormat.TEXT:
        _print_classification(result)
    _finish(report, fmt, save)


def _source_for(spec: GroupSpec) -> Source:
    match spec.family:
        case Family.SYMMETRIC:
            return Source.TABLE_1
        case Family.M11:
            return Source.TABLE_2_M11
        case Family.PSL2:
            return Source.TABLE_3
        case _:
            raise UnsupportedGroupError("No expectation rows", context=str(spec))


def resolve_subgroup(G: PermGroup, selector: str, config: EngineConfig) -> PermGroup:
    """Turn ``hall:2,3``, ``sylow:2`` or ``gens:(0 1)(2 3)`` into a subgroup of ``G``.

    Raises:
        ParseError: If the selector is malformed or resolves to nothing.
        ContainmentError: If explicit generators leave ``G``.
    """
    kind, sep, rest = selector.partition(":")
    if not sep:
        raise ParseError(
            f"Bad subgroup selector {selector!r}", context="hall:pi, sylow:p, gens:..."
        )
    match kind.strip().lower():
        case "hall":
            found = hall_subgroups(G, PiSet.parse(rest), config=config)
            if not found.class_reps:
                raise ParseError(f"{G.name} has no {found.pi}-Hall subgroup", context=selector)
            return found.class_reps[0]
        case "sylow":
            try:
                p = int(rest)
            except ValueError as e:
                raise ParseError(f"Bad prime in {selector!r}") from e
            if not isprime(p):
                raise ParseError(f"{p} is not prime", context=selector)
            return sylow(G, p, config)
        case "gens":
            gens = parse_permutations(rest.strip().strip("'\""), G.degree)
            H = PermGroup(gens, G.degree)
            if not H.is_subgroup_of(G):
                raise ContainmentError("Generators do not lie in the group", context=selector)
            return H
        case _:
            raise ParseError(f"Unknown selector kind {kind!r}", context="hall, sylow or gens")


@app.command()
def pronormal(
    group: Annotated[str, typer.Argument(help="Group spec, e.g. alt:4, m11")],
    subgroup: Annotated[
        str, typer.Option("--subgroup", help="hall:2,3 | sylow:2 | gens:'(0 1)(2 3)'")
    ],
    method: Annotated[
        MethodChoice, typer.Option("--method", help="definition, reduced, tower or both")
    ] = MethodChoice.DEFINITION,
    seed: SeedOption = DEFAULT_SEED,
    max_order: MaxOrderOption = 100_000,
    fmt: FormatOption = OutputFormat.TEXT,
    save: SaveOption = None,
) -> None:
    """Decide whether a subgroup is pronormal and embed the certificate.

    ``both`` runs the definition decider and, when the subgroup contains a
    Sylow subgroup of the group, the reduced decider, and checks they agree.

    Examples:
        pronorm pronormal alt:4 --subgroup "gens:(0 1)(2 3)"
        pronorm pronormal m11 --subgroup hall:2,3 --method reduced
    """
    command = f"pronormal {group} --subgroup {subgroup} --method {method.value}"
    config = EngineConfig(seed=seed, max_order=max_order)
    certs: list[PronormalityCertificate] = []
    with _engine_errors(), use_config(config):
        spec = _parse_spec(group, max_order)
        report = _new_report(command, seed, str(spec))
        G = build(spec, config)
        H = resolve_subgroup(G, subgroup, config)
        start = time.perf_counter()
        match method:
            case MethodChoice.DEFINITION | MethodChoice.REDUCED:
                cert = decide(G, H, Method(method.value), config=config)
                assert cert is not None
                certs.append(cert)
            case MethodChoice.TOWER:
                tower = decide(G, H, Method.SYLOW_TOWER, config=config)
                if tower is None:
                    raise UnsupportedGroupError("Subgroup has no Sylow series", context=subgroup)
                certs.append(tower)
            case MethodChoice.BOTH:
                definition = decide(G, H, Method.DEFINITION, config=config)
                assert definition is not None
                certs.append(definition)
                try:
                    anchor = sylow_anchor(G, H, config)
                except PronormError:
                    anchor = None
                if anchor is not None:
                    reduced = decide(G, H, Method.REDUCED, anchor, config)
                    assert reduced is not None
                    certs.append(reduced)
                    _add_check(
                        report,
                        "reduced decider agrees with the definition",
                        reduced.verdict is definition.verdict,
                        definition.verdict.value,
                        reduced.verdict.value,
                    )
        report.timings = [PhaseTiming(phase="decide", seconds=time.perf_counter() - start)]
        for cert in certs:
            report.certificates.append(CertificateRecord.from_certificate(cert))
            problems = verify_certificate(cert)
            _add_check(
                report,
                f"{cert.method.value} certificate re-verifies",
                not problems,
                "no problems",
                "; ".join(problems) or "no problems",
            )
    if fmt is OutputFormat.TEXT:
        for cert in certs:
            colour = "green" if cert.is_pronormal else "red"
            lines = [
                f"Subgroup of order {H.order()} in {G.name} (order {G.order()})",
                f"Method: {cert.method.value}",
                f"Verdict: [{colour}]{cert.verdict.value}[/{colour}]",
                f"Conjugators tested: {len(cert.tests)} ({cert.nontrivial_tests} nontrivial)",
            ]
            if cert.counterexample is not None:
                lines.append(f"Counterexample: {cert.counterexample}")
            if cert.complexion is not None:
                lines.append(f"Sylow series complexion: {cert.complexion}")
            console.print(Panel("\n".join(lines), title="Pronormality"))
    _finish(report, fmt, save)


@app.command()
def verify(
    suite: Annotated[Suite, typer.Argument(help="Suite to run")],
    group: Annotated[
        Optional[list[str]],
        typer.Option("--group", "-g", help="Restrict the suite to these groups (repeatable)"),
    ] = None,
    seed: SeedOption = DEFAULT_SEED,
    max_order: MaxOrderOption = 100_000,
    fmt: FormatOption = OutputFormat.TEXT,
    save: SaveOption = None,
) -> None:
    """Run a verification suite; exits nonzero iff any check fails.

    Examples:
        pronorm verify table1
        pronorm verify lemma12 --group psl2:11 --group alt:6
        pronorm verify theorem --save theorem.json
    """
    groups = group or []
    command = " ".join(["verify", suite.value, *(f"--group {g}" for g in groups)])
    config = EngineConfig(seed=seed, max_order=max_order)
    with _engine_errors(), use_config(config):
        specs = [_parse_spec(g, max_order) for g in groups]
        report = _new_report(command, seed, ",".join(str(s) for s in specs) or None)
        if fmt is OutputFormat.TEXT:
            with console.status(f"[yellow]Running {suite.value}...[/yellow]"):
                result = run_suite(suite, specs, config)
        else:
            result = run_suite(suite, specs, config)
        report.add_suite(result)
    if not result.checks:
        # a restriction that matched nothing counts as a failure
        _add_check(report, f"{suite.value} ran at least one check", False, ">= 1 check", "0 checks")
    if fmt is OutputFormat.TEXT:
        status = "[green]passed[/green]" if report.passed else "[red]failed[/red]"
        console.print(f"Suite {suite.value}: {status}")
    _finish(report, fmt, save)


@app.command(name="build")
def build_group(
    group: Annotated[str, typer.Argument(help="Group spec, e.g. m11, psl2:7")],
    seed: SeedOption = DEFAULT_SEED,
    max_order: MaxOrderOption = 100_000,
    fmt: FormatOption = OutputFormat.TEXT,
    save: SaveOption = None,
) -> None:
    """Build a catalog group and show its order, degree and transitivity."""
    config = EngineConfig(seed=seed, max_order=max_order)
    with _engine_errors(), use_config(config):
        spec = _parse_spec(group, max_order)
        G = build(spec, config)
        summary = GroupSummary(
            spec=str(spec),
            label=spec.label,
            degree=G.degree,
            order=G.order(),
            transitivity=transitivity_degree(G),
            simple=is_simple(G),
            solvable=is_solvable(G),
            generators=[str(g) for g in G.generators],
        )
        report = _new_report(f"build {group}", seed, str(spec))
        report.summary = summary
    if fmt is OutputFormat.TEXT:
        console.print(
            Panel(
                f"Order: {summary.order}\n"
                f"Degree: {summary.degree}\n"
                f"Transitivity: {summary.transitivity}\n"
                f"Simple: {summary.simple}\n"
                f"Solvable: {summary.solvable}\n"
                f"Generators: {', '.join(summary.generators)}",
                title=summary.label,
            )
        )
    _finish(report, fmt, save)


@app.command()
def catalog() -> None:
    """List the groups the atlas can build."""
    table = Table(title="Catalog")
    table.add_column("Spec")
    table.add_column("Group")
    table.add_column("Order", justify="right")
    for spec in CATALOG:
        table.add_row(str(spec), spec.label, str(classical_order(spec)))
    console.print(table)
    console.print(
        "[dim]Also accepted: sym:n and alt:n (n <= 10), dih:m, cyc:m, wr:a,b (a*b <= 12)[/dim]"
    )


if __name__ == "__main__":
    app()

"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 coset budget exceeded,
3 verification mismatch.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .flag_tracer import TraceError, build_flag_complex, trace_mirror
from .patterns import MapType, universal_patterns
from .presentations import (
    DEFAULT_BUDGET,
    REFLECTION_ALPHABET,
    BudgetExceeded,
    PresentationError,
    Word,
    read_presentation,
)
from .reports import MapReport, build_map_report, render
from .surface_families import (
    FAMILIES,
    FixtureError,
    check_declared_type,
    family_map,
    read_manifest,
)
from .tables import DEFAULT_TOLERANCE, TABLE_IDS, build_table, fixture_dir, run_suite

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3


class VerificationFailed(click.ClickException):
    exit_code = EXIT_MISMATCH


_budget = click.option(
    "--budget",
    type=click.IntRange(min=1),
    default=DEFAULT_BUDGET,
    show_default=True,
    envvar="REGMAP_BUDGET",
    help="Maximum number of cosets to define (env REGMAP_BUDGET).",
)
_fixtures = click.option(
    "--fixtures",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    envvar="REGMAP_FIXTURES",
    help="Directory holding <name>.pres files and a manifest (env REGMAP_FIXTURES).",
)


@click.group()
@click.version_option(package_name="artifact", prog_name="regmap")
def cli() -> None:
    """Patterns of mirrors on reflexible regular maps."""


def _resolve_map(m, n, presentation, family, param, fixtures):
    """Return (name, presentation or None, MapType, preferred strategy)."""
    if presentation is not None and family is not None:
        raise click.UsageError("give either --presentation or --family, not both")
    if presentation is not None:
        if m is None or n is None:
            raise click.UsageError("--presentation needs --m and --n")
        t = MapType(m, n)
        p = read_presentation(presentation)
        check_declared_type(p, t)
        return Path(presentation).stem, p, t, "hlt"
    if family == "fixture":
        fx = fixture_dir(fixtures)
        if fx is None:
            raise FixtureError("no fixture directory (set --fixtures or REGMAP_FIXTURES)")
        entry = read_manifest(fx).get(str(param))
        if entry is None:
            raise FixtureError(f"fixture {param!r} is not listed in {fx / 'manifest'}")
        t = MapType(entry.m, entry.n)
        p = read_presentation(fx / f"{entry.name}.pres")
        check_declared_type(p, t)
        return entry.name, p, t, entry.strategy
    if family is not None:
        fm = family_map(family, param)
        return fm.name, fm.presentation, fm.map_type, "hlt"
    if m is None or n is None:
        raise click.UsageError("give --m and --n, a --presentation, or a --family")
    return f"universal {{{m},{n}}}", None, MapType(m, n), "hlt"


@cli.command()
@click.option("--m", type=click.IntRange(min=2), help="Face size.")
@click.option("--n", type=click.IntRange(min=2), help="Vertex valency.")
@click.option("--presentation", type=click.Path(dir_okay=False), help="Rotation presentation file.")
@click.option("--family", type=click.Choice(FAMILIES + ("fixture",)), help="Built-in family.")
@click.option("--param", help="Family parameter (genus, degree, K, solid name, '44,b0,3', fixture name).")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]), default="table", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Shorthand for --format json.")
@click.option("--csv", "as_csv", is_flag=True, help="Shorthand for --format csv.")
@click.option(
    "--strategy",
    type=click.Choice(["hlt", "felsch"]),
    help="Coset enumeration strategy [default: hlt, or the fixture's manifest entry].",
)
@click.option("--no-counts", is_flag=True, help="Skip mirror counting by the flag tracer.")
@_budget
@_fixtures
def pattern(m, n, presentation, family, param, fmt, as_json, as_csv, strategy, no_counts, budget, fixtures):
    """Mirror patterns of one map."""
    fmt = "json" if as_json else "csv" if as_csv else fmt
    name, p, t, preferred = _resolve_map(m, n, presentation, family, param, fixtures)
    strategy = strategy or preferred
    if p is None:
        report = MapReport(name, t, None, None, tuple(universal_patterns(t)))
    else:
        try:
            report = build_map_report(name, p, t, budget, strategy, mirror_counts=not no_counts)
        except BudgetExceeded as exc:
            if family == "hurwitz" and param is not None and int(param) >= 5:
                exc.args = (f"{exc.args[0]}; order unknown, no enumeration of this quotient is known to finish",)
            raise
        if report.group_order == 1:
            raise click.ClickException(f"{name}: the group collapses to the identity, no map exists")
    click.echo(render([report], fmt), nl=False)


@cli.command()
@click.option("--table", "table_id", type=click.Choice(TABLE_IDS), required=True)
@click.option("--b", type=click.IntRange(min=1), help="Single b for the torus tables.")
@_budget
@_fixtures
def table(table_id, b, budget, fixtures):
    """Reproduce one of the reference tables."""
    tab = build_table(table_id, fixtures=fixtures, budget=budget, b=b)
    click.echo(tab.render(), nl=False)
    if not tab.ok:
        raise VerificationFailed(f"table {table_id}: computed values disagree with the published ones")


@cli.command()
@click.option(
    "--suite",
    type=click.Choice(["spherical", "tori", "families", "oracle", "all"]),
    default="all",
    show_default=True,
)
@click.option(
    "--tolerance",
    type=click.FloatRange(min=0),
    default=DEFAULT_TOLERANCE,
    show_default=True,
    help="Absolute tolerance for lengths.",
)
@_budget
@_fixtures
def verify(suite, tolerance, budget, fixtures):
    """Run cross-checks; exit 3 on any mismatch."""
    checks = run_suite(suite, budget=budget, fixtures=fixtures, tolerance=tolerance)
    for c in checks:
        click.echo(c.line())
    passed = sum(1 for c in checks if c.ok)
    skipped = sum(1 for c in checks if c.ok is None)
    failed = len(checks) - passed - skipped
    click.echo(f"{passed} passed, {failed} failed, {skipped} skipped")
    if failed:
        raise VerificationFailed(f"{failed} check(s) failed")


@cli.command()
@click.option("--m", type=click.IntRange(min=2))
@click.option("--n", type=click.IntRange(min=2))
@click.option("--presentation", type=click.Path(dir_okay=False))
@click.option("--family", type=click.Choice(FAMILIES + ("fixture",)))
@click.option("--param")
@click.option("--reflection", default="P", show_default=True, help="Reflection as a word in P, Q, R.")
@_budget
@_fixtures
def trace(m, n, presentation, family, param, reflection, budget, fixtures):
    """Debug dump of the mirrors of one reflection, with flag ids."""
    name, p, t, strategy = _resolve_map(m, n, presentation, family, param, fixtures)
    if p is None:
        raise click.UsageError("tracing needs a finite map")
    c = build_flag_complex(p, t, budget, strategy)
    click.echo(f"{name}: {c.flags} flags, V={c.vertices} E={c.edges} F={c.faces}, genus {c.genus}")
    click.echo(trace_mirror(c, Word.parse(reflection, REFLECTION_ALPHABET)).dump())


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, prog_name="regmap", standalone_mode=False)
    except VerificationFailed as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_MISMATCH
    except BudgetExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_BUDGET
    except click.exceptions.Abort:
        return EXIT_INPUT
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_INPUT
    except (OSError, PresentationError, FixtureError, TraceError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

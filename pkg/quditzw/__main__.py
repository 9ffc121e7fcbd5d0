# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Main entry point into the qudit ZW verification tools."""
from __future__ import annotations

import collections.abc as cabc
import contextlib
import logging
import sys
import typing as t

import click
import yaml

import quditzw
from quditzw import qufinite, rules, semantics, textformat, translate

from . import auditing, load
from .diagram import core
from .diagram import generators as gen

LOGGER = logging.getLogger(__name__)
EXIT_FAILURE = 1
EXIT_USAGE = 2


@contextlib.contextmanager
def _usage_errors() -> cabc.Iterator[None]:
    """Exit with code 2 on malformed input instead of a traceback."""
    try:
        yield
    except textformat.ParseError as error:
        click.echo(f"Parse error: {error}", err=True)
        sys.exit(EXIT_USAGE)
    except (
        gen.DiagramError,
        load.InvalidSettings,
        rules.UnknownRule,
        semantics.EntryCapExceeded,
    ) as error:
        click.echo(f"Error: {error}", err=True)
        sys.exit(EXIT_USAGE)
    except RecursionError:
        click.echo("Error: Diagram is nested too deeply", err=True)
        sys.exit(EXIT_USAGE)
    except Exception as error:
        # Exit code 1 is reserved for failed verifications
        LOGGER.debug("Unexpected error", exc_info=True)
        click.echo(f"Error: {type(error).__name__}: {error}", err=True)
        sys.exit(EXIT_USAGE)


def _parse_list(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> list[str] | None:
    del ctx, param
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def _parse_dims(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> list[int] | None:
    items = _parse_list(ctx, param, value)
    if items is None:
        return None
    try:
        dims = [int(item) for item in items]
    except ValueError:
        raise click.BadParameter(
            f"Expected comma-separated integers, got {value!r}"
        ) from None
    if any(d < 2 for d in dims):
        raise click.BadParameter(f"All dimensions must be >= 2: {value!r}")
    return dims


config_option = click.option(
    "-c",
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="YAML settings file, overridden by explicit options.",
)
dim_option = click.option(
    "--dim",
    "-d",
    type=click.IntRange(min=1),
    required=True,
    help="Qudit dimension of all wires.",
)


def _read_diagram(file: t.TextIO, d: int) -> core.Diagram:
    return textformat.parse(file.read(), d)


@click.group()
@click.version_option(quditzw.__version__, prog_name="quditzw")
@click.option(
    "--verbose", "-v", count=True, help="Show logging entries on info-level."
)
def main(verbose: int) -> None:
    """Verification tools for the qudit ZW- and ZX-calculus.

    Diagrams are read from files in a small s-expression language and
    interpreted as dense complex matrices. The rewrite rules of the
    ZW-calculus are checked numerically with random phases.
    """
    if verbose == 1:
        logging.basicConfig(level=logging.INFO)
    elif verbose >= 2:
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=logging.WARNING)


@main.command()
@dim_option
@click.option(
    "--calculus",
    type=click.Choice(["zw", "zx"]),
    default=None,
    help="Reject diagrams with generators outside of this calculus.",
)
@config_option
@click.argument("file", type=click.File(encoding="utf8"))
def interpret(
    dim: int, calculus: str | None, config_path: str | None, file: t.TextIO
) -> None:
    """Print the matrix of the diagram in FILE."""
    with _usage_errors():
        settings = load.load_settings(config_path)
        diagram = _read_diagram(file, dim)
        if calculus is not None and calculus not in core.calculus_of(diagram):
            raise gen.UnknownGenerator(
                f"Diagram is not part of the {calculus.upper()}-calculus"
            )
        matrix = semantics.interpret(diagram, settings["entry_cap"])
    click.echo(auditing.format_matrix(matrix))


@main.command()
@click.option(
    "--dims",
    callback=_parse_dims,
    default=None,
    help="Comma-separated dimensions, e.g. 2,3,4,5.",
)
@click.option("--trials", type=click.IntRange(min=1), default=None)
@click.option("--tol", type=click.FloatRange(min=0), default=None)
@click.option("--seed", type=click.IntRange(min=0), default=None)
@click.option(
    "--rules",
    "names",
    callback=_parse_list,
    default=None,
    help="Comma-separated names of rules, lemmas or qufinite rules.",
)
@click.option(
    "--lemmas", is_flag=True, default=False, help="Also verify all lemmas."
)
@click.option(
    "--qufinite",
    "with_qufinite",
    is_flag=True,
    default=False,
    help="Also verify the dimension-binder rules.",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=1,
    help="Number of threads to spread the cells over.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "yaml"]),
    default="text",
)
@click.option(
    "--gather-logs/--no-gather-logs",
    is_flag=True,
    default=True,
    help="Gather failure messages in the report, instead of logging them "
    "immediately.",
)
@config_option
def verify(
    dims: list[int] | None,
    trials: int | None,
    tol: float | None,
    seed: int | None,
    names: list[str] | None,
    lemmas: bool,
    with_qufinite: bool,
    workers: int,
    output_format: str,
    gather_logs: bool,
    config_path: str | None,
) -> None:
    """Verify rewrite rules numerically.

    Exits with 1 if any rule fails at any dimension.
    """
    with _usage_errors():
        settings = load.load_settings(config_path)
        candidates = rules.catalog()
        if lemmas:
            candidates += rules.lemma_catalog()
        if with_qufinite:
            candidates += qufinite.qufinite_catalog()
        if names is not None:
            everything = rules.all_rules() + qufinite.qufinite_catalog()
            candidates = [rules.find_rule(n, everything) for n in names]

        seed = settings["seed"] if seed is None else seed
        low, high = settings["modulus"]
        reports = rules.verify_all(
            settings["dims"] if dims is None else dims,
            settings["trials"] if trials is None else trials,
            settings["tolerance"] if tol is None else tol,
            seed,
            candidates,
            workers=workers,
            gather_logs=gather_logs,
            modulus=(low, high),
            entry_cap=settings["entry_cap"],
        )

    reporter = auditing.VerificationReporter()
    reporter.store_reports(reports)
    if output_format == "yaml":
        click.echo(
            yaml.safe_dump(
                {"seed": seed, "reports": auditing.dump(reports)},
                sort_keys=False,
            ),
            nl=False,
        )
    else:
        if reports:
            click.echo(reporter.get_report())
        click.echo(reporter.create_summary(seed))

    if reporter.failures:
        sys.exit(EXIT_FAILURE)


@main.command(name="translate")
@dim_option
@click.option(
    "--direction",
    type=click.Choice(["xw", "wx"]),
    required=True,
    help="xw translates ZX to ZW, wx translates ZW to ZX.",
)
@click.argument("file", type=click.File(encoding="utf8"))
def translate_command(dim: int, direction: str, file: t.TextIO) -> None:
    """Print the translation of the diagram in FILE."""
    with _usage_errors():
        diagram = _read_diagram(file, dim)
        result = translate.translate(
            diagram, t.cast(translate.Direction, direction)
        )
        click.echo(textformat.print_diagram(result))


@main.command()
@dim_option
@config_option
@click.argument("file", type=click.File(encoding="utf8"))
def roundtrip(dim: int, config_path: str | None, file: t.TextIO) -> None:
    """Translate the ZX diagram in FILE to ZW and back.

    Exits with 1 if the result interprets differently. A structurally
    different result is reported without failing.
    """
    with _usage_errors():
        settings = load.load_settings(config_path)
        diagram = _read_diagram(file, dim)
        result = translate.round_trip_zx(
            diagram, settings["tolerance"], settings["entry_cap"]
        )

    semantic = "PASS" if result.semantic_pass else "FAIL"
    structural = "PASS" if result.structural else "FAIL"
    click.echo(
        f"semantic: {semantic} deviation={result.semantic.deviation:.3e}"
    )
    click.echo(f"structural: {structural}")
    if not result.semantic_pass:
        sys.exit(EXIT_FAILURE)


@main.command()
@dim_option
def counterexample(dim: int) -> None:
    """Print how far the W-W bialgebra law is off at dimension DIM."""
    with _usage_errors():
        deviation = rules.bialgebra_counterexample(dim)
    click.echo(f"bialgebra d={dim} deviation={deviation:.12g}")


@main.command(name="rules")
def list_rules() -> None:
    """List all rules, lemmas and qufinite rules with their slots."""
    for rule in rules.all_rules() + qufinite.qufinite_catalog():
        slots = ",".join(rule.phases) or "-"
        sizes = ",".join(name for name, _ in rule.sizes) or "-"
        click.echo(
            f"{rule.name}\t{rule.kind}\tphases={slots}\tsizes={sizes}"
            f"\t{rule.source}"
        )


if __name__ == "__main__":
    main()

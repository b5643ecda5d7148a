"""CSV output with a provenance header."""

from __future__ import annotations

import csv
from collections.abc import Iterable
from collections.abc import Sequence
from typing import Any

import click

from ..runtime.config import RunConfig
from ..utils.version import get_version

# result lines stay out of the replayed parameters
RESULT_PREFIX = "result."


def run_config(ctx: click.Context) -> RunConfig:
    """The invoked command and its resolved parameters."""
    return RunConfig(command=ctx.command.name, params=dict(ctx.params), version=get_version())


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(
    ctx: click.Context,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    output: str = "-",
    results: dict[str, Any] | None = None,
) -> None:
    """Provenance comment lines, optional `# result.<key>=<value>` lines, then the table."""
    with click.open_file(output, "w", encoding="utf-8") as stream:
        for line in run_config(ctx).header_lines():
            stream.write(line + "\n")
        for key, value in (results or {}).items():
            stream.write(f"# {RESULT_PREFIX}{key}={_cell(value)}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(value) for value in row])


def output_option(f):
    return click.option(
        "--output", "-o", default="-", show_default=True, help="Write to this file instead of stdout."
    )(f)


def seed_option(f):
    return click.option(
        "--seed",
        type=click.IntRange(0, 2**64 - 1),
        default=0,
        show_default=True,
        envvar="KGVACUUM_SEED",
        help="Unsigned 64-bit seed (env: KGVACUUM_SEED).",
    )(f)


def physics_options(f):
    f = click.option("--hbar", type=float, default=1.0, show_default=True, help="Reduced Planck constant ℏ.")(f)
    f = click.option("--kT", "kT", type=float, default=1.0, show_default=True, help="Temperature scale kT.")(f)
    f = click.option("--mass", "-m", type=click.FloatRange(min=0.0), required=True, help="Field mass m.")(f)
    return f


def quadrature_options(f):
    f = click.option("--rel-tol", type=float, default=1e-10, show_default=True, help="Relative quadrature tolerance.")(f)
    f = click.option("--k-max", type=float, default=40.0, show_default=True, help="Initial radial truncation.")(f)
    return f


__all__ = ["RESULT_PREFIX", "run_config", "write_csv", "output_option", "seed_option", "physics_options", "quadrature_options"]

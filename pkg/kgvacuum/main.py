"""kgvacuum - command-line interface for the classical Klein-Gordon vacuum model."""

from __future__ import annotations

import logging
import sys

import click
from pydantic import ValidationError
from rich.logging import RichHandler

from .commands.density import density as density_cmd
from .commands.inner import inner as inner_cmd
from .commands.kernel import kernel as kernel_cmd
from .commands.rerun import rerun as rerun_cmd
from .commands.sample import sample as sample_cmd
from .commands.variance import variance as variance_cmd
from .commands.verify import verify as verify_cmd
from .commands.version import version as version_cmd
from .console import console
from .errors import EXIT_OK
from .errors import EXIT_USAGE
from .errors import ConfigurationError
from .errors import KgVacuumError
from .runtime.config import read_config_file
from .ui.error_display import display_error
from .utils.version import get_version

logger = logging.getLogger(__name__)


def _configure_logging(verbose: bool) -> None:
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)
    handler = RichHandler(console=console, show_path=verbose, rich_tracebacks=verbose)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


class KgVacuumGroup(click.Group):
    """Group that turns library errors into panels and mapped exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ValidationError as e:
            error = ConfigurationError(f"invalid parameters: {e.errors()[0]['msg']}")
            error.__cause__ = e
            self._fail(ctx, error)
        except KgVacuumError as e:
            self._fail(ctx, e)

    @staticmethod
    def _fail(ctx: click.Context, error: KgVacuumError) -> None:
        verbose = bool((ctx.obj or {}).get("verbose"))
        display_error(console, error, verbose=verbose)
        ctx.exit(error.exit_code)

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
            code = result if isinstance(result, int) else EXIT_OK
        except KgVacuumError as e:
            display_error(console, e)
            code = e.exit_code
        except click.ClickException as e:
            e.show()
            code = EXIT_USAGE
        except click.exceptions.Abort:
            console.print("[red]Aborted[/red]")
            code = EXIT_USAGE
        except click.exceptions.Exit as e:
            code = e.exit_code
        if standalone_mode:
            sys.exit(code)
        return code


def _load_config(ctx: click.Context, param: click.Parameter, value: str | None) -> str | None:
    """Merge a key=value config file under the flags of every subcommand."""
    if value is None or ctx.resilient_parsing:
        return value
    settings = read_config_file(value)
    group = ctx.command
    default_map: dict[str, dict] = {}
    for name, command in getattr(group, "commands", {}).items():
        defaults = {}
        for option in command.params:
            # a key may name the parameter or any of its long flags
            keys = [option.name, *(opt.lstrip("-").replace("-", "_") for opt in option.opts if opt.startswith("--"))]
            key = next((key for key in keys if key in settings), None)
            if key is not None:
                raw = settings[key]
                defaults[option.name] = [raw] if getattr(option, "multiple", False) else raw
        if defaults:
            default_map[name] = defaults
    ctx.default_map = {**(ctx.default_map or {}), **default_map}
    return value


@click.group(cls=KgVacuumGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=get_version(), prog_name="kgvacuum")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging and tracebacks on stderr.")
@click.option(
    "--config",
    type=click.Path(dir_okay=False),
    callback=_load_config,
    is_eager=True,
    expose_value=False,
    help="File of key=value defaults; flags given on the command line win.",
)
@click.pass_context
def cli(ctx, verbose):
    """Classical statistical field model of the Klein-Gordon vacuum.

    Smeared-field variances, the anti-local kernel, invariant inner
    products, one-observable densities, Monte Carlo ensembles and the
    acceptance suites. Data goes to stdout as CSV or JSON with a
    provenance header; diagnostics go to stderr.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    _configure_logging(verbose)


cli.add_command(variance_cmd)
cli.add_command(kernel_cmd)
cli.add_command(inner_cmd)
cli.add_command(density_cmd)
cli.add_command(sample_cmd)
cli.add_command(verify_cmd)
cli.add_command(rerun_cmd)
cli.add_command(version_cmd)


def main():
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()

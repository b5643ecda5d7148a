"""Replay a run from the provenance header of its output."""

from __future__ import annotations

import logging
from typing import Any

import click

from ..errors import ConfigurationError
from ..runtime.config import NON_PROVENANCE_PARAMS
from ..runtime.config import RunConfig
from ..runtime.config import read_provenance
from ..utils.version import get_version
from .output import output_option

logger = logging.getLogger(__name__)


def _values(raw: Any) -> list[str]:
    return raw if isinstance(raw, list) else [raw]


def replay_arguments(command: click.Command, run: RunConfig) -> list[str]:
    """Command-line arguments that reproduce `run` for `command`.

    Header keys that are not options of the command are ignored.
    """
    args: list[str] = []
    options = {param.name: param for param in command.params if isinstance(param, click.Option)}
    for key, raw in run.params.items():
        option = options.get(key)
        if option is None or key in NON_PROVENANCE_PARAMS:
            continue
        if option.is_flag:
            enabled = _values(raw)[-1] == "True"
            if enabled:
                args.append(option.opts[0])
            elif option.secondary_opts:
                args.append(option.secondary_opts[0])
            continue
        for value in _values(raw):
            args.extend([option.opts[0], value])
    return args


@click.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@output_option
@click.pass_context
def rerun(ctx, path, output):
    """Re-execute the command recorded in PATH's provenance header."""
    run = read_provenance(path)
    group = ctx.parent.command if ctx.parent else None
    command = group.get_command(ctx.parent, run.command) if isinstance(group, click.Group) else None
    if command is None or run.command == ctx.command.name:
        raise ConfigurationError(f"{path}: '{run.command}' is not a command that can be replayed")
    if run.version and run.version != get_version():
        logger.warning(f"{path} was written by kgvacuum {run.version}; replaying with {get_version()}")

    args = [*replay_arguments(command, run), "--output", output]
    logger.debug(f"replaying {run.command} {' '.join(args)}")
    with command.make_context(run.command, args, parent=ctx.parent) as sub_ctx:
        command.invoke(sub_ctx)

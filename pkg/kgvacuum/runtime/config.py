"""Run configuration: key=value config files and provenance headers."""

from __future__ import annotations

import logging
import os
import re
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

ENV_PATTERN = re.compile(r"\$\{([^}:]+)(?::([^}]*))?}")
HEADER_PREFIX = "# "
PRODUCT_NAME = "kgvacuum"

# never replayed: they name where output went, not what was computed
NON_PROVENANCE_PARAMS = frozenset({"output"})


def expand_env_vars(values: dict[str, str]) -> dict[str, str]:
    """Expand ${VAR} and ${VAR:default} references within configuration values."""

    def _replace_match(match: re.Match[str]) -> str:
        var_name = match.group(1)
        default = match.group(2)
        return os.environ.get(var_name, default if default is not None else "")

    return {key: ENV_PATTERN.sub(_replace_match, value) for key, value in values.items()}


def _strip_quotes(value: str) -> str:
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    return value


def parse_config_lines(lines: Iterable[str], source: str = "<config>") -> dict[str, str]:
    """Flat key=value lines; blank lines and # comments ignored, dashes in keys become underscores."""
    values: dict[str, str] = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(f"{source}:{number}: expected key=value, got '{line}'")
        key, value = line.split("=", 1)
        key = key.strip().replace("-", "_")
        if not key:
            raise ConfigurationError(f"{source}:{number}: empty key")
        values[key] = _strip_quotes(value.strip())
    return expand_env_vars(values)


def read_config_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e
    values = parse_config_lines(text.splitlines(), source=str(path))
    logger.debug(f"loaded {len(values)} settings from {path}")
    return values


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


class RunConfig(BaseModel):
    """A command with its fully resolved parameters; enough to reproduce the run."""

    model_config = ConfigDict(frozen=True)

    command: str
    params: dict[str, Any] = Field(default_factory=dict)
    version: str = ""

    def header_lines(self) -> list[str]:
        lines = [f"{HEADER_PREFIX}{PRODUCT_NAME} {self.version}", f"{HEADER_PREFIX}command={self.command}"]
        for key in sorted(self.params):
            if key in NON_PROVENANCE_PARAMS:
                continue
            value = self.params[key]
            if value is None:
                continue
            if isinstance(value, list | tuple):
                lines.extend(f"{HEADER_PREFIX}{key}={_format_value(item)}" for item in value)
            else:
                lines.append(f"{HEADER_PREFIX}{key}={_format_value(value)}")
        return lines

    @classmethod
    def from_header(cls, lines: Iterable[str]) -> RunConfig:
        """Rebuild from the leading comment lines of an emitted file.

        Repeated keys collect into lists. Values stay strings; the command
        converts them again on replay.
        """
        version = ""
        command = None
        params: dict[str, Any] = {}
        for raw in lines:
            if not raw.startswith(HEADER_PREFIX):
                break
            body = raw[len(HEADER_PREFIX) :].rstrip("\n")
            if body.startswith(f"{PRODUCT_NAME} ") and not version:
                version = body[len(PRODUCT_NAME) + 1 :]
                continue
            if "=" not in body:
                continue
            key, value = body.split("=", 1)
            if key == "command":
                command = value
            elif key in params:
                existing = params[key]
                params[key] = [*existing, value] if isinstance(existing, list) else [existing, value]
            else:
                params[key] = value
        if command is None:
            raise ConfigurationError("no provenance header found (missing '# command=' line)")
        return cls(command=command, params=params, version=version)


def read_provenance(path: str | Path) -> RunConfig:
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            return RunConfig.from_header(f)
    except OSError as e:
        raise ConfigurationError(f"cannot read provenance file {path}: {e}") from e


__all__ = [
    "ENV_PATTERN",
    "expand_env_vars",
    "parse_config_lines",
    "read_config_file",
    "RunConfig",
    "read_provenance",
]

"""Shared helpers for command-line tests."""

import csv
import io

import pytest
from click.testing import CliRunner


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.delenv("KGVACUUM_SEED", raising=False)
    monkeypatch.delenv("KGVACUUM_FAULT_INJECT", raising=False)
    return CliRunner()


def _table(text: str) -> list[dict[str, str]]:
    body = "\n".join(line for line in text.splitlines() if not line.startswith("#"))
    return list(csv.DictReader(io.StringIO(body)))


def _header(text: str) -> dict[str, str]:
    values = {}
    for line in text.splitlines():
        if not line.startswith("# "):
            break
        key, sep, value = line[2:].partition("=")
        if sep:
            values[key] = value
    return values


@pytest.fixture
def table():
    """Parser for the CSV body below the provenance header."""
    return _table


@pytest.fixture
def header():
    """Parser for the `# key=value` provenance lines."""
    return _header

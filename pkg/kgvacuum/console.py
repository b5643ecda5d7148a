"""Shared Rich console for diagnostics.

Data (CSV, JSON) goes to stdout through click; everything human-facing,
including log records and error panels, goes to stderr.
"""

from rich.console import Console

console = Console(stderr=True)

__all__ = ["console"]

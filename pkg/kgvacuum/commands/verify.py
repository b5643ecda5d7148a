"""Acceptance suites."""

import logging

import click

from ..console import console
from ..data.profiles import load_profile
from ..data.profiles import profile_names
from ..errors import VerificationFailed
from ..verify.suites import SUITE_NAMES
from ..verify.suites import run_suite
from .output import output_option

logger = logging.getLogger(__name__)


@click.command()
@click.option("--suite", type=click.Choice(SUITE_NAMES), default="all", show_default=True)
@click.option("--profile", type=click.Choice(profile_names()), default="quick", show_default=True, help="Sample and lattice budget.")
@output_option
def verify(suite, profile, output):
    """Run an acceptance suite and write its JSON report.

    Exits 4 when any check fails. Set KGVACUUM_FAULT_INJECT to confirm a
    suite catches a deliberately broken constant.
    """
    budget = load_profile(profile)
    report = run_suite(suite, budget)
    with click.open_file(output, "w", encoding="utf-8") as stream:
        stream.write(report.to_json() + "\n")

    status = "[green]pass[/green]" if report.passed else "[red]FAIL[/red]"
    console.print(f"[dim]{suite} ({profile}): {len(report.checks)} checks in {report.wall_time:.1f}s[/dim] {status}")
    for failure in report.failures:
        detail = f": {failure.message}" if failure.message else ""
        logger.info(f"failed check {failure.name}{detail}")
        console.print(f"  [red]✗[/red] {failure.name}")
    if not report.passed:
        raise VerificationFailed(f"{len(report.failures)} of {len(report.checks)} checks failed in suite '{suite}'")

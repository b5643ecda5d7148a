"""Version command."""

import click
from rich.table import Table

from ..console import console
from ..utils.version import get_version_info


@click.command()
@click.option("--verbose", "-v", is_flag=True, help="Show the release, commit and install type.")
def version(verbose: bool):
    """Show the kgvacuum version echoed into provenance headers."""
    info = get_version_info()
    if not verbose:
        click.echo(f"kgvacuum {info.display}")
        return

    table = Table(show_header=False, box=None, padding=(0, 2))
    table.add_column("Key", style="dim")
    table.add_column("Value")
    table.add_row("Version", f"[bold]{info.display}[/bold]")
    table.add_row("Release", info.release)
    if info.sha:
        table.add_row("Commit SHA", info.sha)
    table.add_row("Install Type", "Local (editable)" if info.is_local else "Package")
    console.print(table)

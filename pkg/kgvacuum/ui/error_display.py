"""Error panels for failed commands."""

from rich.console import Console
from rich.panel import Panel
from rich.text import Text

from ..errors import ConfigurationError
from ..errors import DegenerateTestFunction
from ..errors import DivergentIntegral
from ..errors import EnvelopeFailure
from ..errors import HermitianSymmetryError
from ..errors import InsufficientSamples
from ..errors import KgVacuumError
from ..errors import NonConvergent
from ..errors import VerificationFailed

TIPS: dict[type[KgVacuumError], str] = {
    DivergentIntegral: "Use a wider test function, a nonzero mass, or a regularizer with a cutoff",
    NonConvergent: "Loosen --rel-tol or raise --k-max",
    DegenerateTestFunction: "The test function is numerically zero; check its amplitude and width",
    EnvelopeFailure: "The rejection envelope does not fit this density; report the state parameters",
    InsufficientSamples: "Increase --count (the KS test needs at least 100 samples)",
    HermitianSymmetryError: "The field configuration is not real in position space",
    VerificationFailed: "Rerun with --verbose to see each failing check",
    ConfigurationError: "Run the command with --help for the accepted parameter grammar",
}


def _tip_for(error: KgVacuumError) -> str:
    for error_type in type(error).__mro__:
        if error_type in TIPS:
            return TIPS[error_type]
    return "See --help"


def display_error(console: Console, error: KgVacuumError, verbose: bool = False) -> None:
    """Print `error` as a panel with its exit code and an actionable tip."""
    content = Text()
    content.append("Error: ", style="dim")
    content.append(type(error).__name__, style="bold cyan")
    content.append("\n")
    content.append("Exit code: ", style="dim")
    content.append(str(error.exit_code), style="yellow")
    content.append("\n\n")
    content.append(str(error), style="red")

    console.print()
    console.print(Panel(content, title="[bold red]kgvacuum failed[/bold red]", border_style="red", padding=(1, 2)))
    console.print(f"[dim]Tip: {_tip_for(error)}[/dim]")
    console.print()

    if verbose:
        console.print("[dim]─── Traceback ───[/dim]")
        console.print_exception()


__all__ = ["display_error"]

"""CLI command exports for kgvacuum."""

from .density import density
from .inner import inner
from .kernel import kernel
from .rerun import rerun
from .sample import sample
from .variance import variance
from .verify import verify
from .version import version

__all__ = ["density", "inner", "kernel", "rerun", "sample", "variance", "verify", "version"]

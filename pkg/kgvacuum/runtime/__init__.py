"""Runtime plumbing: configuration files, provenance and fault hooks."""

from .config import RunConfig
from .config import expand_env_vars
from .config import read_config_file
from .config import read_provenance
from .faults import active_faults
from .faults import fault_active

__all__ = ["RunConfig", "expand_env_vars", "read_config_file", "read_provenance", "active_faults", "fault_active"]

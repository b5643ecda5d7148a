"""Single-observable densities for vacuum, n-particle, coherent and superposition states."""

from .densities import cdf
from .densities import characteristic_function
from .densities import density
from .densities import moments
from .densities import one_particle_characteristic
from .densities import total_mass
from .models import StateKind
from .models import StateSpec
from .sampling import sample_density

__all__ = [
    "cdf",
    "characteristic_function",
    "density",
    "moments",
    "one_particle_characteristic",
    "total_mass",
    "StateKind",
    "StateSpec",
    "sample_density",
]

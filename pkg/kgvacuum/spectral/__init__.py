"""Lattices, dispersion, regularizers, test functions and field configurations."""

from .field import FieldConfiguration
from .field import hamiltonian
from .lattice import LatticeSpec
from .lattice import Wavenumbers
from .lattice import dispersion
from .lattice import lattice_positions
from .lattice import mirror
from .lattice import wavenumber_grid
from .lattice import wavenumber_magnitude
from .lattice import wavenumbers
from .regularizers import FROZEN
from .regularizers import FrozenMode
from .regularizers import Regularizer
from .regularizers import RegularizerKind
from .regularizers import xi_eval
from .test_functions import TestFunction
from .test_functions import TestFunctionKind
from .test_functions import testfn_fourier

__all__ = [
    "FieldConfiguration",
    "hamiltonian",
    "LatticeSpec",
    "Wavenumbers",
    "dispersion",
    "lattice_positions",
    "mirror",
    "wavenumber_grid",
    "wavenumber_magnitude",
    "wavenumbers",
    "FROZEN",
    "FrozenMode",
    "Regularizer",
    "RegularizerKind",
    "xi_eval",
    "TestFunction",
    "TestFunctionKind",
    "testfn_fourier",
]

"""Equilibrium and one-particle field ensembles, smeared observables and estimators."""

from .emt import emt_components
from .emt import vacuum_emt_target
from .ensemble import Ensemble
from .ensemble import EnsembleSpec
from .ensemble import sample_vacuum
from .estimators import MCEstimate
from .estimators import MomentEstimates
from .estimators import estimate_covariance
from .estimators import estimate_mean
from .estimators import estimate_moments
from .estimators import excess_kurtosis
from .observables import SmearingPanel
from .observables import smear
from .one_particle import one_particle_covariance
from .one_particle import one_particle_emt_target
from .one_particle import one_particle_variance
from .one_particle import sample_one_particle
from .rng import Stream
from .rng import sample_generator
from .rng import signed_maxwell

__all__ = [
    "emt_components",
    "vacuum_emt_target",
    "Ensemble",
    "EnsembleSpec",
    "sample_vacuum",
    "MCEstimate",
    "MomentEstimates",
    "estimate_covariance",
    "estimate_mean",
    "estimate_moments",
    "excess_kurtosis",
    "SmearingPanel",
    "smear",
    "one_particle_covariance",
    "one_particle_emt_target",
    "one_particle_variance",
    "sample_one_particle",
    "Stream",
    "sample_generator",
    "signed_maxwell",
]

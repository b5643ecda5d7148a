"""Monte Carlo estimates from vacuum or one-particle field ensembles."""

import math
from itertools import combinations

import click
import numpy as np

from ..analytic.inner_product import lattice_inner_product
from ..analytic.weights import SpectralWeight
from ..errors import ConfigurationError
from ..sampler.emt import emt_components
from ..sampler.emt import vacuum_emt_target
from ..sampler.ensemble import EnsembleSpec
from ..sampler.ensemble import sample_vacuum
from ..sampler.estimators import MCEstimate
from ..sampler.estimators import estimate_mean
from ..sampler.estimators import moments_from_values
from ..sampler.observables import SmearingPanel
from ..sampler.one_particle import one_particle_covariance
from ..sampler.one_particle import one_particle_emt_target
from ..sampler.one_particle import sample_one_particle
from ..spectral.lattice import LatticeSpec
from .grammar import parse_ensemble_state
from .grammar import parse_regularizer
from .grammar import parse_test_function
from .output import output_option
from .output import physics_options
from .output import seed_option
from .output import write_csv

EMT_LABELS = ("t", "x", "y", "z")


def _row(name: str, estimate: MCEstimate, target: float) -> tuple:
    if estimate.std_error > 0.0 and math.isfinite(estimate.std_error):
        sigmas = (estimate.mean - target) / estimate.std_error
    else:
        sigmas = math.nan
    return (name, estimate.mean, estimate.std_error, target, sigmas)


@click.command()
@physics_options
@click.option("--xi", default="kg", show_default=True, help="Regularizer of the vacuum ensemble.")
@click.option("--testfn", "-f", multiple=True, required=True, help="Test function; repeat for several.")
@click.option("--state", default="vacuum", show_default=True, help="vacuum or one-particle:g=<test function>.")
@click.option("--lattice", "n_per_side", type=click.IntRange(min=2), default=32, show_default=True, help="Sites per side.")
@click.option("--spacing", type=click.FloatRange(min=0.0, min_open=True), default=0.5, show_default=True)
@click.option("--count", "-n", type=click.IntRange(min=1), default=10_000, show_default=True, help="Ensemble size.")
@click.option("--emt/--no-emt", default=False, help="Append the ten independent T^{μν} component means.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True, help="Generation threads.")
@seed_option
@output_option
@click.pass_context
def sample(ctx, mass, kT, hbar, xi, testfn, state, n_per_side, spacing, count, emt, workers, seed, output):
    """Estimate means, variances and covariances of smeared fields and compare with lattice targets."""
    lattice = LatticeSpec(n_per_side=n_per_side, spacing=spacing)
    fs = [parse_test_function(text) for text in testfn]
    g = parse_ensemble_state(state)

    if g is None:
        reg = parse_regularizer(xi, mass, kT, hbar)
        ensemble = sample_vacuum(EnsembleSpec(lattice=lattice, reg=reg, count=count, seed=seed), workers=workers)
        weight = SpectralWeight.classical(reg)

        def covariance_target(i: int, j: int) -> float:
            return lattice_inner_product(fs[i], fs[j], lattice, weight).real

        emt_target = vacuum_emt_target(lattice, reg, mass, kT, hbar) if emt else None
    else:
        if xi != "kg":
            raise ConfigurationError("one-particle ensembles are built on the kg regularizer only")
        ensemble = sample_one_particle(lattice, mass, kT, hbar, g, count, seed, workers=workers)

        def covariance_target(i: int, j: int) -> float:
            return one_particle_covariance(fs[i], fs[j], g, lattice, mass, hbar)

        emt_target = one_particle_emt_target(lattice, g, mass, kT, hbar) if emt else None

    panel = SmearingPanel(fs, lattice)
    smeared = []
    tensors = []
    for config in ensemble:
        smeared.append(panel.apply(config))
        if emt:
            tensors.append(emt_components(config, mass, kT, hbar))
    moments = moments_from_values(np.vstack(smeared))

    rows = []
    for i in range(len(fs)):
        rows.append(_row(f"mean(f{i})", moments.means[i], 0.0))
        rows.append(_row(f"var(f{i})", moments.variance(i), covariance_target(i, i)))
        rows.append(_row(f"second_moment(f{i})", estimate_mean(moments.values[:, i] ** 2), covariance_target(i, i)))
    for i, j in combinations(range(len(fs)), 2):
        rows.append(_row(f"cov(f{i},f{j})", moments.covariance[i][j], covariance_target(i, j)))
    if emt:
        stacked = np.stack(tensors)
        for mu in range(4):
            for nu in range(mu, 4):
                name = f"T{EMT_LABELS[mu]}{EMT_LABELS[nu]}"
                rows.append(_row(name, estimate_mean(stacked[:, mu, nu]), float(emt_target[mu, nu])))
    write_csv(ctx, ("observable", "estimate", "std_error", "analytic_target", "sigmas"), rows, output)

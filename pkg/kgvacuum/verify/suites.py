"""Named acceptance suites.

Each suite is an ordered list of checks built from a budget profile. A
suite fails under its fault injection (KGVACUUM_FAULT_INJECT):

    variance   variance-weight
    density    density-mass, maxwell-scale
    kernel     kernel-constant
    boost      boost-measure
    emt        hermitian
    nonlocal   position-kernel
    montecarlo maxwell-scale, hermitian
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

import numpy as np

from ..analytic.bessel import bessel_k2
from ..analytic.boost import boosted_inner_product
from ..analytic.inner_product import inner_product
from ..analytic.inner_product import lattice_inner_product
from ..analytic.inner_product import lattice_variance
from ..analytic.inner_product import smeared_variance
from ..analytic.kernel import antilocal_kernel
from ..analytic.oracles import bessel_k_asymptotic
from ..analytic.oracles import bessel_k_series
from ..analytic.oracles import kernel_oracle
from ..analytic.position_space import position_space_inner_product
from ..analytic.quadrature import QuadratureSpec
from ..analytic.weights import SpectralWeight
from ..data.profiles import BudgetProfile
from ..errors import ConfigurationError
from ..sampler.emt import emt_components
from ..sampler.emt import vacuum_emt_target
from ..sampler.ensemble import EnsembleSpec
from ..sampler.ensemble import sample_vacuum
from ..sampler.estimators import estimate_mean
from ..sampler.estimators import estimate_moments
from ..sampler.estimators import excess_kurtosis
from ..sampler.observables import SmearingPanel
from ..sampler.one_particle import one_particle_emt_target
from ..sampler.one_particle import sample_one_particle
from ..spectral.field import FieldConfiguration
from ..spectral.field import hamiltonian
from ..spectral.lattice import LatticeSpec
from ..spectral.lattice import dispersion
from ..spectral.lattice import wavenumber_grid
from ..spectral.regularizers import Regularizer
from ..spectral.test_functions import TestFunction
from ..states.densities import cdf
from ..states.densities import characteristic_function
from ..states.densities import density
from ..states.densities import one_particle_characteristic
from ..states.densities import total_mass
from ..states.models import StateSpec
from ..states.sampling import sample_density
from .ks import ks_test
from .report import Check
from .report import Measurement
from .report import SuiteReport
from .report import run_checks

logger = logging.getLogger(__name__)

SIGMA_BAND = 4.0
KURTOSIS_SIGMA_BAND = 5.0
KS_ALPHA = 0.01

VARIANCE_MASSES = (0.0, 0.5, 1.0, 5.0)
VARIANCE_WIDTHS = (0.5, 1.0, 2.0)
KT_SCALE = 1.0e3
MATCH_RTOL = 1e-10

THETA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
EXPECTED_MASS = {"vacuum": 1.0, "n1": 1.0, "n2": 2.0, "n3": 6.0, "coherent": 1.0, "superposition": 1.0}
MASS_TOL = 1e-8
REDUCTION_TOL = 1e-12
CHARACTERISTIC_TOL = 1e-8

KERNEL_RADII = (0.5, 1.0, 2.0, 4.0, 7.0, 10.0)
KERNEL_RTOL = 1e-4

BOOST_RAPIDITIES = (0.0, -0.5, 0.25, 0.5, 1.0)
BOOST_RTOL = 1e-6

SEPARATIONS = (2.0, 4.0, 6.0, 8.0)
NONLOCAL_MIN_DECAY = 0.9
POSITION_SPECTRAL_RTOL = 1e-6

LATTICE_CONTINUUM_RTOL = 1e-3

EMT_RANK_TOL = 1e-12
EMT_LATTICE = LatticeSpec(n_per_side=8, spacing=0.5)


def _holds(condition: bool) -> Measurement:
    return Measurement(target=1.0, observed=1.0 if condition else 0.0, tol=0.0)


def _within_sigma(estimate, target: float, band: float = SIGMA_BAND) -> Measurement:
    return Measurement(target=target, observed=estimate.mean, tol=band * estimate.std_error)


def _ks_measurement(samples, oracle) -> Measurement:
    result = ks_test(samples, oracle, KS_ALPHA)
    return Measurement(target=0.0, observed=result.statistic, tol=result.critical)


def variance_checks(profile: BudgetProfile) -> list[Check]:
    quad = profile.quadrature
    checks = []

    def classical_vs_quantum(m: float, s: float, kT: float) -> Callable[[], Measurement]:
        def measure() -> Measurement:
            f = TestFunction.gaussian(s)
            quantum = smeared_variance(f, SpectralWeight.quantum(mass=m), quad)
            classical = smeared_variance(f, SpectralWeight.classical(Regularizer.kg_vacuum(m, kT=kT)), quad)
            return Measurement(target=quantum, observed=classical, tol=MATCH_RTOL, relative=True)

        return measure

    for m in VARIANCE_MASSES:
        for s in VARIANCE_WIDTHS:
            checks.append(Check(f"classical-matches-quantum m={m:g} s={s:g}", classical_vs_quantum(m, s, 1.0)))
    checks.append(Check(f"kT-cancels kT={KT_SCALE:g}", classical_vs_quantum(1.0, 1.0, KT_SCALE)))

    def massless_closed_form() -> Measurement:
        value = smeared_variance(TestFunction.gaussian(1.0), SpectralWeight.quantum(mass=0.0), quad)
        return Measurement(target=math.pi, observed=value, tol=MATCH_RTOL, relative=True)

    checks.append(Check("massless-gaussian-closed-form", massless_closed_form))
    return checks


def _state_family(theta: float) -> dict[str, StateSpec]:
    fg = math.sqrt(theta)
    return {
        "n1": StateSpec.n_particle(1, ff=1.0, gg=1.0, fg=fg),
        "n2": StateSpec.n_particle(2, ff=1.0, gg=1.0, fg=fg),
        "n3": StateSpec.n_particle(3, ff=1.0, gg=1.0, fg=fg),
        "superposition": StateSpec.superposition(u=0.6 + 0.3j, v=0.5 - 0.2j, ff=1.0, gg=1.0, fg=fg),
    }


def density_checks(profile: BudgetProfile) -> list[Check]:
    quad = profile.quadrature
    q_grid = np.linspace(-8.0, 8.0, 321)
    checks = []

    def mass_of(state: StateSpec, expected: float) -> Callable[[], Measurement]:
        return lambda: Measurement(target=expected, observed=total_mass(state, quad), tol=MASS_TOL)

    checks.append(Check("mass vacuum", mass_of(StateSpec.vacuum(1.0), EXPECTED_MASS["vacuum"])))
    checks.append(Check("mass coherent", mass_of(StateSpec.coherent(1.0, 1.0, 0.7), EXPECTED_MASS["coherent"])))
    for theta in THETA_GRID:
        for label, state in _state_family(theta).items():
            checks.append(Check(f"mass {label} θ={theta:g}", mass_of(state, EXPECTED_MASS[label])))

    def max_difference(first: StateSpec, second_values: Callable[[], np.ndarray]) -> Callable[[], Measurement]:
        return lambda: Measurement(
            target=0.0, observed=float(np.max(np.abs(density(first, q_grid) - second_values()))), tol=REDUCTION_TOL
        )

    vacuum = StateSpec.vacuum(1.0)
    checks.append(
        Check("n1 θ=0 equals vacuum", max_difference(StateSpec.n_particle(1, 1.0, 1.0, 0.0), lambda: density(vacuum, q_grid)))
    )
    checks.append(
        Check(
            "n1 θ=1 equals q² vacuum",
            max_difference(StateSpec.n_particle(1, 1.0, 1.0, 1.0), lambda: q_grid**2 * density(vacuum, q_grid)),
        )
    )
    checks.append(
        Check(
            "superposition v=0 equals n1",
            max_difference(
                StateSpec.superposition(1.0, 0.0, ff=1.0, gg=2.0, fg=0.8),
                lambda: density(StateSpec.n_particle(1, 1.0, 2.0, 0.8), q_grid),
            ),
        )
    )
    checks.append(
        Check(
            "coherent imaginary overlap equals vacuum",
            max_difference(StateSpec.coherent(1.0, 1.0, 0.5j), lambda: density(vacuum, q_grid)),
        )
    )

    def characteristic() -> Measurement:
        t = np.linspace(0.0, 3.0, 31)
        state = StateSpec.n_particle(1, ff=1.3, gg=1.0, fg=math.sqrt(0.5 * 1.3))
        numeric = characteristic_function(state, t, quad)
        closed = one_particle_characteristic(1.3, state.theta, t)
        return Measurement(target=0.0, observed=float(np.max(np.abs(numeric - closed))), tol=CHARACTERISTIC_TOL)

    checks.append(Check("n1 characteristic function", characteristic))

    def sampled(state: StateSpec, offset: int) -> Callable[[], Measurement]:
        def measure() -> Measurement:
            samples = sample_density(state, profile.density_samples, profile.seed + offset)
            return _ks_measurement(samples, lambda q: cdf(state, q))

        return measure

    for offset, (label, state) in enumerate(
        [
            ("n1 θ=1", StateSpec.n_particle(1, 1.0, 1.0, 1.0)),
            ("n1 θ=0.5", StateSpec.n_particle(1, 1.0, 1.0, math.sqrt(0.5))),
            ("n2 θ=0.5", StateSpec.n_particle(2, 1.0, 1.0, math.sqrt(0.5))),
            ("n3 θ=0.75", StateSpec.n_particle(3, 1.0, 1.0, math.sqrt(0.75))),
        ]
    ):
        checks.append(Check(f"KS samples {label}", sampled(state, offset)))
    return checks


def kernel_checks(profile: BudgetProfile) -> list[Check]:
    quad = profile.quadrature
    m = profile.mass
    checks = []

    def against_oracle(r: float) -> Callable[[], Measurement]:
        return lambda: Measurement(
            target=kernel_oracle(r, m, quad), observed=antilocal_kernel(r, m), tol=KERNEL_RTOL, relative=True
        )

    for mr in KERNEL_RADII:
        checks.append(Check(f"kernel matches transform mr={mr:g}", against_oracle(mr / m)))

    radii = np.linspace(0.5, 10.0, 96) / m
    checks.append(Check("kernel positive", lambda: _holds(bool(np.all(antilocal_kernel(radii, m) > 0.0)))))

    def decays_faster_than_exponential() -> Measurement:
        r = np.linspace(2.0, 10.0, 81) / m
        profile_values = np.log(antilocal_kernel(r, m)) + m * r
        return _holds(bool(np.all(np.diff(profile_values) < 0.0)))

    checks.append(Check("log kernel + mr decreasing", decays_faster_than_exponential))
    checks.append(
        Check(
            "bessel K2 small-argument series",
            lambda: Measurement(target=bessel_k_series(2, 0.5), observed=bessel_k2(0.5), tol=1e-10, relative=True),
        )
    )
    checks.append(
        Check(
            "bessel K2 asymptotic expansion",
            lambda: Measurement(target=bessel_k_asymptotic(2, 30.0), observed=bessel_k2(30.0), tol=1e-10, relative=True),
        )
    )
    return checks


def boost_checks(profile: BudgetProfile) -> list[Check]:
    quad = QuadratureSpec(k_max=profile.k_max, rel_tol=1e-8)
    m = profile.mass
    g = TestFunction.gaussian(0.8, center=(0.5, 0.0, 0.3))
    pairs = {
        "gaussians": (TestFunction.gaussian(1.0), g),
        "box-gaussian": (TestFunction.box((0.5, 0.5, 0.5), center=(0.0, 0.2, -0.4)), g),
    }
    references: dict[str, complex] = {}
    checks = []

    def reference(label: str) -> complex:
        if label not in references:
            references[label] = inner_product(*pairs[label], m, 1.0, quad)
        return references[label]

    # the complex value is invariant, not only its magnitude
    def invariant(label: str, rapidity: float) -> Callable[[], Measurement]:
        def measure() -> Measurement:
            expected = reference(label)
            boosted = boosted_inner_product(*pairs[label], rapidity, m, 1.0, quad)
            return Measurement(target=0.0, observed=abs(boosted - expected), tol=BOOST_RTOL * abs(expected))

        return measure

    for label in pairs:
        for rapidity in BOOST_RAPIDITIES:
            checks.append(Check(f"boost invariance {label} η={rapidity:g}", invariant(label, rapidity)))

    # (f,g) of real functions is real though the pulled-back integrand is not even in k
    def stays_real() -> Measurement:
        boosted = boosted_inner_product(*pairs["box-gaussian"], BOOST_RAPIDITIES[-1], m, 1.0, quad)
        return Measurement(target=0.0, observed=abs(boosted.imag), tol=BOOST_RTOL * abs(boosted))

    checks.append(Check("boosted overlap of real functions is real", stays_real))
    return checks


def emt_checks(profile: BudgetProfile) -> list[Check]:
    m = profile.mass
    budget = profile.one_particle
    lattice = budget.lattice
    reg = Regularizer.kg_vacuum(m)
    checks = []

    def single_mode_rank_one() -> Measurement:
        index = (1, 2, 0)
        config = FieldConfiguration.single_mode(EMT_LATTICE, index, EMT_LATTICE.volume * (1.0 + 0.5j))
        tensor = emt_components(config, m, kT=1.0)
        kx, ky, kz = wavenumber_grid(EMT_LATTICE)
        k = np.array([kx[index], ky[index], kz[index]])
        four = np.concatenate([[dispersion(k, m)], k])
        scale = tensor[0, 0] / four[0] ** 2
        residual = float(np.max(np.abs(tensor - scale * np.outer(four, four))) / np.max(np.abs(tensor)))
        return Measurement(target=0.0, observed=residual, tol=EMT_RANK_TOL)

    checks.append(Check("single-mode tensor is rank one", single_mode_rank_one))

    spec = EnsembleSpec(lattice=lattice, reg=reg, count=budget.samples, seed=profile.seed)
    ensemble = sample_vacuum(spec, workers=profile.workers)

    def hermitian_pairing() -> Measurement:
        return Measurement(target=0.0, observed=ensemble[0].hermitian_residual(), tol=1e-10)

    checks.append(Check("vacuum samples are Hermitian", hermitian_pairing))

    def energy_is_hamiltonian() -> Measurement:
        config = ensemble[0]
        return Measurement(
            target=hamiltonian(config, reg), observed=float(emt_components(config, m, kT=1.0)[0, 0]), tol=1e-12, relative=True
        )

    checks.append(Check("T00 equals Hamiltonian", energy_is_hamiltonian))

    tensors: list[np.ndarray] = []

    def vacuum_mean(component: tuple[int, int]) -> Callable[[], Measurement]:
        def measure() -> Measurement:
            if not tensors:
                tensors.extend(emt_components(config, m, kT=1.0) for config in ensemble)
            values = [tensor[component] for tensor in tensors]
            return _within_sigma(estimate_mean(values), float(vacuum_emt_target(lattice, reg, m, kT=1.0)[component]))

        return measure

    checks.append(Check("vacuum mean T00", vacuum_mean((0, 0))))
    checks.append(Check("vacuum mean T11", vacuum_mean((1, 1))))

    def one_particle_mean() -> Measurement:
        g = TestFunction.gaussian(1.0)
        excited = sample_one_particle(lattice, m, 1.0, 1.0, g, budget.samples, profile.seed, workers=profile.workers)
        values = [emt_components(config, m, kT=1.0)[0, 0] for config in excited]
        return _within_sigma(estimate_mean(values), float(one_particle_emt_target(lattice, g, m, kT=1.0)[0, 0]))

    checks.append(Check("one-particle mean T00", one_particle_mean))
    return checks


def nonlocal_checks(profile: BudgetProfile) -> list[Check]:
    m = profile.mass
    quad = profile.quadrature
    box = TestFunction.box((0.5, 0.5, 0.5))
    shifted = [TestFunction.box((0.5, 0.5, 0.5), center=(d / m, 0.0, 0.0)) for d in SEPARATIONS]
    checks = []
    cache: dict[float, float] = {}

    def overlap(d: float, g: TestFunction) -> float:
        if d not in cache:
            cache[d] = position_space_inner_product(box, g, m)
        return cache[d]

    for d, g in zip(SEPARATIONS, shifted, strict=True):
        checks.append(Check(f"overlap nonzero m·d={d:g}", lambda d=d, g=g: _holds(abs(overlap(d, g)) > 0.0)))

    def decays_linearly() -> Measurement:
        logs = np.log([abs(overlap(d, g)) for d, g in zip(SEPARATIONS, shifted, strict=True)])
        slopes = np.diff(logs) / np.diff(SEPARATIONS)
        return _holds(bool(np.all(slopes <= -NONLOCAL_MIN_DECAY)))

    checks.append(Check("log overlap decreases at least linearly", decays_linearly))

    def position_matches_spectral() -> Measurement:
        spectral = inner_product(box, shifted[0], m, 1.0, quad).real
        return Measurement(target=spectral, observed=overlap(SEPARATIONS[0], shifted[0]), tol=POSITION_SPECTRAL_RTOL, relative=True)

    checks.append(Check("position-space matches spectral", position_matches_spectral))
    return checks


def montecarlo_checks(profile: BudgetProfile) -> list[Check]:
    m = profile.mass
    reg = Regularizer.kg_vacuum(m)
    fs = profile.gaussians()
    budget = profile.vacuum
    lattice = budget.lattice
    weight = SpectralWeight.classical(reg)
    checks = []
    moments_cache = {}

    def vacuum_moments():
        if "vacuum" not in moments_cache:
            spec = EnsembleSpec(lattice=lattice, reg=reg, count=budget.samples, seed=profile.seed)
            moments_cache["vacuum"] = estimate_moments(sample_vacuum(spec, workers=profile.workers), fs)
        return moments_cache["vacuum"]

    checks.append(Check("vacuum mean f0", lambda: _within_sigma(vacuum_moments().means[0], 0.0)))
    for i, f in enumerate(fs):
        checks.append(
            Check(
                f"vacuum variance f{i}",
                lambda i=i, f=f: _within_sigma(vacuum_moments().variance(i), lattice_variance(f, lattice, weight)),
            )
        )

    # ties the lattice targets above to the continuum variance
    def lattice_matches_continuum(f: TestFunction) -> Callable[[], Measurement]:
        return lambda: Measurement(
            target=smeared_variance(f, weight, profile.quadrature),
            observed=lattice_variance(f, lattice, weight),
            tol=LATTICE_CONTINUUM_RTOL,
            relative=True,
        )

    for i, f in enumerate(fs):
        checks.append(Check(f"lattice variance f{i} matches continuum", lattice_matches_continuum(f)))
    for j in range(1, len(fs)):
        checks.append(
            Check(
                f"vacuum covariance f0 f{j}",
                lambda j=j: _within_sigma(
                    vacuum_moments().covariance[0][j], lattice_inner_product(fs[0], fs[j], lattice, weight).real
                ),
            )
        )
    checks.append(
        Check(
            "vacuum excess kurtosis f0",
            lambda: _within_sigma(excess_kurtosis(vacuum_moments().values[:, 0]), 0.0, KURTOSIS_SIGMA_BAND),
        )
    )

    one = profile.one_particle
    op_lattice = one.lattice
    side = op_lattice.side_length
    g = TestFunction.gaussian(1.0)
    smearings = {
        "θ≈0": TestFunction.gaussian(1.0, center=(0.5 * side, 0.5 * side, 0.5 * side)),
        "θ≈0.5": TestFunction.gaussian(1.0, center=(1.5, 0.0, 0.0)),
        "θ=1": g,
    }
    quantum = SpectralWeight.quantum(mass=m)
    smeared_cache = {}

    def one_particle_values() -> np.ndarray:
        if "values" not in smeared_cache:
            ensemble = sample_one_particle(op_lattice, m, 1.0, 1.0, g, one.samples, profile.seed, workers=profile.workers)
            smeared_cache["values"] = SmearingPanel(list(smearings.values()), op_lattice).collect(ensemble)
        return smeared_cache["values"]

    def ks_against_state(column: int, f: TestFunction) -> Callable[[], Measurement]:
        def measure() -> Measurement:
            state = StateSpec.n_particle(
                1,
                ff=lattice_variance(f, op_lattice, quantum),
                gg=lattice_variance(g, op_lattice, quantum),
                fg=lattice_inner_product(f, g, op_lattice, quantum).real,
            )
            return _ks_measurement(one_particle_values()[:, column], lambda q: cdf(state, q))

        return measure

    for column, (label, f) in enumerate(smearings.items()):
        checks.append(Check(f"one-particle KS {label}", ks_against_state(column, f)))

    def second_moment() -> Measurement:
        gg = lattice_variance(g, op_lattice, quantum)
        return _within_sigma(estimate_mean(one_particle_values()[:, 2] ** 2), 3.0 * gg)

    checks.append(Check("one-particle second moment f=g", second_moment))
    return checks


SUITES: dict[str, Callable[[BudgetProfile], list[Check]]] = {
    "variance": variance_checks,
    "density": density_checks,
    "kernel": kernel_checks,
    "boost": boost_checks,
    "emt": emt_checks,
    "nonlocal": nonlocal_checks,
    "montecarlo": montecarlo_checks,
}
SUITE_NAMES = (*SUITES, "all")


def suite_checks(name: str, profile: BudgetProfile) -> list[Check]:
    if name == "all":
        checks = []
        for suite, build in SUITES.items():
            checks.extend(Check(f"{suite}/{check.name}", check.measure) for check in build(profile))
        return checks
    if name not in SUITES:
        raise ConfigurationError(f"unknown suite '{name}' (choose from {', '.join(SUITE_NAMES)})")
    return SUITES[name](profile)


def run_suite(name: str, profile: BudgetProfile) -> SuiteReport:
    """Run every check of suite `name` in declaration order."""
    checks = suite_checks(name, profile)
    logger.debug(f"running suite {name} ({len(checks)} checks, profile {profile.name})")
    return run_checks(name, checks)


__all__ = ["SUITES", "SUITE_NAMES", "suite_checks", "run_suite"]

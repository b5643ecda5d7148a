"""Tests for the named acceptance suites."""

import kgvacuum.verify.suites as suites
import pytest
from kgvacuum.data.profiles import BudgetProfile
from kgvacuum.data.profiles import EnsembleBudget
from kgvacuum.data.profiles import GaussianEntry
from kgvacuum.errors import ConfigurationError
from kgvacuum.verify.report import run_checks
from kgvacuum.verify.suites import SUITE_NAMES
from kgvacuum.verify.suites import run_suite
from kgvacuum.verify.suites import suite_checks


def make_profile(vacuum: EnsembleBudget) -> BudgetProfile:
    return BudgetProfile(
        name="tiny",
        seed=20240917,
        mass=1.0,
        rel_tol=1e-10,
        k_max=40.0,
        vacuum=vacuum,
        one_particle=EnsembleBudget(n_per_side=8, spacing=0.5, samples=400),
        density_samples=4000,
        workers=1,
        test_functions=[GaussianEntry(width=1.0), GaussianEntry(width=1.0, center=(1.0, 0.0, 0.0))],
    )


@pytest.fixture
def tiny_profile():
    """A profile small enough to run suites inside unit tests.

    The vacuum box (side 12, unit spacing) is wide enough for its lattice
    variances to sit within 1e-3 of the continuum values.
    """
    return make_profile(EnsembleBudget(n_per_side=12, spacing=1.0, samples=400))


def checks_named(profile: BudgetProfile, suite: str, prefix: str):
    return [check for check in suite_checks(suite, profile) if check.name.startswith(prefix)]


class TestSuiteCatalogue:
    def test_names(self):
        assert SUITE_NAMES == ("variance", "density", "kernel", "boost", "emt", "nonlocal", "montecarlo", "all")

    def test_unknown_suite(self, tiny_profile):
        with pytest.raises(ConfigurationError):
            suite_checks("gravity", tiny_profile)

    def test_all_prefixes_check_names(self, tiny_profile):
        names = [check.name for check in suite_checks("all", tiny_profile)]
        assert names[0].startswith("variance/")
        assert any(name.startswith("montecarlo/") for name in names)


class TestAnalyticSuites:
    def test_variance_passes(self, tiny_profile):
        report = run_suite("variance", tiny_profile)
        assert report.passed, report.failures

    def test_variance_weight_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "variance-weight")
        assert not run_suite("variance", tiny_profile).passed

    def test_density_passes(self, tiny_profile):
        report = run_suite("density", tiny_profile)
        assert report.passed, report.failures

    def test_density_mass_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "density-mass")
        report = run_suite("density", tiny_profile)
        assert any(check.name.startswith("mass n2") for check in report.failures)

    @pytest.mark.slow
    def test_kernel_passes(self, tiny_profile):
        report = run_suite("kernel", tiny_profile)
        assert report.passed, report.failures

    @pytest.mark.slow
    def test_kernel_constant_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "kernel-constant")
        assert not run_suite("kernel", tiny_profile).passed


class TestBoostSuite:
    def test_passes(self, tiny_profile):
        report = run_suite("boost", tiny_profile)
        assert report.passed, report.failures

    def test_includes_identity_and_reverse_boosts(self, tiny_profile):
        names = [check.name for check in suite_checks("boost", tiny_profile)]
        assert "boost invariance gaussians η=0" in names
        assert "boost invariance box-gaussian η=-0.5" in names

    def test_boost_measure_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "boost-measure")
        report = run_suite("boost", tiny_profile)
        failed = [check.name for check in report.failures]
        assert "boost invariance gaussians η=1" in failed
        assert "boost invariance gaussians η=0" not in failed

    def test_sign_flip_is_detected(self, tiny_profile, monkeypatch):
        original = suites.boosted_inner_product
        monkeypatch.setattr(suites, "boosted_inner_product", lambda *args: -original(*args))
        report = run_suite("boost", tiny_profile)
        assert all(check.name.startswith("boost invariance") for check in report.failures)
        assert len(report.failures) == 10


class TestNonlocalSuite:
    def test_passes(self, tiny_profile):
        report = run_suite("nonlocal", tiny_profile)
        assert report.passed, report.failures

    def test_position_kernel_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "position-kernel")
        report = run_suite("nonlocal", tiny_profile)
        assert "position-space matches spectral" in [check.name for check in report.failures]


class TestSampledSuites:
    def test_emt_hermitian_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "hermitian")
        report = run_suite("emt", tiny_profile)
        assert "vacuum samples are Hermitian" in [check.name for check in report.failures]

    @pytest.mark.slow
    def test_emt_passes(self, tiny_profile):
        report = run_suite("emt", tiny_profile)
        assert report.passed, report.failures

    def test_lattice_targets_match_continuum(self, tiny_profile):
        checks = checks_named(tiny_profile, "montecarlo", "lattice variance")
        assert len(checks) == 2
        report = run_checks("montecarlo", checks)
        assert report.passed, report.failures

    def test_small_box_misses_continuum(self):
        cramped = make_profile(EnsembleBudget(n_per_side=8, spacing=0.5, samples=400))
        report = run_checks("montecarlo", checks_named(cramped, "montecarlo", "lattice variance"))
        assert len(report.failures) == 2

    @pytest.mark.slow
    def test_montecarlo_passes(self, tiny_profile):
        report = run_suite("montecarlo", tiny_profile)
        assert report.passed, report.failures

    @pytest.mark.slow
    def test_montecarlo_maxwell_scale_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "maxwell-scale")
        report = run_suite("montecarlo", tiny_profile)
        assert "one-particle second moment f=g" in [check.name for check in report.failures]

    @pytest.mark.slow
    def test_montecarlo_hermitian_fault_fails(self, tiny_profile, monkeypatch):
        monkeypatch.setenv("KGVACUUM_FAULT_INJECT", "hermitian")
        assert not run_suite("montecarlo", tiny_profile).passed

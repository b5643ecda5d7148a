"""Tests for check evaluation and report serialization."""

import json
import math

from kgvacuum.errors import DivergentIntegral
from kgvacuum.verify.report import Check
from kgvacuum.verify.report import Measurement
from kgvacuum.verify.report import run_check
from kgvacuum.verify.report import run_checks


class TestMeasurement:
    def test_absolute_and_relative(self):
        assert Measurement(target=1.0, observed=1.05, tol=0.1).passed
        assert not Measurement(target=100.0, observed=101.0, tol=1e-3, relative=True).passed
        assert Measurement(target=100.0, observed=100.05, tol=1e-3, relative=True).passed

    def test_nan_never_passes(self):
        assert not Measurement(target=0.0, observed=math.nan, tol=1.0).passed


class TestRunCheck:
    def test_error_becomes_failure(self):
        def diverges() -> Measurement:
            raise DivergentIntegral("ultraviolet")

        result = run_check(Check("diverging", diverges))
        assert not result.passed
        assert result.observed is None
        assert result.message == "ultraviolet"


class TestSuiteReport:
    def test_payload_layout(self):
        report = run_checks(
            "demo",
            [
                Check("ok", lambda: Measurement(target=1.0, observed=1.0, tol=0.0)),
                Check("bad", lambda: Measurement(target=0.0, observed=math.inf, tol=1.0)),
            ],
        )
        payload = json.loads(report.to_json())
        assert list(payload) == ["suite", "checks", "pass"]
        assert list(payload["checks"][0]) == ["name", "target", "observed", "tol", "pass"]
        assert payload["checks"][0]["pass"] is True
        assert payload["checks"][1]["observed"] is None
        assert payload["pass"] is False
        assert [check.name for check in report.failures] == ["bad"]
        assert report.wall_time >= 0.0

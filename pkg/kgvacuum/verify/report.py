"""Check declarations and suite reports."""

from __future__ import annotations

import json
import logging
import math
import time
from collections.abc import Callable
from collections.abc import Sequence
from dataclasses import dataclass

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from ..errors import KgVacuumError

logger = logging.getLogger(__name__)


def _json_number(value: float | None) -> float | None:
    # JSON has no NaN or infinity
    if value is None or not math.isfinite(value):
        return None
    return value


@dataclass(frozen=True)
class Measurement:
    """Target, observed value and tolerance; `relative` scales tol by |target|."""

    target: float
    observed: float
    tol: float
    relative: bool = False

    @property
    def passed(self) -> bool:
        if not (math.isfinite(self.observed) and math.isfinite(self.target)):
            return False
        bound = self.tol * abs(self.target) if self.relative else self.tol
        return abs(self.observed - self.target) <= bound


@dataclass(frozen=True)
class Check:
    name: str
    measure: Callable[[], Measurement]


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    name: str
    target: float | None
    observed: float | None
    tol: float | None
    passed: bool = Field(alias="pass")
    message: str | None = Field(default=None, exclude=True)

    def payload(self) -> dict:
        return {
            "name": self.name,
            "target": _json_number(self.target),
            "observed": _json_number(self.observed),
            "tol": _json_number(self.tol),
            "pass": self.passed,
        }


class SuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    checks: list[CheckResult]
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def payload(self) -> dict:
        return {"suite": self.suite, "checks": [check.payload() for check in self.checks], "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2)


def run_check(check: Check) -> CheckResult:
    """Evaluate one check; analytic or sampling errors become a failing result."""
    try:
        measurement = check.measure()
    except KgVacuumError as e:
        logger.warning(f"check {check.name} raised {type(e).__name__}: {e}")
        return CheckResult(name=check.name, target=None, observed=None, tol=None, passed=False, message=str(e))
    result = CheckResult(
        name=check.name,
        target=measurement.target,
        observed=measurement.observed,
        tol=measurement.tol,
        passed=measurement.passed,
    )
    logger.debug(f"check {check.name}: {'pass' if result.passed else 'FAIL'}", extra={"check": check.name, "observed": result.observed})
    return result


def run_checks(suite: str, checks: Sequence[Check]) -> SuiteReport:
    started = time.perf_counter()
    results = [run_check(check) for check in checks]
    return SuiteReport(suite=suite, checks=results, wall_time=time.perf_counter() - started)


__all__ = ["Measurement", "Check", "CheckResult", "SuiteReport", "run_check", "run_checks"]

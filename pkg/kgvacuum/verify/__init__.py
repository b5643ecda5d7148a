"""KS tests, check reports and the named acceptance suites."""

from .ks import KSResult
from .ks import ks_test
from .report import Check
from .report import CheckResult
from .report import Measurement
from .report import SuiteReport
from .suites import SUITE_NAMES
from .suites import run_suite

__all__ = ["KSResult", "ks_test", "Check", "CheckResult", "Measurement", "SuiteReport", "SUITE_NAMES", "run_suite"]

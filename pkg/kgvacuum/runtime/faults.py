"""Fault-injection test hook.

KGVACUUM_FAULT_INJECT holds a comma-separated list of fault names. It is
read at call time so tests can toggle it with monkeypatch. Off by default.

Known faults:
    kernel-constant   anti-local kernel constant scaled by 1.01
    variance-weight   classical spectral weight scaled by 1.01
    boost-measure     boosted measure uses the boosted energy in 1/(2ω)
    position-kernel   position-space inner-product kernel scaled by 1.01
    density-mass      constant term of the two-particle density perturbed
    maxwell-scale     signed-Maxwell draws scaled by 1/sqrt(3)
    hermitian         one mode pair of every generated field loses its pairing
"""

from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

FAULT_ENV_VAR = "KGVACUUM_FAULT_INJECT"

KNOWN_FAULTS = frozenset(
    {
        "kernel-constant",
        "variance-weight",
        "boost-measure",
        "position-kernel",
        "density-mass",
        "maxwell-scale",
        "hermitian",
    }
)


def active_faults() -> frozenset[str]:
    """Return the set of faults requested through the environment."""
    raw = os.environ.get(FAULT_ENV_VAR, "")
    names = frozenset(name.strip() for name in raw.split(",") if name.strip())
    unknown = names - KNOWN_FAULTS
    if unknown:
        logger.warning(f"Ignoring unknown fault names: {', '.join(sorted(unknown))}")
    return names & KNOWN_FAULTS


def fault_active(name: str) -> bool:
    return name in active_faults()


__all__ = ["FAULT_ENV_VAR", "KNOWN_FAULTS", "active_faults", "fault_active"]

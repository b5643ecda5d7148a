"""Counter-based random streams.

Each (seed, stream, sample index) triple addresses its own Philox stream:
the key holds the seed and stream id, the high word of the 256-bit counter
holds the sample index. Sample i therefore draws the same numbers no matter
which worker generates it, or in which order. Streams are addressed per
sample, not per mode: one generator fills every mode of a configuration in
FFT order.
"""

from __future__ import annotations

import math
from enum import IntEnum

import numpy as np

from ..errors import ConfigurationError
from ..runtime.faults import fault_active

SEED_LIMIT = 2**64


class Stream(IntEnum):
    VACUUM = 0
    MAXWELL = 1
    STATES = 2


def check_seed(seed: int) -> int:
    if not 0 <= seed < SEED_LIMIT:
        raise ConfigurationError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return int(seed)


def sample_generator(seed: int, stream: Stream, index: int) -> np.random.Generator:
    check_seed(seed)
    if index < 0:
        raise ConfigurationError(f"sample index must be nonnegative, got {index}")
    bit_generator = np.random.Philox(key=(int(stream) << 64) | seed, counter=index << 192)
    return np.random.Generator(bit_generator)


def signed_maxwell(rng: np.random.Generator, size=None) -> np.ndarray | float:
    """Random sign times a chi(3) magnitude; second moment 3."""
    normals = rng.standard_normal(size=(3,) if size is None else (*np.atleast_1d(size), 3))
    magnitude = np.sqrt(np.sum(normals * normals, axis=-1))
    sign = np.where(rng.random(size=magnitude.shape) < 0.5, -1.0, 1.0)
    draws = sign * magnitude
    if fault_active("maxwell-scale"):
        draws = draws / math.sqrt(3.0)
    if size is None:
        return float(draws)
    return draws


__all__ = ["SEED_LIMIT", "Stream", "check_seed", "sample_generator", "signed_maxwell"]

"""Exact samplers for the single-observable densities."""

from __future__ import annotations

import itertools
import logging
import math
from functools import lru_cache

import numpy as np

from ..errors import ConfigurationError
from ..errors import EnvelopeFailure
from ..sampler.rng import Stream
from ..sampler.rng import check_seed
from ..sampler.rng import sample_generator
from ..sampler.rng import signed_maxwell
from .densities import SQRT_2PI
from .densities import density_polynomial
from .densities import exact_mass
from .models import StateKind
from .models import StateSpec

logger = logging.getLogger(__name__)

ENVELOPE_VARIANCES = (1.0, 2.0, 3.0)
ENVELOPE_WEIGHT_STEP = 0.1
ENVELOPE_SAFETY = 1.1
ENVELOPE_GRID = np.linspace(-12.0, 12.0, 2401)
MIN_ACCEPTANCE = 0.01

BATCH_SIZE = 4096


def _mixture_pdf(z: np.ndarray, weights) -> np.ndarray:
    return sum(
        w * np.exp(-0.5 * z * z / s2) / (SQRT_2PI * math.sqrt(s2)) for w, s2 in zip(weights, ENVELOPE_VARIANCES, strict=True)
    )


def _normalised_target(coefficients: np.ndarray, z: np.ndarray) -> np.ndarray:
    return np.polynomial.polynomial.polyval(z, coefficients) * np.exp(-0.5 * z * z) / (SQRT_2PI * exact_mass(coefficients))


def _simplex_weights(step: float):
    ticks = round(1.0 / step)
    for i, j in itertools.product(range(ticks + 1), repeat=2):
        if i + j <= ticks:
            yield (i * step, j * step, (ticks - i - j) * step)


@lru_cache(maxsize=64)
def fit_envelope(coefficients: tuple[float, ...]) -> tuple[tuple[float, float, float], float]:
    """Mixture weights over variances {1,2,3} and the bound M with target ≤ M·envelope."""
    target = _normalised_target(np.asarray(coefficients), ENVELOPE_GRID)
    best: tuple[tuple[float, float, float], float] | None = None
    for weights in _simplex_weights(ENVELOPE_WEIGHT_STEP):
        bound = float(np.max(target / _mixture_pdf(ENVELOPE_GRID, weights)))
        if best is None or bound < best[1]:
            best = (weights, bound)
    assert best is not None
    weights, bound = best
    return weights, bound * ENVELOPE_SAFETY


def _rejection_sample(coefficients: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    weights, bound = fit_envelope(tuple(float(c) for c in coefficients))
    accepted: list[np.ndarray] = []
    n_accepted = 0
    n_proposed = 0
    while n_accepted < count:
        component = rng.choice(len(ENVELOPE_VARIANCES), size=BATCH_SIZE, p=np.asarray(weights) / sum(weights))
        proposals = rng.standard_normal(BATCH_SIZE) * np.sqrt(np.asarray(ENVELOPE_VARIANCES)[component])
        ratio = _normalised_target(coefficients, proposals) / (bound * _mixture_pdf(proposals, weights))
        keep = proposals[rng.random(BATCH_SIZE) < ratio]
        n_proposed += BATCH_SIZE
        n_accepted += keep.size
        accepted.append(keep)
        if n_accepted / n_proposed < MIN_ACCEPTANCE:
            raise EnvelopeFailure(
                f"rejection acceptance {n_accepted / n_proposed:.4f} below {MIN_ACCEPTANCE} (envelope bound {bound:.3g})"
            )
    logger.debug(f"rejection sampler accepted {n_accepted}/{n_proposed} proposals")
    return np.concatenate(accepted)[:count]


def sample_density(state: StateSpec, count: int, seed: int) -> np.ndarray:
    """`count` independent draws of q from the normalised density of `state`."""
    check_seed(seed)
    if count < 1:
        raise ConfigurationError(f"count must be positive, got {count}")
    rng = sample_generator(seed, Stream.STATES, 0)
    scale = math.sqrt(state.ff)
    coefficients, mean = density_polynomial(state)

    if state.kind in (StateKind.VACUUM, StateKind.COHERENT):
        return mean + scale * rng.standard_normal(count)
    if state.kind == StateKind.N_PARTICLE and state.n == 1:
        gaussian = rng.standard_normal(count)
        maxwell = signed_maxwell(rng, size=count)
        excited = rng.random(count) < state.theta
        return scale * np.where(excited, maxwell, gaussian)
    return mean + scale * _rejection_sample(coefficients, count, rng)


__all__ = ["ENVELOPE_VARIANCES", "MIN_ACCEPTANCE", "fit_envelope", "sample_density"]

"""
Monte Carlo estimate of M_n over B x B, used as an independent check on the
quadrature.

Points are drawn uniformly in the unit ball: a normalized Gaussian vector
for the direction and the cube root of a uniform variate for the radius.
Each shard owns a Philox stream spawned from one SeedSequence, so the merged
estimate depends on (seed, samples, shards) and not on how shards are
scheduled across workers.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from limits.eigenpair import u0
from special.exceptions import DomainError

from .models import MomentEstimate, MomentMethod

logger = logging.getLogger(__name__)

MIN_SAMPLES = 1000
BALL_VOLUME = 4 * math.pi / 3
# Points drawn per batch inside one shard
CHUNK = 250_000


def sample_ball(rng, count):
    """Return tuple (points, radii) of ``count`` points uniform in the unit ball."""
    directions = rng.standard_normal((count, 3))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    radii = rng.random(count) ** (1 / 3)
    return directions * radii[:, None], radii


def _shard_sums(n, count, seed_sequence):
    rng = np.random.Generator(np.random.Philox(seed_sequence))
    s1 = s2 = 0.0
    remaining = count
    while remaining:
        batch = min(remaining, CHUNK)
        x, rx = sample_ball(rng, batch)
        y, ry = sample_ball(rng, batch)
        distance = np.linalg.norm(x - y, axis=1)
        values = BALL_VOLUME ** 2 * distance ** n * u0(rx) * u0(ry)
        s1 += float(values.sum())
        s2 += float(np.dot(values, values))
        remaining -= batch
    return s1, s2


def shard_sizes(samples, shards):
    base, extra = divmod(samples, shards)
    return [base + (1 if index < extra else 0) for index in range(shards)]


def moment_monte_carlo(n, samples, seed, shards=1, workers=1):
    if int(n) != n or n < 1:
        raise DomainError(f"moment order must be a positive integer, got {n}")
    if int(samples) != samples or samples < MIN_SAMPLES:
        raise DomainError(f"Monte Carlo needs at least {MIN_SAMPLES} samples, got {samples}")
    if int(shards) != shards or not 1 <= shards <= samples:
        raise DomainError(f"shard count must lie in [1, samples], got {shards}")
    n, samples, shards = int(n), int(samples), int(shards)

    streams = np.random.SeedSequence(seed).spawn(shards)
    sizes = shard_sizes(samples, shards)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(lambda args: _shard_sums(n, *args), zip(sizes, streams)))
    else:
        sums = [_shard_sums(n, size, stream) for size, stream in zip(sizes, streams)]

    s1 = sum(part[0] for part in sums)
    s2 = sum(part[1] for part in sums)
    mean = s1 / samples
    variance = max(s2 - samples * mean * mean, 0.0) / (samples - 1)
    stderr = math.sqrt(variance / samples)
    logger.info("M%d Monte Carlo: %d samples in %d shards, %.10g +/- %.2g", n, samples, shards, mean, stderr)
    return MomentEstimate(
        n=n, value=mean, method=MomentMethod.MONTE_CARLO, stderr=stderr,
        samples=samples, seed=seed, shards=shards,
    )

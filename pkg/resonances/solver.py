"""
Newton iteration on the dispersion relation G(k) = sin(k r s) + i s cos(k r s).

G is entire, so the iteration has no poles to trip over; the Bessel/Hankel
form F only certifies the converged root.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

from special.exceptions import ConvergenceError, DomainError, NonFiniteError

from .exact import certify, dispersion_derivative, dispersion_residual, wave_number_exact
from .models import ModeSource, SolverConfig

logger = logging.getLogger(__name__)

DEGENERATE_DERIVATIVE = 1e-300
DEDUPLICATION_RADIUS = 1e-8
# |F| at a converged root must stay below this multiple of the solver tolerance
INTERFACE_FACTOR = 100


def branch_index(k, spec):
    """Branch m of a root, read off Re(k r s) = pi/2 + m pi."""
    w = k * spec.radius * spec.index
    return round((w.real - math.pi / 2) / math.pi)


def newton_solve(seed, spec, cfg=None):
    cfg = cfg or SolverConfig()
    k = complex(seed)
    if k == 0:
        raise DomainError("Newton seed must be non-zero")

    residual = math.inf
    for iteration in range(1, cfg.max_iter + 1):
        try:
            g = dispersion_residual(k, spec)
            dg = dispersion_derivative(k, spec)
        except NonFiniteError as exc:
            raise ConvergenceError(
                f"Newton iterate left the representable range for {spec}",
                iterations=iteration, last_iterate=k, residual=residual,
            ) from exc
        if abs(dg) < DEGENERATE_DERIVATIVE:
            raise ConvergenceError(
                f"degenerate Newton step at k={k!r} for {spec}",
                iterations=iteration, last_iterate=k, residual=abs(g),
            )
        step = g / dg
        k -= step
        try:
            residual = abs(dispersion_residual(k, spec))
        except NonFiniteError:
            residual = math.inf
        logger.debug("newton %d: k=%r |G|=%.3e |step|=%.3e", iteration, k, residual, abs(step))
        if residual < cfg.tol and abs(step) <= cfg.step_tol * max(1.0, abs(k)):
            break
    else:
        logger.warning("Newton did not converge for %s from seed %r", spec, seed)
        raise ConvergenceError(
            f"Newton iteration did not converge within {cfg.max_iter} steps for {spec} "
            f"(last |G| = {residual:.3e})",
            iterations=cfg.max_iter, last_iterate=k, residual=residual,
        )

    m = branch_index(k, spec)
    if m < 0:
        raise ConvergenceError(
            f"Newton converged to k={k!r}, outside the family with positive real part",
            iterations=iteration, last_iterate=k, residual=residual,
        )
    mode = certify(k, spec, m, source=ModeSource.NEWTON, iterations=iteration)
    if mode.interface_residual >= INTERFACE_FACTOR * cfg.tol:
        raise ConvergenceError(
            f"root k={k!r} failed certification: |F| = {mode.interface_residual:.3e}",
            iterations=iteration, last_iterate=k, residual=residual,
        )
    return mode


def analytic_seed(spec, m, offset):
    """
    Closed-form root of branch m shifted by ``offset`` taken in the scaled
    variable k r |s|, so the shift is the same fraction of the branch spacing
    pi / (r |s|) for every ball. Without contrast only the real part exists.
    """
    shift = offset / abs(spec.radius * spec.index)
    try:
        return wave_number_exact(spec, m) + shift
    except DomainError:
        return (math.pi / 2 + m * math.pi) / (spec.radius * spec.index) + shift


def _deduplicate(modes):
    distinct = []
    for mode in modes:
        if all(abs(mode.k - kept.k) >= DEDUPLICATION_RADIUS for kept in distinct):
            distinct.append(mode)
    return distinct


def scan_branches(spec, m_max, cfg=None):
    """
    Newton from the analytic seed of every branch 0..m_max, perturbed by
    ``cfg.seed_offset``. Branches run on ``cfg.workers`` threads; results are
    collected in branch order, so the output does not depend on scheduling.
    """
    if int(m_max) != m_max or m_max < 0:
        raise DomainError(f"m_max must be a non-negative integer, got {m_max}")
    cfg = cfg or SolverConfig()
    seeds = [analytic_seed(spec, m, cfg.seed_offset) for m in range(int(m_max) + 1)]

    def solve(seed):
        return newton_solve(seed, spec, cfg)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            modes = list(pool.map(solve, seeds))
    else:
        modes = [solve(seed) for seed in seeds]

    for m, mode in enumerate(modes):
        if mode.branch_m != m:
            raise ConvergenceError(
                f"seed of branch {m} converged to branch {mode.branch_m} for {spec}",
                iterations=mode.iterations, last_iterate=mode.k, residual=mode.dispersion_residual,
            )

    distinct = _deduplicate(modes)
    if len(distinct) != len(modes):
        raise ConvergenceError(
            f"branch scan found {len(distinct)} distinct roots for {len(modes)} branches of {spec}"
        )
    distinct.sort(key=lambda mode: mode.k.real)
    logger.info("scanned %d branches of %s", len(distinct), spec)
    return distinct

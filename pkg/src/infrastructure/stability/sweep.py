"""
Region Sweep - Infrastructure Layer

Runs the ground-state solve and the stability diagnostics over a set of
(α, β) points and extracts the empirical λ₁ = 0 contour. Each α column starts
from the preset and warm-starts every further β from the field before it;
columns run one after another or on a thread pool, so the starts and the
results do not depend on the number of workers.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from itertools import groupby
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.domain.entities import RegionSample
from src.domain.errors import CknError
from src.domain.value_objects import Grid, Parameters, RadialField
from src.infrastructure.constants import problem_constants
from src.infrastructure.solver import solve_ground_state
from src.infrastructure.spectral import decay_rate_fit, decay_window, indicial_roots
from src.infrastructure.stability.linearized import assemble_linearized
from src.infrastructure.stability.spectrum import sector_spectrum
from src.infrastructure.stability.symmetry import lambda1_sign

logger = logging.getLogger(__name__)

BetaRule = Callable[[float], Sequence[float]]


def sample_point(
    params: Parameters,
    grid: Grid,
    init: Optional[RadialField] = None,
    tolerance: float = 1e-10,
) -> Tuple[RegionSample, Optional[RadialField]]:
    """
    Solve and analyze one (α, β) point.

    Failures are recorded in the sample instead of raised.

    Returns:
        (sample, converged field or None)
    """
    try:
        constants = problem_constants(params)
        result = solve_ground_state(params, grid, init=init if init is not None else "preset", tolerance=tolerance)
        lambda0 = float(sector_spectrum(assemble_linearized(0, result, params, constants), 1)[0][0])
        decision = lambda1_sign(result, params, constants=constants)
        sigma0 = indicial_roots(params, 1, c_alpha=constants.C_alpha)[0].sigma
    except CknError as error:
        logger.warning(f"sweep point alpha={params.alpha}, beta={params.beta} failed: {error.kind}: {error.message}")
        failed = RegionSample(alpha=params.alpha, beta=params.beta, p=params.p, error=f"{error.kind}: {error.message}")
        return failed, None

    try:
        decay = decay_rate_fit(result.field, decay_window(grid)).rate
    except (CknError, ValueError) as error:
        logger.debug(f"decay fit skipped at alpha={params.alpha}, beta={params.beta}: {error}")
        decay = math.nan

    sample = RegionSample(
        alpha=params.alpha,
        beta=params.beta,
        p=params.p,
        R=result.energy,
        lambda0=lambda0,
        lambda1=decision.lambda1,
        verdict=decision.verdict,
        sigma0=sigma0,
        decay_fit=decay,
        converged=True,
        rayleigh_bound=decision.rayleigh_bound,
    )
    return sample, result.field


def sweep_points(alpha_grid: Iterable[float], beta_rule: BetaRule, base: Parameters) -> List[Parameters]:
    """Expand the α grid and the per-α β list into parameter points, α-major."""
    return [base.with_weights(alpha, beta) for alpha in alpha_grid for beta in beta_rule(alpha)]


def _sweep_column(column: Sequence[Parameters], grid: Grid, tolerance: float) -> List[RegionSample]:
    samples = []
    previous: Optional[RadialField] = None
    for params in column:
        sample, field = sample_point(params, grid, init=previous, tolerance=tolerance)
        samples.append(sample)
        previous = field if field is not None else previous
    return samples


def region_sweep(
    alpha_grid: Iterable[float],
    beta_rule: BetaRule,
    base: Parameters,
    grid: Grid,
    jobs: int = 1,
    tolerance: float = 1e-10,
) -> List[RegionSample]:
    """
    Sweep the (α, β) plane at fixed (n, γ).

    Args:
        alpha_grid: α values
        beta_rule: Maps α to the β values sampled at that α
        base: Supplies n and γ
        grid: Discretization grid
        jobs: Worker threads, each running whole α columns
        tolerance: Newton tolerance per solve

    Returns:
        One RegionSample per point, in α-major input order
    """
    points = sweep_points(alpha_grid, beta_rule, base)
    if not points:
        return []
    logger.debug(f"Sweeping {len(points)} points with {jobs} job(s)")

    columns = [list(column) for _, column in groupby(points, key=lambda params: params.alpha)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(lambda column: _sweep_column(column, grid, tolerance), columns))
    else:
        outcomes = [_sweep_column(column, grid, tolerance) for column in columns]
    return [sample for column in outcomes for sample in column]


def contour(samples: Sequence[RegionSample]) -> List[Tuple[float, float]]:
    """
    Empirical λ₁ = 0 curve: for each α, linear interpolation in β across every sign change of λ₁.

    Samples without a finite λ₁ are skipped.
    """
    by_alpha: dict = {}
    for sample in samples:
        if math.isfinite(sample.lambda1):
            by_alpha.setdefault(sample.alpha, []).append((sample.beta, sample.lambda1))

    crossings = []
    for alpha in sorted(by_alpha):
        ordered = sorted(by_alpha[alpha])
        for (beta_a, value_a), (beta_b, value_b) in zip(ordered, ordered[1:]):
            if value_a == 0.0:
                crossings.append((alpha, beta_a))
            elif np.sign(value_a) != np.sign(value_b) and value_b != 0.0:
                crossings.append((alpha, beta_a + (beta_b - beta_a) * value_a / (value_a - value_b)))
        if ordered and ordered[-1][1] == 0.0:
            crossings.append((alpha, ordered[-1][0]))
    return crossings

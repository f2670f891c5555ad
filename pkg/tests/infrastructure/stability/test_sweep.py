"""
Unit tests for the region sweep and the lambda1 contour.
"""

import math

import numpy as np
import pytest

from src.domain.entities import RegionSample, Verdict
from src.domain.errors import NewtonStall
from src.domain.value_objects import Parameters, RadialField
from src.infrastructure.stability import contour, lambda1_sign, region_sweep

BASE = Parameters(n=3, gamma=0.5, alpha=0.0, beta=0.0)


def should_match_a_direct_decision_for_a_single_point(symmetric_state, default_grid):
    # Arrange
    params, result = symmetric_state
    direct = lambda1_sign(result, params)

    # Act
    samples = region_sweep([params.alpha], lambda alpha: [params.beta], BASE, default_grid)

    # Assert
    assert len(samples) == 1
    assert samples[0].converged
    assert samples[0].verdict is direct.verdict
    assert samples[0].lambda1 == pytest.approx(direct.lambda1, rel=1e-8, abs=1e-10)
    assert samples[0].R == pytest.approx(result.energy, rel=1e-12)
    assert samples[0].lambda1 <= samples[0].rayleigh_bound + 1e-8


def should_return_nothing_for_an_empty_range(default_grid):
    # Act
    samples = region_sweep([], lambda alpha: [alpha], BASE, default_grid)

    # Assert
    assert samples == []


def should_keep_input_order_on_a_thread_pool(small_grid):
    # Arrange
    alphas = [0.2, 0.3]

    def rule(alpha):
        return [alpha + 0.1, alpha + 0.2]

    # Act
    sequential = region_sweep(alphas, rule, BASE, small_grid, jobs=1)
    parallel = region_sweep(alphas, rule, BASE, small_grid, jobs=2)

    # Assert
    assert [(s.alpha, s.beta) for s in parallel] == [(s.alpha, s.beta) for s in sequential]
    for one, other in zip(sequential, parallel):
        assert one.verdict is other.verdict
        assert one.lambda1 == pytest.approx(other.lambda1, rel=1e-6, abs=1e-9)


def should_embed_failed_solves(monkeypatch, small_grid):
    # Arrange
    def stall(*args, **kwargs):
        raise NewtonStall("line search stalled")

    monkeypatch.setattr("src.infrastructure.stability.sweep.solve_ground_state", stall)

    # Act
    samples = region_sweep([0.3], lambda alpha: [0.4, 0.5], BASE, small_grid)

    # Assert
    assert len(samples) == 2
    assert all(not sample.converged for sample in samples)
    assert all(sample.error.startswith("NewtonStall") for sample in samples)
    assert all(math.isnan(sample.lambda1) for sample in samples)



@pytest.mark.parametrize("jobs", [1, 2, 3])
def should_warm_start_the_same_points_for_any_worker_count(jobs, monkeypatch, small_grid):
    # Arrange
    starts = {}

    def record(params, grid, init=None, tolerance=1e-10):
        starts[(params.alpha, params.beta)] = init is not None
        sample = RegionSample(alpha=params.alpha, beta=params.beta, p=params.p, converged=True)
        return sample, RadialField(grid, np.ones(grid.points))

    monkeypatch.setattr("src.infrastructure.stability.sweep.sample_point", record)

    # Act
    samples = region_sweep([0.1, 0.2, 0.3], lambda alpha: [alpha, alpha + 0.1, alpha + 0.2], BASE, small_grid, jobs)

    # Assert
    assert [(s.alpha, s.beta) for s in samples] == [
        (alpha, alpha + offset) for alpha in (0.1, 0.2, 0.3) for offset in (0.0, 0.1, 0.2)
    ]
    assert [warm for (alpha, beta), warm in sorted(starts.items())] == [False, True, True] * 3

@pytest.mark.slow
def should_stay_radial_across_beta_for_positive_alpha(default_grid):
    # Arrange
    alpha = 0.3

    # Act
    samples = region_sweep([alpha], lambda a: [a + 0.1, a + 0.25, a + 0.4], BASE, default_grid)

    # Assert
    assert all(sample.verdict is Verdict.RADIAL_STABLE for sample in samples)


def should_interpolate_sign_changes_of_lambda1():
    # Arrange
    samples = [
        RegionSample(alpha=-0.5, beta=-0.3, p=2.5, lambda1=-1.0),
        RegionSample(alpha=-0.5, beta=-0.4, p=2.8, lambda1=-3.0),
        RegionSample(alpha=-0.5, beta=-0.2, p=2.3, lambda1=1.0),
        RegionSample(alpha=-0.4, beta=-0.3, p=2.5),
        RegionSample(alpha=0.2, beta=0.3, p=2.5, lambda1=0.5),
        RegionSample(alpha=0.2, beta=0.4, p=2.3, lambda1=0.7),
    ]

    # Act
    crossings = contour(samples)

    # Assert
    assert crossings == [(-0.5, pytest.approx(-0.25))]

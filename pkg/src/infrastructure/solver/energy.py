"""
Cylinder Energy - Infrastructure Layer

F_{α,β}(v) = |S^{n−1}|^{1−2/p} · 2ς⁻¹ ∫ v (P^(0)v + C(α)v) dt / (∫|v|^p dt)^{2/p}
for radial profiles, invariant under v ↦ λv and under translations.
"""

from typing import Optional

import numpy as np

from src.domain.errors import ZeroField
from src.domain.value_objects import Parameters, ProblemConstants, RadialField
from src.infrastructure.constants import problem_constants, sphere_area
from src.infrastructure.spectral import apply_periodic


def energy_F(field: RadialField, params: Parameters, constants: Optional[ProblemConstants] = None) -> float:
    """
    Evaluate the cylinder functional on a radial field.

    The operator is applied periodically; fields that are not small at ±T are
    treated as their periodic extension.

    Args:
        field: Nonzero radial profile
        params: Parameter point (fixes p and C(α))
        constants: Precomputed constants for params

    Returns:
        The energy value

    Raises:
        ZeroField: If the field vanishes identically
    """
    values = field.values
    if not np.any(values):
        raise ZeroField("energy is undefined for the zero field")
    constants = constants or problem_constants(params)
    grid = field.grid
    p = params.p

    applied = apply_periodic(values, grid, params.n, params.gamma, 0) + constants.C_alpha * values
    quadratic = float(np.dot(values, applied)) * grid.spacing
    mass = field.integral(p)
    return sphere_area(params.n) ** (1.0 - 2.0 / p) * 2.0 / constants.sigma_ng * quadratic / mass ** (2.0 / p)

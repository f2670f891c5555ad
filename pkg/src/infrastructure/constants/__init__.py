"""Scalar constants of the weighted fractional problem on the cylinder."""

from src.infrastructure.constants.kappa import kappa_estimate, kappa_general, sphere_average
from src.infrastructure.constants.problem import C_alpha, h_alpha, kappa, problem_constants
from src.infrastructure.constants.structural import (
    bubble_constant,
    bubble_energy,
    c_ng,
    exponent_p,
    kappa_gamma,
    power_multiplier,
    sigma_ng,
    sphere_area,
    structural_constants,
)

__all__ = [
    "C_alpha",
    "bubble_constant",
    "bubble_energy",
    "c_ng",
    "exponent_p",
    "h_alpha",
    "kappa",
    "kappa_estimate",
    "kappa_gamma",
    "kappa_general",
    "power_multiplier",
    "problem_constants",
    "sigma_ng",
    "sphere_area",
    "sphere_average",
    "structural_constants",
]

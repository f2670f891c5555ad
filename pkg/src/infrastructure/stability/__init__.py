"""Linearized operators, their low spectra and the radial symmetry diagnostics."""

from src.infrastructure.stability.linearized import LinearizedOperator, assemble_linearized, harmonic_multiplicity
from src.infrastructure.stability.spectrum import lowest_eigs, mode_ordering, parity_sectors
from src.infrastructure.stability.sweep import contour, region_sweep
from src.infrastructure.stability.symmetry import lambda1_sign, morse_count, rayleigh_quotient_ip

__all__ = [
    "LinearizedOperator",
    "assemble_linearized",
    "contour",
    "harmonic_multiplicity",
    "lambda1_sign",
    "lowest_eigs",
    "mode_ordering",
    "morse_count",
    "parity_sectors",
    "rayleigh_quotient_ip",
    "region_sweep",
]

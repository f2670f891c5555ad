"""
Special Functions

Self-contained kernel used by the symbols and the mode-0 kernel:
- Gamma: complex log-Gamma (Lanczos), reciprocal Gamma, digamma
- Hypergeometric: real 2F1 on [0, 1)
"""

from src.infrastructure.specfun.gamma import (
    digamma,
    gamma_ratio_sq,
    gamma_real,
    log_abs_gamma,
    log_gamma,
    rgamma,
)
from src.infrastructure.specfun.hypergeometric import hyp2f1, hyp2f1_complement

__all__ = [
    "digamma",
    "gamma_ratio_sq",
    "gamma_real",
    "hyp2f1",
    "hyp2f1_complement",
    "log_abs_gamma",
    "log_gamma",
    "rgamma",
]

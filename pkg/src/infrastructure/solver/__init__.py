"""Ground-state solvers, the radial minimization and the continuation branch."""

from src.infrastructure.solver.continuation import continuation_gamma, soliton_distance
from src.infrastructure.solver.energy import energy_F
from src.infrastructure.solver.gradient_flow import flow_ground_state, minimize_radial
from src.infrastructure.solver.ground_state import solve_ground_state
from src.infrastructure.solver.hardy import hardy_limit_check, richardson_limit
from src.infrastructure.solver.profiles import cutoff_profile, preset_profile, soliton_profile

__all__ = [
    "continuation_gamma",
    "cutoff_profile",
    "energy_F",
    "flow_ground_state",
    "hardy_limit_check",
    "minimize_radial",
    "preset_profile",
    "richardson_limit",
    "soliton_distance",
    "soliton_profile",
    "solve_ground_state",
]

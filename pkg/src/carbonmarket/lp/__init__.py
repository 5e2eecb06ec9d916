"""Dense LP engine: bounded-variable two-phase simplex with exact duals.

The pivot loop runs on a compiled kernel when the extension is built and on
a NumPy twin otherwise; see :mod:`.backend`.
"""

from .backend import available_kernels, default_backend_name
from .duality import DualMap, dual_program, solve_lexicographic
from .program import (
    EQ, GE, INFEASIBLE, LE, MAXIMIZE, MINIMIZE, OPTIMAL, UNBOUNDED,
    LinearProgram, LpSolution, max_violation,
)
from .solver import CS_TOL, FEAS_TOL, GAP_TOL, solve

__all__ = [
    "LinearProgram", "LpSolution", "solve", "solve_lexicographic",
    "dual_program", "DualMap", "available_kernels", "default_backend_name",
    "max_violation",
    "MAXIMIZE", "MINIMIZE", "LE", "EQ", "GE",
    "OPTIMAL", "INFEASIBLE", "UNBOUNDED",
    "FEAS_TOL", "GAP_TOL", "CS_TOL",
]

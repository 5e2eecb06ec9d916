"""Explicit dual construction and lexicographic (two-objective) solves.

``dual_program`` materializes the dual of a box-bounded LP as another
:class:`LinearProgram` whose variables are the row duals followed by one
multiplier per finite upper bound and one per finite lower bound.  Row-dual
bounds follow the package sensitivity convention, so for a maximization the
dual of a ``<=`` row lives in ``[0, inf)`` and of a ``>=`` row in
``(-inf, 0]`` (flipped for minimization).  Strong duality then makes the two
optimal objective values equal, which the test suite uses as an engine
cross-check.

``solve_lexicographic`` optimizes a secondary objective over the primary
optimal face by re-solving with the primary objective pinned to its optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InfeasibleAfterPinError
from .program import (
    EQ, GE, INFEASIBLE, LE, MAXIMIZE, MINIMIZE, OPTIMAL,
    LinearProgram, LpSolution,
)
from .solver import solve

PIN_TOL = 1e-7


@dataclass
class DualMap:
    """Index bookkeeping for a generated dual program."""

    row_dual: list[int]                 # dual-variable index per primal row
    upper_dual: dict[int, int]          # primal var -> multiplier of x <= u
    lower_dual: dict[int, int]          # primal var -> multiplier of x >= l


def dual_program(lp: LinearProgram) -> tuple[LinearProgram, DualMap]:
    lp.validate()
    n, m = lp.n_vars, lp.n_rows
    primal_max = lp.sense == MAXIMIZE

    nv = m
    upper_dual: dict[int, int] = {}
    lower_dual: dict[int, int] = {}
    for j in range(n):
        if np.isfinite(lp.upper[j]):
            upper_dual[j] = nv
            nv += 1
    for j in range(n):
        if np.isfinite(lp.lower[j]):
            lower_dual[j] = nv
            nv += 1

    lower = np.empty(nv)
    upper = np.empty(nv)
    names = [""] * nv
    for i, rel in enumerate(lp.relations):
        if rel == EQ:
            lower[i], upper[i] = -np.inf, np.inf
        elif (rel == LE) == primal_max:
            lower[i], upper[i] = 0.0, np.inf
        else:
            lower[i], upper[i] = -np.inf, 0.0
        names[i] = f"y[{lp.row_names[i]}]"
    for j, k in upper_dual.items():
        lower[k], upper[k] = 0.0, np.inf
        names[k] = f"ub[{lp.variable_names[j]}]"
    for j, k in lower_dual.items():
        lower[k], upper[k] = 0.0, np.inf
        names[k] = f"lb[{lp.variable_names[j]}]"

    # one stationarity row per primal variable: A^T y + vbar - vlow = c
    # (signs of the bound multipliers flip with the primal sense)
    rows = np.zeros((n, nv))
    if m:
        rows[:, :m] = lp.rows.T
    bound_sign = 1.0 if primal_max else -1.0
    for j, k in upper_dual.items():
        rows[j, k] = bound_sign
    for j, k in lower_dual.items():
        rows[j, k] = -bound_sign

    objective = np.zeros(nv)
    objective[:m] = lp.rhs
    for j, k in upper_dual.items():
        objective[k] = bound_sign * lp.upper[j]
    for j, k in lower_dual.items():
        objective[k] = -bound_sign * lp.lower[j]

    dual = LinearProgram(
        sense=MINIMIZE if primal_max else MAXIMIZE,
        objective=objective,
        lower=lower,
        upper=upper,
        rows=rows,
        relations=[EQ] * n,
        rhs=lp.objective.copy(),
        variable_names=names,
        row_names=[f"stat[{v}]" for v in lp.variable_names],
    )
    return dual, DualMap(row_dual=list(range(m)), upper_dual=upper_dual,
                         lower_dual=lower_dual)


def solve_lexicographic(lp: LinearProgram, secondary: np.ndarray,
                        secondary_sense: str = MINIMIZE, *,
                        kernel=None) -> LpSolution:
    """Optimize ``secondary`` over the optimal face of ``lp``.

    Returns the refined primal point with the primary objective value and the
    primary solve's duals (any optimal dual pairs with any optimal primal).
    Raises if ``lp`` itself is not solvable to optimality.
    """
    first = solve(lp, kernel=kernel)
    if not first.is_optimal:
        raise InfeasibleAfterPinError(
            f"primary problem is {first.status}, cannot refine"
        )
    secondary = np.asarray(secondary, dtype=float)
    if secondary.shape != (lp.n_vars,):
        raise InfeasibleAfterPinError("secondary objective length mismatch")

    pin = PIN_TOL * max(1.0, abs(first.objective))
    pin_rel = GE if lp.sense == MAXIMIZE else LE
    pin_rhs = (first.objective - pin if lp.sense == MAXIMIZE
               else first.objective + pin)
    pinned = LinearProgram(
        sense=secondary_sense,
        objective=secondary,
        lower=lp.lower.copy(),
        upper=lp.upper.copy(),
        rows=np.vstack([lp.rows, lp.objective[None, :]]),
        relations=list(lp.relations) + [pin_rel],
        rhs=np.concatenate([lp.rhs, [pin_rhs]]),
        variable_names=list(lp.variable_names),
        row_names=list(lp.row_names) + ["pin-primary"],
    )
    refined = solve(pinned, kernel=kernel)
    if refined.status == INFEASIBLE:
        raise InfeasibleAfterPinError("pin tolerance too tight")
    if not refined.is_optimal:
        raise InfeasibleAfterPinError(
            f"pinned problem is {refined.status}"
        )
    return LpSolution(
        status=OPTIMAL,
        x=refined.x,
        duals=first.duals,
        reduced_costs=first.reduced_costs,
        objective=float(lp.objective @ refined.x),
        pivots=first.pivots + refined.pivots,
    )

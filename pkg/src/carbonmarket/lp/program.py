"""Dense linear-program container and solution record.

A :class:`LinearProgram` holds a maximization or minimization problem over
box-bounded variables with general row constraints.  Dual values follow the
sensitivity convention throughout the package: ``duals[r]`` is the derivative
of the optimal objective with respect to the right-hand side of row ``r``.
For a maximization this makes duals of ``<=`` rows nonnegative and duals of
``>=`` rows nonpositive; reduced costs of variables resting at their upper
bound are nonnegative (and at their lower bound nonpositive).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import MalformedProgramError

MAXIMIZE = "maximize"
MINIMIZE = "minimize"

LE, EQ, GE = "<=", "==", ">="
_RELATIONS = (LE, EQ, GE)


@dataclass
class LinearProgram:
    """A dense LP: optimize ``objective @ x`` subject to rows and variable bounds."""

    sense: str
    objective: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    rows: np.ndarray          # (m, n) constraint coefficients
    relations: list[str]      # one of <=, ==, >= per row
    rhs: np.ndarray
    variable_names: list[str] = field(default_factory=list)
    row_names: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.objective = np.ascontiguousarray(self.objective, dtype=float)
        self.lower = np.ascontiguousarray(self.lower, dtype=float)
        self.upper = np.ascontiguousarray(self.upper, dtype=float)
        self.rows = np.ascontiguousarray(self.rows, dtype=float).reshape(
            len(self.relations), self.objective.size
        )
        self.rhs = np.ascontiguousarray(self.rhs, dtype=float)
        if not self.variable_names:
            self.variable_names = [f"x{j}" for j in range(self.n_vars)]
        if not self.row_names:
            self.row_names = [f"r{i}" for i in range(self.n_rows)]

    @property
    def n_vars(self) -> int:
        return self.objective.size

    @property
    def n_rows(self) -> int:
        return len(self.relations)

    def validate(self) -> None:
        n, m = self.n_vars, self.n_rows
        if self.sense not in (MAXIMIZE, MINIMIZE):
            raise MalformedProgramError(f"unknown sense {self.sense!r}")
        if self.lower.shape != (n,) or self.upper.shape != (n,):
            raise MalformedProgramError("bounds length != variable count")
        if self.rows.shape != (m, n):
            raise MalformedProgramError(
                f"constraint matrix shape {self.rows.shape} != ({m}, {n})"
            )
        if self.rhs.shape != (m,):
            raise MalformedProgramError("rhs length != constraint count")
        for rel in self.relations:
            if rel not in _RELATIONS:
                raise MalformedProgramError(f"unknown relation {rel!r}")
        if len(self.variable_names) != n or len(self.row_names) != m:
            raise MalformedProgramError("label count mismatch")
        if np.any(self.lower > self.upper):
            j = int(np.argmax(self.lower > self.upper))
            raise MalformedProgramError(
                f"variable {self.variable_names[j]} has lower > upper"
            )
        if not (np.all(np.isfinite(self.objective))
                and np.all(np.isfinite(self.rows))
                and np.all(np.isfinite(self.rhs))):
            raise MalformedProgramError("objective, rows and rhs must be finite")


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LpSolution:
    """Result of a solve; arrays are ``None`` unless ``status == "optimal"``."""

    status: str
    x: np.ndarray | None = None
    duals: np.ndarray | None = None
    reduced_costs: np.ndarray | None = None
    objective: float | None = None
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def row_slack(lp: LinearProgram, x: np.ndarray) -> np.ndarray:
    """Signed slack per row: nonnegative for satisfied inequalities."""
    ax = lp.rows @ x
    out = np.zeros(lp.n_rows)
    for i, rel in enumerate(lp.relations):
        if rel == LE:
            out[i] = lp.rhs[i] - ax[i]
        elif rel == GE:
            out[i] = ax[i] - lp.rhs[i]
        else:
            out[i] = -abs(ax[i] - lp.rhs[i])
    return out


def max_violation(lp: LinearProgram, x: np.ndarray) -> float:
    """Largest constraint or bound violation at ``x`` (0 when feasible)."""
    viol = 0.0
    if lp.n_rows:
        viol = max(viol, float(np.max(np.maximum(-row_slack(lp, x), 0.0))))
    viol = max(viol, float(np.max(np.maximum(lp.lower - x, 0.0), initial=0.0)))
    viol = max(viol, float(np.max(np.maximum(x - lp.upper, 0.0), initial=0.0)))
    return viol


def dual_objective_value(lp: LinearProgram, duals: np.ndarray,
                         reduced_costs: np.ndarray) -> float:
    """Objective of the implied dual solution, for duality-gap checks.

    Splits each reduced cost into its upper- and lower-bound multiplier by
    sign; bound terms with infinite bounds contribute nothing because their
    multipliers must vanish at optimality.
    """
    if lp.sense == MAXIMIZE:
        vbar = np.maximum(reduced_costs, 0.0)
        vlow = np.maximum(-reduced_costs, 0.0)
    else:
        vlow = np.maximum(reduced_costs, 0.0)
        vbar = np.maximum(-reduced_costs, 0.0)
    up = np.where(np.isfinite(lp.upper), lp.upper, 0.0)
    lo = np.where(np.isfinite(lp.lower), lp.lower, 0.0)
    val = float(duals @ lp.rhs) if lp.n_rows else 0.0
    return val + float(vbar @ up) - float(vlow @ lo)

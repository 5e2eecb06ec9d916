"""Two-phase primal simplex driver with exact dual extraction.

The driver normalizes any :class:`LinearProgram` to an internal minimization
over an equality system ``A x + s = b`` with box bounds on every column:

* every row gets a signed slack (``<=``: ``[0, inf)``, ``>=``: ``(-inf, 0]``,
  ``==``: fixed at 0), so the slack block of the tableau is always ``B^-1``;
* rows are scaled by their largest coefficient magnitude;
* rows whose initial residual cannot be absorbed by the slack get a phase-1
  artificial column.

Duals are read off the final basis as ``c_B @ B^-1`` and reported under the
sensitivity convention of :mod:`.program`; reduced costs and the objective
are recomputed from the original unscaled data.  Solves are deterministic:
ties are broken by smallest index and no randomness or shared state exists.

Set ``LP_TRACE=1`` (or ``LP_TRACE=/path/to/log``) to dump one line per pivot;
tracing forces the pure-Python kernel.
"""

from __future__ import annotations

import os
import sys

import numpy as np

from ..errors import MalformedProgramError, NumericalFailureError
from . import _kernel_py
from .backend import default_kernel
from .program import (
    EQ, GE, INFEASIBLE, LE, MAXIMIZE, OPTIMAL, UNBOUNDED,
    LinearProgram, LpSolution, dual_objective_value,
)

BASIC = _kernel_py.BASIC
AT_LOWER = _kernel_py.AT_LOWER
AT_UPPER = _kernel_py.AT_UPPER
FREE = _kernel_py.FREE

FEAS_TOL = 1e-8
GAP_TOL = 1e-7
CS_TOL = 1e-7
DUAL_TOL = _kernel_py.DUAL_TOL


def _initial_status(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    vstat = np.full(lo.size, FREE, dtype=np.int8)
    vstat[np.isfinite(lo)] = AT_LOWER
    at_upper = ~np.isfinite(lo) & np.isfinite(hi)
    vstat[at_upper] = AT_UPPER
    return vstat


def _nonbasic_values(vstat, lo, hi):
    vals = np.zeros(vstat.size)
    vals[vstat == AT_LOWER] = lo[vstat == AT_LOWER]
    vals[vstat == AT_UPPER] = hi[vstat == AT_UPPER]
    return vals


class _Workspace:
    """Mutable tableau state shared by the two phases."""

    def __init__(self, lp: LinearProgram):
        n, m = lp.n_vars, lp.n_rows
        self.n, self.m = n, m

        rows = lp.rows
        scale = np.ones(m)
        if m:
            mags = np.max(np.abs(rows), axis=1)
            scale = np.where(mags > 0.0, mags, 1.0)
        self.row_scale = scale
        a_scaled = rows / scale[:, None] if m else rows.copy()
        b_scaled = lp.rhs / scale if m else lp.rhs.copy()
        self.b_scaled = b_scaled

        slack_lo = np.zeros(m)
        slack_hi = np.zeros(m)
        for i, rel in enumerate(lp.relations):
            if rel == LE:
                slack_lo[i], slack_hi[i] = 0.0, np.inf
            elif rel == GE:
                slack_lo[i], slack_hi[i] = -np.inf, 0.0
            else:
                slack_lo[i], slack_hi[i] = 0.0, 0.0

        self.lo = np.concatenate([lp.lower, slack_lo])
        self.hi = np.concatenate([lp.upper, slack_hi])
        self.vstat = _initial_status(self.lo, self.hi)
        self.vstat[n:] = BASIC  # provisional: slacks start basic

        x0 = _nonbasic_values(self.vstat[:n], lp.lower, lp.upper)
        resid = b_scaled - a_scaled @ x0 if m else np.zeros(0)

        basis = np.arange(n, n + m, dtype=np.int64)
        xB = resid.copy()
        art_rows: list[int] = []
        art_signs: list[float] = []
        for i in range(m):
            if resid[i] < slack_lo[i]:
                self.vstat[n + i] = AT_LOWER
                art_rows.append(i)
                art_signs.append(-1.0)
                xB[i] = slack_lo[i] - resid[i]
            elif resid[i] > slack_hi[i]:
                self.vstat[n + i] = AT_UPPER
                art_rows.append(i)
                art_signs.append(1.0)
                xB[i] = resid[i] - slack_hi[i]

        n_art = len(art_rows)
        total = n + m + n_art
        T = np.zeros((m, total))
        if m:
            T[:, :n] = a_scaled
            T[np.arange(m), np.arange(n, n + m)] = 1.0
        for k, (i, sgn) in enumerate(zip(art_rows, art_signs)):
            T[i, n + m + k] = sgn
            basis[i] = n + m + k
            if sgn < 0.0:
                T[i, :] *= -1.0  # basis column must reduce to +e_i

        self.T = np.ascontiguousarray(T)
        self.xB = xB
        self.basis = basis
        self.n_art = n_art
        self.art_slice = slice(n + m, total)
        self.lo = np.concatenate([self.lo, np.zeros(n_art)])
        self.hi = np.concatenate([self.hi, np.full(n_art, np.inf)])
        self.vstat = np.concatenate(
            [self.vstat, np.zeros(n_art, dtype=np.int8)]
        )
        self.vstat[self.art_slice] = BASIC
        self.total = total

    def all_values(self) -> np.ndarray:
        vals = _nonbasic_values(self.vstat, self.lo, self.hi)
        vals[self.basis] = self.xB
        return vals


def _run_phase(ws: _Workspace, cost: np.ndarray, kernel, max_pivots: int,
               bland_after: int, trace) -> tuple[int, int]:
    """Run the pivot loop, re-verifying optimality with fresh reduced costs.

    Incrementally updated reduced costs can drift over long pivot sequences;
    a clean recomputation either confirms optimality or resumes pivoting.
    """
    spent = 0
    for _ in range(12):
        d = cost - cost[ws.basis] @ ws.T
        d[ws.basis] = 0.0
        code, pivots = kernel(
            ws.T, ws.xB, ws.basis, ws.vstat, ws.lo, ws.hi, d,
            max_pivots - spent, bland_after, trace,
        )
        spent += pivots
        if code != _kernel_py.OPT:
            return code, spent
        d = cost - cost[ws.basis] @ ws.T
        d[ws.basis] = 0.0
        movable = ws.lo < ws.hi
        dirty = (
            ((ws.vstat == AT_LOWER) & (d < -10 * DUAL_TOL))
            | ((ws.vstat == AT_UPPER) & (d > 10 * DUAL_TOL))
        ) & movable
        dirty |= (ws.vstat == FREE) & (np.abs(d) > 10 * DUAL_TOL)
        if not dirty.any():
            return _kernel_py.OPT, spent
    raise NumericalFailureError("reduced costs would not stabilize")


def _trace_writer():
    setting = os.environ.get("LP_TRACE", "").strip()
    if not setting or setting == "0":
        return None, None
    if setting == "1":
        out = sys.stderr
        return lambda k, q, leave, t: print(
            f"pivot {k}: enter {q} leave {leave} step {t:.6g}", file=out
        ), None
    fh = open(setting, "a")
    return lambda k, q, leave, t: print(
        f"pivot {k}: enter {q} leave {leave} step {t:.6g}", file=fh
    ), fh


def solve(lp: LinearProgram, *, kernel=None, max_pivots: int | None = None,
          bland_after: int | None = None, verify: bool = True) -> LpSolution:
    """Solve ``lp`` to proven optimality, infeasibility or unboundedness."""
    lp.validate()
    trace, trace_fh = _trace_writer()
    if trace is not None:
        kernel = _kernel_py.run_simplex  # tracing is a pure-Python feature
    elif kernel is None:
        kernel = default_kernel()

    ws = _Workspace(lp)
    n, m = ws.n, ws.m
    size = m + ws.total
    if max_pivots is None:
        max_pivots = 20000 + 40 * size
    if bland_after is None:
        bland_after = 500 + 2 * size

    c_min = -lp.objective if lp.sense == MAXIMIZE else lp.objective.copy()

    try:
        if ws.n_art:
            cost1 = np.zeros(ws.total)
            cost1[ws.art_slice] = 1.0
            code, pivots1 = _run_phase(ws, cost1, kernel, max_pivots,
                                       bland_after, trace)
            if code == _kernel_py.BUDGET:
                raise NumericalFailureError(
                    f"phase 1 exceeded {max_pivots} pivots"
                )
            if code == _kernel_py.UNBOUNDED:
                raise NumericalFailureError("phase 1 reported unbounded")
            infeas = float(cost1 @ ws.all_values())
            if infeas > FEAS_TOL * (1.0 + float(np.max(np.abs(ws.b_scaled),
                                                       initial=0.0))):
                return LpSolution(status=INFEASIBLE, pivots=pivots1)
            ws.lo[ws.art_slice] = 0.0
            ws.hi[ws.art_slice] = 0.0
        else:
            pivots1 = 0

        cost2 = np.zeros(ws.total)
        cost2[:n] = c_min
        code, pivots2 = _run_phase(ws, cost2, kernel, max_pivots - pivots1,
                                   bland_after, trace)
        if code == _kernel_py.BUDGET:
            raise NumericalFailureError(f"exceeded {max_pivots} pivots")
        if code == _kernel_py.UNBOUNDED:
            return LpSolution(status=UNBOUNDED, pivots=pivots1 + pivots2)
    finally:
        if trace_fh is not None:
            trace_fh.close()

    values = ws.all_values()
    x = values[:n].copy()
    y_scaled = cost2[ws.basis] @ ws.T[:, n:n + m] if m else np.zeros(0)
    y = y_scaled / ws.row_scale if m else y_scaled
    if lp.sense == MAXIMIZE:
        y = -y
    reduced = lp.objective - (lp.rows.T @ y if m else 0.0)
    reduced[ws.vstat[:n] == BASIC] = 0.0
    objective = float(lp.objective @ x)

    solution = LpSolution(
        status=OPTIMAL, x=x, duals=y, reduced_costs=reduced,
        objective=objective, pivots=pivots1 + pivots2,
    )
    if verify:
        _verify_optimal(lp, solution)
    return solution


def _verify_optimal(lp: LinearProgram, sol: LpSolution) -> None:
    """Check feasibility, duality gap and complementary slackness."""
    scale = np.ones(lp.n_rows)
    if lp.n_rows:
        mags = np.max(np.abs(lp.rows), axis=1)
        scale = np.where(mags > 0.0, mags, 1.0)
        resid = (lp.rows @ sol.x - lp.rhs) / scale
        for i, rel in enumerate(lp.relations):
            v = resid[i]
            bad = (rel == EQ and abs(v) > FEAS_TOL) or \
                  (rel == LE and v > FEAS_TOL) or \
                  (rel == GE and v < -FEAS_TOL)
            if bad:
                raise NumericalFailureError(
                    f"row {lp.row_names[i]} violated by {v:.3e} after scaling"
                )
    bound_viol = np.maximum(lp.lower - sol.x, sol.x - lp.upper)
    if np.max(bound_viol, initial=0.0) > FEAS_TOL * (
            1.0 + float(np.max(np.abs(sol.x), initial=0.0))):
        raise NumericalFailureError("variable bound violated")

    ref = max(1.0, abs(sol.objective))
    gap = abs(dual_objective_value(lp, sol.duals, sol.reduced_costs)
              - sol.objective)
    if gap > GAP_TOL * ref:
        raise NumericalFailureError(f"duality gap {gap:.3e} exceeds tolerance")

    if lp.n_rows:
        ax = lp.rows @ sol.x
        for i, rel in enumerate(lp.relations):
            if rel == EQ:
                continue
            slack = (lp.rhs[i] - ax[i]) if rel == LE else (ax[i] - lp.rhs[i])
            if abs(sol.duals[i] * slack) > CS_TOL * ref:
                raise NumericalFailureError(
                    f"complementary slackness fails on row {lp.row_names[i]}"
                )

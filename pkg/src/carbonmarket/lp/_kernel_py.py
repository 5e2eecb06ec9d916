"""Pure-NumPy bounded-variable simplex pivot loop.

Semantics must stay in lockstep with the compiled twin in ``_speedups.pyx``:
same tolerances, same entering rule (Dantzig with smallest-index ties, Bland
after ``bland_after`` pivots), same ratio test with smallest-basis-index tie
break, same bound-flip handling.  The driver in ``solver.py`` owns phase
setup, reduced-cost initialization and dual extraction.

Variable status codes: 0 basic, 1 nonbasic at lower, 2 nonbasic at upper,
3 nonbasic free (value 0).  Return codes: 0 optimal, 1 unbounded, 2 pivot
budget exhausted.
"""

from __future__ import annotations

import numpy as np

BASIC, AT_LOWER, AT_UPPER, FREE = 0, 1, 2, 3
OPT, UNBOUNDED, BUDGET = 0, 1, 2

DUAL_TOL = 1e-9    # reduced-cost threshold for entering eligibility
PIVOT_TOL = 1e-10  # tableau entries below this do not block or pivot


def run_simplex(T, xB, basis, vstat, lo, hi, d, max_pivots, bland_after,
                trace=None):
    """Pivot in place until the current reduced costs ``d`` prove optimality."""
    m = T.shape[0]
    pivots = 0
    movable = lo < hi
    while True:
        elig = (
            ((vstat == AT_LOWER) & (d < -DUAL_TOL))
            | ((vstat == AT_UPPER) & (d > DUAL_TOL))
        ) & movable
        elig |= (vstat == FREE) & (np.abs(d) > DUAL_TOL)
        if not elig.any():
            return OPT, pivots
        if pivots >= max_pivots:
            return BUDGET, pivots

        if pivots < bland_after:
            scores = np.where(elig, np.abs(d), -1.0)
            q = int(np.argmax(scores))
        else:
            q = int(np.argmax(elig))  # Bland: first eligible index

        st = vstat[q]
        if st == AT_LOWER:
            sigma, val_q = 1.0, lo[q]
        elif st == AT_UPPER:
            sigma, val_q = -1.0, hi[q]
        else:
            sigma, val_q = (1.0 if d[q] < 0.0 else -1.0), 0.0

        v = sigma * T[:, q]
        if m:
            lo_b = lo[basis]
            hi_b = hi[basis]
            ratios = np.full(m, np.inf)
            dec = v > PIVOT_TOL
            inc = v < -PIVOT_TOL
            with np.errstate(divide="ignore", invalid="ignore"):
                r_dec = np.maximum(xB - lo_b, 0.0) / v
                r_inc = np.maximum(hi_b - xB, 0.0) / (-v)
            block_dec = dec & np.isfinite(lo_b)
            block_inc = inc & np.isfinite(hi_b)
            ratios[block_dec] = r_dec[block_dec]
            ratios[block_inc] = r_inc[block_inc]
            t_row = float(ratios.min())
        else:
            t_row = np.inf

        t_flip = hi[q] - lo[q] if st != FREE else np.inf

        if t_flip < t_row:
            xB -= t_flip * v
            vstat[q] = AT_UPPER if st == AT_LOWER else AT_LOWER
            pivots += 1
            if trace is not None:
                trace(pivots, q, -1, t_flip)
            continue

        if not np.isfinite(t_row):
            return UNBOUNDED, pivots

        cand = np.flatnonzero(ratios == t_row)
        r = int(cand[np.argmin(basis[cand])])
        leave = basis[r]
        vstat[leave] = AT_LOWER if v[r] > 0.0 else AT_UPPER

        xB -= t_row * v
        xB[r] = val_q + sigma * t_row

        piv = T[r, q]
        T[r, :] /= piv
        col = T[:, q].copy()
        col[r] = 0.0
        T -= np.outer(col, T[r, :])
        d_q = d[q]
        if d_q != 0.0:
            d -= d_q * T[r, :]
        T[:, q] = 0.0
        T[r, q] = 1.0
        d[q] = 0.0
        basis[r] = q
        vstat[q] = BASIC
        pivots += 1
        if trace is not None:
            trace(pivots, q, leave, t_row)

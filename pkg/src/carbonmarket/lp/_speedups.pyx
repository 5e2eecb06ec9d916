# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled bounded-variable simplex pivot loop.

Keep semantics in lockstep with ``_kernel_py.run_simplex``: same tolerances,
entering rule, ratio test, tie breaks and update order.  The extension is
built with fp-contraction off so both backends produce identical floats.
"""

from libc.math cimport INFINITY, fabs, isfinite

DEF DUAL_TOL = 1e-9
DEF PIVOT_TOL = 1e-10


def run_simplex(double[:, ::1] T, double[::1] xB, long long[::1] basis,
                signed char[::1] vstat, double[::1] lo, double[::1] hi,
                double[::1] d, long max_pivots, long bland_after,
                trace=None):
    cdef Py_ssize_t m = T.shape[0]
    cdef Py_ssize_t N = T.shape[1]
    cdef long pivots = 0
    cdef Py_ssize_t q, r, i, j
    cdef long long bvar, leave
    cdef double best, ad, sigma, val_q, t_row, t_flip, vi, num, ratio, piv, f, dq
    cdef int st

    while True:
        # entering variable
        q = -1
        if pivots < bland_after:
            best = DUAL_TOL
            for j in range(N):
                st = vstat[j]
                if st == 0:
                    continue
                if st == 3:
                    ad = fabs(d[j])
                    if ad > best:
                        best = ad
                        q = j
                elif lo[j] < hi[j]:
                    if st == 1 and d[j] < -DUAL_TOL:
                        ad = -d[j]
                        if ad > best:
                            best = ad
                            q = j
                    elif st == 2 and d[j] > DUAL_TOL:
                        ad = d[j]
                        if ad > best:
                            best = ad
                            q = j
        else:
            for j in range(N):
                st = vstat[j]
                if st == 0:
                    continue
                if st == 3:
                    if fabs(d[j]) > DUAL_TOL:
                        q = j
                        break
                elif lo[j] < hi[j]:
                    if st == 1 and d[j] < -DUAL_TOL:
                        q = j
                        break
                    if st == 2 and d[j] > DUAL_TOL:
                        q = j
                        break
        if q < 0:
            return 0, pivots
        if pivots >= max_pivots:
            return 2, pivots

        st = vstat[q]
        if st == 1:
            sigma = 1.0
            val_q = lo[q]
        elif st == 2:
            sigma = -1.0
            val_q = hi[q]
        else:
            sigma = 1.0 if d[q] < 0.0 else -1.0
            val_q = 0.0

        # ratio test; ties keep the smallest basic variable index
        t_row = INFINITY
        r = -1
        for i in range(m):
            vi = sigma * T[i, q]
            bvar = basis[i]
            if vi > PIVOT_TOL:
                if not isfinite(lo[bvar]):
                    continue
                num = xB[i] - lo[bvar]
                if num < 0.0:
                    num = 0.0
                ratio = num / vi
            elif vi < -PIVOT_TOL:
                if not isfinite(hi[bvar]):
                    continue
                num = hi[bvar] - xB[i]
                if num < 0.0:
                    num = 0.0
                ratio = num / (-vi)
            else:
                continue
            if ratio < t_row:
                t_row = ratio
                r = i
            elif ratio == t_row and r >= 0 and bvar < basis[r]:
                r = i

        t_flip = hi[q] - lo[q] if st != 3 else INFINITY

        if t_flip < t_row:
            for i in range(m):
                xB[i] -= t_flip * (sigma * T[i, q])
            vstat[q] = 2 if st == 1 else 1
            pivots += 1
            if trace is not None:
                trace(pivots, q, -1, t_flip)
            continue

        if r < 0:
            return 1, pivots

        leave = basis[r]
        vstat[leave] = 1 if sigma * T[r, q] > 0.0 else 2

        for i in range(m):
            xB[i] -= t_row * (sigma * T[i, q])
        xB[r] = val_q + sigma * t_row

        piv = T[r, q]
        for j in range(N):
            T[r, j] /= piv
        for i in range(m):
            if i == r:
                continue
            f = T[i, q]
            if f != 0.0:
                for j in range(N):
                    T[i, j] -= f * T[r, j]
        dq = d[q]
        if dq != 0.0:
            for j in range(N):
                d[j] -= dq * T[r, j]
        for i in range(m):
            T[i, q] = 0.0
        T[r, q] = 1.0
        d[q] = 0.0
        basis[r] = q
        vstat[q] = 0
        pivots += 1
        if trace is not None:
            trace(pivots, q, leave, t_row)

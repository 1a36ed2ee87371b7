# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: origami canonical form and the billiard event loop.

Semantics are identical to ``_pycore``; see the docstrings there.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport INFINITY

cnp.import_array()

cdef enum:
    OK = 0
    CORNER = 1
    MAX_EVENTS = 2


def canonical_pair(r, u):
    cdef Py_ssize_t n = len(r)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ra = np.asarray(r, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ua = np.asarray(u, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] label = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] best = np.empty(2 * n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cand = np.empty(2 * n, dtype=np.int64)
    cdef Py_ssize_t s, i, j, k, top, idx
    cdef long long v
    cdef int state, have_best = 0
    for s in range(n):
        for i in range(n):
            label[i] = -1
        label[s] = 0
        order[0] = s
        top = 1
        k = 0
        while k < top:
            i = order[k]
            k += 1
            j = ra[i]
            if label[j] < 0:
                label[j] = top
                order[top] = j
                top += 1
            j = ua[i]
            if label[j] < 0:
                label[j] = top
                order[top] = j
                top += 1
        if top != n:
            raise ValueError("origami is not connected")
        if not have_best:
            for idx in range(n):
                best[idx] = label[ra[order[idx]]]
                best[n + idx] = label[ua[order[idx]]]
            have_best = 1
            continue
        state = 0
        for idx in range(2 * n):
            if idx < n:
                v = label[ra[order[idx]]]
            else:
                v = label[ua[order[idx - n]]]
            if state == 0:
                if v > best[idx]:
                    state = 1
                    break
                if v < best[idx]:
                    state = -1
            cand[idx] = v
        if state == -1:
            for idx in range(2 * n):
                best[idx] = cand[idx]
    return tuple(best[:n].tolist()), tuple(best[n:].tolist())


def trace(walls, double L1, double L2, double x, double y, long long ix,
          long long iy, double dx, double dy, double t, double t_end,
          double x_start, double y_start, double maxdisp2, sample_times,
          double corner_tol, long long max_events, log=None):
    if log is not None:
        raise ValueError("segment logging is only available in the pure-Python kernel")
    cdef cnp.ndarray[cnp.float64_t, ndim=2] W = np.ascontiguousarray(walls, dtype=np.float64).reshape(-1, 5)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] S = np.ascontiguousarray(sample_times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(S.shape[0], dtype=np.float64)
    cdef Py_ssize_t nw = W.shape[0], ns = S.shape[0], si = 0, nout = 0, w, bw
    cdef long long events = 0
    cdef int status = OK
    cdef double tx, ty, t_exit, best, tt, h, dt, s, px, py, d2
    while True:
        if events >= max_events:
            status = MAX_EVENTS
            break
        if dx > 0:
            tx = (L1 - x) / dx
        elif dx < 0:
            tx = -x / dx
        else:
            tx = INFINITY
        if dy > 0:
            ty = (L2 - y) / dy
        elif dy < 0:
            ty = -y / dy
        else:
            ty = INFINITY
        t_exit = tx if tx <= ty else ty
        best = INFINITY
        bw = -1
        for w in range(nw):
            if W[w, 0] == 0:
                if W[w, 4] * dx >= 0:
                    continue
                tt = (W[w, 1] - x) / dx
                if tt < 0 or tt >= best:
                    continue
                h = y + tt * dy
            else:
                if W[w, 4] * dy >= 0:
                    continue
                tt = (W[w, 1] - y) / dy
                if tt < 0 or tt >= best:
                    continue
                h = x + tt * dx
            if W[w, 2] - corner_tol <= h and h <= W[w, 3] + corner_tol:
                best = tt
                bw = w
        dt = best if best <= t_exit else t_exit
        while si < ns and S[si] <= t + dt:
            if S[si] > t_end:
                break
            s = S[si] - t
            px = ix * L1 + x + s * dx - x_start
            py = iy * L2 + y + s * dy - y_start
            d2 = px * px + py * py
            out[nout] = d2 if d2 > maxdisp2 else maxdisp2
            nout += 1
            si += 1
        if t + dt >= t_end:
            s = t_end - t
            x = x + s * dx
            y = y + s * dy
            t = t_end
            px = ix * L1 + x - x_start
            py = iy * L2 + y - y_start
            d2 = px * px + py * py
            if d2 > maxdisp2:
                maxdisp2 = d2
            break
        t = t + dt
        events += 1
        if bw >= 0 and best <= t_exit:
            if W[bw, 0] == 0:
                x = W[bw, 1]
                y = y + dt * dy
                h = y
                dx = -dx
            else:
                y = W[bw, 1]
                x = x + dt * dx
                h = x
                dy = -dy
            if h - W[bw, 2] <= corner_tol or W[bw, 3] - h <= corner_tol:
                status = CORNER
                break
        else:
            if tx <= ty:
                y = y + dt * dy
                if dx > 0:
                    x = 0.0
                    ix += 1
                else:
                    x = L1
                    ix -= 1
                if tx == ty:
                    if dy > 0:
                        y = 0.0
                        iy += 1
                    else:
                        y = L2
                        iy -= 1
            else:
                x = x + dt * dx
                if dy > 0:
                    y = 0.0
                    iy += 1
                else:
                    y = L2
                    iy -= 1
        px = ix * L1 + x - x_start
        py = iy * L2 + y - y_start
        d2 = px * px + py * py
        if d2 > maxdisp2:
            maxdisp2 = d2
    return (out[:nout].tolist(), x, y, ix, iy, dx, dy, t, maxdisp2, events, status)

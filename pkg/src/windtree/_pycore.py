"""Pure-Python implementations of the hot kernels.

These mirror ``_ccore.pyx`` line for line and are used whenever the compiled
extension is unavailable (or ``WINDTREE_PURE_PYTHON=1``). The billiard
kernel is written without float-specific calls so that it also runs on
:class:`fractions.Fraction` inputs; the exact validation mode relies on that.
"""

from __future__ import annotations

from math import inf

# status codes returned by trace()
OK = 0
CORNER = 1
MAX_EVENTS = 2

# wall layout: (axis, coord, lo, hi, normal); axis 0 = vertical wall x=coord
AXIS, COORD, LO, HI, NORMAL = range(5)


def canonical_pair(r, u):
    """Lexicographically least BFS relabelling of a connected pair ``(r, u)``.

    For every anchor square a breadth-first numbering (following ``r`` then
    ``u``) is built; the relabelled ``r`` followed by ``u`` is compared to
    the best so far and abandoned as soon as it is larger.
    """
    n = len(r)
    best = None
    label = [0] * n
    for s in range(n):
        for i in range(n):
            label[i] = -1
        label[s] = 0
        order = [s]
        k = 0
        while k < len(order):
            i = order[k]
            k += 1
            j = r[i]
            if label[j] < 0:
                label[j] = len(order)
                order.append(j)
            j = u[i]
            if label[j] < 0:
                label[j] = len(order)
                order.append(j)
        if len(order) != n:
            raise ValueError("origami is not connected")
        if best is None:
            best = [label[r[i]] for i in order] + [label[u[i]] for i in order]
            continue
        # incremental comparison with early exit
        cand = []
        state = 0
        for idx in range(2 * n):
            v = label[r[order[idx]]] if idx < n else label[u[order[idx - n]]]
            if state == 0:
                if v > best[idx]:
                    state = 1
                    break
                if v < best[idx]:
                    state = -1
            cand.append(v)
        if state == -1:
            best = cand
    return tuple(best[:n]), tuple(best[n:])


def trace(
    walls,
    L1,
    L2,
    x,
    y,
    ix,
    iy,
    dx,
    dy,
    t,
    t_end,
    x_start,
    y_start,
    maxdisp2,
    sample_times,
    corner_tol,
    max_events,
    log=None,
):
    """Run the specular billiard flow from time ``t`` up to ``t_end``.

    Positions are domain-local (``0 <= x <= L1``) with lattice offsets
    ``ix, iy``. Squared maximal displacement from ``(x_start, y_start)`` is
    tracked; its value at each entry of ``sample_times`` (sorted, within
    ``(t, t_end]``) is returned. ``log``, when a list, receives one
    ``(x, y, dx, dy, dt, kind)`` record per segment with kind in
    ``{"wall-x", "wall-y", "exit-x", "exit-y", "end"}``.

    Returns ``(samples, x, y, ix, iy, dx, dy, t, maxdisp2, events, status)``.
    """
    samples = []
    ns = len(sample_times)
    si = 0
    events = 0
    status = OK
    nw = len(walls)
    while True:
        if events >= max_events:
            status = MAX_EVENTS
            break
        if dx > 0:
            tx = (L1 - x) / dx
        elif dx < 0:
            tx = -x / dx
        else:
            tx = inf
        if dy > 0:
            ty = (L2 - y) / dy
        elif dy < 0:
            ty = -y / dy
        else:
            ty = inf
        t_exit = tx if tx <= ty else ty
        best = inf
        bw = -1
        for w in range(nw):
            wall = walls[w]
            if wall[AXIS] == 0:
                if wall[NORMAL] * dx >= 0:
                    continue
                tt = (wall[COORD] - x) / dx
                if tt < 0 or tt >= best:
                    continue
                h = y + tt * dy
            else:
                if wall[NORMAL] * dy >= 0:
                    continue
                tt = (wall[COORD] - y) / dy
                if tt < 0 or tt >= best:
                    continue
                h = x + tt * dx
            if wall[LO] - corner_tol <= h <= wall[HI] + corner_tol:
                best = tt
                bw = w
        dt = best if best <= t_exit else t_exit
        # samples falling inside this segment
        while si < ns and sample_times[si] <= t + dt:
            if sample_times[si] > t_end:
                break
            s = sample_times[si] - t
            px = ix * L1 + x + s * dx - x_start
            py = iy * L2 + y + s * dy - y_start
            d2 = px * px + py * py
            samples.append(d2 if d2 > maxdisp2 else maxdisp2)
            si += 1
        if t + dt >= t_end:
            s = t_end - t
            x = x + s * dx
            y = y + s * dy
            t = t_end
            if log is not None:
                log.append((x - s * dx, y - s * dy, dx, dy, s, "end"))
            px = ix * L1 + x - x_start
            py = iy * L2 + y - y_start
            d2 = px * px + py * py
            if d2 > maxdisp2:
                maxdisp2 = d2
            break
        if log is not None:
            kind = ""
            if bw >= 0 and best <= t_exit:
                kind = "wall-x" if walls[bw][AXIS] == 0 else "wall-y"
            else:
                kind = "exit-x" if tx <= ty else "exit-y"
            log.append((x, y, dx, dy, dt, kind))
        t = t + dt
        events += 1
        if bw >= 0 and best <= t_exit:
            wall = walls[bw]
            if wall[AXIS] == 0:
                x = wall[COORD]
                y = y + dt * dy
                h = y
                dx = -dx
            else:
                y = wall[COORD]
                x = x + dt * dx
                h = x
                dy = -dy
            if h - wall[LO] <= corner_tol or wall[HI] - h <= corner_tol:
                status = CORNER
                break
        else:
            if tx <= ty:
                y = y + dt * dy
                if dx > 0:
                    x = 0 * x
                    ix += 1
                else:
                    x = L1
                    ix -= 1
                if tx == ty:
                    if dy > 0:
                        y = 0 * y
                        iy += 1
                    else:
                        y = L2
                        iy -= 1
            else:
                x = x + dt * dx
                if dy > 0:
                    y = 0 * y
                    iy += 1
                else:
                    y = L2
                    iy -= 1
        px = ix * L1 + x - x_start
        py = iy * L2 + y - y_start
        d2 = px * px + py * py
        if d2 > maxdisp2:
            maxdisp2 = d2
    return samples, x, y, ix, iy, dx, dy, t, maxdisp2, events, status

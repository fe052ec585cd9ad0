"""Pure-Python search kernel for the exact solver.

Mirrors ``_solver_core.pyx`` exactly: same exploration order, same pruning,
same node accounting, so both kernels return byte-identical results.  The
compiled kernel is preferred at import time when available.

The search walks vertex orders depth-first.  Placing vertex ``u`` after the
current partial order forces its label to ``req[u]``, the greedy minimum over
all placed vertices ``w`` of ``f(w) + diam + 1 - dist(w, u)``; this is
maintained incrementally with one snapshot per depth.  A branch is pruned
when even ``+1`` per remaining vertex cannot beat the incumbent.
"""

from __future__ import annotations

import time

TIME_CHECK_MASK = 0xFFF  # check the clock every 4096 node expansions


def solve(p, dist, diam, starts, ub, ub_order, deadline):
    """Exhaustive branch-and-bound over vertex orders with greedy completion.

    Returns (best_span, best_order, nodes, completed).  ``ub``/``ub_order``
    seed the incumbent; the search looks for strictly better orders and keeps
    the first one found at each improvement.  ``deadline`` is a monotonic
    timestamp (or None); on timeout the incumbent is returned with
    completed=False.
    """
    best = ub
    best_order = list(ub_order)
    nodes = 0
    timed_out = False

    order = [0] * p
    labels = [0] * p
    placed = [False] * p
    # req[u]: minimal feasible label for u given the current partial order;
    # one saved copy per depth for O(p) backtracking.
    req = [0] * p
    saved = [[0] * p for _ in range(p)]

    def extend(depth, span):
        nonlocal best, best_order, nodes, timed_out
        if timed_out:
            return
        if depth == p:
            if span < best:
                best = span
                best_order = order[:p]
            return
        remaining_after = p - depth - 1
        for u in range(p):
            if placed[u]:
                continue
            lab = req[u]
            if lab + remaining_after >= best:
                continue
            nodes += 1
            if nodes & TIME_CHECK_MASK == 0 and deadline is not None \
                    and time.monotonic() > deadline:
                timed_out = True
                return
            order[depth] = u
            labels[u] = lab
            placed[u] = True
            snap = saved[depth]
            du = dist[u]
            for v in range(p):
                snap[v] = req[v]
                if not placed[v]:
                    need = lab + diam + 1 - du[v]
                    if need > req[v]:
                        req[v] = need
            extend(depth + 1, lab)
            placed[u] = False
            for v in range(p):
                req[v] = snap[v]
            if timed_out:
                return

    for s in starts:
        if timed_out:
            break
        # placing the start vertex: label 0
        nodes += 1
        order[0] = s
        labels[s] = 0
        placed[s] = True
        for v in range(p):
            req[v] = diam + 1 - dist[s][v] if v != s else 0
        extend(1, 0)
        placed[s] = False

    return best, best_order, nodes, not timed_out

"""Exact radio-number oracle for small trees.

Branch-and-bound over vertex orders with greedy label completion.  This is
exact: every radio labelling induces the order of its increasing labels, and
the greedy completion of that order is pointwise minimal (each label is the
smallest value consistent with all already-placed vertices), so some order's
greedy completion attains the radio number.

Symmetry reduction: the first vertex of the order only ranges over one
representative per equivalence class of vertices, where two vertices are
equivalent when the trees rooted at them have identical canonical forms —
equality of rooted canonical forms yields an automorphism carrying one root
to the other, so orders starting at equivalent vertices produce equal spans.

Two interchangeable kernels implement the inner loop: a compiled extension
(preferred) and a pure-Python fallback; set ``RADIOTREE_PURE=1`` to force the
fallback.  Both explore in the same order, so results are identical.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .errors import OrderTooLarge
from .labelling import RadioLabelling, greedy_label_from_order, verify_labelling
from .tree import Tree, distance_matrix, metrics

from . import _solver_py

if os.environ.get("RADIOTREE_PURE"):
    _kernel = _solver_py
else:
    try:
        from . import _solver_core as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _solver_py

DEFAULT_MAX_ORDER = 12
DEFAULT_TIMEOUT_S = 300.0


def kernel_name() -> str:
    """Which search kernel is active: 'compiled' or 'pure-python'."""
    return "pure-python" if _kernel is _solver_py else "compiled"


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    elapsed_s: float
    completed: bool


@dataclass(frozen=True)
class SolveResult:
    rn: int
    witness: RadioLabelling
    stats: SolveStats


def _rooted_canonical(adjacency, root: int) -> str:
    """Canonical form of the tree rooted at ``root`` (sorted-subtree encoding)."""
    def canon(u: int, parent: int) -> str:
        subs = sorted(canon(v, u) for v in adjacency[u] if v != parent)
        return "(" + "".join(subs) + ")"
    return canon(root, -1)


def _start_representatives(tree: Tree) -> list:
    """Smallest vertex id per class of root-interchangeable vertices."""
    seen = {}
    for v in range(tree.p):
        key = _rooted_canonical(tree.adjacency, v)
        if key not in seen:
            seen[key] = v
    return sorted(seen.values())


def exact_rn(tree: Tree, max_order: int = DEFAULT_MAX_ORDER,
             timeout_s: float | None = DEFAULT_TIMEOUT_S,
             kernel=None) -> SolveResult:
    """Exact radio number by exhaustive pruned search.

    Raises :class:`OrderTooLarge` beyond ``max_order`` vertices.  On timeout
    the best incumbent is returned with ``stats.completed`` False (its span is
    then only an upper bound on the radio number).
    """
    if tree.p > max_order:
        raise OrderTooLarge(f"{tree.p} vertices exceeds the limit {max_order}")
    k = kernel if kernel is not None else _kernel
    m = metrics(tree)
    dist = [list(row) for row in distance_matrix(tree)]
    # Seed the incumbent with the greedy completion of the identity order.
    seed_order = tuple(range(tree.p))
    seed = greedy_label_from_order(m, seed_order)
    ub_order = sorted(seed.labels, key=seed.labels.get)
    starts = _start_representatives(tree)
    deadline = None if timeout_s is None else time.monotonic() + timeout_s

    t0 = time.monotonic()
    best, best_order, nodes, completed = k.solve(
        tree.p, dist, m.diameter, starts, seed.span, ub_order, deadline,
    )
    elapsed = time.monotonic() - t0

    witness = greedy_label_from_order(m, tuple(best_order))
    ok, pair = verify_labelling(tree, witness)
    if not ok or witness.span != best:
        raise AssertionError(
            f"solver invariant broken: span {witness.span} vs {best}, pair {pair}"
        )
    return SolveResult(
        rn=best,
        witness=witness,
        stats=SolveStats(nodes=nodes, elapsed_s=elapsed, completed=completed),
    )


def exact_matches_formula(family_instance, formula_value: int,
                          max_order: int = DEFAULT_MAX_ORDER,
                          timeout_s: float | None = DEFAULT_TIMEOUT_S) -> bool:
    """True iff the exact radio number of the instance equals the closed form."""
    tree = getattr(family_instance, "tree", family_instance)
    return exact_rn(tree, max_order=max_order, timeout_s=timeout_s).rn == formula_value

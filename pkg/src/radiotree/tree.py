"""Tree construction, distances, and the structural metrics behind the bounds.

A tree lives on vertex ids ``0..p-1``.  All the quantities the bound formulas
consume are derived here once per tree and carried in :class:`TreeMetrics`:

* the diameter ``d``,
* the weight centers ``W`` (the one or two adjacent vertices minimizing the
  total distance ``w(v) = sum_u d(u, v)``) and ``epsilon = 2 - |W|``,
* per-vertex levels ``L(u)`` (distance to the nearest weight center) and the
  total level ``L(T)``,
* the branches of ``T - W`` and whether the tree is two-branch,
* the remote set ``S`` (vertices of level at least ceil(d/2), resp. floor(d/2)
  when there are two centers) and the increment ``xi`` it contributes to the
  improved lower bound.

The level decomposition also yields a closed form for distances:
``d(u, v) = L(u) + L(v) - 2*phi(u, v) + delta(u, v)`` where ``phi`` is the
highest level on the common part of the two center-to-vertex paths and
``delta`` marks pairs whose path crosses both weight centers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BadEdge, BadVertex, DiameterTooSmall, NotATree, SparseIds

CENTER_BRANCH = -1  # sentinel branch id carried by weight centers

# Full distance tables are materialized only up to this order; beyond it rows
# are recomputed on demand (the bounds only need levels and the diameter).
_DIST_TABLE_LIMIT = 4096


@dataclass(frozen=True)
class Tree:
    """Immutable unrooted tree on vertices 0..p-1 with canonical adjacency."""

    p: int
    edges: frozenset  # frozenset of (u, v) tuples with u < v
    adjacency: tuple  # tuple of sorted tuples of neighbour ids

    def check_vertex(self, u: int) -> None:
        if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < self.p:
            raise BadVertex(f"vertex {u!r} not in 0..{self.p - 1}")


def _make_tree(p: int, edges: Iterable[tuple]) -> Tree:
    adj = [[] for _ in range(p)]
    canonical = set()
    for u, v in edges:
        a, b = (u, v) if u < v else (v, u)
        canonical.add((a, b))
        adj[a].append(b)
        adj[b].append(a)
    return Tree(
        p=p,
        edges=frozenset(canonical),
        adjacency=tuple(tuple(sorted(ns)) for ns in adj),
    )


def build_tree(edge_list: Sequence) -> Tree:
    """Build a canonical :class:`Tree` from an edge list.

    The vertex set is 0..max-id; raises :class:`BadEdge` on self-loops or
    duplicates, :class:`SparseIds` when some id in range carries no edge, and
    :class:`NotATree` when the edges do not form a single tree.
    """
    if not edge_list:
        raise NotATree("empty edge list")
    seen = set()
    max_id = 0
    for e in edge_list:
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int)) or u < 0 or v < 0:
            raise BadEdge(f"edge {e!r}: vertex ids must be non-negative integers")
        if u == v:
            raise BadEdge(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise BadEdge(f"duplicate edge {key}")
        seen.add(key)
        max_id = max(max_id, u, v)
    p = max_id + 1
    used = set()
    for u, v in seen:
        used.add(u)
        used.add(v)
    if len(used) != p:
        missing = sorted(set(range(p)) - used)
        raise SparseIds(f"unused vertex ids {missing}; ids must cover 0..{max_id}")
    if len(seen) != p - 1:
        raise NotATree(f"{len(seen)} edges for {p} vertices; a tree needs {p - 1}")
    tree = _make_tree(p, seen)
    # p-1 edges + connected <=> tree
    reach = _bfs_dist(tree.adjacency, 0)
    if any(dv < 0 for dv in reach):
        raise NotATree("edge list is disconnected")
    return tree


def _bfs_dist(adjacency, source: int) -> list:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(tree: Tree, u: int, v: int) -> int:
    """Shortest-path hop count between ``u`` and ``v``."""
    tree.check_vertex(u)
    tree.check_vertex(v)
    if u == v:
        return 0
    return _bfs_dist(tree.adjacency, u)[v]


@lru_cache(maxsize=128)
def distance_matrix(tree: Tree) -> tuple:
    """Full p x p distance table (cached per tree)."""
    return tuple(tuple(_bfs_dist(tree.adjacency, s)) for s in range(tree.p))


@dataclass(frozen=True)
class TreeMetrics:
    """Derived structural record for one tree (immutable)."""

    tree: Tree
    diameter: int
    weight_centers: frozenset
    epsilon: int
    level: tuple  # L(u) per vertex
    total_level: int
    branch_id: tuple  # per vertex; weight centers carry CENTER_BRANCH
    remote_set: frozenset
    xi: int
    two_branch: bool
    vertex_weight: tuple  # w(v) per vertex
    parent: tuple = field(repr=False)  # BFS predecessor toward the centers
    center_of: tuple = field(repr=False)  # nearest weight center per vertex
    dist: tuple | None = field(repr=False, default=None)

    @property
    def p(self) -> int:
        return self.tree.p

    def distance(self, u: int, v: int) -> int:
        if self.dist is not None:
            self.tree.check_vertex(u)
            self.tree.check_vertex(v)
            return self.dist[u][v]
        return distance(self.tree, u, v)


def metrics(tree: Tree) -> TreeMetrics:
    """Compute all per-tree structural metrics (pure function of the tree)."""
    p = tree.p
    adj = tree.adjacency
    if p <= _DIST_TABLE_LIMIT:
        table = distance_matrix(tree)
        weights = tuple(sum(row) for row in table)
        diam = max(max(row) for row in table) if p > 1 else 0
    else:
        table = None
        weights = []
        far = 0
        for s in range(p):
            row = _bfs_dist(adj, s)
            weights.append(sum(row))
            far = max(far, max(row))
        weights = tuple(weights)
        diam = far

    wmin = min(weights)
    centers = [v for v in range(p) if weights[v] == wmin]
    if len(centers) > 2:
        raise AssertionError("more than two weight centers in a tree")
    if len(centers) == 2:
        a, b = centers
        if b not in adj[a]:
            raise AssertionError("two weight centers must be adjacent")
    cset = frozenset(centers)
    eps = 2 - len(centers)

    # Multi-source BFS from the centers: levels, predecessors, owning center.
    level = [-1] * p
    parent = [-1] * p
    center_of = [-1] * p
    queue = deque()
    for c in centers:
        level[c] = 0
        center_of[c] = c
        queue.append(c)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                parent[v] = u
                center_of[v] = center_of[u]
                queue.append(v)
    total = sum(level)

    # Branches: components of T - W, numbered by smallest contained vertex.
    branch = [CENTER_BRANCH] * p
    n_branches = 0
    for s in range(p):
        if s in cset or branch[s] != CENTER_BRANCH:
            continue
        idx = n_branches
        n_branches += 1
        branch[s] = idx
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in cset and branch[v] == CENTER_BRANCH:
                    branch[v] = idx
                    stack.append(v)

    if len(centers) == 1:
        threshold = -(-diam // 2)  # ceil(d/2)
    else:
        threshold = diam // 2
    remote = frozenset(v for v in range(p) if level[v] >= threshold) if p > 1 else frozenset()
    if len(centers) == 1:
        xi = len(remote) // 2
    else:
        xi = max(0, len(remote) - 2)

    return TreeMetrics(
        tree=tree,
        diameter=diam,
        weight_centers=cset,
        epsilon=eps,
        level=tuple(level),
        total_level=total,
        branch_id=tuple(branch),
        remote_set=remote,
        xi=xi,
        two_branch=(n_branches == 2),
        vertex_weight=weights,
        parent=tuple(parent),
        center_of=tuple(center_of),
        dist=table,
    )


def _center_path(m: TreeMetrics, u: int) -> list:
    """Vertices on the path from u down to its nearest weight center."""
    path = [u]
    while m.parent[path[-1]] >= 0:
        path.append(m.parent[path[-1]])
    return path


def phi(m: TreeMetrics, u: int, v: int) -> int:
    """Highest level on the common part of the two center-to-vertex paths."""
    m.tree.check_vertex(u)
    m.tree.check_vertex(v)
    common = set(_center_path(m, u)) & set(_center_path(m, v))
    if not common:
        return 0
    return max(m.level[x] for x in common)


def delta(m: TreeMetrics, u: int, v: int) -> int:
    """1 iff there are two weight centers and the u-v path crosses both."""
    m.tree.check_vertex(u)
    m.tree.check_vertex(v)
    if len(m.weight_centers) != 2 or u == v:
        return 0
    return 1 if m.center_of[u] != m.center_of[v] else 0


def distance_by_levels(m: TreeMetrics, u: int, v: int) -> int:
    """Distance via the level decomposition: L(u)+L(v)-2*phi+delta."""
    if m.diameter < 2:
        raise DiameterTooSmall(f"level distance identity needs diameter >= 2, got {m.diameter}")
    return m.level[u] + m.level[v] - 2 * phi(m, u, v) + delta(m, u, v)


# --- tree text format ------------------------------------------------------

def parse_tree_text(text: str) -> Tree:
    """Parse the edge-list text format: one "u v" pair per line, '#' comments."""
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise NotATree(f"bad edge line: {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise NotATree(f"bad edge line: {raw!r}") from None
        if u < 0 or v < 0:
            raise BadEdge(f"negative vertex id in line {raw!r}")
        edges.append((u, v))
    return build_tree(edges)


def format_tree_text(tree: Tree) -> str:
    """Emit the canonical edge list, one edge per line, sorted."""
    lines = [f"{u} {v}" for u, v in sorted(tree.edges)]
    return "\n".join(lines) + "\n"

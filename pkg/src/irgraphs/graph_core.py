"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one machine-word bit row per vertex (bit ``v`` of
``adj[u]`` means ``u ~ v``), so neighborhood unions, private-neighborhood
subtraction, and subset tests are single integer operations. Vertex subsets
travel through the whole package as plain ``int`` bitmasks (``VertexSet``);
use :func:`mask_of` / :func:`members` to convert.

Vertices are indexed 0..order-1. Graphs are immutable after construction
and safe to share between workers; every function here is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    CapacityExceeded,
    IndexOutOfRange,
    InvalidParameter,
    SelfLoop,
)

MAX_VERTICES = 64

# Vertex subset as a bitmask: bit i set <=> vertex i is a member.
VertexSet = int


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Pack vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(s: VertexSet) -> tuple[int, ...]:
    """Unpack a bitmask into ascending vertex indices."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus per-vertex neighbor bit rows."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise InvalidParameter("graph order must be nonnegative")
        if self.order > MAX_VERTICES:
            raise CapacityExceeded(
                f"order {self.order} exceeds capacity {MAX_VERTICES}"
            )
        if len(self.adj) != self.order:
            raise InvalidParameter("adjacency row count must equal order")
        full = (1 << self.order) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise IndexOutOfRange(f"adjacency row of {u} has bits >= order")
            if (row >> u) & 1:
                raise SelfLoop(f"vertex {u} is adjacent to itself")
        for u in range(self.order):
            for v in members(self.adj[u]):
                if not (self.adj[v] >> u) & 1:
                    raise InvalidParameter(f"adjacency not symmetric at ({u},{v})")

    @cached_property
    def size(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def closed(self, v: int) -> VertexSet:
        """Closed neighborhood N[v] as a mask."""
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, ascending."""
        out = []
        for u in range(self.order):
            higher = self.adj[u] >> (u + 1)
            for off in members(higher):
                out.append((u, u + 1 + off))
        return out


def check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise IndexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")


def check_vertex_set(g: Graph, s: VertexSet) -> None:
    if s < 0 or s >> g.order:
        raise IndexOutOfRange(f"vertex set {bin(s)} has bits outside 0..{g.order - 1}")


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from an edge list (duplicates collapse)."""
    if n < 0:
        raise InvalidParameter("vertex count must be nonnegative")
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"order {n} exceeds capacity {MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"edge ({u},{v}) is a loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def relabel_graph(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation (perm[old] = new)."""
    if sorted(perm) != list(range(g.order)):
        raise InvalidParameter("perm must be a permutation of 0..order-1")
    return graph_from_edges(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """N[S]: the members of s together with all their neighbors."""
    check_vertex_set(g, s)
    out = s
    for v in members(s):
        out |= g.adj[v]
    return out


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by s, relabeled 0..|s|-1 preserving index order.

    Returns the new graph and the old-index -> new-index map.
    """
    check_vertex_set(g, s)
    verts = members(s)
    index_of = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        kept = g.adj[v] & s
        for u in members(kept):
            row |= 1 << index_of[u]
        rows.append(row)
    return Graph(len(verts), tuple(rows)), index_of


def distances_from(g: Graph, source: int) -> list[int | float]:
    """BFS distances from source; math.inf for unreachable vertices."""
    check_vertex(g, source)
    dist: list[int | float] = [math.inf] * g.order
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        for v in members(frontier):
            dist[v] = d
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    check_vertex(g, v)
    return distances_from(g, u)[v]


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    return math.inf not in distances_from(g, 0)


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; math.inf iff disconnected, 0 for order <= 1."""
    if g.order <= 1:
        return 0
    best: int | float = 0
    for v in range(g.order):
        dv = distances_from(g, v)
        worst = max(dv)
        if worst == math.inf:
            return math.inf
        best = max(best, worst)
    return best


def has_induced_c4(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Find a chordless 4-cycle, returned in cycle order (a,b,c,d).

    The witness is canonical: a is the least vertex on the cycle, b < d are
    its two cycle-neighbors, and the overall tuple is the lexicographically
    least over all induced 4-cycles. Returns None if there is none.
    """
    adj = g.adj
    for a in range(g.order):
        na = adj[a]
        for b in members(na):
            if b <= a:
                continue
            for c in members(adj[b]):
                if c <= a or c == b or (na >> c) & 1:
                    continue
                for d in members(na & adj[c]):
                    if d <= b:
                        continue
                    if not (adj[b] >> d) & 1:
                        return (a, b, c, d)
    return None


@dataclass(frozen=True)
class Shape:
    """Tagged structural class of a graph; params depend on the kind."""

    kind: str
    params: tuple[int, ...] = ()

    @classmethod
    def complete(cls, n: int) -> "Shape":
        return cls("Complete", (n,))

    @classmethod
    def cycle(cls, n: int) -> "Shape":
        return cls("Cycle", (n,))

    @classmethod
    def star(cls, leaves: int) -> "Shape":
        return cls("Star", (leaves,))

    @classmethod
    def double_star(cls, a: int, b: int) -> "Shape":
        return cls("DoubleStar", (min(a, b), max(a, b)))

    @classmethod
    def path(cls, n: int) -> "Shape":
        return cls("Path", (n,))

    @classmethod
    def tree(cls, order: int, diam: int) -> "Shape":
        return cls("Tree", (order, diam))

    @classmethod
    def other(cls, connected: bool, order: int, size: int) -> "Shape":
        return cls("Other", (int(connected), order, size))

    @property
    def tag(self) -> str:
        if self.kind == "Tree":
            return f"Tree(order={self.params[0]},diameter={self.params[1]})"
        if self.kind == "Other":
            conn = "connected" if self.params[0] else "disconnected"
            return f"Other({conn},order={self.params[1]},size={self.params[2]})"
        return f"{self.kind}({','.join(str(p) for p in self.params)})"


def classify_shape(g: Graph) -> Shape:
    """Exact recognition with fixed precedence.

    Precedence for overlapping small cases is Complete > Cycle > Star >
    DoubleStar > Path > Tree > Other, so K_2 -> Complete(2), K_3 ->
    Complete(3), P_3 -> Star(2), and P_4 -> DoubleStar(1,1). A double star
    needs two adjacent centers, each with at least one leaf, and nothing else.
    """
    n = g.order
    m = g.size
    if n == 0:
        return Shape.other(True, 0, 0)
    if m == n * (n - 1) // 2:
        return Shape.complete(n)
    degs = [g.degree(v) for v in range(n)]
    connected = is_connected(g)
    if connected:
        if n >= 3 and all(d == 2 for d in degs):
            return Shape.cycle(n)
        if m == n - 1:
            leaf_count = sum(1 for d in degs if d == 1)
            if n >= 2 and leaf_count == n - 1:
                return Shape.star(n - 1)
            centers = [v for v in range(n) if degs[v] >= 2]
            if (
                len(centers) == 2
                and g.has_edge(centers[0], centers[1])
                and leaf_count == n - 2
            ):
                a = degs[centers[0]] - 1
                b = degs[centers[1]] - 1
                if a >= 1 and b >= 1:
                    return Shape.double_star(a, b)
            if leaf_count == 2 and all(d in (1, 2) for d in degs):
                return Shape.path(n)
            return Shape.tree(n, int(diameter(g)))
    return Shape.other(connected, n, m)


def _invariants(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = [g.degree(v) for v in range(g.order)]
    return [
        (degs[v], tuple(sorted(degs[u] for u in members(g.adj[v]))))
        for v in range(g.order)
    ]


def _search_order(g: Graph, rarity: dict) -> list[int]:
    # Rarest invariant first, then stay adjacent to the already-placed prefix
    # so the adjacency constraints bite as early as possible.
    inv = _invariants(g)
    n = g.order
    placed: list[int] = []
    placed_mask = 0
    remaining = set(range(n))
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -(g.adj[v] & placed_mask).bit_count(),
                rarity[inv[v]],
                -inv[v][0],
                v,
            ),
        )
        placed.append(best)
        placed_mask |= 1 << best
        remaining.discard(best)
    return placed


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Adjacency-preserving bijection test via backtracking.

    Prunes on order, size, degree sequence, and neighbor-degree profiles;
    candidates must match the partial map's adjacency exactly. Intended for
    the small orders reconfiguration graphs reach at desk scale.
    """
    if g.order != h.order or g.size != h.size:
        return False
    n = g.order
    if n == 0:
        return True
    inv_g = _invariants(g)
    inv_h = _invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return False
    rarity: dict = {}
    for iv in inv_h:
        rarity[iv] = rarity.get(iv, 0) + 1
    by_inv_h: dict = {}
    for hv, iv in enumerate(inv_h):
        by_inv_h.setdefault(iv, []).append(hv)
    order = _search_order(g, rarity)
    mapping = [-1] * n
    state = {"placed": 0}

    def extend(i: int) -> bool:
        if i == n:
            return True
        gv = order[i]
        placed = state["placed"]
        req = 0
        for u in members(g.adj[gv]):
            mu = mapping[u]
            if mu >= 0:
                req |= 1 << mu
        for hv in by_inv_h[inv_g[gv]]:
            if (placed >> hv) & 1:
                continue
            if h.adj[hv] & placed == req:
                mapping[gv] = hv
                state["placed"] = placed | (1 << hv)
                if extend(i + 1):
                    return True
                mapping[gv] = -1
                state["placed"] = placed
        return False

    return extend(0)

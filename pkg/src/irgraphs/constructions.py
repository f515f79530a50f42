"""Concrete graph families with labeled vertex roles.

Two families matter here. ``build_hub_family`` (G_n) glues n induced
4-cycles (a_i, c_i, b_i, d_i) onto a double-star frame: hub u is joined to
v and to every a_i, hub v to every b_i, and the A-B sides are joined as
the complete bipartite graph minus the perfect matching {a_i b_i}. Its
maximum irredundant sets have a closed form (``expected_ir_sets_gn``), and
its reconfiguration graph is the double star S(2n, 2n).

``build_gprime`` is the 6-vertex, 7-edge graph whose four non-central
maximum irredundant sets form the smallest flip/skip cluster; it is
isomorphic to G_1 and doubles as the adjacency template that the cluster
finder matches against.
"""

from __future__ import annotations

from .errors import CapacityExceeded, InvalidParameter
from .graph_core import (
    MAX_VERTICES,
    Graph,
    VertexSet,
    graph_from_edges,
    mask_of,
    members,
)

GN_MAX_N = 15  # 4n+2 <= 62 keeps every family member graph6-encodable


class RoleMap:
    """Bidirectional vertex-index <-> role-label map, total and injective."""

    def __init__(self, role_to_vertex: dict[str, int], order: int):
        if len(set(role_to_vertex.values())) != len(role_to_vertex):
            raise InvalidParameter("role map must be injective")
        if sorted(role_to_vertex.values()) != list(range(order)):
            raise InvalidParameter("role map must cover vertices 0..order-1")
        self._by_role = dict(role_to_vertex)
        self._by_vertex = {v: r for r, v in role_to_vertex.items()}
        self.order = order

    def vertex(self, role: str) -> int:
        return self._by_role[role]

    def role(self, v: int) -> str:
        return self._by_vertex[v]

    def labels(self) -> list[str]:
        return [self._by_vertex[v] for v in range(self.order)]

    def mask(self, *roles: str) -> VertexSet:
        return mask_of(self._by_role[r] for r in roles)


def build_gn(n: int) -> tuple[Graph, RoleMap]:
    """The hub family member G_n on 4n+2 vertices.

    Index scheme: u=0, v=1, a_i=1+i, b_i=1+n+i, c_i=1+2n+i, d_i=1+3n+i
    for i=1..n. Edge count is 1 + 2n + n(n-1) + 4n.
    """
    if n < 1:
        raise InvalidParameter(f"family parameter must be >= 1, got {n}")
    if n > GN_MAX_N:
        raise CapacityExceeded(f"family parameter {n} exceeds the cap {GN_MAX_N}")
    u, v = 0, 1
    a = {i: 1 + i for i in range(1, n + 1)}
    b = {i: 1 + n + i for i in range(1, n + 1)}
    c = {i: 1 + 2 * n + i for i in range(1, n + 1)}
    d = {i: 1 + 3 * n + i for i in range(1, n + 1)}
    edges = [(u, v)]
    edges += [(u, a[i]) for i in range(1, n + 1)]
    edges += [(v, b[i]) for i in range(1, n + 1)]
    edges += [(a[i], b[j]) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for i in range(1, n + 1):
        edges += [(a[i], c[i]), (c[i], b[i]), (b[i], d[i]), (d[i], a[i])]
    roles = {"u": u, "v": v}
    for i in range(1, n + 1):
        roles[f"a{i}"] = a[i]
        roles[f"b{i}"] = b[i]
        roles[f"c{i}"] = c[i]
        roles[f"d{i}"] = d[i]
    return graph_from_edges(4 * n + 2, edges), RoleMap(roles, 4 * n + 2)


def expected_ir_sets_gn(n: int) -> list[VertexSet]:
    """Closed-form census of the maximum irredundant sets of G_n.

    X = C+D+{u} and Y = C+D+{v}, plus for each i the four variants
    X_i = X-c_i+a_i, X_i' = X-d_i+a_i, Y_i = Y-c_i+b_i, Y_i' = Y-d_i+b_i:
    4n+2 sets of size 2n+1, returned in the same canonical order
    all_ir_sets uses, so the two lists compare equal directly.
    """
    if n < 1:
        raise InvalidParameter(f"family parameter must be >= 1, got {n}")
    if n > GN_MAX_N:
        raise CapacityExceeded(f"family parameter {n} exceeds the cap {GN_MAX_N}")
    _, roles = build_gn(n)
    cd = roles.mask(*[f"c{i}" for i in range(1, n + 1)], *[f"d{i}" for i in range(1, n + 1)])
    x = cd | roles.mask("u")
    y = cd | roles.mask("v")
    out = [x, y]
    for i in range(1, n + 1):
        ai = roles.mask(f"a{i}")
        bi = roles.mask(f"b{i}")
        ci = roles.mask(f"c{i}")
        di = roles.mask(f"d{i}")
        out.append((x & ~ci) | ai)
        out.append((x & ~di) | ai)
        out.append((y & ~ci) | bi)
        out.append((y & ~di) | bi)
    out.sort(key=members)
    return out


def build_gprime() -> tuple[Graph, RoleMap]:
    """The 6-vertex flip/skip template graph.

    Vertices x1=0, x2=1, x3=2, x1'=3, x2'=4, x3'=5 with the seven edges
    x1x2, x1x3, x1x1', x2x2', x3x3', x1'x3', x2'x3'. Degrees come out
    (3,2,2,2,2,3), and (x1, x3, x3', x1') is its induced 4-cycle.
    """
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 5), (4, 5)]
    roles = {"x1": 0, "x2": 1, "x3": 2, "x1'": 3, "x2'": 4, "x3'": 5}
    return graph_from_edges(6, edges), RoleMap(roles, 6)


def build_double_star(a: int, b: int) -> Graph:
    """S(a, b): two adjacent centers carrying a and b leaves."""
    if a < 1 or b < 1:
        raise InvalidParameter(f"both leaf counts must be >= 1, got ({a},{b})")
    if a + b + 2 > MAX_VERTICES:
        raise CapacityExceeded(f"order {a + b + 2} exceeds capacity {MAX_VERTICES}")
    edges = [(0, 1)]
    edges += [(0, k) for k in range(2, a + 2)]
    edges += [(1, k) for k in range(a + 2, a + b + 2)]
    return graph_from_edges(a + b + 2, edges)

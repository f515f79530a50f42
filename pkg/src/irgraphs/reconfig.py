"""Reconfiguration graphs over maximum irredundant sets.

Nodes are the IR-sets of a base graph; two nodes are adjacent when one is
obtained from the other by sliding a single token along an edge, i.e.
D' = (D - {u}) + {v} with uv an edge. On top of the plain graph this
module implements three structured moves:

* flip: replace every member of a chosen sub-partition with one of its
  external private neighbors. Flipping an irredundant set always yields an
  irredundant set of the same size, so flips of IR-sets stay IR-sets; the
  code checks this on every flip and treats a failure as a library bug.
* skip: move one token between the two nonadjacent corners of an induced
  4-cycle whose other two corners straddle the set. Unlike a slide, the
  endpoints are nonadjacent, so a skip is never an edge of the
  reconfiguration graph.
* 4-cluster: a quadruple {X, X', U, U'} where X' is the full flip of X
  over exactly three flipped members, U and U' are the matching skips, and
  the six grounding vertices induce the fixed template of build_gprime.
  On a diameter-3 tree-shaped reconfiguration graph these quadruples are
  exactly its leaves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Optional

from .constructions import build_gprime
from .errors import (
    InternalInvariantError,
    NotIrredundant,
    NotIrredundantResult,
    PreconditionViolated,
    TooManyIRSets,
)
from .graph_core import (
    Graph,
    Shape,
    VertexSet,
    check_vertex,
    check_vertex_set,
    classify_shape,
    graph_from_edges,
    members,
)
from .irredundance import (
    EpnIsoPartition,
    all_ir_sets,
    is_irredundant,
    private_neighborhoods,
    validate_partition,
)

DEFAULT_NODE_CAP = 100_000
DEFAULT_FLIP_CAP = 10_000


@dataclass(frozen=True)
class IRGraph:
    """Reconfiguration graph: IR-set nodes plus single-swap edges.

    nodes are in canonical all_ir_sets order; each edge (i, j, (u, v)) has
    i < j, u the vertex leaving nodes[i] and v the one entering.
    """

    base: Graph
    nodes: tuple[VertexSet, ...]
    edges: tuple[tuple[int, int, tuple[int, int]], ...]

    @cached_property
    def node_index(self) -> dict[VertexSet, int]:
        return {m: i for i, m in enumerate(self.nodes)}

    def as_graph(self) -> Graph:
        """The node/edge structure as a plain graph on node indices."""
        return self._graph

    @cached_property
    def _graph(self) -> Graph:
        return graph_from_edges(len(self.nodes), [(i, j) for i, j, _ in self.edges])

    @cached_property
    def shape(self) -> Shape:
        return classify_shape(self._graph)

    def to_json_dict(self) -> dict:
        """Stable JSON form: sorted vertex arrays, swap-labeled edges, shape tag."""
        return {
            "nodes": [list(members(m)) for m in self.nodes],
            "edges": [
                {"a": i, "b": j, "swap": [u, v]} for i, j, (u, v) in self.edges
            ],
            "shape": self.shape.tag,
        }


def swap_adjacent(
    g: Graph, d: VertexSet, e: VertexSet
) -> Optional[tuple[int, int]]:
    """The swap pair (u, v) turning d into e, or None.

    Defined only when the sets differ by exactly one element each way and
    the differing vertices are adjacent; equal sets are never adjacent.
    """
    check_vertex_set(g, d)
    check_vertex_set(g, e)
    out = d & ~e
    into = e & ~d
    if out.bit_count() != 1 or into.bit_count() != 1:
        return None
    u = out.bit_length() - 1
    v = into.bit_length() - 1
    if (g.adj[u] >> v) & 1:
        return (u, v)
    return None


def build_ir_graph(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> IRGraph:
    """Enumerate the IR-sets and connect every single-slide pair."""
    nodes = all_ir_sets(g)
    if len(nodes) > node_cap:
        raise TooManyIRSets(f"{len(nodes)} IR-sets exceed the cap {node_cap}")
    index = {m: i for i, m in enumerate(nodes)}
    edges = []
    for i, d in enumerate(nodes):
        for u in members(d):
            removed = d & ~(1 << u)
            for v in members(g.adj[u] & ~d):
                j = index.get(removed | (1 << v))
                if j is not None and j > i:
                    edges.append((i, j, (u, v)))
    edges.sort()
    return IRGraph(g, tuple(nodes), tuple(edges))


def flip_set(g: Graph, x: VertexSet, partition: EpnIsoPartition) -> VertexSet:
    """Apply a flip: swap out x_epn for the chosen private neighbors.

    The result must be irredundant with |x| elements; if that check ever
    fails the library itself is broken, and InternalInvariantError says so.
    """
    check_vertex_set(g, x)
    if not is_irredundant(g, x):
        raise NotIrredundant("can only flip an irredundant set")
    validate_partition(g, x, partition)
    result = x & ~partition.x_epn
    for y in partition.epn_choice.values():
        result |= 1 << y
    if result.bit_count() != x.bit_count() or not is_irredundant(g, result):
        raise InternalInvariantError(
            "flip of an irredundant set produced a non-irredundant set; "
            "this indicates a bug in the library"
        )
    return result


class FlipEnumeration(NamedTuple):
    flip_sets: list[VertexSet]
    truncated: bool


def _iter_flip_candidates(
    g: Graph, x: VertexSet
) -> Iterator[tuple[tuple[tuple[int, Optional[int]], ...], VertexSet]]:
    """All flip results of x: every choice function x every iso-allocation.

    Members with positive induced degree must flip (one option per external
    private neighbor); isolated members with external private neighbors may
    stay or flip (the per-vertex form of the arbitrary allocation). Yields
    (assignment, result) pairs without validating the results.
    """
    pns = private_neighborhoods(g, x)
    options: list[list[tuple[int, Optional[int]]]] = []
    for v in members(x):
        epn = pns[v] & ~(1 << v)
        if g.adj[v] & x:
            opts = [(v, y) for y in members(epn)]
            if not opts:
                raise NotIrredundant(
                    f"member {v} has positive induced degree but no external "
                    "private neighbor; the set is not irredundant"
                )
        else:
            opts = [(v, None)] + [(v, y) for y in members(epn)]
        options.append(opts)
    for combo in itertools.product(*options):
        result = 0
        for v, y in combo:
            result |= 1 << (v if y is None else y)
        yield combo, result


def enumerate_flip_sets(
    g: Graph, x: VertexSet, cap: int = DEFAULT_FLIP_CAP
) -> FlipEnumeration:
    """Distinct flip-sets of x, canonically sorted, truncated at cap."""
    check_vertex_set(g, x)
    if not is_irredundant(g, x):
        raise NotIrredundant("can only flip an irredundant set")
    seen: set[VertexSet] = set()
    truncated = False
    for _, result in _iter_flip_candidates(g, x):
        if result in seen:
            continue
        if len(seen) >= cap:
            truncated = True
            break
        if result.bit_count() != x.bit_count() or not is_irredundant(g, result):
            raise InternalInvariantError(
                "flip of an irredundant set produced a non-irredundant set; "
                "this indicates a bug in the library"
            )
        seen.add(result)
    return FlipEnumeration(sorted(seen, key=members), truncated)


def skip_set(g: Graph, x: VertexSet, out_v: int, in_v: int) -> VertexSet:
    """Replace out_v with the nonadjacent in_v across an induced 4-cycle.

    Requires a witnessing induced 4-cycle (w, out_v, w', in_v) with w in x
    and w' outside it; the move is meaningless off that pattern, so the
    pattern is validated rather than trusted.
    """
    check_vertex_set(g, x)
    check_vertex(g, out_v)
    check_vertex(g, in_v)
    if not (x >> out_v) & 1:
        raise PreconditionViolated(f"outgoing vertex {out_v} is not in the set")
    if (x >> in_v) & 1:
        raise PreconditionViolated(f"incoming vertex {in_v} is already in the set")
    if (g.adj[out_v] >> in_v) & 1:
        raise PreconditionViolated(
            f"{out_v} and {in_v} are adjacent; a skip needs the nonadjacent "
            "corners of an induced 4-cycle"
        )
    common = g.adj[out_v] & g.adj[in_v]
    witness = None
    for w in members(common & x):
        for w2 in members(common & ~x & ~g.adj[w]):
            witness = (w, out_v, w2, in_v)
            break
        if witness:
            break
    if witness is None:
        raise PreconditionViolated(
            f"no induced 4-cycle joins {out_v} and {in_v} through the set"
        )
    result = (x & ~(1 << out_v)) | (1 << in_v)
    if not is_irredundant(g, result):
        raise NotIrredundantResult(
            "the skip produced a non-irredundant set; the input did not "
            "match the expected pattern"
        )
    return result


@dataclass(frozen=True)
class FourCluster:
    """Four IR-sets related by one full 3-flip and its two skips.

    x, x_prime, u, u_prime are node indices in the owning IRGraph.
    witness is the grounding (x1, x2, x3, x1', x2', x3'): x' flips all of
    x1, x2, x3; u skips x3 -> x1'; u' skips x1' -> x3 out of x_prime.
    """

    x: int
    x_prime: int
    u: int
    u_prime: int
    witness: tuple[int, int, int, int, int, int]

    @property
    def c4(self) -> tuple[int, int, int, int]:
        """The grounding induced 4-cycle (x1, x3, x3', x1')."""
        x1, _, x3, x1p, _, x3p = self.witness
        return (x1, x3, x3p, x1p)

    def node_set(self) -> frozenset[int]:
        return frozenset((self.x, self.x_prime, self.u, self.u_prime))


_TEMPLATE = build_gprime()[0]


def _matches_template(g: Graph, z: tuple[int, ...]) -> bool:
    # Role-for-role adjacency equality against the 6-vertex template.
    if len(set(z)) != 6:
        return False
    for a in range(6):
        for b in range(a + 1, 6):
            if g.has_edge(z[a], z[b]) != _TEMPLATE.has_edge(a, b):
                return False
    return True


def find_four_clusters(irg: IRGraph) -> list[FourCluster]:
    """All 4-clusters of an IR-graph, deduplicated and in stable order.

    A node grounds a cluster when exactly three of its members have
    positive induced degree, those three form a path, and some choice of
    external private neighbors completes the 6-vertex template; the flip
    and both skips must land on nodes of the IR-graph. Both ends of a
    cluster ground it, so results are deduplicated by node set, keeping
    the lexicographically least grounding.
    """
    g = irg.base
    index = irg.node_index
    groundings = []
    for i, x in enumerate(irg.nodes):
        pos = [v for v in members(x) if g.adj[v] & x]
        if len(pos) != 3:
            continue
        deg_in = [(g.adj[v] & x).bit_count() for v in pos]
        if sorted(deg_in) != [1, 1, 2]:
            continue
        x1 = pos[deg_in.index(2)]
        ends = [v for v in pos if v != x1]
        pns = private_neighborhoods(g, x)
        for x2, x3 in (tuple(ends), tuple(reversed(ends))):
            epn1 = members(pns[x1] & ~(1 << x1))
            epn2 = members(pns[x2] & ~(1 << x2))
            epn3 = members(pns[x3] & ~(1 << x3))
            for x1p, x2p, x3p in itertools.product(epn1, epn2, epn3):
                z = (x1, x2, x3, x1p, x2p, x3p)
                if not _matches_template(g, z):
                    continue
                flipped = (x & ~((1 << x1) | (1 << x2) | (1 << x3)))
                x_prime = flipped | (1 << x1p) | (1 << x2p) | (1 << x3p)
                u = (x & ~(1 << x3)) | (1 << x1p)
                u_prime = (x_prime & ~(1 << x1p)) | (1 << x3)
                j = index.get(x_prime)
                k = index.get(u)
                m = index.get(u_prime)
                if j is None or k is None or m is None:
                    continue
                if len({i, j, k, m}) != 4:
                    continue
                groundings.append((i, j, k, m, z))
    groundings.sort()
    seen: set[frozenset[int]] = set()
    out = []
    for i, j, k, m, z in groundings:
        key = frozenset((i, j, k, m))
        if key in seen:
            continue
        seen.add(key)
        out.append(FourCluster(i, j, k, m, z))
    return out

"""Private-neighborhood algebra and maximum irredundant set search.

For a vertex v of a set D, the private neighborhood PN(v, D) holds the
vertices dominated by v and by no other member of D; v belongs to its own
PN exactly when it is isolated in G[D]. D is irredundant when every member
has a nonempty PN, and IR(G) is the largest size of an irredundant set.

Irredundance is hereditary: removing members only enlarges the survivors'
private neighborhoods, so every subset of an irredundant set is
irredundant. The contrapositive makes the search below sound: once a
prefix loses irredundance no superset can recover it, and the branch dies.
The search extends sets only with indices above the current maximum, so
each irredundant set is visited exactly once and comes out in canonical
(ascending-member, lexicographic) order without any hashing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameter, InvalidPartition, NotAMember, NotIrredundant
from .graph_core import Graph, VertexSet, check_vertex, check_vertex_set, members

# Allocation policies for isolated members that also have external private
# neighbors; either side of the partition is valid for them.
ISOLATED_TO_ISO = "iso"
ISOLATED_TO_EPN = "epn"


def private_neighborhood(g: Graph, d: VertexSet, v: int) -> VertexSet:
    """PN(v, d): N[v] minus everything dominated by the rest of d."""
    check_vertex_set(g, d)
    check_vertex(g, v)
    if not (d >> v) & 1:
        raise NotAMember(f"vertex {v} is not in the set")
    others = 0
    for u in members(d & ~(1 << v)):
        others |= g.closed(u)
    return g.closed(v) & ~others


def external_private_neighborhood(g: Graph, d: VertexSet, v: int) -> VertexSet:
    """EPN(v, d) = PN(v, d) - {v}: private neighbors outside the set."""
    return private_neighborhood(g, d, v) & ~(1 << v)


def private_neighborhoods(g: Graph, d: VertexSet) -> dict[int, VertexSet]:
    """PN(v, d) for every member, via prefix/suffix unions in one pass."""
    check_vertex_set(g, d)
    vs = members(d)
    k = len(vs)
    closed = [g.closed(v) for v in vs]
    prefix = [0] * (k + 1)
    for i in range(k):
        prefix[i + 1] = prefix[i] | closed[i]
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]
    return {vs[i]: closed[i] & ~(prefix[i] | suffix[i + 1]) for i in range(k)}


def is_irredundant(g: Graph, d: VertexSet) -> bool:
    """True iff every member of d has a nonempty private neighborhood."""
    return all(pn for pn in private_neighborhoods(g, d).values())


def _search(g: Graph, collect_size: int | None) -> int | list[VertexSet]:
    """Depth-first extension over irredundant sets.

    With collect_size=None returns the maximum size reached; otherwise
    returns every irredundant set of exactly collect_size, which must be
    the maximum (extensions stop there, since nothing larger exists).
    """
    n = g.order
    closed = [g.closed(v) for v in range(n)]
    best = 0
    out: list[VertexSet] = []

    def visit(mask: int, last: int, covered: int, pns: list[int], size: int) -> None:
        nonlocal best
        if collect_size is None:
            if size > best:
                best = size
        elif size == collect_size:
            out.append(mask)
            return
        for w in range(last + 1, n):
            reachable = size + (n - w)
            if collect_size is None:
                if reachable <= best:
                    break
            elif reachable < collect_size:
                break
            cw = closed[w]
            pn_w = cw & ~covered
            if not pn_w:
                continue
            new_pns = [pn & ~cw for pn in pns]
            if 0 in new_pns:
                continue
            new_pns.append(pn_w)
            visit(mask | (1 << w), w, covered | cw, new_pns, size + 1)

    visit(0, -1, 0, [], 0)
    return best if collect_size is None else out


def ir_number(g: Graph) -> int:
    """IR(g): the largest cardinality of an irredundant set."""
    return _search(g, None)  # type: ignore[return-value]


def all_ir_sets(g: Graph) -> list[VertexSet]:
    """All irredundant sets of size IR(g), in canonical order.

    Runs the search twice: once for the bound, once to collect, keeping
    memory independent of how many near-maximum sets exist.
    """
    return _search(g, _search(g, None))  # type: ignore[arg-type, return-value]


@dataclass
class EpnIsoPartition:
    """Split of an irredundant set into flippable and stay-put members.

    x_epn members each carry a chosen external private neighbor
    (epn_choice); x_iso members are isolated in the induced subgraph.
    """

    x_epn: VertexSet
    x_iso: VertexSet
    epn_choice: dict[int, int] = field(default_factory=dict)


def epn_iso_partition(
    g: Graph, x: VertexSet, policy: str = ISOLATED_TO_ISO
) -> EpnIsoPartition:
    """Partition an irredundant set for flipping.

    Members with positive degree in G[x] must go to x_epn (they always
    have external private neighbors). Isolated members that happen to have
    external private neighbors go to x_iso under the default policy and to
    x_epn under the alternative one. Chosen neighbors are the lowest-index
    external private neighbor, for determinism.
    """
    if policy not in (ISOLATED_TO_ISO, ISOLATED_TO_EPN):
        raise InvalidParameter(f"unknown allocation policy {policy!r}")
    pns = private_neighborhoods(g, x)
    if not all(pns.values()):
        raise NotIrredundant("the given set is not irredundant")
    x_epn = 0
    x_iso = 0
    choice: dict[int, int] = {}
    for v in members(x):
        epn = pns[v] & ~(1 << v)
        if (g.adj[v] & x) or (epn and policy == ISOLATED_TO_EPN):
            x_epn |= 1 << v
            choice[v] = members(epn)[0]
        else:
            x_iso |= 1 << v
    return EpnIsoPartition(x_epn, x_iso, choice)


def validate_partition(g: Graph, x: VertexSet, part: EpnIsoPartition) -> None:
    """Check a partition against its set; raises InvalidPartition."""
    if part.x_epn | part.x_iso != x or part.x_epn & part.x_iso:
        raise InvalidPartition("x_epn and x_iso must partition the set")
    if set(part.epn_choice) != set(members(part.x_epn)):
        raise InvalidPartition("epn_choice keys must be exactly the x_epn members")
    pns = private_neighborhoods(g, x)
    for v in members(part.x_iso):
        if g.adj[v] & x:
            raise InvalidPartition(f"{v} has positive induced degree but sits in x_iso")
    for v in members(part.x_epn):
        chosen = part.epn_choice[v]
        epn = pns[v] & ~(1 << v)
        if not (epn >> chosen) & 1:
            raise InvalidPartition(
                f"{chosen} is not an external private neighbor of {v}"
            )

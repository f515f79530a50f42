"""Text formats: graph6, edge-list blocks, and DOT emission.

graph6 support is the single-byte size form only (order <= 62): size byte
chr(63+n), then the upper triangle read column by column (x[0,1], x[0,2],
x[1,2], x[0,3], ...) packed six bits per byte, each byte offset by 63.
Header lines (">>graph6<<") are rejected.

The edge-list format is "n m" on the first line followed by m lines "u v"
(0-based). '#' starts a comment anywhere; blank lines are skipped.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import CapacityExceeded, InvalidParameter, MalformedEdgeList, MalformedGraph6
from .graph_core import Graph, graph_from_edges

GRAPH6_MAX_ORDER = 62
_HEADER = ">>graph6<<"


def _triangle_bits(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(text: str) -> Graph:
    """Decode one header-free graph6 line."""
    line = text.strip()
    if line.startswith(_HEADER):
        raise MalformedGraph6("graph6 header lines are not accepted; strip the header")
    if not line:
        raise MalformedGraph6("empty graph6 line")
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        raise MalformedGraph6("graph6 lines must be ASCII") from None
    for byte in data:
        if byte < 63 or byte > 126:
            raise MalformedGraph6(f"byte {byte} outside the graph6 range 63..126")
    if data[0] == 126:
        raise CapacityExceeded("multi-byte graph6 sizes (order > 62) are not supported")
    n = data[0] - 63
    nbits = _triangle_bits(n)
    expected = (nbits + 5) // 6
    body = data[1:]
    if len(body) != expected:
        raise MalformedGraph6(
            f"order {n} needs {expected} edge bytes, found {len(body)}"
        )
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((row, col))
            k += 1
    return graph_from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a graph of order <= 62 as one graph6 line (no header)."""
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise CapacityExceeded(f"graph6 single-byte form stops at order {GRAPH6_MAX_ORDER}")
    out = [63 + n]
    acc = 0
    filled = 0
    for col in range(1, n):
        for row in range(col):
            acc = (acc << 1) | (1 if g.has_edge(row, col) else 0)
            filled += 1
            if filled == 6:
                out.append(63 + acc)
                acc = 0
                filled = 0
    if filled:
        out.append(63 + (acc << (6 - filled)))
    return bytes(out).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse an "n m" edge-list block."""
    rows = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows.append(stripped)
    if not rows:
        raise MalformedEdgeList("no content lines")
    head = rows[0].split()
    if len(head) != 2:
        raise MalformedEdgeList(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedEdgeList(f"header must be 'n m', got {rows[0]!r}") from None
    body = rows[1:]
    if len(body) != m:
        raise MalformedEdgeList(f"header declares {m} edges, found {len(body)} lines")
    edges = []
    for entry in body:
        parts = entry.split()
        if len(parts) != 2:
            raise MalformedEdgeList(f"edge line must be 'u v', got {entry!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedEdgeList(f"edge line must be 'u v', got {entry!r}") from None
    return graph_from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    """Emit the "n m" edge-list block, edges sorted."""
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def export_dot(g: Graph, labels: Optional[Sequence[str]] = None) -> str:
    """Render an undirected DOT block with stable node and edge order."""
    if labels is not None and len(labels) != g.order:
        raise InvalidParameter(
            f"labels must cover all {g.order} vertices, got {len(labels)}"
        )
    lines = ["graph {"]
    for v in range(g.order):
        if labels is not None:
            text = labels[v].replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Decode several graph6 lines, skipping blanks."""
    out = []
    for line in lines:
        if line.strip():
            out.append(parse_graph6(line))
    return out

"""Desk-scale executable checks with structured pass/fail reports.

Each check builds the relevant IR machinery for a concrete graph, tests a
claim that is supposed to hold, and reports pass, fail, or skipped (when
the claim's hypotheses are not met). Failures carry findings with enough
witness data to reproduce; for the flip check a failure can only mean an
implementation bug, never new mathematics, so the caller should treat it
as fatal. The conjecture scanner gathers evidence over graph6 corpora;
its matches are reportable events, not automatic failures, since the
conjectures it probes are unproven.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Optional, Sequence

from .constructions import build_double_star, build_gn, expected_ir_sets_gn
from .errors import GraphError, InvalidParameter
from .graph_core import (
    Graph,
    classify_shape,
    cycle_graph,
    diameter,
    has_induced_c4,
    is_connected,
    are_isomorphic,
    members,
    path_graph,
)
from .graph_io import parse_graph6, to_graph6
from .irredundance import all_ir_sets, ir_number, private_neighborhoods
from .reconfig import (
    DEFAULT_FLIP_CAP,
    DEFAULT_NODE_CAP,
    IRGraph,
    _iter_flip_candidates,
    build_ir_graph,
    find_four_clusters,
)
from .graph_core import Shape

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

_VERDICT_RANK = {FAIL: 2, PASS: 1, SKIPPED: 0}


def combine_verdicts(verdicts: Iterable[str]) -> str:
    """Aggregate with precedence fail > pass > skipped."""
    worst = SKIPPED
    for v in verdicts:
        if _VERDICT_RANK[v] > _VERDICT_RANK[worst]:
            worst = v
    return worst


@dataclass
class Finding:
    """One counterexample: where, what was seen, and why it is wrong."""

    graph: str
    witness: object
    message: str

    def to_json_dict(self) -> dict:
        return {"graph": self.graph, "witness": self.witness, "message": self.message}


@dataclass
class Report:
    """Outcome of one check; fail exactly when findings are present."""

    check: str
    verdict: str
    findings: list[Finding]
    scanned: int
    elapsed_ms: Optional[float]

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "check": self.check,
            "verdict": self.verdict,
            "findings": [f.to_json_dict() for f in self.findings],
            "scanned": self.scanned,
        }
        if include_timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _finish(
    check: str, findings: list[Finding], skipped: bool, scanned: int, started: float
) -> Report:
    if findings:
        verdict = FAIL
    elif skipped:
        verdict = SKIPPED
    else:
        verdict = PASS
    return Report(check, verdict, findings, scanned, (time.perf_counter() - started) * 1000.0)


def _graph_id(g: Graph) -> str:
    try:
        return to_graph6(g)
    except GraphError:
        return f"<order {g.order}>"


def verify_gn(n: int, node_cap: int = DEFAULT_NODE_CAP) -> Report:
    """Check the hub family member G_n end to end.

    Passes iff IR(G_n) = 2n+1, the enumerated IR-sets equal the closed-form
    census exactly, the reconfiguration graph is the double star S(2n,2n),
    and it carries exactly n 4-clusters.
    """
    started = time.perf_counter()
    gid = f"gn-{n}"
    findings: list[Finding] = []
    g, _roles = build_gn(n)
    ir = ir_number(g)
    if ir != 2 * n + 1:
        findings.append(
            Finding(gid, {"expected": 2 * n + 1, "got": ir}, "wrong IR number")
        )
    sets = all_ir_sets(g)
    expected = expected_ir_sets_gn(n)
    if sets != expected:
        findings.append(
            Finding(
                gid,
                {
                    "expected": [list(members(m)) for m in expected],
                    "got": [list(members(m)) for m in sets],
                },
                "IR-sets differ from the closed-form census",
            )
        )
    irg = build_ir_graph(g, node_cap)
    want_shape = Shape.double_star(2 * n, 2 * n)
    if irg.shape != want_shape:
        findings.append(
            Finding(
                gid,
                {"expected": want_shape.tag, "got": irg.shape.tag},
                "reconfiguration graph has the wrong shape",
            )
        )
    clusters = find_four_clusters(irg)
    if len(clusters) != n:
        findings.append(
            Finding(
                gid,
                {
                    "expected": n,
                    "got": len(clusters),
                    "clusters": [sorted(c.node_set()) for c in clusters],
                },
                "wrong number of 4-clusters",
            )
        )
    return _finish(f"verify_gn(n={n})", findings, False, 1, started)


def check_flip_theorem(
    g: Graph, graph_id: Optional[str] = None, flip_cap: int = DEFAULT_FLIP_CAP
) -> Report:
    """Every flip of every IR-set must be an IR-set again.

    Sweeps all choice functions and per-vertex allocations, up to flip_cap
    candidates per IR-set. Any finding here falsifies a proved fact, so it
    can only mean the implementation is wrong.
    """
    started = time.perf_counter()
    gid = graph_id if graph_id is not None else _graph_id(g)
    findings: list[Finding] = []
    target = ir_number(g)
    for x in all_ir_sets(g):
        count = 0
        for combo, result in _iter_flip_candidates(g, x):
            count += 1
            if count > flip_cap:
                break
            pns = private_neighborhoods(g, result)
            if result.bit_count() != target or not all(pns.values()):
                findings.append(
                    Finding(
                        gid,
                        {
                            "set": list(members(x)),
                            "assignment": [list(pair) for pair in combo],
                            "flip": list(members(result)),
                        },
                        "flip of a maximum irredundant set is not one",
                    )
                )
    return _finish("flip_theorem", findings, False, 1, started)


def _induced_edge_count(g: Graph, x: int) -> int:
    return sum((g.adj[v] & x).bit_count() for v in members(x)) // 2


def check_c4_lemma(
    g: Graph, graph_id: Optional[str] = None, node_cap: int = DEFAULT_NODE_CAP
) -> Report:
    """Induced-4-cycle check for the reconfiguration graph.

    Hypotheses: the reconfiguration graph H is connected and some IR-set
    either induces exactly one edge, or is independent with at least two
    members owning external private neighbors. When they hold, H must
    contain an induced 4-cycle; otherwise the check is skipped.
    """
    started = time.perf_counter()
    gid = graph_id if graph_id is not None else _graph_id(g)
    findings: list[Finding] = []
    irg = build_ir_graph(g, node_cap)
    h = irg.as_graph()
    if not is_connected(h):
        return _finish("c4_lemma", findings, True, 1, started)
    qualifying = None
    for x in irg.nodes:
        edge_count = _induced_edge_count(g, x)
        if edge_count == 1:
            qualifying = x
            break
        if edge_count == 0:
            pns = private_neighborhoods(g, x)
            owners = sum(1 for v, pn in pns.items() if pn & ~(1 << v))
            if owners >= 2:
                qualifying = x
                break
    if qualifying is None:
        return _finish("c4_lemma", findings, True, 1, started)
    if has_induced_c4(h) is None:
        findings.append(
            Finding(
                gid,
                {"qualifying_set": list(members(qualifying))},
                "hypotheses hold but the reconfiguration graph has no induced 4-cycle",
            )
        )
    return _finish("c4_lemma", findings, False, 1, started)


def check_diameter_lemma(
    g: Graph, graph_id: Optional[str] = None, node_cap: int = DEFAULT_NODE_CAP
) -> Report:
    """Diameter lower bound from busy IR-sets.

    A member counts as busy when it has positive induced degree or an
    external private neighbor. If the reconfiguration graph is connected
    and some IR-set has k >= 3 busy members, its diameter must be at least
    the largest such k; with no qualifying set the check is skipped.
    """
    started = time.perf_counter()
    gid = graph_id if graph_id is not None else _graph_id(g)
    findings: list[Finding] = []
    irg = build_ir_graph(g, node_cap)
    h = irg.as_graph()
    if not is_connected(h):
        return _finish("diameter_lemma", findings, True, 1, started)
    k_max = 0
    witness_set = 0
    for x in irg.nodes:
        pns = private_neighborhoods(g, x)
        k = sum(
            1
            for v, pn in pns.items()
            if (g.adj[v] & x) or (pn & ~(1 << v))
        )
        if k > k_max:
            k_max = k
            witness_set = x
    if k_max < 3:
        return _finish("diameter_lemma", findings, True, 1, started)
    diam = diameter(h)
    if diam < k_max:
        findings.append(
            Finding(
                gid,
                {
                    "k": k_max,
                    "diameter": diam,
                    "set": list(members(witness_set)),
                },
                "reconfiguration graph diameter is below the busy-member bound",
            )
        )
    return _finish("diameter_lemma", findings, False, 1, started)


def audit_leaf_clusters(irg: IRGraph, graph_id: Optional[str] = None) -> Report:
    """On a diameter-3 tree-shaped IR-graph, leaves must split into 4-clusters.

    Skipped unless the IR-graph is a tree of diameter 3 (a double star).
    Passes iff the 4-clusters are pairwise disjoint and cover exactly the
    leaves.
    """
    started = time.perf_counter()
    gid = graph_id if graph_id is not None else _graph_id(irg.base)
    findings: list[Finding] = []
    if irg.shape.kind != "DoubleStar":
        return _finish("leaf_clusters", findings, True, 1, started)
    h = irg.as_graph()
    leaves = {i for i in range(h.order) if h.degree(i) == 1}
    clusters = find_four_clusters(irg)
    covered: set[int] = set()
    for c in clusters:
        nodes = c.node_set()
        if nodes & covered:
            findings.append(
                Finding(
                    gid,
                    {"overlap": sorted(nodes & covered)},
                    "4-clusters overlap",
                )
            )
        if not nodes <= leaves:
            findings.append(
                Finding(
                    gid,
                    {"non_leaves": sorted(nodes - leaves)},
                    "a 4-cluster contains a non-leaf node",
                )
            )
        covered |= nodes
    if covered != leaves:
        findings.append(
            Finding(
                gid,
                {"uncovered_leaves": sorted(leaves - covered)},
                "leaves are not covered by 4-clusters",
            )
        )
    return _finish("leaf_clusters", findings, False, 1, started)


@dataclass(frozen=True)
class ShapeTarget:
    """A shape pattern the scanner looks for among IR-graphs.

    Concrete kinds (path, cycle, double_star) match by isomorphism against
    a freshly built target graph, never by classification tag, so small
    paths that classify as stars or double stars still count. tree_diam
    matches any tree of the given diameter.
    """

    description: str
    kind: str
    params: tuple[int, ...]

    def matches(self, h: Graph) -> bool:
        if self.kind == "path":
            (k,) = self.params
            return h.order == k and h.size == k - 1 and are_isomorphic(h, path_graph(k))
        if self.kind == "cycle":
            (k,) = self.params
            return h.order == k and h.size == k and are_isomorphic(h, cycle_graph(k))
        if self.kind == "double_star":
            a, b = self.params
            return h.order == a + b + 2 and are_isomorphic(
                h, build_double_star(a, b)
            )
        if self.kind == "tree_diam":
            (d,) = self.params
            return (
                is_connected(h) and h.size == h.order - 1 and diameter(h) == d
            )
        raise InvalidParameter(f"unknown target kind {self.kind!r}")


def target_path(k: int) -> ShapeTarget:
    if k < 1:
        raise InvalidParameter("a path needs at least one vertex")
    return ShapeTarget(f"Path({k})", "path", (k,))


def target_cycle(k: int) -> ShapeTarget:
    if k < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return ShapeTarget(f"Cycle({k})", "cycle", (k,))


def target_double_star(a: int, b: int) -> ShapeTarget:
    if a < 1 or b < 1:
        raise InvalidParameter("double-star leaf counts must be >= 1")
    lo, hi = min(a, b), max(a, b)
    return ShapeTarget(f"DoubleStar({lo},{hi})", "double_star", (lo, hi))


def target_tree_diam(d: int) -> ShapeTarget:
    if d < 0:
        raise InvalidParameter("tree diameter must be >= 0")
    return ShapeTarget(f"TreeDiam({d})", "tree_diam", (d,))


@dataclass
class ScanMatch:
    graph: str
    shape: str
    target: str

    def to_json_dict(self) -> dict:
        return {"graph": self.graph, "shape": self.shape, "target": self.target}


@dataclass
class ScanReport:
    """Evidence from one corpus sweep; matches are findings, not failures."""

    scanned: int
    matches: list[ScanMatch]
    errors: int
    shape_tally: dict[str, int] = field(default_factory=dict)
    elapsed_ms: Optional[float] = None

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "check": "scan",
            "scanned": self.scanned,
            "matches": [m.to_json_dict() for m in self.matches],
            "errors": self.errors,
            "shape_tally": {k: self.shape_tally[k] for k in sorted(self.shape_tally)},
        }
        if include_timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _scan_one(
    task: tuple[int, str],
    targets: tuple[ShapeTarget, ...],
    connected_only: bool,
    node_cap: int,
) -> tuple[int, str, Optional[str], list[str]]:
    idx, line = task
    try:
        g = parse_graph6(line)
    except GraphError:
        return (idx, "error", None, [])
    if connected_only and not is_connected(g):
        return (idx, "filtered", None, [])
    try:
        irg = build_ir_graph(g, node_cap)
    except GraphError:
        return (idx, "error", None, [])
    h = irg.as_graph()
    tag = classify_shape(h).tag
    matched = [t.description for t in targets if t.matches(h)]
    return (idx, "scanned", tag, matched)


def conjecture_scan(
    lines: Iterable[str],
    targets: Sequence[ShapeTarget],
    connected_only: bool = False,
    node_cap: int = DEFAULT_NODE_CAP,
    workers: int = 1,
) -> ScanReport:
    """Classify the IR-graph of every graph6 line and match against targets.

    Malformed lines (and graphs whose IR-set count exceeds node_cap) are
    counted as errors and the scan continues. The report is evidence only:
    the caller decides whether a match is good or bad news. Results are
    identical for any worker count.
    """
    started = time.perf_counter()
    tasks = [(i, line.strip()) for i, line in enumerate(lines) if line.strip()]
    fn = partial(
        _scan_one,
        targets=tuple(targets),
        connected_only=connected_only,
        node_cap=node_cap,
    )
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, tasks, chunksize=8))
    else:
        results = [fn(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    by_idx = {i: line for i, line in tasks}
    scanned = 0
    errors = 0
    tally: dict[str, int] = {}
    matches: list[ScanMatch] = []
    for idx, status, tag, matched in results:
        if status == "error":
            errors += 1
        elif status == "scanned":
            scanned += 1
            assert tag is not None
            tally[tag] = tally.get(tag, 0) + 1
            for desc in matched:
                matches.append(ScanMatch(by_idx[idx], tag, desc))
    return ScanReport(
        scanned,
        matches,
        errors,
        tally,
        (time.perf_counter() - started) * 1000.0,
    )

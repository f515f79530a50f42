"""The ``ir`` command line tool.

Subcommands: number, sets, graph (reconfiguration graph), construct
(built-in families), verify (structural checks), and scan (graph6 corpus
sweeps on standard input). Exit codes: 0 success/verified, 1 verification
failure or a conjecture match under --fail-on-match, 2 usage or input
errors. Diagnostics go to stderr only, so stdout stays machine-parseable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .constructions import build_double_star, build_gn, build_gprime
from .errors import GraphError, InvalidParameter
from .graph_core import Graph, members
from .graph_io import export_dot, format_edge_list, parse_edge_list, parse_graph6, to_graph6
from .irredundance import all_ir_sets, ir_number
from .reconfig import DEFAULT_FLIP_CAP, DEFAULT_NODE_CAP, build_ir_graph
from .verifier import (
    ShapeTarget,
    check_c4_lemma,
    check_diameter_lemma,
    check_flip_theorem,
    conjecture_scan,
    target_cycle,
    target_double_star,
    target_path,
    target_tree_diam,
    verify_gn,
)


@dataclass
class CliConfig:
    """Resolved run options shared by the subcommands."""

    input_path: Optional[str] = None  # None or "-" means standard input
    input_format: str = "auto"  # auto | edges | graph6
    output_format: str = "text"
    workers: int = 1
    ir_cap: int = DEFAULT_NODE_CAP
    flip_cap: int = DEFAULT_FLIP_CAP
    deterministic: bool = False

    def __post_init__(self) -> None:
        if self.ir_cap <= 0 or self.flip_cap <= 0:
            raise InvalidParameter("caps must be positive")
        if self.workers < 1:
            raise InvalidParameter("worker count must be >= 1")


def _resolve_workers(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("IR_WORKERS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameter(f"IR_WORKERS must be an integer, got {env!r}")
    return 1


def _config_from(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(
        input_path=getattr(ns, "input", None),
        input_format=getattr(ns, "input_format", "auto"),
        output_format=getattr(ns, "format", "text"),
        workers=_resolve_workers(getattr(ns, "workers", None)),
        ir_cap=getattr(ns, "ir_cap", DEFAULT_NODE_CAP),
        flip_cap=getattr(ns, "flip_cap", DEFAULT_FLIP_CAP),
        deterministic=getattr(ns, "deterministic", False),
    )


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8", errors="replace") as fh:
        return fh.read()


def _detect_format(path: Optional[str], text: str) -> str:
    # graph6 bytes all sit at or above ord('?') = 63; edge lists start with
    # a digit, '#', or whitespace, all below. Headers route to the graph6
    # parser so its error message names the problem.
    if path and path != "-" and path.endswith(".g6"):
        return "graph6"
    stripped = text.lstrip()
    if stripped.startswith(">>"):
        return "graph6"
    if stripped and ord(stripped[0]) >= 63:
        return "graph6"
    return "edges"


def _load_graph(config: CliConfig) -> Graph:
    text = _read_text(config.input_path)
    fmt = config.input_format
    if fmt == "auto":
        fmt = _detect_format(config.input_path, text)
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise InvalidParameter("no graph6 line found in the input")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_number(ns: argparse.Namespace) -> int:
    config = _config_from(ns)
    g = _load_graph(config)
    value = ir_number(g)
    if config.output_format == "json":
        _emit_json({"ir_number": value})
    else:
        print(value)
    return 0


def _cmd_sets(ns: argparse.Namespace) -> int:
    config = _config_from(ns)
    g = _load_graph(config)
    sets = all_ir_sets(g)
    if config.output_format == "json":
        _emit_json(
            {"ir_number": ir_number(g), "ir_sets": [list(members(m)) for m in sets]}
        )
    else:
        for m in sets:
            print(" ".join(str(v) for v in members(m)))
    return 0


def _cmd_graph(ns: argparse.Namespace) -> int:
    config = _config_from(ns)
    g = _load_graph(config)
    irg = build_ir_graph(g, config.ir_cap)
    payload = irg.to_json_dict()
    if ns.dot:
        labels = ["{" + ",".join(str(v) for v in members(m)) + "}" for m in irg.nodes]
        with open(ns.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(irg.as_graph(), labels))
    if ns.json:
        with open(ns.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if config.output_format == "json":
        _emit_json(payload)
    else:
        print(f"nodes {len(irg.nodes)}")
        print(f"edges {len(irg.edges)}")
        print(f"shape {irg.shape.tag}")
    return 0


def _cmd_construct(ns: argparse.Namespace) -> int:
    labels = None
    if ns.family == "gn":
        g, roles = build_gn(ns.n)
        labels = roles.labels()
    elif ns.family == "gprime":
        g, roles = build_gprime()
        labels = roles.labels()
    else:
        g = build_double_star(ns.a, ns.b)
    fmt = ns.format
    if fmt == "graph6":
        print(to_graph6(g))
    elif fmt == "dot":
        sys.stdout.write(export_dot(g, labels))
    else:
        sys.stdout.write(format_edge_list(g))
    return 0


def _cmd_verify(ns: argparse.Namespace) -> int:
    config = _config_from(ns)
    if ns.target == "gn":
        report = verify_gn(ns.n, node_cap=config.ir_cap)
    else:
        g = _load_graph(config)
        if ns.target == "flip":
            report = check_flip_theorem(g, flip_cap=config.flip_cap)
        elif ns.target == "c4":
            report = check_c4_lemma(g, node_cap=config.ir_cap)
        else:
            report = check_diameter_lemma(g, node_cap=config.ir_cap)
    _emit_json(report.to_json_dict(include_timing=not config.deterministic))
    return 1 if report.verdict == "fail" else 0


def _parse_shape_tokens(tokens: Sequence[str]) -> ShapeTarget:
    if not tokens:
        raise InvalidParameter("--shape needs a kind and its parameters")
    kind = tokens[0]
    try:
        nums = [int(t) for t in tokens[1:]]
    except ValueError:
        raise InvalidParameter(f"--shape {kind} parameters must be integers") from None
    if kind == "path" and len(nums) == 1:
        return target_path(nums[0])
    if kind == "cycle" and len(nums) == 1:
        return target_cycle(nums[0])
    if kind == "double-star" and len(nums) == 2:
        return target_double_star(nums[0], nums[1])
    if kind == "tree-diam" and len(nums) == 1:
        return target_tree_diam(nums[0])
    raise InvalidParameter(
        "--shape must be one of: path K, cycle K, double-star A B, tree-diam D"
    )


def _cmd_scan(ns: argparse.Namespace) -> int:
    config = _config_from(ns)
    targets = [_parse_shape_tokens(tokens) for tokens in ns.shape]
    lines = sys.stdin.read().splitlines()
    report = conjecture_scan(
        lines,
        targets,
        connected_only=ns.connected_only,
        node_cap=config.ir_cap,
        workers=config.workers,
    )
    _emit_json(report.to_json_dict(include_timing=not config.deterministic))
    if ns.fail_on_match and report.matches:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ir",
        description="Upper irredundance numbers and their reconfiguration graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="graph file (edge list or graph6), or - for stdin")
        p.add_argument(
            "--input-format",
            choices=["auto", "edges", "graph6"],
            default="auto",
        )

    p_number = sub.add_parser("number", help="print IR(G)")
    add_input(p_number)
    p_number.add_argument("--format", choices=["text", "json"], default="text")
    p_number.set_defaults(func=_cmd_number)

    p_sets = sub.add_parser("sets", help="list all maximum irredundant sets")
    add_input(p_sets)
    p_sets.add_argument("--format", choices=["text", "json"], default="text")
    p_sets.set_defaults(func=_cmd_sets)

    p_graph = sub.add_parser("graph", help="build the reconfiguration graph")
    add_input(p_graph)
    p_graph.add_argument("--format", choices=["text", "json"], default="text")
    p_graph.add_argument("--dot", metavar="FILE", help="write the graph as DOT")
    p_graph.add_argument("--json", metavar="FILE", help="write the graph as JSON")
    p_graph.add_argument("--ir-cap", type=int, default=DEFAULT_NODE_CAP)
    p_graph.set_defaults(func=_cmd_graph)

    p_con = sub.add_parser("construct", help="emit a built-in graph family member")
    con_sub = p_con.add_subparsers(dest="family", required=True)
    p_gn = con_sub.add_parser("gn", help="hub family member G_n")
    p_gn.add_argument("--n", type=int, required=True)
    p_gp = con_sub.add_parser("gprime", help="the 6-vertex flip/skip template")
    p_ds = con_sub.add_parser("double-star", help="double star S(a,b)")
    p_ds.add_argument("a", type=int)
    p_ds.add_argument("b", type=int)
    for p in (p_gn, p_gp, p_ds):
        p.add_argument("--format", choices=["edges", "graph6", "dot"], default="edges")
        p.set_defaults(func=_cmd_construct)

    p_ver = sub.add_parser("verify", help="run a structural check, report JSON")
    ver_sub = p_ver.add_subparsers(dest="target", required=True)
    v_gn = ver_sub.add_parser("gn", help="check the hub family end to end")
    v_gn.add_argument("--n", type=int, required=True)
    v_flip = ver_sub.add_parser("flip", help="flips of IR-sets stay IR-sets")
    v_c4 = ver_sub.add_parser("c4", help="induced 4-cycle requirement")
    v_diam = ver_sub.add_parser("diam", help="diameter lower bound")
    for p in (v_flip, v_c4, v_diam):
        add_input(p)
    for p in (v_gn, v_flip, v_c4, v_diam):
        p.add_argument("--ir-cap", type=int, default=DEFAULT_NODE_CAP)
        p.add_argument("--flip-cap", type=int, default=DEFAULT_FLIP_CAP)
        p.add_argument("--deterministic", action="store_true")
        p.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="sweep graph6 lines from stdin")
    p_scan.add_argument(
        "--shape",
        nargs="+",
        action="append",
        required=True,
        metavar="KIND PARAM",
        help="path K | cycle K | double-star A B | tree-diam D (repeatable)",
    )
    p_scan.add_argument("--connected-only", action="store_true")
    p_scan.add_argument("--fail-on-match", action="store_true")
    p_scan.add_argument("--workers", type=int, default=None)
    p_scan.add_argument("--ir-cap", type=int, default=DEFAULT_NODE_CAP)
    p_scan.add_argument("--deterministic", action="store_true")
    p_scan.set_defaults(func=_cmd_scan)

    return parser


def run(argv: Sequence[str]) -> int:
    """Parse and execute one invocation; returns the process exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return ns.func(ns)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

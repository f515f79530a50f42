#!/usr/bin/env python3
"""Sweep small connected graphs for path- or cycle-shaped IR-graphs.

No graph is known whose IR-graph is a path on 3 or more vertices, or a
cycle on 5 or more; this script gathers exhaustive evidence at small
order. It scans every connected graph up to --max-order (atlas-backed)
for the given path and cycle targets and prints the scan report as JSON.
A match would be big news rather than a bug, so it exits 1 to make sure
nobody misses it.

Usage:
    python scripts/scan_conjectures.py --max-order 6 --workers 4
"""

import argparse
import json
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from irgraphs import conjecture_scan, target_cycle, target_path


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=6, choices=range(1, 8))
    ap.add_argument("--paths", type=int, nargs="*", default=[3, 4, 5, 6])
    ap.add_argument("--cycles", type=int, nargs="*", default=[5, 6])
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    lines = [
        nx.to_graph6_bytes(g, header=False).decode().strip()
        for g in graph_atlas_g()
        if 1 <= g.number_of_nodes() <= args.max_order and nx.is_connected(g)
    ]
    targets = [target_path(k) for k in args.paths]
    targets += [target_cycle(k) for k in args.cycles]
    report = conjecture_scan(lines, targets, connected_only=True, workers=args.workers)
    json.dump(report.to_json_dict(), sys.stdout, indent=2)
    print()
    if report.matches:
        print(f"{len(report.matches)} match(es) found -- inspect the report!", file=sys.stderr)
        return 1
    print(f"no matches among {report.scanned} graphs", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Desk-scale evidence for the open chromatic-number questions.

The exact values of chi_la for the C8 units, B_k, and kC(8,2) are open;
the single-unit instances at k = 1 have 10 edges each, which is within
reach of the exact search oracle.  This script runs the oracle on them
(and on the smallest closed cases as sanity anchors) and prints the
findings next to the known bounds.

Usage:
    python scripts/explore_small_chi_la.py [--budget SECONDS] [--max-edges N]
"""

from __future__ import annotations

import argparse
import sys

from antimagic.families import build_family
from antimagic.search import STATUS_VALUE, chi_la_exact, confirm_three
from antimagic.verify import induced_coloring, lower_bound


CASES = (
    ("C8_units", {"k": 1}, "2 <= chi_la <= 4 known"),
    ("Bk", {"k": 1}, "2 <= chi_la <= 3 known"),
    ("kC82", {"k": 1}, "3 <= chi_la <= 4 known"),
    ("kD82", {"k": 1}, "chi_la = 3 known"),
    ("FB", {"k": 1}, "chi_la = 3 known"),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=float, default=None,
                        help="seconds per case (default: unlimited)")
    parser.add_argument("--max-edges", type=int, default=11)
    args = parser.parse_args()

    for tag, params, known in CASES:
        built = build_family(tag, **params)
        g = built.graph
        constructed = induced_coloring(g).color_count
        result = chi_la_exact(g, max_edges=args.max_edges, budget=args.budget)
        if result.status == STATUS_VALUE:
            verdict = f"chi_la = {result.chi_la}"
            if result.chi_la == 3:
                verdict += f" ({confirm_three(g, result.witness)})"
        else:
            verdict = result.status
        print(f"{tag:<9} {params} m={g.size:<3} lower_bound={lower_bound(g)} "
              f"constructed={constructed}  search: {verdict} "
              f"[{result.stats.nodes} nodes, {result.stats.elapsed:.2f}s]  "
              f"known: {known}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

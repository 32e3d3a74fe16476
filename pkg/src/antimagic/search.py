"""Exact brute-force oracle for the local antimagic chromatic number.

``chi_la_exact`` enumerates every bijection from the edge set onto
[1, m], pruning only in ways that cannot change the minimum:

* abort a partial assignment as soon as two adjacent, fully labeled
  vertices carry equal sums;
* abort when the distinct sums among fully labeled vertices already reach
  the best color count found (final counts can only grow);
* stop when the best count meets a proven lower bound.

No symmetry reduction is applied: the label-complement map l -> m+1-l can
break validity between neighbors of unequal degree, so halving the space
with it would be unsound here.  Default edge budget is 11; the time budget
comes from the argument or the ANTIMAGIC_SEARCH_BUDGET environment
variable (seconds).
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .graph import GraphTooLarge, LabeledEdge, LabeledGraph
from .verify import induced_coloring, lower_bound

DEFAULT_MAX_EDGES = 11
BUDGET_ENV_VAR = "ANTIMAGIC_SEARCH_BUDGET"

STATUS_VALUE = "value"
STATUS_NO_LABELING = "no_labeling"
STATUS_TIMEOUT = "timeout"

CONFIRMED_3 = "confirmed3"
ONLY_UPPER_BOUND = "only_upper_bound"


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    prunes: int
    elapsed: float


@dataclass(frozen=True)
class SearchResult:
    status: str  # value | no_labeling | timeout
    chi_la: int | None
    witness: LabeledGraph | None
    stats: SearchStats
    budget: float | None = None

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "chi_la": self.chi_la,
            "witness": (
                [{"u": e.u, "v": e.v, "label": e.label} for e in self.witness.edges]
                if self.witness is not None else None
            ),
            "stats": {
                "nodes": self.stats.nodes,
                "prunes": self.stats.prunes,
                "elapsed": self.stats.elapsed,
            },
            "budget": self.budget,
        }


class _Timeout(Exception):
    pass


class _Stop(Exception):
    pass


def default_budget() -> float | None:
    raw = os.environ.get(BUDGET_ENV_VAR)
    return float(raw) if raw else None


def _edge_order(g: LabeledGraph) -> list[int]:
    """Static order that completes vertices early (more pruning up front)."""
    deg = [0] * g.n_vertices
    for e in g.edges:
        deg[e.u] += 1
        deg[e.v] += 1
    placed = [0] * g.n_vertices
    remaining = list(range(g.size))
    order = []
    while remaining:
        def score(ei: int) -> tuple[int, int, int]:
            e = g.edges[ei]
            completes = (placed[e.u] == deg[e.u] - 1) + (placed[e.v] == deg[e.v] - 1)
            return (completes, placed[e.u] + placed[e.v], -ei)

        best = max(remaining, key=score)
        remaining.remove(best)
        order.append(best)
        placed[g.edges[best].u] += 1
        placed[g.edges[best].v] += 1
    return order


def chi_la_exact(
    g: LabeledGraph,
    max_edges: int = DEFAULT_MAX_EDGES,
    budget: float | None = None,
) -> SearchResult:
    """Exhaustive minimum color count over all bijective edge labelings.

    Existing labels on g are ignored; only the structure matters.  Returns
    the minimum with a witness labeling, ``no_labeling`` when no bijection
    is local antimagic, or ``timeout`` when the budget runs out.
    """
    m = g.size
    if m > max_edges:
        raise GraphTooLarge(f"{m} edges exceeds the search budget of {max_edges}")
    if budget is None:
        budget = default_budget()
    start = time.monotonic()
    if m == 0:
        c = 1 if g.n_vertices else 0
        return SearchResult(STATUS_VALUE, c, g, SearchStats(0, 0, 0.0), budget)

    n = g.n_vertices
    adj: list[list[int]] = [[] for _ in range(n)]
    deg = [0] * n
    for e in g.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
        deg[e.u] += 1
        deg[e.v] += 1
    iso_extra = 1 if any(d == 0 for d in deg) else 0

    order = _edge_order(g)
    endpoints = [(g.edges[i].u, g.edges[i].v) for i in order]
    lb = lower_bound(g)

    sums = [0] * n
    rem = deg[:]
    used = [False] * (m + 1)
    assignment = [0] * m
    completed: dict[int, int] = {}

    nodes = 0
    prunes = 0
    best: int | None = None
    best_assignment: list[int] | None = None
    deadline = start + budget if budget is not None else None

    def dfs(t: int, distinct: int) -> None:
        nonlocal nodes, prunes, best, best_assignment
        u, v = endpoints[t]
        last = t + 1 == m
        for lab in range(1, m + 1):
            if used[lab]:
                continue
            nodes += 1
            if deadline is not None and nodes % 4096 == 0 \
                    and time.monotonic() > deadline:
                raise _Timeout
            used[lab] = True
            sums[u] += lab
            sums[v] += lab
            rem[u] -= 1
            rem[v] -= 1
            assignment[t] = lab

            ok = True
            for w in (u, v):
                if rem[w] == 0:
                    sw = sums[w]
                    for nb in adj[w]:
                        if rem[nb] == 0 and sums[nb] == sw:
                            ok = False
                            break
                if not ok:
                    break

            newly = [w for w in (u, v) if rem[w] == 0]
            d = distinct
            if ok:
                for w in newly:
                    c = completed.get(sums[w], 0)
                    completed[sums[w]] = c + 1
                    if c == 0:
                        d += 1
                if best is not None and d + iso_extra >= best:
                    prunes += 1
                elif last:
                    best = d + iso_extra
                    best_assignment = assignment[:]
                    if best <= lb:
                        raise _Stop
                else:
                    dfs(t + 1, d)
                for w in newly:
                    c = completed[sums[w]] - 1
                    if c:
                        completed[sums[w]] = c
                    else:
                        del completed[sums[w]]
            else:
                prunes += 1

            used[lab] = False
            sums[u] -= lab
            sums[v] -= lab
            rem[u] += 1
            rem[v] += 1

    status = STATUS_VALUE
    try:
        dfs(0, 0)
    except _Stop:
        pass
    except _Timeout:
        stats = SearchStats(nodes, prunes, time.monotonic() - start)
        return SearchResult(STATUS_TIMEOUT, None, None, stats, budget)

    stats = SearchStats(nodes, prunes, time.monotonic() - start)
    if best is None:
        return SearchResult(STATUS_NO_LABELING, None, None, stats, budget)
    witness_edges = [None] * m
    for t, ei in enumerate(order):
        e = g.edges[ei]
        witness_edges[ei] = LabeledEdge(e.u, e.v, best_assignment[t])
    witness = LabeledGraph(g.names, tuple(witness_edges))
    return SearchResult(status, best, witness, stats, budget)


def confirm_three(g: LabeledGraph, witness: LabeledGraph) -> str:
    """Upgrade a verified 3-color witness to an exact value when a lower
    bound of 3 is available (chromatic number or the 2-coloring gate)."""
    report = induced_coloring(witness)
    if not (report.local_antimagic and report.color_count == 3):
        raise ValueError("witness is not a local antimagic 3-coloring")
    return CONFIRMED_3 if lower_bound(g) >= 3 else ONLY_UPPER_BOUND

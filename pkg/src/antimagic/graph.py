"""Immutable simple graphs with labeled edges and vertex surgery.

Vertices are addressed by display name (``u_3``, ``x_5^1``, ``w_2_4``) so
constructions and tests can refer to them directly; integer ids are
positional handles.  Every operation is pure: it validates its inputs and
returns a new graph.  Edge labels stay attached to their edges through
merges and splits, so a bijective labeling survives any sequence of
surgeries.  Values are safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property


class GraphError(ValueError):
    """Invalid graph construction or surgery."""


class DuplicateName(GraphError):
    pass


class Loop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class InvalidPlan(GraphError):
    pass


class LoopCreated(GraphError):
    pass


class ParallelEdgeCreated(GraphError):
    pass


class NotAPartition(GraphError):
    pass


class GraphTooLarge(GraphError):
    pass


@dataclass(frozen=True)
class LabeledEdge:
    """Undirected edge, endpoints stored with u < v, carrying a positive label."""

    u: int
    v: int
    label: int


@dataclass(frozen=True)
class MergeGroup:
    """A set of >= 2 vertices to fuse, plus the display name of the result."""

    members: tuple[str, ...]
    name: str


@dataclass(frozen=True)
class MergePlan:
    groups: tuple[MergeGroup, ...]


def merge_plan(groups: list[tuple[list[str] | tuple[str, ...], str]]) -> MergePlan:
    """Convenience constructor: ``[(members, fused_name), ...]``."""
    return MergePlan(tuple(MergeGroup(tuple(m), nm) for m, nm in groups))


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]  # 0/1 per vertex id
    component_parts: tuple[tuple[int, int], ...]  # (|side0|, |side1|) per component

    @property
    def part_sizes(self) -> tuple[int, int]:
        return (
            sum(a for a, _ in self.component_parts),
            sum(b for _, b in self.component_parts),
        )

    @property
    def balanced(self) -> bool:
        """True when every component has equal sides (so every 2-coloring does too)."""
        return all(a == b for a, b in self.component_parts)


@dataclass(frozen=True)
class LabeledGraph:
    names: tuple[str, ...]
    edges: tuple[LabeledEdge, ...]

    # ---- views ---------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    @property
    def size(self) -> int:
        """Edge count m."""
        return len(self.edges)

    @cached_property
    def _id_of(self) -> dict[str, int]:
        return {nm: i for i, nm in enumerate(self.names)}

    def id_of(self, name: str) -> int:
        try:
            return self._id_of[name]
        except KeyError:
            raise GraphError(f"no vertex named {name!r}") from None

    def name_of(self, vid: int) -> str:
        return self.names[vid]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.names]
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return tuple(tuple(a) for a in adj)

    def neighbors(self, name: str) -> tuple[str, ...]:
        return tuple(self.names[w] for w in self.adjacency[self.id_of(name)])

    def degree(self, name: str) -> int:
        return len(self.adjacency[self.id_of(name)])

    def degrees(self) -> dict[str, int]:
        return {nm: len(adj) for nm, adj in zip(self.names, self.adjacency)}

    def has_edge(self, a: str, b: str) -> bool:
        ia, ib = self.id_of(a), self.id_of(b)
        return ib in self.adjacency[ia]

    def labels(self) -> tuple[int, ...]:
        return tuple(e.label for e in self.edges)

    def incident_labels(self, name: str) -> tuple[int, ...]:
        vid = self.id_of(name)
        return tuple(e.label for e in self.edges if vid in (e.u, e.v))

    def edge_names(self) -> tuple[tuple[str, str, int], ...]:
        return tuple((self.names[e.u], self.names[e.v], e.label) for e in self.edges)

    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n_vertices
        comps = []
        for start in range(self.n_vertices):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    # ---- pure construction ----------------------------------------------

    def with_edges(self, triples: list[tuple[str, str, int]]) -> LabeledGraph:
        """Append edges given as (name_a, name_b, label); validates simplicity."""
        new = list(self.edges)
        seen = {(e.u, e.v) for e in self.edges}
        for a, b, label in triples:
            ia, ib = self.id_of(a), self.id_of(b)
            if ia == ib:
                raise Loop(f"loop at vertex {a!r}")
            key = (min(ia, ib), max(ia, ib))
            if key in seen:
                raise ParallelEdge(f"edge {a!r}--{b!r} already present")
            if label < 1:
                raise GraphError(f"edge label must be a positive integer, got {label}")
            seen.add(key)
            new.append(LabeledEdge(*key, label))
        return LabeledGraph(self.names, tuple(new))


# ---- module-level operations ------------------------------------------------


def new_graph(names: list[str] | tuple[str, ...]) -> LabeledGraph:
    seen = set()
    for nm in names:
        if nm in seen:
            raise DuplicateName(f"duplicate vertex name {nm!r}")
        seen.add(nm)
    return LabeledGraph(tuple(names), ())


def add_edge(g: LabeledGraph, a: str, b: str, label: int) -> LabeledGraph:
    return g.with_edges([(a, b, label)])


def apply_merge(g: LabeledGraph, plan: MergePlan) -> LabeledGraph:
    """Fuse each group of vertices into one, keeping all edges and labels.

    Errors: InvalidPlan for malformed groups, LoopCreated when a group
    contains adjacent vertices, ParallelEdgeCreated when the fused graph
    would carry two edges between the same pair.
    """
    assigned: dict[int, int] = {}  # vertex id -> group index
    for gi, group in enumerate(plan.groups):
        if len(group.members) < 2:
            raise InvalidPlan(f"group {group.name!r} has fewer than 2 members")
        if len(set(group.members)) != len(group.members):
            raise InvalidPlan(f"group {group.name!r} repeats a member")
        for nm in group.members:
            vid = g.id_of(nm)
            if vid in assigned:
                raise InvalidPlan(f"vertex {nm!r} appears in two merge groups")
            assigned[vid] = gi

    fused_names = [grp.name for grp in plan.groups]
    if len(set(fused_names)) != len(fused_names):
        raise InvalidPlan("fused vertex names are not distinct")
    survivors = {nm for i, nm in enumerate(g.names) if i not in assigned}
    for nm in fused_names:
        if nm in survivors:
            raise InvalidPlan(f"fused name {nm!r} collides with a surviving vertex")

    leader = {}  # group index -> smallest member id, fixes the fused vertex position
    for vid, gi in assigned.items():
        if gi not in leader or vid < leader[gi]:
            leader[gi] = vid
    leader_ids = {vid: gi for gi, vid in leader.items()}

    new_names: list[str] = []
    remap: dict[int, int] = {}
    for vid in range(g.n_vertices):
        if vid in leader_ids:
            remap[vid] = len(new_names)
            new_names.append(plan.groups[leader_ids[vid]].name)
        elif vid in assigned:
            continue
        else:
            remap[vid] = len(new_names)
            new_names.append(g.names[vid])
    for vid, gi in assigned.items():
        remap[vid] = remap[leader[gi]]

    new_edges: list[LabeledEdge] = []
    seen: dict[tuple[int, int], LabeledEdge] = {}
    for e in g.edges:
        nu, nv = remap[e.u], remap[e.v]
        if nu == nv:
            raise LoopCreated(
                f"merging adjacent vertices {g.names[e.u]!r} and {g.names[e.v]!r}"
            )
        key = (min(nu, nv), max(nu, nv))
        if key in seen:
            other = seen[key]
            raise ParallelEdgeCreated(
                f"edges labeled {other.label} and {e.label} would join "
                f"{new_names[key[0]]!r} and {new_names[key[1]]!r} twice"
            )
        ne = LabeledEdge(*key, e.label)
        seen[key] = ne
        new_edges.append(ne)
    return LabeledGraph(tuple(new_names), tuple(new_edges))


def split_vertex(
    g: LabeledGraph,
    v: str,
    first: set[str] | frozenset[str],
    second: set[str] | frozenset[str],
    name_first: str,
    name_second: str,
) -> LabeledGraph:
    """Split v into two vertices; edges to `first` neighbors follow the first.

    The two blocks must partition the neighbor set of v (simple graph, so
    incident edges correspond to neighbors).  Empty blocks are allowed and
    produce an isolated vertex.
    """
    vid = g.id_of(v)
    nbrs = {g.names[w] for w in g.adjacency[vid]}
    first = set(first)
    second = set(second)
    if first & second:
        raise NotAPartition(f"blocks for {v!r} overlap: {sorted(first & second)}")
    if first | second != nbrs:
        raise NotAPartition(
            f"blocks for {v!r} do not cover its neighbors exactly "
            f"(got {sorted(first | second)}, need {sorted(nbrs)})"
        )
    if name_first == name_second:
        raise DuplicateName(f"split names for {v!r} are equal")
    for nm in (name_first, name_second):
        if nm in g._id_of and nm != v:
            raise DuplicateName(f"split name {nm!r} already in use")

    names = list(g.names)
    names[vid] = name_first
    names.append(name_second)
    second_id = len(names) - 1
    first_ids = {g.id_of(nm) for nm in first}
    new_edges = []
    for e in g.edges:
        if vid not in (e.u, e.v):
            new_edges.append(e)
            continue
        other = e.v if e.u == vid else e.u
        mine = vid if other in first_ids else second_id
        new_edges.append(LabeledEdge(min(mine, other), max(mine, other), e.label))
    return LabeledGraph(tuple(names), tuple(new_edges))


def disjoint_union(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Concatenate vertex and edge sets; names are namespaced per operand."""
    names = tuple(f"1:{nm}" for nm in g1.names) + tuple(f"2:{nm}" for nm in g2.names)
    off = g1.n_vertices
    edges = g1.edges + tuple(
        LabeledEdge(e.u + off, e.v + off, e.label) for e in g2.edges
    )
    return LabeledGraph(names, edges)


def degrees(g: LabeledGraph) -> dict[str, int]:
    return g.degrees()


def is_bipartite(g: LabeledGraph) -> Bipartition | None:
    side = [-1] * g.n_vertices
    parts: list[tuple[int, int]] = []
    for start in range(g.n_vertices):
        if side[start] != -1:
            continue
        side[start] = 0
        count = [1, 0]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    count[side[w]] += 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
        parts.append((count[0], count[1]))
    return Bipartition(tuple(side), tuple(parts))


def chromatic_number_small(g: LabeledGraph, max_vertices: int = 20) -> int:
    """Exact chromatic number by backtracking; refuses graphs above the budget."""
    n = g.n_vertices
    if n > max_vertices:
        raise GraphTooLarge(f"{n} vertices exceeds the exact-coloring budget {max_vertices}")
    if n == 0:
        return 0
    if g.size == 0:
        return 1
    if is_bipartite(g) is not None:
        return 2

    order = sorted(range(n), key=lambda v: -len(g.adjacency[v]))
    adj = g.adjacency

    def colorable(c: int) -> bool:
        colors = [0] * n  # 0 = unassigned

        def place(idx: int) -> bool:
            if idx == n:
                return True
            v = order[idx]
            used_here = {colors[w] for w in adj[v] if colors[w]}
            # first-use symmetry break: never skip past the lowest fresh color
            max_new = min(c, max((colors[order[i]] for i in range(idx)), default=0) + 1)
            for col in range(1, max_new + 1):
                if col in used_here:
                    continue
                colors[v] = col
                if place(idx + 1):
                    return True
                colors[v] = 0
            return False

        return place(0)

    for c in range(3, n + 1):
        if colorable(c):
            return c
    return n

"""Finite simple graphs, 3-connectivity, fixed subgraphs, circle embeddability."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .perms import Edge, Permutation, make_edge


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1: no loops, no multi-edges."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("bad_vertex_count", "graph needs at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise DomainError("invalid_edge", f"edge ({u}, {v}) invalid for n={self.n}")

    @staticmethod
    def of(n: int, edges) -> "Graph":
        return Graph(n, frozenset(make_edge(u, v) for u, v in edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, e: Edge) -> bool:
        return make_edge(*e) in self.edges


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("bad_vertex_count", "complete graph needs at least one vertex")
    return Graph(n, frozenset((u, v) for u, v in combinations(range(n), 2)))


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise DomainError("invalid_edge", f"edge ({u}, {v}) leaves the vertex subset")


def _connected(vertices: set[int], edges) -> bool:
    if not vertices:
        return True
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].append(v)
            adj[v].append(u)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vertices


def is_three_connected(g: Graph) -> bool:
    """Exhaustive removal test: no set of <3 vertices disconnects or trivializes."""
    if g.n < 4:
        return False
    all_vertices = set(range(g.n))
    if not _connected(all_vertices, g.edges):
        return False
    for removed in combinations(range(g.n), 1):
        if not _connected(all_vertices - set(removed), g.edges):
            return False
    for removed in combinations(range(g.n), 2):
        if not _connected(all_vertices - set(removed), g.edges):
            return False
    return True


def fixed_subgraph(g: Graph, p: Permutation) -> Subgraph:
    """Vertices fixed by p, with the edges of g joining two fixed vertices."""
    if p.degree != g.n:
        raise DomainError("degree_mismatch", f"permutation degree {p.degree} != vertex count {g.n}")
    fixed = frozenset(p.fixed_points())
    return Subgraph(fixed, frozenset(e for e in g.edges if e[0] in fixed and e[1] in fixed))


def embeds_in_circle(s: Subgraph) -> bool:
    """True iff s is a disjoint union of simple paths and points, or one full cycle.

    A compact proper subset of the circle is a union of arcs and points; an
    embedded cycle is surjective and leaves room for nothing else.
    """
    degree: dict[int, int] = {v: 0 for v in s.vertices}
    for u, v in s.edges:
        degree[u] += 1
        degree[v] += 1
    if any(d > 2 for d in degree.values()):
        return False
    # Components, with edge/vertex counts: path iff |E| = |V|-1, cycle iff |E| = |V|.
    adj: dict[int, list[int]] = {v: [] for v in s.vertices}
    for u, v in s.edges:
        adj[u].append(v)
        adj[v].append(u)
    unvisited = set(s.vertices)
    cycle_components = 0
    component_count = 0
    while unvisited:
        start = unvisited.pop()
        comp = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w in comp:
                    continue
                comp.add(w)
                unvisited.discard(w)
                stack.append(w)
        component_count += 1
        edge_count = sum(1 for e in s.edges if e[0] in comp)
        if edge_count == len(comp):
            cycle_components += 1
    if cycle_components == 0:
        return True
    return cycle_components == 1 and component_count == 1

"""Finite simple graphs with the inductive dimension, Euler characteristic
and the first-order curvature K1 = 6 - |S1| (interior) / 3 - |S1| (boundary).

Sphere sizes ``|S_r|`` are always edge counts of the sphere graph.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from importlib import resources
from itertools import combinations
from typing import Hashable, Iterable, Optional

__all__ = [
    "Graph",
    "PointType",
    "NotTwoDimensionalPoint",
    "BadBoundary",
    "BoundaryNotCycles",
    "sphere_in_graph",
    "point_dimension",
    "graph_dimension",
    "faces",
    "euler_characteristic",
    "is_cycle",
    "classify_point_generic",
    "k1_curvature",
    "k1_total",
    "boundary_cycles",
    "cone_boundary_cycles",
    "load_fixture",
    "parse_graph",
]

Vertex = Hashable
# ``None`` stands for an undefined dimension
Dimension = Optional[int]


class Graph:
    """Undirected simple graph on hashable vertex ids."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable = ()):
        adj: dict = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u!r}, {v!r}) references a missing vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}

    @classmethod
    def _from_adj(cls, adj):
        g = cls.__new__(cls)
        g._adj = adj
        return g

    @property
    def vertices(self) -> frozenset:
        return frozenset(self._adj)

    @property
    def edges(self) -> frozenset:
        return frozenset(frozenset((u, v)) for u, nb in self._adj.items() for v in nb)

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return u in self._adj and v in self._adj[u]

    def number_of_edges(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def subgraph(self, vertices: Iterable[Vertex]) -> "Graph":
        keep = set(vertices) & self._adj.keys()
        return Graph._from_adj({v: self._adj[v] & keep for v in keep})

    def components(self) -> list[frozenset]:
        seen: set = set()
        out = []
        for s in self._adj:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def distances_from(self, source) -> dict:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self):
        return iter(self._adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(v={len(self)}, e={self.number_of_edges()})"


class PointType(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    NEITHER = "neither"


class NotTwoDimensionalPoint(ValueError):
    pass


class BadBoundary(ValueError):
    pass


class BoundaryNotCycles(ValueError):
    pass


def sphere_in_graph(G: Graph, p, r: int) -> Graph:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if r == 1:
        return G.subgraph(G.neighbors(p))
    dist = G.distances_from(p)
    return G.subgraph(q for q, d in dist.items() if d == r)


def point_dimension(G: Graph, p) -> Dimension:
    d = graph_dimension(sphere_in_graph(G, p, 1))
    return None if d is None else d + 1


def graph_dimension(G: Graph) -> Dimension:
    if len(G) == 0:
        return -1
    dims = set()
    for p in G:
        d = point_dimension(G, p)
        if d is None:
            return None
        dims.add(d)
        if len(dims) > 1:
            return None
    return dims.pop()


def faces(G: Graph) -> set[frozenset]:
    out = set()
    for u in G:
        for v, w in combinations(G.neighbors(u), 2):
            if G.has_edge(v, w):
                out.add(frozenset((u, v, w)))
    return out


def euler_characteristic(G: Graph) -> int:
    return len(G) - G.number_of_edges() + len(faces(G))


def is_cycle(G: Graph) -> bool:
    return len(G) >= 3 and all(G.degree(v) == 2 for v in G) and G.is_connected()


def classify_point_generic(G: Graph, p) -> PointType:
    s1 = sphere_in_graph(G, p, 1)
    if is_cycle(s1):
        return PointType.INTERIOR
    if graph_dimension(s1) == 1:
        return PointType.BOUNDARY
    return PointType.NEITHER


def k1_curvature(G: Graph, p) -> int:
    kind = classify_point_generic(G, p)
    s1 = sphere_in_graph(G, p, 1).number_of_edges()
    if kind is PointType.INTERIOR:
        return 6 - s1
    if kind is PointType.BOUNDARY:
        return 3 - s1
    raise NotTwoDimensionalPoint(f"{p!r}: unit sphere is neither a cycle nor one-dimensional")


def _boundary_points(G: Graph) -> list:
    return [p for p in G if classify_point_generic(G, p) is PointType.BOUNDARY]


def k1_total(G: Graph) -> int:
    total = sum(k1_curvature(G, p) for p in G)
    bd = _boundary_points(G)
    if bd and graph_dimension(G.subgraph(bd)) != 1:
        raise BadBoundary("boundary is nonempty and not one-dimensional")
    return total


def boundary_cycles(G: Graph) -> list[list]:
    """Boundary points grouped into simple cycles, each listed in walk order."""
    bd = G.subgraph(_boundary_points(G))
    cycles = []
    for comp in sorted(bd.components(), key=lambda c: sorted(map(repr, c))):
        sub = bd.subgraph(comp)
        if not is_cycle(sub):
            raise BoundaryNotCycles(f"boundary component of size {len(comp)} is not a simple cycle")
        start = min(comp, key=repr)
        walk = [start]
        prev, cur = None, start
        while True:
            nxt = min((w for w in sub.neighbors(cur) if w != prev), key=repr)
            if nxt == start:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        cycles.append(walk)
    return cycles


def cone_boundary_cycles(G: Graph) -> Graph:
    """Close each boundary cycle with a new apex vertex ``("apex", i)``."""
    cycles = boundary_cycles(G)
    verts = list(G)
    edges = [tuple(e) for e in G.edges]
    for i, cyc in enumerate(cycles):
        apex = ("apex", i)
        verts.append(apex)
        edges.extend((apex, v) for v in cyc)
    return Graph(verts, edges)


def parse_graph(text: str) -> Graph:
    """Fixture format: ``v <id>`` declares a vertex, ``<id> <id>`` an edge;
    ``#`` starts a comment. Integer-looking ids become ints."""

    def tok(s):
        try:
            return int(s)
        except ValueError:
            return s

    verts, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] == "v" and len(line) == 2:
            verts.append(tok(line[1]))
        elif len(line) == 2:
            u, v = tok(line[0]), tok(line[1])
            verts += [u, v]
            edges.append((u, v))
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    return Graph(verts, edges)


def load_fixture(name: str) -> Graph:
    """Load a bundled graph such as ``"icosahedron"`` or ``"torus_6x6"``."""
    path = resources.files("umlauf") / "data" / "graphs" / f"{name}.graph"
    return parse_graph(path.read_text(encoding="utf-8"))

"""Lattice subgraphs as domains.

Covers interior/boundary classification, the five domain conditions,
smoothness (the complement of the interior is a domain too), the curvatures
K = 2|S1| - |S2| and K2 = 12 - |S2|, holes, and reconstruction of a domain
from its interior.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable

from umlauf import graph_core
from umlauf.graph_core import Graph
from umlauf.lattice import DIRECTIONS, PLANE, Background, Coord, ball_x, neighbors, x_distance

__all__ = [
    "LatticeSubgraph",
    "PointClass",
    "SphereSemantics",
    "DEFAULT_SEMANTICS",
    "DomainReport",
    "NotBoundaryPoint",
    "NotAHole",
    "induced_subgraph",
    "classify_point",
    "check_domain",
    "complement_domain_check",
    "complement_report",
    "curvature_K",
    "total_boundary_curvature",
    "curvature_table",
    "k2_curvature",
    "k2_total",
    "interior_set",
    "boundary_set",
    "reconstruct_from_interior",
    "find_holes",
    "hole_closure",
    "fill_hole",
    "is_simply_connected",
    "euler_characteristic",
]


class PointClass(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OTHER = "other"


class SphereSemantics(Enum):
    GEODESIC_IN_G = "g"
    X_DISTANCE = "x"


#: geodesic spheres in G; x-distance spheres break the 12 chi total on concave
#: boundaries (e.g. across a one-point hole), so they are opt-in
DEFAULT_SEMANTICS = SphereSemantics.GEODESIC_IN_G


class NotBoundaryPoint(ValueError):
    pass


class NotAHole(ValueError):
    pass


def _edge(p, q):
    return (p, q) if p < q else (q, p)


@dataclass(frozen=True)
class LatticeSubgraph:
    """Finite vertex set plus unit-distance edges inside a background.

    Build with ``LatticeSubgraph.build`` (canonicalises and validates) or
    ``induced_subgraph``.
    """

    background: Background
    vertices: frozenset
    edges: frozenset

    @classmethod
    def build(cls, bg: Background, vertices: Iterable, edges: Iterable | None = None):
        verts = frozenset(bg.canon(v) for v in vertices)
        if edges is None:
            return induced_subgraph(bg, verts)
        es = set()
        for a, b in edges:
            a, b = bg.canon(a), bg.canon(b)
            if a not in verts or b not in verts:
                raise ValueError(f"edge {a}-{b} references a missing vertex")
            if x_distance(bg, a, b) != 1:
                raise ValueError(f"edge {a}-{b} does not have unit length")
            es.add(_edge(a, b))
        return cls(bg, verts, frozenset(es))

    def __contains__(self, p) -> bool:
        return p in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def has_edge(self, p, q) -> bool:
        return _edge(p, q) in self.edges

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.vertices, self.edges)

    @cached_property
    def is_induced(self) -> bool:
        return all(
            q not in self.vertices or self.has_edge(p, q)
            for p in self.vertices
            for q in neighbors(self.background, p)
        )

    def sorted_vertices(self) -> list[Coord]:
        """Vertices in output order, (l, k) lexicographic."""
        return sorted(self.vertices, key=lambda p: (p[1], p[0]))

    def __repr__(self) -> str:
        return f"LatticeSubgraph({self.background}, v={len(self.vertices)}, e={len(self.edges)})"


class _Induced:
    """Induced subgraph of X on the points satisfying a predicate; may be infinite."""

    def __init__(self, bg: Background, member: Callable[[Coord], bool]):
        self.background = bg
        self._member = member

    def __contains__(self, p) -> bool:
        return self._member(p)

    def has_edge(self, p, q) -> bool:
        return self._member(p) and self._member(q) and x_distance(self.background, p, q) == 1


def induced_subgraph(bg: Background, V: Iterable) -> LatticeSubgraph:
    verts = frozenset(bg.canon(v) for v in V)
    edges = frozenset(
        _edge(p, q) for p in verts for q in neighbors(bg, p) if q in verts and p < q
    )
    return LatticeSubgraph(bg, verts, edges)


class _Local:
    """Memoised local queries on a (possibly infinite) lattice subgraph view."""

    def __init__(self, view):
        self.view = view
        self.bg = view.background
        self._interior: dict = {}
        self._cls: dict = {}

    def g_neighbors(self, p) -> list:
        v = self.view
        return [q for q in neighbors(self.bg, p) if q in v and v.has_edge(p, q)]

    def s1(self, p) -> Graph:
        nb = self.g_neighbors(p)
        return Graph(nb, ((a, b) for a, b in combinations(nb, 2) if self.view.has_edge(a, b)))

    def is_interior(self, p) -> bool:
        hit = self._interior.get(p)
        if hit is None:
            v, bg = self.view, self.bg
            ring = [bg.canon((p[0] + d[0], p[1] + d[1])) for d in DIRECTIONS]
            hit = (
                p in v
                and all(q in v and v.has_edge(p, q) for q in ring)
                and all(v.has_edge(ring[i], ring[(i + 1) % 6]) for i in range(6))
            )
            self._interior[p] = hit
        return hit

    def classify(self, p) -> PointClass:
        hit = self._cls.get(p)
        if hit is None:
            if self.is_interior(p):
                hit = PointClass.INTERIOR
            elif any(self.is_interior(q) for q in self.g_neighbors(p)):
                hit = PointClass.BOUNDARY
            else:
                hit = PointClass.OTHER
            self._cls[p] = hit
        return hit

    def dimension(self, p):
        d = graph_core.graph_dimension(self.s1(p))
        return None if d is None else d + 1

    def boundary_dimension(self, p):
        """Dimension of p within the subgraph induced on boundary points."""
        nb = [q for q in self.g_neighbors(p) if self.classify(q) is PointClass.BOUNDARY]
        s1 = Graph(nb, ((a, b) for a, b in combinations(nb, 2) if self.view.has_edge(a, b)))
        d = graph_core.graph_dimension(s1)
        return None if d is None else d + 1


@dataclass
class DomainReport:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    cond_v: bool
    failures: dict = field(default_factory=dict)
    interior: frozenset = frozenset()
    boundary: frozenset = frozenset()
    is_smooth: bool = False

    @property
    def is_domain(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii and self.cond_iv and self.cond_v

    def as_dict(self) -> dict:
        def pts(xs):
            return [list(x) if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], int)
                    else [list(y) for y in x] for x in xs]

        return {
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "cond_iv": self.cond_iv,
            "cond_v": self.cond_v,
            "is_domain": self.is_domain,
            "is_smooth": self.is_smooth,
            "interior": len(self.interior),
            "boundary": len(self.boundary),
            "failures": {k: pts(v) for k, v in sorted(self.failures.items()) if v},
        }


def _evaluate(loc: _Local, points: Iterable[Coord]) -> DomainReport:
    view, bg = loc.view, loc.bg
    points = sorted(p for p in points if p in view)
    fail: dict = {"i": [], "ii": [], "iii": [], "iv": [], "v": []}
    interior, boundary = [], []
    for p in points:
        if loc.dimension(p) != 2:
            fail["i"].append(p)
        c = loc.classify(p)
        if c is PointClass.INTERIOR:
            interior.append(p)
        elif c is PointClass.BOUNDARY:
            boundary.append(p)
        else:
            fail["ii"].append(p)
        for q in neighbors(bg, p):
            if p < q and q in view and not view.has_edge(p, q):
                fail["iv"].append((p, q))
    for b in boundary:
        # an empty boundary passes (iii): a whole torus has none
        if loc.boundary_dimension(b) != 1:
            fail["iii"].append(b)
        inner = sorted(q for q in neighbors(bg, b) if q in view and loc.is_interior(q))
        for p, q in combinations(inner, 2):
            if x_distance(bg, p, q) == 1:
                continue
            common = neighbors(bg, p) & neighbors(bg, q)
            if not any(r in view and loc.is_interior(r) for r in common):
                fail["v"].append((p, q, b))
    fail["v"] = sorted(set(fail["v"]))
    return DomainReport(
        cond_i=not fail["i"],
        cond_ii=not fail["ii"],
        cond_iii=not fail["iii"],
        cond_iv=not fail["iv"],
        cond_v=not fail["v"],
        failures=fail,
        interior=frozenset(interior),
        boundary=frozenset(boundary),
    )


def _complement_view(G: LatticeSubgraph):
    H = interior_set(G)
    bg = G.background
    view = _Induced(bg, lambda p: p not in H)
    if bg.is_torus:
        window = [p for p in bg.points() if p not in H]
    else:
        window = set()
        for v in G.vertices:
            window |= ball_x(bg, v, 2)
        window -= H
    return view, window


def complement_report(G: LatticeSubgraph) -> DomainReport:
    """Domain conditions for X minus int(G), evaluated near G on the plane."""
    view, window = _complement_view(G)
    return _evaluate(_Local(view), window)


def complement_domain_check(G: LatticeSubgraph) -> bool:
    return complement_report(G).is_domain


def check_domain(G: LatticeSubgraph) -> DomainReport:
    rep = _evaluate(_Local(G), G.vertices)
    if rep.is_domain:
        rep.is_smooth = complement_domain_check(G)
    return rep


def classify_point(G: LatticeSubgraph, p) -> PointClass:
    if p not in G:
        raise KeyError(p)
    return _Local(G).classify(p)


def interior_set(G: LatticeSubgraph) -> frozenset:
    loc = _Local(G)
    return frozenset(p for p in G.vertices if loc.is_interior(p))


def boundary_set(G: LatticeSubgraph) -> frozenset:
    loc = _Local(G)
    return frozenset(p for p in G.vertices if loc.classify(p) is PointClass.BOUNDARY)


def reconstruct_from_interior(bg: Background, H: Iterable) -> LatticeSubgraph:
    pts: set = set()
    for q in H:
        pts |= ball_x(bg, q, 1)
    return induced_subgraph(bg, pts)


def euler_characteristic(G: LatticeSubgraph) -> int:
    return graph_core.euler_characteristic(G.graph)


def is_simply_connected(G: LatticeSubgraph) -> bool:
    return len(G) > 0 and G.graph.is_connected() and euler_characteristic(G) == 1


def _sphere_sizes(G: LatticeSubgraph, p, sem: SphereSemantics) -> tuple[int, int]:
    """Edge counts of S1(p) and S2(p) within G."""
    loc = _Local(G)
    s1 = loc.g_neighbors(p)
    e1 = sum(1 for a, b in combinations(s1, 2) if G.has_edge(a, b))
    bg = G.background
    if sem is SphereSemantics.GEODESIC_IN_G:
        near = set(s1) | {p}
        s2 = {r for q in s1 for r in loc.g_neighbors(q)} - near
    else:
        s2 = {q for q in ball_x(bg, p, 2) if q in G and x_distance(bg, p, q) == 2}
    e2 = sum(1 for q in s2 for r in loc.g_neighbors(q) if r in s2) // 2
    return e1, e2


def curvature_K(G: LatticeSubgraph, p, sem: SphereSemantics = DEFAULT_SEMANTICS) -> int:
    """K(p) = 2|S1(p)| - |S2(p)| at a boundary (or interior) point of G."""
    if p not in G or classify_point(G, p) is PointClass.OTHER:
        raise NotBoundaryPoint(f"{tuple(p)} is neither a boundary nor an interior point")
    e1, e2 = _sphere_sizes(G, p, sem)
    return 2 * e1 - e2


def k2_curvature(G: LatticeSubgraph, p, sem: SphereSemantics = DEFAULT_SEMANTICS) -> int:
    if p not in G or classify_point(G, p) is PointClass.OTHER:
        raise NotBoundaryPoint(f"{tuple(p)} is neither a boundary nor an interior point")
    return 12 - _sphere_sizes(G, p, sem)[1]


def total_boundary_curvature(G: LatticeSubgraph, sem: SphereSemantics = DEFAULT_SEMANTICS) -> int:
    return sum(curvature_K(G, p, sem) for p in boundary_set(G))


def k2_total(G: LatticeSubgraph, sem: SphereSemantics = DEFAULT_SEMANTICS) -> int:
    return sum(k2_curvature(G, p, sem) for p in boundary_set(G))


def curvature_table(G: LatticeSubgraph, kind: str = "k",
                    sem: SphereSemantics = DEFAULT_SEMANTICS) -> list[tuple[Coord, int]]:
    """Per-point curvature rows in (l, k) order.

    ``k`` and ``k2`` list boundary points; ``k1`` lists every point, since the
    combinatorial theorem sums over the whole graph.
    """
    if kind == "k1":
        g = G.graph
        return [(p, graph_core.k1_curvature(g, p)) for p in G.sorted_vertices()]
    fn = {"k": curvature_K, "k2": k2_curvature}[kind]
    bd = boundary_set(G)
    return [(p, fn(G, p, sem)) for p in G.sorted_vertices() if p in bd]


def find_holes(G: LatticeSubgraph) -> list[frozenset]:
    """Bounded components of the complement X minus V(G) (plane only)."""
    if G.background.is_torus:
        raise ValueError("holes are only defined on the plane background")
    if not G.vertices:
        return []
    ks = [p[0] for p in G.vertices]
    ls = [p[1] for p in G.vertices]
    k0, k1, l0, l1 = min(ks) - 2, max(ks) + 2, min(ls) - 2, max(ls) + 2
    free = {Coord(k, l) for k in range(k0, k1 + 1) for l in range(l0, l1 + 1)} - G.vertices
    outside = {p for p in free if p[0] in (k0, k1) or p[1] in (l0, l1)}
    stack = list(outside)
    while stack:
        p = stack.pop()
        for q in neighbors(PLANE, p):
            if q in free and q not in outside:
                outside.add(q)
                stack.append(q)
    comps = induced_subgraph(PLANE, free - outside).graph.components()
    return sorted(comps, key=sorted)


def hole_closure(G: LatticeSubgraph, hole: Iterable) -> LatticeSubgraph:
    """The hole together with its lattice neighbours in G."""
    hole = frozenset(hole)
    rim = {q for p in hole for q in neighbors(G.background, p) if q in G}
    return induced_subgraph(G.background, hole | rim)


def fill_hole(G: LatticeSubgraph, hole: Iterable) -> LatticeSubgraph:
    hole = frozenset(hole)
    if hole & G.vertices:
        raise NotAHole("hole overlaps the domain")
    W = hole_closure(G, hole)
    rep = check_domain(W)
    if not (rep.is_domain and rep.is_smooth and is_simply_connected(W)):
        raise NotAHole("closure of the component is not a simply connected smooth domain")
    return induced_subgraph(G.background, G.vertices | hole)

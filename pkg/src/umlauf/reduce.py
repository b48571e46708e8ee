"""Pruning and etching: shrink a smooth simply connected domain down to the
7-point disc one interior point at a time, auditing curvature and Euler
characteristic along the way."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from umlauf import graph_core
from umlauf.domain import (
    LatticeSubgraph,
    DEFAULT_SEMANTICS,
    check_domain,
    euler_characteristic,
    interior_set,
    is_simply_connected,
    reconstruct_from_interior,
    total_boundary_curvature,
)
from umlauf.graph_core import Graph

__all__ = [
    "InteriorDecomposition",
    "StepKind",
    "Outcome",
    "TraceStep",
    "ReductionTrace",
    "InputNotSmooth",
    "InputNotSimplyConnected",
    "decompose_interior",
    "try_remove",
    "prune_step",
    "etch_step",
    "reduce_to_disc",
]


class InputNotSmooth(ValueError):
    pass


class InputNotSimplyConnected(ValueError):
    pass


class StepKind(Enum):
    PRUNE = "prune"
    ETCH = "etch"


class Outcome(Enum):
    REDUCED_TO_DISC = "reduced"
    STUCK = "stuck"


@dataclass
class InteriorDecomposition:
    h1: frozenset
    h2: frozenset
    undefined: frozenset
    branches: list
    bridges: list
    ridges: list
    ridge_bridge_graph: Graph

    def end_ridges(self) -> list[int]:
        """Indices of ridges with at most one attached bridge."""
        return [i for i in range(len(self.ridges)) if self.bridge_count(i) <= 1]

    def bridge_count(self, ridge: int) -> int:
        return sum(1 for touched in self._touches if ridge in touched)

    _touches: list = field(default_factory=list, repr=False)


def decompose_interior(G: LatticeSubgraph) -> InteriorDecomposition:
    H = interior_set(G)
    hg = G.graph.subgraph(H)
    dims = {p: graph_core.point_dimension(hg, p) for p in H}
    h1 = frozenset(p for p, d in dims.items() if d == 1)
    h2 = frozenset(p for p, d in dims.items() if d == 2)
    undefined = frozenset(p for p, d in dims.items() if d is None)

    def comps(pts):
        return sorted((frozenset(c) for c in hg.subgraph(pts).components()), key=sorted)

    branches, bridges = [], []
    for c in comps(h1):
        if any(hg.degree(p) == 1 for p in c):
            branches.append(c)
        else:
            bridges.append(c)
    ridges = comps(h2)
    owner = {p: {i} for i, r in enumerate(ridges) for p in r}
    # a bridge usually meets a ridge through a point of mixed dimension
    for p in undefined:
        owner[p] = {i for q in hg.neighbors(p) if q in h2 for i in owner[q]}
    touches = []
    edges = set()
    for b in bridges:
        t = sorted({i for p in b for q in hg.neighbors(p) if q in owner for i in owner[q]})
        touches.append(frozenset(t))
        edges.update((t[i], t[j]) for i in range(len(t)) for j in range(i + 1, len(t)))
    rbg = Graph(range(len(ridges)), edges)
    return InteriorDecomposition(h1, h2, undefined, branches, bridges, ridges, rbg, touches)


@dataclass(frozen=True)
class TraceStep:
    index: int
    kind: StepKind
    removed: tuple
    curvature: int
    chi: int
    interior: int

    def line(self) -> str:
        k, l = self.removed
        return (
            f"step={self.index} kind={self.kind.value} removed={k},{l} "
            f"K={self.curvature} chi={self.chi} interior={self.interior}"
        )


@dataclass
class ReductionTrace:
    start: LatticeSubgraph
    steps: list = field(default_factory=list)
    outcome: Outcome = Outcome.STUCK
    final: Optional[LatticeSubgraph] = None

    def lines(self) -> list[str]:
        return [s.line() for s in self.steps]

    def __str__(self) -> str:
        return "\n".join(self.lines() + [f"outcome={self.outcome.value}"])


def try_remove(G: LatticeSubgraph, p, sem=DEFAULT_SEMANTICS) -> Optional[LatticeSubgraph]:
    """Remove interior point p; keep the result only if it is still a smooth
    simply connected domain with the same curvature and Euler characteristic."""
    H = interior_set(G)
    rest = H - {p}
    G2 = reconstruct_from_interior(G.background, rest)
    if interior_set(G2) != rest:
        return None
    rep = check_domain(G2)
    if not (rep.is_domain and rep.is_smooth and is_simply_connected(G2)):
        return None
    if euler_characteristic(G2) != euler_characteristic(G):
        return None
    if total_boundary_curvature(G2, sem) != total_boundary_curvature(G, sem):
        return None
    return G2


def prune_step(G: LatticeSubgraph, sem=DEFAULT_SEMANTICS):
    dec = decompose_interior(G)
    hg = G.graph.subgraph(interior_set(G))
    for branch in dec.branches:
        for p in sorted(q for q in branch if hg.degree(q) == 1):
            G2 = try_remove(G, p, sem)
            if G2 is not None:
                return G2, p
    return None


def etch_step(G: LatticeSubgraph, sem=DEFAULT_SEMANTICS):
    dec = decompose_interior(G)
    for i in dec.end_ridges():
        for p in sorted(dec.ridges[i]):
            G2 = try_remove(G, p, sem)
            if G2 is not None:
                return G2, p
    return None


def reduce_to_disc(G: LatticeSubgraph, sem=DEFAULT_SEMANTICS, check: bool = True) -> ReductionTrace:
    if check:
        rep = check_domain(G)
        if not (rep.is_domain and rep.is_smooth):
            raise InputNotSmooth("input is not a smooth domain")
        if not is_simply_connected(G):
            raise InputNotSimplyConnected("input is not simply connected")
    trace = ReductionTrace(start=G)
    cur = G
    size = len(interior_set(cur))
    while size > 1:
        kind = StepKind.PRUNE
        hit = prune_step(cur, sem)
        if hit is None:
            kind = StepKind.ETCH
            hit = etch_step(cur, sem)
        if hit is None:
            trace.final = cur
            return trace
        cur, removed = hit
        size -= 1
        trace.steps.append(TraceStep(
            index=len(trace.steps) + 1,
            kind=kind,
            removed=tuple(removed),
            curvature=total_boundary_curvature(cur, sem),
            chi=euler_characteristic(cur),
            interior=size,
        ))
    trace.outcome = Outcome.REDUCED_TO_DISC
    trace.final = cur
    return trace

"""Closed curves in the interior of a domain and a brute-force
contractibility test, used to cross-check the Euler-characteristic test
for simple connectivity on small domains.

A closed curve is a tuple ``(x_0, ..., x_n)`` with ``x_0 == x_n``.
Consecutive points may coincide, so a curve can shrink onto a single point.
"""

from __future__ import annotations

import heapq
from enum import Enum

from umlauf.domain import LatticeSubgraph, interior_set
from umlauf.lattice import neighbors, x_distance

__all__ = [
    "Contractible",
    "is_closed",
    "is_simple",
    "is_valid_curve",
    "elementary_deformations",
    "is_contractible",
    "simple_closed_curves",
]


class Contractible(Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget_exceeded"


def is_closed(c) -> bool:
    return len(c) >= 1 and c[0] == c[-1]


def is_simple(c) -> bool:
    return is_closed(c) and len(set(c[:-1])) == len(c) - 1


def is_valid_curve(G: LatticeSubgraph, c, H=None) -> bool:
    H = interior_set(G) if H is None else H
    bg = G.background
    return all(p in H for p in c) and all(
        x_distance(bg, a, b) <= 1 for a, b in zip(c, c[1:])
    )


def _moves(bg, H, pts):
    n = len(pts)
    for i in range(n):
        prev, nxt = pts[i - 1], pts[(i + 1) % n]
        for q in neighbors(bg, pts[i]):
            if q in H and x_distance(bg, prev, q) <= 1 and x_distance(bg, q, nxt) <= 1:
                yield pts[:i] + (q,) + pts[i + 1:]


def elementary_deformations(G: LatticeSubgraph, c, H=None) -> set[tuple]:
    """Closed curves obtained by moving one point of ``c`` to an adjacent
    interior point while consecutive points stay within distance 1."""
    if not is_closed(c):
        raise ValueError("curve is not closed")
    H = interior_set(G) if H is None else H
    pts = tuple(c[:-1]) or (c[0],)
    return {p + (p[0],) for p in _moves(G.background, H, pts)}


def _rotation_key(pts: tuple) -> tuple:
    return min(pts[i:] + pts[:i] for i in range(len(pts)))


def _spread(bg, pts) -> int:
    return len(set(pts)) + sum(x_distance(bg, pts[0], p) for p in pts)


def is_contractible(G: LatticeSubgraph, c, budget: int = 200_000, H=None) -> Contractible:
    """Exhaustive search over curves with the same number of points.

    The frontier is expanded most-shrunken-first; this only affects how soon
    a constant curve is found, never the verdict.
    """
    if not is_closed(c):
        raise ValueError("curve is not closed")
    H = interior_set(G) if H is None else H
    if not is_valid_curve(G, c, H):
        raise ValueError("curve must run through interior points with steps of length <= 1")
    bg = G.background
    start = _rotation_key(tuple(c[:-1]) or (c[0],))
    seen = {start}
    heap = [(_spread(bg, start), start)]
    while heap:
        _, pts = heapq.heappop(heap)
        if len(set(pts)) == 1:
            return Contractible.YES
        for nxt in _moves(bg, H, pts):
            key = _rotation_key(nxt)
            if key not in seen:
                if len(seen) >= budget:
                    return Contractible.BUDGET_EXCEEDED
                seen.add(key)
                heapq.heappush(heap, (_spread(bg, key), key))
    return Contractible.NO


def simple_closed_curves(G: LatticeSubgraph, max_length: int, H=None) -> list[tuple]:
    """Simple closed curves of length 2..max_length through interior points,
    one per cycle (rotations and reversals dropped)."""
    H = interior_set(G) if H is None else H
    bg = G.background
    nbr = {p: sorted(q for q in neighbors(bg, p) if q in H) for p in H}
    out = []
    for s in sorted(H):
        stack = [(s, (s,))]
        while stack:
            p, path = stack.pop()
            for q in nbr[p]:
                if q == s and len(path) >= 2:
                    # length-2 back-and-forth, or a cycle listed once by orientation
                    if len(path) == 2 or path[1] < path[-1]:
                        out.append(path + (s,))
                elif q > s and q not in path and len(path) < max_length:
                    stack.append((q, path + (q,)))
    return sorted(out, key=lambda c: (len(c), c))

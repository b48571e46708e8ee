"""Triangular lattice background: axial coordinates, metric, balls and spheres.

A point ``Coord(k, l)`` sits at ``k*(1, 0) + l*(1/2, sqrt(3)/2)`` in the plane.
The background is either the infinite plane or a twisted torus, the quotient
of the lattice by the rank-2 sublattice spanned by ``(m, 0)`` and ``(t, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor
from typing import Iterable, NamedTuple

from umlauf.graph_core import Graph

__all__ = [
    "Coord",
    "Background",
    "PLANE",
    "TorusTooSmall",
    "DIRECTIONS",
    "MIN_TORUS_SHORTEST",
    "neighbors",
    "x_distance",
    "ball_x",
    "sphere_x",
    "validate_torus",
    "hex_norm",
    "SYMMETRIES",
]


class Coord(NamedTuple):
    k: int
    l: int  # noqa: E741

    def __add__(self, other):  # type: ignore[override]
        return Coord(self.k + other[0], self.l + other[1])

    def __sub__(self, other):
        return Coord(self.k - other[0], self.l - other[1])


# counter-clockwise, starting east; consecutive directions are themselves adjacent
DIRECTIONS = (
    Coord(1, 0),
    Coord(0, 1),
    Coord(-1, 1),
    Coord(-1, 0),
    Coord(0, -1),
    Coord(1, -1),
)

# A translate of length <= 5 can join two points of S2(p) (2 + 2 + 1), so S2
# is only guaranteed to be a 12-cycle from 6 on.
MIN_TORUS_SHORTEST = 6


def hex_norm(dk: int, dl: int) -> int:
    return (abs(dk) + abs(dl) + abs(dk + dl)) // 2


def _rot60(c):
    return (-c[1], c[0] + c[1])


def _reflect(c):
    return (c[1], c[0])


def _build_symmetries():
    ops = []
    for flip in (False, True):
        for turns in range(6):
            def op(c, flip=flip, turns=turns):
                if flip:
                    c = _reflect(c)
                for _ in range(turns):
                    c = _rot60(c)
                return Coord(*c)
            ops.append(op)
    return tuple(ops)


#: the 12 point symmetries of the lattice fixing the origin
SYMMETRIES = _build_symmetries()


class TorusTooSmall(ValueError):
    def __init__(self, shortest: int):
        super().__init__(
            f"quotient lattice has a vector of length {shortest} "
            f"(need >= {MIN_TORUS_SHORTEST})"
        )
        self.shortest = shortest


@dataclass(frozen=True)
class Background:
    """Ambient space X. Use ``PLANE`` or ``validate_torus(m, n, t)``."""

    kind: str = "plane"
    m: int = 0
    n: int = 0
    t: int = 0

    @property
    def is_torus(self) -> bool:
        return self.kind == "torus"

    def canon(self, p) -> Coord:
        if not self.is_torus:
            return Coord(p[0], p[1])
        q, l = divmod(p[1], self.n)
        return Coord((p[0] - q * self.t) % self.m, l)

    def points(self) -> list[Coord]:
        """All points of a torus background in canonical form."""
        if not self.is_torus:
            raise ValueError("the plane has infinitely many points")
        return [Coord(k, l) for l in range(self.n) for k in range(self.m)]

    def header(self) -> str:
        return f"torus {self.m} {self.n} {self.t}" if self.is_torus else "plane"

    def __str__(self) -> str:
        return self.header()


PLANE = Background()


def _short_translates(bg: Background, dk: int, dl: int, bound: int):
    """Yield (norm, a, b) for translates a*(m,0) + b*(t,n) of (dk, dl) with
    norm <= bound, restricted per row b to the two lattice points bracketing
    the real minimiser (the norm is convex along each row)."""
    m, n, t = bg.m, bg.n, bg.t
    b_lo = -((bound + dl) // n)
    b_hi = (bound - dl) // n
    for b in range(b_lo, b_hi + 1):
        y = dl + b * n
        x0 = dk + b * t
        a0 = floor((-y / 2 - x0) / m)
        for a in (a0, a0 + 1):
            d = hex_norm(x0 + a * m, y)
            if d <= bound:
                yield d, a, b


def _torus_distance(bg: Background, dk: int, dl: int) -> int:
    dk, dl = bg.canon((dk, dl))
    best = hex_norm(dk, dl)
    for d, _, _ in _short_translates(bg, dk, dl, best):
        best = min(best, d)
    return best


def shortest_vector(m: int, n: int, t: int) -> int:
    """Length of the shortest nonzero vector of the lattice spanned by (m,0), (t,n)."""
    bg = Background("torus", m, n, t)
    bound = min(m, hex_norm(t, n))
    best = bound
    for d, a, b in _short_translates(bg, 0, 0, bound):
        if (a, b) != (0, 0):
            best = min(best, d)
    # row b = 0 only offers a = 0 near the minimiser; (m, 0) is already in bound
    return best


def validate_torus(m: int, n: int, t: int = 0) -> Background:
    if m < 1 or n < 1 or not 0 <= t < m:
        raise ValueError(f"need m >= 1, n >= 1, 0 <= t < m; got m={m} n={n} t={t}")
    s = shortest_vector(m, n, t)
    if s < MIN_TORUS_SHORTEST:
        raise TorusTooSmall(s)
    return Background("torus", m, n, t)


def neighbors(bg: Background, p) -> frozenset[Coord]:
    return frozenset(bg.canon((p[0] + d[0], p[1] + d[1])) for d in DIRECTIONS)


def x_distance(bg: Background, p, q) -> int:
    dk, dl = q[0] - p[0], q[1] - p[1]
    if bg.is_torus:
        return _torus_distance(bg, dk, dl)
    return hex_norm(dk, dl)


def _plane_offsets(r: int, exact: bool):
    for dk in range(-r, r + 1):
        for dl in range(max(-r, -r - dk), min(r, r - dk) + 1):
            if not exact or hex_norm(dk, dl) == r:
                yield dk, dl


def ball_x(bg: Background, p, r: int) -> frozenset[Coord]:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    pts = (bg.canon((p[0] + dk, p[1] + dl)) for dk, dl in _plane_offsets(r, False))
    if not bg.is_torus:
        return frozenset(pts)
    return frozenset(q for q in pts if x_distance(bg, p, q) <= r)


def _unit_pairs(bg: Background, pts: Iterable[Coord]):
    pts = set(pts)
    for a in pts:
        for b in neighbors(bg, a):
            if b in pts and a < b:
                yield a, b


def sphere_x(bg: Background, p, r: int) -> Graph:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    pts = {bg.canon((p[0] + dk, p[1] + dl)) for dk, dl in _plane_offsets(r, True)}
    if bg.is_torus:
        pts = {q for q in pts if x_distance(bg, p, q) == r}
    return Graph(pts, _unit_pairs(bg, pts))

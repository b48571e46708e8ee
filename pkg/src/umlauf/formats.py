"""Plain-text domain files.

::

    # comment
    plane                 (or: torus <m> <n> <t>)
    v <k> <l>             one line per vertex
    e <k1> <l1> <k2> <l2> optional; without any, edges are induced
    explicit              the e lines are the complete edge set, even if empty

"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from umlauf.domain import LatticeSubgraph, induced_subgraph
from umlauf.lattice import PLANE, Background, validate_torus, x_distance

__all__ = [
    "ParseError",
    "EdgeNotUnitDistance",
    "UnknownBackground",
    "parse_domain",
    "serialize_domain",
    "read_domain",
    "load_domain",
]


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class EdgeNotUnitDistance(ParseError):
    pass


class UnknownBackground(ParseError):
    pass


def _ints(lineno, parts, count):
    if len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers, got {len(parts)}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(lineno, f"non-integer coordinate in {' '.join(parts)!r}") from None


def _background(lineno, parts) -> Background:
    if parts == ["plane"]:
        return PLANE
    if parts and parts[0] == "torus":
        m, n, t = _ints(lineno, parts[1:], 3)
        try:
            return validate_torus(m, n, t)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    raise UnknownBackground(lineno, f"unknown background {' '.join(parts)!r}")


def parse_domain(text: str) -> LatticeSubgraph:
    bg = None
    verts: dict = {}
    edges: dict = {}
    seen_lines: set = set()
    explicit = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split("#", 1)[0].split()
        if not parts:
            continue
        if bg is None:
            bg = _background(lineno, parts)
            continue
        key = tuple(parts)
        if key in seen_lines:
            raise ParseError(lineno, f"duplicate line {raw.strip()!r}")
        seen_lines.add(key)
        tag, rest = parts[0], parts[1:]
        if tag == "v":
            p = bg.canon(_ints(lineno, rest, 2))
            if p in verts:
                raise ParseError(lineno, f"vertex {p[0]},{p[1]} already listed on line {verts[p]}")
            verts[p] = lineno
        elif tag == "explicit" and not rest:
            explicit = True
        elif tag == "e":
            k1, l1, k2, l2 = _ints(lineno, rest, 4)
            a, b = bg.canon((k1, l1)), bg.canon((k2, l2))
            edges[(min(a, b), max(a, b))] = lineno
        else:
            raise ParseError(lineno, f"unknown record {tag!r}")
    if bg is None:
        raise ParseError(1, "missing background header")
    if not edges and not explicit:
        return induced_subgraph(bg, verts)
    for (a, b), lineno in edges.items():
        if a not in verts or b not in verts:
            raise ParseError(lineno, f"edge {a[0]},{a[1]}-{b[0]},{b[1]} uses an unlisted vertex")
        if x_distance(bg, a, b) != 1:
            raise EdgeNotUnitDistance(lineno, f"edge {a[0]},{a[1]}-{b[0]},{b[1]} is not at distance 1")
    return LatticeSubgraph(bg, frozenset(verts), frozenset(edges))


def serialize_domain(G: LatticeSubgraph) -> str:
    lines = [G.background.header()]
    lines += [f"v {p[0]} {p[1]}" for p in G.sorted_vertices()]
    if not G.is_induced:
        lines.append("explicit")
        for a, b in sorted(G.edges, key=lambda e: (e[0][1], e[0][0], e[1][1], e[1][0])):
            lines.append(f"e {a[0]} {a[1]} {b[0]} {b[1]}")
    return "\n".join(lines) + "\n"


def read_domain(path) -> LatticeSubgraph:
    return parse_domain(Path(path).read_text(encoding="utf-8"))


def load_domain(name: str) -> LatticeSubgraph:
    """Load a bundled domain fixture such as ``"wheel"``."""
    path = resources.files("umlauf") / "data" / "domains" / f"{name}.dom"
    return parse_domain(path.read_text(encoding="utf-8"))

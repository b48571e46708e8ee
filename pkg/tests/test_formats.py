import pytest
from hypothesis import given, settings, strategies as st

from umlauf.domain import LatticeSubgraph, induced_subgraph
from umlauf.enumeration import EnumerationSpec, enumerate_smooth_domains
from umlauf.formats import (
    EdgeNotUnitDistance,
    ParseError,
    UnknownBackground,
    load_domain,
    parse_domain,
    read_domain,
    serialize_domain,
)
from umlauf.lattice import PLANE, validate_torus

WHEEL = "plane\nv 0 0\nv 1 0\nv 0 1\nv -1 1\nv -1 0\nv 0 -1\nv 1 -1\n"


def test_wheel_has_induced_edges():
    G = parse_domain(WHEEL)
    assert len(G) == 7 and len(G.edges) == 12 and G.is_induced


def test_empty_body_is_valid():
    G = parse_domain("# nothing here\nplane\n")
    assert len(G) == 0


def test_torus_header_canonicalises():
    G = parse_domain("torus 6 6 0\nv 7 -1\n")
    assert G.background == validate_torus(6, 6, 0)
    assert set(G.vertices) == {(1, 5)}


def test_explicit_edges_kept():
    G = parse_domain("plane\nv 0 0\nv 1 0\nv 0 1\ne 0 0 1 0\n")
    assert G.edges == {((0, 0), (1, 0))}
    assert not G.is_induced


@pytest.mark.parametrize("text,exc,line", [
    ("plane\nv 0 0\nv 2 0\ne 0 0 2 0\n", EdgeNotUnitDistance, 4),
    ("sphere\n", UnknownBackground, 1),
    ("plane\nv 0 x\n", ParseError, 2),
    ("plane\nv 0 0\nv 0 0\n", ParseError, 3),
    ("torus 6 6 0\nv 0 0\nv 6 0\n", ParseError, 3),
    ("plane\nq 1 2\n", ParseError, 2),
    ("plane\nv 0 0\ne 0 0 1 0\n", ParseError, 3),
    ("torus 3 3 0\n", ParseError, 1),
    ("", ParseError, 1),
])
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_domain(text)
    assert info.value.lineno == line
    assert f"line {line}" in str(info.value)


def test_round_trip_over_enumeration():
    for G in enumerate_smooth_domains(EnumerationSpec(5)):
        assert parse_domain(serialize_domain(G)) == G


@settings(max_examples=50, deadline=None)
@given(st.sets(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=15), st.randoms())
def test_round_trip_with_edge_subsets(pts, rnd):
    full = induced_subgraph(PLANE, pts)
    edges = frozenset(e for e in full.edges if rnd.random() < 0.7)
    G = LatticeSubgraph(PLANE, full.vertices, edges)
    text = serialize_domain(G)
    assert parse_domain(text) == G
    assert serialize_domain(parse_domain(text)) == text


def test_serialisation_order_is_row_major(dom):
    lines = serialize_domain(dom("wheel")).splitlines()
    assert lines[0] == "plane"
    rows = [tuple(map(int, ln.split()[1:])) for ln in lines[1:]]
    assert rows == sorted(rows, key=lambda p: (p[1], p[0]))


def test_bundled_fixtures_load():
    for name in ["wheel", "disc2", "annulus", "two_wheels", "torus_two_holes", "blob_neck_blob"]:
        assert len(load_domain(name)) > 0


def test_read_domain(tmp_path):
    p = tmp_path / "w.dom"
    p.write_text(WHEEL)
    assert read_domain(p) == parse_domain(WHEEL)


def test_explicit_empty_edge_set():
    G = parse_domain("plane\nv 0 0\nv 1 0\nexplicit\n")
    assert len(G) == 2 and not G.edges
    assert "explicit" in serialize_domain(G)

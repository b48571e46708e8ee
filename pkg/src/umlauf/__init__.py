"""Curvature, Euler characteristic and domain checks for subgraphs of the
triangular lattice and of twisted tori."""

from umlauf.domain import (
    DEFAULT_SEMANTICS,
    LatticeSubgraph,
    SphereSemantics,
    check_domain,
    curvature_K,
    euler_characteristic,
    induced_subgraph,
    interior_set,
    boundary_set,
    reconstruct_from_interior,
    total_boundary_curvature,
)
from umlauf.formats import load_domain, parse_domain, read_domain, serialize_domain
from umlauf.lattice import PLANE, Background, Coord, validate_torus
from umlauf.reduce import reduce_to_disc

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SEMANTICS",
    "LatticeSubgraph",
    "SphereSemantics",
    "check_domain",
    "curvature_K",
    "euler_characteristic",
    "induced_subgraph",
    "interior_set",
    "boundary_set",
    "reconstruct_from_interior",
    "total_boundary_curvature",
    "load_domain",
    "parse_domain",
    "read_domain",
    "serialize_domain",
    "PLANE",
    "Background",
    "Coord",
    "validate_torus",
    "reduce_to_disc",
]

"""Exhaustive enumeration of small smooth domains and theorem sweeps.

Domains are enumerated through their interiors: a domain is determined by
its interior set, so we grow connected point sets (polyhex-style), rebuild
the domain from each, and keep the ones that are smooth and reproduce their
own interior.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from umlauf import graph_core
from umlauf.domain import (
    DEFAULT_SEMANTICS,
    LatticeSubgraph,
    SphereSemantics,
    check_domain,
    euler_characteristic,
    interior_set,
    is_simply_connected,
    k2_total,
    reconstruct_from_interior,
    total_boundary_curvature,
)
from umlauf.lattice import PLANE, SYMMETRIES, Background, Coord, ball_x, neighbors
from umlauf.reduce import Outcome, reduce_to_disc

__all__ = [
    "EnumerationSpec",
    "BoundsTooLarge",
    "DomainRecord",
    "AuditRecord",
    "VerificationReport",
    "MAX_INTERIOR",
    "canonical_form",
    "enumerate_interior_sets",
    "enumerate_smooth_domains",
    "verify_domain",
    "verify_theorems",
    "audit_local_removals",
    "AUDIT_HEADER",
]

MAX_INTERIOR = 10


class BoundsTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    max_interior: int
    symmetry: bool = True
    background: Background = PLANE

    def validate(self) -> None:
        if self.background.is_torus:
            raise ValueError("enumeration runs on the plane background")
        if not 1 <= self.max_interior <= MAX_INTERIOR:
            raise BoundsTooLarge(f"max_interior must be in 1..{MAX_INTERIOR}, got {self.max_interior}")


def _normalise(pts) -> tuple:
    lo = min(pts)
    return tuple(sorted(Coord(p[0] - lo[0], p[1] - lo[1]) for p in pts))


def canonical_form(pts: Iterable, symmetry: bool = True) -> tuple:
    """Lexicographically least translate over the 12 point symmetries
    (or over translations only when ``symmetry`` is off)."""
    pts = list(pts)
    if not symmetry:
        return _normalise(pts)
    return min(_normalise([op(p) for p in pts]) for op in SYMMETRIES)


def enumerate_interior_sets(spec: EnumerationSpec) -> Iterator[tuple]:
    """Connected point sets of size 1..max_interior, one per class, sorted
    by (size, canonical form)."""
    spec.validate()
    level = {canonical_form([Coord(0, 0)], spec.symmetry)}
    for size in range(1, spec.max_interior + 1):
        yield from sorted(level)
        if size == spec.max_interior:
            break
        nxt = set()
        for shape in level:
            members = set(shape)
            for p in shape:
                for q in neighbors(PLANE, p):
                    if q not in members:
                        nxt.add(canonical_form(shape + (q,), spec.symmetry))
        level = nxt


def _smooth_from_interior(H) -> LatticeSubgraph | None:
    G = reconstruct_from_interior(PLANE, H)
    if interior_set(G) != frozenset(H):
        return None
    rep = check_domain(G)
    if rep.is_domain and rep.is_smooth:
        return G
    return None


def enumerate_smooth_domains(spec: EnumerationSpec, workers: int = 1) -> Iterator[LatticeSubgraph]:
    shapes = list(enumerate_interior_sets(spec))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_smooth_from_interior, shapes, chunksize=16))
    else:
        results = map(_smooth_from_interior, shapes)
    # results keep the sorted shape order, so output is independent of workers
    for G in results:
        if G is not None:
            yield G


@dataclass
class DomainRecord:
    interior: tuple
    chi: int
    simply_connected: bool
    k_total: int
    k_total_x: int
    k1_total: int | None
    k2_total: int
    interior_lemma: int
    round_trip: bool
    reduction: str | None
    failures: list = field(default_factory=list)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["interior"] = [list(p) for p in self.interior]
        return d


@dataclass
class VerificationReport:
    checked: int = 0
    passed: int = 0
    failed: int = 0
    counts: dict = field(default_factory=dict)
    check_failures: dict = field(default_factory=dict)
    findings: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    records: list = field(default_factory=list)
    header: str = ""

    def add(self, rec: DomainRecord) -> None:
        self.checked += 1
        self.records.append(rec)
        if rec.failures:
            self.failed += 1
            self.counterexamples.append(rec)
            for name in rec.failures:
                self.check_failures[name] = self.check_failures.get(name, 0) + 1
        else:
            self.passed += 1

    def note(self, name: str) -> None:
        self.findings[name] = self.findings.get(name, 0) + 1

    def count(self, name: str) -> None:
        self.counts[name] = self.counts.get(name, 0) + 1

    def summary_lines(self) -> list[str]:
        out = [self.header] if self.header else []
        out.append(f"checked={self.checked} passed={self.passed} failed={self.failed}")
        out += [f"count {k}={v}" for k, v in sorted(self.counts.items())]
        out += [f"failure {k}={v}" for k, v in sorted(self.check_failures.items())]
        out += [f"finding {k}={v}" for k, v in sorted(self.findings.items())]
        for rec in self.counterexamples:
            pts = " ".join(f"{p[0]},{p[1]}" for p in rec.interior)
            out.append(f"counterexample interior=[{pts}] failures={','.join(rec.failures)}")
        return out

    def as_dict(self) -> dict:
        return {
            "header": self.header,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "counts": self.counts,
            "check_failures": self.check_failures,
            "findings": self.findings,
            "records": [r.as_dict() for r in self.records],
        }


def verify_domain(G: LatticeSubgraph, reduce: bool = True) -> DomainRecord:
    """Run every theorem check on one smooth domain. ``failures`` names the
    gating checks that failed; K2 and semantics agreement are measured only."""
    H = interior_set(G)
    chi = euler_characteristic(G)
    sc = is_simply_connected(G)
    k = total_boundary_curvature(G)
    kx = total_boundary_curvature(G, SphereSemantics.X_DISTANCE)
    failures = []
    if k != 12 * chi:
        failures.append("gauss_bonnet")
    if sc and k != 12:
        failures.append("umlaufsatz")
    try:
        k1 = graph_core.k1_total(G.graph)
    except ValueError:
        k1 = None
    if k1 != 6 * chi:
        failures.append("k1_gauss_bonnet")
    g = G.graph
    lemma = 2 * len(graph_core.faces(g)) - g.number_of_edges() + chi
    if lemma != len(H):
        failures.append("interior_count")
    rt = reconstruct_from_interior(G.background, H) == G
    if not rt:
        failures.append("round_trip")
    outcome = None
    if reduce and sc:
        trace = reduce_to_disc(G, check=False)
        outcome = trace.outcome.value
        ok = trace.outcome is Outcome.REDUCED_TO_DISC and all(
            s.curvature == 12 and s.chi == 1 for s in trace.steps
        ) and len(trace.steps) == len(H) - 1
        if not ok:
            failures.append("reduction")
    return DomainRecord(
        interior=tuple(sorted(H)),
        chi=chi,
        simply_connected=sc,
        k_total=k,
        k_total_x=kx,
        k1_total=k1,
        k2_total=k2_total(G),
        interior_lemma=lemma,
        round_trip=rt,
        reduction=outcome,
        failures=failures,
    )


def verify_theorems(domains: Iterable[LatticeSubgraph], reduce: bool = True) -> VerificationReport:
    rep = VerificationReport(header="# theorem sweep: K uses geodesic spheres in G; "
                                    "K2 and x-distance K are measured, not gated")
    for G in domains:
        rep.count("smooth_domain")
        rec = verify_domain(G, reduce=reduce)
        if rec.simply_connected:
            rep.count("simply_connected")
        if rec.k_total_x != rec.k_total:
            rep.note("semantics_disagreement")
        if rec.k2_total != 24 * rec.chi:
            rep.note("k2_not_24chi")
        else:
            rep.note("k2_equals_24chi")
        rep.add(rec)
    return rep


AUDIT_HEADER = (
    "# local-removal audit: for each enumerated smooth domain G and each interior "
    "point p, rebuild G from int(G) minus p and compare total curvature. A curvature "
    "change is explained when the number of connected components of the interior "
    "inside B2(p) changes, or the result is no longer a smooth domain reproducing "
    "its interior."
)


def _local_components(H, window) -> int:
    pts = set(H) & window
    g = graph_core.Graph(pts, ((p, q) for p in pts for q in neighbors(PLANE, p) if q in pts and p < q))
    return len(g.components())


@dataclass
class AuditRecord:
    interior: tuple
    removed: tuple
    k_before: int
    k_after: int
    smooth_after: bool
    topology_changed: bool
    failures: list = field(default_factory=list)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["interior"] = [list(p) for p in self.interior]
        d["removed"] = list(self.removed)
        return d


def _audit_domain(G: LatticeSubgraph) -> list[AuditRecord]:
    H = interior_set(G)
    if len(H) < 2:
        return []
    sem = DEFAULT_SEMANTICS
    k0 = total_boundary_curvature(G, sem)
    out = []
    for p in sorted(H):
        rest = H - {p}
        window = ball_x(PLANE, p, 2)
        topo = _local_components(H, window) != _local_components(rest, window)
        G2 = reconstruct_from_interior(PLANE, rest)
        smooth = False
        if interior_set(G2) == rest:
            r2 = check_domain(G2)
            smooth = r2.is_domain and r2.is_smooth
        k1 = total_boundary_curvature(G2, sem)
        failures = []
        if k1 != k0 and smooth and not topo:
            failures.append("unexplained_curvature_change")
        out.append(AuditRecord(tuple(sorted(H)), tuple(p), k0, k1, smooth, topo, failures))
    return out


def audit_local_removals(spec: EnumerationSpec, workers: int = 1) -> VerificationReport:
    rep = VerificationReport(header=AUDIT_HEADER)
    domains = list(enumerate_smooth_domains(spec, workers))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            batches = list(pool.map(_audit_domain, domains, chunksize=8))
    else:
        batches = [_audit_domain(G) for G in domains]
    for G, batch in zip(domains, batches):
        rep.count("smooth_domain")
        for rec in batch:
            rep.count("removal")
            if rec.k_after == rec.k_before:
                rep.note("unchanged_smooth" if rec.smooth_after else "unchanged_nonsmooth")
            elif not rec.smooth_after:
                rep.note("changed_nonsmooth")
            else:
                rep.note("changed_local_topology")
            rep.add(rec)
    return rep

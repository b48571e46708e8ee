"""Command line interface: ``umlauf <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from umlauf import graph_core
from umlauf.domain import (
    DEFAULT_SEMANTICS,
    SphereSemantics,
    check_domain,
    curvature_table,
    euler_characteristic,
    fill_hole,
    find_holes,
    hole_closure,
    interior_set,
    NotAHole,
    total_boundary_curvature,
)
from umlauf.enumeration import (
    BoundsTooLarge,
    EnumerationSpec,
    audit_local_removals,
    enumerate_interior_sets,
    enumerate_smooth_domains,
    verify_theorems,
)
from umlauf.formats import ParseError, read_domain
from umlauf.reduce import InputNotSimplyConnected, InputNotSmooth, Outcome, reduce_to_disc
from umlauf.render import LABEL_MODES, RenderSpec, render

OK, INVALID, USAGE = 0, 1, 2


def _err(msg: str) -> None:
    print(f"umlauf: {msg}", file=sys.stderr)


def cmd_check(args) -> int:
    G = read_domain(args.file)
    rep = check_domain(G)
    if args.json:
        print(json.dumps(rep.as_dict(), sort_keys=True))
    else:
        for name in ("i", "ii", "iii", "iv", "v"):
            ok = getattr(rep, f"cond_{name}")
            bad = rep.failures.get(name, [])
            extra = f" ({len(bad)} witnesses, first {bad[0]})" if bad else ""
            print(f"cond_{name}={'pass' if ok else 'fail'}{extra}")
        print(f"is_domain={str(rep.is_domain).lower()}")
        print(f"is_smooth={str(rep.is_smooth).lower()}")
        print(f"interior={len(rep.interior)} boundary={len(rep.boundary)}")
    return OK if rep.is_domain and rep.is_smooth else INVALID


def cmd_curvature(args) -> int:
    G = read_domain(args.file)
    sem = SphereSemantics(args.semantics)
    if args.kind != "k1" and not check_domain(G).is_domain:
        _err("not a domain; run `umlauf check` for details")
        return INVALID
    try:
        rows = curvature_table(G, args.kind, sem)
    except ValueError as exc:
        _err(str(exc))
        return INVALID
    for p, val in rows:
        print(f"{p[0]:>4} {p[1]:>4} {val:>4}")
    print(f"total {sum(v for _, v in rows)}")
    return OK


def cmd_euler(args) -> int:
    G = read_domain(args.file)
    g = G.graph
    f = len(graph_core.faces(g))
    print(f"v={len(g)} e={g.number_of_edges()} f={f} chi={euler_characteristic(G)}")
    return OK


def cmd_reduce(args) -> int:
    G = read_domain(args.file)
    try:
        trace = reduce_to_disc(G, check=not args.force)
    except (InputNotSmooth, InputNotSimplyConnected) as exc:
        _err(str(exc))
        return INVALID
    print(trace)
    return OK if trace.outcome is Outcome.REDUCED_TO_DISC else INVALID


def cmd_holes(args) -> int:
    G = read_domain(args.file)
    holes = find_holes(G)
    status = OK
    k0, chi0 = total_boundary_curvature(G), euler_characteristic(G)
    print(f"holes={len(holes)} K={k0} chi={chi0}")
    for i, hole in enumerate(holes):
        pts = " ".join(f"{p[0]},{p[1]}" for p in sorted(hole, key=lambda p: (p[1], p[0])))
        try:
            F = fill_hole(G, hole)
        except NotAHole as exc:
            print(f"hole {i} size={len(hole)} points=[{pts}] not_a_hole: {exc}")
            status = INVALID
            continue
        W = hole_closure(G, hole)
        print(f"hole {i} size={len(hole)} points=[{pts}] K_hole={total_boundary_curvature(W)} "
              f"filled_K={total_boundary_curvature(F)} filled_chi={euler_characteristic(F)}")
    return status


def cmd_render(args) -> int:
    G = read_domain(args.file)
    spec = RenderSpec(format=args.format, labels=args.labels, scale=args.scale,
                      semantics=SphereSemantics(args.semantics))
    text = render(G, spec)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return OK


def _write_json(path, payload) -> None:
    Path(path).write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n", encoding="utf-8")


def cmd_enumerate(args) -> int:
    spec = EnumerationSpec(args.max_interior, symmetry=not args.no_symmetry)
    if not args.verify:
        n = 0
        for G in enumerate_smooth_domains(spec, args.workers):
            pts = " ".join(f"{p[0]},{p[1]}" for p in sorted(interior_set(G)))
            print(f"smooth interior=[{pts}]")
            n += 1
        classes = sum(1 for _ in enumerate_interior_sets(spec))
        print(f"interior_classes={classes} smooth_domains={n}")
        return OK
    rep = verify_theorems(enumerate_smooth_domains(spec, args.workers))
    print("\n".join(rep.summary_lines()))
    if args.json:
        _write_json(args.json, rep.as_dict())
    return OK if rep.failed == 0 else INVALID


def cmd_audit(args) -> int:
    rep = audit_local_removals(EnumerationSpec(args.max_window), args.workers)
    print("\n".join(rep.summary_lines()))
    if args.json:
        _write_json(args.json, rep.as_dict())
    return OK if rep.failed == 0 else INVALID


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="umlauf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="evaluate the domain conditions and smoothness")
    c.add_argument("file")
    c.add_argument("--json", action="store_true", help="print the report as JSON")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("curvature", help="per-vertex curvature table and total")
    c.add_argument("file")
    c.add_argument("--semantics", choices=["g", "x"], default=DEFAULT_SEMANTICS.value)
    c.add_argument("--kind", choices=["k", "k1", "k2"], default="k")
    c.set_defaults(func=cmd_curvature)

    c = sub.add_parser("euler", help="vertex, edge, face counts and Euler characteristic")
    c.add_argument("file")
    c.set_defaults(func=cmd_euler)

    c = sub.add_parser("reduce", help="prune and etch down to the 7-point disc")
    c.add_argument("file")
    c.add_argument("--force", action="store_true", help="skip the smooth/simply connected precondition")
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("holes", help="list holes and the effect of filling each")
    c.add_argument("file")
    c.set_defaults(func=cmd_holes)

    c = sub.add_parser("render", help="draw the domain as ASCII or SVG")
    c.add_argument("file")
    c.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    c.add_argument("--labels", choices=LABEL_MODES, default="curvature")
    c.add_argument("--scale", type=float, default=40.0)
    c.add_argument("--semantics", choices=["g", "x"], default=DEFAULT_SEMANTICS.value)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_render)

    c = sub.add_parser("enumerate", help="enumerate small smooth domains")
    c.add_argument("--max-interior", type=int, required=True)
    c.add_argument("--verify", action="store_true", help="run the theorem checks")
    c.add_argument("--no-symmetry", action="store_true", help="reduce by translations only")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--json", metavar="PATH", help="write the structured report here")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("audit", help="local-removal audit of curvature changes")
    c.add_argument("--max-window", type=int, required=True,
                   help="largest interior size of the domains whose removals are audited")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--json", metavar="PATH")
    c.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, BoundsTooLarge) as exc:
        _err(str(exc))
        return USAGE
    except OSError as exc:
        _err(str(exc))
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

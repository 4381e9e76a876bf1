"""Command-line entry point.

    treelattice inspect inst.json
    treelattice ball --graph x|c|z|dl --n N --d D --radius R [--dot|--graphml|--json]
    treelattice reduce inst.json --config "0:1,12:1" --edge "e:0"
    treelattice cayley inst.json --radius R
    treelattice verify --suite NAME [--instance inst.json] [--radius R] [--seed S]
    treelattice compare-dl --n N --radius R
"""

from __future__ import annotations

import argparse
import json
import sys

from . import permgrp as pg
from . import tree
from .elements import (
    Instance,
    format_word,
    generator_type,
    generators,
    make_instance,
    nontrivial_pivot_perms,
    portrait_to_json,
    reference_instance,
)
from .errors import TreeLatticeError
from .graphs import (
    XVertex,
    balls_isomorphic,
    c_ball,
    cayley_ball_gff,
    dl_ball,
    export_dot,
    export_graphml,
    export_json,
    is_identity_map,
    reduce_to_zero,
    x_ball,
    z_ball,
)
from .graphs.spaces import parse_config, xvertex_str
from .verify import SUITES, run_suite


def load_instance(path: str) -> Instance:
    """Parse {"d":3,"F":[[1,2,0]],"Fprime":[[1,2,0],[1,0,2]],"base_color":0}."""
    if path.upper() in ("A", "B", "C"):
        return reference_instance(path)
    with open(path) as fh:
        obj = json.load(fh)
    return instance_from_json(obj)


def instance_from_json(obj: dict) -> Instance:
    try:
        d = int(obj["d"])
        F = pg.from_images(d, obj["F"])
        Fp = pg.from_images(d, obj["Fprime"])
        a = int(obj.get("base_color", 0))
    except (KeyError, TypeError) as exc:
        raise TreeLatticeError(f"malformed instance file: missing or bad field {exc}") from exc
    return make_instance(d, F, Fp, a)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_inspect(args) -> int:
    inst = load_instance(args.instance)
    cls = inst.classification
    info = {
        "d": inst.d, "n": inst.n, "base_color": inst.a,
        "order_F": inst.F.order, "order_Fprime": inst.Fp.order,
        "F": {"transitive": cls.transitive, "semiregular": cls.semiregular,
              "regular": cls.regular, "orbits": [list(o) for o in cls.orbits]},
        "coset_reps": [list(r) for r in inst.alpha.coset_reps],
        "alpha": {pg.cycle_string(s): list(inst.alpha(s)) for s in inst.Fp.elements},
    }
    if inst.regular:
        perms = nontrivial_pivot_perms(inst)
        info["generators"] = [
            {"name": format_word(inst, s), "pivot": s.pivot, "sigma": list(s.sigma),
             "type": generator_type(inst, s)}
            for s in generators(inst)]
        info["sigma_index"] = [list(p) for p in perms]
    print(_dump(info))
    return 0


def _emit_ball(B, args) -> None:
    if args.graphml:
        sys.stdout.write(export_graphml(B))
    elif args.json:
        sys.stdout.write(export_json(B) + "\n")
    else:
        sys.stdout.write(export_dot(B))


def cmd_ball(args) -> int:
    if args.graph == "x":
        B = x_ball(args.n, args.d, args.radius)
    elif args.graph == "z":
        B = z_ball(args.n, args.d, args.radius)
    elif args.graph == "c":
        B = c_ball(args.n, args.d, args.radius)
    else:
        B = dl_ball(args.n, args.radius)
    _emit_ball(B, args)
    return 0


def cmd_reduce(args) -> int:
    inst = load_instance(args.instance)
    x = XVertex(parse_config(args.config), tree.parse_edge(args.edge))
    trace = reduce_to_zero(inst, x)
    out = {
        "start": xvertex_str(trace.start),
        "steps": [{"vertex": tree.vertex_str(s.vertex), "sigma": list(s.sigma),
                   "element": portrait_to_json(s.element.factors[0]),
                   "result": xvertex_str(s.result)} for s in trace.steps],
        "final": xvertex_str(trace.final),
    }
    print(_dump(out))
    return 0


def cmd_cayley(args) -> int:
    inst = load_instance(args.instance)
    cb = cayley_ball_gff(inst, args.radius)
    if args.dot or args.graphml or args.json:
        _emit_ball(cb.ball, args)
        return 0
    xb = x_ball(inst.n, inst.d, args.radius, a=inst.a)
    same = is_identity_map(cb.ball, xb, True)
    print(_dump({"radius": args.radius, "vertices": len(cb.ball), "edges": len(cb.ball.edges()),
                 "matches_x_ball": same}))
    return 0 if same else 1


def cmd_verify(args) -> int:
    kw = {"seed": args.seed}
    inst = None
    if args.suite in ("gamma", "dl"):
        kw["n"] = args.n
        if args.suite == "gamma":
            kw["d"] = args.d
    elif args.suite == "lattice":
        if args.groups:
            with open(args.groups) as fh:
                obj = json.load(fh)
            kw["A"] = pg.from_images(obj["d"], obj["A"])
            kw["B"] = pg.from_images(obj["d"], obj["B"])
    else:
        inst = load_instance(args.instance)
    rep = run_suite(args.suite, inst, args.radius, **kw)
    print(_dump(rep.to_json()))
    return 0 if rep.overall else 1


def cmd_compare_dl(args) -> int:
    Z, D = z_ball(args.n, 2, args.radius), dl_ball(args.n, args.radius)
    iso = balls_isomorphic(Z, D)
    out = {"n": args.n, "radius": args.radius, "vertices": len(Z), "isomorphic": iso is not None}
    if iso is not None and args.show_map:
        out["map"] = {Z.labels[i]: D.labels[j] for i, j in sorted(iso.items())}
    print(_dump(out))
    return 0 if iso is not None else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treelattice", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("inspect", help="validate an instance file and print its data")
    s.add_argument("instance", help="instance JSON file, or A/B/C for a reference instance")
    s.set_defaults(func=cmd_inspect)

    def fmt_flags(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--dot", action="store_true", help="DOT output (default)")
        g.add_argument("--graphml", action="store_true")
        g.add_argument("--json", action="store_true")

    s = sub.add_parser("ball", help="build and export a graph ball")
    s.add_argument("--graph", choices=["x", "c", "z", "dl"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, default=3)
    s.add_argument("--radius", type=int, required=True)
    fmt_flags(s)
    s.set_defaults(func=cmd_ball)

    s = sub.add_parser("reduce", help="support-reduction trace for an X-vertex")
    s.add_argument("instance")
    s.add_argument("--config", default="", help='lamps as "vertex:value,..." (vertex "e" = basepoint)')
    s.add_argument("--edge", required=True, help='edge as "word:color"')
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("cayley", help="Cayley ball of G(F,F')* pushed to X_{n,d}")
    s.add_argument("instance")
    s.add_argument("--radius", type=int, default=2)
    fmt_flags(s)
    s.set_defaults(func=cmd_cayley)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--instance", default="A")
    s.add_argument("--groups", help='lattice suite: {"d":4,"A":[...],"B":[...]}')
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--d", type=int, default=3)
    s.add_argument("--radius", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("compare-dl", help="search a ball isomorphism Z_{n,2} -> DL(n,n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--radius", type=int, default=3)
    s.add_argument("--show-map", action="store_true")
    s.set_defaults(func=cmd_compare_dl)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TreeLatticeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

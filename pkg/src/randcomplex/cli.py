"""Command-line workbench.

Every subcommand that reports results prints JSON lines (one object per
line) so sweeps and shell pipelines can consume them; `gen` and
`collapse` emit SC2 files.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import sc2io
from .classify import collapse_core, homotopy_type, popped_bound_check
from .complexes import ID3
from .density import check_sparse, check_sparse3, density_e, density_e_w
from .errors import RandComplexError
from .homology import betti, h1_integral
from .pi1 import (
    area_search,
    certify_id3_noncontractible,
    certify_simply_connected,
    evidence_pi1_nontrivial,
    presentation,
)
from .randgen import RngSpec, gen_Y
from .sweep import h1_vanishing_face_count, load_config, plot, run_sweep


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, default=_jsonable))


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"not JSON-serializable: {type(x)}")


def _faces(faces):
    return [list(t) for t in faces]


def cmd_gen(args) -> None:
    Y = gen_Y(args.n, args.p, RngSpec(seed=args.seed, trial=args.trial))
    text = sc2io.dumps(Y)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        _emit({"written": args.out, "n": Y.n, "f2": Y.f2})
    else:
        sys.stdout.write(text)


def cmd_homology(args) -> None:
    X = sc2io.load(args.file)
    if args.coeff == "z":
        rank, torsion = h1_integral(X)
        _emit({"coeff": "z", "h1_rank": rank, "h1_torsion": torsion})
    else:
        prof = betti(X, args.coeff)
        _emit({"coeff": prof.coeff, "b0": prof.b0, "b1": prof.b1, "b2": prof.b2})


def cmd_density(args) -> None:
    X = sc2io.load(args.file)
    rep = density_e_w(X, args.anchor) if args.anchor else density_e(X)
    _emit({"value": rep.value, "mode": rep.mode, "witness": _faces(rep.witness)})


def cmd_sparse(args) -> None:
    X = sc2io.load(args.file)
    fn = check_sparse3 if args.anchor else check_sparse
    v = fn(X, args.eps, args.m)
    out = {"outcome": v.outcome, "eps": v.eps, "m": v.m, "anchored": v.anchored}
    if v.witness is not None:
        out["witness"] = _faces(v.witness)
    _emit(out)


def cmd_certify_sc(args) -> None:
    X = sc2io.load(args.file)
    cert = certify_simply_connected(X)
    _emit(
        {
            "outcome": cert.outcome,
            "skeleton_complete": cert.skeleton_complete,
            "failing_pairs": [list(p) for p in cert.failing_pairs],
        }
    )


def cmd_pi1(args) -> None:
    X = sc2io.load(args.file)
    pres = presentation(X, args.component)
    rank, torsion = pres.abelianization()
    out = {
        "component": args.component,
        "generators": len(pres.generators),
        "relators": len(pres.relators),
        "abelianization_rank": rank,
        "abelianization_torsion": torsion,
    }
    if args.presentation:
        out["generator_edges"] = [list(e) for e in pres.generators]
        out["relator_words"] = [list(r) for r in pres.relators]
        out["tree_edges"] = [list(e) for e in pres.tree_edges]
    _emit(out)


def cmd_id3(args) -> None:
    X = sc2io.load(args.file)
    cert = certify_id3_noncontractible(X)
    out = {"noncontractible_certified": cert.noncontractible}
    if cert.density is not None:
        out["e3"] = cert.density.value
        out["e3_witness"] = _faces(cert.density.witness)
    if args.area_budget is not None:
        bound = area_search(X, ID3, args.area_budget)
        out["area"] = bound.outcome
        if bound.is_bound:
            out["area_trace"] = [list(m) for m in bound.trace]
    _emit(out)


def cmd_evidence(args) -> None:
    X = sc2io.load(args.file)
    rep = evidence_pi1_nontrivial(X, args.eps, args.m)
    out = {
        "evidence_only": True,
        "outcome": rep.outcome,
        "eps": rep.verdict.eps,
        "m": rep.verdict.m,
    }
    if rep.verdict.witness is not None:
        out["witness"] = _faces(rep.verdict.witness)
    _emit(out)


def cmd_classify(args) -> None:
    X = sc2io.load(args.file)
    ht = homotopy_type(X)
    _emit(
        {
            "components": [
                {
                    "circles": k.circles,
                    "spheres": k.spheres,
                    "projective_planes": k.projective_planes,
                    "vertices": list(k.vertices),
                }
                for k in ht.components
            ],
            "totals": list(ht.totals()),
        }
    )


def cmd_collapse(args) -> None:
    X = sc2io.load(args.file)
    A = []
    if args.anchor_edges:
        with open(args.anchor_edges, encoding="utf-8") as fh:
            for line in fh:
                parts = line.split()
                if not parts:
                    continue
                if parts[0] == "e":
                    parts = parts[1:]
                a, b = map(int, parts)
                A.append((a, b))
    K = collapse_core(X, A)
    text = sc2io.dumps(K)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        _emit({"written": args.out, "f1": K.f1, "f2": K.f2})
    else:
        sys.stdout.write(text)


def cmd_bound(args) -> None:
    X = sc2io.load(args.file)
    rep = popped_bound_check(X, args.w)
    _emit(
        {
            "f2": rep.f2,
            "bound": rep.bound,
            "holds": rep.holds,
            "chi": rep.chi,
            "L": rep.length,
            "e_w": rep.density,
            "w": rep.w,
        }
    )


def cmd_sweep(args) -> None:
    cfg = load_config(args.config)
    summary = run_sweep(cfg)
    for key, stats in summary.items():
        _emit({"cell": key, **stats})


def cmd_plot(args) -> None:
    plot(args.csv, args.out, checks=args.check or None)
    _emit({"written": args.out})


def cmd_process(args) -> None:
    count = h1_vanishing_face_count(args.n, args.seed)
    _emit({"n": args.n, "seed": args.seed, "h1_gf2_vanishing_face_count": count})


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="randcomplex",
        description="Workbench for random 2-dimensional simplicial complexes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate Y(n,p) and emit SC2")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", required=True, help="probability as a decimal string")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--trial", type=int, default=0)
    g.add_argument("--out", help="output SC2 path (default: stdout)")
    g.set_defaults(fn=cmd_gen)

    h = sub.add_parser("homology", help="Betti numbers or integral H1")
    h.add_argument("file")
    h.add_argument("--coeff", default="gf2", help="gf2 | gfq:<q> | q | z")
    h.set_defaults(fn=cmd_homology)

    d = sub.add_parser("density", help="exact minimum density with witness")
    d.add_argument("file")
    d.add_argument("--anchor", type=int, choices=(3,), default=0)
    d.set_defaults(fn=cmd_density)

    s = sub.add_parser("sparse", help="bounded-size density violation search")
    s.add_argument("file")
    s.add_argument("--eps", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--anchor", type=int, choices=(3,), default=0)
    s.set_defaults(fn=cmd_sparse)

    c = sub.add_parser("certify-sc", help="simple-connectivity certificate")
    c.add_argument("file")
    c.set_defaults(fn=cmd_certify_sc)

    p1 = sub.add_parser("pi1", help="fundamental-group presentation")
    p1.add_argument("file")
    p1.add_argument("--presentation", action="store_true")
    p1.add_argument("--component", type=int, default=0)
    p1.set_defaults(fn=cmd_pi1)

    i3 = sub.add_parser("id3", help="noncontractibility certificate for loop 1-2-3")
    i3.add_argument("file")
    i3.add_argument("--area-budget", type=int, default=None)
    i3.set_defaults(fn=cmd_id3)

    ev = sub.add_parser("evidence", help="anchored sparsity evidence (not a proof)")
    ev.add_argument("file")
    ev.add_argument("--eps", required=True)
    ev.add_argument("--m", type=int, required=True)
    ev.set_defaults(fn=cmd_evidence)

    cl = sub.add_parser("classify", help="homotopy type of an admissible complex")
    cl.add_argument("file")
    cl.set_defaults(fn=cmd_classify)

    co = sub.add_parser("collapse", help="collapse to the kept-edge core")
    co.add_argument("file")
    co.add_argument("--anchor-edges", help="file of protected edges, one 'a b' per line")
    co.add_argument("--out", help="output SC2 path (default: stdout)")
    co.set_defaults(fn=cmd_collapse)

    b = sub.add_parser("bound", help="face-count bound from chi, L, and density")
    b.add_argument("file")
    b.add_argument("--w", type=int, choices=(0, 3), default=0)
    b.set_defaults(fn=cmd_bound)

    sw = sub.add_parser("sweep", help="run a Monte Carlo sweep from a TOML config")
    sw.add_argument("--config", required=True)
    sw.set_defaults(fn=cmd_sweep)

    pl = sub.add_parser("plot", help="SVG frequency curves from a sweep CSV")
    pl.add_argument("csv")
    pl.add_argument("out")
    pl.add_argument("--check", action="append")
    pl.set_defaults(fn=cmd_plot)

    pr = sub.add_parser("process", help="face-addition process exploration")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--seed", type=int, required=True)
    pr.set_defaults(fn=cmd_process)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except RandComplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

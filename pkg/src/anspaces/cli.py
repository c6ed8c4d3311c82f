"""Command-line entry point: ``anspaces <subcommand> ...``.

Exit status is 0 on success, 1 when a verification reports failures and
2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import gauge, steenrod
from .cache import default_cache_dir, load_or_build
from .facemaps import sphere_report, verify_relations
from .realization import VertexEmbedding, affine_dimension, facet_support_check
from .trees import FACE_CAP, TreeError, dimension, top_dimension, vertices

log = logging.getLogger("anspaces")

VERIFY_CAP = {"K": 8, "J": 6}


class UsageError(Exception):
    pass


def _emit_json(doc: object, out: TextIO) -> None:
    out.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _cache_dir(args: argparse.Namespace) -> Path | None:
    if args.no_cache:
        return None
    return Path(args.cache_dir) if args.cache_dir else default_cache_dir()


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    if args.vertices_only:
        faces = vertices(args.kind, args.n)
        doc = {"kind": args.kind, "n": args.n, "dim": 0, "count": len(faces),
               "faces": [t.code for t in faces]}
        rows = [(0, t.code) for t in faces]
    else:
        poset = load_or_build(args.kind, args.n, _cache_dir(args), cap=args.cap)
        doc = poset.to_json()
        faces = poset.faces if args.dim is None else poset.of_dimension(args.dim)
        if args.dim is not None:
            doc["faces"] = [{"dim": args.dim, "tree": t.code} for t in faces]
        rows = [(dimension(t), t.code) for t in faces]
    if args.format == "json":
        _emit_json(doc, out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["dim", "tree"])
        w.writerows(rows)
    else:
        for d, code in rows:
            out.write(f"{d}\t{code}\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.n_max > VERIFY_CAP[args.kind]:
        raise UsageError(f"--n-max for {args.kind} is capped at {VERIFY_CAP[args.kind]}")
    rep = verify_relations(args.kind, args.n_max)
    if args.format == "json":
        _emit_json(rep.to_json(), out)
    else:
        out.write(f"{rep.map_name} n_max={rep.n_max} instances={rep.instances} "
                  f"failures={len(rep.failures)}\n")
        for name, count in sorted(rep.by_check.items()):
            out.write(f"  {name}: {count}\n")
        for f in rep.failures[:20]:
            out.write(f"  FAIL {f}\n")
    return 0 if rep.ok else 1


def cmd_spheres(args: argparse.Namespace, out: TextIO) -> int:
    lo = 2 if args.kind == "K" else 1
    reports = []
    for n in range(lo, args.n_max + 1):
        poset = load_or_build(args.kind, n, _cache_dir(args))
        reports.append(sphere_report(args.kind, n, poset.faces))
    if args.format == "json":
        _emit_json([r.to_json() for r in reports], out)
    else:
        for r in reports:
            out.write(f"{r.kind}{r.n} f={r.f_vector} chi={r.euler_proper} "
                      f"expected={r.euler_expected} bad_ridges={len(r.bad_ridges)} "
                      f"{'ok' if r.ok else 'FAIL'}\n")
    return 0 if all(r.ok for r in reports) else 1


def cmd_realize(args: argparse.Namespace, out: TextIO) -> int:
    emb = VertexEmbedding.of(args.n)
    ok = emb.is_valid()
    doc: dict = {"n": args.n,
                 "points": [{"tree": code, "coords": list(p)} for code, p in emb.rows()]}
    if args.check:
        dim = affine_dimension(emb)
        ok = ok and dim == args.n - 2
        doc["affine_dimension"] = dim
        if args.n >= 3:
            rep = facet_support_check(args.n)
            ok = ok and rep.ok
            doc["facet_support"] = rep.to_json()
    if args.format == "json":
        doc["ok"] = ok
        _emit_json(doc, out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["tree"] + [f"x_{i}" for i in range(1, args.n)])
        for code, p in emb.rows():
            w.writerow([code, *p])
    return 0 if ok else 1


def cmd_steenrod(args: argparse.Namespace, out: TextIO) -> int:
    e = steenrod.SteenrodElement.parse(args.word, args.prime)
    nf = steenrod.adem_reduce(e)
    if args.format == "json":
        _emit_json({"input": str(e), "normal_form": str(nf), **nf.to_json()}, out)
    else:
        out.write(f"{nf}\n")
    return 0


def cmd_probe(args: argparse.Namespace, out: TextIO) -> int:
    rep = steenrod.confluence_probe(args.prime, args.trials, args.max_len, args.max_exp, args.seed)
    _emit_json(rep.to_json(), out)
    return 0 if rep.ok else 1


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    verdict = gauge.su2_an_equivalent(args.k, args.k2, args.n)
    _emit_json({"invariant_k": gauge.su2_invariant(args.k, args.n).to_json(),
                "invariant_k2": gauge.su2_invariant(args.k2, args.n).to_json(),
                "verdict": verdict.value}, out)
    return 0


def cmd_census(args: argparse.Namespace, out: TextIO) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["invariant", "count", "representative"])
    for row in gauge.census(args.n, args.kmax):
        w.writerow([row["invariant"], row["count"], row["representative"]])
    return 0


def cmd_order(args: argparse.Namespace, out: TextIO) -> int:
    _emit_json(gauge.an_triviality_order(args.n).to_json(), out)
    return 0


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anspaces", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def cache_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cache-dir", help="face-poset cache directory")
        p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("enumerate", help="list the faces of K_n or J_n")
    p.add_argument("--kind", choices=["K", "J"], required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--vertices-only", action="store_true")
    p.add_argument("--cap", type=int, default=FACE_CAP)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    cache_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check the face-map relations exhaustively")
    p.add_argument("--kind", choices=["K", "J"], required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spheres", help="Euler and pseudomanifold checks of the boundary")
    p.add_argument("--kind", choices=["K", "J"], required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    cache_flags(p)
    p.set_defaults(func=cmd_spheres)

    p = sub.add_parser("realize", help="Loday coordinates of the vertices of K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="add dimension and facet checks")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("steenrod", help="admissible normal form of a word such as P^1.P^1")
    p.add_argument("word")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_steenrod)

    p = sub.add_parser("probe", help="random confluence test of Adem rewriting")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--max-len", type=_positive, default=4)
    p.add_argument("--max-exp", type=_positive, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("classify", help="A_n-equivalence verdict for P_k and P_k2")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="invariant classes of k in [-kmax, kmax]")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--kmax", type=int, default=1000)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("order", help="known data on the least A_n-trivial N")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_order)
    return parser


def _check_ranges(args: argparse.Namespace) -> None:
    if args.command == "enumerate" and args.dim is not None:
        if not 0 <= args.dim <= top_dimension(args.kind, args.n):
            raise UsageError(f"--dim must lie in 0..{top_dimension(args.kind, args.n)}")
    if args.command == "realize" and not 2 <= args.n <= 9:
        raise UsageError("--n for realize must lie in 2..9")
    if args.command == "realize" and args.check and args.n > 8:
        raise UsageError("--check supports n <= 8")
    if args.command == "census" and not 0 <= args.kmax <= 10**6:
        raise UsageError("--kmax must lie in 0..1000000")


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s: %(message)s")
    try:
        _check_ranges(args)
        return args.func(args, out)
    except (UsageError, TreeError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

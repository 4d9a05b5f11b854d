"""Command-line entry point; every report is line-oriented key=value text."""

from __future__ import annotations

import argparse
import random
import sys

from . import arcs, canon, census, cubic, ecdh
from .group import CurveGroup
from .plane import parse_point


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _points_text(points) -> str:
    return ";".join(str(P) for P in points) if points else "-"


def _load(path):
    return cubic.load_curve(path)


def cmd_cubic_info(args, out):
    C = _load(args.file)
    verdict = C.closure_verdict
    out(f"q={C.spec.q} {C.spec.header()[6:]}")
    out(f"form={C.form.pretty()}")
    out(f"points={len(C.points)}")
    if verdict.singular:
        out(f"singular=yes method={verdict.method} witness={verdict.witness}")
    else:
        out(f"singular=no method={verdict.method}")
    out(f"rational_singular_points={_points_text(C.singular_points)}")
    infl = C.inflexions
    out(f"inflexions={len(infl)} list={_points_text(infl)}")


def cmd_canon_build(args, out):
    spec = canon.CanonicalSpec.make(args.family, c=args.c, d=args.d, b=args.b, e=args.e)
    C = canon.build(spec, args.q)
    text = C.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        out(f"wrote={args.out} family={args.family} q={args.q}")
    else:
        for line in text.splitlines():
            out(line)


def _group(args):
    C = _load(args.curve)
    return C, CurveGroup(C, parse_point(C.spec, args.identity))


def cmd_group_structure(args, out):
    C, G = _group(args)
    s = G.structure()
    out(f"order={len(G)} factors={s.d1},{s.d2} structure={s}")
    out(f"identity={G.O} N={G.N}")


def cmd_group_add(args, out):
    C, G = _group(args)
    P = parse_point(C.spec, args.P)
    Q = parse_point(C.spec, args.Q)
    out(f"P={P} Q={Q} sum={G.add(P, Q)} identity={G.O}")


def cmd_census_run(args, out):
    report = census.projective_census(args.q, jobs=args.jobs)
    for line in census.census_lines(report):
        out(line)


def cmd_census_spectrum(args, out):
    s = census.t_spectrum(args.q)
    q = args.q
    realized = ",".join(str(t) for t in sorted(s.realized))
    out(f"q={q} curves={s.curves_scanned} t={realized}")
    out(f"full_interval={'yes' if s.full else 'no'} expected_full={'yes' if census.full_interval_expected(q) else 'no'}")
    out(f"N_max={s.max_points} N_min={s.min_points} "
        f"formula_N_max={census.max_points(q)} formula_N_min={census.min_points(q)} "
        f"exceptional={'yes' if census.is_exceptional(q) else 'no'}")
    for t, case in s.cases().items():
        out(f"trace t={t} N1={q + 1 - t} case={case}")


def cmd_arcs_build(args, out):
    C, G = _group(args)
    arc = arcs.general_arc(G, args.r)
    arcs.certify(C, arc, cutoff=args.cutoff)
    out(arc.describe())
    out(f"size={len(arc.points)} guaranteed_k={','.join(map(str, arc.guaranteed_k)) or '-'}")
    for P in arc.points:
        out(f"point={P}")
    for k, res in arc.certificates.items():
        out(f"certificate {res}")


def cmd_arcs_verify(args, out):
    C = _load(args.curve)
    with open(args.points) as fh:
        pts = arcs.read_points(C.spec, fh.read())
    res = arcs.verify_degree_k(C, pts, args.k, cutoff=args.cutoff)
    out(str(res))
    if res.witness_form:
        terms = " ".join(f"{''.join(v for v, e in zip('XYZ', m) for _ in range(e))}:{c}"
                         for m, c in sorted(res.witness_form.items(), reverse=True))
        out(f"witness_form={terms}")


def cmd_ecdh_demo(args, out):
    C = _load(args.curve)
    O = parse_point(C.spec, args.identity)
    base = parse_point(C.spec, args.base) if args.base else ecdh.default_base(C, O)
    params = ecdh.SessionParams(C, base, O)
    rng = random.Random(args.seed) if args.seed is not None else random.SystemRandom()
    t = ecdh.run_session(params, rng)
    out(f"base={params.base} order={params.order} q={C.spec.q}")
    for line in t.lines():
        out(line)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubicfq", description="Plane cubic curves over finite fields.")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    g = sub.add_parser("cubic", help="curve reports").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    x = g.add_parser("info", help="points, singularity and inflexions of a curve file")
    x.add_argument("file")
    x.set_defaults(func=cmd_cubic_info)

    g = sub.add_parser("canon", help="canonical forms").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    x = g.add_parser("build", help="emit a canonical curve file")
    x.add_argument("--family", required=True, choices=canon.FAMILIES)
    x.add_argument("--q", required=True, type=int)
    for name in ("c", "d", "b", "e"):
        x.add_argument(f"--{name}", type=int)
    x.add_argument("--out")
    x.set_defaults(func=cmd_canon_build)

    g = sub.add_parser("group", help="chord-tangent group").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    x = g.add_parser("structure", help="invariant factors")
    x.add_argument("curve")
    x.add_argument("--identity", required=True)
    x.set_defaults(func=cmd_group_structure)
    x = g.add_parser("add", help="P + Q")
    x.add_argument("curve")
    x.add_argument("--identity", required=True)
    x.add_argument("P")
    x.add_argument("Q")
    x.set_defaults(func=cmd_group_add)

    g = sub.add_parser("census", help="classification and point counts").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    x = g.add_parser("run", help="projective census of nonsingular cubics")
    x.add_argument("--q", required=True, type=int)
    x.add_argument("--jobs", type=int, default=1)
    x.set_defaults(func=cmd_census_run)
    x = g.add_parser("spectrum", help="realized traces over the Weierstrass families")
    x.add_argument("--q", required=True, type=int)
    x.set_defaults(func=cmd_census_spectrum)

    g = sub.add_parser("arcs", help="coset arcs").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    x = g.add_parser("build", help="coset of an index-r subgroup")
    x.add_argument("--curve", required=True)
    x.add_argument("--identity", required=True)
    x.add_argument("--r", required=True, type=int)
    x.add_argument("--cutoff", type=int, default=arcs.DEFAULT_CUTOFF)
    x.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; verification is sequential")
    x.set_defaults(func=cmd_arcs_build)
    x = g.add_parser("verify", help="no 3k points on a degree-k curve")
    x.add_argument("--curve", required=True)
    x.add_argument("--points", required=True)
    x.add_argument("--k", required=True, type=int)
    x.add_argument("--cutoff", type=int, default=arcs.DEFAULT_CUTOFF)
    x.set_defaults(func=cmd_arcs_verify)

    g = sub.add_parser("ecdh", help="hidden-identity key exchange simulator").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    x = g.add_parser("demo", help="run both parties and print the transcript")
    x.add_argument("--curve", required=True)
    x.add_argument("--identity", required=True)
    x.add_argument("--base")
    x.add_argument("--seed", type=int)
    x.set_defaults(func=cmd_ecdh_demo)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def out(line):
        print(line, file=stdout)

    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error=usage message={_oneline(exc)}", file=stderr)
        return 2
    try:
        args.func(args, out)
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"error={type(exc).__name__} message={_oneline(exc)}", file=stderr)
        return 1
    return 0


def _oneline(exc) -> str:
    return " ".join(str(exc).split())


if __name__ == "__main__":
    sys.exit(main())

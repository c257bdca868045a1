"""Command-line front end.

Subcommands: neighbors (one vertex), graph (a bounded window exported as
DOT, JSON, or CSV), verify (named check suites), interpolate (multiplicity
polynomials in q).  Exit codes: 0 success, 1 verification or invariant
failure, 2 usage error.  Output for identical flags is byte-identical;
HECKE_THREADS fans the graph command out over a process pool (unset runs
serially, 0 picks the CPU count).
"""

import argparse
import json
import os
import sys
from itertools import combinations_with_replacement

from . import __version__
from .field import make_field
from .hecke import (HeckeParams, InterpolationError, InvariantError,
                    _is_prime_int, format_poly, interpolate_multiplicities,
                    neighbor_multiplicities, parse_shape)
from .reduction import ReductionError, Vertex
from .verify import SUITES


class UsageError(Exception):
    pass


def _add_field_flags(sub, with_vertex=False):
    sub.add_argument("--q", type=int, required=True, help="field characteristic p")
    sub.add_argument("--ext", type=int, default=1, help="extension degree e, q = p^e")
    sub.add_argument("--n", type=int, required=True, help="bundle rank")
    sub.add_argument("--r", type=int, required=True, help="coset type, 1 <= r <= n")
    sub.add_argument("--deg-x", type=int, required=True, help="degree of the place x")
    if with_vertex:
        sub.add_argument("--vertex", required=True,
                         help="comma-separated exponents d1,d2,...")


def _params(args):
    try:
        ctx = make_field(args.q, args.ext)
        return HeckeParams(ctx, args.n, args.r, args.deg_x)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_vertex(text, n):
    try:
        entries = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("cannot parse vertex %r" % text)
    if len(entries) != n:
        raise UsageError("vertex has %d entries, rank is %d" % (len(entries), n))
    v = Vertex(entries)
    if tuple(v) != entries:
        print("warning: vertex %s is not descending; using %r"
              % (text, v), file=sys.stderr)
    return v


def _parse_window(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError("window must look like lo..hi, got %r" % text)
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError("window bounds must be integers, got %r" % text)
    if lo > hi:
        raise UsageError("window lo %d exceeds hi %d" % (lo, hi))
    return lo, hi


def fmt_vertex(v):
    return "(%s)" % ",".join(str(d) for d in v)


def cmd_neighbors(args):
    params = _params(args)
    v = _parse_vertex(args.vertex, params.n)
    for dst, m in sorted(neighbor_multiplicities(params, v).items()):
        print("%s -> %s : %d" % (fmt_vertex(v), fmt_vertex(dst), m))
    return 0


def _window_vertices(n, lo, hi):
    return sorted(Vertex(c) for c in
                  combinations_with_replacement(range(hi, lo - 1, -1), n))


def _graph_worker(job):
    p, e, n, r, dx, v = job
    params = HeckeParams(make_field(p, e), n, r, dx)
    return v, sorted(neighbor_multiplicities(params, v).items())


def _compute_edges(params, vertices):
    ctx = params.ctx
    jobs = [(ctx.p, ctx.e, params.n, params.r, params.dx, v) for v in vertices]
    threads = os.environ.get("HECKE_THREADS")
    if threads is not None and len(jobs) > 1:
        workers = int(threads) or os.cpu_count() or 1
        if workers > 1:
            import multiprocessing
            with multiprocessing.Pool(min(workers, len(jobs))) as pool:
                return list(pool.imap(_graph_worker, jobs))
    return [_graph_worker(job) for job in jobs]


def _render_json(params, vertices, results):
    doc = {
        "params": {"q": params.q, "p": params.ctx.p, "e": params.ctx.e,
                   "n": params.n, "r": params.r, "deg_x": params.dx},
        "vertices": [list(v) for v in vertices],
        "edges": [{"src": list(src), "dst": list(dst), "mult": m}
                  for src, pairs in results for dst, m in pairs],
        "meta": {"version": __version__, "order": "lex"},
    }
    return json.dumps(doc, indent=2) + "\n"


def _render_dot(results):
    lines = ["digraph hecke {"]
    for src, pairs in results:
        for dst, m in pairs:
            lines.append('  "%s" -> "%s" [label="%d"];'
                         % (fmt_vertex(src), fmt_vertex(dst), m))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_csv(results):
    lines = ["src,dst,mult"]
    for src, pairs in results:
        for dst, m in pairs:
            lines.append("%s,%s,%d" % ("|".join(map(str, src)),
                                       "|".join(map(str, dst)), m))
    return "\n".join(lines) + "\n"


def cmd_graph(args):
    params = _params(args)
    lo, hi = _parse_window(args.window)
    vertices = _window_vertices(params.n, lo, hi)
    results = _compute_edges(params, vertices)
    if args.format == "json":
        text = _render_json(params, vertices, results)
    elif args.format == "dot":
        text = _render_dot(results)
    else:
        text = _render_csv(results)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    suite = SUITES[args.suite]
    qs = tuple(int(x) for x in args.qs.split(","))
    if args.suite == "paper-examples":
        results = suite(qs=qs)
    else:
        results = suite(qs=qs, max_n=args.max_n, max_dx=args.max_dx,
                        vertices=args.vertices, seed=args.seed)
    failed = 0
    for name, ok, detail in results:
        if ok:
            print("PASS %s" % name)
        else:
            failed += 1
            print("FAIL %s: %s" % (name, detail))
    print("%d/%d checks passed" % (len(results) - failed, len(results)))
    return 1 if failed else 0


def cmd_interpolate(args):
    if args.shape is None:
        shape = "=".join("d%d" % i for i in range(1, args.n + 1))
    else:
        shape = args.shape
    try:
        parse_shape(shape, args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    qs = [int(x) for x in args.qs.split(",")]
    holdout = args.holdout
    if holdout is None:
        holdout = max(qs) + 1
        while not _is_prime_int(holdout):
            holdout += 1
    table = interpolate_multiplicities(args.n, args.r, args.deg_x, shape,
                                       qs, holdout=holdout)
    for off, coeffs in sorted(table.items()):
        label = "(%s)" % ",".join("%+d" % d for d in off)
        print("%s: %s" % (label, format_poly(coeffs)))
    print("held-out check at q=%d: ok" % holdout)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heckegraph",
        description="Exact Hecke-neighbor graphs on rank-n bundles over P^1")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("neighbors", help="print the edges leaving one vertex")
    _add_field_flags(p, with_vertex=True)
    p.set_defaults(func=cmd_neighbors)

    p = subs.add_parser("graph", help="export a bounded window of the graph")
    _add_field_flags(p)
    p.add_argument("--window", required=True, help="source entry range lo..hi")
    p.add_argument("--format", choices=("dot", "json", "csv"), default="json")
    p.add_argument("--output", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = subs.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--qs", default="2,3", help="comma-separated field sizes")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-dx", type=int, default=2)
    p.add_argument("--vertices", type=int, default=3,
                   help="sampled vertices per parameter combination")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("interpolate",
                        help="fit multiplicity polynomials in q for a chamber")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--deg-x", type=int, required=True)
    p.add_argument("--shape", help='gap pattern such as "d1>d2=d3"')
    p.add_argument("--qs", default="2,3,5,7,11",
                   help="comma-separated sample prime powers")
    p.add_argument("--holdout", type=int,
                   help="validation point (default: next prime after max sample)")
    p.set_defaults(func=cmd_interpolate)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (InvariantError, ReductionError, InterpolationError) as exc:
        print("verification failure: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

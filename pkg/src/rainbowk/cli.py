"""Command-line entry point.

Documents go to standard output (or ``--out``); human summaries go to
standard error. Exit codes: 0 success / positive verdict, 1 negative verdict,
2 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from rainbowk import bounds, constructions, io, oracle, verifier
from rainbowk.constructions import ConstructionParams
from rainbowk.graph import EdgeColoring, Graph

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(path: str) -> io.GraphDocument:
    try:
        return io.decode(_read(path))
    except io.DocumentError as exc:
        raise UsageError(f"malformed graph document: {exc}") from exc


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} needs {', '.join(missing)}")


def cmd_construct(args: argparse.Namespace) -> int:
    fam = args.family
    try:
        if fam == "square":
            _need(args, "ell", "r")
            c = constructions.color_square_multipartite(args.ell, args.r)
        elif fam == "general":
            _need(args, "ell", "r")
            c = constructions.color_general_multipartite(args.ell, args.r, args.vu_rule)
        elif fam == "remainder":
            _need(args, "ell", "r", "p")
            c = constructions.color_with_remainder_part(args.ell, args.r, args.p, args.vu_rule)
        else:
            _need(args, "n", "k")
            c = constructions.color_complete(args.n, args.k, args.extend, args.vu_rule)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write(io.encode(c.graph, c.coloring, c.meta), args.out)
    _note(f"{fam}: {c.graph.vertex_count} vertices, {c.graph.edge_count} edges, "
          f"{len(c.coloring.colors_used())} colours")
    return EXIT_OK


def _params_from_meta(meta: dict[str, Any], n: int) -> ConstructionParams:
    try:
        params = ConstructionParams(int(meta["ell"]), int(meta["r"]), int(meta.get("p", 0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("--per-case needs a document produced by 'construct'") from exc
    if params.vertex_count != n:
        raise UsageError("--per-case: construction metadata does not match the graph "
                         "(extended K_n documents have no case structure)")
    return params


def cmd_verify(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    doc = _load(args.graph)
    if doc.coloring is None:
        raise UsageError("graph document carries no colouring")
    params = _params_from_meta(doc.meta, doc.graph.vertex_count) if args.per_case else None
    report = verifier.verify_rck(doc.graph, doc.coloring, args.k, args.certificates,
                                 params, workers=args.threads, meta=doc.meta)
    _write(report.to_json(), args.out)
    _note(f"k={args.k} global_min={report.global_min} verdict={report.verdict}")
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    doc = _load(args.graph)
    try:
        res = oracle.exact_rck(doc.graph, args.k, args.max_colors, args.budget,
                               symmetry=not args.no_symmetry)
    except oracle.BudgetExceeded as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        _note(str(exc))
        return EXIT_FALSE
    _write(res.to_json(), args.out)
    _note(f"rc_{args.k} = {res.rck} ({res.colorings_examined} colourings examined)")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        rows = bounds.bounds_table(args.k_min, args.k_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.csv:
        _write(bounds.to_csv(rows), args.out)
    else:
        first = bounds.crossover(rows)
        lines = [f"{'k':>8} {'r0':>6} {'ell0':>6} {'f(k)':>12} {'(k+1)^2':>14} {'ratio':>10}"]
        for row in rows:
            mark = "  <- first f(k) < (k+1)^2" if row.k == first else ""
            lines.append(f"{row.k:>8} {row.r0:>6} {row.ell0:>6} {row.f_k:>12} "
                         f"{row.chartrand:>14} {row.ratio:>10.6f}{mark}")
        _write("\n".join(lines) + "\n", args.out)
    disagree = [row.k for row in rows if not row.forms_agree]
    if disagree:
        _note(f"simplified ell0 differs from the max-form at k={disagree}")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    doc = _load(args.graph)
    if args.dot:
        _write(io.to_dot(doc.graph, doc.coloring), args.out)
    else:
        _write(io.encode(doc.graph, doc.coloring, doc.meta), args.out)
    return EXIT_OK


def _certificates(payload: Any) -> list[verifier.DisjointPathCertificate]:
    if isinstance(payload, dict) and "certificates" in payload:
        payload = payload["certificates"]
    if isinstance(payload, dict):
        payload = [payload]
    if not isinstance(payload, list):
        raise UsageError("certificate file must hold a certificate, a list, or a report")
    try:
        return [verifier.DisjointPathCertificate.from_dict(d) for d in payload]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from exc


def cmd_check_cert(args: argparse.Namespace) -> int:
    doc = _load(args.graph)
    if doc.coloring is None:
        raise UsageError("graph document carries no colouring")
    try:
        payload = json.loads(_read(args.cert))
    except json.JSONDecodeError as exc:
        raise UsageError(f"certificate file is not JSON: {exc}") from exc
    certs = _certificates(payload)
    bad = 0
    for cert in certs:
        res = verifier.check_certificate(doc.graph, doc.coloring, cert)
        if not res:
            bad += 1
            _note(f"certificate ({cert.u}, {cert.v}) rejected: {res.reason}")
    _note(f"{len(certs) - bad}/{len(certs)} certificates valid")
    return EXIT_OK if bad == 0 else EXIT_FALSE


def random_colored_graph(n: int, edge_prob: float, colors: int, seed: int) -> tuple[Graph, EdgeColoring]:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
    g = Graph(n, edges)
    return g, EdgeColoring(g, {e: rng.randint(1, colors) for e in edges}, colors)


def cmd_sample(args: argparse.Namespace) -> int:
    if args.n < 1 or args.colors < 1 or not 0.0 <= args.edge_prob <= 1.0:
        raise UsageError("need n >= 1, colors >= 1 and 0 <= edge-prob <= 1")
    g, c = random_colored_graph(args.n, args.edge_prob, args.colors, args.seed)
    meta = {"family": "sample", "seed": args.seed, "edge_prob": args.edge_prob}
    _write(io.encode(g, None if args.uncolored else c, meta), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit an explicit 2-colouring")
    p.add_argument("--family", required=True,
                   choices=["square", "general", "remainder", "complete"])
    p.add_argument("--ell", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--vu-rule", choices=constructions.VU_RULES,
                   default=constructions.DEFAULT_VU_RULE)
    p.add_argument("--extend", action="store_true",
                   help="complete family: colour all of K_n, not just the multipartite subgraph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="count disjoint rainbow paths for every pair")
    p.add_argument("--graph", required=True, help="document path or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certificates", action="store_true")
    p.add_argument("--per-case", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact rc_k of a tiny graph by exhaustion")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-colors", type=int, required=True)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bounds", help="f(k) against (k+1)^2")
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("export", help="re-emit a document, or DOT with --dot")
    p.add_argument("--graph", required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("check-cert", help="check disjoint rainbow path certificates")
    p.add_argument("--graph", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_check_cert)

    p = sub.add_parser("sample", help="random coloured graph for oracle fixtures")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--colors", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--uncolored", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

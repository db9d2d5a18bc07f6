"""Command-line front end.

Exit status: 0 success / all checks pass, 1 a verification failed,
2 input error. JSON goes to stdout (or ``--out``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from pathlib import Path

from gael.corpus import random_corpus
from gael.entropy import closed_form_entropy, entropy_estimate, spectral_radius, verify_chain
from gael.exact import entry_norm, is_nilpotent
from gael.filtration import dim_sequence
from gael.graph import Graph, GraphError, adjacency_matrix, parse_edge_list, parse_graph, to_document
from gael.resolvent import cauchy_error_report
from gael.suite import run_checks

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def load_graph(path: str, fmt: str = "auto") -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "edgelist"
    try:
        return parse_graph(text) if fmt == "json" else parse_edge_list(text)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _report(g_id: str, command: str, params: dict, results, started: float) -> dict:
    return {
        "graph_id": g_id,
        "command": command,
        "parameters": params,
        "results": results,
        "duration_s": round(time.perf_counter() - started, 6),
    }


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(args, report: dict) -> None:
    _emit(args, json.dumps(report, indent=2) + "\n")


def _emit_csv(args, header: list[str], rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _emit(args, buf.getvalue())


def cmd_info(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.graph, args.graph_format)
    A = adjacency_matrix(g)
    results = {
        "n_vertices": g.n,
        "n_edges": len(g.edges),
        "vertices": list(g.vertices),
        "sinks": list(g.sinks),
        "sources": list(g.sources),
        "regular": list(g.regular),
        "X": to_document(g).get("X"),
        "adjacency": A.tolist(),
        "nilpotent": is_nilpotent(A),
    }
    _emit_json(args, _report(g.graph_id, "info", {"graph": args.graph}, results, started))
    return EXIT_OK


def cmd_dims(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.graph, args.graph_format)
    if args.kmax < 0:
        raise InputError("--kmax must be nonnegative")
    seq = dim_sequence(g, args.kind, args.kmax)
    if args.format == "csv":
        _emit_csv(args, ["k", "dim"], enumerate(seq.dims))
        return EXIT_OK
    params = {"kind": args.kind, "kmax": args.kmax}
    results = {
        "kind": seq.kind,
        "X": list(seq.X),
        "dims": [str(d) for d in seq.dims],
        "finite_dimensional": seq.finite_dimensional,
    }
    _emit_json(args, _report(g.graph_id, "dims", params, results, started))
    return EXIT_OK


def cmd_entropy(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.graph, args.graph_format)
    if args.kmax < 10:
        raise InputError("--kmax must be at least 10")
    scale = 1.0 if args.base == "e" else 1 / math.log(2)
    kinds = ("path", "cohn", "leavitt")
    reports = {kind: entropy_estimate(dim_sequence(g, kind, args.kmax)) for kind in kinds}
    if args.format == "csv":
        per_k = {kind: dict(rep.per_k) for kind, rep in reports.items()}
        rows = [
            [k] + [_fmt(per_k[kind].get(k, 0.0) * scale) for kind in kinds]
            for k in range(1, args.kmax + 1)
        ]
        _emit_csv(args, ["k", "h_path", "h_cohn", "h_leavitt"], rows)
        return EXIT_OK
    chain = verify_chain(g, args.kmax, args.tol)
    A = adjacency_matrix(g)
    est = spectral_radius(A)
    results = {
        "unit": "nats" if args.base == "e" else "bits",
        "tail_estimates": {kind: rep.tail_estimate * scale for kind, rep in reports.items()},
        "window_max": {kind: rep.window_max * scale for kind, rep in reports.items()},
        "closed_form": closed_form_entropy(A) * scale,
        "spectral_radius": {"rho": est.rho, "lower": est.lower, "upper": est.upper},
        "chain_ok": chain.chain_ok,
        "sandwich_ok": chain.sandwich_ok,
    }
    params = {"kmax": args.kmax, "tol": args.tol, "base": args.base}
    _emit_json(args, _report(g.graph_id, "entropy", params, results, started))
    return EXIT_OK


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _parse_corpus(spec: str) -> tuple[int, int]:
    try:
        n, seed = (int(p) for p in spec.split(","))
    except ValueError:
        raise InputError(f"--corpus expects N,SEED, got {spec!r}") from None
    return n, seed


def cmd_verify(args) -> int:
    started = time.perf_counter()
    if (args.graph is None) == (args.corpus is None):
        raise InputError("give exactly one of GRAPH or --corpus N,SEED")
    if args.corpus:
        n, seed = _parse_corpus(args.corpus)
        graphs = random_corpus(n, seed)
        g_id = f"corpus:{n},{seed}"
    else:
        graphs = [load_graph(args.graph, args.graph_format)]
        g_id = graphs[0].graph_id
    results = []
    for g in graphs:
        checks = run_checks(g, args.kmax, args.oracle_k, args.tol, corrupt=args.corrupt_dims)
        results.append({"graph_id": g.graph_id, "graph": to_document(g), "checks": checks})
    all_ok = all(c["ok"] for r in results for c in r["checks"].values())
    params = {"kmax": args.kmax, "oracle_k": args.oracle_k, "tol": args.tol, "corpus": args.corpus}
    _emit_json(args, _report(g_id, "verify", params, {"all_ok": all_ok, "graphs": results}, started))
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_cauchy(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.graph, args.graph_format)
    A = adjacency_matrix(g)
    r = float(entry_norm(A) + 1) if args.r is None else args.r
    try:
        rep = cauchy_error_report(A, args.k, r, args.nodes)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    results = {
        "reconstruction": [[[z.real, z.imag] for z in row] for row in rep.reconstruction],
        "exact_power_rounds_back": rep.rounded_exact,
        "max_error": rep.max_error,
        "max_imag": rep.max_imag,
        "aliasing_bound": rep.bound if math.isfinite(rep.bound) else None,
        "within_bound": rep.ok,
    }
    params = {"k": args.k, "r": r, "nodes": args.nodes}
    _emit_json(args, _report(g.graph_id, "cauchy", params, results, started))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gael", description="Algebraic entropy of path, Cohn and Leavitt path algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, graph=True, graph_optional=False):
        p = sub.add_parser(name, help=help_)
        if graph:
            p.add_argument("graph", nargs="?" if graph_optional else None, help="graph file (JSON document or edge list)")
        p.add_argument("--graph-format", choices=["auto", "json", "edgelist"], default="auto")
        p.add_argument("--out", help="write the report to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "vertex classes, adjacency matrix, nilpotency")

    p = add("dims", cmd_dims, "graded dimensions of a standard filtration")
    p.add_argument("--kind", choices=["path", "cohn", "leavitt", "relative"], default="path")
    p.add_argument("--kmax", type=int, default=200)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = add("entropy", cmd_entropy, "entropy estimates and the closed form log rho(A)")
    p.add_argument("--kmax", type=int, default=200)
    p.add_argument("--tol", type=float, default=0.05)
    p.add_argument("--base", choices=["e", "2"], default="e")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = add("verify", cmd_verify, "run every property check", graph_optional=True)
    p.add_argument("--corpus", metavar="N,SEED", help="seeded random corpus instead of a graph file")
    p.add_argument("--kmax", type=int, default=200)
    p.add_argument("--oracle-k", type=int, default=4)
    p.add_argument("--tol", type=float, default=0.05)
    p.add_argument("--corrupt-dims", action="store_true", help=argparse.SUPPRESS)

    p = add("cauchy", cmd_cauchy, "reconstruct A^k from the resolvent contour integral")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--r", type=float, default=None, help="contour radius (default ||A|| + 1)")
    p.add_argument("--nodes", type=int, default=512)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError) as exc:
        print(f"gael {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

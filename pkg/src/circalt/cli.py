"""Command-line frontend. Every subcommand prints one JSON document (sorted keys).

Exit codes: 0 success, 1 usage or precondition error, 2 verification
failure, 3 a computation contradicted a proved theorem or the conjecture.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from . import graph_core as gc
from .corpus import resolve_graph

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_THEOREM = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, float) and math.isinf(obj):
        return "Infinity" if obj > 0 else "-Infinity"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2)


def _graph(spec: str) -> gc.Graph:
    try:
        return resolve_graph(spec)[0]
    except (gc.Graph6Error, ValueError) as exc:
        raise UsageError(f"cannot read graph {spec!r}: {exc}") from exc


def _write_certs(path: str | None, certs: list[dict]) -> None:
    if path:
        doc = certs[0] if len(certs) == 1 else certs
        Path(path).write_text(dumps(doc) + "\n")


# --- subcommands -------------------------------------------------------------


def cmd_invariants(args) -> tuple[int, Any]:
    g = _graph(args.graph)
    clique = gc.max_clique(g)
    chi, colouring = gc.optimal_colouring(g)
    comps = gc.components(g)
    rows = [
        {"invariant": "order", "value": g.n, "witness": None},
        {"invariant": "size", "value": g.num_edges, "witness": None},
        {"invariant": "connected", "value": gc.is_connected(g), "witness": comps},
        {"invariant": "girth", "value": gc.girth(g), "witness": None},
        {"invariant": "odd_girth", "value": gc.odd_girth(g), "witness": None},
        {"invariant": "clique_number", "value": len(clique), "witness": sorted(clique)},
        {"invariant": "chromatic_number", "value": chi, "witness": colouring},
    ]
    return EXIT_OK, {"graph6": gc.emit_graph6(g), "invariants": rows}


def cmd_myc(args) -> tuple[int, Any]:
    from .mycielski import iterated_mycielskian

    if args.r < 0:
        raise UsageError("--r must be non-negative")
    lg = iterated_mycielskian(_graph(args.base), args.r)
    labels = {i: s for i, s in enumerate(lg.label_strings())}
    g6 = gc.emit_graph6(lg.graph)
    if args.labels:
        Path(args.labels).write_text(dumps(labels) + "\n")
    return EXIT_OK, {"graph6": g6, "n": lg.n, "edges": lg.graph.num_edges, "r": args.r, "labels": labels}


def cmd_altitude(args) -> tuple[int, Any]:
    from .altitude import EXHAUSTIVE, circular_altitude_bounds, circular_altitude_exact
    from .certificates import exact_certificate, ordering_certificate

    g = _graph(args.graph)
    if args.anneal_steps and args.seed is None:
        raise UsageError("--anneal-steps needs an explicit --seed")
    if args.exact:
        res = circular_altitude_exact(g, budget=args.budget, jobs=args.jobs)
        if res.exact and res.method == EXHAUSTIVE:
            res.certificates.append(exact_certificate(g, res))
        elif res.witness_ordering is not None:
            res.certificates.append(ordering_certificate(g, res.witness_ordering))
    else:
        labelled = resolve_graph(args.graph)[1]
        res = circular_altitude_bounds(
            g, budget=args.budget, labelled=labelled, seed=args.seed, anneal_steps=args.anneal_steps
        )
    out = res.to_dict()
    _write_certs(args.cert_out, out.get("certificates", []))
    return EXIT_OK, out


def cmd_chi_c(args) -> tuple[int, Any]:
    from .certificates import pq_certificate
    from .circular_colouring import circular_colouring_optimum

    g = _graph(args.graph)
    frac, pq = circular_colouring_optimum(g)
    cert = pq_certificate(g, pq).to_dict()
    _write_certs(args.cert_out, [cert])
    return EXIT_OK, {"chi_c": str(frac), "p": frac.numerator, "q": frac.denominator, "certificate": cert}


def cmd_pq_colour(args) -> tuple[int, Any]:
    from .certificates import pq_certificate
    from .circular_colouring import find_pq_colouring

    if args.p < 1 or args.q < 1:
        raise UsageError("--p and --q must be positive")
    g = _graph(args.graph)
    found = find_pq_colouring(g, args.p, args.q)
    out: dict[str, Any] = {"p": args.p, "q": args.q, "feasible": found is not None}
    if found is not None:
        out["certificate"] = pq_certificate(g, found).to_dict()
        _write_certs(args.cert_out, [out["certificate"]])
    return EXIT_OK, out


def cmd_powerful(args) -> tuple[int, Any]:
    from .circular_colouring import TheoremViolation
    from .powerful import PreconditionError, build_powerful_ordering, oddgirth_certificate, verify_powerful

    if args.r < 0:
        raise UsageError("--r must be non-negative")
    g = _graph(args.graph)
    _, colouring = gc.optimal_colouring(g)
    po = build_powerful_ordering(g, colouring, args.r)
    names = po.labelled.label_strings()
    out: dict[str, Any] = {
        "r": args.r,
        "ordering": list(po.ordering.perm),
        "labels": [names[i] for i in po.ordering.perm],
        "report": verify_powerful(po, po.labelled),
    }
    try:
        cert = oddgirth_certificate(g, args.r).to_dict()
    except PreconditionError as exc:
        out["error"] = {"type": "precondition", "message": str(exc)}
        return EXIT_USAGE, out
    except TheoremViolation as exc:
        out["error"] = {"type": "theorem-violation", "message": str(exc)}
        return EXIT_THEOREM, out
    out["certificate"] = cert
    _write_certs(args.cert_out, [cert])
    return EXIT_OK, out


def _load_colouring(text: str) -> list[int]:
    path = Path(text)
    if len(text) < 256 and path.is_file():
        text = path.read_text()
    try:
        col = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--colouring is not JSON: {exc}") from exc
    if not isinstance(col, list) or not all(isinstance(c, int) for c in col):
        raise UsageError("--colouring must be a JSON array of integers")
    return col


def cmd_zigzag(args) -> tuple[int, Any]:
    from .certificates import zigzag_certificate
    from .circular_colouring import TheoremViolation, zigzag_witness

    from .altitude import zigzag_lower_bound

    g = _graph(args.graph)
    labelled = resolve_graph(args.graph)[1]
    col = _load_colouring(args.colouring)
    if len(col) != g.n or not gc.is_proper_colouring(g, col):
        raise UsageError("--colouring is not a proper colouring of the graph")
    chi = gc.chromatic_number(g)
    t = args.t if args.t is not None else chi
    try:
        w = zigzag_witness(g, col, t)
    except TheoremViolation as exc:
        # existence is only guaranteed for M^r of a complete graph or odd cycle, t <= chi
        guaranteed = labelled is not None and zigzag_lower_bound(labelled.base, labelled.r) is not None
        if t > chi or not guaranteed:
            return EXIT_OK, {"t": t, "witness": None, "message": str(exc)}
        return EXIT_THEOREM, {"t": t, "error": {"type": "theorem-violation", "message": str(exc)}}
    cert = zigzag_certificate(g, col, t, w).to_dict()
    _write_certs(args.cert_out, [cert])
    return EXIT_OK, {"t": t, "witness": w.to_dict(), "vertices": w.vertices, "certificate": cert}


def cmd_conjecture(args) -> tuple[int, Any]:
    from .certificates import ordering_certificate
    from .search import AnnealConfig, anneal_min_max_cycle

    g = _graph(args.graph)
    try:
        cfg = AnnealConfig(seed=args.seed, restarts=args.restarts, steps=args.steps)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    # the conjecture for M^3(K6) is alpha = chi = 9, so by default anything
    # at or below chi - 1 counts as a counterexample
    threshold = args.threshold if args.threshold is not None else gc.chromatic_number(g) - 1
    report = anneal_min_max_cycle(g, cfg)
    out = {"graph": args.graph, "threshold": threshold, "report": report.to_dict()}
    if report.best_value <= threshold:
        cert = ordering_certificate(g, report.best_ordering, kind="anneal").to_dict()
        out["verdict"] = "counterexample"
        out["certificate"] = cert
        _write_certs(args.cert_out, [cert])
        return EXIT_THEOREM, out
    out["verdict"] = "consistent"
    return EXIT_OK, out


def cmd_verify_cert(args) -> tuple[int, Any]:
    from .certificates import verify_certificate

    try:
        doc = json.loads(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from exc
    docs = doc if isinstance(doc, list) else [doc]
    results = []
    for d in docs:
        ok, reason = verify_certificate(d) if isinstance(d, dict) else (False, "not an object")
        results.append({"ok": ok, "reason": reason, "kind": d.get("kind") if isinstance(d, dict) else None})
    ok = all(r["ok"] for r in results)
    return (EXIT_OK if ok else EXIT_VERIFY), {"ok": ok, "results": results}


def cmd_theorems(args) -> tuple[int, Any]:
    from .theorems import run_suite

    claims = run_suite(quick=not args.full)
    ok = all(c.passed for c in claims)
    return (EXIT_OK if ok else EXIT_THEOREM), {"passed": ok, "claims": [c.to_dict() for c in claims]}


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="circalt", description="Circular altitude and related graph invariants.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    graph_help = "built-in name (K5, C7, Petersen, Grotzsch, M3K6, ...), graph6 string, or graph6 file"

    def with_graph(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help=graph_help)
        sp.set_defaults(func=fn)
        return sp

    def cert_out(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--cert-out", help="also write the certificate(s) to this file")

    with_graph("invariants", cmd_invariants, "order, size, connectivity, girths, clique and chromatic number")

    sp = sub.add_parser("myc", help="iterated Mycielskian as graph6 plus labels")
    sp.add_argument("--base", required=True, help=graph_help)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--labels", help="write the index -> label sidecar JSON here")
    sp.set_defaults(func=cmd_myc)

    sp = with_graph("altitude", cmd_altitude, "circular altitude, exact or as an interval")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--bounds", action="store_true")
    sp.add_argument("--budget", type=int, default=50_000_000, help="search-node budget")
    sp.add_argument("--seed", type=int, help="seed for annealing upper bounds")
    sp.add_argument("--anneal-steps", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    cert_out(sp)

    cert_out(with_graph("chi-c", cmd_chi_c, "circular chromatic number with a (p,q)-colouring"))

    sp = with_graph("pq-colour", cmd_pq_colour, "search for a (p,q)-colouring")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    cert_out(sp)

    sp = with_graph("powerful", cmd_powerful, "powerful ordering of M^r(G) and the odd-girth certificate")
    sp.add_argument("--r", type=int, required=True)
    cert_out(sp)

    sp = with_graph("zigzag", cmd_zigzag, "alternating complete bipartite witness for a colouring")
    sp.add_argument("--colouring", required=True, help="JSON array (or file) of colours per vertex")
    sp.add_argument("--t", type=int, help="number of colours to alternate (default: chromatic number)")
    cert_out(sp)

    sp = sub.add_parser("conjecture", help="annealing search for a low circular ordering")
    sp.add_argument("--graph", default="M3K6", help=graph_help)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--steps", type=int, default=1_000_000)
    sp.add_argument("--restarts", type=int, default=1)
    sp.add_argument("--threshold", type=int, help="counterexample at or below this value (default: chi - 1)")
    cert_out(sp)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("verify-cert", help="re-check a certificate from its payload alone")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_verify_cert)

    sp = sub.add_parser("theorems", help="run the consistency suite on the built-in corpus")
    sp.add_argument("--full", action="store_true", help="larger corpus and more samples")
    sp.set_defaults(func=cmd_theorems)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, out = args.func(args)
    except UsageError as exc:
        code, out = EXIT_USAGE, {"error": {"type": "usage", "message": str(exc)}}
    print(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())

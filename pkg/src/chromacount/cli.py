"""Command-line surface.

Subcommands: count, verify, certificate, scan, bounds.  Reports are JSON
lines on stdout (or --out); `count` also speaks csv and plain text.  Exit
codes are a stable contract: 0 ok, 2 internal cross-check mismatch, 3
mathematical violation found, 64 usage error, 65 cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import multiprocessing
import os
import sys
from fractions import Fraction

from . import counting
from .certificates import build_certificate, explicit_weak_bound, phi, verify_certificate
from .counting import independence_number, maximum_independent_set
from .errors import CapExceededError, Graph6ParseError, InvalidParameterError, UnsupportedSizeError
from .graphs import (
    DEFAULT_ENUM_CAP,
    ENUM_CAP_ENV,
    Graph,
    classify,
    enumerate_regular,
    mask_of,
    parse_graph6,
    target_from_edges,
    vertices_of,
    write_graph6,
)
from .kdd import eta, m_count
from .records import RecordStore
from .verdicts import Verdict, alon_kahn_verdict, conjecture_verdict, constrained_scan, hom_conjecture_verdict, reference_bound

EXIT_OK = 0
EXIT_CROSSCHECK = 2
EXIT_VIOLATION = 3
EXIT_USAGE = 64
EXIT_CAP = 65

__version__ = "0.1.0"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the contract wants 64
    def error(self, message):
        raise UsageError(message)


def _read_graph_lines(path: str) -> list[str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    lines = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith(">>graph6<<"):
            line = line.removeprefix(">>graph6<<").strip()
            if not line:
                continue
        lines.append(line)
    return lines


def _read_graphs(path: str) -> list[Graph]:
    return [parse_graph6(line) for line in _read_graph_lines(path)]


def _load_target(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return target_from_edges(data["k"], [tuple(e) for e in data["edges"]])


def _emit(records: list[dict], out: str | None) -> None:
    text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    try:
        graphs = _read_graphs(args.graph)
    except Graph6ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = []
    mismatch = False
    for g in graphs:
        rec = {
            "type": "count",
            "graph6": write_graph6(g),
            "n": g.n,
            "d": classify(g).degree,
            "q": args.q,
            "method": args.method,
        }
        try:
            if args.method == "both":
                back = counting.count_colorings(g, args.q, "backtrack")
                poly = counting.count_colorings(g, args.q, "polynomial")
                rec["value"] = str(back)
                rec["polynomial_value"] = str(poly)
                rec["cross_check"] = "ok" if back == poly else "mismatch"
                if back != poly:
                    mismatch = True
            else:
                rec["value"] = str(counting.count_colorings(g, args.q, args.method))
        except CapExceededError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CAP
        records.append(rec)
    if args.format == "json":
        _emit(records, args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["graph6", "n", "q", "method", "value"])
        for rec in records:
            writer.writerow([rec["graph6"], rec["n"], rec["q"], rec["method"], rec["value"]])
        (open(args.out, "w") if args.out else sys.stdout).write(buf.getvalue())
    else:
        lines = "".join(f"{rec['graph6']} q={rec['q']} {rec['value']}\n" for rec in records)
        (open(args.out, "w") if args.out else sys.stdout).write(lines)
    return EXIT_CROSSCHECK if mismatch else EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verdict_record(v: Verdict, n: int, d: int, q: int | None) -> dict:
    return {
        "type": "verdict",
        "graph6": v.graph6,
        "n": n,
        "d": d,
        "q": q,
        "target": v.target,
        "holds": v.holds,
        "equality": v.equality,
        "slack_log2": None if math.isinf(v.slack_log2) else v.slack_log2,
        "comparisons": [
            {
                "lhs_base": str(c.lhs_base),
                "lhs_exp": c.lhs_exp,
                "rhs_base": str(c.rhs_base),
                "rhs_exp": c.rhs_exp,
                "holds": c.holds,
                "equality": c.equality,
            }
            for c in v.comparisons
        ],
    }


def _verify_one(task) -> dict:
    line, q, target, h_data = task
    g = parse_graph6(line)
    cls = classify(g)
    if cls.degree is None or cls.degree < 2:
        return {"type": "skipped", "graph6": line, "n": g.n, "reason": "not regular with d >= 2"}
    if target == "colorings":
        v = conjecture_verdict(g, q)
    elif target == "indsets":
        v = alon_kahn_verdict(g)
    else:
        h = target_from_edges(h_data["k"], [tuple(e) for e in h_data["edges"]])
        v = hom_conjecture_verdict(g, h)
    return _verdict_record(v, g.n, cls.degree, q if target == "colorings" else None)


def cmd_verify(args) -> int:
    try:
        lines = _read_graph_lines(args.graphs)
        for line in lines:
            parse_graph6(line)
    except Graph6ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    target = args.target
    h_data = None
    if target.startswith("hom:"):
        with open(target[4:], "r", encoding="utf-8") as fh:
            h_data = json.load(fh)
        target = "hom"
    elif target not in ("colorings", "indsets"):
        print(f"error: unknown target {target!r}", file=sys.stderr)
        return EXIT_USAGE
    if target == "colorings" and args.q is None:
        print("error: --q is required for --target colorings", file=sys.stderr)
        return EXIT_USAGE

    tasks = [(line, args.q, target, h_data) for line in lines]
    if args.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(_verify_one, tasks)
    else:
        results = [_verify_one(t) for t in tasks]
    results.sort(key=lambda r: r["graph6"])

    failures = [r for r in results if r["type"] == "verdict" and not r["holds"]]
    if failures:
        # counterexamples are the most valuable output: write them first
        bundle = (args.out + ".counterexamples.json") if args.out else "counterexamples.json"
        with open(bundle, "w", encoding="utf-8") as fh:
            json.dump(failures, fh, indent=2, sort_keys=True)
    summary = {
        "type": "summary",
        "total": len(results),
        "verdicts": sum(1 for r in results if r["type"] == "verdict"),
        "holds": sum(1 for r in results if r["type"] == "verdict" and r["holds"]),
        "equality": sum(1 for r in results if r["type"] == "verdict" and r["equality"]),
        "failures": len(failures),
        "skipped": sum(1 for r in results if r["type"] == "skipped"),
    }
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["graph6", "n", "d", "q", "target", "holds", "equality", "slack_log2"])
        for r in results:
            if r["type"] == "verdict":
                writer.writerow([r["graph6"], r["n"], r["d"], r["q"], r["target"], r["holds"], r["equality"], r["slack_log2"]])
        (open(args.out, "w") if args.out else sys.stdout).write(buf.getvalue())
    else:
        _emit(results + [summary], args.out)
    return EXIT_VIOLATION if failures else EXIT_OK


# ---------------------------------------------------------------------------
# certificate
# ---------------------------------------------------------------------------

def cmd_certificate(args) -> int:
    try:
        graphs = _read_graphs(args.graph)
    except Graph6ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if len(graphs) != 1:
        print("error: --graph must supply exactly one graph", file=sys.stderr)
        return EXIT_USAGE
    g = graphs[0]
    cls = classify(g)
    if cls.degree is None or cls.degree < 2:
        print("error: certificate requires a d-regular graph with d >= 2", file=sys.stderr)
        return EXIT_USAGE
    if args.indset == "auto":
        indset = mask_of(maximum_independent_set(g))
    else:
        try:
            verts = [int(tok) for tok in args.indset.split(",") if tok.strip() != ""]
        except ValueError:
            print("error: --indset must be a comma-separated vertex list or 'auto'", file=sys.stderr)
            return EXIT_USAGE
        if not verts or any(not 0 <= v < g.n for v in verts):
            print("error: --indset vertices out of range", file=sys.stderr)
            return EXIT_USAGE
        indset = mask_of(verts)
    p = phi(cls.degree, args.q)
    try:
        cert = build_certificate(g, indset, p)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify_certificate(g, cert)
    rec = {
        "type": "certificate",
        "graph6": write_graph6(g),
        "n": g.n,
        "d": cls.degree,
        "q": args.q,
        "phi": p,
        "indset": vertices_of(cert.source_mask),
        "t": vertices_of(cert.t_mask),
        "d_set": vertices_of(cert.d_mask),
        "trace": [[u, gain] for u, gain in cert.trace],
        "checks": [{"name": c.name, "pass": c.passed, "slack": c.slack} for c in report.checks],
        "passed": report.passed,
    }
    _emit([rec], args.out)
    return EXIT_OK if report.passed else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def cmd_scan(args) -> int:
    if args.source == "gen":
        try:
            family = list(enumerate_regular(args.n, args.d))
        except CapExceededError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CAP
        except InvalidParameterError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        if not args.graphs:
            print("error: --source file requires --graphs", file=sys.stderr)
            return EXIT_USAGE
        try:
            family = _read_graphs(args.graphs)
        except Graph6ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        result = constrained_scan(family, args.q, args.eps)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = [
        {"type": "scan-row", "graph6": r.graph6, "n": result.n, "d": result.d, "q": args.q, "alpha": r.alpha, "value": str(r.count)}
        for r in result.rows
    ]
    records.append(
        {
            "type": "scan-max",
            "n": result.n if family else args.n,
            "d": result.d if family else args.d,
            "q": args.q,
            "eps": str(result.eps),
            "family_size": len(family),
            "filtered": len(result.rows),
            "max": str(result.max_count),
            "argmax": result.argmax,
        }
    )
    if args.records:
        n_val = result.n if family else args.n
        d_val = result.d if family else args.d
        store = RecordStore(args.records, __version__)
        improved = store.update(n_val, d_val, args.q, str(result.eps), result.max_count, result.argmax)
        store.save()
        records[-1]["record_improved"] = improved
    _emit(records, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def _log2(x) -> float | None:
    if x is None or x <= 0:
        return None
    if isinstance(x, Fraction):
        return math.log2(x.numerator) - math.log2(x.denominator)
    return math.log2(x)


def cmd_bounds(args) -> int:
    try:
        ref = reference_bound(args.n, args.d, args.q)
        weak = explicit_weak_bound(args.n, args.d, args.q) if args.q >= 3 else None
        weak_eps = (
            explicit_weak_bound(args.n, args.d, args.q, args.eps)
            if (weak is not None and args.eps is not None)
            else None
        )
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    head = {
        "type": "bounds",
        "n": args.n,
        "d": args.d,
        "q": args.q,
        "eps": None if args.eps is None else str(args.eps),
        "reference_base": str(ref.base),
        "reference_exp": [ref.exp_num, ref.exp_den],
        "reference_log2": _log2(Fraction(ref.base)) * ref.exp_num / ref.exp_den if ref.base else None,
        "idealized_log2": math.log2(eta(args.q)) * args.n / 2 + math.log2(m_count(args.q)) * args.n / (2 * args.d),
        "eta_pow_log2": math.log2(eta(args.q)) * args.n / 2,
        "weak_bound_log2": _log2(weak),
        "weak_bound_eps_log2": _log2(weak_eps),
    }
    records = [head]
    violation = False
    if args.graphs:
        try:
            graphs = _read_graphs(args.graphs)
        except Graph6ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        for g in graphs:
            cls = classify(g)
            row = {"type": "bounds-row", "graph6": write_graph6(g), "n": g.n, "d": cls.degree, "q": args.q}
            if cls.degree != args.d or g.n != args.n:
                row["skipped"] = "does not match --n/--d"
                records.append(row)
                continue
            exact = counting.count_colorings(g, args.q)
            row["exact"] = str(exact)
            row["alpha"] = independence_number(g)
            if weak is not None:
                ok = Fraction(exact) <= weak
                row["below_weak_bound"] = ok
                violation = violation or not ok
            if weak_eps is not None:
                eps_frac = Fraction(str(args.eps))
                if Fraction(2 * row["alpha"]) <= Fraction(g.n) * (1 - eps_frac):
                    ok = Fraction(exact) <= weak_eps
                    row["below_weak_bound_eps"] = ok
                    violation = violation or not ok
            records.append(row)
    _emit(records, args.out)
    return EXIT_VIOLATION if violation else EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromacount", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact coloring counts for graph6 input")
    p.add_argument("--graph", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=["backtrack", "polynomial", "both"], default="backtrack")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="batch verdicts against the K_{d,d} reference")
    p.add_argument("--graphs", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--q", type=int)
    p.add_argument("--target", default="colorings", help="colorings | indsets | hom:H-file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certificate", help="greedy container certificate for one graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--indset", default="auto", help="comma-separated vertices, or auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("scan", help="constrained maximum of c_q over a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--eps", default="0")
    p.add_argument("--source", choices=["gen", "file"], default="gen")
    p.add_argument("--graphs", help="graph6 file for --source file")
    p.add_argument("--records", help="path of the persistent best-known store")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bounds", help="reference and explicit weak bounds side by side")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--eps", type=float)
    p.add_argument("--graphs", help="optional graph6 file for exact columns")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidParameterError, UnsupportedSizeError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

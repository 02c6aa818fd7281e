"""Command-line entry point.

Exit codes: 0 all checks passed, 1 a violation (or a certificate that does
not re-validate) was emitted, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence, TextIO

from . import lab
from .graph import (
    ENUMERATION_MAX_N,
    Graph,
    Graph6Error,
    GraphError,
    UnsupportedSize,
    enumerate_all,
    enumerate_connected,
    normalize_edges,
    parse_graph6,
    to_graph6,
)
from .patterns import parse_graph_name, parse_pattern

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_edges(text: str, n: int | None) -> tuple[Graph, list[str]]:
    edges = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        try:
            a, b = (int(x) for x in tok.split("-"))
        except ValueError:
            raise UsageError(f"bad edge {tok!r}; expected u-v")
        edges.append((a, b))
    size = n if n is not None else 1 + max((max(e) for e in edges), default=-1)
    try:
        return normalize_edges(size, edges)
    except GraphError as exc:
        raise UsageError(str(exc))


def _hosts(args) -> Iterator[tuple[str, Graph, list[str]]]:
    """Yield ``(origin, graph, normalization_flags)`` from whichever host option was given."""
    if args.graph:
        g = parse_graph_name(args.graph)
        if g is None:
            raise UsageError(f"unknown graph name {args.graph!r}")
        yield args.graph, g, []
    elif args.graph6:
        try:
            yield "graph6", parse_graph6(args.graph6), []
        except Graph6Error as exc:
            raise UsageError(f"invalid graph6 argument: {exc}")
    elif args.edges is not None:
        g, flags = _parse_edges(args.edges, args.vertices)
        yield "edges", g, flags
    elif args.input:
        for line, g in lab.read_corpus(args.input):
            if isinstance(g, Graph6Error):
                raise UsageError(f"{args.input}:{line}: {g}")
            yield f"{args.input}:{line}", g, []
    else:
        raise UsageError("give one of --graph, --graph6, --edges or --input")


def _pattern(spec: str) -> Graph:
    try:
        return parse_pattern(spec)
    except GraphError as exc:
        raise UsageError(str(exc))


def _emit(out: TextIO, obj: dict) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    out.flush()


def cmd_analyze(args, out: TextIO) -> int:
    pattern = _pattern(args.pattern)
    code = EXIT_OK
    for _, g, flags in _hosts(args):
        cert = lab.analyze(g, pattern, pattern_label=args.pattern, induced=args.induced, normalization_flags=flags)
        _emit(out, cert.to_dict())
        if cert.strict_ok is False:
            code = EXIT_VIOLATION
    return code


def _sizes(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    lo, hi = args.min_n, args.max_n
    if lo is None or hi is None:
        raise UsageError("sweep needs --input, --n, or both --min-n and --max-n")
    return list(range(lo, hi + 1))


def cmd_sweep(args, out: TextIO) -> int:
    _pattern(args.pattern)
    if args.input:
        corpus = lab.read_corpus(args.input)
        name = args.input
    else:
        sizes = _sizes(args)
        if any(not 1 <= n <= ENUMERATION_MAX_N for n in sizes):
            raise UsageError(
                f"built-in enumeration covers 1 <= n <= {ENUMERATION_MAX_N}; use --input with a graph6 corpus"
            )
        corpus = (g for n in sizes for g in enumerate_connected(n))
        name = f"connected n={sizes[0]}..{sizes[-1]}" if len(sizes) > 1 else f"connected n={sizes[0]}"
    report = lab.sweep(
        corpus,
        pattern_label=args.pattern,
        check=args.check,
        corpus_name=name,
        induced=args.induced,
        trials=args.trials,
        workers=args.workers,
    )
    _emit(out, report.to_dict())
    for err in report.errors:
        print(f"{name}:{err['line']}: {err['message']}", file=sys.stderr)
    if report.violations:
        return EXIT_VIOLATION
    return EXIT_USAGE if report.errors else EXIT_OK


def _certificates(stream) -> Iterator[tuple[int, dict]]:
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise UsageError(f"line {lineno}: not JSON ({exc})")
        if "violations" in obj and "host" not in obj:
            for v in obj["violations"]:
                if "digest" in v:
                    yield lineno, v
        else:
            yield lineno, obj


def cmd_certify(args, out: TextIO) -> int:
    code = EXIT_OK
    fh = sys.stdin if args.input in (None, "-") else open(args.input, encoding="utf-8")
    try:
        for lineno, obj in _certificates(fh):
            try:
                bad = lab.revalidate(obj)
            except (ValueError, TypeError) as exc:
                raise UsageError(f"line {lineno}: {exc}")
            _emit(out, {"line": lineno, "host": obj.get("host"), "valid": not bad, "mismatches": bad})
            if bad:
                code = EXIT_VIOLATION
    finally:
        if fh is not sys.stdin:
            fh.close()
    return code


def cmd_generate(args, out: TextIO) -> int:
    try:
        gen = enumerate_all(args.n) if args.all else enumerate_connected(args.n)
        for g in gen:
            out.write(to_graph6(g) + "\n")
    except UnsupportedSize as exc:
        raise UsageError(str(exc))
    return EXIT_OK


def cmd_demo(args, out: TextIO) -> int:
    name = args.name
    if name == "equality":
        for m in range(1, args.m + 1):
            _emit(out, lab.equality_family(m).to_dict())
        return EXIT_OK
    if name == "chess":
        code = EXIT_OK
        for _, g, _flags in _hosts(args):
            _emit(out, lab.chess_demo(g, args.k).to_dict())
        return code
    if name == "transitive":
        code = EXIT_OK
        for origin, g, _ in _hosts(args):
            verdict = lab.check_transitive_bound(g, _pattern(args.pattern))
            _emit(out, {"host": to_graph6(g), "origin": origin, "verdict": verdict})
            if verdict is False:
                code = EXIT_VIOLATION
        return code
    if name == "expansion":
        code = EXIT_OK
        for _, g, _ in _hosts(args):
            rep = lab.check_orbit_expansion(g, args.trials)
            _emit(out, rep.to_dict())
            if not rep.ok:
                code = EXIT_VIOLATION
        return code
    if name == "additivity":
        parts = [g for _, g, _ in _hosts(args)]
        try:
            lhs, rhs = lab.union_additivity_sides(parts, _pattern(args.pattern))
        except ValueError as exc:
            raise UsageError(str(exc))
        _emit(out, {"parts": [to_graph6(p) for p in parts], "union_sym": lhs, "sum_sym": rhs, "ok": lhs == rhs})
        return EXIT_OK if lhs == rhs else EXIT_VIOLATION
    raise UsageError(f"unknown demo {name!r}")


def _add_host_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="named host: d5, k<n>, c<n>, p<n>, e<n>, petersen, circ<n>:<jumps>")
    p.add_argument("--graph6", help="inline graph6 host")
    p.add_argument("--edges", help="edge list like 0-1,1-2 (loops and repeats are normalized away)")
    p.add_argument("--vertices", type=int, help="vertex count for --edges")
    p.add_argument("--input", help="file of newline-separated graph6 hosts ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symrep", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", help="write JSON lines here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="certificate for each host against a pattern")
    _add_host_options(p)
    p.add_argument("--pattern", default="d5")
    p.add_argument("--induced", action="store_true", help="count induced copies only (experimental)")

    p = sub.add_parser("sweep", help="check a claim over a corpus or the built-in enumeration")
    p.add_argument("--input", help="graph6 corpus file ('-' for stdin)")
    p.add_argument("--n", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--pattern", default="d5")
    p.add_argument("--check", choices=["theorem22", "bound", "expansion"], default="theorem22")
    p.add_argument("--trials", type=int, default=32)
    p.add_argument("--workers", type=int, default=None, help="worker processes (env SYMREP_WORKERS)")
    p.add_argument("--induced", action="store_true")

    p = sub.add_parser("certify", help="re-validate certificates from a JSON-lines file")
    p.add_argument("--input", help="certificate or sweep-report JSON lines ('-' for stdin)")

    p = sub.add_parser("generate", help="graph6 of connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")

    p = sub.add_parser("demo", help="worked examples")
    p.add_argument("name", choices=["equality", "chess", "transitive", "expansion", "additivity"])
    _add_host_options(p)
    p.add_argument("--pattern", default="d5")
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--trials", type=int, default=32)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "certify": cmd_certify,
    "generate": cmd_generate,
    "demo": cmd_demo,
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = stdout or sys.stdout
    fh = None
    try:
        if args.output:
            fh = out = open(args.output, "w", encoding="utf-8")
        return COMMANDS[args.command](args, out)
    except (UsageError, OSError) as exc:
        print(f"symrep {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if fh is not None:
            fh.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

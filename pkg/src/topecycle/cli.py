"""Command-line interface: ``topecycle gen|graph|lattice|cycle|verify|sweep``."""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from .builder import tope_graph
from .catalogue import FAMILIES, FamilySpec, generate
from .errors import TopeCycleError, UsageError
from .formats import (
    format_arrangement,
    format_certificate,
    format_graph,
    parse_arrangement,
    parse_certificate,
    parse_graph,
    sniff,
)
from .hamilton import verify_certificate
from .lattice import build_lattice, supersolvable_decomposition
from .oracle import oracle_enumerate
from .pipeline import DEFAULT_BUDGET, METHODS, find_cycle, search_graph

MANIFEST_COLUMNS = ("file", "hyperplanes", "topes", "edges", "method", "certificate", "verified", "seconds")


def seed_from_env() -> int:
    raw = os.environ.get("TOPECYCLE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"TOPECYCLE_SEED must be an integer, got {raw!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, n=args.n, s=args.s, m=args.m)
    try:
        A = generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(format_arrangement(A), args.out)
    return 0


def cmd_graph(args) -> int:
    A = parse_arrangement(args.input)
    if args.algo == "oracle":
        G = oracle_enumerate(A, limit=args.limit)
    else:
        G = tope_graph(A, seed=seed_from_env(), limit=args.limit)
    _emit(format_graph(G), args.out)
    return 0


def cmd_lattice(args) -> int:
    A = parse_arrangement(args.input)
    L = build_lattice(A)
    lines = [f"rank {r}: {c} flats" for r, c in enumerate(L.counts())]
    dec = supersolvable_decomposition(A) if A.rank >= 2 else None
    if A.rank < 2:
        lines.append("supersolvable: yes (rank < 2)")
    elif dec is None:
        lines.append("supersolvable: no")
    else:
        lines.append("supersolvable: yes")
        for k, (A0, A1) in enumerate(dec.levels):
            lines.append(f"level {k}: A0 {' '.join(map(str, A0))} | A1 {' '.join(map(str, A1))}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_cycle(args) -> int:
    seed = seed_from_env()
    if sniff(args.input) == "graph":
        if args.method not in ("auto", "search"):
            raise UsageError(f"method {args.method!r} needs an arrangement file, not a tope graph")
        cert = search_graph(parse_graph(args.input), args.budget)
    else:
        A = parse_arrangement(args.input)
        cert, _ = find_cycle(A, args.method, seed=seed, budget=args.budget)
    _emit(format_certificate(cert), args.out)
    return 0


def cmd_verify(args) -> int:
    G = parse_graph(args.graph)
    c = parse_certificate(args.cycle)
    rep = verify_certificate(G, c)
    if not rep:
        where = f" (step {rep.step})" if rep.step is not None else ""
        print(f"error: {rep.violation}: {rep.detail}{where}", file=sys.stderr)
        return 1
    print(f"ok: Hamiltonian cycle through {len(G.topes)} topes")
    return 0


def cmd_sweep(args) -> int:
    seed = seed_from_env()
    src = Path(args.dir)
    dest = Path(args.out_dir)
    dest.mkdir(parents=True, exist_ok=True)
    files = sorted(p for p in src.iterdir() if p.suffix == ".arr")
    rows = ["\t".join(MANIFEST_COLUMNS)]
    failures = 0
    for path in files:
        t0 = time.perf_counter()
        row = {"file": path.name, "hyperplanes": "-", "topes": "-", "edges": "-",
               "method": "-", "certificate": "-", "verified": "false"}
        try:
            A = parse_arrangement(path)
            row["hyperplanes"] = str(A.m)
            G = tope_graph(A, seed=seed)
            row["topes"], row["edges"] = str(len(G.topes)), str(len(G.edges))
            (dest / (path.stem + ".graph")).write_text(format_graph(G), encoding="utf-8", newline="\n")
            cert, method = find_cycle(A, "auto", G=G, seed=seed, budget=args.budget)
            row["method"] = method
            cert_path = dest / (path.stem + ".cycle")
            cert_path.write_text(format_certificate(cert), encoding="utf-8", newline="\n")
            row["certificate"] = cert_path.name
            rep = verify_certificate(G, parse_certificate(cert_path))
            row["verified"] = "true" if rep else "false"
            if not rep:
                print(f"error: {rep.violation}: {path.name}: {rep.detail}", file=sys.stderr)
        except TopeCycleError as exc:
            print(f"error: {exc.kind}: {path.name}: {exc}", file=sys.stderr)
        if row["verified"] != "true":
            failures += 1
        row["seconds"] = f"{time.perf_counter() - t0:.3f}"
        rows.append("\t".join(row[c] for c in MANIFEST_COLUMNS))
    manifest = Path(args.manifest) if args.manifest else dest / "manifest.tsv"
    manifest.write_text("\n".join(rows) + "\n", encoding="utf-8", newline="\n")
    print(f"{len(files) - failures}/{len(files)} arrangements verified; manifest at {manifest}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topecycle", description="Tope graphs and Hamiltonian cycles of arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write an arrangement of a named family")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    g = sub.add_parser("graph", help="compute the tope graph of an arrangement file")
    g.add_argument("--in", dest="input", required=True)
    g.add_argument("--algo", choices=("appendixA", "oracle"), default="appendixA")
    g.add_argument("--limit", type=int, default=None, help="abort beyond this many topes")
    g.add_argument("--out")
    g.set_defaults(func=cmd_graph)

    g = sub.add_parser("lattice", help="flat counts and supersolvable decomposition")
    g.add_argument("--in", dest="input", required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_lattice)

    g = sub.add_parser("cycle", help="construct a Hamiltonian cycle certificate")
    g.add_argument("--in", dest="input", required=True, help="arrangement or tope-graph file")
    g.add_argument("--method", choices=METHODS, default="auto")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    g.add_argument("--out")
    g.set_defaults(func=cmd_cycle)

    g = sub.add_parser("verify", help="check a certificate against a tope graph")
    g.add_argument("--graph", required=True)
    g.add_argument("--cycle", required=True)
    g.set_defaults(func=cmd_verify)

    g = sub.add_parser("sweep", help="graph + cycle + verify for every .arr file in a directory")
    g.add_argument("--dir", required=True)
    g.add_argument("--out-dir", required=True)
    g.add_argument("--manifest")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    g.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return 2
    except TopeCycleError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: OSError: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

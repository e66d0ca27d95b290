"""Command-line entry point.

Exit codes: 0 computed, 1 relation fails / budget or timeout exceeded,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional

from .amalgam import LabeledDigraph, TwinFamily, amalgamate, cycle_amalgamate
from .arrows import arrows, arrows_all, arrows_any
from .core import Digraph, Graph, digirth, find_embedding
from .fileio import (
    ParseError,
    RunManifest,
    Stopwatch,
    arrow_report_dict,
    chromatic_certificate_dict,
    emit,
    parse_digraph,
    parse_graph,
    parse_graph_family,
    partition_certificate_dict,
    serialize_digraph,
    serialize_graph,
    verify_certificate,
)
from .generators import (
    complete_graph,
    directed_cycle,
    directed_path,
    half_back,
    half_fwd,
    half_graph,
    random_tournament,
    shift_graph,
    sparse_sample,
)
from .orient import connected_graphs, cycle_orientation, dchr, enl_scan
from .solver import (
    Exceeded,
    arc_bipartition,
    chromatic_number,
    dichromatic_number,
)


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_instance(path: str):
    text = _read(path)
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("p "):
            kind = s.split()[1]
            return parse_digraph(text) if kind == "digraph" else parse_graph(text)
    raise ParseError(1, "missing header")


def _write_or_print(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _draw_seed(seed: Optional[int]) -> int:
    if seed is None:
        seed = random.SystemRandom().randrange(2**63)
        print(f"c seed {seed}", file=sys.stderr)
    return seed


def _cmd_gen(args) -> int:
    seed = None
    if args.kind == "complete":
        text = serialize_graph(complete_graph(args.n))
    elif args.kind == "half":
        if args.fwd:
            text = serialize_digraph(half_fwd(args.n))
        elif args.back:
            text = serialize_digraph(half_back(args.n))
        else:
            text = serialize_graph(half_graph(args.n))
    elif args.kind == "shift":
        g, _ = shift_graph(args.k, args.m)
        text = serialize_graph(g)
    elif args.kind == "cycle":
        text = serialize_digraph(directed_cycle(args.n))
    elif args.kind == "path":
        text = serialize_digraph(directed_path(args.n))
    elif args.kind == "tournament":
        seed = _draw_seed(args.seed)
        text = serialize_digraph(random_tournament(args.n, seed))
    else:  # sparse
        seed = _draw_seed(args.seed)
        text = serialize_digraph(sparse_sample(args.n, args.k, seed))
    if seed is not None:
        text = f"c seed {seed}\n" + text
    _write_or_print(text, args.out)
    return 0


def _cmd_digirth(args) -> int:
    watch = Stopwatch()
    d = parse_digraph(_read(args.file))
    g = digirth(d)
    manifest = RunManifest("digirth", wall_time_s=watch.elapsed())
    sys.stdout.write(emit({"digirth": g}, manifest))
    return 0


def _cmd_dichrom(args) -> int:
    watch = Stopwatch()
    d = parse_digraph(_read(args.file))
    caps = {"budget": args.budget, "timeout": args.timeout}
    try:
        k, cert = dichromatic_number(d, upper_budget=args.budget, timeout=args.timeout)
    except Exceeded as exc:
        manifest = RunManifest("dichrom", caps=caps, wall_time_s=watch.elapsed())
        sys.stdout.write(
            emit(
                {
                    "exceeded": exc.reason,
                    "lower_bound": exc.lower,
                    "upper_bound": exc.upper,
                },
                manifest,
            )
        )
        return 1
    manifest = RunManifest("dichrom", caps=caps, wall_time_s=watch.elapsed())
    payload = partition_certificate_dict(k, cert)
    text = emit(payload, manifest)
    sys.stdout.write(text)
    if args.cert:
        Path(args.cert).write_text(text)
    return 0


def _cmd_chrom(args) -> int:
    watch = Stopwatch()
    g = parse_graph(_read(args.file))
    caps = {"budget": args.budget, "timeout": args.timeout}
    try:
        k, classes = chromatic_number(g, upper_budget=args.budget, timeout=args.timeout)
    except Exceeded as exc:
        manifest = RunManifest("chrom", caps=caps, wall_time_s=watch.elapsed())
        sys.stdout.write(
            emit(
                {
                    "exceeded": exc.reason,
                    "lower_bound": exc.lower,
                    "upper_bound": exc.upper,
                },
                manifest,
            )
        )
        return 1
    manifest = RunManifest("chrom", caps=caps, wall_time_s=watch.elapsed())
    text = emit(chromatic_certificate_dict(k, classes), manifest)
    sys.stdout.write(text)
    if args.cert:
        Path(args.cert).write_text(text)
    return 0


def _cmd_edge2(args) -> int:
    watch = Stopwatch()
    d = parse_digraph(_read(args.file))
    order = None
    if args.order:
        order = [int(x) for x in args.order.split(",")]
    bip = arc_bipartition(d, order)
    manifest = RunManifest("edge2", wall_time_s=watch.elapsed())
    sys.stdout.write(
        emit(
            {
                "forward": sorted(map(list, bip.forward)),
                "backward": sorted(map(list, bip.backward)),
                "order": list(bip.order),
            },
            manifest,
        )
    )
    return 0


def _cmd_dchr(args) -> int:
    watch = Stopwatch()
    g = parse_graph(_read(args.file))
    seed = _draw_seed(args.seed)
    cap = 0 if args.heuristic else args.cap
    res = dchr(g, cap=cap if not args.exhaustive else max(cap, g.m), seed=seed,
               restarts=args.restarts)
    manifest = RunManifest(
        "dchr", seed=seed, caps={"cap": cap, "restarts": args.restarts},
        wall_time_s=watch.elapsed(),
    )
    sys.stdout.write(
        emit(
            {
                "k": res.k,
                "exhaustive": res.exhaustive,
                "witness_arcs": sorted(map(list, res.witness.arcs)),
            },
            manifest,
        )
    )
    return 0


def _parse_target(name: str) -> Digraph:
    if name.startswith("C") and name[1:].isdigit():
        return directed_cycle(int(name[1:]))
    return parse_digraph(_read(name))


def _cmd_arrow(args) -> int:
    watch = Stopwatch()
    d = parse_digraph(_read(args.file))
    if args.targets:
        targets = [_parse_target(t) for t in args.targets]
        fn = arrows_all if args.all else arrows_any
        report = fn(d, targets, args.r, cap=args.cap)
    else:
        targets = [_parse_target(args.target)]
        report = arrows(d, targets[0], args.r, cap=args.cap)
    manifest = RunManifest("arrow", caps={"cap": args.cap}, wall_time_s=watch.elapsed())
    sys.stdout.write(emit(arrow_report_dict(report, args.r, targets), manifest))
    return 0 if report.holds else 1


def _cmd_amalg(args) -> int:
    watch = Stopwatch()
    member = parse_digraph(_read(args.file))
    root = frozenset(range(min(args.root_size, member.n)))
    fam = TwinFamily.from_base(LabeledDigraph.from_digraph(member), root, args.copies)
    before = digirth(member)
    if args.rep is not None:
        reps = [fam.isos_from_first[i][args.rep] for i in range(fam.m)]
        result = cycle_amalgamate(fam, reps, args.k)
    else:
        result = amalgamate(fam)
    after = digirth(result.digraph)
    contains = (
        find_embedding(directed_cycle(fam.m), result.digraph) is not None
        if fam.m >= 3
        else False
    )
    if args.out:
        Path(args.out).write_text(serialize_digraph(result.digraph))
    manifest = RunManifest("amalg", wall_time_s=watch.elapsed())
    sys.stdout.write(
        emit(
            {
                "digirth_before": before,
                "digirth_after": after,
                "m": fam.m,
                "k": args.k,
                "contains_m_cycle": contains,
            },
            manifest,
        )
    )
    return 0


def _cmd_sparse(args) -> int:
    watch = Stopwatch()
    seed = _draw_seed(args.seed)
    d = sparse_sample(args.n, args.k, seed)
    _write_or_print(f"c seed {seed}\n" + serialize_digraph(d), args.out)
    manifest = RunManifest(
        "sparse", seed=seed, caps={"k": args.k}, wall_time_s=watch.elapsed()
    )
    sys.stdout.write(emit({"n": d.n, "m": d.m, "digirth": digirth(d)}, manifest))
    return 0


def _cmd_enl_scan(args) -> int:
    watch = Stopwatch()
    if args.builtin:
        family = list(connected_graphs(args.builtin))
    else:
        family = parse_graph_family(_read(args.family))
    seed = _draw_seed(args.seed)
    report = enl_scan(family, args.chr_min, args.target, seed=seed)
    payload = {
        "chr_min": args.chr_min,
        "target_k": args.target,
        "scanned": len(report.records),
        "failures": len(report.failures),
        "min_chi_among_failures": report.min_chi_among_failures,
        "records": [
            {
                "graph_id": r.graph_id,
                "chi_g": r.chi_g,
                "dchr_lower": r.dchr_lower,
                "reached": r.reached,
                "exhaustive": r.exhaustive,
                "witness_arcs": sorted(map(list, r.witness.arcs)) if r.witness else None,
            }
            for r in report.records
        ],
    }
    manifest = RunManifest("enl-scan", seed=seed, wall_time_s=watch.elapsed())
    text = emit(payload, manifest)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if not report.failures else 1


def _cmd_verify(args) -> int:
    cert = json.loads(_read(args.cert))
    instance = _load_instance(args.file)
    ok, reason = verify_certificate(cert, instance)
    print(("accepted" if ok else "rejected") + f": {reason}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dichro")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate named graphs and digraphs")
    gs = g.add_subparsers(dest="kind", required=True)
    for kind in ("complete", "cycle", "path"):
        sp = gs.add_parser(kind)
        sp.add_argument("n", type=int)
        sp.add_argument("--out")
    sp = gs.add_parser("half")
    sp.add_argument("n", type=int)
    sp.add_argument("--fwd", action="store_true")
    sp.add_argument("--back", action="store_true")
    sp.add_argument("--out")
    sp = gs.add_parser("shift")
    sp.add_argument("k", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("--out")
    sp = gs.add_parser("tournament")
    sp.add_argument("n", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out")
    sp = gs.add_parser("sparse")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out")
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("digirth", help="shortest directed cycle length")
    s.add_argument("file")
    s.set_defaults(func=_cmd_digirth)

    s = sub.add_parser("dichrom", help="exact dichromatic number")
    s.add_argument("file")
    s.add_argument("--budget", type=int)
    s.add_argument("--timeout", type=float)
    s.add_argument("--cert")
    s.set_defaults(func=_cmd_dichrom)

    s = sub.add_parser("chrom", help="exact chromatic number")
    s.add_argument("file")
    s.add_argument("--budget", type=int)
    s.add_argument("--timeout", type=float)
    s.add_argument("--cert")
    s.set_defaults(func=_cmd_chrom)

    s = sub.add_parser("edge2", help="arc bipartition into two acyclic classes")
    s.add_argument("file")
    s.add_argument("--order", help="comma-separated vertex order")
    s.set_defaults(func=_cmd_edge2)

    s = sub.add_parser("dchr", help="max dichromatic number over orientations")
    s.add_argument("file")
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--heuristic", action="store_true")
    s.add_argument("--seed", type=int)
    s.add_argument("--restarts", type=int, default=20)
    s.add_argument("--cap", type=int, default=30)
    s.set_defaults(func=_cmd_dchr)

    s = sub.add_parser("arrow", help="arrow relation check")
    s.add_argument("file")
    s.add_argument("--target", help="target file or Ck shorthand")
    s.add_argument("-r", type=int, required=True)
    s.add_argument("--any", action="store_true")
    s.add_argument("--all", action="store_true")
    s.add_argument("--targets", nargs="+")
    s.add_argument("--cap", type=int, default=10**7)
    s.set_defaults(func=_cmd_arrow)

    s = sub.add_parser("amalg", help="twin amalgamation of a member digraph")
    s.add_argument("file")
    s.add_argument("--root-size", type=int, required=True)
    s.add_argument("--copies", type=int, required=True)
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--rep", type=int)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_amalg)

    s = sub.add_parser("sparse", help="sparse digraph of digirth k+1")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_sparse)

    s = sub.add_parser("enl-scan", help="orientation scan over a graph family")
    s.add_argument("family", nargs="?")
    s.add_argument("--builtin", type=int, help="all connected graphs on <= N vertices")
    s.add_argument("--chr-min", type=int, required=True)
    s.add_argument("--target", type=int, required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_enl_scan)

    s = sub.add_parser("verify", help="independently re-check a certificate")
    s.add_argument("cert")
    s.add_argument("file")
    s.set_defaults(func=_cmd_verify)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

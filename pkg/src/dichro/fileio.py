"""Text formats, JSON certificates, and the independent re-checker.

Digraph files: header `p digraph <n> <m>`, then m lines `a <u> <v>` with
0-based endpoints.  Graph files use `p graph <n> <m>` and `e <u> <v>`.
Lines starting with `c` are comments.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from . import __version__
from .core import Digraph, Graph, find_embedding, induced
from .solver import AcyclicPartition


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def _parse(text: str, kind: str):
    n = m = None
    items: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    tag = "a" if kind == "digraph" else "e"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != kind:
                raise ParseError(lineno, f"expected `p {kind} <n> <m>`")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "non-integer counts in header")
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative counts in header")
        elif parts[0] == tag:
            if n is None:
                raise ParseError(lineno, "edge line before header")
            if len(parts) != 3:
                raise ParseError(lineno, f"expected `{tag} <u> <v>`")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "non-integer endpoint")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
            if u == v:
                raise ParseError(lineno, "self-loop")
            if kind == "graph":
                u, v = min(u, v), max(u, v)
            if (u, v) in seen:
                raise ParseError(lineno, f"duplicate {tag} {u} {v}")
            if kind == "digraph" and (v, u) in seen:
                raise ParseError(lineno, f"digon between {u} and {v}")
            seen.add((u, v))
            items.append((u, v))
        else:
            raise ParseError(lineno, f"unknown line type {parts[0]!r}")
    if n is None:
        raise ParseError(1, "missing header")
    if len(items) != m:
        raise ParseError(1, f"header declares {m} lines, found {len(items)}")
    return n, frozenset(items)


def parse_digraph(text: str) -> Digraph:
    n, arcs = _parse(text, "digraph")
    return Digraph(n, arcs)


def parse_graph(text: str) -> Graph:
    n, edges = _parse(text, "graph")
    return Graph(n, edges)


def parse_graph_family(text: str) -> list[Graph]:
    """Several `p graph` blocks concatenated in one file."""
    blocks: list[list[str]] = []
    for raw in text.splitlines():
        if raw.strip().startswith("p "):
            blocks.append([])
        if blocks:
            blocks[-1].append(raw)
    return [parse_graph("\n".join(b)) for b in blocks]


def serialize_digraph(d: Digraph) -> str:
    lines = [f"p digraph {d.n} {d.m}"]
    lines += [f"a {u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def serialize_graph(g: Graph) -> str:
    lines = [f"p graph {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


@dataclass
class RunManifest:
    """Reproducibility record embedded in every JSON output."""

    command: str
    seed: Optional[int] = None
    caps: dict[str, Any] = field(default_factory=dict)
    wall_time_s: float = 0.0
    version: str = __version__

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "seed": self.seed,
            "caps": self.caps,
            "wall_time_s": round(self.wall_time_s, 6),
            "version": self.version,
        }


class Stopwatch:
    def __init__(self):
        self.t0 = time.monotonic()

    def elapsed(self) -> float:
        return time.monotonic() - self.t0


def partition_certificate_dict(k: int, cert: AcyclicPartition) -> dict[str, Any]:
    return {
        "type": "dichromatic-partition",
        "k": k,
        "classes": [list(c) for c in cert.classes],
        "topo_orders": [list(o) for o in cert.topo_orders],
    }


def chromatic_certificate_dict(k: int, classes) -> dict[str, Any]:
    return {
        "type": "chromatic-partition",
        "k": k,
        "classes": [list(c) for c in classes],
    }


def arrow_report_dict(report, r: int, targets: list[Digraph]) -> dict[str, Any]:
    return {
        "type": "arrow",
        "holds": report.holds,
        "r": r,
        "targets": [
            {"n": t.n, "arcs": sorted(map(list, t.arcs))} for t in targets
        ],
        "witness_colouring": (
            list(report.witness_colouring)
            if report.witness_colouring is not None
            else None
        ),
        "checked_colourings": report.checked_colourings,
    }


def emit(payload: dict[str, Any], manifest: RunManifest) -> str:
    """Stable-order JSON with exactly one embedded manifest."""
    out = dict(payload)
    out["manifest"] = manifest.to_dict()
    return json.dumps(out, indent=2, sort_keys=True) + "\n"


def _check_partition_cert(cert: dict[str, Any], d: Digraph) -> tuple[bool, str]:
    classes = cert.get("classes")
    orders = cert.get("topo_orders")
    k = cert.get("k")
    if not isinstance(classes, list) or not isinstance(orders, list):
        return False, "classes/topo_orders missing or malformed"
    if k != len(classes) or len(orders) != len(classes):
        return False, "k does not match the number of classes"
    seen: set[int] = set()
    for cls in classes:
        if not isinstance(cls, list):
            return False, "malformed class"
        cs = set(cls)
        if len(cs) != len(cls):
            return False, "repeated vertex inside a class"
        if any(not isinstance(v, int) or not 0 <= v < d.n for v in cls):
            return False, "vertex out of range"
        if cs & seen:
            return False, "classes are not disjoint"
        seen |= cs
    if seen != set(range(d.n)):
        return False, "classes do not cover the vertex set"
    for cls, topo in zip(classes, orders):
        if not isinstance(topo, list) or sorted(topo) != sorted(cls):
            return False, "topological order does not match its class"
        pos = {v: i for i, v in enumerate(topo)}
        for u, v in d.arcs:
            if u in pos and v in pos and pos[u] >= pos[v]:
                return False, f"arc ({u},{v}) is backward in its class order"
    return True, "ok"


def _check_chromatic_cert(cert: dict[str, Any], g: Graph) -> tuple[bool, str]:
    classes = cert.get("classes")
    k = cert.get("k")
    if not isinstance(classes, list) or k != len(classes):
        return False, "k does not match the number of classes"
    seen: set[int] = set()
    for cls in classes:
        if not isinstance(cls, list):
            return False, "malformed class"
        cs = set(cls)
        if len(cs) != len(cls) or cs & seen:
            return False, "classes are not disjoint"
        if any(not isinstance(v, int) or not 0 <= v < g.n for v in cls):
            return False, "vertex out of range"
        for u, v in g.edges:
            if u in cs and v in cs:
                return False, f"edge ({u},{v}) inside a class"
        seen |= cs
    if seen != set(range(g.n)):
        return False, "classes do not cover the vertex set"
    return True, "ok"


def _check_arrow_cert(cert: dict[str, Any], d: Digraph) -> tuple[bool, str]:
    if cert.get("holds"):
        return True, "positive reports carry no witness to re-check"
    witness = cert.get("witness_colouring")
    r = cert.get("r")
    if not isinstance(witness, list) or not isinstance(r, int):
        return False, "witness colouring missing"
    if len(witness) != d.n or any(
        not isinstance(c, int) or not 0 <= c < r for c in witness
    ):
        return False, "witness is not an r-colouring of the vertices"
    try:
        targets = [
            Digraph(t["n"], frozenset(map(tuple, t["arcs"])))
            for t in cert["targets"]
        ]
    except (KeyError, TypeError, ValueError):
        return False, "malformed targets"
    for c in range(r):
        sub, _ = induced(d, [v for v in range(d.n) if witness[v] == c])
        for t in targets:
            if find_embedding(t, sub) is not None:
                return False, f"colour class {c} contains a target"
    return True, "ok"


def verify_certificate(cert: dict[str, Any], instance) -> tuple[bool, str]:
    """Re-validate a certificate against its instance.

    Uses only the primitive queries, never the solver, so it stays an
    independent check of solver output.
    """
    kind = cert.get("type")
    if kind == "dichromatic-partition":
        if not isinstance(instance, Digraph):
            return False, "instance is not a digraph"
        return _check_partition_cert(cert, instance)
    if kind == "chromatic-partition":
        if not isinstance(instance, Graph):
            return False, "instance is not a graph"
        return _check_chromatic_cert(cert, instance)
    if kind == "arrow":
        if not isinstance(instance, Digraph):
            return False, "instance is not a digraph"
        return _check_arrow_cert(cert, instance)
    return False, f"unknown certificate type {kind!r}"

"""Orientations of undirected graphs and their dichromatic behaviour.

Covers exhaustive/heuristic maximisation of the dichromatic number over
orientations, the guaranteed cycle orientation (any graph with a cycle has
an orientation with a monochromatic-cycle obstruction, i.e. dichromatic
number at least 2), orientation by a pair colouring, and family scans.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional

from .core import Digraph, Graph, induced_graph, is_acyclic
from .solver import chromatic_number, dichromatic_number


class CapExceeded(Exception):
    """The instance is too large for exhaustive enumeration."""


def orientations(g: Graph, cap: int = 30) -> Iterator[Digraph]:
    """Every orientation exactly once, in Gray-code order over edge masks."""
    if g.m > cap:
        raise CapExceeded(f"{g.m} edges exceeds the enumeration cap {cap}")
    edges = sorted(g.edges)
    for i in range(1 << g.m):
        mask = i ^ (i >> 1)
        arcs = frozenset(
            (u, v) if not mask >> j & 1 else (v, u)
            for j, (u, v) in enumerate(edges)
        )
        yield Digraph(g.n, arcs)


@dataclass(frozen=True)
class DchrResult:
    k: int
    witness: Digraph
    exhaustive: bool


def _short_cycle_count(d: Digraph, max_len: int = 4) -> int:
    """Cheap local-search surrogate: directed cycles of length <= max_len."""
    count = 0
    for a, b in d.arcs:
        for c in d.out_adj[b]:
            if c == a:
                continue
            if d.out_mask[c] >> a & 1:
                count += 1
            elif max_len >= 4:
                count += bin(d.out_mask[c] & d.in_mask[a]).count("1")
    return count


def dchr(
    g: Graph,
    cap: int = 30,
    seed: int = 0,
    restarts: int = 20,
) -> DchrResult:
    """Maximum dichromatic number over orientations of g.

    Exhaustive when the edge count is within `cap`; otherwise a lower bound
    from multi-start random orientations with arc-flip hill climbing on a
    short-cycle surrogate, each scored exactly at the end.
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if g.m <= cap:
        best_k = 0
        best: Optional[Digraph] = None
        for d in orientations(g, cap):
            k, _ = dichromatic_number(d)
            if k > best_k:
                best_k, best = k, d
        assert best is not None
        return DchrResult(best_k, best, True)

    rng = random.Random(seed)
    edges = sorted(g.edges)
    best_k = 0
    best = None
    for _ in range(max(1, restarts)):
        dirs = [rng.random() < 0.5 for _ in edges]
        arcs = lambda: frozenset(
            (u, v) if not f else (v, u) for (u, v), f in zip(edges, dirs)
        )
        d = Digraph(g.n, arcs())
        score = _short_cycle_count(d)
        for _ in range(4 * g.m):  # hill climb on single arc flips
            j = rng.randrange(g.m)
            dirs[j] = not dirs[j]
            cand = Digraph(g.n, arcs())
            cand_score = _short_cycle_count(cand)
            if cand_score >= score:
                d, score = cand, cand_score
            else:
                dirs[j] = not dirs[j]
        k, _ = dichromatic_number(d)
        if k > best_k:
            best_k, best = k, d
    assert best is not None
    return DchrResult(best_k, best, False)


def _find_cycle(g: Graph) -> Optional[list[int]]:
    """Some cycle of g as a vertex list, or None for forests."""
    parent: dict[int, Optional[int]] = {}
    for root in range(g.n):
        if root in parent:
            continue
        parent[root] = None
        stack = [(root, -1)]
        while stack:
            v, par = stack.pop()
            for w in g.adj[v]:
                if w == par:
                    continue
                if w in parent:
                    # Non-tree edge: walk both endpoints up to their meeting
                    # point; the cycle runs v..lca, back down to w, then the
                    # edge wv closes it.
                    path_v: list[Optional[int]] = [v]
                    while path_v[-1] is not None:
                        path_v.append(parent[path_v[-1]])
                    anc = set(path_v)
                    x: Optional[int] = w
                    path_w: list[int] = []
                    while x not in anc:
                        path_w.append(x)  # type: ignore[arg-type]
                        x = parent[x]  # type: ignore[index]
                    cycle = path_v[: path_v.index(x) + 1] + list(reversed(path_w))
                    if len(cycle) >= 3:
                        return cycle  # type: ignore[return-value]
                    continue
                parent[w] = v
                stack.append((w, v))
    return None


def cycle_orientation(g: Graph) -> Optional[Digraph]:
    """An orientation with a directed cycle, or None when g is a forest.

    Finds any cycle, orients it cyclically, and orients the remaining edges
    low-to-high by vertex index.
    """
    cycle = _find_cycle(g)
    if cycle is None:
        return None
    cyc_arcs = {
        (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    }
    on_cycle = {(min(u, v), max(u, v)) for u, v in cyc_arcs}
    arcs = set(cyc_arcs)
    for u, v in g.edges:
        if (u, v) not in on_cycle:
            arcs.add((u, v))
    return Digraph(g.n, frozenset(arcs))


def orient_by_pair_colouring(
    g: Graph, f: Callable[[int, int], int]
) -> Digraph:
    """Orient each edge {a, b} with a < b as (a, b) when f(a, b) == 0,
    otherwise as (b, a)."""
    arcs = frozenset(
        (u, v) if f(u, v) == 0 else (v, u) for u, v in g.edges
    )
    return Digraph(g.n, arcs)


@dataclass(frozen=True)
class EnlRecord:
    graph_id: int
    chi_g: int
    dchr_lower: int
    witness: Optional[Digraph]
    reached: bool
    exhaustive: bool


@dataclass
class EnlReport:
    chr_min: int
    target_k: int
    records: list[EnlRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[EnlRecord]:
        return [r for r in self.records if not r.reached]

    @property
    def min_chi_among_failures(self) -> Optional[int]:
        fails = self.failures
        return min(r.chi_g for r in fails) if fails else None


def enl_scan(
    family: Iterable[Graph],
    chr_min: int,
    target_k: int,
    orientation_cap: int = 30,
    seed: int = 0,
) -> EnlReport:
    """Record, per graph with chromatic number >= chr_min, whether some
    orientation reaches dichromatic number >= target_k.

    A guaranteed-cheap cycle orientation is tried first (it settles every
    target_k <= 2 instance with a cycle); otherwise the full orientation
    search runs.
    """
    report = EnlReport(chr_min, target_k)
    for idx, g in enumerate(family):
        chi, _ = chromatic_number(g)
        if chi < chr_min:
            continue
        witness: Optional[Digraph] = None
        k_found = 1
        exhaustive = True
        d = cycle_orientation(g)
        if d is not None:
            k_found, _ = dichromatic_number(d)
            witness = d
        if k_found < target_k and g.m > 0:
            res = dchr(g, cap=orientation_cap, seed=seed)
            exhaustive = res.exhaustive
            if res.k > k_found:
                k_found, witness = res.k, res.witness
        report.records.append(
            EnlRecord(idx, chi, k_found, witness, k_found >= target_k, exhaustive)
        )
    return report


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, by edge-mask enumeration."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(
            n,
            frozenset(p for i, p in enumerate(pairs) if mask >> i & 1),
        )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    if any(not g.adj[v] for v in range(g.n)) and g.n > 1:
        return False  # isolated-vertex pre-filter
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """Built-in family for scans: all connected labeled graphs on <= max_n
    vertices (max_n <= 7 stays tractable)."""
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            if is_connected(g):
                yield g

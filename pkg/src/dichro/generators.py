"""Named graphs and digraphs at finite scale, plus a randomized sampler for
sparse digraphs of prescribed digirth.

Every construction is deterministic given its parameters and seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .amalgam import LabeledDigraph, TwinFamily, cycle_amalgamate
from .core import Digraph, Graph, digirth, reverse


class InvalidSize(ValueError):
    pass


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSize("need at least one vertex")
    return Graph(n, frozenset(combinations(range(n), 2)))


def half_graph(n: int) -> Graph:
    """Bipartite half graph on 2n vertices; (k, i) sits at index 2k + i and
    (k, 0)-(l, 1) is an edge iff k <= l."""
    if n < 1:
        raise InvalidSize("need at least one vertex per side")
    edges = frozenset(
        (2 * k, 2 * l + 1) for k in range(n) for l in range(k, n)
    )
    return Graph(2 * n, edges)


def half_fwd(n: int) -> Digraph:
    """Orientation of the half graph with arcs (k, 0) -> (l, 1) for k <= l."""
    if n < 1:
        raise InvalidSize("need at least one vertex per side")
    arcs = frozenset(
        (2 * k, 2 * l + 1) for k in range(n) for l in range(k, n)
    )
    return Digraph(2 * n, arcs)


def half_back(n: int) -> Digraph:
    return reverse(half_fwd(n))


@dataclass(frozen=True)
class ShiftVertexIndex:
    """Bijection between k-subsets of {0..m-1} and indices 0..C(m,k)-1 in
    colexicographic order."""

    k: int
    m: int

    def rank(self, subset: Sequence[int]) -> int:
        t = sorted(subset)
        if len(t) != self.k or len(set(t)) != self.k:
            raise ValueError("need a k-subset")
        if t and not 0 <= t[0] <= t[-1] < self.m:
            raise ValueError("subset out of range")
        return sum(comb(a, i + 1) for i, a in enumerate(t))

    def unrank(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < comb(self.m, self.k):
            raise ValueError("index out of range")
        out: list[int] = []
        r = index
        for i in range(self.k, 0, -1):
            a = i - 1
            while comb(a + 1, i) <= r:
                a += 1
            out.append(a)
            r -= comb(a, i)
        return tuple(reversed(out))

    def subsets(self) -> Iterator[tuple[int, ...]]:
        for i in range(comb(self.m, self.k)):
            yield self.unrank(i)


def shift_graph(k: int, m: int) -> tuple[Graph, ShiftVertexIndex]:
    """Shift graph: vertices are k-subsets of {0..m-1}; A ~ B when some
    increasing (k+1)-tuple has A as its first k and B as its last k entries."""
    if k < 2:
        raise InvalidSize("need k >= 2")
    if m < k + 1:
        raise InvalidSize("need m >= k + 1")
    index = ShiftVertexIndex(k, m)
    edges = set()
    for tup in combinations(range(m), k + 1):
        edges.add((index.rank(tup[:-1]), index.rank(tup[1:])))
    return Graph(comb(m, k), frozenset(edges)), index


def directed_cycle(n: int) -> Digraph:
    if n < 3:
        raise InvalidSize("directed cycles need at least 3 vertices")
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise InvalidSize("need at least one vertex")
    return Digraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def random_tournament(n: int, seed: int) -> Digraph:
    """Seeded orientation of the complete graph on n vertices."""
    if n < 1:
        raise InvalidSize("need at least one vertex")
    rng = random.Random(seed)
    arcs = frozenset(
        (u, v) if rng.random() < 0.5 else (v, u)
        for u, v in combinations(range(n), 2)
    )
    return Digraph(n, arcs)


def sparse_sample(target_n: int, k: int, seed: int) -> Digraph:
    """Sparse digraph with digirth exactly k + 1, grown by repeated twin
    amalgamation with an inserted (k+1)-cycle.

    Starting from a single directed (k+1)-cycle, each round twins the whole
    current digraph over a small random root and threads a fresh (k+1)-cycle
    through coherent representatives; growth stops at >= target_n vertices
    and the digirth is verified before returning.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    if target_n < k + 2:
        raise ValueError("target_n must be at least k + 2")
    rng = random.Random(seed)
    d = directed_cycle(k + 1)
    while d.n < target_n:
        root_size = min(3, d.n // 4)
        root = frozenset(rng.sample(range(d.n), root_size))
        non_root = sorted(set(range(d.n)) - root)
        rep0 = rng.choice(non_root)
        fam = TwinFamily.from_base(
            LabeledDigraph.from_digraph(d), root, copies=k + 1
        )
        reps = [fam.isos_from_first[i][rep0] for i in range(fam.m)]
        d = cycle_amalgamate(fam, reps, k, unchecked=True).digraph
    g = digirth(d)
    assert g == k + 1, f"sampler invariant broken: digirth {g}"
    return d

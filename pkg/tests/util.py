"""Shared seeded instance builders for the tests."""
from __future__ import annotations

import random
from collections import deque

from dichro.core import Digraph, Graph


def random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    """Random digon-free digraph: each unordered pair gets an arc with
    probability p, direction fair."""
    arcs = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, frozenset(arcs))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    }
    return Graph(n, frozenset(edges))


def _dist(n: int, arcs: set[tuple[int, int]], src: int, dst: int):
    out: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in arcs:
        out[u].append(v)
    seen = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            return seen[x]
        for y in out[x]:
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return None


def random_digraph_with_digirth_above(
    k: int, max_n: int, rng: random.Random
) -> Digraph:
    """Random digraph on <= max_n vertices with digirth > k.

    Seeds a single long cycle (sometimes none, leaving an acyclic start) and
    then adds random arcs that never close a cycle of length <= k.
    """
    n = rng.randint(k + 2, max_n)
    arcs: set[tuple[int, int]] = set()
    if rng.random() < 0.8:
        length = rng.randint(k + 1, n)
        cyc = rng.sample(range(n), length)
        arcs |= {(cyc[i], cyc[(i + 1) % length]) for i in range(length)}
    for _ in range(2 * n):
        u, v = rng.sample(range(n), 2)
        if (u, v) in arcs or (v, u) in arcs:
            continue
        back = _dist(n, arcs, v, u)
        if back is None or back >= k:  # new cycles have length back + 1 > k
            arcs.add((u, v))
    return Digraph(n, frozenset(arcs))

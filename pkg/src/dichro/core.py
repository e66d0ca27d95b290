"""Digraph and graph primitives.

Digraphs are finite, loop-free and digon-free (at most one arc between any
pair of vertices) on the dense vertex range 0..n-1.  Graphs are finite and
simple.  Everything here is an immutable value; no operation mutates its
inputs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


class DigonCreated(ValueError):
    """Raised when a union would contain both (u, v) and (v, u)."""

    def __init__(self, u: int, v: int):
        super().__init__(f"union creates a digon between {u} and {v}")
        self.u = u
        self.v = v


@dataclass(frozen=True)
class Digraph:
    """A loop-free, digon-free directed graph on vertices 0..n-1."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(map(tuple, self.arcs)))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n}")
            if (v, u) in self.arcs:
                raise ValueError(f"digon between {u} and {v}")

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].append(v)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def out_mask(self) -> tuple[int, ...]:
        # Bit rows; python ints give us bitsets at every n, not just n <= 64.
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[u] |= 1 << v
        return tuple(rows)

    @cached_property
    def in_mask(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[v] |= 1 << u
        return tuple(rows)

    def degree(self, v: int) -> int:
        return len(self.out_adj[v]) + len(self.in_adj[v])


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    Edges are stored as ordered pairs (u, v) with u < v.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = frozenset((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", norm)
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(a)) for a in nb)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)


@dataclass(frozen=True)
class Embedding:
    """An injective arc-preserving map from one digraph into another.

    Not necessarily induced: extra arcs of the target are allowed.
    """

    source: Digraph
    target: Digraph
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if len(self.mapping) != self.source.n:
            raise ValueError("mapping must cover every source vertex")
        if len(set(self.mapping)) != len(self.mapping):
            raise ValueError("mapping must be injective")
        for w in self.mapping:
            if not 0 <= w < self.target.n:
                raise ValueError(f"image vertex {w} out of range")
        for u, v in self.source.arcs:
            if (self.mapping[u], self.mapping[v]) not in self.target.arcs:
                raise ValueError(f"arc ({u},{v}) not preserved")


def is_acyclic(d: Digraph) -> tuple[bool, Optional[list[int]]]:
    """Kahn's algorithm.  Returns (True, topological order) or (False, None)."""
    indeg = [len(d.in_adj[v]) for v in range(d.n)]
    queue = deque(v for v in range(d.n) if indeg[v] == 0)
    order: list[int] = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in d.out_adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) == d.n:
        return True, order
    return False, None


def digirth(d: Digraph) -> Optional[int]:
    """Length of the shortest directed cycle; None when acyclic.

    Per-vertex BFS: the shortest cycle through v has length dist(v, u) + 1
    minimised over in-neighbours u of v.  O(n * (n + m)).
    """
    best: Optional[int] = None
    for v in range(d.n):
        dist = {v: 0}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            if best is not None and dist[x] + 1 >= best:
                continue
            for y in d.out_adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for u in d.in_adj[v]:
            if u in dist:
                length = dist[u] + 1
                if best is None or length < best:
                    best = length
    return best


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.n, frozenset((v, u) for u, v in d.arcs))


def induced(d: Digraph, w: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Induced subdigraph on W, relabeled order-preservingly to 0..|W|-1.

    Returns the subdigraph and the old-to-new relabeling.
    """
    verts = sorted(set(w))
    for v in verts:
        if not 0 <= v < d.n:
            raise ValueError(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(verts)}
    arcs = frozenset(
        (relabel[u], relabel[v]) for u, v in d.arcs if u in relabel and v in relabel
    )
    return Digraph(len(verts), arcs), relabel


def induced_graph(g: Graph, w: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    verts = sorted(set(w))
    relabel = {v: i for i, v in enumerate(verts)}
    edges = frozenset(
        (relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel
    )
    return Graph(len(verts), edges), relabel


def is_orientation_of(d: Digraph, g: Graph) -> bool:
    """True iff every edge of g carries exactly one arc of d and vice versa."""
    if d.n != g.n:
        return False
    if len(d.arcs) != len(g.edges):
        return False
    return all((min(u, v), max(u, v)) in g.edges for u, v in d.arcs)


def underlying_graph(d: Digraph) -> Graph:
    return Graph(d.n, frozenset((min(u, v), max(u, v)) for u, v in d.arcs))


def digraph_union(
    d1: Digraph,
    d2: Digraph,
    map1: Optional[dict[int, int]] = None,
    map2: Optional[dict[int, int]] = None,
) -> Digraph:
    """Union over a merged label set, densely relabeled.

    map1/map2 send each digraph's vertices to common labels (identity by
    default) and must be injective on each side.  Raises DigonCreated when
    the merged arc set would contain both directions of a pair -- unions of
    digraphs need not be digraphs.
    """
    if map1 is None:
        map1 = {v: v for v in range(d1.n)}
    if map2 is None:
        map2 = {v: v for v in range(d2.n)}
    for m, d in ((map1, d1), (map2, d2)):
        if set(m) != set(range(d.n)):
            raise ValueError("identification must cover all vertices")
        if len(set(m.values())) != d.n:
            raise ValueError("identification must be injective")
    labels = sorted(set(map1.values()) | set(map2.values()))
    dense = {lab: i for i, lab in enumerate(labels)}
    arcs: set[tuple[int, int]] = set()
    for u, v in d1.arcs:
        arcs.add((dense[map1[u]], dense[map1[v]]))
    for u, v in d2.arcs:
        arcs.add((dense[map2[u]], dense[map2[v]]))
    for u, v in arcs:
        if (v, u) in arcs:
            raise DigonCreated(labels[u], labels[v])
    return Digraph(len(labels), frozenset(arcs))


def find_embedding(d0: Digraph, d: Digraph) -> Optional[Embedding]:
    """Backtracking search for a (not necessarily induced) copy of d0 in d.

    Deterministic given input labeling: source vertices are assigned in
    descending degree order (ties by index) and target candidates tried in
    increasing index.
    """
    if d0.n > d.n or len(d0.arcs) > len(d.arcs):
        return None
    order = sorted(range(d0.n), key=lambda v: (-d0.degree(v), v))
    image: dict[int, int] = {}
    used = [False] * d.n

    def extend(pos: int) -> bool:
        if pos == d0.n:
            return True
        s = order[pos]
        s_out = [t for t in d0.out_adj[s] if t in image]
        s_in = [t for t in d0.in_adj[s] if t in image]
        for cand in range(d.n):
            if used[cand]:
                continue
            if len(d.out_adj[cand]) < len(d0.out_adj[s]):
                continue
            if len(d.in_adj[cand]) < len(d0.in_adj[s]):
                continue
            row_out = d.out_mask[cand]
            row_in = d.in_mask[cand]
            if any(not row_out >> image[t] & 1 for t in s_out):
                continue
            if any(not row_in >> image[t] & 1 for t in s_in):
                continue
            image[s] = cand
            used[cand] = True
            if extend(pos + 1):
                return True
            del image[s]
            used[cand] = False
        return False

    if not extend(0):
        return None
    return Embedding(d0, d, tuple(image[v] for v in range(d0.n)))

"""Exact dichromatic and chromatic number with certificates.

Both solvers are branch and bound over a fixed vertex order (descending
degree, ties by index), with the classic colouring symmetry break: a new
class may only be opened with index equal to the current class count.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .core import Digraph, Graph, induced, is_acyclic


class Exceeded(Exception):
    """The search stopped before proving an exact value.

    reason == "budget": the minimum provably exceeds `lower - 1` colours
    (every assignment within the budget was refuted).
    reason == "timeout": only the bounds are known.
    """

    def __init__(self, lower: int, upper: Optional[int], reason: str):
        super().__init__(
            f"search {reason}: best bounds {lower} <= k"
            + (f" <= {upper}" if upper is not None else "")
        )
        self.lower = lower
        self.upper = upper
        self.reason = reason


@dataclass(frozen=True)
class AcyclicPartition:
    """Colour classes plus per-class topological orders.

    The checkable certificate for "the dichromatic number is at most k".
    """

    classes: tuple[tuple[int, ...], ...]
    topo_orders: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ArcBipartition:
    forward: frozenset[tuple[int, int]]
    backward: frozenset[tuple[int, int]]
    order: tuple[int, ...]


def _class_stays_acyclic(d: Digraph, cls_mask: int, v: int) -> bool:
    """Would class cls_mask stay acyclic after adding v?

    The class is acyclic already, so any new cycle passes through v: check
    whether some in-neighbour of v inside the class is reachable from v.
    """
    targets = d.in_mask[v] & cls_mask
    if not targets:
        return True
    reach = d.out_mask[v] & cls_mask
    frontier = reach
    while frontier:
        if reach & targets:
            return False
        nxt = 0
        w = frontier
        while w:
            bit = w & -w
            w ^= bit
            nxt |= d.out_mask[bit.bit_length() - 1]
        frontier = nxt & cls_mask & ~reach
        reach |= frontier
    return not reach & targets


def _greedy_acyclic(d: Digraph, order: Sequence[int]) -> list[int]:
    """First-fit assignment; the result seeds the upper bound."""
    colour = [-1] * d.n
    masks: list[int] = []
    for v in order:
        for c, mask in enumerate(masks):
            if _class_stays_acyclic(d, mask, v):
                colour[v] = c
                masks[c] |= 1 << v
                break
        else:
            colour[v] = len(masks)
            masks.append(1 << v)
    return colour


def _partition_certificate(d: Digraph, colour: Sequence[int], k: int) -> AcyclicPartition:
    classes = [sorted(v for v in range(d.n) if colour[v] == c) for c in range(k)]
    orders = []
    for cls in classes:
        sub, relabel = induced(d, cls)
        ok, topo = is_acyclic(sub)
        assert ok and topo is not None
        back = {i: v for v, i in relabel.items()}
        orders.append(tuple(back[i] for i in topo))
    return AcyclicPartition(tuple(map(tuple, classes)), tuple(orders))


def dichromatic_number(
    d: Digraph,
    upper_budget: Optional[int] = None,
    timeout: Optional[float] = None,
) -> tuple[int, AcyclicPartition]:
    """Exact minimum number of acyclic classes covering V, with certificate.

    Raises Exceeded when the minimum provably exceeds `upper_budget`, or on
    timeout (seconds) with the best bounds found so far.
    """
    if d.n < 1:
        raise ValueError("need at least one vertex")
    acyclic, _ = is_acyclic(d)
    if acyclic:
        return 1, _partition_certificate(d, [0] * d.n, 1)

    order = sorted(range(d.n), key=lambda v: (-d.degree(v), v))
    greedy = _greedy_acyclic(d, order)
    best_k = max(greedy) + 1
    best_colour = list(greedy)
    lower = 2  # a directed cycle exists
    deadline = None if timeout is None else time.monotonic() + timeout

    colour = [-1] * d.n
    masks: list[int] = []

    def search(pos: int) -> None:
        nonlocal best_k, best_colour
        if deadline is not None and time.monotonic() > deadline:
            raise Exceeded(lower, best_k, "timeout")
        if len(masks) >= best_k:
            return
        if pos == d.n:
            best_k = len(masks)
            best_colour = list(colour)
            return
        v = order[pos]
        limit = len(masks)
        if upper_budget is not None:
            limit = min(limit, upper_budget - 1)
        for c in range(min(limit + 1, best_k - 1)):
            if c == len(masks):
                masks.append(0)
            if _class_stays_acyclic(d, masks[c], v):
                colour[v] = c
                masks[c] |= 1 << v
                search(pos + 1)
                masks[c] &= ~(1 << v)
                colour[v] = -1
            if c == len(masks) - 1 and masks[c] == 0:
                masks.pop()

    search(0)
    if upper_budget is not None and best_k > upper_budget:
        raise Exceeded(upper_budget + 1, None, "budget")
    return best_k, _partition_certificate(d, best_colour, best_k)


def chromatic_number(
    g: Graph,
    upper_budget: Optional[int] = None,
    timeout: Optional[float] = None,
) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Exact chromatic number with a partition into independent sets."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if not g.edges:
        return 1, (tuple(range(g.n)),)

    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    colour = [-1] * g.n
    masks: list[int] = []
    for v in order:  # greedy upper bound
        for c, mask in enumerate(masks):
            if not mask & g.adj_mask[v]:
                colour[v] = c
                masks[c] |= 1 << v
                break
        else:
            colour[v] = len(masks)
            masks.append(1 << v)
    best_k = len(masks)
    best_colour = list(colour)
    deadline = None if timeout is None else time.monotonic() + timeout

    colour = [-1] * g.n
    masks = []

    def search(pos: int) -> None:
        nonlocal best_k, best_colour
        if deadline is not None and time.monotonic() > deadline:
            raise Exceeded(2, best_k, "timeout")
        if len(masks) >= best_k:
            return
        if pos == g.n:
            best_k = len(masks)
            best_colour = list(colour)
            return
        v = order[pos]
        limit = len(masks)
        if upper_budget is not None:
            limit = min(limit, upper_budget - 1)
        for c in range(min(limit + 1, best_k - 1)):
            if c == len(masks):
                masks.append(0)
            if not masks[c] & g.adj_mask[v]:
                colour[v] = c
                masks[c] |= 1 << v
                search(pos + 1)
                masks[c] &= ~(1 << v)
                colour[v] = -1
            if c == len(masks) - 1 and masks[c] == 0:
                masks.pop()

    search(0)
    if upper_budget is not None and best_k > upper_budget:
        raise Exceeded(upper_budget + 1, None, "budget")
    classes = tuple(
        tuple(sorted(v for v in range(g.n) if best_colour[v] == c))
        for c in range(best_k)
    )
    return best_k, classes


def verify_acyclic_partition(d: Digraph, cert: AcyclicPartition) -> bool:
    """Independent certificate check: re-validates arc by arc, no solver."""
    seen: set[int] = set()
    for cls in cert.classes:
        cs = set(cls)
        if len(cs) != len(cls) or cs & seen:
            return False
        if any(not 0 <= v < d.n for v in cs):
            return False
        seen |= cs
    if seen != set(range(d.n)):
        return False
    if len(cert.topo_orders) != len(cert.classes):
        return False
    for cls, topo in zip(cert.classes, cert.topo_orders):
        if sorted(topo) != sorted(cls):
            return False
        pos = {v: i for i, v in enumerate(topo)}
        for u, v in d.arcs:
            if u in pos and v in pos and pos[u] >= pos[v]:
                return False
    return True


def verify_independent_partition(g: Graph, classes: Sequence[Sequence[int]]) -> bool:
    seen: set[int] = set()
    for cls in classes:
        cs = set(cls)
        if len(cs) != len(cls) or cs & seen:
            return False
        if any(not 0 <= v < g.n for v in cs):
            return False
        for u, v in g.edges:
            if u in cs and v in cs:
                return False
        seen |= cs
    return seen == set(range(g.n))


def arc_bipartition(d: Digraph, order: Optional[Sequence[int]] = None) -> ArcBipartition:
    """Split the arcs into forward and backward classes along a vertex order.

    Both classes are acyclic for every order: within either class all arcs
    run the same way relative to the order.
    """
    if order is None:
        order = tuple(range(d.n))
    else:
        order = tuple(order)
        if sorted(order) != list(range(d.n)):
            raise ValueError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    forward = frozenset((u, v) for u, v in d.arcs if pos[u] < pos[v])
    backward = frozenset(d.arcs - forward)
    return ArcBipartition(forward, backward, order)


def max_dichromatic_over_induced(d: Digraph, size_cap: int) -> int:
    """Max dichromatic number over induced subdigraphs on <= size_cap vertices.

    Exhaustive over vertex subsets; test oracle for monotonicity and the
    finite compactness property.
    """
    if not 1 <= size_cap <= d.n:
        raise ValueError("size_cap must be between 1 and n")
    best = 1
    for size in range(2, size_cap + 1):
        for w in combinations(range(d.n), size):
            sub, _ = induced(d, w)
            k, _ = dichromatic_number(sub)
            best = max(best, k)
    return best

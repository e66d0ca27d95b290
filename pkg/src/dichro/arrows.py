"""Vertex partition relations on finite digraphs.

arrows(D, D0, r) decides whether every r-colouring of V(D) leaves a
monochromatic copy of D0; the disjunctive and conjunctive variants take a
set of targets.  On failure a witness colouring is returned and re-checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Digraph, find_embedding, induced


class CapExceeded(Exception):
    """r^n is beyond the configured search cap."""


@dataclass(frozen=True)
class ArrowReport:
    holds: bool
    witness_colouring: Optional[tuple[int, ...]]
    checked_colourings: int  # search nodes examined, not raw r^n


class _ClassOracle:
    """Memoized "does this colour class contain some target?" test.

    Keyed by the class bitmask; classes recur across search branches.
    """

    def __init__(self, d: Digraph, targets: Sequence[Digraph]):
        self.d = d
        self.targets = list(targets)
        self.cache: dict[int, bool] = {}
        self.min_size = min((t.n for t in self.targets), default=0)

    def hits(self, mask: int) -> bool:
        if not self.targets or bin(mask).count("1") < self.min_size:
            return False
        hit = self.cache.get(mask)
        if hit is None:
            verts = [v for v in range(self.d.n) if mask >> v & 1]
            sub, _ = induced(self.d, verts)
            hit = any(find_embedding(t, sub) is not None for t in self.targets)
            self.cache[mask] = hit
        return hit


def _witness_search(
    d: Digraph, targets: Sequence[Digraph], r: int, cap: int
) -> tuple[Optional[list[int]], int]:
    """Find an r-colouring where no class contains any target.

    Depth-first over vertices; a partial colouring dies as soon as some
    class already embeds a target.  Colour-class symmetry is broken by
    letting colour c appear only after colour c-1.
    """
    if r < 1:
        raise ValueError("need at least one colour")
    if r ** d.n > cap:
        raise CapExceeded(f"{r}^{d.n} colourings exceed the cap {cap}")
    oracle = _ClassOracle(d, targets)
    colour = [-1] * d.n
    masks = [0] * r
    nodes = 0

    def assign(v: int, used: int) -> bool:
        nonlocal nodes
        if v == d.n:
            return True
        for c in range(min(used + 1, r)):
            nodes += 1
            masks[c] |= 1 << v
            if not oracle.hits(masks[c]):
                colour[v] = c
                if assign(v + 1, max(used, c + 1)):
                    return True
                colour[v] = -1
            masks[c] &= ~(1 << v)
        return False

    found = assign(0, 0)
    return (list(colour) if found else None), nodes


def _verify_witness(
    d: Digraph, targets: Sequence[Digraph], r: int, colouring: Sequence[int]
) -> None:
    assert len(colouring) == d.n and all(0 <= c < r for c in colouring)
    for c in range(r):
        verts = [v for v in range(d.n) if colouring[v] == c]
        sub, _ = induced(d, verts)
        for t in targets:
            assert find_embedding(t, sub) is None, "witness admits a copy"


def arrows_any(
    d: Digraph, targets: Sequence[Digraph], r: int, cap: int = 10**7
) -> ArrowReport:
    """Disjunctive relation: every r-colouring has a class containing some
    target from the list."""
    witness, nodes = _witness_search(d, targets, r, cap)
    if witness is None:
        return ArrowReport(True, None, nodes)
    _verify_witness(d, targets, r, witness)
    return ArrowReport(False, tuple(witness), nodes)


def arrows(d: Digraph, d0: Digraph, r: int, cap: int = 10**7) -> ArrowReport:
    """The relation D -> (D0)^1_r on vertex colourings."""
    return arrows_any(d, [d0], r, cap)


def arrows_all(
    d: Digraph, targets: Sequence[Digraph], r: int, cap: int = 10**7
) -> ArrowReport:
    """Conjunctive relation: holds iff arrows(d, t, r) holds for every t.

    Vacuously true for an empty target list; on failure the witness for the
    first failing target is reported.
    """
    total = 0
    for t in targets:
        rep = arrows(d, t, r, cap)
        total += rep.checked_colourings
        if not rep.holds:
            return ArrowReport(False, rep.witness_colouring, total)
    return ArrowReport(True, None, total)

"""Digirth-preserving amalgamation of twin digraphs.

Twins are isomorphic digraphs agreeing on a common root, via an
order-preserving isomorphism fixing the root pointwise.  Their union is
always digon-free, and when every member has digirth > k the union keeps
digirth > k; adding a long cycle through coherent non-root representatives
also keeps digirth > k.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .core import Digraph, digirth


class InvalidFamily(ValueError):
    """A twin-family invariant failed; the message names the clause."""


class TooFewCopies(ValueError):
    """cycle_amalgamate needs strictly more copies than the digirth bound."""


class InvalidReps(ValueError):
    """Representatives must be coherent non-root twin images."""


@dataclass(frozen=True)
class LabeledDigraph:
    """A digraph over an arbitrary integer label set.

    The dense-vertex Digraph type cannot express overlapping members, so
    amalgamation works over labels and densifies at the end.
    """

    labels: frozenset[int]
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "labels", frozenset(self.labels))
        object.__setattr__(self, "arcs", frozenset(map(tuple, self.arcs)))
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u not in self.labels or v not in self.labels:
                raise ValueError(f"arc ({u},{v}) uses an unknown label")
            if (v, u) in self.arcs:
                raise ValueError(f"digon between {u} and {v}")

    @classmethod
    def from_digraph(cls, d: Digraph) -> "LabeledDigraph":
        return cls(frozenset(range(d.n)), d.arcs)

    def to_digraph(self) -> tuple[Digraph, dict[int, int]]:
        """Densify order-preservingly; returns the digraph and label -> index."""
        order = sorted(self.labels)
        dense = {lab: i for i, lab in enumerate(order)}
        arcs = frozenset((dense[u], dense[v]) for u, v in self.arcs)
        return Digraph(len(order), arcs), dense

    def digirth(self) -> Optional[int]:
        d, _ = self.to_digraph()
        return digirth(d)


def make_twin(
    member: LabeledDigraph | Digraph,
    root: Iterable[int],
    offset: int,
) -> tuple[LabeledDigraph, dict[int, int]]:
    """Relabeled copy of `member`, identical on the root, disjoint elsewhere.

    Non-root labels are sent, in increasing order, to offset, offset+1, ...
    Returns the copy and the order-preserving isomorphism.
    """
    if isinstance(member, Digraph):
        member = LabeledDigraph.from_digraph(member)
    root = frozenset(root)
    if not root <= member.labels:
        raise ValueError("root must be a subset of the member's labels")
    moved = sorted(member.labels - root)
    fresh = range(offset, offset + len(moved))
    for lab in fresh:
        if lab in member.labels:
            raise ValueError(f"fresh label {lab} collides with the member")
    iso = {lab: lab for lab in root}
    iso.update(zip(moved, fresh))
    copy = LabeledDigraph(
        frozenset(iso.values()),
        frozenset((iso[u], iso[v]) for u, v in member.arcs),
    )
    return copy, iso


@dataclass(frozen=True)
class TwinFamily:
    """Pairwise-twin digraphs over a common root.

    Only the maps from member 0 are stored; psi_{i,j} is derived by
    composition, so coherence holds by construction.
    """

    members: tuple[LabeledDigraph, ...]
    root: frozenset[int]
    isos_from_first: tuple[dict[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "root", frozenset(self.root))
        object.__setattr__(self, "isos_from_first", tuple(self.isos_from_first))

    @classmethod
    def from_base(
        cls,
        base: LabeledDigraph | Digraph,
        root: Iterable[int],
        copies: int,
        offset: Optional[int] = None,
    ) -> "TwinFamily":
        """Build `copies` pairwise twins of `base` sharing `root`."""
        if isinstance(base, Digraph):
            base = LabeledDigraph.from_digraph(base)
        root = frozenset(root)
        if copies < 1:
            raise ValueError("need at least one copy")
        if offset is None:
            offset = max(base.labels, default=-1) + 1
        members = [base]
        isos: list[dict[int, int]] = [{lab: lab for lab in base.labels}]
        step = len(base.labels - root)
        for i in range(1, copies):
            twin, iso = make_twin(base, root, offset + (i - 1) * step)
            members.append(twin)
            isos.append(iso)
        return cls(tuple(members), root, tuple(isos))

    @cached_property
    def m(self) -> int:
        return len(self.members)

    def psi(self, i: int, j: int) -> dict[int, int]:
        """The isomorphism member i -> member j (psi_{0,j} o psi_{0,i}^-1)."""
        fwd = self.isos_from_first[j]
        inv = {w: v for v, w in self.isos_from_first[i].items()}
        return {lab: fwd[inv[lab]] for lab in self.members[i].labels}

    def validate(self) -> None:
        """Raise InvalidFamily naming the violated clause, if any."""
        if len(self.members) != len(self.isos_from_first):
            raise InvalidFamily("one isomorphism per member is required")
        base = self.members[0]
        if not self.root <= base.labels:
            raise InvalidFamily("root is not contained in member 0")
        for i in range(self.m):
            for j in range(i + 1, self.m):
                inter = self.members[i].labels & self.members[j].labels
                if inter != self.root:
                    raise InvalidFamily(
                        f"members {i} and {j} intersect in {sorted(inter)}, "
                        f"not the root"
                    )
        for j, iso in enumerate(self.isos_from_first):
            mem = self.members[j]
            if set(iso) != set(base.labels) or set(iso.values()) != set(mem.labels):
                raise InvalidFamily(f"psi_0{j} is not a bijection onto member {j}")
            for lab in self.root:
                if iso[lab] != lab:
                    raise InvalidFamily(f"psi_0{j} moves root label {lab}")
            mapped = frozenset((iso[u], iso[v]) for u, v in base.arcs)
            if mapped != mem.arcs:
                raise InvalidFamily(f"psi_0{j} is not a digraph isomorphism")


@dataclass(frozen=True)
class AmalgamResult:
    """A dense amalgam plus the label bookkeeping to find twin images in it."""

    digraph: Digraph
    labels: tuple[int, ...]      # labels[i] = merged label of dense vertex i
    index_of: dict[int, int]     # merged label -> dense vertex

    def dense(self, label: int) -> int:
        return self.index_of[label]


def _merge(fam: TwinFamily) -> tuple[set[int], set[tuple[int, int]]]:
    labels: set[int] = set()
    arcs: set[tuple[int, int]] = set()
    for mem in fam.members:
        labels |= mem.labels
        arcs |= mem.arcs
    return labels, arcs


def amalgamate(fam: TwinFamily) -> AmalgamResult:
    """Union of the family over the merged label set, relabeled densely.

    Digon-free by the twin structure; if every member has digirth > k, so
    does the output.
    """
    fam.validate()
    labels, arcs = _merge(fam)
    for u, v in arcs:
        if (v, u) in arcs:
            raise InvalidFamily(f"union creates a digon between {u} and {v}")
    order = sorted(labels)
    dense = {lab: i for i, lab in enumerate(order)}
    dg = Digraph(len(order), frozenset((dense[u], dense[v]) for u, v in arcs))
    return AmalgamResult(dg, tuple(order), dense)


def cycle_amalgamate(
    fam: TwinFamily,
    reps: Sequence[int],
    k: int,
    unchecked: bool = False,
) -> AmalgamResult:
    """Amalgamate and thread a directed m-cycle through the representatives.

    Requires m > k and (unless `unchecked`) every member digirth > k, which
    together guarantee the output keeps digirth > k while containing a
    directed m-cycle.
    """
    if k < 3:
        raise ValueError("digirth bound k must be at least 3")
    if fam.m <= k:
        raise TooFewCopies(f"need more than k={k} copies, got {fam.m}")
    if len(reps) != fam.m:
        raise InvalidReps("one representative per member is required")
    fam.validate()
    for i, rep in enumerate(reps):
        if rep in fam.root:
            raise InvalidReps(f"representative {rep} lies in the root")
        if rep not in fam.members[i].labels:
            raise InvalidReps(f"representative {rep} is not in member {i}")
    base_rep = {w: v for v, w in fam.isos_from_first[0].items()}[reps[0]]
    for i in range(1, fam.m):
        if fam.isos_from_first[i][base_rep] != reps[i]:
            raise InvalidReps("representatives are not coherent under the twin maps")
    if not unchecked:
        for i, mem in enumerate(fam.members):
            g = mem.digirth()
            if g is not None and g <= k:
                raise InvalidFamily(f"member {i} has digirth {g} <= k={k}")

    result = amalgamate(fam)
    arcs = set(result.digraph.arcs)
    m = fam.m
    for i in range(m):
        u = result.index_of[reps[i]]
        v = result.index_of[reps[(i + 1) % m]]
        arcs.add((u, v))
    dg = Digraph(result.digraph.n, frozenset(arcs))
    return AmalgamResult(dg, result.labels, result.index_of)


def no_short_twin_path(d: Digraph, alpha: int, alpha_prime: int, k: int) -> bool:
    """True iff every directed path from alpha to alpha_prime has length > k.

    Paths are simple and nontrivial (length >= 1); bounded-depth search.
    """
    if k < 0:
        return True

    def dfs(v: int, depth: int, seen: set[int]) -> bool:
        # Returns True when a path of length <= k reaches alpha_prime.
        if depth >= k:
            return False
        for w in d.out_adj[v]:
            if w == alpha_prime:
                return True
            if w not in seen:
                seen.add(w)
                if dfs(w, depth + 1, seen):
                    return True
                seen.remove(w)
        return False

    return not dfs(alpha, 0, {alpha})

#!/usr/bin/env python3
"""Brute-force check of the maximum dichromatic number over all
orientations of K3 and K4.

Deliberately self-contained: no imports from the dichro package, so it
can serve as an independent cross-check.  Everything is done the dumb
way — enumerate every orientation, every colouring, test acyclicity of
each colour class by literal cycle search.
"""

import itertools
import sys


def has_cycle(vertices, arcs):
    # DFS with colours; only arcs inside `vertices` count
    vs = set(vertices)
    adj = {v: [w for (u, w) in arcs if u == v and w in vs] for v in vs}
    state = {v: 0 for v in vs}  # 0 unseen, 1 on stack, 2 done

    def visit(v):
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1:
                return True
            if state[w] == 0 and visit(w):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in vs)


def dichromatic(n, arcs):
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n):
            classes = [[v for v in range(n) if col[v] == c] for c in range(k)]
            if all(not has_cycle(cls, arcs) for cls in classes):
                return k
    raise AssertionError("unreachable")


def max_over_orientations(n):
    edges = list(itertools.combinations(range(n), 2))
    best = 0
    for flips in itertools.product((False, True), repeat=len(edges)):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
        best = max(best, dichromatic(n, arcs))
    return best


def main():
    for n in (3, 4):
        print(f"K{n} {max_over_orientations(n)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

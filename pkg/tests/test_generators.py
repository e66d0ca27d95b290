import random
from itertools import combinations
from math import comb

import pytest

from dichro.core import digirth, find_embedding, is_acyclic, reverse
from dichro.generators import (
    InvalidSize,
    ShiftVertexIndex,
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
from dichro.solver import dichromatic_number
from oracles import brute_chi_graph


class TestComplete:
    @pytest.mark.parametrize("n,m", [(1, 0), (3, 3), (6, 15)])
    def test_edge_counts(self, n, m):
        assert complete_graph(n).m == m

    def test_invalid(self):
        with pytest.raises(InvalidSize):
            complete_graph(0)


class TestHalfGraph:
    def test_one(self):
        g = half_graph(1)
        assert g.n == 2 and g.edges == frozenset({(0, 1)})

    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    def test_edge_count(self, n):
        assert half_graph(n).m == n * (n + 1) // 2

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_orientations_acyclic_and_reversed(self, n):
        fwd = half_fwd(n)
        back = half_back(n)
        assert back == reverse(fwd)
        assert is_acyclic(fwd)[0] and is_acyclic(back)[0]
        assert dichromatic_number(fwd)[0] == 1

    def test_fwd_orients_half_graph(self):
        from dichro.core import is_orientation_of

        assert is_orientation_of(half_fwd(4), half_graph(4))


class TestShiftGraph:
    def test_2_4_explicit(self):
        g, idx = shift_graph(2, 4)
        assert g.n == 6 and g.m == 4
        # Frozen from direct enumeration of the increasing triples of {0..3}.
        expected = {
            ((0, 1), (1, 2)),
            ((0, 1), (1, 3)),
            ((0, 2), (2, 3)),
            ((1, 2), (2, 3)),
        }
        got = {
            tuple(sorted((idx.unrank(u), idx.unrank(v))))
            for u, v in g.edges
        }
        assert got == expected

    def test_chi_2_4(self):
        g, _ = shift_graph(2, 4)
        assert brute_chi_graph(g.n, set(g.edges)) == 2

    @pytest.mark.parametrize("k,m", [(2, 4), (2, 6), (3, 5), (3, 7)])
    def test_vertex_count(self, k, m):
        g, _ = shift_graph(k, m)
        assert g.n == comb(m, k)

    @pytest.mark.parametrize("k,m", [(2, 5), (2, 6), (3, 6)])
    def test_no_short_odd_cycles(self, k, m):
        # No odd cycle shorter than 2k, checked by enumerating simple cycles.
        g, _ = shift_graph(k, m)
        adj = g.adj

        def has_cycle_of_length(target):
            def walk(base, v, path):
                for w in adj[v]:
                    if w == base and len(path) == target:
                        return True
                    if w > base and w not in path and len(path) < target:
                        if walk(base, w, path + [w]):
                            return True
                return False

            return any(walk(b, b, [b]) for b in range(g.n))

        for odd in range(3, 2 * k, 2):
            assert not has_cycle_of_length(odd)

    def test_index_round_trip(self):
        idx = ShiftVertexIndex(3, 7)
        for i in range(comb(7, 3)):
            assert idx.rank(idx.unrank(i)) == i
        for sub in combinations(range(7), 3):
            assert idx.unrank(idx.rank(sub)) == sub

    def test_colex_order_preserved(self):
        idx = ShiftVertexIndex(2, 5)
        ranks = [idx.rank(s) for s in sorted(combinations(range(5), 2), key=lambda t: t[::-1])]
        assert ranks == list(range(comb(5, 2)))

    def test_invalid(self):
        with pytest.raises(InvalidSize):
            shift_graph(1, 5)
        with pytest.raises(InvalidSize):
            shift_graph(3, 3)


class TestCyclesAndPaths:
    def test_c3(self):
        assert digirth(directed_cycle(3)) == 3

    def test_p5(self):
        assert is_acyclic(directed_path(5))[0]

    def test_reverse_cycle_isomorphic(self):
        c = directed_cycle(6)
        assert find_embedding(reverse(c), c) is not None

    def test_invalid_cycle(self):
        with pytest.raises(InvalidSize):
            directed_cycle(2)


class TestRandomTournament:
    def test_n1(self):
        assert random_tournament(1, 0).arcs == frozenset()

    def test_deterministic(self):
        assert random_tournament(9, 42) == random_tournament(9, 42)
        assert random_tournament(9, 42) != random_tournament(9, 43)

    def test_n3_hits_both_types(self):
        kinds = {
            is_acyclic(random_tournament(3, seed))[0] for seed in range(40)
        }
        assert kinds == {True, False}

    def test_is_tournament(self):
        t = random_tournament(6, 7)
        assert t.m == 15


class TestSparseSample:
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_digirth_exact(self, k):
        for seed in range(5):
            d = sparse_sample(60, k, seed)
            assert d.n >= 60
            assert digirth(d) == k + 1
            assert find_embedding(directed_cycle(k + 1), d) is not None
            assert dichromatic_number(d, upper_budget=None)[0] >= 2

    def test_deterministic(self):
        assert sparse_sample(40, 3, 5) == sparse_sample(40, 3, 5)

    def test_invalid(self):
        with pytest.raises(ValueError):
            sparse_sample(10, 2, 0)
        with pytest.raises(ValueError):
            sparse_sample(3, 3, 0)

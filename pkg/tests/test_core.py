import random

import pytest

from dichro.core import (
    Digraph,
    DigonCreated,
    Embedding,
    Graph,
    digirth,
    digraph_union,
    find_embedding,
    induced,
    is_acyclic,
    is_orientation_of,
    reverse,
    underlying_graph,
)
from oracles import brute_digirth, brute_embeds, brute_is_acyclic
from util import random_digraph


def C(n):
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def P(n):
    return Digraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def transitive_tournament(n):
    return Digraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


class TestInvariants:
    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Digraph(2, frozenset({(1, 1)}))

    def test_rejects_digon(self):
        with pytest.raises(ValueError):
            Digraph(2, frozenset({(0, 1), (1, 0)}))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Digraph(2, frozenset({(0, 2)}))

    def test_graph_rejects_loop(self):
        with pytest.raises(ValueError):
            Graph(2, frozenset({(1, 1)}))

    def test_graph_normalizes_edges(self):
        g = Graph(3, frozenset({(2, 0)}))
        assert g.edges == frozenset({(0, 2)})


class TestIsAcyclic:
    def test_path(self):
        flag, order = is_acyclic(P(3))
        assert flag and order == [0, 1, 2]

    def test_cycle(self):
        flag, order = is_acyclic(C(3))
        assert not flag and order is None

    def test_empty(self):
        flag, order = is_acyclic(Digraph(5, frozenset()))
        assert flag and sorted(order) == list(range(5))

    def test_witness_is_topological(self):
        rng = random.Random(7)
        for _ in range(30):
            d = random_digraph(8, 0.3, rng)
            flag, order = is_acyclic(d)
            assert flag == brute_is_acyclic(d.n, set(d.arcs))
            if flag:
                pos = {v: i for i, v in enumerate(order)}
                assert all(pos[u] < pos[v] for u, v in d.arcs)


class TestDigirth:
    def test_c5(self):
        assert digirth(C(5)) == 5

    def test_transitive_tournament(self):
        assert digirth(transitive_tournament(4)) is None

    def test_disjoint_cycles(self):
        # C3 disjoint-union C7; expected value frozen from the brute-force
        # cycle enumeration oracle.
        arcs = set(C(3).arcs)
        arcs |= {(3 + i, 3 + (i + 1) % 7) for i in range(7)}
        d = Digraph(10, frozenset(arcs))
        assert brute_digirth(10, set(arcs)) == 3
        assert digirth(d) == 3

    def test_matches_oracle_on_random(self):
        rng = random.Random(11)
        for _ in range(40):
            d = random_digraph(8, 0.35, rng)
            assert digirth(d) == brute_digirth(d.n, set(d.arcs))

    def test_absent_iff_acyclic(self):
        rng = random.Random(13)
        for _ in range(40):
            d = random_digraph(9, 0.25, rng)
            assert (digirth(d) is None) == is_acyclic(d)[0]


class TestReverse:
    def test_c3(self):
        r = reverse(C(3))
        assert digirth(r) == 3

    def test_single_arc(self):
        assert reverse(Digraph(2, frozenset({(0, 1)}))).arcs == frozenset({(1, 0)})

    def test_involution_and_digirth(self):
        rng = random.Random(3)
        for _ in range(25):
            d = random_digraph(9, 0.3, rng)
            assert reverse(reverse(d)) == d
            assert digirth(reverse(d)) == digirth(d)


class TestInduced:
    def test_path_from_cycle(self):
        sub, relabel = induced(C(4), [0, 1, 2])
        assert sub.arcs == frozenset({(0, 1), (1, 2)})
        assert relabel == {0: 0, 1: 1, 2: 2}

    def test_identity(self):
        d = random_digraph(7, 0.4, random.Random(5))
        sub, _ = induced(d, range(7))
        assert sub == d

    def test_empty(self):
        sub, relabel = induced(C(4), [])
        assert sub.n == 0 and relabel == {}

    def test_digirth_monotone_under_nesting(self):
        rng = random.Random(17)
        for _ in range(25):
            d = random_digraph(10, 0.35, rng)
            big = rng.sample(range(10), 8)
            small = rng.sample(big, 5)
            g_small = digirth(induced(d, small)[0])
            g_big = digirth(induced(d, big)[0])
            if g_small is not None and g_big is not None:
                assert g_small >= g_big
            if g_big is None:
                assert g_small is None


class TestOrientation:
    def test_cyclic_triangle(self):
        k3 = Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))
        assert is_orientation_of(C(3), k3)

    def test_mismatch(self):
        c4_graph = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
        assert not is_orientation_of(C(3), c4_graph)

    def test_empty_digraph_vs_k3(self):
        k3 = Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))
        assert not is_orientation_of(Digraph(3, frozenset()), k3)

    def test_underlying_graph(self):
        assert underlying_graph(C(4)).edges == frozenset(
            {(0, 1), (1, 2), (2, 3), (0, 3)}
        )
        assert underlying_graph(Digraph(3, frozenset())).edges == frozenset()
        tt = transitive_tournament(5)
        assert underlying_graph(tt).m == 10

    def test_round_trip(self):
        rng = random.Random(19)
        for _ in range(25):
            d = random_digraph(8, 0.4, rng)
            assert is_orientation_of(d, underlying_graph(d))


class TestUnion:
    def test_path_glue(self):
        a = Digraph(2, frozenset({(0, 1)}))
        b = Digraph(2, frozenset({(0, 1)}))
        u = digraph_union(a, b, map2={0: 1, 1: 2})
        assert u.arcs == frozenset({(0, 1), (1, 2)})

    def test_digon_error(self):
        a = Digraph(2, frozenset({(0, 1)}))
        b = Digraph(2, frozenset({(1, 0)}))
        with pytest.raises(DigonCreated):
            digraph_union(a, b)

    def test_disjoint_cycles(self):
        u = digraph_union(C(3), C(3), map2={i: i + 3 for i in range(3)})
        assert u.n == 6 and u.m == 6 and digirth(u) == 3


class TestFindEmbedding:
    def test_cycle_into_cyclic_tournament(self):
        assert find_embedding(C(3), C(3)) is not None

    def test_cycle_into_transitive(self):
        assert find_embedding(C(3), transitive_tournament(5)) is None

    def test_c4_into_c4_with_chord(self):
        target = Digraph(4, frozenset(C(4).arcs | {(0, 2)}))
        # Frozen from the exhaustive embedding oracle.
        assert brute_embeds(4, set(C(4).arcs), 4, set(target.arcs))
        emb = find_embedding(C(4), target)
        assert emb is not None

    def test_matches_oracle(self):
        rng = random.Random(23)
        for _ in range(30):
            d0 = random_digraph(4, 0.5, rng)
            d = random_digraph(6, 0.5, rng)
            found = find_embedding(d0, d)
            assert (found is not None) == brute_embeds(
                d0.n, set(d0.arcs), d.n, set(d.arcs)
            )
            if found is not None:
                # Embedding validates independently via its constructor.
                Embedding(d0, d, found.mapping)

    def test_deterministic(self):
        d0 = C(3)
        d = random_digraph(8, 0.5, random.Random(29))
        a = find_embedding(d0, d)
        b = find_embedding(d0, d)
        if a is not None:
            assert a.mapping == b.mapping

import random
from itertools import combinations

import pytest

from dichro.arrows import ArrowReport, CapExceeded, arrows, arrows_all, arrows_any
from dichro.core import Digraph, digraph_union, find_embedding, induced, reverse
from dichro.solver import dichromatic_number
from util import random_digraph


def C(n):
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def cyclic_k4():
    return Digraph(4, frozenset({(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)}))


def assert_witness_sound(d, targets, r, report):
    assert report.witness_colouring is not None
    col = report.witness_colouring
    assert len(col) == d.n and all(0 <= c < r for c in col)
    for c in range(r):
        sub, _ = induced(d, [v for v in range(d.n) if col[v] == c])
        for t in targets:
            assert find_embedding(t, sub) is None


class TestArrows:
    def test_c3_one_colour(self):
        assert arrows(C(3), C(3), 1).holds

    def test_c3_two_colours(self):
        report = arrows(C(3), C(3), 2)
        assert not report.holds
        assert_witness_sound(C(3), [C(3)], 2, report)

    def test_disjoint_copies(self):
        # Three disjoint directed triangles, 2 colours: each copy can be
        # split, so the relation fails.
        d = C(3)
        for _ in range(2):
            off = d.n
            d = digraph_union(d, C(3), map2={i: i + off for i in range(3)})
        report = arrows(d, C(3), 2)
        assert not report.holds
        assert_witness_sound(d, [C(3)], 2, report)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            arrows(C(5), C(3), 3, cap=10)


class TestArrowsAny:
    def test_acyclic_target_one_colour(self):
        d = Digraph(4, frozenset({(0, 1), (1, 2)}))
        assert not arrows_any(d, [C(3), C(4)], 1).holds

    def test_cyclic_k4_one_colour(self):
        assert arrows_any(cyclic_k4(), [C(3), C(4)], 1).holds

    def test_chi_identity(self):
        # arrows_any over all cycle lengths <= n is the definition of
        # "every r-colouring has a monochromatic cycle", i.e. chi > r.
        rng = random.Random(101)
        cycles = [C(k) for k in range(3, 8)]
        for _ in range(30):
            d = random_digraph(rng.randint(3, 7), 0.5, rng)
            chi, _ = dichromatic_number(d)
            for r in (1, 2):
                assert arrows_any(d, cycles, r).holds == (chi > r)


class TestArrowsAll:
    def test_singleton_matches_arrows(self):
        rng = random.Random(103)
        for _ in range(10):
            d = random_digraph(5, 0.6, rng)
            assert arrows_all(d, [C(3)], 2).holds == arrows(d, C(3), 2).holds

    def test_empty_targets_vacuous(self):
        assert arrows_all(C(3), [], 3).holds

    def test_cyclic_k5_one_colour_equals_embedding(self):
        rng = random.Random(107)
        arcs = frozenset(
            (u, v) if rng.random() < 0.5 else (v, u)
            for u, v in combinations(range(5), 2)
        )
        d = Digraph(5, arcs)
        expected = all(
            find_embedding(t, d) is not None for t in (C(3), C(4))
        )
        assert arrows_all(d, [C(3), C(4)], 1).holds == expected


class TestProperties:
    def test_monotone_in_r(self):
        rng = random.Random(109)
        targets = [C(3), C(4)]
        for _ in range(15):
            d = random_digraph(6, 0.6, rng)
            results = {r: arrows_any(d, targets, r).holds for r in (1, 2, 3)}
            if results[2]:
                assert results[1]
            if results[3]:
                assert results[2]

    def test_rev_symmetry(self):
        rng = random.Random(113)
        for _ in range(15):
            d = random_digraph(6, 0.5, rng)
            for t in (C(3), C(4)):
                assert (
                    arrows(d, t, 2).holds
                    == arrows(reverse(d), reverse(t), 2).holds
                )

    def test_report_shape(self):
        rep = arrows(C(3), C(3), 1)
        assert isinstance(rep, ArrowReport)
        assert rep.witness_colouring is None
        assert rep.checked_colourings > 0

import random

import pytest

from ribs import (
    Pattern,
    contains_induced,
    empty_graph,
    complete_graph,
    is_chordal,
    is_independent,
    max_degree,
    random_independent_sets,
    sample_bipartite_line,
    sample_chordal,
    sample_claw_free,
    sample_kcolorable,
    sample_kr_free,
    sample_line,
    sample_max_degree,
    sample_staircase_bipartite_line,
)


def test_random_independent_sets_properties():
    rng = random.Random(61)
    g = sample_max_degree(rng, 10, 2)
    sets = random_independent_sets(rng, g, 3, 5)
    assert len(sets) == 5
    for mask in sets:
        assert bin(mask).count("1") == 3
        assert is_independent(g, mask)
    with pytest.raises(RuntimeError):
        random_independent_sets(rng, complete_graph(4), 2, 1)


def test_sample_bipartite_line_yields_matchings():
    rng = random.Random(62)
    for n in (3, 4):
        g, fam = sample_bipartite_line(rng, n, 2 * n - 1)
        assert len(fam.sets) == 2 * n - 1
        assert fam.uniform_size() == n
        assert fam.host is g
        for mask in fam.sets:
            assert is_independent(g, mask)


def test_sample_bipartite_line_respects_requested_sizes():
    rng = random.Random(63)
    g, fam = sample_bipartite_line(rng, 4, 4, sizes=[2, 3, 4, 4])
    assert fam.sizes() == (2, 3, 4, 4)


def test_sample_line_yields_uniform_matchings():
    rng = random.Random(64)
    g, fam = sample_line(rng, 3, 7)
    assert len(fam.sets) == 7
    assert fam.uniform_size() == 3


def test_sample_staircase_sizes():
    rng = random.Random(65)
    for n in (3, 4):
        g, fam = sample_staircase_bipartite_line(rng, n)
        sizes = fam.sizes()
        assert len(sizes) == 2 * n - 1
        for i, s in enumerate(sizes):
            assert s >= min(i + 1, n)


def test_sample_chordal_is_chordal():
    rng = random.Random(66)
    for _ in range(30):
        g = sample_chordal(rng, rng.randint(2, 10))
        assert is_chordal(g) is not None


def test_sample_kcolorable_coloring_is_proper():
    rng = random.Random(67)
    for _ in range(30):
        k = rng.randint(1, 4)
        g, coloring = sample_kcolorable(rng, rng.randint(k, 10), k)
        assert len(coloring) == g.n
        assert max(coloring) < k
        for u, v in g.edges():
            assert coloring[u] != coloring[v]


def test_sample_max_degree_bound():
    rng = random.Random(68)
    for _ in range(30):
        d = rng.randint(0, 4)
        g = sample_max_degree(rng, rng.randint(1, 12), d)
        assert max_degree(g) <= d


def test_sample_kr_free():
    rng = random.Random(69)
    for _ in range(20):
        r = rng.choice((3, 4))
        g = sample_kr_free(rng, rng.randint(4, 10), r)
        assert contains_induced(g, Pattern.complete(r)) is None


def test_sample_claw_free():
    rng = random.Random(70)
    for _ in range(20):
        t = rng.choice((2, 3))
        g = sample_claw_free(rng, rng.randint(4, 12), t)
        assert contains_induced(g, Pattern.star(t + 1)) is None


def test_samplers_are_deterministic_under_seed():
    a = sample_chordal(random.Random(99), 9)
    b = sample_chordal(random.Random(99), 9)
    assert a.adj == b.adj
    g1, f1 = sample_bipartite_line(random.Random(7), 3, 5)
    g2, f2 = sample_bipartite_line(random.Random(7), 3, 5)
    assert g1.adj == g2.adj and f1.sets == f2.sets
    s1 = random_independent_sets(random.Random(3), empty_graph(6), 2, 4)
    s2 = random_independent_sets(random.Random(3), empty_graph(6), 2, 4)
    assert s1 == s2

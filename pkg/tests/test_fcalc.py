import random

import pytest

from ribs import (
    BudgetExceeded,
    CertificationError,
    ColoredFamily,
    FResult,
    brute_rainbow,
    certify_lower_bound,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    drisko_cycle,
    empty_graph,
    enum_independent_sets,
    f_exact,
    find_rainbow,
    line_graph,
    path_graph,
    property_upper_bound,
    sample_chordal,
)

from conftest import random_graph
from oracles import OracleBudget, naive_f


def test_f_exact_frozen_values():
    assert f_exact(cycle_graph(4), 2, 2).value == 3
    assert f_exact(complete_multipartite([3, 3]), 3, 2).value == 3
    assert f_exact(path_graph(4), 2, 2).value == 2
    assert f_exact(line_graph(cycle_graph(6))[0], 3, 3).value == 5
    assert f_exact(empty_graph(3), 2, 2).value == 2


def test_f_exact_undefined_and_bad_params():
    with pytest.raises(ValueError):
        f_exact(complete_graph(3), 2, 2)
    with pytest.raises(ValueError):
        f_exact(path_graph(4), 2, 3)
    with pytest.raises(ValueError):
        f_exact(path_graph(4), 2, 0)


def test_f_exact_budget():
    with pytest.raises(BudgetExceeded):
        f_exact(empty_graph(6), 2, 2, budget=3)
    # a budget large enough for the whole search changes nothing
    free = f_exact(cycle_graph(4), 2, 2)
    capped = f_exact(cycle_graph(4), 2, 2, budget=10_000)
    assert (free.value, free.witness_sets) == (capped.value, capped.witness_sets)


def test_f_exact_witness_family_is_extremal():
    res = f_exact(cycle_graph(4), 2, 2)
    assert isinstance(res, FResult)
    assert len(res.witness_sets) == res.value - 1
    host = cycle_graph(4)
    fam = ColoredFamily.from_vertex_lists(host, res.witness_sets)
    assert brute_rainbow(fam, 2) is None
    assert res.nodes > 0


def test_f_exact_matches_naive_on_small_graphs():
    rng = random.Random(51)
    count = 0
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 6), rng.random())
        for n in (2, 3):
            if not enum_independent_sets(g, n):
                continue
            for m in range(1, n + 1):
                try:
                    want = naive_f(g, n, m, checks=300_000)
                except OracleBudget:
                    continue
                assert f_exact(g, n, m).value == want
                count += 1
    assert count > 100


def test_f_exact_at_least_m_and_monotone():
    rng = random.Random(52)
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 6), rng.random())
        values = {}
        for n in (2, 3):
            if not enum_independent_sets(g, n):
                continue
            for m in range(1, n + 1):
                values[(n, m)] = f_exact(g, n, m).value
                assert values[(n, m)] >= m
        # widening n or shrinking m never raises f
        for (n, m), fv in values.items():
            for (n2, m2), fv2 in values.items():
                if m <= m2 <= n2 <= n:
                    assert fv <= fv2


def test_f_exact_never_exceeds_multiplicity_cap_bound():
    rng = random.Random(53)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 5), rng.random())
        for n in (2, 3):
            pool = enum_independent_sets(g, n)
            if not pool:
                continue
            m = rng.randint(1, n)
            assert f_exact(g, n, m).value <= len(pool) * (m - 1) + 1


def test_certify_lower_bound_round_trip():
    out = drisko_cycle(3)
    fam = ColoredFamily(out.graph, out.family.sets)
    bound = certify_lower_bound(out.graph, 3, 3, fam)
    assert bound == 5
    assert bound == f_exact(out.graph, 3, 3).value


def test_certify_lower_bound_rejects_rainbowed_family():
    g = empty_graph(4)
    fam = ColoredFamily.from_vertex_lists(g, [[0, 1], [2, 3]])
    with pytest.raises(CertificationError) as exc:
        certify_lower_bound(g, 2, 2, fam)
    assert exc.value.witness is not None
    with pytest.raises(ValueError):
        certify_lower_bound(g, 3, 2, fam)


def test_property_upper_bound_consistent_on_chordal():
    rng = random.Random(54)
    g = sample_chordal(rng, 7)
    for n in (2, 3):
        if not enum_independent_sets(g, n):
            continue
        for m in range(1, n + 1):
            assert property_upper_bound(g, n, m, m, trials=60, seed=9) == 60


def test_property_upper_bound_detects_false_bounds():
    out = drisko_cycle(3)
    with pytest.raises(CertificationError):
        property_upper_bound(out.graph, 3, 3, 4, trials=200, seed=0)
    with pytest.raises(ValueError):
        property_upper_bound(complete_graph(3), 2, 2, 3)


def test_property_upper_bound_is_deterministic():
    g = cycle_graph(6)
    a = property_upper_bound(g, 2, 2, 3, trials=50, seed=3)
    b = property_upper_bound(g, 2, 2, 3, trials=50, seed=3)
    assert a == b == 50

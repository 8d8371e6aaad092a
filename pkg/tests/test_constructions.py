import dataclasses

import pytest

from ribs import (
    CertificationError,
    ColoredFamily,
    Digraph,
    Pattern,
    blowup,
    bounded_degree_grid,
    brute_rainbow,
    circulant_power,
    colourable_disjoint_lower,
    colourable_lower,
    contains_induced,
    cycle_graph,
    doubled_family,
    drisko_cycle,
    even_matching_family,
    find_rainbow,
    k_colorable,
    make_graph,
    max_degree,
    multipartite_copies,
    multipartite_repeating,
    ramsey_number,
    ramsey_witness,
    repeating_from_digraph,
    verify_claims,
)


def certify(out):
    stamped = verify_claims(out)
    for claim in stamped:
        assert claim.get("verified") is True or claim["claim"] == "note"
    return stamped


def test_drisko_cycle_certifies():
    for n in (2, 3, 4):
        out = drisko_cycle(n)
        assert len(out.family.sets) == 2 * n - 2
        assert out.graph.n == 2 * n
        certify(out)
        man = out.manifest()
        assert man["name"] == "drisko-cycle"
        assert man["params"] == {"n": n}
        assert len(man["sets"]) == 2 * n - 2


def test_drisko_cycle_is_tight():
    # one more set than 2n-2 forces a rainbow n-matching
    out = drisko_cycle(3)
    extended = ColoredFamily(out.graph, out.family.sets + (out.family.sets[0],))
    assert find_rainbow(extended, 3) is not None


def test_even_matching_family_certifies_and_refuses_odd():
    for n in (2, 4):
        out = even_matching_family(n)
        assert len(out.family.sets) == 2 * n - 1
        certify(out)
    with pytest.raises(ValueError):
        even_matching_family(3)
    with pytest.raises(ValueError):
        even_matching_family(5)


def test_doubled_family_doubles_the_bound():
    base = even_matching_family(2)
    out = doubled_family(base)
    assert out.graph.n == 2 * base.graph.n
    assert any(
        c["claim"] == "no_rainbow" and c["size"] == 3 for c in out.claims
    )
    certify(out)
    assert out.name.startswith("doubled-")


def test_circulant_power_certifies():
    for t, n in ((2, 4), (3, 4), (2, 5)):
        out = circulant_power(t, n)
        assert out.graph.n == t * n
        certify(out)
    # t = 1 degenerates to a single independent column
    out = circulant_power(1, 4)
    certify(out)


def test_multipartite_copies_certifies():
    out = multipartite_copies(3, 2, 4)
    certify(out)
    assert contains_induced(out.graph, Pattern.star(3)) is None


def test_colourable_lower_certifies():
    for k, n, m in ((2, 3, 2), (3, 3, 3), (2, 4, 3)):
        out = colourable_lower(k, n, m)
        assert len(out.family.sets) == k * (m - 1)
        certify(out)
        disjoint = colourable_disjoint_lower(k, n, m)
        certify(disjoint)
        assert disjoint.graph.n == (m - 1) * k * n


def test_blowup_certifies_triangle_free():
    out = blowup(cycle_graph(5), 3, clique_free=3, no_rainbow=3)
    assert out.graph.n == 15
    assert len(out.family.sets) == 5
    certify(out)


def test_ramsey_number_table():
    assert ramsey_number(2, 5) == 5
    assert ramsey_number(4, 2) == 4
    assert ramsey_number(3, 3) == 6
    assert ramsey_number(3, 4) == 9
    assert ramsey_number(4, 3) == 9
    assert ramsey_number(3, 5) == 14
    assert ramsey_number(4, 4) == 18
    assert ramsey_number(5, 5) is None


def test_ramsey_witness_table_cases():
    for r, m in ((3, 3), (3, 4), (4, 3), (2, 4), (4, 2)):
        out = ramsey_witness(r, m)
        certify(out)
        expected = ramsey_number(r, m)
        assert out.graph.n == expected - 1


def test_ramsey_witness_fallback_cases():
    # outside the exact table the witness is best-effort but certified
    out = ramsey_witness(6, 2)
    certify(out)
    out = ramsey_witness(2, 6)
    certify(out)


def test_multipartite_repeating_certifies():
    for r, n in ((4, 2), (4, 3), (5, 3)):
        out = multipartite_repeating(r, n)
        assert out.repeating is not None
        assert out.repeating.columns == r - 2
        assert out.repeating.rows == n
        certify(out)
    with pytest.raises(ValueError):
        multipartite_repeating(2, 3)


def test_bounded_degree_grid_certifies():
    out = bounded_degree_grid(3, 5, 4)
    certify(out)
    assert max_degree(out.graph) <= 3
    with pytest.raises(ValueError):
        bounded_degree_grid(3, 4, 1)
    with pytest.raises(ValueError):
        bounded_degree_grid(3, 4, 5)


def test_repeating_from_digraph_certifies():
    out = repeating_from_digraph(
        Digraph.directed_cycle(4), 3,
        multiplicity=3, cycle_free_up_to=4, no_rainbow=4,
    )
    certify(out)
    assert out.repeating is not None
    assert contains_induced(out.graph, Pattern.cycle(4)) is None


def test_verify_claims_catches_planted_lies():
    out = drisko_cycle(3)
    # claim a rainbow-free size that actually admits a rainbow set
    lie = dataclasses.replace(
        out, claims=({"claim": "no_rainbow", "size": 2},)
    )
    with pytest.raises(CertificationError):
        verify_claims(lie)
    lie = dataclasses.replace(
        out, claims=({"claim": "max_rainbow", "size": 3},)
    )
    with pytest.raises(CertificationError):
        verify_claims(lie)
    lie = dataclasses.replace(
        out, claims=({"claim": "regular", "degree": 7},)
    )
    with pytest.raises(CertificationError):
        verify_claims(lie)
    lie = dataclasses.replace(
        out,
        claims=({"claim": "pattern_free", "kind": "cycle", "param": 6},),
    )
    with pytest.raises(CertificationError):
        verify_claims(lie)
    lie = dataclasses.replace(
        out, claims=({"claim": "independent_set_count", "size": 3, "count": 5},)
    )
    with pytest.raises(CertificationError):
        verify_claims(lie)


def test_verify_claims_chromatic_and_disjoint():
    out = colourable_lower(2, 3, 2)
    assert any(c["claim"] == "chromatic" for c in out.claims)
    certify(out)
    lie = dataclasses.replace(out, claims=({"claim": "chromatic", "k": 1},))
    with pytest.raises(CertificationError):
        verify_claims(lie)
    disjoint = colourable_disjoint_lower(2, 3, 2)
    assert any(c["claim"] == "colors_disjoint" for c in disjoint.claims)
    lie = dataclasses.replace(
        drisko_cycle(3), claims=({"claim": "colors_disjoint"},)
    )
    with pytest.raises(CertificationError):
        verify_claims(lie)


def test_constructed_absences_agree_with_brute_solver():
    for out in (drisko_cycle(3), colourable_lower(2, 3, 2), circulant_power(2, 4)):
        fam = ColoredFamily(out.graph, out.family.sets)
        for claim in out.claims:
            if claim["claim"] == "no_rainbow":
                assert brute_rainbow(fam, claim["size"]) is None

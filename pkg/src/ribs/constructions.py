"""Extremal constructions with machine-checked claims.

Every generator returns a ConstructionOutput bundling a host graph, a
colored family, and a list of claims (no rainbow set of a given size,
forbidden induced patterns, regularity, and so on). Claims are plain
dicts so they serialize straight into manifests; verify_claims re-checks
every one of them from scratch with the exact solver and the pattern
matcher, and raises CertificationError on the first claim that fails.
Nothing is ever emitted on trust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .bitset import bits, mask_of, popcount, to_tuple
from .families import CertificationError, ColoredFamily
from .graphs import (
    Digraph,
    Graph,
    Pattern,
    complete_multipartite,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enum_independent_sets,
    first_independent_subset,
    k_colorable,
    line_graph,
    make_graph,
)
from .reductions import RepeatingGraph
from .solver import find_rainbow, max_rainbow_size

__all__ = [
    "CertificationError",
    "ConstructionOutput",
    "verify_claims",
    "drisko_cycle",
    "even_matching_family",
    "doubled_family",
    "circulant_power",
    "multipartite_copies",
    "colourable_lower",
    "colourable_disjoint_lower",
    "blowup",
    "ramsey_number",
    "ramsey_witness",
    "multipartite_repeating",
    "bounded_degree_grid",
    "repeating_from_digraph",
]


@dataclass(frozen=True)
class ConstructionOutput:
    name: str
    params: dict
    graph: Graph
    family: ColoredFamily
    claims: tuple[dict, ...]
    repeating: RepeatingGraph | None = None

    def manifest(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "vertices": self.graph.n,
            "edges": self.graph.edge_count(),
            "sets": [list(to_tuple(s)) for s in self.family.sets],
            "claims": [dict(c) for c in self.claims],
        }


def _check_claim(out: ConstructionOutput, claim: dict) -> None:
    g = out.graph
    kind = claim["claim"]
    if kind == "no_rainbow":
        if find_rainbow(out.family, claim["size"]) is not None:
            raise CertificationError(f"rainbow {claim['size']}-set exists")
    elif kind == "max_rainbow":
        got = max_rainbow_size(out.family)[0]
        if got != claim["size"]:
            raise CertificationError(f"max rainbow size {got} != {claim['size']}")
    elif kind == "pattern_free":
        pat = Pattern(claim["kind"], claim["param"])
        hit = contains_induced(g, pat)
        if hit is not None:
            raise CertificationError(
                f"induced {claim['kind']}({claim['param']}) at {to_tuple(hit)}"
            )
    elif kind == "regular":
        d = claim["degree"]
        bad = [v for v in range(g.n) if g.degree(v) != d]
        if bad:
            raise CertificationError(f"vertex {bad[0]} has degree {g.degree(bad[0])} != {d}")
    elif kind == "max_degree_at_most":
        d = claim["degree"]
        bad = [v for v in range(g.n) if g.degree(v) > d]
        if bad:
            raise CertificationError(f"vertex {bad[0]} has degree {g.degree(bad[0])} > {d}")
    elif kind == "independent_set_count":
        got = len(enum_independent_sets(g, claim["size"]))
        if got != claim["count"]:
            raise CertificationError(
                f"{got} independent {claim['size']}-sets, expected {claim['count']}"
            )
    elif kind == "independence_below":
        if first_independent_subset(g, g.all_mask, claim["size"]) is not None:
            raise CertificationError(f"independent {claim['size']}-set exists")
    elif kind == "chromatic":
        k = claim["k"]
        if k_colorable(g, k) is None:
            raise CertificationError(f"not {k}-colorable")
        if k > 0 and g.n > 0 and k_colorable(g, k - 1) is not None:
            raise CertificationError(f"already {k - 1}-colorable")
    elif kind == "colors_disjoint":
        seen = 0
        for s in out.family.sets:
            if s & seen:
                raise CertificationError("family sets are not pairwise disjoint")
            seen |= s
    elif kind == "independent_sets_within_columns":
        if out.repeating is None:
            raise CertificationError("claim needs a repeating structure")
        cols = out.repeating.column_masks()
        for s in enum_independent_sets(g, claim["size"]):
            if not any(s & ~c == 0 for c in cols):
                raise CertificationError(
                    f"independent set {to_tuple(s)} spans multiple columns"
                )
    elif kind == "note":
        pass
    else:
        raise CertificationError(f"unknown claim kind {kind!r}")


def verify_claims(out: ConstructionOutput) -> list[dict]:
    """Re-check every claim from scratch; returns the claims stamped
    verified. Raises CertificationError on the first failure."""
    stamped = []
    for claim in out.claims:
        _check_claim(out, claim)
        rec = dict(claim)
        if claim["claim"] != "note":
            rec["verified"] = True
        stamped.append(rec)
    return stamped


def _matching_mask(labels: Sequence[tuple[int, int]], edges: Sequence[tuple[int, int]]) -> int:
    index = {lab: i for i, lab in enumerate(labels)}
    mask = 0
    for u, v in edges:
        key = (u, v) if u < v else (v, u)
        mask |= 1 << index[key]
    return mask


def drisko_cycle(n: int) -> ConstructionOutput:
    """Two alternating perfect matchings of a 2n-cycle, each n-1 times,
    in the cycle's line graph: 2n-2 independent n-sets with no rainbow
    n-set, and the host has exactly two independent n-sets in total.
    Shows that 2n-2 sets are not enough where 2n-1 always are.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    host, labels = line_graph(cycle_graph(2 * n))
    m_even = _matching_mask(labels, [(2 * i, 2 * i + 1) for i in range(n)])
    m_odd = _matching_mask(labels, [(2 * i + 1, (2 * i + 2) % (2 * n)) for i in range(n)])
    family = ColoredFamily(host, tuple([m_even] * (n - 1) + [m_odd] * (n - 1)))
    claims = (
        {"claim": "no_rainbow", "size": n},
        {"claim": "max_rainbow", "size": n - 1},
        {"claim": "independent_set_count", "size": n, "count": 2},
    )
    return ConstructionOutput("drisko-cycle", {"n": n}, host, family, claims)


def even_matching_family(n: int) -> ConstructionOutput:
    """2n-1 matchings of size n with no rainbow n-matching.

    Host: line graph of the 2n-cycle plus the antipodal chords (i, i+n).
    Family: each alternating cycle matching n-1 times plus the chord
    matching once. The chords have length n, so this matching of
    even-length chords exists if and only if n is even; odd n is
    refused.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2:
        raise ValueError(
            "a perfect matching of even-length chords exists if and only if n is even"
        )
    cyc = [(i, (i + 1) % (2 * n)) for i in range(2 * n)]
    chords = [(i, i + n) for i in range(n)]
    base = make_graph(2 * n, cyc + chords)
    host, labels = line_graph(base)
    m_even = _matching_mask(labels, [(2 * i, 2 * i + 1) for i in range(n)])
    m_odd = _matching_mask(labels, [(2 * i + 1, (2 * i + 2) % (2 * n)) for i in range(n)])
    m_chord = _matching_mask(labels, chords)
    family = ColoredFamily(
        host, tuple([m_even] * (n - 1) + [m_odd] * (n - 1) + [m_chord])
    )
    claims = (
        {"claim": "no_rainbow", "size": n},
        {"claim": "note", "text": f"{2 * n - 1} sets of size {n} with no rainbow {n}-set"},
    )
    return ConstructionOutput("even-matching", {"n": n}, host, family, claims)


def doubled_family(base: ConstructionOutput, m: int | None = None) -> ConstructionOutput:
    """Doubles a rainbow-free family: two disjoint copies of the host,
    each set replaced by its union with its own copy.

    If the base family of k sets has no rainbow m-set, the doubled
    family has k sets of twice the size and no rainbow (2m-1)-set: a
    rainbow set splits over the copies and each copy contributes at
    most m-1 vertices.
    """
    if m is None:
        for claim in base.claims:
            if claim["claim"] == "no_rainbow":
                m = claim["size"]
                break
        else:
            raise ValueError("base construction carries no no_rainbow claim")
    g = base.graph
    doubled = disjoint_union([g, g])
    shift = g.n
    sets = tuple(s | (s << shift) for s in base.family.sets)
    family = ColoredFamily(doubled, sets)
    claims = (
        {"claim": "no_rainbow", "size": 2 * m - 1},
        {"claim": "note", "text": f"doubling of {base.name} with no rainbow {m}-set"},
    )
    return ConstructionOutput(
        "doubled-" + base.name, {"base": base.name, **base.params}, doubled, family, claims
    )


def circulant_power(t: int, n: int) -> ConstructionOutput:
    """Circulant graph on t*n vertices with connection distances
    1..t-1: a (2t-2)-regular graph whose only independent n-sets are
    the t residue classes mod t. Each class n-1 times gives t(n-1)
    sets with no rainbow n-set.
    """
    if t < 1 or n < 1:
        raise ValueError("t and n must be positive")
    size = t * n
    edges = []
    for d in range(1, t):
        for v in range(size):
            u = (v + d) % size
            if v < u:
                edges.append((v, u))
            else:
                edges.append((u, v))
    g = make_graph(size, sorted(set(edges)))
    classes = [mask_of(range(r, size, t)) for r in range(t)]
    sets = []
    for c in classes:
        sets.extend([c] * (n - 1))
    family = ColoredFamily(g, tuple(sets))
    claims: list[dict] = [
        {"claim": "regular", "degree": 2 * t - 2 if n >= 2 or t == 1 else size - 1},
        {"claim": "independent_set_count", "size": n, "count": t},
        {"claim": "no_rainbow", "size": n},
    ]
    if n >= 4:
        claims.append({"claim": "pattern_free", "kind": "cycle", "param": 4})
    return ConstructionOutput("circulant-power", {"t": t, "n": n}, g, family, claims)


def multipartite_copies(k: int, t: int, n: int) -> ConstructionOutput:
    """ceil(n/t) disjoint copies of the complete k-partite graph with
    parts of size t. The i-th color is the union of the i-th parts,
    trimmed to n vertices. The graph is K_{1,t+1}-free yet a rainbow
    set takes at most one vertex per copy, so min(ceil(n/t), k) is the
    best possible.
    """
    if k < 2 or t < 1 or n < 1:
        raise ValueError("need k >= 2, t >= 1, n >= 1")
    copies = math.ceil(n / t)
    one = complete_multipartite([t] * k)
    g = disjoint_union([one] * copies)
    sets = []
    for part in range(k):
        verts = []
        for c in range(copies):
            base = c * one.n + part * t
            verts.extend(range(base, base + t))
        sets.append(mask_of(verts[:n]))
    family = ColoredFamily(g, tuple(sets))
    claims = (
        {"claim": "pattern_free", "kind": "star", "param": t + 1},
        {"claim": "max_rainbow", "size": min(copies, k)},
    )
    return ConstructionOutput(
        "multipartite-copies", {"k": k, "t": t, "n": n}, g, family, claims
    )


def colourable_lower(k: int, n: int, m: int) -> ConstructionOutput:
    """k(m-1) sets of size n in the complete k-partite graph with parts
    of size n, each part m-1 times: no rainbow m-set, because an
    independent set sits inside one part and only m-1 colors point
    there. Shows k(m-1)+1 is tight for k-chromatic hosts.
    """
    if k < 1 or n < 1 or not 1 <= m <= n:
        raise ValueError("need k >= 1 and 1 <= m <= n")
    g = complete_multipartite([n] * k)
    parts = [mask_of(range(p * n, (p + 1) * n)) for p in range(k)]
    sets = []
    for p in parts:
        sets.extend([p] * (m - 1))
    family = ColoredFamily(g, tuple(sets))
    claims = (
        {"claim": "chromatic", "k": k},
        {"claim": "no_rainbow", "size": m},
    )
    return ConstructionOutput("colourable-lower", {"k": k, "n": n, "m": m}, g, family, claims)


def colourable_disjoint_lower(k: int, n: int, m: int) -> ConstructionOutput:
    """Disjoint variant of colourable_lower: m-1 disjoint copies of the
    complete k-partite graph, the parts of all copies as pairwise
    disjoint colors. Within a copy an independent set stays in one
    part, so at most one color lands per copy and m-1 copies block any
    rainbow m-set.
    """
    if k < 1 or n < 1 or not 1 <= m <= n:
        raise ValueError("need k >= 1 and 1 <= m <= n")
    one = complete_multipartite([n] * k)
    copies = max(m - 1, 1)
    g = disjoint_union([one] * copies)
    sets = []
    if m >= 2:
        for c in range(m - 1):
            for p in range(k):
                base = c * one.n + p * n
                sets.append(mask_of(range(base, base + n)))
    family = ColoredFamily(g, tuple(sets))
    claims = (
        {"claim": "chromatic", "k": k},
        {"claim": "colors_disjoint"},
        {"claim": "no_rainbow", "size": m},
    )
    return ConstructionOutput(
        "colourable-disjoint-lower", {"k": k, "n": n, "m": m}, g, family, claims
    )


def blowup(
    h: Graph,
    n: int,
    clique_free: int | None = None,
    no_rainbow: int | None = None,
) -> ConstructionOutput:
    """Replace each vertex of h with an independent set of n vertices,
    joining blobs completely when the base vertices are adjacent. The
    blobs are the colors. Cliques cannot cross a blob, so the blowup is
    K_r-free exactly when h is; a rainbow independent set projects to
    an independent set of h, one vertex per blob.
    """
    if n < 1:
        raise ValueError("n must be positive")
    edges = []
    for u, v in h.edges():
        for i in range(n):
            for j in range(n):
                a, b = u * n + i, v * n + j
                edges.append((a, b) if a < b else (b, a))
    g = make_graph(h.n * n, sorted(set(edges)))
    sets = tuple(mask_of(range(v * n, (v + 1) * n)) for v in range(h.n))
    family = ColoredFamily(g, sets)
    claims: list[dict] = [{"claim": "colors_disjoint"}]
    if clique_free is not None:
        claims.append({"claim": "pattern_free", "kind": "complete", "param": clique_free})
    if no_rainbow is not None:
        claims.append({"claim": "no_rainbow", "size": no_rainbow})
    return ConstructionOutput(
        "blowup", {"base_vertices": h.n, "n": n}, g, family, tuple(claims)
    )


_RAMSEY_TABLE: dict[tuple[int, int], int] = {
    (3, 3): 6,
    (3, 4): 9,
    (4, 3): 9,
    (3, 5): 14,
    (5, 3): 14,
    (4, 4): 18,
}


def ramsey_number(r: int, m: int) -> int | None:
    """Known value of the Ramsey number R(r, m), or None beyond the
    table of classical small cases."""
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    if r == 1 or m == 1:
        return 1
    if r == 2:
        return m
    if m == 2:
        return r
    return _RAMSEY_TABLE.get((r, m))


def _circulant(size: int, distances: Sequence[int]) -> Graph:
    edges = set()
    for d in distances:
        for v in range(size):
            u = (v + d) % size
            edges.add((min(u, v), max(u, v)))
    return make_graph(size, sorted(edges))


def _complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return make_graph(g.n, edges)


def _paley(q: int) -> Graph:
    residues = {(x * x) % q for x in range(1, q)}
    edges = [(u, v) for u in range(q) for v in range(u + 1, q) if (v - u) % q in residues]
    return make_graph(q, edges)


def _table_witness(r: int, m: int) -> Graph | None:
    if r == 2:
        return empty_graph(m - 1)
    if m == 2:
        return make_graph(r - 1, [(u, v) for u in range(r - 1) for v in range(u + 1, r - 1)])
    key = (r, m)
    if key == (3, 3):
        return cycle_graph(5)
    if key == (3, 4):
        return _circulant(8, [1, 4])
    if key == (4, 3):
        return _complement(_circulant(8, [1, 4]))
    if key == (3, 5):
        return _circulant(13, [1, 5])
    if key == (5, 3):
        return _complement(_circulant(13, [1, 5]))
    if key == (4, 4):
        return _paley(17)
    return None


def _is_ramsey_witness(g: Graph, r: int, m: int) -> bool:
    if contains_induced(g, Pattern.complete(r)) is not None:
        return False
    return first_independent_subset(g, g.all_mask, m) is None


def ramsey_witness(r: int, m: int, budget: int = 2000, seed: int = 0) -> ConstructionOutput:
    """Largest graph we can certify with no K_r and no independent
    m-set. Classical cases come from the table of known extremal
    graphs and have exactly R(r,m)-1 vertices; beyond the table the
    fallback is m-1 disjoint copies of K_{r-1} improved by a seeded
    random search, `budget` candidates per size, so the output is a
    certified lower bound witness, not necessarily optimal.
    """
    import random

    if r < 2 or m < 2:
        raise ValueError("need r >= 2 and m >= 2")
    g = _table_witness(r, m)
    exact = g is not None
    if g is None:
        blocks = [make_graph(r - 1, [(u, v) for u in range(r - 1) for v in range(u + 1, r - 1)])]
        g = disjoint_union(blocks * (m - 1))
        rng = random.Random(seed)
        while True:
            size = g.n + 1
            found = None
            for _ in range(budget):
                edges = [
                    (u, v)
                    for u in range(size)
                    for v in range(u + 1, size)
                    if rng.random() < 0.5
                ]
                cand = make_graph(size, edges)
                if _is_ramsey_witness(cand, r, m):
                    found = cand
                    break
            if found is None:
                break
            g = found
    if not _is_ramsey_witness(g, r, m):
        raise CertificationError(f"table witness for R({r},{m}) failed verification")
    family = ColoredFamily(g, ())
    claims = (
        {"claim": "pattern_free", "kind": "complete", "param": r},
        {"claim": "independence_below", "size": m},
        {
            "claim": "note",
            "text": (
                f"certifies R({r},{m}) > {g.n}"
                + ("; size is exactly R-1" if exact else "; search lower bound only")
            ),
        },
    )
    return ConstructionOutput("ramsey-witness", {"r": r, "m": m}, g, family, claims)


def multipartite_repeating(r: int, n: int) -> ConstructionOutput:
    """Complete (r-2)-partite graph with parts of size n, packaged as a
    repeating graph whose columns are the parts. Every row is a clique
    across columns, the graph has no induced K_r minus an edge (that
    would need r-1 parts), and with each column used once as a color no
    rainbow set exceeds a single vertex: independent sets live inside
    one part.
    """
    if r < 3 or n < 2:
        raise ValueError("need r >= 3 and n >= 2")
    cols = r - 2
    g = complete_multipartite([n] * cols)
    base = Digraph.from_arcs(n, [(a, b) for a in range(n) for b in range(n)])
    rep = RepeatingGraph(columns=cols, rows=n, base=base, graph=g)
    family = rep.family(1)
    claims = (
        {"claim": "pattern_free", "kind": "complete_minus_edge", "param": r},
        {"claim": "max_rainbow", "size": 1},
        {"claim": "note", "text": "columns used once each; r = 3 yields a single edgeless part"},
    )
    return ConstructionOutput(
        "multipartite-repeating", {"r": r, "n": n}, g, family, claims, repeating=rep
    )


def bounded_degree_grid(k: int, n: int, m: int) -> ConstructionOutput:
    """Degree-at-most-k host on t = ceil((k+1)/r) columns of n rows,
    r = n-m+2, adjacency between columns at cyclic row offsets
    0..r-1. Columns are independent, every independent m-set stays
    inside one column, and each column appears m-1 times, so t(m-1)
    sets of size n carry no rainbow m-set.
    """
    if not 2 <= m <= n:
        raise ValueError("need 2 <= m <= n")
    if k < 1:
        raise ValueError("k must be positive")
    r = n - m + 2
    t = math.ceil((k + 1) / r)
    offsets = Digraph.from_arcs(
        n, [(b, (b + i) % n) for b in range(n) for i in range(r)]
    )
    rep = RepeatingGraph.from_digraph(offsets, t)
    g = rep.graph
    sets = []
    for col in rep.column_masks():
        sets.extend([col] * (m - 1))
    family = ColoredFamily(g, tuple(sets))
    claims = (
        {"claim": "regular", "degree": r * (t - 1)},
        {"claim": "max_degree_at_most", "degree": k},
        {"claim": "independent_sets_within_columns", "size": m},
        {"claim": "no_rainbow", "size": m},
    )
    return ConstructionOutput(
        "bounded-degree-grid", {"k": k, "n": n, "m": m}, g, family, claims, repeating=rep
    )


def repeating_from_digraph(
    d: Digraph,
    t: int,
    multiplicity: int = 1,
    cycle_free_up_to: int | None = None,
    no_rainbow: int | None = None,
) -> ConstructionOutput:
    """Assembles the repeating graph of a base digraph on t columns and
    colors it with each column `multiplicity` times. Optional claims:
    no induced cycle of any length 4..cycle_free_up_to, and no rainbow
    set of the given size.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if multiplicity < 1:
        raise ValueError("multiplicity must be positive")
    rep = RepeatingGraph.from_digraph(d, t)
    family = rep.family(multiplicity)
    claims: list[dict] = []
    if cycle_free_up_to is not None:
        for s in range(4, cycle_free_up_to + 1):
            claims.append({"claim": "pattern_free", "kind": "cycle", "param": s})
    if no_rainbow is not None:
        claims.append({"claim": "no_rainbow", "size": no_rainbow})
    return ConstructionOutput(
        "repeating-digraph",
        {"rows": d.n, "t": t, "multiplicity": multiplicity},
        rep.graph,
        family,
        tuple(claims),
        repeating=rep,
    )

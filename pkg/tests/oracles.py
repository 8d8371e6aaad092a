"""Slow reference implementations the fast code is checked against.

Everything here favours obvious correctness over speed: plain double
loops, itertools enumeration, permutation scans. Nothing imports from
the package's solver internals except the public data types.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from ribs import ColoredFamily, Digraph, Graph


class OracleBudget(RuntimeError):
    """Raised when a naive enumeration exceeds its work cap."""


def naive_independent(g: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if g.has_edge(vs[i], vs[j]):
                return False
    return True


def naive_independent_sets(g: Graph, size: int) -> list[tuple[int, ...]]:
    return [
        combo
        for combo in itertools.combinations(range(g.n), size)
        if naive_independent(g, combo)
    ]


def naive_rainbow(
    g: Graph, sets: Sequence[Sequence[int]], m: int
) -> Optional[list[tuple[int, int]]]:
    """A rainbow independent m-set by full enumeration, or None.

    Tries every m-subset of colors and every choice of one member per
    chosen color.
    """
    for colors in itertools.combinations(range(len(sets)), m):
        for picks in itertools.product(*(sets[c] for c in colors)):
            if naive_independent(g, picks):
                return list(zip(colors, picks))
    return None


def naive_rainbow_exists(g: Graph, sets: Sequence[Sequence[int]], m: int) -> bool:
    return naive_rainbow(g, sets, m) is not None


def naive_max_rainbow(g: Graph, sets: Sequence[Sequence[int]]) -> int:
    best = 0
    for m in range(1, len(sets) + 1):
        if naive_rainbow_exists(g, sets, m):
            best = m
        else:
            break
    return best


def family_lists(family: ColoredFamily) -> list[list[int]]:
    return [list(vs) for vs in family.vertex_lists()]


def naive_f(g: Graph, n: int, m: int, checks: int = 2_000_000) -> int:
    """f by direct definition: least k such that every k-multiset of
    independent n-sets has a rainbow independent m-set.

    Termination: a multiset holding m copies of one n-set is always
    good (n >= m distinct vertices in one independent set), so some
    k <= s*(m-1)+1 works, where s counts independent n-sets. `checks`
    caps the number of rainbow searches; OracleBudget past it.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    sets = naive_independent_sets(g, n)
    if not sets:
        raise ValueError("no independent set of the requested size")
    spent = 0
    k = m
    while True:
        all_good = True
        for combo in itertools.combinations_with_replacement(range(len(sets)), k):
            spent += 1
            if spent > checks:
                raise OracleBudget(f"naive_f exceeded {checks} rainbow checks")
            chosen = [sets[i] for i in combo]
            if not naive_rainbow_exists(g, chosen, m):
                all_good = False
                break
        if all_good:
            return k
        k += 1


def _underlying_edges(d: Digraph) -> set[frozenset[int]]:
    edges = set()
    for u, v in d.arcs():
        if u != v:
            edges.add(frozenset((u, v)))
    return edges


def _consistently_oriented(d: Digraph, seq: Sequence[int]) -> bool:
    k = len(seq)
    fwd = all(d.has_arc(seq[i], seq[(i + 1) % k]) for i in range(k))
    bwd = all(d.has_arc(seq[(i + 1) % k], seq[i]) for i in range(k))
    return fwd or bwd


def _acyclic_by_permutation(d: Digraph, vs: Sequence[int]) -> bool:
    # Acyclic iff some ordering sends every non-loop arc forward.
    for order in itertools.permutations(vs):
        pos = {v: i for i, v in enumerate(order)}
        if all(
            pos[u] < pos[v]
            for u, v in d.arcs()
            if u != v and u in pos and v in pos
        ):
            return True
    return False


def brute_condition_a(
    d: Digraph,
    s: int,
    m: int,
    digons_count: bool = True,
    loops_block_acyclic: bool = True,
) -> bool:
    """Permutation-level check of the short-cycle condition.

    Every undirected simple cycle of length <= s (digons included,
    loops never) must be a consistently oriented cycle of length
    exactly s, and no m vertices may induce an acyclic subdigraph.
    """
    und = _underlying_edges(d)
    for length in range(2, s + 1):
        for subset in itertools.combinations(range(d.n), length):
            first = subset[0]
            for rest in itertools.permutations(subset[1:]):
                seq = (first,) + rest
                if length == 2:
                    u, v = seq
                    if not (d.has_arc(u, v) and d.has_arc(v, u)):
                        continue
                    if not digons_count:
                        continue
                else:
                    pairs = [
                        frozenset((seq[i], seq[(i + 1) % length]))
                        for i in range(length)
                    ]
                    if any(p not in und for p in pairs):
                        continue
                if length != s or not _consistently_oriented(d, seq):
                    return False
    candidates = [
        v
        for v in range(d.n)
        if not (loops_block_acyclic and d.has_arc(v, v))
    ]
    for vs in itertools.combinations(candidates, m):
        if _acyclic_by_permutation(d, vs):
            return False
    return True


def is_sunflower(sets: Sequence[frozenset[int]], members: Sequence[int]) -> bool:
    """Do the indexed sets pairwise intersect in one common core?"""
    if len(members) < 2:
        return len(members) == 1
    chosen = [frozenset(sets[i]) for i in members]
    core = chosen[0] & chosen[1]
    for a, b in itertools.combinations(chosen, 2):
        if a & b != core:
            return False
    return True


def naive_has_sunflower(sets: Sequence[Sequence[int]], k: int) -> bool:
    frozen = [frozenset(s) for s in sets]
    for members in itertools.combinations(range(len(frozen)), k):
        if is_sunflower(frozen, members):
            return True
    return False

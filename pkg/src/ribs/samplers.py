"""Seeded random instance generators for property tests.

Every sampler takes an explicit random.Random and re-verifies the
structural guarantee it advertises before returning (chordality,
degree bounds, forbidden patterns), so a property test that consumes
its output never tests a vacuous hypothesis. Hosts that carry a family
embed a deterministic fallback (a forced matching, a clique partition)
so sampling cannot dead-end on an unlucky seed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .bitset import bits, popcount
from .families import ColoredFamily
from .graphs import (
    Graph,
    Pattern,
    contains_induced,
    first_independent_subset,
    is_chordal,
    line_graph,
    make_graph,
    max_degree,
)

__all__ = [
    "random_independent_sets",
    "sample_bipartite_line",
    "sample_line",
    "sample_staircase_bipartite_line",
    "sample_chordal",
    "sample_kcolorable",
    "sample_max_degree",
    "sample_kr_free",
    "sample_claw_free",
]


def random_independent_sets(
    rng: random.Random, g: Graph, size: int, count: int, attempts: int = 400
) -> tuple[int, ...]:
    """count independent sets of the given size, sampled by randomized
    greedy picks. Raises RuntimeError when a set cannot be found."""
    out = []
    for _ in range(count):
        mask = None
        for _ in range(attempts):
            order = rng.sample(range(g.n), g.n)
            cand = 0
            blocked = 0
            for v in order:
                if blocked >> v & 1:
                    continue
                cand |= 1 << v
                blocked |= g.closed(v)
                if popcount(cand) == size:
                    break
            if popcount(cand) == size:
                mask = cand
                break
        if mask is None:
            raise RuntimeError(f"could not sample an independent {size}-set")
        out.append(mask)
    return tuple(out)


def _matchings_to_family(
    host: Graph,
    labels: Sequence[tuple[int, int]],
    matchings: Sequence[Sequence[tuple[int, int]]],
) -> ColoredFamily:
    index = {lab: i for i, lab in enumerate(labels)}
    sets = []
    for m in matchings:
        mask = 0
        for u, v in m:
            mask |= 1 << index[(u, v) if u < v else (v, u)]
        sets.append(mask)
    return ColoredFamily(host, tuple(sets))


def _greedy_matching(
    rng: random.Random, edges: Sequence[tuple[int, int]], size: int
) -> list[tuple[int, int]] | None:
    pool = list(edges)
    rng.shuffle(pool)
    used = 0
    chosen: list[tuple[int, int]] = []
    for u, v in pool:
        if used >> u & 1 or used >> v & 1:
            continue
        chosen.append((u, v))
        used |= (1 << u) | (1 << v)
        if len(chosen) == size:
            return chosen
    return None


def sample_bipartite_line(
    rng: random.Random,
    n: int,
    count: int,
    sizes: Sequence[int] | None = None,
    extra: int = 1,
    p: float = 0.4,
) -> tuple[Graph, ColoredFamily]:
    """Line graph of a random bipartite graph together with `count`
    matchings of size n (or the given per-color sizes). A forced
    diagonal matching keeps every requested size reachable."""
    side = n + extra
    edges = {(i, side + i) for i in range(side)}
    for i in range(side):
        for j in range(side):
            if rng.random() < p:
                edges.add((i, side + j))
    base = make_graph(2 * side, sorted(edges))
    host, labels = line_graph(base)
    want = list(sizes) if sizes is not None else [n] * count
    matchings = []
    for s in want:
        m = None
        for _ in range(60):
            m = _greedy_matching(rng, base.edges(), s)
            if m is not None:
                break
        if m is None:
            m = [(i, side + i) for i in range(s)]
        matchings.append(m)
    return host, _matchings_to_family(host, labels, matchings)


def sample_line(
    rng: random.Random, n: int, count: int, extra_pairs: int = 1, p: float = 0.25
) -> tuple[Graph, ColoredFamily]:
    """Line graph of a random (not necessarily bipartite) graph with
    `count` matchings of size n."""
    pairs = n + extra_pairs
    verts = 2 * pairs
    edges = {(2 * i, 2 * i + 1) for i in range(pairs)}
    for u in range(verts):
        for v in range(u + 1, verts):
            if rng.random() < p:
                edges.add((u, v))
    base = make_graph(verts, sorted(edges))
    host, labels = line_graph(base)
    matchings = []
    for _ in range(count):
        m = None
        for _ in range(60):
            m = _greedy_matching(rng, base.edges(), n)
            if m is not None:
                break
        if m is None:
            m = [(2 * i, 2 * i + 1) for i in range(n)]
        matchings.append(m)
    return host, _matchings_to_family(host, labels, matchings)


def sample_staircase_bipartite_line(
    rng: random.Random, n: int, extra: int = 1, p: float = 0.4
) -> tuple[Graph, ColoredFamily]:
    """2n-1 matchings whose sizes follow the staircase lower bound
    min(i, n) at 1-indexed position i, in a random bipartite line
    graph."""
    sizes = [rng.randint(min(i + 1, n), n) for i in range(2 * n - 1)]
    return sample_bipartite_line(rng, n, 2 * n - 1, sizes=sizes, extra=extra, p=p)


def sample_chordal(rng: random.Random, n: int, p: float = 0.45) -> Graph:
    """Random chordal graph built by attaching each new vertex to a
    clique among the earlier vertices."""
    adj = [set() for _ in range(n)]
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        nb = {u}
        others = list(range(v))
        rng.shuffle(others)
        for w in others:
            if w != u and rng.random() < p and all(x in adj[w] for x in nb):
                nb.add(w)
        for w in nb:
            adj[v].add(w)
            adj[w].add(v)
            edges.append((w, v))
    g = make_graph(n, edges)
    if is_chordal(g) is None:
        raise RuntimeError("chordal sampler produced a non-chordal graph")
    return g


def sample_kcolorable(
    rng: random.Random, n: int, k: int, p: float = 0.5
) -> tuple[Graph, tuple[int, ...]]:
    """Random graph with a planted proper k-coloring; returns the graph
    and the planted per-vertex classes."""
    coloring = tuple(rng.randrange(k) for _ in range(n))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if coloring[u] != coloring[v] and rng.random() < p
    ]
    return make_graph(n, edges), coloring


def sample_max_degree(rng: random.Random, n: int, d: int, p: float = 0.6) -> Graph:
    """Random graph with maximum degree at most d."""
    deg = [0] * n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges = []
    for u, v in pairs:
        if deg[u] < d and deg[v] < d and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    g = make_graph(n, edges)
    if max_degree(g) > d:
        raise RuntimeError("degree sampler exceeded the bound")
    return g


def sample_kr_free(rng: random.Random, n: int, r: int, p: float = 0.4) -> Graph:
    """Random K_r-free graph: candidate edges are rejected when they
    would complete an r-clique."""
    pat = Pattern.complete(r)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges: list[tuple[int, int]] = []
    g = make_graph(n, [])
    for u, v in pairs:
        if rng.random() >= p:
            continue
        cand = make_graph(n, edges + [(u, v)])
        if contains_induced(cand, pat) is None:
            edges.append((u, v))
            g = cand
    if contains_induced(g, pat) is not None:
        raise RuntimeError("clique-free sampler produced a clique")
    return g


def sample_claw_free(rng: random.Random, n: int, t: int, p: float = 0.3) -> Graph:
    """Random K_{1,t+1}-free graph: a clique partition plus extra edges
    that never create an induced star with t+1 leaves."""
    order = list(range(n))
    rng.shuffle(order)
    edges: list[tuple[int, int]] = []
    pos = 0
    while pos < n:
        size = rng.randint(1, t + 2)
        block = order[pos : pos + size]
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                a, b = block[i], block[j]
                edges.append((min(a, b), max(a, b)))
        pos += size
    g = make_graph(n, edges)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if g.has_edge(u, v) or rng.random() >= p:
            continue
        cand = make_graph(n, list(g.edges()) + [(u, v)])
        star_at = lambda c: first_independent_subset(cand, cand.adj[c], t + 1)
        if star_at(u) is None and star_at(v) is None:
            g = cand
    if contains_induced(g, Pattern.star(t + 1)) is not None:
        raise RuntimeError("claw sampler produced a forbidden star")
    return g

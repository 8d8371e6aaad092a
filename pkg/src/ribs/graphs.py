"""Undirected graphs, digraphs, and detection of the handful of small
patterns the rainbow machinery cares about.

A Graph stores one adjacency bit row per vertex, so independence tests
and neighborhood pruning are single AND operations on Python ints. The
representation targets the instance sizes the solvers actually face
(tens to a few hundred vertices); everything is immutable and safe to
share across threads.

Pattern detection is deliberately restricted to the families used by
the structure theorems: complete graphs, complete graphs minus one
edge, the three-vertex graph with exactly one edge, stars K_{1,t}, and
induced cycles. General induced-subgraph isomorphism is out of scope
and the Pattern type cannot express it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .bitset import as_mask, bits, lowest_bit, mask_of, popcount, to_tuple

__all__ = [
    "Graph",
    "Digraph",
    "Pattern",
    "make_graph",
    "is_independent",
    "enum_independent_sets",
    "first_independent_subset",
    "line_graph",
    "contains_induced",
    "is_complete_multipartite",
    "find_simplicial",
    "is_chordal",
    "k_colorable",
    "max_degree",
    "components",
    "bipartition",
    "induces_bipartite",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "complete_multipartite",
    "disjoint_union",
]


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on vertices 0..n-1.

    adj[v] is the neighborhood of v as a bit mask. Self-loops are not
    representable; parallel edges collapse.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency rows must match vertex count")

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def closed(self, v: int) -> int:
        """N[v] as a mask."""
        return self.adj[v] | (1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1:
                    yield (u, v)
                higher >>= 1
                v += 1

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2


def make_graph(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list.

    Rejects out-of-range endpoints and self-loops; duplicate edges
    collapse silently.
    """
    if vertex_count < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [0] * vertex_count
    for u, v in edge_list:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u},{v}) out of range for {vertex_count} vertices")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(vertex_count, tuple(rows))


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive vertex ranges in the given order."""
    bounds = [0]
    for s in sizes:
        if s < 0:
            raise ValueError("part sizes must be nonnegative")
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            edges.extend(
                (u, v)
                for u in range(bounds[a], bounds[a + 1])
                for v in range(bounds[b], bounds[b + 1])
            )
    return make_graph(n, edges)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def is_independent(g: Graph, vertices: "int | Iterable[int]") -> bool:
    """True iff no two vertices of the set are adjacent."""
    mask = as_mask(vertices)
    rest = mask
    while rest:
        low = rest & -rest
        if g.adj[low.bit_length() - 1] & mask:
            return False
        rest ^= low
    return True


def enum_independent_sets(g: Graph, size: int, within: int | None = None) -> list[int]:
    """All independent sets of exactly the given size, as masks.

    Enumeration is lexicographic on the sorted vertex tuples, so the
    output order is deterministic and stable.
    """
    if size < 0:
        raise ValueError("size must be nonnegative")
    universe = g.all_mask if within is None else within
    out: list[int] = []
    adj = g.adj

    def rec(cur: int, cand: int, need: int) -> None:
        if need == 0:
            out.append(cur)
            return
        while cand:
            if popcount(cand) < need:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            rec(cur | low, cand & ~adj[v], need - 1)

    rec(0, universe, size)
    return out


def first_independent_subset(g: Graph, within: int, size: int) -> int | None:
    """First independent subset of the given size inside a mask, in the
    same lexicographic order as enum_independent_sets, or None."""
    adj = g.adj

    def rec(cur: int, cand: int, need: int) -> int | None:
        if need == 0:
            return cur
        while cand:
            if popcount(cand) < need:
                return None
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            r = rec(cur | low, cand & ~adj[v], need - 1)
            if r is not None:
                return r
        return None

    return rec(0, within, size)


def line_graph(h: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of h plus the edge labels.

    Vertex i of the result is labels[i], an edge of h; edges are sorted
    lexicographically so the labeling is reproducible. Two line-graph
    vertices are adjacent iff the underlying edges share an endpoint.
    """
    labels = tuple(h.edges())
    k = len(labels)
    rows = [0] * k
    for i in range(k):
        a, b = labels[i]
        for j in range(i + 1, k):
            c, d = labels[j]
            if a == c or a == d or b == c or b == d:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(k, tuple(rows)), labels


# ---------------------------------------------------------------------------
# Pattern containment


_PATTERN_KINDS = {"complete", "complete_minus_edge", "two_isolated_plus_edge", "star", "cycle"}
_MAX_PATTERN_ORDER = 10


@dataclass(frozen=True)
class Pattern:
    """One of the fixed small patterns the containment search accepts.

    kind/param pairs:
      complete r             -- K_r
      complete_minus_edge r  -- K_r with one edge removed
      two_isolated_plus_edge -- three vertices spanning exactly one edge
      star t                 -- K_{1,t}: a center with t independent leaves
      cycle s                -- induced cycle C_s
    """

    kind: str
    param: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _PATTERN_KINDS:
            raise ValueError(f"unsupported pattern kind {self.kind!r}")
        if self.kind in ("complete", "complete_minus_edge") and self.param < 2:
            raise ValueError("complete patterns need order at least 2")
        if self.kind == "star" and self.param < 1:
            raise ValueError("star needs at least one leaf")
        if self.kind == "cycle" and self.param < 3:
            raise ValueError("cycle needs length at least 3")
        if self.order > _MAX_PATTERN_ORDER:
            raise ValueError(f"unsupported pattern order {self.order} (max {_MAX_PATTERN_ORDER})")

    @property
    def order(self) -> int:
        if self.kind in ("complete", "complete_minus_edge"):
            return self.param
        if self.kind == "two_isolated_plus_edge":
            return 3
        if self.kind == "star":
            return self.param + 1
        return self.param

    @staticmethod
    def complete(r: int) -> "Pattern":
        return Pattern("complete", r)

    @staticmethod
    def complete_minus_edge(r: int) -> "Pattern":
        return Pattern("complete_minus_edge", r)

    @staticmethod
    def two_isolated_plus_edge() -> "Pattern":
        return Pattern("two_isolated_plus_edge")

    @staticmethod
    def star(t: int) -> "Pattern":
        return Pattern("star", t)

    @staticmethod
    def cycle(s: int) -> "Pattern":
        return Pattern("cycle", s)


def _find_clique(g: Graph, size: int, within: int) -> int | None:
    adj = g.adj

    def rec(cur: int, cand: int, need: int) -> int | None:
        if need == 0:
            return cur
        while cand:
            if popcount(cand) < need:
                return None
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            r = rec(cur | low, cand & adj[v], need - 1)
            if r is not None:
                return r
        return None

    return rec(0, within, size)


def _find_complete_minus_edge(g: Graph, r: int) -> int | None:
    full = g.all_mask
    for u in range(g.n):
        nonadj = full & ~g.closed(u)
        nonadj &= ~((1 << (u + 1)) - 1)  # v > u
        for v in bits(nonadj):
            common = g.adj[u] & g.adj[v]
            clique = _find_clique(g, r - 2, common)
            if clique is not None:
                return clique | (1 << u) | (1 << v)
    return None


def _find_two_isolated_plus_edge(g: Graph) -> int | None:
    full = g.all_mask
    for u, v in g.edges():
        rest = full & ~(g.closed(u) | g.closed(v))
        if rest:
            return (1 << u) | (1 << v) | (1 << lowest_bit(rest))
    return None


def _find_star(g: Graph, t: int) -> int | None:
    for c in range(g.n):
        leaves = first_independent_subset(g, g.adj[c], t)
        if leaves is not None:
            return leaves | (1 << c)
    return None


def _find_induced_cycle(g: Graph, s: int) -> int | None:
    if s == 3:
        return _find_clique(g, 3, g.all_mask)
    adj = g.adj
    full = g.all_mask

    for v0 in range(g.n):
        above = full & ~((1 << (v0 + 1)) - 1)
        row0 = adj[v0]

        # path[0] = v0 is the least vertex; path[1] < path[s-1] kills the
        # reflection. forb carries adjacency rows of path[1..len-2].
        def rec(path: list[int], used: int, forb: int) -> list[int] | None:
            p = len(path)
            if p == s:
                return path
            last = path[-1]
            cand = adj[last] & above & ~used & ~forb
            if p == s - 1:
                cand &= row0
                cand &= ~((1 << (path[1] + 1)) - 1)
            elif p >= 2:
                cand &= ~row0
            new_forb = forb | (adj[last] if p >= 2 else 0)
            for w in bits(cand):
                r = rec(path + [w], used | (1 << w), new_forb)
                if r is not None:
                    return r
            return None

        found = rec([v0], 1 << v0, 0)
        if found is not None:
            return mask_of(found)
    return None


def contains_induced(g: Graph, pattern: Pattern) -> int | None:
    """Mask of an induced copy of the pattern, or None.

    The first witness in the fixed search order is returned, so results
    are deterministic for a given labeled graph.
    """
    if pattern.kind == "complete":
        return _find_clique(g, pattern.param, g.all_mask)
    if pattern.kind == "complete_minus_edge":
        return _find_complete_minus_edge(g, pattern.param)
    if pattern.kind == "two_isolated_plus_edge":
        return _find_two_isolated_plus_edge(g)
    if pattern.kind == "star":
        return _find_star(g, pattern.param)
    return _find_induced_cycle(g, pattern.param)


# ---------------------------------------------------------------------------
# Structure recognizers


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components as masks, ordered by least vertex."""
    alive = g.all_mask if within is None else within
    out = []
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= g.adj[v]
            grown &= alive & ~comp
            comp |= grown
            frontier = grown
        out.append(comp)
        alive &= ~comp
    return out


def bipartition(g: Graph, within: int | None = None) -> tuple[int, int] | None:
    """2-coloring of the induced subgraph as (side0, side1) masks.

    Component representatives (least vertex) go to side0. None if some
    component is not bipartite.
    """
    alive = g.all_mask if within is None else within
    side0 = side1 = 0
    for comp in components(g, alive):
        seed = comp & -comp
        color = {lowest_bit(seed): 0}
        side0 |= seed
        frontier = seed
        colored = seed
        level = 0
        while frontier:
            level ^= 1
            grown = 0
            for v in bits(frontier):
                grown |= g.adj[v]
            grown &= comp & ~colored
            if level:
                side1 |= grown
            else:
                side0 |= grown
            colored |= grown
            frontier = grown
        # cross-check: both sides must be independent within the component
        if not is_independent(g, side0 & comp) or not is_independent(g, side1 & comp):
            return None
    return side0, side1


def induces_bipartite(g: Graph, mask: int) -> bool:
    return bipartition(g, mask) is not None


def is_complete_multipartite(g: Graph) -> list[int] | None:
    """Part masks (ordered by least vertex) if g is complete
    multipartite, else None.

    A graph is complete multipartite exactly when its complement is a
    disjoint union of cliques, equivalently when it has no induced copy
    of the three-vertex one-edge graph.
    """
    full = g.all_mask
    comp_adj = tuple((full & ~g.closed(v)) for v in range(g.n))
    comp = Graph(g.n, comp_adj)
    parts = []
    for part in components(comp):
        for v in bits(part):
            if (comp.adj[v] & part) != part & ~(1 << v):
                return None
        parts.append(part)
    return parts


def find_simplicial(g: Graph, within: int | None = None) -> int | None:
    """Least vertex whose neighborhood is a clique, or None."""
    alive = g.all_mask if within is None else within
    for v in bits(alive):
        nb = g.adj[v] & alive
        ok = True
        rest = nb
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            if (g.adj[u] & nb) != nb & ~low:
                ok = False
                break
            rest ^= low
        if ok:
            return v
    return None


def is_chordal(g: Graph) -> list[int] | None:
    """Perfect elimination order (least simplicial vertex first at each
    step), or None if the graph is not chordal."""
    alive = g.all_mask
    order = []
    while alive:
        v = find_simplicial(g, alive)
        if v is None:
            return None
        order.append(v)
        alive &= ~(1 << v)
    return order


def k_colorable(g: Graph, k: int) -> tuple[int, ...] | None:
    """A proper coloring with at most k colors, or None.

    Exact backtracking: vertices in index order, colors tried in
    ascending order, and a fresh color is only opened when all used
    ones fail. Deterministic.
    """
    if g.n == 0:
        return ()
    if k <= 0:
        return None
    colors = [-1] * g.n
    class_masks = [0] * k

    def rec(v: int, used: int) -> bool:
        if v == g.n:
            return True
        row = g.adj[v]
        for c in range(min(used + 1, k)):
            if not (row & class_masks[c]):
                colors[v] = c
                class_masks[c] |= 1 << v
                if rec(v + 1, max(used, c + 1)):
                    return True
                class_masks[c] &= ~(1 << v)
        colors[v] = -1
        return False

    return tuple(colors) if rec(0, 0) else None


def max_degree(g: Graph) -> int:
    return max((popcount(row) for row in g.adj), default=0)


# ---------------------------------------------------------------------------
# Digraphs


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices 0..n-1; out[v] is the mask of
    out-neighbors. Loops are allowed (bit v of out[v])."""

    n: int
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.out) != self.n:
            raise ValueError("arc rows must match vertex count")

    @staticmethod
    def from_arcs(vertex_count: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * vertex_count
        for u, v in arcs:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"arc ({u},{v}) out of range")
            rows[u] |= 1 << v
        return Digraph(vertex_count, tuple(rows))

    @staticmethod
    def directed_cycle(n: int) -> "Digraph":
        if n < 1:
            raise ValueError("directed cycle needs at least one vertex")
        return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.out[u]):
                yield (u, v)

    def arc_count(self) -> int:
        return sum(popcount(row) for row in self.out)

    @property
    def all_loops(self) -> bool:
        return all(self.out[v] >> v & 1 for v in range(self.n))

    def with_all_loops(self) -> "Digraph":
        return Digraph(self.n, tuple(self.out[v] | (1 << v) for v in range(self.n)))

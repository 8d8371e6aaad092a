"""Sunflowers, repeating graphs, and digraph acyclicity conditions.

These are the reduction devices: a sunflower with a large petal count
lets a rainbow problem on overlapping sets fall back to a disjoint
instance on the petals; a repeating graph compresses a family of
columns sharing one interaction digraph; the digraph condition encodes
when short cycles force structure on rainbow sets of digraph vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .bitset import bits, mask_of, popcount, to_tuple
from .families import ColoredFamily, PreconditionViolation, RainbowSelection
from .graphs import Digraph, Graph, is_independent

__all__ = [
    "Sunflower",
    "find_sunflower",
    "sunflower_reduce_rainbow",
    "column_digraph",
    "is_repeating",
    "RepeatingGraph",
    "find_repeating_subfamily",
    "digraph_condition_a",
]


# ---------------------------------------------------------------------------
# Sunflowers


@dataclass(frozen=True)
class Sunflower:
    """k sets whose pairwise intersections all equal the core.

    members are indices into the family the sunflower was found in;
    petals[i] is members[i]'s set minus the core.
    """

    core: frozenset[int]
    members: tuple[int, ...]
    petals: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.members)


def _check_sunflower(sets: Sequence[frozenset[int]], members: Sequence[int]) -> Optional[Sunflower]:
    core = frozenset.intersection(*(sets[i] for i in members))
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if sets[members[a]] & sets[members[b]] != core:
                return None
    return Sunflower(core, tuple(members), tuple(sets[i] - core for i in members))


def find_sunflower(sets: Sequence[Sequence[int] | frozenset[int]], k: int) -> Optional[Sunflower]:
    """A k-sunflower among the given sets, or None if none exists.

    Search order: a greedy maximal pairwise-disjoint subfamily (empty
    core if it reaches k), then for each element in decreasing
    frequency the sets through it recursively with the element moved to
    the core, then exhaustive search over disjoint index combinations.
    Repeats in the input are fine: k copies of one set form a
    k-sunflower with empty petals.
    """
    if k < 1:
        raise ValueError("sunflower needs at least one petal")
    fs = [frozenset(s) for s in sets]
    if k <= len(fs) and k == 1:
        return Sunflower(fs[0], (0,), (frozenset(),))
    if len(fs) < k:
        return None

    def search(idxs: list[int], core: frozenset[int]) -> Optional[tuple[int, ...]]:
        # strip the running core; disjoint residuals = sunflower members
        resid = {i: fs[i] - core for i in idxs}
        picked: list[int] = []
        used: set[int] = set()
        for i in idxs:
            if not (resid[i] & used):
                picked.append(i)
                used |= resid[i]
                if len(picked) == k:
                    return tuple(picked)
        # identical residuals collapse into one disjointness slot; k equal
        # sets still need reporting, so count multiplicity directly
        by_resid: dict[frozenset[int], list[int]] = {}
        for i in idxs:
            by_resid.setdefault(resid[i], []).append(i)
        for r, group in by_resid.items():
            if len(group) >= k and (not r or all(fs[i] - core == r for i in group)):
                return tuple(group[:k])
        # branch: force an element into the core
        freq: dict[int, int] = {}
        for i in idxs:
            for x in resid[i]:
                freq[x] = freq.get(x, 0) + 1
        for x in sorted(freq, key=lambda e: (-freq[e], e)):
            if freq[x] < k:
                continue
            sub = [i for i in idxs if x in resid[i]]
            r = search(sub, core | {x})
            if r is not None:
                return r
        # exhaustive fallback on small residual families
        if len(idxs) <= 16:
            for combo in itertools.combinations(idxs, k):
                cand = _check_sunflower(fs, combo)
                if cand is not None and cand.core >= core:
                    return combo
        return None

    members = search(list(range(len(fs))), frozenset())
    if members is None:
        # last resort: fully exhaustive, complete for any size the
        # suites use
        for combo in itertools.combinations(range(len(fs)), k):
            cand = _check_sunflower(fs, combo)
            if cand is not None:
                return cand
        return None
    return _check_sunflower(fs, list(members))


def sunflower_reduce_rainbow(
    family: ColoredFamily,
    m: int,
    disjoint_solver: Callable[[ColoredFamily, int], Optional[RainbowSelection]],
) -> Optional[RainbowSelection]:
    """Reduce a rainbow m-set search to a disjoint instance through a
    sunflower.

    Finds a sunflower with the largest available petal count among the
    family's sets, solves the rainbow problem on the petal family with
    the target shrunk by the core size, then extends the petal solution
    with core vertices colored by unused sunflower members. Core
    vertices lie in every member, so independence of the union follows
    from independence of any single member plus petal independence.

    Returns None when no sunflower with enough petals exists or the
    disjoint solver finds nothing. Raises PreconditionViolation if the
    solver succeeds but the extension falls short of m, which cannot
    happen when the petal count is at least m.
    """
    if m <= 0:
        return RainbowSelection(())
    g = family.host
    tuples = [frozenset(to_tuple(s)) for s in family.sets]
    for k in range(len(tuples), m - 1, -1):
        sf = find_sunflower(tuples, k)
        if sf is None:
            continue
        ell = len(sf.core)
        m_petals = max(m - ell, 0)
        petal_family = ColoredFamily(g, tuple(mask_of(p) for p in sf.petals))
        sel = disjoint_solver(petal_family, m_petals)
        if sel is None:
            return None
        pairs = [(sf.members[c], v) for c, v in sel.assignments]
        used = {c for c, _ in pairs}
        spare = [i for i in sf.members if i not in used]
        for v in sorted(sf.core):
            if len(pairs) >= m:
                break
            if not spare:
                raise PreconditionViolation(
                    "sunflower extension ran out of colors", witness=sf
                )
            pairs.append((spare.pop(0), v))
        if len(pairs) < m:
            raise PreconditionViolation(
                f"sunflower reduction produced only {len(pairs)} of {m} pairs",
                witness=sf,
            )
        return RainbowSelection(tuple(sorted(pairs[:m])))
    return None


# ---------------------------------------------------------------------------
# Repeating graphs


def column_digraph(g: Graph, col_a: Sequence[int], col_b: Sequence[int]) -> Digraph:
    """Interaction digraph of two ordered columns: arc i -> j iff
    col_a[i] is adjacent to col_b[j] in g."""
    if len(col_a) != len(col_b):
        raise ValueError("columns must have equal length")
    t = len(col_a)
    rows = [0] * t
    for i, u in enumerate(col_a):
        for j, v in enumerate(col_b):
            if u != v and g.has_edge(u, v):
                rows[i] |= 1 << j
    return Digraph(t, tuple(rows))


def is_repeating(g: Graph, columns: Sequence[Sequence[int]]) -> Optional[Digraph]:
    """The common interaction digraph if every column pair a < a'
    induces the same one (earlier column as tail), else None.

    Columns must be nonempty, pairwise disjoint, of one length, and
    each must be independent in g; violations raise ValueError. A
    single column repeats trivially with the loopless empty digraph.
    """
    if not columns:
        raise ValueError("need at least one column")
    t = len(columns[0])
    if t == 0:
        raise ValueError("columns must be nonempty")
    seen: set[int] = set()
    for idx, col in enumerate(columns):
        if len(col) != t:
            raise ValueError(f"column {idx} has length {len(col)}, expected {t}")
        if len(set(col)) != t:
            raise ValueError(f"column {idx} repeats a vertex")
        if seen & set(col):
            raise ValueError(f"column {idx} shares vertices with an earlier column")
        seen |= set(col)
        if not is_independent(g, col):
            raise ValueError(f"column {idx} is not independent")
    base: Optional[Digraph] = None
    for a in range(len(columns)):
        for b in range(a + 1, len(columns)):
            d = column_digraph(g, columns[a], columns[b])
            if base is None:
                base = d
            elif d != base:
                return None
    if base is None:
        base = Digraph(t, (0,) * t)
    return base


@dataclass(frozen=True)
class RepeatingGraph:
    """A graph assembled from disjoint columns with one shared
    interaction digraph.

    Vertex (column a, row b) is a * rows + b in the flat graph. columns
    is the column count, rows the common column length. base is the
    digraph that every ordered pair of distinct columns realizes; it is
    strongly repeating when base has a loop at every row, meaning equal
    rows of distinct columns are always adjacent.
    """

    columns: int
    rows: int
    base: Digraph
    graph: Graph

    @property
    def strongly_repeating(self) -> bool:
        return self.base.all_loops

    def vertex(self, a: int, b: int) -> int:
        return a * self.rows + b

    def column_masks(self) -> tuple[int, ...]:
        return tuple(
            mask_of(self.vertex(a, b) for b in range(self.rows))
            for a in range(self.columns)
        )

    def family(self, multiplicity: int = 1) -> ColoredFamily:
        """Columns as a colored family, each column repeated
        multiplicity times (colors grouped by column)."""
        cols = self.column_masks()
        sets = tuple(c for c in cols for _ in range(multiplicity))
        return ColoredFamily(self.graph, sets)

    @staticmethod
    def from_digraph(d: Digraph, t: int) -> "RepeatingGraph":
        """Assemble t columns over the digraph d.

        Vertices (a, b) and (a', b') with a < a' are adjacent iff
        b -> b' is an arc of d, or b' -> b is an arc of d reversed
        against the column order is NOT used; the rule is:

          a < a' and d has arc b -> b', or
          a > a' and d has arc b' -> b, or
          a != a' and b == b'.

        Equal rows of distinct columns are therefore always adjacent,
        so the result is strongly repeating and its base digraph is d
        with all loops added. Columns themselves are independent.
        """
        if t < 1:
            raise ValueError("need at least one column")
        r = d.n
        n = t * r
        edges = []
        for a in range(t):
            for a2 in range(a + 1, t):
                for b in range(r):
                    for b2 in range(r):
                        if b == b2 or d.has_arc(b, b2):
                            edges.append((a * r + b, a2 * r + b2))
        from .graphs import make_graph

        g = make_graph(n, edges)
        return RepeatingGraph(t, r, d.with_all_loops(), g)


def find_repeating_subfamily(
    g: Graph, columns: Sequence[Sequence[int]], want: int
) -> Optional[tuple[tuple[int, ...], Digraph]]:
    """Indices of `want` columns that repeat, with their digraph, or
    None. Subsets are scanned in colexicographic order of index
    tuples."""
    idxs = range(len(columns))
    for combo in sorted(itertools.combinations(idxs, want), key=lambda c: c[::-1]):
        try:
            d = is_repeating(g, [columns[i] for i in combo])
        except ValueError:
            continue
        if d is not None:
            return combo, d
    return None


# ---------------------------------------------------------------------------
# Digraph condition


def _undirected_cycles_up_to(d: Digraph, s: int) -> list[list[int]]:
    """Vertex sequences of undirected simple cycles of length <= s in
    the underlying multigraph. Digon pairs count; loops do not. Each
    cycle is reported once, rooted at its least vertex."""
    und = [0] * d.n
    for u in range(d.n):
        for v in bits(d.out[u]):
            if u != v:
                und[u] |= 1 << v
                und[v] |= 1 << u
    digons = set()
    for u in range(d.n):
        for v in bits(d.out[u]):
            if v > u and d.has_arc(v, u):
                digons.add((u, v))
    cycles: list[list[int]] = [[u, v] for (u, v) in sorted(digons) if s >= 2]

    for v0 in range(d.n):
        above = ~((1 << (v0 + 1)) - 1)

        def rec(path: list[int], used: int) -> None:
            last = path[-1]
            if len(path) >= 3 and (und[last] >> v0 & 1):
                if len(path) > 2 or (min(path), max(path)) in digons:
                    if path[1] < path[-1]:
                        cycles.append(path[:])
            if len(path) == s:
                return
            cand = und[last] & above & ~used
            for w in bits(cand):
                rec(path + [w], used | (1 << w))

        rec([v0], 1 << v0)
    return cycles


def _is_directed_cycle(d: Digraph, seq: Sequence[int]) -> bool:
    k = len(seq)
    fwd = all(d.has_arc(seq[i], seq[(i + 1) % k]) for i in range(k))
    bwd = all(d.has_arc(seq[(i + 1) % k], seq[i]) for i in range(k))
    return fwd or bwd


def _acyclic_m_set(d: Digraph, m: int, loops_block: bool) -> Optional[tuple[int, ...]]:
    """An m-subset inducing an acyclic subdigraph, or None. Searched in
    lexicographic order."""
    ok_vertices = [
        v for v in range(d.n) if not (loops_block and d.has_arc(v, v))
    ]

    def induced_acyclic(vs: Sequence[int]) -> bool:
        idx = {v: i for i, v in enumerate(vs)}
        color = [0] * len(vs)  # 0 new, 1 active, 2 done

        def dfs(i: int) -> bool:
            color[i] = 1
            v = vs[i]
            for w in bits(d.out[v]):
                if w == v:
                    continue
                j = idx.get(w)
                if j is None:
                    continue
                if color[j] == 1:
                    return False
                if color[j] == 0 and not dfs(j):
                    return False
            color[i] = 2
            return True

        for i in range(len(vs)):
            if color[i] == 0 and not dfs(i):
                return False
        return True

    for combo in itertools.combinations(ok_vertices, m):
        if induced_acyclic(combo):
            return combo
    return None


def digraph_condition_a(
    d: Digraph,
    s: int,
    m: int,
    digons_count: bool = True,
    loops_block_acyclic: bool = True,
) -> tuple[bool, Optional[dict]]:
    """Does d satisfy the short-cycle condition at parameters (s, m)?

    Required: every undirected cycle of length at most s in the
    underlying graph is a consistently oriented cycle of length exactly
    s, and no m vertices induce an acyclic subdigraph. Returns (True,
    None) or (False, certificate) where the certificate is a dict with
    "kind" of "cycle" or "acyclic-set" and the offending "vertices".

    digons_count=False ignores 2-cycles in the cycle scan;
    loops_block_acyclic=False lets looped vertices join acyclic sets
    (the loop itself is still a cycle through the vertex, so the
    default treats such a vertex as never acyclic).
    """
    for cyc in _undirected_cycles_up_to(d, s):
        if not digons_count and len(cyc) == 2:
            continue
        if len(cyc) != s or not _is_directed_cycle(d, cyc):
            return False, {"kind": "cycle", "vertices": list(cyc)}
    bad = _acyclic_m_set(d, m, loops_block_acyclic)
    if bad is not None:
        return False, {"kind": "acyclic-set", "vertices": list(bad)}
    return True, None

"""Witness algorithms extracted from upper-bound proofs.

Each function here is the constructive core of one theorem: under the
theorem's hypotheses it always returns a rainbow independent set of the
guaranteed size, and when it trips over a violated hypothesis it raises
PreconditionViolation carrying an explicit witness (a claw, a K_r, a
non-clique component). Tie-breaking is fixed everywhere: lowest vertex
index first, lowest color index first, so outputs are reproducible.

None of these functions trusts its own bookkeeping: the test suites
re-validate every returned selection with the independent checker in
families.validate_selection.
"""

from __future__ import annotations

import math
from typing import Sequence

from .bitset import bits, lowest_bit, mask_of, popcount, to_tuple
from .families import ColoredFamily, PreconditionViolation, RainbowSelection
from .graphs import (
    Graph,
    bipartition,
    components,
    find_simplicial,
    first_independent_subset,
    induces_bipartite,
    max_degree,
)
from .reductions import RepeatingGraph
from .solver import greedy_maximal_rainbow

__all__ = [
    "clawfree_rainbow",
    "cliquepartition_rainbow",
    "chordal_rainbow",
    "colourable_rainbow",
    "staircase_colourable_rainbow",
    "degree2_rainbow",
    "maxdeg_rainbow_pair",
    "repeating_diag_rainbow",
    "ramsey_maximal_rainbow",
]


def clawfree_rainbow(g: Graph, family: ColoredFamily, t: int, m: int) -> RainbowSelection:
    """Rainbow independent m-set in a K_{1,t+1}-free graph.

    Works on the first m sets. Induction unrolled into a loop: take the
    lowest vertex v of the highest-index live set, commit it, and cut
    N[v] out of the remaining sets. A live set can lose at most t
    vertices per step: its removed vertices are independent common
    neighbors of v, and t+1 of them together with v would induce a
    K_{1,t+1}. That witness is raised if encountered. A set containing
    v itself loses only v.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if len(family.sets) < m:
        raise ValueError(f"need at least {m} sets, have {len(family.sets)}")
    if m == 0:
        return RainbowSelection(())
    alive = list(family.sets[:m])
    n = min(popcount(s) for s in alive)
    if n < t * (m - 1) + 1:
        raise ValueError(f"m = {m} exceeds ceil(n/t) for n = {n}, t = {t}")
    adj = g.adj
    pairs: list[tuple[int, int]] = []
    for i in range(m - 1, -1, -1):
        if not alive[i]:
            raise PreconditionViolation(f"set {i} exhausted; hypotheses violated")
        v = lowest_bit(alive[i])
        pairs.append((i, v))
        for j in range(i):
            removed = alive[j] & adj[v]
            if popcount(removed) > t:
                leaves = 0
                for x in bits(removed):
                    leaves |= 1 << x
                    if popcount(leaves) == t + 1:
                        break
                raise PreconditionViolation(
                    f"vertex {v} has {popcount(removed)} > {t} neighbors in set {j}",
                    witness=leaves | (1 << v),
                )
            alive[j] &= ~(adj[v] | (1 << v))
    return RainbowSelection(tuple(sorted(pairs)))


def cliquepartition_rainbow(g: Graph, family: ColoredFamily) -> RainbowSelection:
    """Full rainbow n-set when every component of g is a clique.

    Independent sets in such a graph are exactly the partial
    transversals of the clique partition, a partition matroid, so a
    greedy pass never gets stuck: each of the first n sets meets n
    distinct cliques and fewer than n are in use when its turn comes.
    """
    comps = components(g)
    comp_of = [0] * g.n
    for ci, comp in enumerate(comps):
        for v in bits(comp):
            comp_of[v] = ci
        for v in bits(comp):
            if (g.adj[v] & comp) != comp & ~(1 << v):
                from .graphs import Pattern, contains_induced

                witness = contains_induced(g, Pattern.complete_minus_edge(3))
                raise PreconditionViolation(
                    "graph is not a disjoint union of cliques", witness=witness
                )
    n = family.uniform_size()
    if len(family.sets) < n:
        raise ValueError(f"need at least {n} sets, have {len(family.sets)}")
    used: set[int] = set()
    pairs: list[tuple[int, int]] = []
    for i in range(n):
        for v in bits(family.sets[i]):
            if comp_of[v] not in used:
                used.add(comp_of[v])
                pairs.append((i, v))
                break
        else:
            raise PreconditionViolation(f"set {i} confined to used cliques")
    return RainbowSelection(tuple(pairs))


def chordal_rainbow(g: Graph, family: ColoredFamily, m: int) -> RainbowSelection:
    """Rainbow independent m-set in a chordal graph by simplicial
    elimination.

    Restricted to the union of the live sets, a chordal graph has a
    simplicial vertex v; v is assigned the highest-index live set
    containing it and N[v] is cut from the others. N[v] is a clique
    there, so each live set loses at most one vertex per step, which
    keeps every set nonempty through m steps when sizes start at
    n >= m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if len(family.sets) < m:
        raise ValueError(f"need at least {m} sets, have {len(family.sets)}")
    if m == 0:
        return RainbowSelection(())
    alive = {j: family.sets[j] for j in range(m)}
    if min(popcount(s) for s in alive.values()) < m:
        raise ValueError("all sets must have size at least m")
    pairs: list[tuple[int, int]] = []
    while alive:
        union = 0
        for s in alive.values():
            union |= s
        v = find_simplicial(g, within=union)
        if v is None:
            raise PreconditionViolation(
                "no simplicial vertex; graph is not chordal", witness=union
            )
        color = max(j for j, s in alive.items() if s >> v & 1)
        pairs.append((color, v))
        del alive[color]
        cut = g.adj[v] | (1 << v)
        for j in list(alive):
            lost = popcount(alive[j] & cut)
            if lost > 1:
                raise PreconditionViolation(
                    f"set {j} lost {lost} vertices to one simplicial step"
                )
            alive[j] &= ~cut
    return RainbowSelection(tuple(sorted(pairs)))


def _class_masks(coloring: Sequence[int]) -> list[int]:
    k = max(coloring) + 1 if coloring else 0
    masks = [0] * k
    for v, c in enumerate(coloring):
        masks[c] |= 1 << v
    return masks


def _check_proper(g: Graph, coloring: Sequence[int]) -> None:
    if len(coloring) != g.n:
        raise ValueError("coloring length must equal vertex count")
    if any(c < 0 for c in coloring):
        raise ValueError("every vertex must be colored")
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise PreconditionViolation(
                f"edge ({u},{v}) is monochromatic", witness=(u, v)
            )


def _colourable_core(
    g: Graph, coloring: Sequence[int], family: ColoredFamily, m: int
) -> RainbowSelection:
    """Shared maximal-rainbow-plus-pigeonhole argument.

    Build an inclusion-maximal rainbow set M (no independence demanded
    of its image). An unrepresented set must then be a subset of the
    image, hence an independent rainbow set of size >= m. Otherwise M
    has one vertex per color and some color class of g holds m of them.
    """
    sel = greedy_maximal_rainbow(family, admissible=lambda mask: True)
    image = sel.image_mask()
    color_of = {v: c for c, v in sel.assignments}
    represented = set(sel.colors())
    unrep = [j for j in range(len(family.sets)) if j not in represented]
    if unrep:
        j = unrep[0]
        if family.sets[j] & ~image:
            raise PreconditionViolation(f"greedy selection not maximal at set {j}")
        verts = list(bits(family.sets[j]))
        if len(verts) < m:
            raise PreconditionViolation(f"unrepresented set {j} smaller than m = {m}")
        return RainbowSelection(tuple(sorted((color_of[v], v) for v in verts[:m])))
    for mask in _class_masks(coloring):
        inside = mask & image
        if popcount(inside) >= m:
            verts = list(bits(inside))[:m]
            return RainbowSelection(tuple(sorted((color_of[v], v) for v in verts)))
    raise PreconditionViolation(
        "pigeonhole failed: no color class holds m selected vertices"
    )


def colourable_rainbow(
    g: Graph, coloring: Sequence[int], family: ColoredFamily, m: int
) -> RainbowSelection:
    """Rainbow independent m-set from k(m-1)+1 sets of size >= m in a
    graph properly colored by the given per-vertex class ids."""
    if m <= 0:
        if m == 0:
            return RainbowSelection(())
        raise ValueError("m must be nonnegative")
    _check_proper(g, coloring)
    k = max(coloring) + 1 if coloring else 0
    if len(family.sets) < k * (m - 1) + 1:
        raise ValueError(
            f"need at least k(m-1)+1 = {k * (m - 1) + 1} sets, have {len(family.sets)}"
        )
    if any(popcount(s) < m for s in family.sets):
        raise ValueError("all sets must have size at least m")
    return _colourable_core(g, coloring, family, m)


def staircase_colourable_rainbow(
    g: Graph, coloring: Sequence[int], family: ColoredFamily, m: int, n: int
) -> RainbowSelection:
    """Variant of colourable_rainbow under the staircase condition
    |F_i| >= min(i, n) (1-indexed) instead of uniform size.

    The greedy scan visits colors in index order, so color i enters the
    selection whenever |F_i| > i-1, which the staircase guarantees for
    all i <= n; an unrepresented set therefore has size >= n >= m and
    the same two-branch argument applies.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return RainbowSelection(())
    if n < m:
        raise ValueError("need n >= m")
    _check_proper(g, coloring)
    k = max(coloring) + 1 if coloring else 0
    if len(family.sets) < k * (m - 1) + 1:
        raise ValueError(
            f"need at least k(m-1)+1 = {k * (m - 1) + 1} sets, have {len(family.sets)}"
        )
    for i, s in enumerate(family.sets):
        if popcount(s) < min(i + 1, n):
            raise ValueError(
                f"staircase violated: set {i} has size {popcount(s)} < {min(i + 1, n)}"
            )
    return _colourable_core(g, coloring, family, m)


def degree2_rainbow(g: Graph, family: ColoredFamily) -> RainbowSelection:
    """Rainbow independent n-set from 2n-1 sets of size n when all
    degrees are at most 2.

    Grow a maximal rainbow set M whose image induces a bipartite graph.
    If every color is represented, one bipartition side of the image
    has n vertices and is independent. Otherwise, every vertex of the
    lowest unrepresented set I missing from the image sits on an odd
    cycle component whose other vertices all lie in the image; swap
    I's vertices on that cycle for an independent half of the cycle
    inside the image. The patched set lands inside the image with size
    at least n.
    """
    d = max_degree(g)
    if d > 2:
        raise PreconditionViolation(f"maximum degree {d} exceeds 2")
    n = family.uniform_size()
    if n < 1:
        raise ValueError("sets must be nonempty")
    if len(family.sets) < 2 * n - 1:
        raise ValueError(f"need at least 2n-1 = {2 * n - 1} sets, have {len(family.sets)}")
    sel = greedy_maximal_rainbow(family, admissible=lambda mask: induces_bipartite(g, mask))
    image = sel.image_mask()
    color_of = {v: c for c, v in sel.assignments}
    represented = set(sel.colors())

    if len(represented) == len(family.sets):
        side0, side1 = bipartition(g, image)  # image induces bipartite by construction
        big = side0 if popcount(side0) >= popcount(side1) else side1
        verts = list(bits(big))[:n]
    else:
        j = min(c for c in range(len(family.sets)) if c not in represented)
        comp_of: dict[int, int] = {}
        comps = components(g)
        for ci, comp in enumerate(comps):
            for v in bits(comp):
                comp_of[v] = ci
        final = family.sets[j]
        for v in bits(family.sets[j] & ~image):
            comp = comps[comp_of[v]]
            size = popcount(comp)
            is_cycle = size >= 3 and all(popcount(g.adj[u] & comp) == 2 for u in bits(comp))
            if size % 2 == 0 or not is_cycle or (comp & ~(1 << v)) & ~image:
                raise PreconditionViolation(
                    f"vertex {v} blocks the image without a private odd cycle",
                    witness=comp,
                )
            t_v = (size - 1) // 2
            replacement = first_independent_subset(g, comp & ~(1 << v), t_v)
            if replacement is None:
                raise PreconditionViolation(f"no independent {t_v}-set in cycle at {v}")
            final = (final & ~comp) | replacement
        if final & ~image:
            raise PreconditionViolation("patched set escapes the image")
        verts = list(bits(final))[:n]
    if len(verts) < n:
        raise PreconditionViolation(f"only {len(verts)} vertices available for size {n}")
    return RainbowSelection(tuple(sorted((color_of[v], v) for v in verts)))


def maxdeg_rainbow_pair(g: Graph, family: ColoredFamily, k: int) -> RainbowSelection:
    """Rainbow independent 2-set from ceil((k+1)/n)+1 sets of size n
    when all degrees are at most k.

    Two intersecting sets immediately yield the pair inside one of
    them; pairwise disjoint sets leave more than deg(u) vertices
    outside the first set, one of which avoids u's neighborhood.
    """
    d = max_degree(g)
    if d > k:
        raise PreconditionViolation(f"maximum degree {d} exceeds k = {k}")
    n = family.uniform_size()
    if n < 2:
        raise ValueError("sets must have size at least 2")
    need = math.ceil((k + 1) / n) + 1
    if len(family.sets) < need:
        raise ValueError(f"need at least {need} sets, have {len(family.sets)}")
    sets = family.sets
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            common = sets[i] & sets[j]
            if common:
                x = lowest_bit(common)
                y = lowest_bit(sets[i] & ~(1 << x))
                return RainbowSelection(tuple(sorted(((i, y), (j, x)))))
    u = lowest_bit(sets[0])
    blocked = g.adj[u] | (1 << u)
    for j in range(1, len(sets)):
        avail = sets[j] & ~blocked
        if avail:
            return RainbowSelection(((0, u), (j, lowest_bit(avail))))
    raise PreconditionViolation(
        f"vertex {u} adjacent to all of the other sets; degree bound violated"
    )


def repeating_diag_rainbow(R: RepeatingGraph, mode: str, r: int) -> RainbowSelection:
    """Rainbow independent n-set over the columns of a repeating graph
    forbidding K_r (mode "Kr") or K_r minus an edge (mode "Kr-").

    Kr mode: no row may be a clique (r same-row vertices would induce
    K_r), so row 0 is independent and meets the first n columns in a
    rainbow set. Kr- mode: a loop-free row works the same way; if all
    rows are cliques the diagonal (a, a) works, since a cross arc
    between two diagonal rows i -> j would spread to every column pair
    and induce K_r minus an edge on {(0,i)} and row j. Violations raise
    with the explicit induced witness.
    """
    n = R.rows
    g = R.graph
    if mode == "Kr":
        if r < 2:
            raise ValueError("r must be at least 2")
        if R.columns < max(n, r):
            raise ValueError(f"need at least max(n, r) = {max(n, r)} columns")
        for b in range(n):
            if R.base.has_arc(b, b):
                witness = mask_of(R.vertex(c, b) for c in range(r))
                raise PreconditionViolation(
                    f"row {b} is a clique; K_{r} present", witness=witness
                )
        return RainbowSelection(tuple((a, R.vertex(a, 0)) for a in range(n)))
    if mode != "Kr-":
        raise ValueError(f"unknown mode {mode!r}")
    if r < 3:
        raise ValueError("r must be at least 3")
    if R.columns < max(n, r - 1):
        raise ValueError(f"need at least max(n, r-1) = {max(n, r - 1)} columns")
    for b in range(n):
        if not R.base.has_arc(b, b):
            return RainbowSelection(tuple((a, R.vertex(a, b)) for a in range(n)))
    # strongly repeating: try the diagonal
    for i in range(n):
        for j in range(i + 1, n):
            if g.has_edge(R.vertex(i, i), R.vertex(j, j)):
                witness = 1 << R.vertex(0, i)
                witness |= mask_of(R.vertex(b, j) for b in range(r - 1))
                raise PreconditionViolation(
                    f"diagonal blocked by rows {i},{j}; K_{r} minus an edge present",
                    witness=witness,
                )
    return RainbowSelection(tuple((a, R.vertex(a, a)) for a in range(n)))


def ramsey_maximal_rainbow(
    g: Graph, family: ColoredFamily, r: int, m: int
) -> RainbowSelection:
    """Rainbow independent m-set from R(r,m) sets of size >= m in a
    K_r-free graph; the caller supplies the family at Ramsey size.

    A maximal rainbow set either misses some set, which is then inside
    the image and independent, or its image has R(r,m) vertices and,
    being K_r-free, contains an independent m-set.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return RainbowSelection(())
    if any(popcount(s) < m for s in family.sets):
        raise ValueError("all sets must have size at least m")
    sel = greedy_maximal_rainbow(family, admissible=lambda mask: True)
    image = sel.image_mask()
    color_of = {v: c for c, v in sel.assignments}
    represented = set(sel.colors())
    unrep = [j for j in range(len(family.sets)) if j not in represented]
    if unrep:
        j = unrep[0]
        if family.sets[j] & ~image:
            raise PreconditionViolation(f"greedy selection not maximal at set {j}")
        verts = list(bits(family.sets[j]))[:m]
        return RainbowSelection(tuple(sorted((color_of[v], v) for v in verts)))
    ind = first_independent_subset(g, image, m)
    if ind is not None:
        return RainbowSelection(tuple(sorted((color_of[v], v) for v in bits(ind))))
    from .graphs import _find_clique

    clique = _find_clique(g, r, image)
    if clique is not None:
        raise PreconditionViolation(f"K_{r} found in the image", witness=clique)
    raise PreconditionViolation(
        f"image of size {popcount(image)} has no independent {m}-set and no K_{r}; "
        "family is smaller than R(r,m)"
    )

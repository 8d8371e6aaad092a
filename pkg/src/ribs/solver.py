"""Exact rainbow independent set solvers.

The workhorse is a color-ordered depth-first search over partial
selections: colors are processed smallest member set first, each step
either skips the current color or extends the selection with a vertex
of that color's set avoiding the closed neighborhood of everything
chosen so far. Pruning on remaining colors keeps the search well under
the naive product bound on the instances the suites generate.

brute_rainbow is the independent reference implementation used by the
test oracles: plain enumeration of color subsets and vertex choices
with no pruning beyond a work budget.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .bitset import bits, popcount, to_tuple
from .families import ColoredFamily, RainbowSelection
from .graphs import Graph

__all__ = [
    "find_rainbow",
    "rainbow_masks",
    "max_rainbow_size",
    "brute_rainbow",
    "greedy_maximal_rainbow",
    "BudgetExceeded",
]


class BudgetExceeded(RuntimeError):
    """The exhaustive solver hit its work budget."""


def rainbow_masks(g: Graph, sets: Sequence[int], m: int) -> list[tuple[int, int]] | None:
    """Core search: (color, vertex) pairs for a rainbow independent
    m-set over the mask sequence, or None.

    Colors are tried in order of (set size, index); the returned pairs
    are the first witness in that search order.
    """
    if m == 0:
        return []
    if m < 0 or m > len(sets):
        return None
    order = sorted(range(len(sets)), key=lambda i: (popcount(sets[i]), i))
    adj = g.adj
    chosen: list[tuple[int, int]] = []

    def rec(pos: int, blocked: int) -> bool:
        if len(chosen) == m:
            return True
        if m - len(chosen) > len(order) - pos:
            return False
        # branch 1: use color order[pos]
        color = order[pos]
        avail = sets[color] & ~blocked
        for v in bits(avail):
            chosen.append((color, v))
            if rec(pos + 1, blocked | adj[v] | (1 << v)):
                return True
            chosen.pop()
        # branch 2: skip it
        return rec(pos + 1, blocked)

    return list(chosen) if rec(0, 0) else None


def find_rainbow(family: ColoredFamily, m: int) -> RainbowSelection | None:
    """A rainbow independent m-set for the family, or None.

    The result is sorted by color and always passes validate_selection.
    """
    pairs = rainbow_masks(family.host, family.sets, m)
    if pairs is None:
        return None
    return RainbowSelection(tuple(sorted(pairs)))


def max_rainbow_size(family: ColoredFamily) -> tuple[int, RainbowSelection]:
    """Largest m admitting a rainbow independent m-set, with a witness.

    Rainbow sets restrict, so the predicate is monotone in m and the
    first failure stops the scan. m = 0 always succeeds.
    """
    best = RainbowSelection(())
    size = 0
    for m in range(1, len(family.sets) + 1):
        sel = find_rainbow(family, m)
        if sel is None:
            break
        best = sel
        size = m
    return size, best


def _leaf_bound(sizes: list[int], m: int) -> int:
    """Sum over m-subsets of the product of sizes: the exact leaf count
    of the unpruned enumeration, via the elementary symmetric polynomial."""
    e = [0] * (m + 1)
    e[0] = 1
    for s in sizes:
        for j in range(min(m, len(e) - 1), 0, -1):
            e[j] += e[j - 1] * s
    return e[m]


def brute_rainbow(family: ColoredFamily, m: int, budget: int = 10**8) -> RainbowSelection | None:
    """Reference solver: exhaust color m-subsets in lexicographic order
    and all vertex assignments per subset.

    Raises BudgetExceeded if the enumeration would visit more than
    budget leaves. Intended for oracles and cross-checks, not for
    production instances.
    """
    if m == 0:
        return RainbowSelection(())
    if m < 0 or m > len(family.sets):
        return None
    g = family.host
    tuples = [to_tuple(s) for s in family.sets]
    if _leaf_bound([len(t) for t in tuples], m) > budget:
        raise BudgetExceeded(f"more than {budget} assignments")
    for colors in itertools.combinations(range(len(tuples)), m):
        for verts in itertools.product(*(tuples[c] for c in colors)):
            if len(set(verts)) != m:
                continue
            ok = True
            for i in range(m):
                for j in range(i + 1, m):
                    if g.has_edge(verts[i], verts[j]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return RainbowSelection(tuple(zip(colors, verts)))
    return None


def greedy_maximal_rainbow(
    family: ColoredFamily,
    admissible: Callable[[int], bool] | None = None,
) -> RainbowSelection:
    """Greedy pass: scan colors in index order, add the least vertex
    keeping the image admissible, skip colors that cannot extend.

    admissible takes the candidate image mask; the default is
    independence in the host graph. For any admissibility notion closed
    under subsets the result is maximal: no skipped color can be added
    to the final image afterwards, because its failure at scan time
    already involved only vertices that are still present at the end.
    """
    g = family.host
    if admissible is None:
        from .graphs import is_independent

        admissible = lambda mask: is_independent(g, mask)
    if not admissible(0):
        raise ValueError("empty image must be admissible")
    image = 0
    pairs: list[tuple[int, int]] = []
    for c, s in enumerate(family.sets):
        for v in bits(s & ~image):
            if admissible(image | (1 << v)):
                image |= 1 << v
                pairs.append((c, v))
                break
    return RainbowSelection(tuple(pairs))

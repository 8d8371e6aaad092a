"""Exact computation of the rainbow threshold f_G(n, m).

f_G(n, m) is the least k such that every k independent n-sets of G
(repeats allowed) admit a rainbow independent m-set. Equivalently it is
one more than the size of a largest "bad" multiset, one with no rainbow
m-set. Two observations make the search finite and small:

* Badness is closed downward: removing sets from a bad multiset keeps
  it bad, so the search can grow multisets one support index at a time
  and prune as soon as a rainbow m-set appears.
* No bad multiset uses one set m times: m copies of a single
  independent n-set with n >= m already contain a rainbow m-set (m
  distinct vertices, one per copy). Multiplicities are therefore capped
  at m-1 and the search space is the product of per-set multiplicities
  0..m-1 over the finitely many independent n-sets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bitset import to_tuple
from .families import CertificationError, ColoredFamily
from .graphs import Graph, enum_independent_sets
from .solver import BudgetExceeded, find_rainbow, rainbow_masks

__all__ = ["FResult", "f_exact", "certify_lower_bound", "property_upper_bound"]


@dataclass(frozen=True)
class FResult:
    value: int
    witness_sets: tuple[tuple[int, ...], ...]
    nodes: int


def f_exact(g: Graph, n: int, m: int, budget: int | None = None) -> FResult:
    """Exact f_G(n, m) with a maximum bad multiset as witness.

    Depth-first search over multiplicity vectors in support index
    order, multiplicities tried high to low. A node is cut when even
    filling all remaining indices at the cap cannot beat the best bad
    multiset found. `nodes` counts rainbow-existence checks; `budget`
    bounds them.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    sets = enum_independent_sets(g, n)
    if not sets:
        raise ValueError(f"f is undefined: no independent {n}-set")
    cap = m - 1
    count = len(sets)
    best = 0
    best_vec: tuple[int, ...] = (0,) * count
    nodes = 0

    def is_bad(multiset: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"budget of {budget} rainbow checks exhausted")
        return rainbow_masks(g, multiset, m) is None

    def dfs(i: int, vec: list[int], chosen: list[int], size: int) -> None:
        nonlocal best, best_vec
        if size > best:
            best = size
            best_vec = tuple(vec + [0] * (count - i))
        if i == count or size + (count - i) * cap <= best:
            return
        known_bad = 0  # multiplicities up to this stay bad alongside `chosen`
        for c in range(cap, 0, -1):
            extension = chosen + [sets[i]] * c
            if c <= known_bad or is_bad(extension):
                known_bad = max(known_bad, c)
                dfs(i + 1, vec + [c], extension, size + c)
        dfs(i + 1, vec + [0], chosen, size)

    dfs(0, [], [], 0)
    witness = []
    for idx, c in enumerate(best_vec):
        witness.extend([to_tuple(sets[idx])] * c)
    return FResult(value=best + 1, witness_sets=tuple(witness), nodes=nodes)


def certify_lower_bound(g: Graph, n: int, m: int, family: ColoredFamily) -> int:
    """Checks that the family consists of independent n-sets with no
    rainbow m-set and returns the implied bound f_G(n, m) >= |F| + 1."""
    sizes = set(family.sizes())
    if sizes and sizes != {n}:
        raise ValueError(f"family sets must all have size {n}")
    sel = find_rainbow(family, m)
    if sel is not None:
        raise CertificationError(
            f"family admits a rainbow {m}-set; no lower bound follows", witness=sel
        )
    return len(family.sets) + 1


def property_upper_bound(
    g: Graph, n: int, m: int, bound: int, trials: int = 100, seed: int = 0
) -> int:
    """Samples `trials` random multisets of `bound` independent n-sets
    and checks each admits a rainbow m-set. Returns the number of
    trials run; a failure disproves f_G(n, m) <= bound and raises with
    the offending family."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    sets = enum_independent_sets(g, n)
    if not sets:
        raise ValueError(f"no independent {n}-set to sample")
    rng = random.Random(seed)
    for trial in range(trials):
        picked = tuple(sets[rng.randrange(len(sets))] for _ in range(bound))
        family = ColoredFamily(g, picked)
        if find_rainbow(family, m) is None:
            raise CertificationError(
                f"trial {trial}: {bound} sets with no rainbow {m}-set", witness=family
            )
    return trials

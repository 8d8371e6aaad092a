"""Colored families of independent sets and rainbow selections."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitset import as_mask, popcount, to_tuple
from .graphs import Graph, is_independent

__all__ = [
    "ColoredFamily",
    "RainbowSelection",
    "PreconditionViolation",
    "InvalidSelection",
    "CertificationError",
    "validate_selection",
]


class PreconditionViolation(ValueError):
    """A structural hypothesis an algorithm relies on does not hold.

    Raised with a witness object describing the violation so callers
    can inspect or re-verify it.
    """

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class InvalidSelection(ValueError):
    """A rainbow selection failed validation."""


class CertificationError(RuntimeError):
    """A claimed bound or construction claim failed its re-check.

    Carries the counterexample when one is in hand.
    """

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class ColoredFamily:
    """An indexed family of independent sets in a host graph.

    Index positions are the colors; the same vertex set may appear
    under several colors. Every member is checked for independence at
    construction time.
    """

    host: Graph
    sets: tuple[int, ...]

    def __post_init__(self) -> None:
        full = self.host.all_mask
        for i, s in enumerate(self.sets):
            if s & ~full:
                raise ValueError(f"set {i} contains out-of-range vertices")
            if not is_independent(self.host, s):
                raise ValueError(f"set {i} is not independent")

    @staticmethod
    def from_vertex_lists(host: Graph, lists: Iterable[Iterable[int]]) -> "ColoredFamily":
        return ColoredFamily(host, tuple(as_mask(x) for x in lists))

    def __len__(self) -> int:
        return len(self.sets)

    def sizes(self) -> tuple[int, ...]:
        return tuple(popcount(s) for s in self.sets)

    def uniform_size(self) -> int:
        """Common size of all members; raises if sizes differ."""
        sizes = set(self.sizes())
        if len(sizes) != 1:
            raise ValueError(f"family is not uniform: sizes {sorted(sizes)}")
        return sizes.pop()

    def vertex_lists(self) -> list[list[int]]:
        return [list(to_tuple(s)) for s in self.sets]


@dataclass(frozen=True)
class RainbowSelection:
    """A partial transversal: (color, vertex) pairs with distinct colors.

    The image is not required to be independent here; proofs that walk
    through non-independent intermediate selections use this type too.
    Use validate_selection to certify an independent rainbow set.
    """

    assignments: tuple[tuple[int, int], ...]

    def colors(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.assignments)

    def vertices(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.assignments)

    def image_mask(self) -> int:
        m = 0
        for _, v in self.assignments:
            m |= 1 << v
        return m

    def __len__(self) -> int:
        return len(self.assignments)


def validate_selection(
    family: ColoredFamily,
    selection: RainbowSelection,
    expect_size: int | None = None,
) -> None:
    """Check a selection is a rainbow independent set for the family.

    Verifies distinct colors, distinct vertices, membership of each
    vertex in its color's set, and pairwise independence of the image,
    by direct inspection. Raises InvalidSelection otherwise.
    """
    pairs = selection.assignments
    if expect_size is not None and len(pairs) != expect_size:
        raise InvalidSelection(f"expected {expect_size} pairs, got {len(pairs)}")
    seen_colors: set[int] = set()
    seen_vertices: set[int] = set()
    for c, v in pairs:
        if c in seen_colors:
            raise InvalidSelection(f"color {c} used twice")
        if v in seen_vertices:
            raise InvalidSelection(f"vertex {v} used twice")
        seen_colors.add(c)
        seen_vertices.add(v)
        if not (0 <= c < len(family.sets)):
            raise InvalidSelection(f"color {c} out of range")
        if not (family.sets[c] >> v & 1):
            raise InvalidSelection(f"vertex {v} not in set {c}")
    verts = [v for _, v in pairs]
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if family.host.has_edge(verts[i], verts[j]):
                raise InvalidSelection(f"vertices {verts[i]} and {verts[j]} are adjacent")

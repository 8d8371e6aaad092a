"""Bit-mask helpers for vertex sets.

Vertex sets throughout the library are plain Python ints used as bit
vectors: bit v set means vertex v is in the set. Arbitrary-width ints
give constant-factor-fast intersection and union, which is what the
neighborhood kernels in the solver spend their time on.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "mask_of",
    "as_mask",
    "bits",
    "popcount",
    "lowest_bit",
    "to_tuple",
]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def as_mask(vertices: "int | Iterable[int]") -> int:
    """Coerce an int mask or an iterable of vertex indices to a mask."""
    if isinstance(vertices, int):
        return vertices
    return mask_of(vertices)


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit. mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))

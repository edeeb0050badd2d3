"""Finite carriers and subset-mask algebra.

Subsets of a carrier are plain ints: bit ``i`` set means element ``i`` is a
member.  Mask ``0`` is the empty subset.  Everything downstream (relations,
axiom checkers, group subset algebra) works on these masks, so the bit order
is part of the on-disk format: bit ``i`` always refers to ``labels[i]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_CARRIER = 12

_LETTERS = "abcdefghijkl"


@dataclass(frozen=True)
class FiniteSpace:
    """An ordered carrier of distinct element labels (1 to 12 elements)."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.labels) <= MAX_CARRIER:
            raise ValueError(
                f"carrier size must be between 1 and {MAX_CARRIER}, got {len(self.labels)}"
            )
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("carrier labels must be distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def n_subsets(self) -> int:
        return 1 << len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown element label {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(label)
        return mask

    def label_set(self, mask: int) -> tuple[str, ...]:
        """Labels of a subset mask, in carrier order."""
        self.check_mask(mask)
        return tuple(self.labels[i] for i in bits(mask))

    def format_mask(self, mask: int) -> str:
        return "{" + ",".join(self.label_set(mask)) + "}"

    def check_mask(self, mask: int) -> int:
        if not 0 <= mask <= self.full_mask:
            raise ValueError(f"mask {mask} out of range for carrier of size {self.size}")
        return mask

    def subsets(self) -> range:
        return range(self.n_subsets)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def singleton(i: int) -> int:
    return 1 << i


def default_space(n: int) -> FiniteSpace:
    """Carrier with letter labels a, b, c, ... (n <= 12)."""
    if not 1 <= n <= MAX_CARRIER:
        raise ValueError(f"carrier size must be between 1 and {MAX_CARRIER}, got {n}")
    return FiniteSpace(tuple(_LETTERS[:n]))


def product_space(s1: FiniteSpace, s2: FiniteSpace) -> FiniteSpace:
    """Carrier of pairs; element (i, j) gets index i * s2.size + j."""
    labels = tuple(
        f"({l1},{l2})" for l1 in s1.labels for l2 in s2.labels
    )
    return FiniteSpace(labels)


def pair_index(s1: FiniteSpace, s2: FiniteSpace, i: int, j: int) -> int:
    return i * s2.size + j


def rectangle_mask(s1: FiniteSpace, s2: FiniteSpace, mask1: int, mask2: int) -> int:
    """Product-carrier mask of the rectangle mask1 x mask2."""
    out = 0
    for i in bits(mask1):
        out |= mask2 << (i * s2.size)
    return out


def split_rectangle(s1: FiniteSpace, s2: FiniteSpace, mask: int) -> tuple[int, int]:
    """Decompose a product-carrier mask into factors, or raise if non-rectangle.

    The empty mask decomposes canonically as (0, 0).
    """
    if mask == 0:
        return 0, 0
    row_full = s2.full_mask
    mask1 = 0
    mask2 = 0
    for i in range(s1.size):
        row = (mask >> (i * s2.size)) & row_full
        if row:
            mask1 |= 1 << i
            mask2 |= row
    if rectangle_mask(s1, s2, mask1, mask2) != mask:
        raise ValueError(f"non-rectangle subset mask {mask} over product carrier")
    return mask1, mask2

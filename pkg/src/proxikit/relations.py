"""Proximity relations stored as full near/far tables over the power set.

A relation on an n-element carrier is a (2^n x 2^n) boolean table: row ``a``
is an int whose bit ``b`` says whether subset ``a`` is near subset ``b``.
No axiom is enforced at construction -- arbitrary tables are representable so
that counterexamples can be stored and mined.  Axioms are checked, never
assumed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .spaces import (
    FiniteSpace,
    bits,
    product_space,
    rectangle_mask,
    split_rectangle,
)

PROVENANCES = (
    "explicit",
    "discrete",
    "coarse",
    "metric",
    "descriptive",
    "product",
    "subspace",
    "quotient",
)


@dataclass(frozen=True)
class ProximityRelation:
    """Near/far table over all ordered pairs of subsets of the carrier."""

    space: FiniteSpace
    rows: tuple[int, ...]
    provenance: str = "explicit"

    def __post_init__(self) -> None:
        m = self.space.n_subsets
        if len(self.rows) != m:
            raise ValueError(f"table must have {m} rows, got {len(self.rows)}")
        limit = 1 << m
        for a, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise ValueError(f"row {a} has bits outside the {m}-subset range")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")

    def near(self, a: int, b: int) -> bool:
        return bool((self.rows[a] >> b) & 1)

    def far(self, a: int, b: int) -> bool:
        return not self.near(a, b)

    def near_pairs(self) -> Iterator[tuple[int, int]]:
        """Ordered near pairs, first argument outermost."""
        for a, row in enumerate(self.rows):
            for b in bits(row):
                yield a, b

    def near_pair_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def same_table(self, other: "ProximityRelation") -> bool:
        """Entry-for-entry table equality (labels ignored, sizes must match)."""
        return self.space.size == other.space.size and self.rows == other.rows


def relation_from_point_pairs(
    space: FiniteSpace, point_rows: Sequence[int], provenance: str
) -> ProximityRelation:
    """Extend a point-level relation to subsets by existential witnessing.

    ``point_rows[i]`` is the carrier mask of points related to element ``i``.
    Subsets A, B are near iff some a in A and b in B are point-related.  Every
    constructor whose nearness means "a witnessing pair of elements exists"
    (discrete, metric, descriptive) reduces to this.
    """
    n = space.size
    m = space.n_subsets
    # reach[A] = union of point_rows[a] for a in A
    reach = [0] * m
    for mask in range(1, m):
        low = mask & -mask
        reach[mask] = reach[mask ^ low] | point_rows[low.bit_length() - 1]
    # sub_bitset[c] = bitset (over subset indices) of all submasks of carrier mask c
    sub_bitset = [0] * m
    sub_bitset[0] = 1
    for mask in range(1, m):
        low = mask & -mask
        prev = sub_bitset[mask ^ low]
        sub_bitset[mask] = prev | (prev << low)
    all_subsets = (1 << m) - 1
    full = space.full_mask
    # A near B iff B meets reach[A], i.e. B is not a subset of the complement.
    rows = tuple(all_subsets ^ sub_bitset[full ^ reach[a]] for a in range(m))
    return ProximityRelation(space, rows, provenance)


def make_discrete_proximity(space: FiniteSpace) -> ProximityRelation:
    """Near iff the subsets intersect (the finest Cech proximity)."""
    point_rows = [1 << i for i in range(space.size)]
    return relation_from_point_pairs(space, point_rows, "discrete")


def make_coarse_proximity(space: FiniteSpace) -> ProximityRelation:
    """Near iff both subsets are nonempty (the coarsest Cech proximity)."""
    full = space.full_mask
    return relation_from_point_pairs(space, [full] * space.size, "coarse")


def validate_pseudometric(space: FiniteSpace, d: Sequence[Sequence[float]]) -> None:
    n = space.size
    if len(d) != n or any(len(row) != n for row in d):
        raise ValueError(f"distance matrix must be {n}x{n}")
    for i in range(n):
        if d[i][i] != 0:
            raise ValueError(f"diagonal not zero: d[{i}][{i}]={d[i][i]}")
        for j in range(n):
            if d[i][j] < 0:
                raise ValueError(f"negative entry: d[{i}][{j}]={d[i][j]}")
            if d[i][j] != d[j][i]:
                raise ValueError(
                    f"not symmetric: d[{i}][{j}]={d[i][j]} != d[{j}][{i}]={d[j][i]}"
                )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if d[i][j] > d[i][k] + d[k][j]:
                    raise ValueError(
                        f"triangle inequality violated: d[{i}][{j}] > d[{i}][{k}] + d[{k}][{j}]"
                    )


def make_metric_proximity(
    space: FiniteSpace, d: Sequence[Sequence[float]]
) -> ProximityRelation:
    """Near iff the minimum pairwise distance is zero (pseudometric gap)."""
    validate_pseudometric(space, d)
    n = space.size
    point_rows = [0] * n
    for i in range(n):
        for j in range(n):
            if d[i][j] == 0:
                point_rows[i] |= 1 << j
    return relation_from_point_pairs(space, point_rows, "metric")


def relation_from_near_pairs(
    space: FiniteSpace, pairs: Sequence[tuple[int, int]], provenance: str = "explicit"
) -> tuple[ProximityRelation, bool]:
    """Build a table from listed near pairs, closing it symmetrically.

    Returns the relation and a flag saying whether the input was asymmetric
    (closure added entries).
    """
    m = space.n_subsets
    rows = [0] * m
    for a, b in pairs:
        space.check_mask(a)
        space.check_mask(b)
        rows[a] |= 1 << b
    symmetric = all(
        (rows[a] >> b) & 1 == (rows[b] >> a) & 1 for a in range(m) for b in bits(rows[a])
    )
    if not symmetric:
        for a in range(m):
            for b in bits(rows[a]):
                rows[b] |= 1 << a
    return ProximityRelation(space, tuple(rows), provenance), not symmetric


def subspace_proximity(rel: ProximityRelation, v: int) -> ProximityRelation:
    """Restriction of the relation to the subsets of a nonempty carrier subset."""
    rel.space.check_mask(v)
    if v == 0:
        raise ValueError("subspace carrier must be nonempty")
    members = list(bits(v))
    sub = FiniteSpace(tuple(rel.space.labels[i] for i in members))
    m = sub.n_subsets
    # expand a mask over the subspace into a mask over the parent carrier
    expand = [0] * m
    for mask in range(1, m):
        low = mask & -mask
        expand[mask] = expand[mask ^ low] | (1 << members[low.bit_length() - 1])
    rows = []
    for a in range(m):
        row = 0
        parent_row = rel.rows[expand[a]]
        for b in range(m):
            if (parent_row >> expand[b]) & 1:
                row |= 1 << b
        rows.append(row)
    return ProximityRelation(sub, tuple(rows), "subspace")


def validate_partition(space: FiniteSpace, blocks: Sequence[int]) -> None:
    seen = 0
    for k, block in enumerate(blocks):
        space.check_mask(block)
        if block == 0:
            raise ValueError(f"partition block {k} is empty")
        if block & seen:
            raise ValueError(f"partition block {k} overlaps an earlier block")
        seen |= block
    if seen != space.full_mask:
        missing = space.format_mask(space.full_mask ^ seen)
        raise ValueError(f"partition does not cover the carrier; missing {missing}")


def quotient_proximity(
    rel: ProximityRelation, blocks: Sequence[int]
) -> ProximityRelation:
    """Relation on the blocks: block sets are near iff their preimages are."""
    validate_partition(rel.space, blocks)
    labels = tuple("|".join(rel.space.label_set(block)) for block in blocks)
    quot = FiniteSpace(labels)
    m = quot.n_subsets
    pre = [0] * m
    for mask in range(1, m):
        low = mask & -mask
        pre[mask] = pre[mask ^ low] | blocks[low.bit_length() - 1]
    rows = []
    for a in range(m):
        row = 0
        parent_row = rel.rows[pre[a]]
        for b in range(m):
            if (parent_row >> pre[b]) & 1:
                row |= 1 << b
        rows.append(row)
    return ProximityRelation(quot, tuple(rows), "quotient")


@dataclass(frozen=True)
class RectangleRelation:
    """Product proximity, queryable on rectangle subsets only.

    A rectangle is a product-carrier mask of the form B1 x B2.  Nearness of
    two rectangles is the coordinatewise conjunction of the factor relations.
    Queries on non-rectangle masks are rejected: the product relation is not
    defined off rectangles and no extension is attempted.
    """

    rel1: ProximityRelation
    rel2: ProximityRelation
    space: FiniteSpace = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "space", product_space(self.rel1.space, self.rel2.space)
        )

    def factor_near(self, a1: int, a2: int, b1: int, b2: int) -> bool:
        """Nearness of rectangles a1 x a2 and b1 x b2 given by factor masks."""
        return self.rel1.near(a1, b1) and self.rel2.near(a2, b2)

    def near(self, mask_a: int, mask_b: int) -> bool:
        a1, a2 = split_rectangle(self.rel1.space, self.rel2.space, mask_a)
        b1, b2 = split_rectangle(self.rel1.space, self.rel2.space, mask_b)
        return self.factor_near(a1, a2, b1, b2)

    def rectangle(self, mask1: int, mask2: int) -> int:
        return rectangle_mask(self.rel1.space, self.rel2.space, mask1, mask2)


def product_proximity(
    rel1: ProximityRelation, rel2: ProximityRelation
) -> RectangleRelation:
    """Cartesian product proximity over the product carrier (rectangles only)."""
    return RectangleRelation(rel1, rel2)

"""Axiom checkers for proximity relations.

Every checker scans its quantifier exhaustively over the subset table and
returns an :class:`AxiomReport`.  Failure is a verdict with a witness, never
an exception.  Witnesses are the lexicographically smallest violating tuple
of subset masks, scanning the first argument outermost, so reports are
deterministic and reproducible.

The axiom vocabulary:

* L1 symmetry, L2 nonemptiness, L3 intersection implies near, L4 the union
  axiom (an iff), L5 the Lodato chaining axiom.
* EF: every far pair is separated by some subset K.
* K1..K4: the Kuratowski closure axioms for B -> { y : {y} near B }.

Full scans over triples cost 8^n, so checks are capped at carriers of size
``DEFAULT_SCAN_CAP`` unless the caller raises ``max_size`` explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .relations import ProximityRelation
from .spaces import FiniteSpace, bits

DEFAULT_SCAN_CAP = 5


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts with minimal counterexample witnesses.

    ``witnesses`` holds a mask tuple for every failed axiom and nothing for
    passed ones.  ``ef_examples`` (present only when an EF-style axiom was
    checked and passed) maps each far pair to the smallest separating K; it
    is informational and is not a failure witness.  Treat instances as
    read-only.
    """

    verdicts: Mapping[str, bool]
    witnesses: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    ef_examples: Mapping[tuple[int, int], int] | None = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def failed(self) -> tuple[str, ...]:
        return tuple(k for k, v in self.verdicts.items() if not v)


def require_scan_size(space: FiniteSpace, max_size: int, what: str) -> None:
    if space.size > max_size:
        raise ValueError(
            f"exhaustive {what} scan on a {space.size}-element carrier exceeds the"
            f" cap {max_size}; pass max_size={space.size} to run it anyway"
        )


def _check_l1_l4(rel: ProximityRelation) -> tuple[dict, dict]:
    m = rel.space.n_subsets
    rows = rel.rows
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}

    # L1: symmetry
    verdicts["L1"] = True
    for a in range(m):
        for b in bits(rows[a]):
            if not (rows[b] >> a) & 1:
                verdicts["L1"] = False
                witnesses["L1"] = (a, b)
                break
        if not verdicts["L1"]:
            break

    # L2: near subsets are nonempty
    verdicts["L2"] = True
    for a in range(m):
        for b in bits(rows[a]):
            if a == 0 or b == 0:
                verdicts["L2"] = False
                witnesses["L2"] = (a, b)
                break
        if not verdicts["L2"]:
            break

    # L3: intersecting subsets are near
    verdicts["L3"] = True
    for a in range(m):
        for b in range(m):
            if a & b and not (rows[a] >> b) & 1:
                verdicts["L3"] = False
                witnesses["L3"] = (a, b)
                break
        if not verdicts["L3"]:
            break

    # L4: near a union iff near a part (both directions)
    verdicts["L4"] = True
    for a in range(m):
        row = rows[a]
        for b in range(m):
            rb = (row >> b) & 1
            for c in range(m):
                if ((row >> (b | c)) & 1) != (rb | (row >> c) & 1):
                    verdicts["L4"] = False
                    witnesses["L4"] = (a, b, c)
                    break
            if not verdicts["L4"]:
                break
        if not verdicts["L4"]:
            break

    return verdicts, witnesses


def check_cech(rel: ProximityRelation, *, max_size: int = DEFAULT_SCAN_CAP) -> AxiomReport:
    """L1-L4 over all pairs/triples of subsets."""
    require_scan_size(rel.space, max_size, "L1-L4")
    verdicts, witnesses = _check_l1_l4(rel)
    return AxiomReport(verdicts, witnesses)


def _singleton_row_meet(rel: ProximityRelation) -> list[int]:
    """For each subset B, the set of C near every singleton of B (as a bitset)."""
    m = rel.space.n_subsets
    all_subsets = (1 << m) - 1
    meet = [0] * m
    meet[0] = all_subsets
    for mask in range(1, m):
        low = mask & -mask
        meet[mask] = meet[mask ^ low] & rel.rows[low]
    return meet


def check_lodato(rel: ProximityRelation, *, max_size: int = DEFAULT_SCAN_CAP) -> AxiomReport:
    """L1-L4 plus the chaining axiom L5."""
    require_scan_size(rel.space, max_size, "L1-L5")
    verdicts, witnesses = _check_l1_l4(rel)
    m = rel.space.n_subsets
    rows = rel.rows
    meet = _singleton_row_meet(rel)
    verdicts["L5"] = True
    for a in range(m):
        row = rows[a]
        for b in bits(row):
            bad = meet[b] & ~row
            if bad:
                c = (bad & -bad).bit_length() - 1
                verdicts["L5"] = False
                witnesses["L5"] = (a, b, c)
                break
        if not verdicts["L5"]:
            break
    return AxiomReport(verdicts, witnesses)


def check_efremovic(
    rel: ProximityRelation, *, max_size: int = DEFAULT_SCAN_CAP
) -> AxiomReport:
    """L1-L4 plus EF: each far pair admits a separating subset K.

    When EF passes, the smallest K found for each far pair is recorded in
    ``ef_examples``.
    """
    require_scan_size(rel.space, max_size, "L1-L4+EF")
    verdicts, witnesses = _check_l1_l4(rel)
    m = rel.space.n_subsets
    rows = rel.rows
    full = rel.space.full_mask
    verdicts["EF"] = True
    examples: dict[tuple[int, int], int] = {}
    for a in range(m):
        row = rows[a]
        for b in range(m):
            if (row >> b) & 1:
                continue
            for k in range(m):
                if not (row >> k) & 1 and not (rows[full ^ k] >> b) & 1:
                    examples[(a, b)] = k
                    break
            else:
                verdicts["EF"] = False
                witnesses["EF"] = (a, b)
                break
        if not verdicts["EF"]:
            break
    return AxiomReport(verdicts, witnesses, examples if verdicts["EF"] else None)


def closure(rel: ProximityRelation, b: int) -> int:
    """Points whose singleton is near B (the closure of B under the relation)."""
    rel.space.check_mask(b)
    out = 0
    for i in range(rel.space.size):
        if (rel.rows[1 << i] >> b) & 1:
            out |= 1 << i
    return out


def closure_table(rel: ProximityRelation) -> tuple[int, ...]:
    return tuple(closure(rel, b) for b in range(rel.space.n_subsets))


def check_kuratowski(
    rel: ProximityRelation, *, max_size: int = DEFAULT_SCAN_CAP
) -> AxiomReport:
    """K1 cl(empty)=empty, K2 B<=clB, K3 cl(A|B)=clA|clB, K4 idempotence."""
    require_scan_size(rel.space, max_size, "Kuratowski")
    cl = closure_table(rel)
    m = rel.space.n_subsets
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}

    verdicts["K1"] = cl[0] == 0
    if not verdicts["K1"]:
        witnesses["K1"] = (0,)

    verdicts["K2"] = True
    for b in range(m):
        if b & ~cl[b]:
            verdicts["K2"] = False
            witnesses["K2"] = (b,)
            break

    verdicts["K3"] = True
    for a in range(m):
        for b in range(m):
            if cl[a | b] != cl[a] | cl[b]:
                verdicts["K3"] = False
                witnesses["K3"] = (a, b)
                break
        if not verdicts["K3"]:
            break

    verdicts["K4"] = True
    for b in range(m):
        if cl[cl[b]] != cl[b]:
            verdicts["K4"] = False
            witnesses["K4"] = (b,)
            break

    return AxiomReport(verdicts, witnesses)


@dataclass(frozen=True)
class TopologySnapshot:
    """Closed/open families of the closure operator induced by a relation.

    ``kuratowski_ok`` says the closure operator is a genuine Kuratowski
    operator; ``is_topology`` is the direct family check (empty set and the
    carrier present, closed under pairwise union and intersection).  The
    snapshot is returned even when the families fail to form a topology.
    """

    space: FiniteSpace
    closed_sets: tuple[int, ...]
    open_sets: tuple[int, ...]
    kuratowski_ok: bool
    is_topology: bool


def induced_topology(
    rel: ProximityRelation, *, max_size: int = DEFAULT_SCAN_CAP
) -> TopologySnapshot:
    """Fixed points of the closure operator, with their complements as opens."""
    require_scan_size(rel.space, max_size, "induced-topology")
    cl = closure_table(rel)
    full = rel.space.full_mask
    closed = tuple(b for b in range(rel.space.n_subsets) if cl[b] == b)
    opens = tuple(sorted(full ^ c for c in closed))
    closed_set = set(closed)
    is_topology = (
        0 in closed_set
        and full in closed_set
        and all(a | b in closed_set and a & b in closed_set for a in closed for b in closed)
    )
    report = check_kuratowski(rel, max_size=max_size)
    return TopologySnapshot(rel.space, closed, opens, report.ok, is_topology)

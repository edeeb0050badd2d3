"""Descriptive proximity: probe functions, description sets, and the
relation "near iff the description sets intersect".

Feature values are discrete ints so description equality is exact; fixtures
with fractional probe values encode them by fixed-point scaling.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .axioms import (
    DEFAULT_SCAN_CAP,
    AxiomReport,
    _check_l1_l4,
    _singleton_row_meet,
    check_efremovic,
    require_scan_size,
)
from .maps import SpaceMap, check_pcont
from .relations import ProximityRelation, relation_from_point_pairs
from .spaces import FiniteSpace, bits, product_space

DescriptionSet = frozenset  # frozenset of feature-value tuples


@dataclass(frozen=True)
class ProbeTable:
    """Per-element feature vectors; element i is described by values[i]."""

    space: FiniteSpace
    arity: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.space.size:
            raise ValueError(
                f"probe table needs {self.space.size} rows, got {len(self.values)}"
            )
        for i, vec in enumerate(self.values):
            if len(vec) != self.arity:
                raise ValueError(
                    f"element {i} has {len(vec)} feature values, expected {self.arity}"
                )

    def description(self, i: int) -> tuple[int, ...]:
        return self.values[i]


def probe_table(space: FiniteSpace, values: Sequence[Sequence[int]]) -> ProbeTable:
    rows = tuple(tuple(v) for v in values)
    arity = len(rows[0]) if rows else 0
    return ProbeTable(space, arity, rows)


def describe(probes: ProbeTable, b: int) -> DescriptionSet:
    """The set of description vectors of the members of B."""
    probes.space.check_mask(b)
    return frozenset(probes.values[i] for i in bits(b))


def _same_description_rows(probes: ProbeTable) -> list[int]:
    n = probes.space.size
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if probes.values[i] == probes.values[j]:
                rows[i] |= 1 << j
    return rows


def descriptive_proximity(probes: ProbeTable) -> ProximityRelation:
    """Near iff some members share a description vector."""
    return relation_from_point_pairs(
        probes.space, _same_description_rows(probes), "descriptive"
    )


def descriptive_intersection(probes: ProbeTable, a: int, b: int) -> int:
    """Members of A or B whose description is shared between A and B."""
    shared = describe(probes, a) & describe(probes, b)
    out = 0
    for i in bits(a | b):
        if probes.values[i] in shared:
            out |= 1 << i
    return out


def check_descriptive_lodato(
    probes: ProbeTable, *, max_size: int = DEFAULT_SCAN_CAP
) -> AxiomReport:
    """DL1-DL5 on the induced relation; DL3 runs on the descriptive intersection."""
    require_scan_size(probes.space, max_size, "DL1-DL5")
    rel = descriptive_proximity(probes)
    m = rel.space.n_subsets
    rows = rel.rows
    base, base_witness = _check_l1_l4(rel)
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}

    verdicts["DL1"] = base["L1"]
    if "L1" in base_witness:
        witnesses["DL1"] = base_witness["L1"]

    verdicts["DL2"] = True
    for b in range(m):
        if rel.near(b, 0):
            verdicts["DL2"] = False
            witnesses["DL2"] = (b, 0)
            break
        if rel.near(0, b):
            verdicts["DL2"] = False
            witnesses["DL2"] = (0, b)
            break

    verdicts["DL3"] = True
    for a in range(m):
        for b in range(m):
            if descriptive_intersection(probes, a, b) and not rel.near(a, b):
                verdicts["DL3"] = False
                witnesses["DL3"] = (a, b)
                break
        if not verdicts["DL3"]:
            break

    verdicts["DL4"] = base["L4"]
    if "L4" in base_witness:
        witnesses["DL4"] = base_witness["L4"]

    meet = _singleton_row_meet(rel)
    verdicts["DL5"] = True
    for a in range(m):
        row = rows[a]
        for b in bits(row):
            bad = meet[b] & ~row
            if bad:
                c = (bad & -bad).bit_length() - 1
                verdicts["DL5"] = False
                witnesses["DL5"] = (a, b, c)
                break
        if not verdicts["DL5"]:
            break

    return AxiomReport(verdicts, witnesses)


def check_descriptive_ef(
    probes: ProbeTable, *, max_size: int = DEFAULT_SCAN_CAP
) -> AxiomReport:
    """DL1-DL4 plus DEF on the induced relation."""
    require_scan_size(probes.space, max_size, "DL1-DL4+DEF")
    rel = descriptive_proximity(probes)
    ef = check_efremovic(rel, max_size=max_size)
    rename = {"L1": "DL1", "L2": "DL2", "L3": "DL3", "L4": "DL4", "EF": "DEF"}
    verdicts = {rename[k]: v for k, v in ef.verdicts.items()}
    witnesses = {rename[k]: w for k, w in ef.witnesses.items()}
    return AxiomReport(verdicts, witnesses, ef.ef_examples)


def check_dpcont(
    f: SpaceMap,
    probes1: ProbeTable,
    probes2: ProbeTable,
    *,
    max_size: int = DEFAULT_SCAN_CAP,
) -> AxiomReport:
    """Descriptive proximal continuity of f between the induced relations."""
    if f.domain != probes1.space or f.codomain != probes2.space:
        raise ValueError("map endpoints do not match the probe-table carriers")
    rel1 = descriptive_proximity(probes1)
    rel2 = descriptive_proximity(probes2)
    return check_pcont(f, rel1, rel2, max_size=max_size, key="dpcont")


@dataclass(frozen=True)
class MappingSpaceVerdict:
    """Outcome of the map-set nearness test, with a witness when far."""

    near: bool
    witness: tuple[int, int, str, str] | None = None


def _map_identity(which: str, index: int, f: SpaceMap) -> str:
    return f.name if f.name else f"{which}[{index}]"


def mapping_space_relation(
    maps1: Sequence[SpaceMap],
    maps2: Sequence[SpaceMap],
    probes1: ProbeTable,
    probes2: ProbeTable,
    *,
    max_size: int = DEFAULT_SCAN_CAP,
) -> MappingSpaceVerdict:
    """Near iff every near pair stays near under every pair of maps.

    Both map sets must consist of descriptively continuous maps from the
    first carrier to the second; a non-continuous member is rejected by name.
    """
    rel1 = descriptive_proximity(probes1)
    rel2 = descriptive_proximity(probes2)
    for which, maps in (("maps1", maps1), ("maps2", maps2)):
        for index, f in enumerate(maps):
            report = check_dpcont(f, probes1, probes2, max_size=max_size)
            if not report.ok:
                raise ValueError(
                    f"map {_map_identity(which, index, f)} is not descriptively"
                    " proximally continuous"
                )
    for a, row in enumerate(rel1.rows):
        for b in bits(row):
            for i, f in enumerate(maps1):
                fa = f.image_mask(a)
                for j, g in enumerate(maps2):
                    if not rel2.near(fa, g.image_mask(b)):
                        return MappingSpaceVerdict(
                            False,
                            (a, b, _map_identity("maps1", i, f), _map_identity("maps2", j, g)),
                        )
    return MappingSpaceVerdict(True)


def product_probe_table(p1: ProbeTable, p2: ProbeTable) -> ProbeTable:
    """Probes on the product carrier: concatenated coordinate descriptions.

    On rectangle subsets the induced relation agrees with the coordinatewise
    conjunction of the factor relations.
    """
    space = product_space(p1.space, p2.space)
    values = tuple(v1 + v2 for v1 in p1.values for v2 in p2.values)
    return ProbeTable(space, p1.arity + p2.arity, values)


@dataclass(frozen=True)
class PathDemo:
    """Result of comparing two label paths on a grid of probed boxes.

    ``concatenation`` is the spliced sequence when the first path ends where
    the second starts, else None.
    """

    near: bool
    concatenation: tuple[str, ...] | None


def _check_path(grid: ProbeTable, path: Sequence[str], which: str) -> tuple[str, ...]:
    if not path:
        raise ValueError(f"{which} must be a nonempty label sequence")
    for label in path:
        if label not in grid.space.labels:
            raise ValueError(f"{which} visits unknown box {label!r}")
    return tuple(path)


def paths_near(grid: ProbeTable, path1: Sequence[str], path2: Sequence[str]) -> bool:
    """Position-by-position equality of the paths' description sequences."""
    p1 = _check_path(grid, path1, "path1")
    p2 = _check_path(grid, path2, "path2")
    if len(p1) != len(p2):
        return False
    desc = {label: grid.values[i] for i, label in enumerate(grid.space.labels)}
    return all(desc[x] == desc[y] for x, y in zip(p1, p2))


def concat_paths(
    grid: ProbeTable, path1: Sequence[str], path2: Sequence[str]
) -> tuple[str, ...]:
    """Splice two paths at a shared endpoint; reject mismatched endpoints."""
    p1 = _check_path(grid, path1, "path1")
    p2 = _check_path(grid, path2, "path2")
    if p1[-1] != p2[0]:
        raise ValueError(
            f"cannot concatenate: path1 ends at {p1[-1]!r} but path2 starts at {p2[0]!r}"
        )
    return p1 + p2[1:]


def path_label_demo(
    grid: ProbeTable, path1: Sequence[str], path2: Sequence[str]
) -> PathDemo:
    near = paths_near(grid, path1, path2)
    p1 = tuple(path1)
    p2 = tuple(path2)
    concatenation = p1 + p2[1:] if p1[-1] == p2[0] else None
    return PathDemo(near, concatenation)

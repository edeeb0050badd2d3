"""Finite groups as Cayley tables, subset algebra, and the proximal-group
verifier: a group with a proximity is a proximal group when subset
multiplication (tested on rectangle pairs) and subset inversion preserve
nearness.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .axioms import AxiomReport, check_cech, check_efremovic, check_lodato
from .maps import SpaceMap, check_pcont, check_proximal_isomorphism
from .relations import (
    ProximityRelation,
    quotient_proximity,
    subspace_proximity,
)
from .spaces import FiniteSpace, bits, default_space, product_space

GROUP_SCAN_CAP = 6

AXIOM_CHECKS = {
    "cech": check_cech,
    "lodato": check_lodato,
    "efremovic": check_efremovic,
}


@dataclass(frozen=True)
class FiniteGroup:
    """Group on a finite carrier; all group laws are verified at construction."""

    space: FiniteSpace
    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.space.size

    def op(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    @staticmethod
    def from_table(
        space: FiniteSpace, cayley: Sequence[Sequence[int]]
    ) -> "FiniteGroup":
        n = space.size
        if len(cayley) != n:
            raise ValueError(f"cayley table must have {n} rows, got {len(cayley)}")
        for i, row in enumerate(cayley):
            if len(row) != n:
                raise ValueError(
                    f"cayley row {i} has {len(row)} entries, expected {n}"
                )
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(
                        f"cayley entry at row {i}, position {j} out of range: {v}"
                    )
        table = tuple(tuple(row) for row in cayley)
        for i in range(n):
            if len(set(table[i])) != n:
                raise ValueError(f"cayley row {i} is not a permutation")
            if len({table[k][i] for k in range(n)}) != n:
                raise ValueError(f"cayley column {i} is not a permutation")
        identity = None
        for e in range(n):
            if all(table[e][x] == x == table[x][e] for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        inverse = [None] * n
        for x in range(n):
            for y in range(n):
                if table[x][y] == identity == table[y][x]:
                    inverse[x] = y
                    break
            if inverse[x] is None:
                raise ValueError(f"element {x} has no inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise ValueError(
                            f"associativity fails at ({i},{j},{k})"
                        )
        return FiniteGroup(space, table, identity, tuple(inverse))

    def with_labels(self, labels: Sequence[str]) -> "FiniteGroup":
        return FiniteGroup(
            FiniteSpace(tuple(labels)), self.cayley, self.identity, self.inverse
        )


def cyclic_group(n: int) -> FiniteGroup:
    space = default_space(n)
    cayley = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup.from_table(space, cayley)


def direct_product_group(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    space = product_space(g1.space, g2.space)
    n2 = g2.order
    pairs = [(i, j) for i in range(g1.order) for j in range(g2.order)]
    cayley = [
        [g1.op(a1, b1) * n2 + g2.op(a2, b2) for (b1, b2) in pairs]
        for (a1, a2) in pairs
    ]
    return FiniteGroup.from_table(space, cayley)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; elements r^i and r^i s."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    space = default_space(2 * n)

    def mul(a: int, b: int) -> int:
        ra, sa = a % n, a // n
        rb, sb = b % n, b // n
        if sa == 0:
            return ((ra + rb) % n) + n * sb
        return ((ra - rb) % n) + n * (1 - sb)

    cayley = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    return FiniteGroup.from_table(space, cayley)


def quaternion_group() -> FiniteGroup:
    """Order-8 quaternion group, elements +-1, +-i, +-j, +-k."""
    units = ["1", "i", "j", "k"]
    mul_sign = {
        ("1", "1"): ("1", 1), ("1", "i"): ("i", 1), ("1", "j"): ("j", 1), ("1", "k"): ("k", 1),
        ("i", "1"): ("i", 1), ("i", "i"): ("1", -1), ("i", "j"): ("k", 1), ("i", "k"): ("j", -1),
        ("j", "1"): ("j", 1), ("j", "i"): ("k", -1), ("j", "j"): ("1", -1), ("j", "k"): ("i", 1),
        ("k", "1"): ("k", 1), ("k", "i"): ("j", 1), ("k", "j"): ("i", -1), ("k", "k"): ("1", -1),
    }
    elems = [(u, s) for s in (1, -1) for u in units]

    def mul(a, b):
        (ua, sa), (ub, sb) = a, b
        u, s = mul_sign[(ua, ub)]
        return (u, s * sa * sb)

    space = default_space(8)
    index = {e: i for i, e in enumerate(elems)}
    cayley = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup.from_table(space, cayley)


def all_groups_up_to(max_order: int) -> tuple[tuple[str, FiniteGroup], ...]:
    """Every group of order <= max_order up to isomorphism (max_order <= 8),
    with letter-labelled carriers, in a fixed deterministic order."""
    if max_order > 8:
        raise ValueError("group catalog covers orders up to 8")
    catalog: list[tuple[str, FiniteGroup]] = []
    relabel = lambda g: g.with_labels(default_space(g.order).labels)
    for n in range(1, max_order + 1):
        catalog.append((f"Z{n}", cyclic_group(n)))
        if n == 4:
            catalog.append(("V4", relabel(direct_product_group(cyclic_group(2), cyclic_group(2)))))
        if n == 6:
            catalog.append(("S3", dihedral_group(3)))
        if n == 8:
            catalog.append(("Z4xZ2", relabel(direct_product_group(cyclic_group(4), cyclic_group(2)))))
            catalog.append(
                (
                    "Z2xZ2xZ2",
                    relabel(
                        direct_product_group(
                            cyclic_group(2),
                            direct_product_group(cyclic_group(2), cyclic_group(2)),
                        )
                    ),
                )
            )
            catalog.append(("D4", dihedral_group(4)))
            catalog.append(("Q8", quaternion_group()))
    return tuple(catalog)


# ---------------------------------------------------------------------------
# subset algebra


def subset_product(g: FiniteGroup, a: int, b: int) -> int:
    """{ x*y : x in A, y in B }; empty if either side is empty."""
    out = 0
    for i in bits(a):
        row = g.cayley[i]
        for j in bits(b):
            out |= 1 << row[j]
    return out


def subset_inverse(g: FiniteGroup, a: int) -> int:
    out = 0
    for i in bits(a):
        out |= 1 << g.inverse[i]
    return out


def subset_product_table(g: FiniteGroup) -> list[list[int]]:
    """subset_product for every pair of masks, built by dynamic programming."""
    m = g.space.n_subsets
    row_products = [[0] * m for _ in range(g.order)]
    for i in range(g.order):
        row = row_products[i]
        cay = g.cayley[i]
        for mask in range(1, m):
            low = mask & -mask
            row[mask] = row[mask ^ low] | (1 << cay[low.bit_length() - 1])
    table = [[0] * m for _ in range(m)]
    for a in range(1, m):
        low = a & -a
        rest = table[a ^ low]
        rp = row_products[low.bit_length() - 1]
        ta = table[a]
        for b in range(m):
            ta[b] = rest[b] | rp[b]
    return table


def subgroup_violation(g: FiniteGroup, h: int) -> str | None:
    """None when H is a subgroup, else which closure fails."""
    g.space.check_mask(h)
    if h == 0:
        return "subgroup must be nonempty"
    for i in bits(h):
        if not (h >> g.inverse[i]) & 1:
            return f"not closed under inverse at element {g.space.labels[i]}"
        for j in bits(h):
            if not (h >> g.cayley[i][j]) & 1:
                return (
                    "not closed under product at elements"
                    f" {g.space.labels[i]}, {g.space.labels[j]}"
                )
    return None


def all_subgroups(g: FiniteGroup) -> tuple[int, ...]:
    return tuple(
        h for h in range(1, g.space.n_subsets) if subgroup_violation(g, h) is None
    )


def normality_violation(g: FiniteGroup, h: int) -> str | None:
    """None when H is normal, else the conjugating element label."""
    reason = subgroup_violation(g, h)
    if reason is not None:
        return reason
    for x in range(g.order):
        conj = 0
        for i in bits(h):
            conj |= 1 << g.cayley[g.cayley[x][i]][g.inverse[x]]
        if conj != h:
            return f"not normal: conjugation by {g.space.labels[x]} moves the subgroup"
    return None


def normal_subgroups(g: FiniteGroup) -> tuple[int, ...]:
    return tuple(
        h for h in range(1, g.space.n_subsets) if normality_violation(g, h) is None
    )


def coset_partition(g: FiniteGroup, n_mask: int) -> tuple[int, ...]:
    """Left cosets of a subgroup, ordered by their smallest member."""
    blocks = []
    seen = 0
    for x in range(g.order):
        if (seen >> x) & 1:
            continue
        coset = 0
        for i in bits(n_mask):
            coset |= 1 << g.cayley[x][i]
        blocks.append(coset)
        seen |= coset
    return tuple(blocks)


# ---------------------------------------------------------------------------
# proximal-group checks


@dataclass(frozen=True)
class Check:
    """A single scanned condition: verdict plus minimal witness on failure."""

    ok: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ProximalGroupReport:
    """Axiom report for the relation plus continuity of product and inverse.

    The mu1 witness is a factor-mask tuple (B1, B2, C1, C2): the rectangle
    pair (B1 x B2, C1 x C2) is near in the product while the subset products
    are far.  The mu2 witness is a near pair whose inverses are far.
    """

    is_proximity: AxiomReport
    mu1_pcont: Check
    mu2_pcont: Check

    @property
    def ok(self) -> bool:
        return self.is_proximity.ok and self.mu1_pcont.ok and self.mu2_pcont.ok


def _near_matrix(rel: ProximityRelation) -> np.ndarray:
    m = rel.space.n_subsets
    out = np.zeros((m, m), dtype=bool)
    for a, row in enumerate(rel.rows):
        for b in bits(row):
            out[a, b] = True
    return out


def _mu1_check(g: FiniteGroup, rel: ProximityRelation) -> Check:
    """Rectangle continuity of subset multiplication.

    Quantifies over all factor 4-tuples (B1, B2, C1, C2): nearness of the
    rectangles B1 x B2 and C1 x C2 must force subset products near.  The
    scan is vectorized per B1 slice to keep memory at m^3 booleans.
    """
    near = _near_matrix(rel)
    prod = np.array(subset_product_table(g), dtype=np.int64)
    m = near.shape[0]
    for b1 in range(m):
        # axes of the slice: (b2, c1, c2)
        hyp = near[b1][None, :, None] & near[:, None, :]
        concl = near[prod[b1][:, None, None], prod[None, :, :]]
        viol = hyp & ~concl
        if viol.any():
            b2, c1, c2 = np.unravel_index(int(np.argmax(viol)), viol.shape)
            return Check(False, (b1, int(b2), int(c1), int(c2)))
    return Check(True)


def inversion_map(g: FiniteGroup) -> SpaceMap:
    return SpaceMap(g.space, g.space, g.inverse, "inv")


def translation_map(g: FiniteGroup, x: int, side: str) -> SpaceMap:
    if side == "left":
        images = tuple(g.cayley[x][y] for y in range(g.order))
    elif side == "right":
        images = tuple(g.cayley[y][x] for y in range(g.order))
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return SpaceMap(g.space, g.space, images, f"{side[0].upper()}_{g.space.labels[x]}")


def _mu2_check(g: FiniteGroup, rel: ProximityRelation, max_size: int) -> Check:
    report = check_pcont(inversion_map(g), rel, rel, max_size=max_size)
    return Check(report.verdicts["pcont"], report.witnesses.get("pcont"))


def check_proximal_group(
    g: FiniteGroup,
    rel: ProximityRelation,
    *,
    axiom_class: str = "efremovic",
    max_size: int = GROUP_SCAN_CAP,
) -> ProximalGroupReport:
    """Verify (G, rel) as a proximal group.

    Runs the requested axiom class on the relation, rectangle continuity of
    subset multiplication, and continuity of subset inversion.
    """
    if g.space != rel.space:
        raise ValueError("group and relation carriers do not match")
    if g.order > max_size:
        raise ValueError(
            f"proximal-group scan on a {g.order}-element group exceeds the cap"
            f" {max_size}; pass max_size={g.order} to run it anyway"
        )
    axioms = AXIOM_CHECKS[axiom_class](rel, max_size=max(max_size, g.order))
    mu1 = _mu1_check(g, rel)
    mu2 = _mu2_check(g, rel, max(max_size, g.order))
    return ProximalGroupReport(axioms, mu1, mu2)


@dataclass(frozen=True)
class TranslationReport:
    """check_proximal_isomorphism outcome for every left/right translation."""

    entries: tuple[tuple[int, AxiomReport, AxiomReport], ...]

    @property
    def ok(self) -> bool:
        return all(left.ok and right.ok for _, left, right in self.entries)


def check_translations(
    g: FiniteGroup, rel: ProximityRelation, *, max_size: int = GROUP_SCAN_CAP
) -> TranslationReport:
    entries = []
    for x in range(g.order):
        left = check_proximal_isomorphism(
            translation_map(g, x, "left"), rel, rel, max_size=max(max_size, g.order)
        )
        right = check_proximal_isomorphism(
            translation_map(g, x, "right"), rel, rel, max_size=max(max_size, g.order)
        )
        entries.append((x, left, right))
    return TranslationReport(tuple(entries))


def invertible_subsets(g: FiniteGroup) -> tuple[int, ...]:
    """All B with B * B^-1 = B^-1 * B = {e}; exactly the singletons."""
    e = 1 << g.identity
    out = []
    for b in range(1, g.space.n_subsets):
        binv = subset_inverse(g, b)
        if subset_product(g, b, binv) == e and subset_product(g, binv, b) == e:
            out.append(b)
    return tuple(out)


def check_transitivity_property(
    rel: ProximityRelation, *, max_size: int = GROUP_SCAN_CAP
) -> AxiomReport:
    """Near is transitive: A near B and B near C force A near C."""
    from .axioms import require_scan_size

    require_scan_size(rel.space, max_size, "transitivity")
    rows = rel.rows
    m = rel.space.n_subsets
    for a in range(m):
        row_a = rows[a]
        for b in bits(row_a):
            bad = rows[b] & ~row_a
            if bad:
                c = (bad & -bad).bit_length() - 1
                return AxiomReport({"transitivity": False}, {"transitivity": (a, b, c)})
    return AxiomReport({"transitivity": True})


# ---------------------------------------------------------------------------
# homomorphisms

GroupMap = SpaceMap


def homomorphism_violation(
    eta: SpaceMap, g1: FiniteGroup, g2: FiniteGroup
) -> tuple[int, int] | None:
    """First pair (i, j) with eta(i*j) != eta(i)*eta(j), or None."""
    if eta.domain != g1.space or eta.codomain != g2.space:
        raise ValueError("map endpoints do not match the group carriers")
    for i in range(g1.order):
        for j in range(g1.order):
            if eta.images[g1.cayley[i][j]] != g2.cayley[eta.images[i]][eta.images[j]]:
                return (i, j)
    return None


def check_proximal_homomorphism(
    eta: SpaceMap,
    g1: FiniteGroup,
    rel1: ProximityRelation,
    g2: FiniteGroup,
    rel2: ProximityRelation,
    *,
    isomorphism: bool = False,
    max_size: int = GROUP_SCAN_CAP,
) -> AxiomReport:
    """Group homomorphism plus proximal continuity.

    With ``isomorphism=True`` additionally requires bijectivity and a
    proximally continuous inverse.
    """
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}
    hom_witness = homomorphism_violation(eta, g1, g2)
    verdicts["group_homomorphism"] = hom_witness is None
    if hom_witness is not None:
        witnesses["group_homomorphism"] = (1 << hom_witness[0], 1 << hom_witness[1])
    scan = max(max_size, g1.order, g2.order)
    if isomorphism:
        iso = check_proximal_isomorphism(eta, rel1, rel2, max_size=scan)
        verdicts.update(iso.verdicts)
        witnesses.update(iso.witnesses)
    else:
        pcont = check_pcont(eta, rel1, rel2, max_size=scan)
        verdicts["pcont"] = pcont.verdicts["pcont"]
        if "pcont" in pcont.witnesses:
            witnesses["pcont"] = pcont.witnesses["pcont"]
    return AxiomReport(verdicts, witnesses)


@dataclass(frozen=True)
class HomCriterionReport:
    """Nearness-to-identity criterion versus actual proximal continuity."""

    hypothesis: Check
    conclusion: Check

    @property
    def implication_ok(self) -> bool:
        return not self.hypothesis.ok or self.conclusion.ok


def hom_criterion_check(
    eta: SpaceMap,
    g1: FiniteGroup,
    rel1: ProximityRelation,
    g2: FiniteGroup,
    rel2: ProximityRelation,
    *,
    axiom_class: str = "efremovic",
    max_size: int = GROUP_SCAN_CAP,
) -> HomCriterionReport:
    """Test: if B near {e1} forces eta(B) near {e2}, then eta is pcont.

    Requires eta to be a group homomorphism between verified proximal groups.
    """
    hom_witness = homomorphism_violation(eta, g1, g2)
    if hom_witness is not None:
        raise ValueError(f"map is not a group homomorphism at {hom_witness}")
    for name, (g, rel) in (("domain", (g1, rel1)), ("codomain", (g2, rel2))):
        report = check_proximal_group(g, rel, axiom_class=axiom_class, max_size=max_size)
        if not report.ok:
            raise ValueError(f"{name} structure is not a verified proximal group")
    e1 = 1 << g1.identity
    e2 = 1 << g2.identity
    hypothesis = Check(True)
    for b in range(g1.space.n_subsets):
        if rel1.near(b, e1) and not rel2.near(eta.image_mask(b), e2):
            hypothesis = Check(False, (b, e1))
            break
    pcont = check_pcont(eta, rel1, rel2, max_size=max(max_size, g1.order))
    conclusion = Check(pcont.verdicts["pcont"], pcont.witnesses.get("pcont"))
    return HomCriterionReport(hypothesis, conclusion)


# ---------------------------------------------------------------------------
# derived structures


def subgroup_proximal_group(
    g: FiniteGroup,
    rel: ProximityRelation,
    h: int,
    *,
    axiom_class: str = "efremovic",
    max_size: int = GROUP_SCAN_CAP,
) -> ProximalGroupReport:
    """Run the proximal-group check on a subgroup with the subspace relation."""
    reason = subgroup_violation(g, h)
    if reason is not None:
        raise ValueError(reason)
    members = list(bits(h))
    sub_space = FiniteSpace(tuple(g.space.labels[i] for i in members))
    index = {m: k for k, m in enumerate(members)}
    cayley = [[index[g.cayley[i][j]] for j in members] for i in members]
    sub_group = FiniteGroup.from_table(sub_space, cayley)
    sub_rel = subspace_proximity(rel, h)
    return check_proximal_group(
        sub_group, sub_rel, axiom_class=axiom_class, max_size=max_size
    )


def quotient_group(g: FiniteGroup, n_mask: int) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Coset group for a normal subgroup, plus the coset partition used."""
    reason = normality_violation(g, n_mask)
    if reason is not None:
        raise ValueError(reason)
    blocks = coset_partition(g, n_mask)
    rep = [min(bits(block)) for block in blocks]
    block_of = {}
    for k, block in enumerate(blocks):
        for i in bits(block):
            block_of[i] = k
    labels = tuple("|".join(g.space.label_set(block)) for block in blocks)
    cayley = [
        [block_of[g.cayley[rep[i]][rep[j]]] for j in range(len(blocks))]
        for i in range(len(blocks))
    ]
    return FiniteGroup.from_table(FiniteSpace(labels), cayley), blocks


def quotient_proximal_group(
    g: FiniteGroup, rel: ProximityRelation, n_mask: int
) -> tuple[FiniteGroup, ProximityRelation]:
    """Coset group with the quotient proximity over the coset partition."""
    if g.space != rel.space:
        raise ValueError("group and relation carriers do not match")
    quot, blocks = quotient_group(g, n_mask)
    return quot, quotient_proximity(rel, blocks)


def product_proximal_group(
    g1: FiniteGroup,
    rel1: ProximityRelation,
    g2: FiniteGroup,
    rel2: ProximityRelation,
    *,
    axiom_class: str = "efremovic",
    max_size: int = GROUP_SCAN_CAP,
) -> ProximalGroupReport:
    """Direct product with the rectangle product proximity.

    Both factors must already verify as proximal groups.  The mu1/mu2 scans
    quantify over rectangles of rectangles: product-carrier subsets enter
    only as factor-mask pairs, matching the rectangle-only product relation.
    Witnesses are factor-mask tuples (A1, B1, A2, B2, ...).
    """
    for name, (g, rel) in (("first", (g1, rel1)), ("second", (g2, rel2))):
        report = check_proximal_group(g, rel, axiom_class=axiom_class, max_size=max_size)
        if not report.ok:
            raise ValueError(f"{name} factor is not a verified proximal group")
    if g1.order * g2.order > max(max_size, GROUP_SCAN_CAP):
        raise ValueError(
            f"product order {g1.order * g2.order} exceeds the scan cap"
        )

    near_pairs1 = list(rel1.near_pairs())
    near_pairs2 = list(rel2.near_pairs())

    # A violation of rectangle-of-rectangle continuity needs all four factor
    # pairs near, so it splits by which coordinate breaks: a far product pair
    # in one factor plus any near pair at all in the other.
    mu1 = Check(True)
    if near_pairs2:
        bad = _mu1_check(g1, rel1)
        if not bad.ok:
            a1, a2, a3, a4 = bad.witness
            b1, b3 = near_pairs2[0]
            mu1 = Check(False, (a1, b1, a2, b1, a3, b3, a4, b3))
    if mu1.ok and near_pairs1:
        bad = _mu1_check(g2, rel2)
        if not bad.ok:
            b1, b2, b3, b4 = bad.witness
            a1, a3 = near_pairs1[0]
            mu1 = Check(False, (a1, b1, a1, b2, a3, b3, a3, b4))

    # mu2 on rectangle pairs: near rectangles must have near inverses.
    inv1 = [subset_inverse(g1, a) for a in range(rel1.space.n_subsets)]
    inv2 = [subset_inverse(g2, a) for a in range(rel2.space.n_subsets)]
    mu2 = Check(True)
    for a1, c1 in near_pairs1:
        inv_near1 = rel1.near(inv1[a1], inv1[c1])
        for a2, c2 in near_pairs2:
            if not (inv_near1 and rel2.near(inv2[a2], inv2[c2])):
                mu2 = Check(False, (a1, a2, c1, c2))
                break
        if not mu2.ok:
            break

    axioms1 = AXIOM_CHECKS[axiom_class](rel1, max_size=max(max_size, g1.order))
    axioms2 = AXIOM_CHECKS[axiom_class](rel2, max_size=max(max_size, g2.order))
    merged = AxiomReport(
        {k: axioms1.verdicts[k] and axioms2.verdicts[k] for k in axioms1.verdicts}
    )
    return ProximalGroupReport(merged, mu1, mu2)

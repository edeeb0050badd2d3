"""Harnesses that test structural implications on concrete finite instances.

Each harness evaluates the hypotheses and the conclusion of one implication
separately and reports both: a failed hypothesis means the harness abstains
(the implication holds vacuously), and a satisfied hypothesis with a failed
conclusion is a counterexample.  Harnesses never assert; callers decide what
a verdict means.
"""
from __future__ import annotations

from dataclasses import dataclass

from .axioms import AxiomReport, check_lodato, closure
from .descriptive import ProbeTable, descriptive_proximity, product_probe_table
from .groups import (
    GROUP_SCAN_CAP,
    Check,
    FiniteGroup,
    ProximalGroupReport,
    check_proximal_group,
    check_proximal_homomorphism,
    check_transitivity_property,
    check_translations,
    coset_partition,
    direct_product_group,
    homomorphism_violation,
    invertible_subsets,
    normality_violation,
    quotient_proximal_group,
    subgroup_violation,
    subset_product,
    _mu1_check,
    _mu2_check,
)
from .maps import SpaceMap, check_pcont, check_proximal_isomorphism
from .relations import ProximityRelation, subspace_proximity
from .spaces import FiniteSpace, bits


@dataclass(frozen=True)
class ImplicationReport:
    """Hypothesis checks by name, one conclusion check, and the implication."""

    hypotheses: dict[str, Check]
    conclusion: Check
    invertible_family: tuple[int, ...]

    @property
    def hypotheses_ok(self) -> bool:
        return all(c.ok for c in self.hypotheses.values())

    @property
    def abstained(self) -> bool:
        return not self.hypotheses_ok

    @property
    def implication_ok(self) -> bool:
        return self.abstained or self.conclusion.ok


def inversion_continuity_harness(
    g: FiniteGroup, rel: ProximityRelation, *, max_size: int = GROUP_SCAN_CAP
) -> ImplicationReport:
    """Continuous multiplication forces continuous inversion.

    The invertibility hypothesis ("B * B^-1 = {e} for the family") holds
    only for singletons in any group; the family is reported so the scope of
    the hypothesis stays visible.
    """
    mu1 = _mu1_check(g, rel)
    mu2 = _mu2_check(g, rel, max(max_size, g.order))
    return ImplicationReport({"mu1_pcont": mu1}, mu2, invertible_subsets(g))


MULTIPLICATION_MODES = ("ef-transitivity", "lodato-pointwise")


def _pointwise_nearness(rel: ProximityRelation) -> Check:
    """Near pairs decompose pointwise: B1 near B2 forces {x} near B2 for x in B1."""
    for a, b in rel.near_pairs():
        for x in bits(a):
            if not rel.near(1 << x, b):
                return Check(False, (a, b, 1 << x))
    return Check(True)


def multiplication_continuity_harness(
    g: FiniteGroup,
    rel: ProximityRelation,
    mode: str = "ef-transitivity",
    *,
    max_size: int = GROUP_SCAN_CAP,
) -> ImplicationReport:
    """Continuous translations plus a chaining condition force a proximal group.

    ``ef-transitivity`` mode uses transitivity of nearness as the chaining
    condition; ``lodato-pointwise`` requires the relation to satisfy the
    Lodato axioms and near pairs to decompose pointwise.
    """
    if mode not in MULTIPLICATION_MODES:
        raise ValueError(f"mode must be one of {MULTIPLICATION_MODES}, got {mode!r}")
    scan = max(max_size, g.order)
    translations = check_translations(g, rel, max_size=scan)
    hypotheses: dict[str, Check] = {"translations_pcont": Check(translations.ok)}
    if mode == "ef-transitivity":
        trans = check_transitivity_property(rel, max_size=scan)
        hypotheses["transitivity"] = Check(
            trans.verdicts["transitivity"], trans.witnesses.get("transitivity")
        )
    else:
        lodato = check_lodato(rel, max_size=scan)
        hypotheses["lodato"] = Check(
            lodato.ok, next(iter(lodato.witnesses.values()), None)
        )
        hypotheses["pointwise_nearness"] = _pointwise_nearness(rel)
    mu1 = _mu1_check(g, rel)
    mu2 = _mu2_check(g, rel, scan)
    conclusion = Check(mu1.ok and mu2.ok, mu1.witness or mu2.witness)
    return ImplicationReport(hypotheses, conclusion, invertible_subsets(g))


# ---------------------------------------------------------------------------
# isomorphism theorems


@dataclass(frozen=True)
class IsoTheoremReport:
    """Outcome of rebuilding one isomorphism theorem on a finite instance.

    ``group_isomorphism`` is the purely algebraic verdict for the canonical
    map; ``proximal`` carries bijective/pcont/inverse_pcont verdicts and
    witnesses for it as a map of proximity spaces.
    """

    surjective: bool
    group_isomorphism: bool
    proximal: AxiomReport
    missing_image: int | None = None

    @property
    def ok(self) -> bool:
        return self.surjective and self.group_isomorphism and self.proximal.ok


def first_iso_harness(
    eta: SpaceMap,
    g1: FiniteGroup,
    rel1: ProximityRelation,
    g2: FiniteGroup,
    rel2: ProximityRelation,
    *,
    max_size: int = GROUP_SCAN_CAP,
) -> IsoTheoremReport:
    """Quotient by the kernel and compare with the image structure.

    Requires a proximally continuous group homomorphism; surjectivity is a
    reported verdict.  The harness is built to exhibit failures of the
    induced map, not to assert success.
    """
    scan = max(max_size, g1.order, g2.order)
    hom_witness = homomorphism_violation(eta, g1, g2)
    if hom_witness is not None:
        raise ValueError(f"map is not a group homomorphism at {hom_witness}")
    if not check_pcont(eta, rel1, rel2, max_size=scan).ok:
        raise ValueError("map is not proximally continuous")
    surjective = set(eta.images) == set(range(g2.order))
    if not surjective:
        missing = next(i for i in range(g2.order) if i not in set(eta.images))
        return IsoTheoremReport(
            False, False, AxiomReport({"bijective": False}), 1 << missing
        )
    kernel = 0
    for i in range(g1.order):
        if eta.images[i] == g2.identity:
            kernel |= 1 << i
    quot, quot_rel = quotient_proximal_group(g1, rel1, kernel)
    # induced map: coset block -> image of any representative
    blocks = coset_partition(g1, kernel)
    induced = SpaceMap(
        quot.space,
        g2.space,
        tuple(eta.images[min(bits(block))] for block in blocks),
        "induced",
    )
    group_iso = (
        homomorphism_violation(induced, quot, g2) is None and induced.is_bijective()
    )
    proximal = check_proximal_isomorphism(induced, quot_rel, rel2, max_size=scan)
    return IsoTheoremReport(True, group_iso, proximal)


def second_iso_harness(
    g: FiniteGroup,
    rel: ProximityRelation,
    h: int,
    n: int,
    *,
    max_size: int = GROUP_SCAN_CAP,
) -> IsoTheoremReport:
    """Compare HN/N with H/(H intersect N) as proximal groups.

    H must be a subgroup and N a normal subgroup.  On finite carriers with
    the discrete or coarse proximity the canonical map always turns out to
    be a proximal isomorphism; the harness exists to make that checkable.
    """
    reason = subgroup_violation(g, h)
    if reason is not None:
        raise ValueError(f"H: {reason}")
    reason = normality_violation(g, n)
    if reason is not None:
        raise ValueError(f"N: {reason}")
    scan = max(max_size, g.order)

    hn = subset_product(g, h, n)
    # subgroup structures on HN and H with their subspace proximities
    def substructure(mask: int) -> tuple[FiniteGroup, ProximityRelation, list[int]]:
        members = list(bits(mask))
        space = FiniteSpace(tuple(g.space.labels[i] for i in members))
        index = {m: k for k, m in enumerate(members)}
        cayley = [[index[g.cayley[i][j]] for j in members] for i in members]
        return (
            FiniteGroup.from_table(space, cayley),
            subspace_proximity(rel, mask),
            members,
        )

    hn_group, hn_rel, hn_members = substructure(hn)
    h_group, h_rel, h_members = substructure(h)
    n_in_hn = 0
    for k, m in enumerate(hn_members):
        if (n >> m) & 1:
            n_in_hn |= 1 << k
    hint_in_h = 0
    for k, m in enumerate(h_members):
        if (h & n) >> m & 1:
            hint_in_h |= 1 << k
    left_group, left_rel = quotient_proximal_group(hn_group, hn_rel, n_in_hn)
    right_group, right_rel = quotient_proximal_group(h_group, h_rel, hint_in_h)

    # canonical map: coset x(H cap N) in H -> coset xN in HN
    left_blocks = coset_partition(hn_group, n_in_hn)
    right_blocks = coset_partition(h_group, hint_in_h)
    images = []
    for rblock in right_blocks:
        rep_h = h_members[min(bits(rblock))]
        rep_hn = hn_members.index(rep_h)
        target = next(
            k for k, lblock in enumerate(left_blocks)
            if (lblock >> rep_hn) & 1
        )
        images.append(target)
    canonical = SpaceMap(right_group.space, left_group.space, tuple(images), "canonical")
    group_iso = (
        homomorphism_violation(canonical, right_group, left_group) is None
        and canonical.is_bijective()
    )
    proximal = check_proximal_isomorphism(canonical, right_rel, left_rel, max_size=scan)
    return IsoTheoremReport(True, group_iso, proximal)


def third_iso_harness(
    g: FiniteGroup,
    rel: ProximityRelation,
    n: int,
    k: int,
    *,
    max_size: int = GROUP_SCAN_CAP,
) -> IsoTheoremReport:
    """Compare (G/N)/(K/N) with G/K as proximal groups, for N inside K."""
    reason = normality_violation(g, n)
    if reason is not None:
        raise ValueError(f"N: {reason}")
    reason = normality_violation(g, k)
    if reason is not None:
        raise ValueError(f"K: {reason}")
    if n & ~k:
        raise ValueError("N must be contained in K")
    scan = max(max_size, g.order)

    quot_n, rel_n = quotient_proximal_group(g, rel, n)
    n_blocks = coset_partition(g, n)
    # K/N: the blocks contained in K form a normal subgroup of G/N
    k_over_n = 0
    for idx, block in enumerate(n_blocks):
        if block & ~k == 0:
            k_over_n |= 1 << idx
    reason = normality_violation(quot_n, k_over_n)
    if reason is not None:
        raise ValueError(f"K/N: {reason}")
    left_group, left_rel = quotient_proximal_group(quot_n, rel_n, k_over_n)
    right_group, right_rel = quotient_proximal_group(g, rel, k)

    # match (G/N)/(K/N) blocks with G/K blocks by their underlying elements
    outer_blocks = coset_partition(quot_n, k_over_n)
    k_blocks = coset_partition(g, k)
    images = []
    for outer in outer_blocks:
        underlying = 0
        for idx in bits(outer):
            underlying |= n_blocks[idx]
        images.append(k_blocks.index(underlying))
    canonical = SpaceMap(left_group.space, right_group.space, tuple(images), "canonical")
    group_iso = (
        homomorphism_violation(canonical, left_group, right_group) is None
        and canonical.is_bijective()
    )
    proximal = check_proximal_isomorphism(canonical, left_rel, right_rel, max_size=scan)
    return IsoTheoremReport(True, group_iso, proximal)


# ---------------------------------------------------------------------------
# separation


@dataclass(frozen=True)
class HausdorffReport:
    """Separation readings of a verified proximal group.

    ``t1``: every singleton is closed in the induced topology.
    ``identity_closed``: the identity's singleton is its own closure.
    ``literal_identity_only``: nothing but {e} is near {e}; reported for
    completeness, this reading conflicts with the union axiom on carriers
    with two or more elements and is expected false there.
    """

    t1: bool
    identity_closed: bool
    literal_identity_only: bool

    @property
    def readings_agree(self) -> bool:
        return self.t1 == self.identity_closed


def hausdorff_check(
    g: FiniteGroup,
    rel: ProximityRelation,
    *,
    axiom_class: str = "efremovic",
    max_size: int = GROUP_SCAN_CAP,
) -> HausdorffReport:
    """T1 versus closed-identity readings on a verified proximal group."""
    report = check_proximal_group(g, rel, axiom_class=axiom_class, max_size=max_size)
    if not report.ok:
        raise ValueError("input is not a verified proximal group")
    t1 = all(closure(rel, 1 << x) == 1 << x for x in range(g.order))
    e = 1 << g.identity
    identity_closed = closure(rel, e) == e
    literal = all(
        b == e or not rel.near(e, b) for b in range(g.space.n_subsets)
    )
    return HausdorffReport(t1, identity_closed, literal)


# ---------------------------------------------------------------------------
# descriptive proximal groups


def check_descriptive_proximal_group(
    g: FiniteGroup, probes: ProbeTable, *, max_size: int = GROUP_SCAN_CAP
) -> ProximalGroupReport:
    """Proximal-group check on the relation induced by the probe table."""
    if g.space != probes.space:
        raise ValueError("group and probe-table carriers do not match")
    rel = descriptive_proximity(probes)
    return check_proximal_group(g, rel, max_size=max_size)


@dataclass(frozen=True)
class ProjectionDemoReport:
    """Projection from a product: homomorphism and isomorphism verdicts."""

    homomorphism: AxiomReport
    isomorphism: AxiomReport


def projection_hom_demo(
    g1: FiniteGroup,
    probes1: ProbeTable,
    g2: FiniteGroup,
    probes2: ProbeTable,
    *,
    max_size: int = GROUP_SCAN_CAP,
) -> ProjectionDemoReport:
    """First-coordinate projection from the product descriptive structure.

    Expected: a descriptive proximal homomorphism always, an isomorphism only
    when the second factor is trivial.
    """
    for name, (g, p) in (("first", (g1, probes1)), ("second", (g2, probes2))):
        if not check_descriptive_proximal_group(g, p, max_size=max_size).ok:
            raise ValueError(f"{name} factor is not a descriptive proximal group")
    product_group = direct_product_group(g1, g2)
    probes = product_probe_table(probes1, probes2)
    rel_product = descriptive_proximity(probes)
    rel1 = descriptive_proximity(probes1)
    projection = SpaceMap(
        product_group.space,
        g1.space,
        tuple(i // g2.order for i in range(product_group.order)),
        "projection",
    )
    scan = max(max_size, product_group.order)
    hom = check_proximal_homomorphism(
        projection, product_group, rel_product, g1, rel1, max_size=scan
    )
    iso = check_proximal_homomorphism(
        projection,
        product_group,
        rel_product,
        g1,
        rel1,
        isomorphism=True,
        max_size=scan,
    )
    return ProjectionDemoReport(hom, iso)

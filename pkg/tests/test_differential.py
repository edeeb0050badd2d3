"""Differential tests certifying the optimized scan paths against naive
re-implementations: the vectorized rectangle-multiplication check, the
inversion check, proximal-continuity witnesses, and the existential
extension of point relations to subsets.
"""
import random

from hypothesis import given, settings, strategies as st

from proxikit import (
    ProximityRelation,
    SpaceMap,
    all_groups_up_to,
    check_pcont,
    default_space,
    relation_from_point_pairs,
)
from proxikit.groups import _mu1_check, _mu2_check, subset_inverse, subset_product
from proxikit.spaces import bits


def naive_mu1(g, rel):
    """Quadruple loop over factor masks, no tables, no vectorization."""
    m = rel.space.n_subsets
    for b1 in range(m):
        for b2 in range(m):
            for c1 in range(m):
                for c2 in range(m):
                    if rel.near(b1, c1) and rel.near(b2, c2):
                        if not rel.near(
                            subset_product(g, b1, b2), subset_product(g, c1, c2)
                        ):
                            return (b1, b2, c1, c2)
    return None


def naive_mu2(g, rel):
    for a in range(rel.space.n_subsets):
        for b in range(rel.space.n_subsets):
            if rel.near(a, b) and not rel.near(
                subset_inverse(g, a), subset_inverse(g, b)
            ):
                return (a, b)
    return None


def random_relation(space, rng, symmetric=False):
    m = space.n_subsets
    rows = [rng.getrandbits(m) for _ in range(m)]
    if symmetric:
        for a in range(m):
            for b in range(m):
                if (rows[a] >> b) & 1:
                    rows[b] |= 1 << a
    return ProximityRelation(space, tuple(rows))


@given(st.integers(min_value=0))
@settings(max_examples=150, deadline=None)
def test_mu_checks_match_naive_quadruple_loop(seed):
    rng = random.Random(seed)
    groups = [g for _, g in all_groups_up_to(3)]
    g = rng.choice(groups)
    rel = random_relation(g.space, rng, symmetric=rng.random() < 0.5)
    fast1 = _mu1_check(g, rel)
    slow1 = naive_mu1(g, rel)
    assert fast1.ok == (slow1 is None)
    if not fast1.ok:
        assert fast1.witness == slow1  # both scan b1 outermost, so minimality agrees
    fast2 = _mu2_check(g, rel, max(6, g.order))
    slow2 = naive_mu2(g, rel)
    assert fast2.ok == (slow2 is None)
    if not fast2.ok:
        assert fast2.witness == slow2


def test_mu1_matches_naive_on_order_four_groups():
    rng = random.Random(41)
    for _, g in all_groups_up_to(4):
        if g.order != 4:
            continue
        for _ in range(10):
            rel = random_relation(g.space, rng, symmetric=True)
            fast = _mu1_check(g, rel)
            slow = naive_mu1(g, rel)
            assert fast.ok == (slow is None)
            if not fast.ok:
                assert fast.witness == slow


@given(st.integers(min_value=0))
@settings(max_examples=200, deadline=None)
def test_failing_pcont_witness_reevaluates(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    space = default_space(n)
    rel1 = random_relation(space, rng)
    rel2 = random_relation(space, rng)
    f = SpaceMap(space, space, tuple(rng.randrange(n) for _ in range(n)))
    report = check_pcont(f, rel1, rel2)
    if not report.ok:
        a, b = report.witnesses["pcont"]
        assert rel1.near(a, b)
        assert rel2.far(f.image_mask(a), f.image_mask(b))
        # minimality: no lexicographically earlier violating pair
        for a2 in range(a + 1):
            for b2 in range(space.n_subsets):
                if (a2, b2) >= (a, b):
                    break
                if rel1.near(a2, b2):
                    assert rel2.near(f.image_mask(a2), f.image_mask(b2))


@given(st.integers(min_value=0))
@settings(max_examples=200, deadline=None)
def test_point_relation_extension_is_existential(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    space = default_space(n)
    point_rows = [0] * n
    for i in range(n):
        for j in range(n):
            if rng.random() < 0.4:
                point_rows[i] |= 1 << j
                point_rows[j] |= 1 << i
    rel = relation_from_point_pairs(space, point_rows, "explicit")
    for a in range(space.n_subsets):
        for b in range(space.n_subsets):
            expected = any(
                (point_rows[i] >> j) & 1 for i in bits(a) for j in bits(b)
            )
            assert rel.near(a, b) == expected

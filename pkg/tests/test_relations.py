import pytest
from hypothesis import given, settings, strategies as st

from proxikit import (
    ProximityRelation,
    check_cech,
    check_efremovic,
    default_space,
    enumerate_relations,
    make_coarse_proximity,
    make_discrete_proximity,
    make_metric_proximity,
    product_proximity,
    quotient_proximity,
    relation_from_near_pairs,
    subspace_proximity,
)
from proxikit.groups import coset_partition, cyclic_group


def test_discrete_shared_element_near():
    s = default_space(2)
    d = make_discrete_proximity(s)
    assert d.near(0b01, 0b11)  # {a} vs {a,b}
    assert d.far(0b01, 0b10)  # {a} vs {b}


def test_coarse_nonempty_near():
    s = default_space(2)
    c = make_coarse_proximity(s)
    assert c.near(0b01, 0b10)
    assert c.far(0, 0b11)  # empty side is always far


def test_table_shape_validation():
    s = default_space(2)
    with pytest.raises(ValueError):
        ProximityRelation(s, (0, 0, 0))  # wrong row count
    with pytest.raises(ValueError):
        ProximityRelation(s, (0, 0, 0, 16))  # bit outside range
    with pytest.raises(ValueError):
        ProximityRelation(s, (0, 0, 0, 0), provenance="bogus")


# --- metric -----------------------------------------------------------------


def test_genuine_metric_equals_discrete():
    s = default_space(3)
    d = [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    assert make_metric_proximity(s, d).same_table(make_discrete_proximity(s))


@given(
    st.lists(
        st.integers(min_value=1, max_value=2), min_size=6, max_size=6
    )
)
@settings(max_examples=50)
def test_any_genuine_metric_equals_discrete(offdiag):
    # all off-diagonal values in {1, 2} satisfy the triangle inequality
    s = default_space(4)
    d = [[0] * 4 for _ in range(4)]
    idx = 0
    for i in range(4):
        for j in range(i + 1, 4):
            d[i][j] = d[j][i] = offdiag[idx]
            idx += 1
    assert make_metric_proximity(s, d).same_table(make_discrete_proximity(s))


def pseudometric_ab():
    # d(a,b) = 0, all other distinct pairs at distance 1
    return [[0, 0, 1], [0, 0, 1], [1, 1, 0]]


def test_pseudometric_near_yet_disjoint():
    s = default_space(3)
    rel = make_metric_proximity(s, pseudometric_ab())
    assert rel.near(0b001, 0b010)  # {a} near {b} with empty intersection


def test_pseudometric_axioms_pass():
    s = default_space(3)
    rel = make_metric_proximity(s, pseudometric_ab())
    assert check_cech(rel).ok
    assert check_efremovic(rel).ok


@pytest.mark.parametrize(
    "matrix, message",
    [
        ([[0, 1], [2, 0]], "not symmetric"),
        ([[1, 1], [1, 0]], "diagonal not zero"),
        ([[0, -1], [-1, 0]], "negative entry"),
        ([[0, 1, 5], [1, 0, 1], [5, 1, 0]], "triangle inequality"),
        ([[0, 1]], "must be 2x2"),
    ],
)
def test_metric_validation_names_violation(matrix, message):
    s = default_space(len(matrix[0]) if len(matrix) != len(matrix[0]) else len(matrix))
    with pytest.raises(ValueError, match=message):
        make_metric_proximity(s, matrix)


# --- explicit ---------------------------------------------------------------


def test_explicit_symmetric_closure_flag():
    s = default_space(2)
    rel, closed = relation_from_near_pairs(s, [(1, 2)])
    assert closed  # asymmetric input was closed
    assert rel.near(1, 2) and rel.near(2, 1)
    rel2, closed2 = relation_from_near_pairs(s, [(1, 2), (2, 1)])
    assert not closed2
    assert rel.same_table(rel2)


# --- subspace ---------------------------------------------------------------


def test_subspace_full_carrier_unchanged():
    s = default_space(3)
    d = make_discrete_proximity(s)
    sub = subspace_proximity(d, s.full_mask)
    assert sub.rows == d.rows
    assert sub.space.labels == s.labels


def test_subspace_of_discrete_is_discrete():
    s = default_space(3)
    d = make_discrete_proximity(s)
    sub = subspace_proximity(d, 0b101)  # {a, c}
    assert sub.space.labels == ("a", "c")
    assert sub.same_table(make_discrete_proximity(default_space(2)))


def test_subspace_rejects_empty():
    s = default_space(2)
    with pytest.raises(ValueError, match="nonempty"):
        subspace_proximity(make_discrete_proximity(s), 0)


def test_subspace_preserves_efremovic_over_enumerated():
    for rel in enumerate_relations(3, "efremovic"):
        for v in range(1, 8):
            assert check_efremovic(subspace_proximity(rel, v)).ok


# --- quotient ---------------------------------------------------------------


def test_quotient_by_singletons_is_identity():
    s = default_space(3)
    d = make_discrete_proximity(s)
    q = quotient_proximity(d, [1, 2, 4])
    assert q.rows == d.rows
    assert q.space.labels == s.labels


def test_quotient_of_coarse_is_coarse():
    s = default_space(4)
    c = make_coarse_proximity(s)
    q = quotient_proximity(c, [0b0011, 0b1100])
    assert q.same_table(make_coarse_proximity(default_space(2)))


def test_quotient_discrete_by_cosets_is_discrete():
    z4 = cyclic_group(4)
    d = make_discrete_proximity(z4.space)
    blocks = coset_partition(z4, 0b0101)  # subgroup {0, 2}
    q = quotient_proximity(d, blocks)
    assert q.same_table(make_discrete_proximity(default_space(2)))


def test_quotient_partition_validation():
    s = default_space(3)
    d = make_discrete_proximity(s)
    with pytest.raises(ValueError, match="empty"):
        quotient_proximity(d, [0b011, 0, 0b100])
    with pytest.raises(ValueError, match="overlaps"):
        quotient_proximity(d, [0b011, 0b110])
    with pytest.raises(ValueError, match="cover"):
        quotient_proximity(d, [0b011])


# --- product ----------------------------------------------------------------


def test_product_rectangle_examples():
    s = default_space(2)
    d = make_discrete_proximity(s)
    prod = product_proximity(d, d)
    a_x = prod.rectangle(0b01, 0b01)
    b_x = prod.rectangle(0b10, 0b01)
    assert prod.near(a_x, a_x)
    assert not prod.near(a_x, b_x)  # first coordinates differ


def test_product_agrees_with_conjunction_everywhere():
    s = default_space(2)
    rels = list(enumerate_relations(2, "cech"))
    for rel1 in rels:
        for rel2 in rels:
            prod = product_proximity(rel1, rel2)
            for a1 in range(4):
                for a2 in range(4):
                    for b1 in range(4):
                        for b2 in range(4):
                            want = rel1.near(a1, b1) and rel2.near(a2, b2)
                            got = prod.factor_near(a1, a2, b1, b2)
                            assert got == want


def test_product_rejects_non_rectangle_query():
    s = default_space(2)
    d = make_discrete_proximity(s)
    prod = product_proximity(d, d)
    with pytest.raises(ValueError, match="non-rectangle"):
        prod.near(0b1001, 0b0001)


def test_subspace_preserves_each_axiom_class():
    from proxikit import check_lodato
    checks = {
        "cech": check_cech,
        "lodato": check_lodato,
        "efremovic": check_efremovic,
    }
    for klass, check in checks.items():
        for rel in enumerate_relations(3, klass):
            for v in range(1, 8):
                assert check(subspace_proximity(rel, v)).ok


def test_relation_storage_at_cap_size():
    s = default_space(12)
    rel = make_discrete_proximity(s)
    assert len(rel.rows) == 4096
    assert rel.near(1, (1 << 12) - 1)
    assert rel.far(1, 2)
    with pytest.raises(ValueError):
        default_space(13)


def test_quotient_projection_is_pcont_on_union_axiom_relations():
    # the quotient construction exists to make the block projection
    # proximally continuous; on relations with the union axiom the preimage
    # of an image is a superset whose nearness follows by monotonicity
    from proxikit import SpaceMap, check_pcont
    from proxikit.spaces import bits

    partitions3 = [
        [0b111],
        [0b011, 0b100],
        [0b101, 0b010],
        [0b110, 0b001],
        [0b001, 0b010, 0b100],
    ]
    for rel in enumerate_relations(3, "cech"):
        for blocks in partitions3:
            quot = quotient_proximity(rel, blocks)
            block_of = {}
            for idx, block in enumerate(blocks):
                for i in bits(block):
                    block_of[i] = idx
            projection = SpaceMap(
                rel.space, quot.space, tuple(block_of[i] for i in range(3)), "pi"
            )
            assert check_pcont(projection, rel, quot).ok

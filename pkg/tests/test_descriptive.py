import random

import pytest
from hypothesis import given, settings, strategies as st

from proxikit import (
    FiniteSpace,
    SpaceMap,
    check_descriptive_ef,
    check_descriptive_lodato,
    check_dpcont,
    check_lodato,
    check_pcont,
    concat_paths,
    default_space,
    describe,
    descriptive_intersection,
    descriptive_proximity,
    identity_map,
    make_coarse_proximity,
    make_discrete_proximity,
    mapping_space_relation,
    path_label_demo,
    paths_near,
    probe_table,
    product_probe_table,
)

S3 = default_space(3)
INJECTIVE3 = probe_table(S3, [[0], [1], [2]])
CONSTANT3 = probe_table(S3, [[7], [7], [7]])


def random_probes(rng, n=None):
    n = n or rng.randint(1, 4)
    arity = rng.randint(1, 3)
    values = [[rng.randint(0, 3) for _ in range(arity)] for _ in range(n)]
    return probe_table(default_space(n), values)


def test_probe_table_validation():
    with pytest.raises(ValueError):
        probe_table(S3, [[0], [1]])
    with pytest.raises(ValueError):
        from proxikit import ProbeTable

        ProbeTable(S3, 2, ((0,), (1, 2), (3, 4)))


def test_describe_singleton_and_empty():
    assert describe(INJECTIVE3, 0b001) == frozenset({(0,)})
    assert describe(INJECTIVE3, 0) == frozenset()


def test_describe_merges_equal_vectors():
    probes = probe_table(S3, [[5], [5], [6]])
    assert describe(probes, 0b011) == frozenset({(5,)})


def test_injective_probes_give_discrete():
    assert descriptive_proximity(INJECTIVE3).same_table(make_discrete_proximity(S3))


def test_constant_probe_gives_coarse():
    assert descriptive_proximity(CONSTANT3).same_table(make_coarse_proximity(S3))


def test_trunc_offset_fixture_nearness(trunc_offset_probes):
    rel = descriptive_proximity(trunc_offset_probes)
    labels = trunc_offset_probes.space.labels
    one, one_three = labels.index("1"), labels.index("1.3")
    zero, zero_three = labels.index("0"), labels.index("0.3")
    assert rel.near(1 << one, 1 << one_three)
    assert rel.near(1 << zero, 1 << zero_three)
    assert rel.far(1 << one, 1 << zero)


# --- descriptive intersection -------------------------------------------------


def test_descriptive_intersection_self_is_whole_set():
    assert descriptive_intersection(INJECTIVE3, 0b011, 0b011) == 0b011


def test_descriptive_intersection_disjoint_descriptions_empty():
    assert descriptive_intersection(INJECTIVE3, 0b001, 0b110) == 0


def test_descriptive_intersection_shared_element():
    assert descriptive_intersection(INJECTIVE3, 0b011, 0b110) == 0b010


@given(st.integers(min_value=0))
@settings(max_examples=200, deadline=None)
def test_descriptive_intersection_properties(seed):
    rng = random.Random(seed)
    probes = random_probes(rng)
    rel = descriptive_proximity(probes)
    m = probes.space.n_subsets
    a = rng.randrange(m)
    b = rng.randrange(m)
    inter = descriptive_intersection(probes, a, b)
    assert inter & ~(a | b) == 0  # contained in the union
    assert a & b & ~inter == 0  # shared elements always realize shared descriptions
    assert bool(inter) == rel.near(a, b)  # nonempty iff descriptively near


# --- axiom ladder -------------------------------------------------------------


def test_injective_report_matches_discrete_lodato():
    dl = check_descriptive_lodato(INJECTIVE3)
    l = check_lodato(make_discrete_proximity(S3))
    assert [dl.verdicts[k] for k in ("DL1", "DL2", "DL3", "DL4", "DL5")] == [
        l.verdicts[k] for k in ("L1", "L2", "L3", "L4", "L5")
    ]


def test_constant_probe_passes_dl():
    assert check_descriptive_lodato(CONSTANT3).ok


def test_constant_probe_def_vacuous():
    report = check_descriptive_ef(CONSTANT3)
    assert report.verdicts["DEF"]


def test_random_probes_pass_dl_and_def():
    rng = random.Random(20240817)
    for _ in range(150):
        probes = random_probes(rng)
        assert check_descriptive_lodato(probes).ok
        assert check_descriptive_ef(probes).ok


# --- dpcont -------------------------------------------------------------------


def test_dpcont_identity_same_probes():
    assert check_dpcont(identity_map(S3), INJECTIVE3, INJECTIVE3).ok


def test_any_map_into_constant_codomain_is_dpcont():
    for images in ((0, 0, 0), (2, 1, 0), (1, 1, 2)):
        f = SpaceMap(S3, S3, images)
        assert check_dpcont(f, INJECTIVE3, CONSTANT3).ok


@given(st.integers(min_value=0))
@settings(max_examples=150, deadline=None)
def test_dpcont_equals_pcont_on_induced_relations(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    p1 = random_probes(rng, n)
    p2 = random_probes(rng, n)
    f = SpaceMap(p1.space, p2.space, tuple(rng.randrange(n) for _ in range(n)))
    direct = check_dpcont(f, p1, p2)
    via_rel = check_pcont(f, descriptive_proximity(p1), descriptive_proximity(p2))
    assert direct.ok == via_rel.ok
    if not direct.ok:
        assert direct.witnesses["dpcont"] == via_rel.witnesses["pcont"]


# --- mapping space ------------------------------------------------------------


def test_mapping_space_identity_near():
    ident = identity_map(S3)
    verdict = mapping_space_relation([ident], [ident], INJECTIVE3, INJECTIVE3)
    assert verdict.near


def test_mapping_space_constant_codomain_near():
    maps = [SpaceMap(S3, S3, (0, 0, 0)), SpaceMap(S3, S3, (1, 2, 0))]
    assert mapping_space_relation(maps, maps, INJECTIVE3, CONSTANT3).near


def test_mapping_space_far_with_witness():
    s2 = default_space(2)
    inj = probe_table(s2, [[0], [1]])
    ident = identity_map(s2)
    swap = SpaceMap(s2, s2, (1, 0), "swap")
    verdict = mapping_space_relation([ident], [swap], inj, inj)
    assert not verdict.near
    a, b, name1, name2 = verdict.witness
    assert (name1, name2) == ("id", "swap")
    # the witness really is a near pair with far images
    rel = descriptive_proximity(inj)
    assert rel.near(a, b)
    assert rel.far(ident.image_mask(a), swap.image_mask(b))


def test_mapping_space_rejects_non_dpcont_member():
    s2 = default_space(2)
    inj = probe_table(s2, [[0], [1]])
    # both domain points share a description, the codomain separates them, so
    # the identity does not preserve descriptive nearness
    merged = probe_table(s2, [[9], [9]])
    bad = SpaceMap(s2, s2, (0, 1), "keep")
    assert not check_dpcont(bad, merged, inj).ok
    with pytest.raises(ValueError, match="keep"):
        mapping_space_relation([bad], [bad], merged, inj)


# --- product probes -----------------------------------------------------------


def test_product_probe_table_matches_factor_conjunction():
    s2 = default_space(2)
    p1 = probe_table(s2, [[0], [1]])
    p2 = probe_table(s2, [[4], [4]])
    prod = product_probe_table(p1, p2)
    rel = descriptive_proximity(prod)
    rel1 = descriptive_proximity(p1)
    rel2 = descriptive_proximity(p2)
    from proxikit import rectangle_mask

    for a1 in range(4):
        for a2 in range(4):
            for b1 in range(4):
                for b2 in range(4):
                    want = rel1.near(a1, b1) and rel2.near(a2, b2)
                    got = rel.near(
                        rectangle_mask(s2, s2, a1, a2), rectangle_mask(s2, s2, b1, b2)
                    )
                    assert got == want


# --- paths --------------------------------------------------------------------

GRID = probe_table(FiniteSpace(("A", "B", "C")), [[0], [1], [2]])


def test_equal_paths_near():
    assert paths_near(GRID, ("A", "B", "C"), ("A", "B", "C"))


def test_reordered_paths_far():
    assert not paths_near(GRID, ("A", "B", "C"), ("A", "C", "B"))


def test_different_length_paths_far():
    assert not paths_near(GRID, ("A", "B"), ("A", "B", "C"))


def test_concat_splices_at_endpoint():
    assert concat_paths(GRID, ("A", "B"), ("B", "C")) == ("A", "B", "C")


def test_concat_rejects_endpoint_mismatch():
    with pytest.raises(ValueError, match="concatenate"):
        concat_paths(GRID, ("A", "B"), ("C", "B"))


def test_path_demo_reports_both():
    demo = path_label_demo(GRID, ("A", "B"), ("B", "C"))
    assert not demo.near and demo.concatenation == ("A", "B", "C")
    demo2 = path_label_demo(GRID, ("A", "B", "C"), ("A", "C", "B"))
    assert not demo2.near and demo2.concatenation is None


def test_path_rejects_unknown_box():
    with pytest.raises(ValueError, match="unknown box"):
        paths_near(GRID, ("A", "Z"), ("A", "Z"))


def test_path_nearness_is_equivalence_on_fixed_length():
    paths = [(x, y) for x in "ABC" for y in "ABC"]
    for p in paths:
        assert paths_near(GRID, p, p)
        for q in paths:
            assert paths_near(GRID, p, q) == paths_near(GRID, q, p)
            for r in paths:
                if paths_near(GRID, p, q) and paths_near(GRID, q, r):
                    assert paths_near(GRID, p, r)

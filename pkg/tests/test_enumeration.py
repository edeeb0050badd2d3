import json
import random

import pytest

from proxikit import (
    ProximityRelation,
    branching_cech_relations,
    brute_force_tables,
    check_cech,
    check_efremovic,
    check_lodato,
    default_space,
    enumerate_relations,
    fuzz_theorem,
    mine_separating_examples,
    naive_oracle,
    replay_counterexample,
    witness_violates,
)
from proxikit.enumeration import THEOREMS, relation_from_payload, relation_payload


# --- generators -----------------------------------------------------------------


def test_single_cech_relation_on_one_point():
    rels = list(enumerate_relations(1, "cech"))
    assert len(rels) == 1
    rel = rels[0]
    assert rel.near(1, 1)
    assert rel.far(0, 0) and rel.far(0, 1) and rel.far(1, 0)


def test_enumeration_counts():
    assert len(list(enumerate_relations(2, "cech"))) == 2
    assert len(list(enumerate_relations(3, "cech"))) == 8
    assert len(list(enumerate_relations(3, "lodato"))) == 5
    assert len(list(enumerate_relations(3, "efremovic"))) == 5
    assert len(list(enumerate_relations(4, "cech"))) == 64
    assert len(list(enumerate_relations(4, "lodato"))) == 15  # partitions of 4 points


def test_every_emitted_relation_passes_its_class():
    for n in (1, 2, 3):
        for rel in enumerate_relations(n, "cech"):
            assert check_cech(rel).ok
        for rel in enumerate_relations(n, "lodato"):
            assert check_lodato(rel).ok
        for rel in enumerate_relations(n, "efremovic"):
            assert check_efremovic(rel).ok


def test_no_duplicates_and_deterministic_order():
    runs = [tuple(r.rows for r in enumerate_relations(3, "cech")) for _ in range(2)]
    assert runs[0] == runs[1]
    assert len(set(runs[0])) == len(runs[0])


def test_enumeration_cap_states_bound():
    with pytest.raises(ValueError, match="1024 candidate"):
        list(enumerate_relations(5, "cech"))


def test_brute_force_matches_fast_path_at_n2():
    slow = sorted(
        rel.rows
        for rel in brute_force_tables(2)
        if all(naive_oracle(rel, ax) for ax in ("L1", "L2", "L3", "L4"))
    )
    fast = sorted(r.rows for r in enumerate_relations(2, "cech"))
    assert slow == fast


def test_branching_generator_matches_fast_path():
    for n in (1, 2, 3):
        branch = sorted(r.rows for r in branching_cech_relations(n))
        fast = sorted(r.rows for r in enumerate_relations(n, "cech"))
        assert branch == fast


def test_branching_cap_states_bound():
    with pytest.raises(ValueError, match="candidates"):
        list(branching_cech_relations(4))


# --- naive oracle ------------------------------------------------------------------


def test_oracle_rejects_unknown_axiom():
    rel = next(iter(enumerate_relations(1, "cech")))
    with pytest.raises(ValueError, match="unknown axiom"):
        naive_oracle(rel, "L9")


def test_oracle_agreement_on_random_tables():
    rng = random.Random(1729)
    space3 = default_space(3)
    for _ in range(1000):
        n = rng.randint(1, 3)
        space = default_space(n)
        m = 1 << n
        rel = ProximityRelation(space, tuple(rng.getrandbits(m) for _ in range(m)))
        lodato = check_lodato(rel)
        ef = check_efremovic(rel)
        for axiom in ("L1", "L2", "L3", "L4", "L5"):
            assert lodato.verdicts[axiom] == naive_oracle(rel, axiom)
        assert ef.verdicts["EF"] == naive_oracle(rel, "EF")
    del space3


def test_oracle_agreement_on_enumerated_lodato_n2():
    for rel in enumerate_relations(2, "lodato"):
        for axiom in ("L1", "L2", "L3", "L4", "L5", "EF", "K1", "K2", "K3", "K4"):
            assert naive_oracle(rel, axiom)


def test_corrupted_witness_rejected():
    census = mine_separating_examples(3)
    rel = census.cech_not_lodato
    report = check_lodato(rel)
    witness = report.witnesses["L5"]
    assert witness_violates(rel, "L5", witness)
    # repair the violation: make the conclusion pair near
    a, b, c = witness
    rows = list(rel.rows)
    rows[a] |= 1 << c
    rows[c] |= 1 << a
    repaired = ProximityRelation(rel.space, tuple(rows))
    assert not witness_violates(repaired, "L5", witness)


def test_mutated_table_bits_change_oracle_verdicts():
    rng = random.Random(99)
    census = mine_separating_examples(3)
    rel = census.cech_not_ef
    witness = check_efremovic(rel).witnesses["EF"]
    assert witness_violates(rel, "EF", witness)
    # flipping the witness pair to near destroys the violation
    a, b = witness
    rows = list(rel.rows)
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    assert not witness_violates(ProximityRelation(rel.space, tuple(rows)), "EF", witness)
    del rng


# --- census ---------------------------------------------------------------------


def test_census_n1_no_exemplars():
    census = mine_separating_examples(1)
    assert census.counts == {
        "cech": 1, "lodato": 1, "efremovic": 1, "lodato_and_ef": 1
    }
    assert census.cech_not_lodato is None and census.cech_not_ef is None


def test_census_n2_counts_match_brute_force():
    census = mine_separating_examples(2)
    brute_cech = brute_lodato = brute_ef = 0
    for rel in brute_force_tables(2):
        if not all(naive_oracle(rel, ax) for ax in ("L1", "L2", "L3", "L4")):
            continue
        brute_cech += 1
        brute_lodato += naive_oracle(rel, "L5")
        brute_ef += naive_oracle(rel, "EF")
    assert census.counts["cech"] == brute_cech == 2
    assert census.counts["lodato"] == brute_lodato == 2
    assert census.counts["efremovic"] == brute_ef == 2
    assert census.cech_not_lodato is None and census.cech_not_ef is None


def test_census_n3_exemplars_verified_and_minimal():
    census = mine_separating_examples(3)
    assert census.counts == {
        "cech": 8, "lodato": 5, "efremovic": 5, "lodato_and_ef": 5
    }
    for exemplar, axiom in (
        (census.cech_not_lodato, "L5"),
        (census.cech_not_ef, "EF"),
    ):
        assert all(naive_oracle(exemplar, ax) for ax in ("L1", "L2", "L3", "L4"))
        assert not naive_oracle(exemplar, axiom)
        # exhaustive minimality: no class member breaking the axiom has a
        # smaller near-pair count, and ties resolve lexicographically
        key = (exemplar.near_pair_count(), exemplar.rows)
        for rel in enumerate_relations(3, "cech"):
            if not naive_oracle(rel, axiom):
                assert key <= (rel.near_pair_count(), rel.rows)


def test_census_determinism():
    a = mine_separating_examples(2)
    b = mine_separating_examples(2)
    assert a.to_json() == b.to_json()
    c = mine_separating_examples(3)
    d = mine_separating_examples(3)
    assert c.to_json() == d.to_json()
    assert json.loads(c.to_json())["counts"]["cech"] == 8


# --- fuzzer ----------------------------------------------------------------------


def test_unknown_theorem_rejected_with_known_list():
    with pytest.raises(ValueError, match="known ids"):
        fuzz_theorem("untrue-claim")


def test_pseudo_theorem_counterexamples_found_and_replayed():
    outcome = fuzz_theorem("every-cech-is-lodato")
    assert outcome.instances == 11  # 1 + 2 + 8 relations at n = 1, 2, 3
    assert len(outcome.counterexamples) == 3  # the non-transitive tolerances
    for instance in outcome.counterexamples:
        assert replay_counterexample("every-cech-is-lodato", instance)
        rel = relation_from_payload(instance["relation"])
        assert check_cech(rel).ok and not check_lodato(rel).ok
        assert not naive_oracle(rel, "L5")


def test_expected_true_theorems_hold_at_default_scope():
    for theorem in (
        "translations-are-proximal-isomorphisms",
        "subgroups-inherit-proximal-group",
        "multiplication-continuity-gives-inversion",
        "translations-and-transitivity-give-proximal-group",
        "translations-and-pointwise-lodato-give-proximal-group",
        "t1-equals-identity-closure",
        "hom-criterion-implies-pcont",
        "second-isomorphism-theorem",
    ):
        outcome = fuzz_theorem(theorem)
        assert outcome.instances > 0
        assert not outcome.counterexamples, theorem


def test_first_iso_fuzz_finds_the_failure():
    outcome = fuzz_theorem("first-isomorphism-theorem")
    assert outcome.counterexamples
    for instance in outcome.counterexamples:
        assert replay_counterexample("first-isomorphism-theorem", instance)


def test_relation_payload_roundtrip():
    for rel in enumerate_relations(2, "cech"):
        assert relation_from_payload(relation_payload(rel)).same_table(rel)


def test_all_registered_theorems_have_default_scopes():
    for theorem, (scope, runner) in THEOREMS.items():
        assert scope.max_order >= 1
        assert scope.relation_classes
        assert callable(runner)


def test_fuzz_outcomes_deterministic():
    a = fuzz_theorem("every-cech-is-lodato")
    b = fuzz_theorem("every-cech-is-lodato")
    assert a.instances == b.instances
    assert a.counterexamples == b.counterexamples
    c = fuzz_theorem("first-isomorphism-theorem")
    d = fuzz_theorem("first-isomorphism-theorem")
    assert c.counterexamples == d.counterexamples

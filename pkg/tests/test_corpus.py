"""Model enumeration: soundness, completeness, canonical forms, generators."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest

import naive_oracle as naive
from hyperbck import Carrier, HyperBCK, InputError, hk_axioms_hold, validate_fuzzy
from hyperbck.corpus import (
    canonical_form,
    chain_example,
    enumerate_fuzzy_assignments,
    enumerate_hyper_bck,
    relabel_table,
)
from hyperbck.morphisms import Hom, is_fuzzy_hom


def test_frozen_model_counts(corpus1, corpus2, corpus3, corpus3_iso):
    assert len(corpus1) == 1
    assert len(corpus2) == 12
    assert len(corpus3) == 15936
    assert len(corpus3_iso) == 8048


def test_size_bounds_are_refused():
    with pytest.raises(InputError):
        enumerate_hyper_bck(0)
    with pytest.raises(InputError):
        enumerate_hyper_bck(4)


def test_corpus2_exactly_matches_literal_filter(corpus2):
    expected = set()
    carrier = Carrier(("0", "1"), 0)
    for a in range(1, 4):
        for b in range(1, 4):
            for c in range(1, 4):
                for d in range(1, 4):
                    masks = (a, b, c, d)
                    labels, zero, table = naive.raw_table(2, masks)
                    if naive.hk_valid(labels, zero, table):
                        expected.add(masks)
    assert {alg.table for alg in corpus2} == expected


def test_corpus3_sampled_completeness_and_soundness(corpus3):
    in_corpus = {alg.table for alg in corpus3}
    rng = random.Random(987654)
    for _ in range(3000):
        masks = tuple(rng.randrange(1, 8) for _ in range(9))
        labels, zero, table = naive.raw_table(3, masks)
        assert naive.hk_valid(labels, zero, table) == (masks in in_corpus)


def test_every_member_validates(corpus_le3):
    for alg in corpus_le3[:: max(1, len(corpus_le3) // 500)]:
        assert hk_axioms_hold(alg)


def test_canonicalizer_idempotent_and_relabeling_invariant(corpus3):
    rng = random.Random(13)
    models = rng.sample(list(corpus3), 200)
    for alg in models:
        n, zero, canon = canonical_form(alg)
        assert canonical_form(HyperBCK(alg.carrier, canon)) == (n, zero, canon)
        for images in permutations([1, 2]):
            perm = [0, *images]
            relabeled = HyperBCK(alg.carrier, relabel_table(3, alg.table, perm))
            assert canonical_form(relabeled) == (n, zero, canon)


def test_iso_corpus_is_canonical_and_covering(corpus3, corpus3_iso):
    iso_tables = {alg.table for alg in corpus3_iso}
    for alg in corpus3_iso:
        assert canonical_form(alg)[2] == alg.table
    for alg in list(corpus3)[::7]:
        assert canonical_form(alg)[2] in iso_tables


# --- the worked chain ---------------------------------------------------------


def test_chain_structure():
    c1 = chain_example(1)
    assert c1.alg.size == 1 and c1.mu == (Fraction(1),)

    c4 = chain_example(4)
    assert c4.alg.star("3", "2") == {"2"}
    assert c4.alg.star("2", "4") == {"1", "2"}
    assert c4.alg.star("4", "1") == {"4"}
    assert c4.mu_of("4") == Fraction(1, 4)

    with pytest.raises(InputError):
        chain_example(0)


def test_chain_membership_inequality_holds_but_axioms_break_at_three():
    for k in range(1, 7):
        chain = chain_example(k)
        assert validate_fuzzy(chain).passed
        assert hk_axioms_hold(chain.alg) == (k <= 2)


def test_chain_embeds_in_next_chain_as_fuzzy_hom():
    for k in range(1, 6):
        small, big = chain_example(k), chain_example(k + 1)
        include = Hom.from_labels(
            small.alg, big.alg, {lab: lab for lab in small.alg.carrier.labels}
        )
        assert is_fuzzy_hom(include, small, big)


# --- fuzzy assignment enumeration ----------------------------------------------


def test_fuzzy_assignments_on_trivial():
    t = enumerate_hyper_bck(1).models[0]
    got = enumerate_fuzzy_assignments(t, [0, 1])
    assert [fz.mu for fz in got] == [(Fraction(0),), (Fraction(1),)]


def test_fuzzy_assignments_match_literal_filter(corpus2):
    grid = [Fraction(0), Fraction(1, 2), Fraction(1)]
    for alg in corpus2:
        labels, _, table = naive.table_of(alg)
        got = {fz.mu for fz in enumerate_fuzzy_assignments(alg, grid)}
        expected = set()
        for m0 in grid:
            for m1 in grid:
                mu = {labels[0]: m0, labels[1]: m1}
                if naive.fuzzy_ok(labels, table, mu):
                    expected.add((m0, m1))
        assert got == expected


def test_fuzzy_assignments_satisfy_zero_maximality(corpus2):
    for alg in corpus2:
        for fz in enumerate_fuzzy_assignments(alg, [0, Fraction(1, 3), 1]):
            assert fz.mu[alg.zero] == max(fz.mu)


def test_fuzzy_assignments_empty_grid_refused(corpus1):
    with pytest.raises(InputError):
        enumerate_fuzzy_assignments(corpus1.models[0], [])

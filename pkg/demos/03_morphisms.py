#!/usr/bin/env python3
"""Homomorphisms: checking, enumeration, the level-set criterion, mono tests.

A homomorphism fixes zero and maps each cell onto the cell of the images.
Its fuzzy refinement never decreases membership.  The level-set criterion
decides the same property by chasing cuts, and a bounded probe search
decides left-cancellability in both the plain and the fuzzy sense.
"""

from fractions import Fraction

from hyperbck import FuzzyHyperBCK, separation_promotes
from hyperbck.category import terminal, terminal_map
from hyperbck.corpus import chain_example, enumerate_hyper_bck
from hyperbck.morphisms import (
    Hom,
    check_mono_equivalence,
    enumerate_homs,
    fuzzy_hom_via_cuts,
    is_fuzzy_hom,
    is_hom,
)

c2, c3 = chain_example(2), chain_example(3)

print("all homomorphisms from the 2-chain to the 3-chain:")
for h in enumerate_homs(c2.alg, c3.alg):
    print("  ", h.as_label_map())

swap = Hom.from_labels(c3.alg, c3.alg, {"1": "1", "2": "3", "3": "2"})
print("\nswapping 2 and 3 on the 3-chain is a homomorphism:", is_hom(swap))

include = Hom.from_labels(c2.alg, c3.alg, {"1": "1", "2": "2"})
print("inclusion of the 2-chain, direct fuzzy check:", is_fuzzy_hom(include, c2, c3))
print("inclusion of the 2-chain, level-set criterion:", fuzzy_hom_via_cuts(include, c2, c3))

collapse = terminal_map(c3.alg)
print("\ncollapse to the one-element structure:")
print("  plain homomorphism:", is_hom(collapse))
print("  fuzzy from graded mu = 1/x:", is_fuzzy_hom(collapse, c3, terminal()))
zero = FuzzyHyperBCK(c3.alg, (Fraction(0),) * 3)
print("  fuzzy from vanishing mu:  ", is_fuzzy_hom(collapse, zero, terminal()))
print("(the one-element structure receives fuzzy maps only from vanishing mu)")

print("\nbounded mono check (probes up to size 3):")
z2 = FuzzyHyperBCK(c2.alg, (Fraction(0),) * 2)
ident = check_mono_equivalence(Hom.identity(c2.alg), z2, z2)
print("  identity:", "mono" if ident.crisp_mono else "not mono", "| verdicts agree:", ident.agree)
squash = Hom(c2.alg, c2.alg, (0, 0))
verdict = check_mono_equivalence(squash, z2, z2)
print("  collapse:", "mono" if verdict.crisp_mono else "not mono", "| verdicts agree:", verdict.agree)
h, g = verdict.crisp_witness
print("  separating pair out of a probe:", h.as_label_map(), "vs", g.as_label_map())

# Membership separation promotes plain homomorphisms to fuzzy ones: values
# on one subalgebra sit strictly below a level, on the other strictly above.
from hyperbck import HyperBCK

host_alg = HyperBCK.from_sets(
    ["O", "a", "b"], "O", {(x, y): ["O"] for x in "Oab" for y in "Oab"}
)
host = FuzzyHyperBCK.from_map(host_alg, {"O": "1", "a": "1/4", "b": "3/4"})
verdict = separation_promotes(host, {"O", "a"}, {"O", "b"}, Fraction(1, 2))
print("\nseparation at level 1/2 on a three-element host:")
print("  hypothesis holds:", verdict.hypothesis_holds)
print("  all", verdict.hom_count, "homomorphisms promoted:", verdict.conclusion_holds)

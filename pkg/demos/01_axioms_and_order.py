#!/usr/bin/env python3
"""Build finite hyper BCK-algebras, inspect the hyperorder, run the validator.

A hyperoperation returns a non-empty *subset* of the carrier; the element
x is below y when the zero constant lands in x*y.  The validator checks
the three axioms over every triple and reports every witness it finds.
"""

from hyperbck import HyperBCK, validate_hyper_bck
from hyperbck.corpus import chain_example

# The graded chain on {1,2,3} with zero 1: x*y is an initial segment when
# x <= y, the segment {2..y} when x > y != 1, and {x} against the zero.
chain = chain_example(3).alg

print("cells of the 3-chain:")
for x in chain.carrier.labels:
    row = "   ".join(f"{x}*{y} = {sorted(chain.star(x, y))}" for y in chain.carrier.labels)
    print("  " + row)

print("\nhyperorder facts:")
print("  2 < 3:", chain.hyper_order("2", "3"))
print("  3 < 1:", chain.hyper_order("3", "1"))
print("  {1,2} < {3}:", chain.set_order({"1", "2"}, {"3"}))

print("\nsubset operation:")
print("  {2,3} * {1} =", sorted(chain.set_star({"2", "3"}, {"1"})))

report = validate_hyper_bck(chain)
print("\nvalidator verdict on the 3-chain:", "passed" if report.passed else "failed")
for violation in report.violations:
    print(f"  {violation.axiom} fails at {violation.witness}: {violation.detail}")
print("(the textbook presentation of this example never checks the first axiom;")
print(" at carrier size 3 it genuinely breaks, as the witness above shows)")

# A two-element structure satisfying the three axioms in which the order
# is not antisymmetric: O and a sit below each other.
symmetric = HyperBCK.from_sets(
    ["O", "a"],
    "O",
    {
        ("O", "O"): ["O", "a"],
        ("O", "a"): ["O"],
        ("a", "O"): ["O", "a"],
        ("a", "a"): ["O", "a"],
    },
)
print("\ntwo-element model, default axioms:", validate_hyper_bck(symmetric).passed)
strict = validate_hyper_bck(symmetric, strict_antisymmetry=True)
print("same model with antisymmetry required:", strict.passed)
for violation in strict.violations:
    print(f"  {violation.axiom} witness: {violation.witness}")

print("\nsubalgebras of the 3-chain:")
for subset in ({"1"}, {"1", "2"}, {"2", "3"}):
    print(f"  {sorted(subset)}: {chain.is_subalgebra(subset)}")

#!/usr/bin/env python3
"""Fuzzy membership layers: the defining inequality, level sets, collapse laws.

Membership degrees are exact rationals.  A structure qualifies when the
minimum of mu over every cell x*y dominates min(mu(x), mu(y)); level sets
{x : mu(x) >= alpha} are then closed under the operation.
"""

from fractions import Fraction

from hyperbck import (
    FuzzyHyperBCK,
    check_collapse_properties,
    equals_some_alpha_cut,
    validate_fuzzy,
)
from hyperbck.corpus import chain_example

chain = chain_example(3)  # mu(x) = 1/x on the 3-chain
print("membership on the 3-chain:", {lab: str(chain.mu_of(lab)) for lab in "123"})
print("inequality verdict:", validate_fuzzy(chain).passed)

bad = FuzzyHyperBCK.from_map(chain.alg, {"1": 0, "2": 1, "3": 0})
report = validate_fuzzy(bad)
print("\na failing assignment {1:0, 2:1, 3:0}:")
for violation in report.violations:
    print(f"  witness pair {violation.witness}: {violation.detail}")

print("\nlevel sets of the 3-chain:")
for alpha in ("0", "1/3", "1/2", "1"):
    print(f"  alpha = {alpha:>3}: {sorted(chain.alpha_cut(alpha))}")
print("distinct levels:", [str(v) for v in chain.cut_levels()])

print("\nrestriction to the level set at 1/2:")
sub = chain.restrict(chain.alpha_cut("1/2"))
print("  carrier:", sub.alg.carrier.labels, " valid:", validate_fuzzy(sub).passed)

# Which subalgebras are level sets?  With the graded membership, both
# proper subalgebras of the chain are; constant membership breaks the
# pattern: its only non-empty level set is the whole carrier.
print("\nis the subalgebra {1,2} a level set?")
print(" graded mu:", equals_some_alpha_cut(chain, {"1", "2"}))
const = FuzzyHyperBCK.from_map(chain.alg, {"1": "1/2", "2": "1/2", "3": "1/2"})
print(" constant mu:", equals_some_alpha_cut(const, {"1", "2"}))

print("\ncollapse laws:")
print(" constant mu:", check_collapse_properties(const))
print(" graded mu:  ", check_collapse_properties(chain))
zero = FuzzyHyperBCK(chain.alg, (Fraction(0),) * 3)
print(" vanishing mu:", check_collapse_properties(zero))

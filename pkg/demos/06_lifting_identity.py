#!/usr/bin/env python3
"""Walkthrough: the relative-canonical identity over a wedge-source cluster.

The identity (a - b) = M^-1 (c + d) ties the exceptional canonical
coefficients a of the source model to the exceptional relative-canonical
coefficients b, through the horizontal contributions c and the pulled
back target contributions d.  Over a minimal target the right-hand side
is non-positive, so b dominates a; asserting the special b-entry below
one then forces the special a-entry to vanish.
"""

from nasharc import (
    WedgeNumericalModel,
    canonical_coeffs,
    cluster_fixture,
    lifting_verdict,
    solve_b,
    verify_numerical,
)

chain2 = cluster_fixture("chain2")
print("canonical coefficients of the free chain of two:", canonical_coeffs(chain2))

print()
print("== solving for b ==")
model = WedgeNumericalModel(chain2, special=1, c=(0, 0), d=(0, 1), minimal_target=True)
b = solve_b(model)
print("c = (0, 0), d = (0, 1)  ->  b =", tuple(str(v) for v in b))
print("b dominates a entrywise:", all(bi >= ai for ai, bi in zip(model.a, b)))

supplied = WedgeNumericalModel(chain2, 1, (0, 0), (0, 1), b=b, minimal_target=True)
print("round-trip verification:", verify_numerical(supplied))

print()
print("== the lifting argument, in three outcomes ==")

# 1. a transversality assertion incompatible with the computed b
verdict = lifting_verdict(
    WedgeNumericalModel(chain2, 1, (0, 0), (0, 1), minimal_target=True, assert_b1_lt_1=True)
)
print("with canonical a:", "CONTRADICTION" if verdict.contradiction else "ok")
print("  ", verdict.reason)

# 2. no assertion: the identity alone concludes nothing
verdict = lifting_verdict(WedgeNumericalModel(chain2, 1, (0, 0), (0, 1), minimal_target=True))
print("without the assertion: lifts =", verdict.lifts)
print("  ", verdict.reason)

# 3. a vanishing special coefficient is consistent, and the wedge lifts
one_point = cluster_fixture("chain1")
verdict = lifting_verdict(
    WedgeNumericalModel(
        one_point, 0, (0,), (0,), coeffs=(0,), minimal_target=True, assert_b1_lt_1=True
    )
)
print("with a_special = 0: lifts =", verdict.lifts)
print("  ", verdict.reason)

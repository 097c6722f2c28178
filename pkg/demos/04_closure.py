"""
Pushing Gauss maps through the actions
======================================

The right action copies f where rho lands on a pair and puts the south pole
everywhere else; the left action assembles several maps.  For m = 1 the
outputs stay in K_n.  For m = 2 four-consistency survives, through the
cancelling pairs of chain summands, while the nonnegative three-dependence
does not.
"""

from stringlinks.kontsevich import (
    is_three_dependent, right_action_K, sample_gauss_map, verify_action_closure,
    verify_cancellation_pairings,
)

print(verify_action_closure(1, 2, (2, 1), samples=10))

f = sample_gauss_map(4, 4, seed=0)
F = right_action_K(f, 2, (1, 1), 2)
print("F(1,2) =", F(1, 2), " F(2,3) =", F(2, 3), " F(3,1) =", F(3, 1))
print(is_three_dependent(F))

# the twelve chain summands cancel in the pairs the closure argument lists
g = sample_gauss_map(8, 4, seed=0)
print(verify_cancellation_pairings(g, 4, (1, 1, 1, 1), 2, (1, 3, 6, 8), "mixed-rows"))

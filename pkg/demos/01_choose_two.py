"""
The choose-two operad and its realizations
==========================================

B(n) is the set of pairs 1 <= i < j <= n plus a basepoint "+".  Composition
runs backwards: a pair of the big arity is sent either into one of the
inner blocks or, when its ends sit in different blocks, to the outer pair
of block numbers.
"""

from stringlinks import choose_two as B
from stringlinks.phi import FinitePointedSet, realize_operad, verify_operad_axioms

# the six elements of B(4), in the colex order used throughout
print(B.elements(4))

# c = (2, 2): indices 1, 2 form block 1 and 3, 4 form block 2
for e in [(1, 2), (1, 3), (3, 4)]:
    print(e, "mu ->", B.mu(2, (2, 2), e),
          " lambda ->", B.lambda_action(2, (2, 2), e),
          " rho ->", B.rho_action(2, (2, 2), e))

# Maps B(n) -> X into a finite pointed set X turn B into an honest operad of
# finite sets.  Realize it for X = {+, x} and check the axioms exhaustively.
op = realize_operad(FinitePointedSet(2), 3)
print({n: len(sp) for n, sp in op.spaces.items()})
print(verify_operad_axioms(op))

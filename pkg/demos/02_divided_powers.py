"""
Divided powers of B
===================

gamma_m B(n) = B(mn).  Index i of B(mn) is read as block a and row r with
i = (a - 1) m + r, so a pair is a 0/1 matrix with two ones.  The actions
work row by row and kill pairs whose ones sit in different rows.
"""

from stringlinks.divided_powers import (
    encode_matrix, lambda_m, rho_m, verify_bimodule_axioms, verify_unit_on_same_row,
)

m = 2
e = (1, 5)  # block 1 row 1, block 3 row 1
print(encode_matrix(e, m, 3).entries)
print("rho   ->", rho_m(2, (1, 2), m, e))
print("lambda->", lambda_m(2, (1, 2), m, (3, 5)))

# a mixed-row pair: ones in different rows
print(encode_matrix((1, 6), m, 3).entries, "->", rho_m(2, (1, 2), m, (1, 6)))

# Associativity and the commutation of the two sides hold exactly ...
rep = verify_bimodule_axioms(m, 8)
print(rep)

# ... but the unit compositions also kill mixed-row pairs, so the unit law
# only holds on the same-row part.
print(verify_unit_on_same_row(m, 8))

"""
Cosimplicial ladders
====================

Any bimodule over the associative operad gives cofaces (acting by
(1, .., 2, .., 1) and by the outer left actions) and codegeneracies (acting
by (1, .., 0, .., 1)).  Three ladders are built here: exact tables for
gamma_m B, sphere maps for gamma_m K_n, and decorated configurations with
blocks of m points.
"""

from stringlinks.cosimplicial import (
    config_ladder, exact_ladder, numeric_ladder, projection_p_r, verify_cosimplicial_identities,
    verify_projections, verify_single_point_reduction,
)

print(verify_cosimplicial_identities(exact_ladder(1, 4)))

# for m = 2 the codegeneracy after a coface is not the identity
print(verify_cosimplicial_identities(numeric_ladder(2, 4, 2, corpus_size=5)))

lad = config_ladder(1, 3, 3, corpus_size=5)
print(verify_cosimplicial_identities(lad))
print(verify_single_point_reduction(lad))

# with m = 2, projecting to one strand commutes with every structure map
lad2 = config_ladder(2, 3, 2, corpus_size=5)
print(verify_projections(lad2))
dc = lad2.corpus[2][0]
print(dc.config.k, "points ->", projection_p_r(dc, 2, 1).config.k, "points on strand 1")

"""
Gauss maps and the two Kontsevich conditions
============================================

A configuration of k distinct points gives pair vectors
(x_i - x_j) / |x_i - x_j|.  Such maps are three-dependent (each triangle of
vectors has a nonnegative vanishing combination) and four-consistent (a
signed sum over the twelve straight 3-chains of each 4-subset vanishes).
"""

import numpy as np

from stringlinks.kontsevich import (
    distance_witness, gauss_map, is_four_consistent, is_three_dependent, sample_configuration,
    three_dependence_witnesses,
)

c = sample_configuration(5, 3, "cube", min_sep=0.05, seed=0)
f = gauss_map(c)
print(np.round(c.points, 3))

# the solver's coefficients and the closed-form witness from side lengths
w = three_dependence_witnesses(f)[0]
print(w.triple, np.round(w.b, 4), w.residual)
print(distance_witness(c, w.triple))

print(is_three_dependent(f))
print(is_four_consistent(f, mode="tensor"))
print(is_four_consistent(f, mode="probe"))

# reading each chain edge in its direction of travel does not vanish
print(is_four_consistent(f, literal=True))

# a single moved vector breaks the identity
g = f.replace(1, 2, np.array([0.6, 0.0, 0.8]))
print(is_four_consistent(g))

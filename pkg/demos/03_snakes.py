"""
Snakes
======

Every 1 on a phi-orbit board continues either two columns to the right or
one step down and to the right.  Following those steps from column 1 to
column n traces a snake, and one snake's composition rebuilds the orbit.
"""
from pathtoggle import IndependentSet, SnakeComposition, orbit_of, phi
from pathtoggle.snakes import (
    composition_seed,
    format_sizes_table,
    orbit_from_composition,
    orbit_size,
    orbit_sizes_for_n,
    snake_decompose,
)

o = orbit_of(IndependentSet.from_string("1010100"), phi(7))
for sn in snake_decompose(o):
    print(sn.composition, sn.cells)

# one composition determines the whole orbit and its size (3*N1 + 2*N2) / psi
c = SnakeComposition.parse("221121")
rebuilt = orbit_from_composition(c)
print(c, "N1 =", c.N1, "N2 =", c.N2, "size", orbit_size(c), len(rebuilt))
for row in rebuilt.starting_at(composition_seed(c)):
    print(row)

# periodic compositions: 2121 repeats twice, so the orbit is half as long
c = SnakeComposition.parse("2121")
print(c, "psi", c.psi, "size", orbit_size(c))

# orbit sizes straight from compositions of n - 1
print(orbit_sizes_for_n(10))

# which orbit sizes occur, and for which n
print(format_sizes_table(12))

"""
Orbit boards of phi
===================

Toggle every vertex of a path once, left to right, and watch an
independent set travel around its orbit.
"""

from pathtoggle import IndependentSet, all_orbits, orbit_of, phi

# a single application: 10010 -> 01001
s = IndependentSet.from_string("10010")
print(s, "->", phi(5)(s))

# the orbit of 1010100 on seven vertices, printed as a board
start = IndependentSet.from_string("1010100")
o = orbit_of(start, phi(7))
for i, row in enumerate(o.starting_at(start)):
    print(f"S{i:<2}", " ".join(str(row)))
print("sum", " ".join(map(str, o.column_sums)))

# the board is also a plain int8 matrix
print(o.board.shape, o.board.dtype)

# the column sums read the same backwards, on every orbit
for o in all_orbits(7, phi(7)):
    print(len(o), o.column_sums, o.column_sums == o.column_sums[::-1])

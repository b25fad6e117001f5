"""
Promotion and rowmotion on the fence
====================================

Flipping the odd positions of an independent set gives an order ideal of
the zigzag poset, and toggles on one side match toggles on the other.
"""
from pathtoggle import IndependentSet, eta, phi, promotion_word, rowmotion_word
from pathtoggle.orbits import all_orbits
from pathtoggle.zigzag import (
    OrderIdeal,
    all_ideal_orbits,
    check_ideal_homomesy,
    ideal_orbit_of,
    translated_statistics,
)

s = IndependentSet.from_string("1001010")
I = eta(s)
print(s, "->", I, I.elements)
print(I.hasse())

n = 8
phi_sizes = sorted(len(o) for o in all_orbits(n, phi(n)))
for name, w in (("Pro", promotion_word(n)), ("Row", rowmotion_word(n))):
    sizes = sorted(len(o) for o in all_ideal_orbits(n, w))
    print(name, w.pretty(), sizes == phi_sizes)

# rowmotion sends the empty ideal around a triangle
for J in ideal_orbit_of(OrderIdeal(n, 0), rowmotion_word(n)).states:
    print(J)

for name, f, expected in translated_statistics(n):
    print(name, check_ideal_homomesy(n, rowmotion_word(n), f).constant, expected)

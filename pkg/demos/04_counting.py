"""
Counting with Burnside
======================

Closed formulas next to brute-force counts.
"""
from pathtoggle import enumeration as en

print(" n  sets  symm  orbits  reversible")
for n in range(2, 15):
    print(f"{n:>2} {en.count_independent_sets(n):>5} {en.count_symmetrical(n):>5} "
          f"{en.count_phi_orbits(n):>7} {en.count_reversible_orbits(n):>11}")

# orbit counts are necklace counts: cyclic strings without two adjacent 1s
for k in range(1, 13):
    print(k, en.count_necklaces_no11(k), en.oracle_necklaces(k),
          en.count_bracelets_no11(k), en.count_self_reverse_necklaces(k))

# the classes themselves, with the self-reverse ones flagged
for cls in en.necklace_classes(9):
    print(cls.representative, cls.self_reverse)

# without the no-11 restriction
print(en.oracle_necklaces(6, no11=False), en.oracle_bracelets(6, no11=False))

"""
Homomesy under Coxeter elements
===============================

A statistic is homomesic when its average is the same on every orbit.
Averages are exact fractions.
"""
import random

from pathtoggle import Statistic, check_homomesy, phi, random_coxeter

n = 9
x = lambda j: Statistic.indicator(n, j)  # noqa: E731

# mirror-image vertices appear equally often
print(check_homomesy(n, phi(n), x(3) - x(7)).describe())

# the end of the path: 2*chi_1 + chi_2 averages exactly 1
print(check_homomesy(n, phi(n), Statistic.parse("2x1+x2", n)).describe())

# chi_1 alone is not homomesic; the report names two orbits that disagree
rep = check_homomesy(n, phi(n), x(1))
print(rep.describe())
for o, avg in rep.witnesses:
    print("  orbit of", o.states[0], "size", len(o), "average", avg)

# the same statistics keep their constants under any order of toggles
rng = random.Random(1)
for _ in range(5):
    w = random_coxeter(n, rng)
    rep = check_homomesy(n, w, x(3) - x(7))
    print(w.pretty(), rep.constant)

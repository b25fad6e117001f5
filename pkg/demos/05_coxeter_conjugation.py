"""
From any Coxeter element to phi
===============================

A Coxeter word orients the path.  Conjugating by the largest final toggle
flips one sink into a source, and repeating reaches phi.
"""
from pathtoggle import CoxeterWord, IndependentSet, orbit_of, phi, same_action
from pathtoggle.core import coxeter_to_orientation
from pathtoggle.coxeter import conjugated, path_to_phi, verify_orbit_correspondence

w = CoxeterWord.parse("3,4,2,6,7,5,1", 7)
print(w.pretty(), coxeter_to_orientation(w))

path = path_to_phi(w)
print(path.format_trace())
print("u^-1 w u acts as phi:", same_action(conjugated(w, path.conjugator), phi(7)))

# each step maps orbits to orbits with the same column sums
for st in path.steps:
    rep = verify_orbit_correspondence(st.before, st.k)
    print(f"t{st.k}: {rep.orbit_count} orbits carried over, ok={rep.ok}")

# so the w-orbit of 1010010 looks like the phi-orbit of 1010100, columns slid
a = orbit_of(IndependentSet.from_string("1010010"), w)
b = orbit_of(IndependentSet.from_string("1010100"), phi(7))
print(len(a), a.column_sums)
print(len(b), b.column_sums)

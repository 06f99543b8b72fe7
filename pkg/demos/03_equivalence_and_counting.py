"""
Equivalence classes and how many there are
==========================================

Two LRS codes with the same twist are equivalent when their norm sets differ by
a scalar of F_q^*.  Counting the orbits of that scaling action counts classes.
"""

import itertools

from lrscodes.codes import LrsParams, lrs_generator
from lrscodes.counting import burnside_orbits, count_inequivalent_lrs, enumerate_orbits
from lrscodes.equivalence import lrs_equivalent
from lrscodes.ff import tower
from lrscodes.geometry import brute_force_equivalent

F = tower(7, 1, 2)


def by_norms(values):
    return LrsParams(2, 1, tuple(F.norm_preimage(F.parse(str(v))) for v in values))


d = lrs_equivalent(F, by_norms((1, 2, 4)), by_norms((3, 5, 6)))
print(d.verdict.value, "xi =", F.residue(d.xi), "sigma =", d.sigma)
print(lrs_equivalent(F, by_norms((1, 2, 4)), by_norms((1, 5, 6))).verdict.value)

# sort all twenty norm sets into classes
reps = []
for A in itertools.combinations(range(1, 7), 3):
    P = by_norms(A)
    if not any(lrs_equivalent(F, P, R).equivalent for R in reps):
        reps.append(P)
print(len(reps), "classes")

# same number from the orbit enumeration and from Burnside
part = enumerate_orbits(7, 3)
print(len(part), "orbits, sizes", [len(o) for o in part.orbits], "burnside", burnside_orbits(7, 3))

# the brute-force isometry search agrees on a small case
F9 = tower(3, 1, 2)
a, b = (F9.norm_preimage(v) for v in F9.subfield_elements())
C, D = lrs_generator(F9, LrsParams(2, 1, (a, b))), lrs_generator(F9, LrsParams(2, 1, (b, a)))
print("isometry found:", brute_force_equivalent(C, D) is not None)

# counts at full scale
r = count_inequivalent_lrs(25, 12, "m", "m")
print("q=25 t=12:", r.f, "->", r.final_count)
print("same with k=2, m=7:", count_inequivalent_lrs(25, 12, 2, 7).final_count)

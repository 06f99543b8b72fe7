"""
Linearized Reed-Solomon codes
=============================

Build an LRS code, compute its minimum sum-rank distance two ways, and compare
with the Singleton bound.
"""

from lrscodes.codes import LrsParams, gabidulin_generator, is_mrd, is_msrd, lrs_generator, min_distance_exhaustive
from lrscodes.ff import tower
from lrscodes.geometry import min_distance_geometric, system_from_code

F = tower(3, 1, 2)  # F_9 over F_3

# one alpha per block, with distinct norms 1 and 2
alpha = tuple(F.norm_preimage(v) for v in F.subfield_elements())
C = lrs_generator(F, LrsParams(k=2, s=1, alpha=alpha))
print("blocks", C.blocks, "k", C.k)
for row in C.G:
    print(" ", [F.fmt(x) for x in row])

d = min_distance_exhaustive(C)
print("d =", d, " N-k+1 =", C.N - C.k + 1, " MSRD:", is_msrd(C, d))

# the q-system view gives the same number by counting hyperplane intersections
print("geometric d =", min_distance_geometric(system_from_code(C)))

# a single block with alpha = 1 is a Gabidulin code
F8 = tower(2, 1, 3)
G = gabidulin_generator(F8, F8.fq_basis(), 2)
print("Gabidulin d =", min_distance_exhaustive(G), " MRD:", is_mrd(G))

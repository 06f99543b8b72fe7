"""
Field towers and norms
======================

Elements are discrete logs: 0 is zero and i >= 1 stands for g^(i-1).
"""

from lrscodes.ff import tower

# F_49 over F_7, with the lowest irreducible modulus and lowest primitive element
F = tower(7, 1, 2)
print(F)
print("subfield step", F.subfield_step)  # F_7^* = powers of g^8

g = F.gen_power(1)
print("g^q =", F.fmt(F.frobenius(g, 1)))
print("N(g) =", F.fmt(F.norm(g)), "= residue", F.residue(F.norm(g)))

# the norm is onto F_7^* with fibres of equal size
fibres = {}
for x in F.nonzero():
    fibres.setdefault(F.residue(F.norm(x)), []).append(x)
print({v: len(xs) for v, xs in sorted(fibres.items())})

# truncated norms: N^0 = 1, N^1 = x, N^m = N
x = F.gen_power(5)
print([F.fmt(F.truncated_norm(x, 1, j)) for j in range(3)], F.fmt(F.norm(x)))

# vectorised power map over the whole field
import numpy as np

xs = np.arange(F.order)
print(np.unique(F.v_pow(xs, 8)).size, "distinct values of x^8")

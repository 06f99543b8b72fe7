"""Slow, independent reference computations used to check the library."""

from __future__ import annotations

import itertools
from math import gcd


class PolyField:
    """F_{p^n} as polynomial vectors mod a modulus; no tables, no logs."""

    def __init__(self, p: int, modulus: tuple[int, ...]):
        self.p, self.f, self.n = p, tuple(modulus), len(modulus) - 1

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def mul(self, x, y):
        p, n, f = self.p, self.n, self.f
        prod = [0] * (2 * n - 1) if n else []
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                prod[i + j] = (prod[i + j] + a * b) % p
        for deg in range(len(prod) - 1, n - 1, -1):
            c = prod[deg]
            if c:
                for i in range(n + 1):
                    prod[deg - n + i] = (prod[deg - n + i] - c * f[i]) % p
        return tuple(prod[:n])

    def pow(self, x, e):
        out = tuple([1] + [0] * (self.n - 1))
        for _ in range(e):
            out = self.mul(out, x)
        return out


def fp_rank_naive(rows: list[list[int]], p: int) -> int:
    """Textbook elimination over F_p on explicit digit rows."""
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [v * inv % p for v in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                k = M[r][c]
                M[r] = [(a - k * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def fq_rank_naive(F, xs) -> int:
    """dim over F_q of span(xs), counting the span's elements directly."""
    span = {0}
    for x in xs:
        span |= {F.add(u, F.mul(c, x)) for u in span for c in F.subfield_elements()}
    size, d = len(span), 0
    while F.q**d < size:
        d += 1
    assert F.q**d == size
    return d


def min_distance_full(C) -> int:
    """Every nonzero message (not only one per line), weights by span counting."""
    F = C.tower
    best = None
    for msg in itertools.product(range(F.order), repeat=C.k):
        if not any(msg):
            continue
        word = C.encode(msg)
        w, pos = 0, 0
        for n in C.blocks:
            w += fq_rank_naive(F, word[pos : pos + n])
            pos += n
        best = w if best is None else min(best, w)
    return best


def orbits_by_sets(q: int, t: int, residues=None):
    """Orbits of F_q^* (q prime) on t-subsets, acting by actual multiplication mod q."""
    units = list(range(1, q))
    seen, orbits = set(), []
    for A in itertools.combinations(units, t):
        if A in seen:
            continue
        orb = {tuple(sorted(x * a % q for a in A)) for x in units}
        seen |= orb
        orbits.append(frozenset(orb))
    return set(orbits)


def burnside_by_fixed_points(n: int, t: int) -> int:
    """(1/n) sum over shifts c of the number of t-subsets of Z_n fixed by +c."""
    total = 0
    for c in range(n):
        cyc = gcd(c, n)  # +c splits Z_n into cyc cycles of length n/cyc
        length = n // cyc
        if t % length == 0:
            from math import comb

            total += comb(cyc, t // length)
    assert total % n == 0
    return total // n

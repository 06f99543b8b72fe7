"""Orbits of F_q^* acting on t-subsets of F_q^* by scaling, and the LRS class count.

F_q^* is modelled as Z_{q-1} through discrete logs, so the action becomes
translation of exponent sets.  Nothing here needs q to be a prime power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapExceededError, InvariantViolation, ParameterError

DEFAULT_ORBIT_CAP = 1 << 20


def euler_phi(n: int) -> int:
    if n < 1:
        raise ParameterError("euler_phi needs n >= 1")
    result, rest, f = n, n, 2
    while f * f <= rest:
        if rest % f == 0:
            while rest % f == 0:
                rest //= f
            result -= result // f
        f += 1
    if rest > 1:
        result -= result // rest
    return result


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ParameterError("divisors needs n >= 1")
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _check_qt(q: int, t: int) -> None:
    if q < 2:
        raise ParameterError(f"q must be at least 2, got {q}")
    if not 1 <= t <= q - 1:
        raise ParameterError(f"t must satisfy 1 <= t <= q-1 = {q - 1}, got {t}")


def psi(k: int, m: int) -> Fraction:
    """phi(m)/2 when 1 < k <= m-2, and 1 when k is m-1 or m."""
    if not 1 < k <= m:
        raise ParameterError(f"psi needs 1 < k <= m, got k={k}, m={m}")
    if k <= m - 2:
        return Fraction(euler_phi(m), 2)
    return Fraction(1)


def f_table(q: int, t: int) -> dict[int, int]:
    """f_d = number of t-subsets whose stabilizer is exactly C_d, for d | gcd(q-1, t).

    Filled from the largest divisor down: f_d = C((q-1)/d, t/d) - sum of f_d' over proper multiples d'.
    """
    _check_qt(q, t)
    g = math.gcd(q - 1, t)
    f: dict[int, int] = {}
    for d in reversed(divisors(g)):
        above = sum(f[e] for e in f if e % d == 0)
        f[d] = math.comb((q - 1) // d, t // d) - above
    return dict(sorted(f.items()))


def count_orbits(q: int, t: int) -> int:
    total = 0
    for d, fd in f_table(q, t).items():
        size = (q - 1) // d
        if fd % size:
            raise InvariantViolation(f"f_{d} = {fd} not divisible by orbit size {size}")
        total += fd // size
    return total


def burnside_orbits(q: int, t: int) -> int:
    """Cauchy-Frobenius count: (1/(q-1)) sum_{d | gcd(q-1,t)} phi(d) C((q-1)/d, t/d)."""
    _check_qt(q, t)
    g = math.gcd(q - 1, t)
    fixed = sum(euler_phi(d) * math.comb((q - 1) // d, t // d) for d in divisors(g))
    total, rem = divmod(fixed, q - 1)
    if rem:
        raise InvariantViolation("Burnside sum not divisible by the group order")
    return total


@dataclass
class OrbitReport:
    q: int
    t: int
    k: int | str
    m: int | str
    divisors: list[int]
    f: dict[int, int]
    orbits_per_d: dict[int, int]
    total_orbits: int
    psi: Fraction
    final_count: int

    @property
    def psi_numerator(self) -> int:
        return self.psi.numerator

    @property
    def psi_denominator(self) -> int:
        return self.psi.denominator

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "t": self.t,
            "k": self.k,
            "m": self.m,
            "divisors": self.divisors,
            "f": {str(d): v for d, v in self.f.items()},
            "orbits_per_d": {str(d): v for d, v in self.orbits_per_d.items()},
            "total_orbits": self.total_orbits,
            "psi_numerator": self.psi_numerator,
            "psi_denominator": self.psi_denominator,
            "final_count": self.final_count,
        }


def _psi_any(k: int | str, m: int | str) -> Fraction:
    if isinstance(m, str) or isinstance(k, str):
        if k in ("m", "m-1") and (m == "m" or isinstance(m, int)):
            if isinstance(m, int):
                kk = m if k == "m" else m - 1
                return psi(kk, m)
            return Fraction(1)
        raise ParameterError("symbolic m needs k = 'm' or 'm-1'")
    return psi(k, m)


def count_inequivalent_lrs(q: int, t: int, k: int | str, m: int | str) -> OrbitReport:
    """psi(k, m) * (number of scaling orbits on t-subsets of F_q^*).

    ``k`` may be the string 'm' or 'm-1' and ``m`` the string 'm' when the
    count is wanted for every m at once (psi is then 1).
    """
    factor = _psi_any(k, m)
    f = f_table(q, t)
    per_d = {d: fd // ((q - 1) // d) for d, fd in f.items()}
    total = count_orbits(q, t)
    final = factor * total
    if final.denominator != 1:
        raise InvariantViolation(f"psi * orbits = {final} is not an integer")
    if sum(f.values()) != math.comb(q - 1, t):
        raise InvariantViolation("f_d do not sum to C(q-1, t)")
    return OrbitReport(q, t, k, m, list(f), f, per_d, total, factor, int(final))


# -- explicit orbits ----------------------------------------------------------------


@dataclass
class OrbitPartition:
    """Orbits of t-subsets of Z_{q-1} (exponent sets) under translation."""

    q: int
    t: int
    orbits: list[list[tuple[int, ...]]] = field(default_factory=list)

    @property
    def representatives(self) -> list[tuple[int, ...]]:
        return [orb[0] for orb in self.orbits]

    def stabilizer_orders(self) -> list[int]:
        return [(self.q - 1) // len(orb) for orb in self.orbits]

    def __len__(self) -> int:
        return len(self.orbits)


def translate(A: tuple[int, ...], c: int, n: int) -> tuple[int, ...]:
    return tuple(sorted((a + c) % n for a in A))


def enumerate_orbits(q: int, t: int, cap: int = DEFAULT_ORBIT_CAP) -> OrbitPartition:
    """Explicit partition; orbits listed by lexicographically smallest member, members sorted."""
    import itertools

    _check_qt(q, t)
    total = math.comb(q - 1, t)
    if total > cap:
        raise CapExceededError(f"C({q - 1}, {t}) = {total} subsets exceed cap {cap}")
    n = q - 1
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for A in itertools.combinations(range(n), t):
        if A in seen:
            continue
        orb = sorted({translate(A, c, n) for c in range(n)})
        seen.update(orb)
        orbits.append(orb)
    return OrbitPartition(q, t, orbits)


def stabilizer(A: tuple[int, ...], n: int) -> list[int]:
    """Shifts c in Z_n with A + c = A."""
    S = set(A)
    return [c for c in range(n) if all((a + c) % n in S for a in A)]


def coset_decomposition(A: tuple[int, ...], n: int, d: int) -> list[int] | None:
    """Coset leaders a_1, ... with A = union of a_i + C_d, or None when impossible.

    C_d is the order-d subgroup, i.e. the multiples of n/d in Z_n.
    """
    if n % d or len(A) % d:
        return None
    step = n // d
    left = set(A)
    leaders = []
    for a in sorted(A):
        if a not in left:
            continue
        coset = {(a + j * step) % n for j in range(d)}
        if not coset <= left:
            return None
        left -= coset
        leaders.append(a)
    return leaders


def verify_coset_lemma(A: tuple[int, ...], q: int, d: int) -> bool:
    """C_d <= stab(A) iff A splits into cosets of C_d (both sides computed directly)."""
    n = q - 1
    if n % d:
        raise ParameterError(f"d={d} does not divide q-1={n}")
    stab = set(stabilizer(tuple(A), n))
    contains = all(j * (n // d) % n in stab for j in range(d))
    return contains == (coset_decomposition(tuple(A), n, d) is not None)

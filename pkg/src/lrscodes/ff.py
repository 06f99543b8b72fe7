"""Finite-field towers F_q < F_{q^m} with discrete-log (Zech) tables.

Elements are plain ints: ``0`` is zero and ``i >= 1`` stands for ``g**(i-1)``
where ``g`` is the tower's fixed primitive element.  The base field F_q is the
subgroup ``{g**(j*step)}`` of index ``step = (q^m - 1)/(q - 1)`` together with
zero.

    >>> F = build_tower(FieldSpec(p=3, a=1, m=2))
    >>> F.subfield_step
    4
    >>> F.fmt(F.norm(F.parse("g^1"), 1))
    'g^4'
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, ParameterError

Elt = int

DEFAULT_FIELD_CAP = 1 << 24
_CHUNK = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (n >= 1)."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, a) with q = p**a, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    ((p, a),) = fac.items()
    return p, a


# -- polynomials over F_p, coefficient lists low -> high -------------------------


def _poly_rem(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return a[:df] + [0] * max(0, df - len(a))


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_rem(prod, f, p)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _digits(x: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        x, r = divmod(x, p)
        out.append(r)
    return out


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    n = len(f) - 1
    if n < 1 or f[-1] % p == 0:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(list(f), list(low) + [1], p)):
                return False
    return True


def lowest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n, ordered by sum(c_i p^i) of the low coefficients."""
    for code in range(p**n):
        f = _digits(code, p, n) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- the tower ---------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """F_q < F_{q^m} with q = p**a.  ``modulus`` has degree a*m, low -> high."""

    p: int
    a: int = 1
    m: int = 1
    modulus: tuple[int, ...] | None = None
    cap: int = DEFAULT_FIELD_CAP

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def order(self) -> int:
        return self.p ** (self.a * self.m)


class FieldTower:
    """Table-driven arithmetic in F_{q^m} with F_q as a marked subfield.

    Immutable after construction; use :func:`build_tower`.
    """

    def __init__(self, spec: FieldSpec) -> None:
        p, a, m = spec.p, spec.a, spec.m
        if not isinstance(p, int) or not is_prime(p):
            raise ParameterError(f"p must be prime, got {p}")
        if a < 1 or m < 1:
            raise ParameterError("a and m must be positive")
        n = a * m
        order = p**n
        if order > spec.cap:
            raise CapExceededError(f"field size {p}^{n} = {order} exceeds cap {spec.cap}")
        if spec.modulus is None:
            modulus = lowest_irreducible(p, n)
        else:
            modulus = tuple(int(c) % p for c in spec.modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ParameterError(f"modulus must be monic of degree {n}")
            if not is_irreducible(modulus, p):
                raise ParameterError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.spec = FieldSpec(p, a, m, modulus, spec.cap)
        self.p, self.a, self.m, self.n = p, a, m, n
        self.q = p**a
        self.order = order
        self.modulus = modulus
        self.subfield_step = (order - 1) // (self.q - 1)
        self.generator = self._find_primitive()
        self._build_tables()

    # construction ------------------------------------------------------------

    def _find_primitive(self) -> int:
        p, n, f = self.p, self.n, self.modulus
        if self.order == 2:
            return 1
        primes = list(factorize(self.order - 1))
        one = [1] + [0] * (n - 1)
        for cand in range(2, self.order):
            poly = _digits(cand, p, n)
            if all(_poly_powmod(poly, (self.order - 1) // r, f, p) != one for r in primes):
                return cand
        raise AssertionError("no primitive element")  # pragma: no cover

    def _mul_matrix(self, elem: int) -> np.ndarray:
        """Matrix M with digits(h * elem) = digits(h) @ M (mod p)."""
        p, n, f = self.p, self.n, self.modulus
        g = _digits(elem, p, n)
        rows = []
        for j in range(n):
            xj = [0] * j + [1]
            rows.append(_poly_mulmod(xj, g, f, p) if n > 0 else [])
        return np.array(rows, dtype=np.int64).reshape(n, n)

    def _build_tables(self) -> None:
        p, n, size = self.p, self.n, self.order - 1
        weights = p ** np.arange(n, dtype=np.int64)
        exp = np.zeros(size, dtype=np.int64)
        exp[0] = 1
        filled = 1
        mat = self._mul_matrix(self.generator)
        while filled < size:
            cnt = min(filled, size - filled)
            for lo in range(0, cnt, _CHUNK):
                hi = min(cnt, lo + _CHUNK)
                block = (exp[lo:hi, None] // weights) % p
                exp[filled + lo : filled + hi] = ((block @ mat) % p) @ weights
            filled += cnt
            mat = (mat @ mat) % p
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(size, dtype=np.int64)
        d0 = exp % p
        plus_one = exp - d0 + (d0 + 1) % p
        zech = np.where(plus_one == 0, -1, log[plus_one])
        self._exp_arr, self._log_arr, self._zech_arr = exp, log, zech
        # memoryviews index to plain Python ints, which keeps scalar paths fast
        self._exp = memoryview(exp)
        self._log = memoryview(log)
        self._zech = memoryview(zech)
        # q^i mod size, kept in 1..size so that 0 stays a fixed point of x -> x^e
        self._qpow = [pow(self.q, i, size) or size for i in range(self.m)]
        self._neg_shift = 0 if p == 2 else size // 2

    # basic arithmetic ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldTower(F_{self.order} / F_{self.q}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldTower) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def gen_power(self, k: int) -> Elt:
        """The element g**k."""
        return k % (self.order - 1) + 1

    def log(self, x: Elt) -> int:
        if x == 0:
            raise ZeroDivisionError("log of zero")
        return x - 1

    def add(self, x: Elt, y: Elt) -> Elt:
        if x == 0:
            return y
        if y == 0:
            return x
        size = self.order - 1
        z = self._zech[(y - x) % size]
        if z < 0:
            return 0
        return (x - 1 + z) % size + 1

    def neg(self, x: Elt) -> Elt:
        if x == 0 or self._neg_shift == 0:
            return x
        return (x - 1 + self._neg_shift) % (self.order - 1) + 1

    def sub(self, x: Elt, y: Elt) -> Elt:
        return self.add(x, self.neg(y))

    def mul(self, x: Elt, y: Elt) -> Elt:
        if x == 0 or y == 0:
            return 0
        return (x + y - 2) % (self.order - 1) + 1

    def inv(self, x: Elt) -> Elt:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return (1 - x) % (self.order - 1) + 1

    def div(self, x: Elt, y: Elt) -> Elt:
        return self.mul(x, self.inv(y))

    def pow(self, x: Elt, e: int) -> Elt:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return ((x - 1) * e) % (self.order - 1) + 1

    def sum(self, xs: Iterable[Elt]) -> Elt:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def dot(self, u: Sequence[Elt], v: Sequence[Elt]) -> Elt:
        acc = 0
        for x, y in zip(u, v):
            if x and y:
                acc = self.add(acc, (x + y - 2) % (self.order - 1) + 1)
        return acc

    def scale(self, c: Elt, v: Sequence[Elt]) -> tuple[Elt, ...]:
        return tuple(self.mul(c, x) for x in v)

    def vadd(self, u: Sequence[Elt], v: Sequence[Elt]) -> tuple[Elt, ...]:
        return tuple(self.add(x, y) for x, y in zip(u, v))

    # Frobenius and norms -------------------------------------------------------

    def _check_twist(self, s: int) -> None:
        if math.gcd(s, self.m) != 1:
            raise ParameterError(f"twist s={s} is not coprime to m={self.m}")

    def frobenius_exponent(self, e: int) -> int:
        """q**(e mod m) reduced mod q^m - 1."""
        return self._qpow[e % self.m]

    def frobenius(self, x: Elt, s: int, j: int = 1) -> Elt:
        """x ** (q ** (s*j)), with s*j taken mod m."""
        if x == 0:
            return 0
        return self.pow(x, self._qpow[(s * j) % self.m])

    def _norm_exponent(self, s: int, j: int) -> int:
        size = self.order - 1
        return sum(self._qpow[(s * i) % self.m] for i in range(j)) % size

    def norm(self, x: Elt, s: int = 1) -> Elt:
        """Product of the m conjugates x^(q^(s i)); lands in F_q."""
        self._check_twist(s)
        if x == 0:
            return 0
        return self.pow(x, self._norm_exponent(s, self.m))

    def truncated_norm(self, x: Elt, s: int, j: int) -> Elt:
        """Product of the first j conjugates x^(q^(s i)), i < j; equals 1 for j = 0."""
        if j < 0:
            raise ParameterError("truncated norm index must be non-negative")
        self._check_twist(s)
        if j == 0:
            return 1
        if x == 0:
            return 0
        return self.pow(x, self._norm_exponent(s, j))

    def norm_preimage(self, value: Elt, s: int = 1) -> Elt:
        """Smallest-index element whose norm is ``value`` (a nonzero F_q element)."""
        if not self.is_in_subfield(value) or value == 0:
            raise ParameterError(f"{self.fmt(value)} is not a nonzero base-field element")
        for x in self.nonzero():
            if self.norm(x, s) == value:
                return x
        raise AssertionError("norm is surjective")  # pragma: no cover

    # the base field ----------------------------------------------------------

    def subfield_elements(self) -> list[Elt]:
        """F_q^* in the order g^0, g^step, g^(2 step), ..."""
        return [j * self.subfield_step + 1 for j in range(self.q - 1)]

    def base_field(self) -> list[Elt]:
        return [0] + self.subfield_elements()

    def is_in_subfield(self, x: Elt) -> bool:
        return x == 0 or (x - 1) % self.subfield_step == 0

    # coordinates over F_p ------------------------------------------------------

    def to_int(self, x: Elt) -> int:
        """Polynomial-basis encoding sum(c_i p^i)."""
        return 0 if x == 0 else self._exp[x - 1]

    def from_int(self, v: int) -> Elt:
        if not 0 <= v < self.order:
            raise ParameterError(f"{v} is not a field element encoding")
        return 0 if v == 0 else self._log[v] + 1

    def digits(self, x: Elt) -> list[int]:
        return _digits(self.to_int(x), self.p, self.n)

    def fp_rank(self, xs: Iterable[Elt]) -> int:
        from .linalg import fp_rank

        return fp_rank([self.to_int(x) for x in xs], self.p, self.n)

    def fq_rank(self, xs: Iterable[Elt]) -> int:
        """dim over F_q of the F_q-span of xs."""
        xs = list(xs)
        if self.a == 1:
            return self.fp_rank(xs)
        omega = self.subfield_step + 1
        powers = [self.pow(omega, j) for j in range(self.a)]
        expanded = [self.mul(c, x) for x in xs for c in powers]
        r = self.fp_rank(expanded)
        assert r % self.a == 0
        return r // self.a

    def fq_basis(self) -> tuple[Elt, ...]:
        """(1, g, ..., g^(m-1)), an F_q-basis of F_{q^m}."""
        return tuple(self.gen_power(i) for i in range(self.m))

    # text form -------------------------------------------------------------

    def fmt(self, x: Elt) -> str:
        return "0" if x == 0 else f"g^{x - 1}"

    def parse(self, text: str) -> Elt:
        """Parse ``0``, ``g^k`` or an integer residue r < p (the constant r)."""
        t = text.strip().replace(" ", "")
        if t.startswith("g^"):
            try:
                return self.gen_power(int(t[2:]))
            except ValueError:
                raise ParameterError(f"bad element {text!r}") from None
        if t == "g":
            return self.gen_power(1)
        try:
            r = int(t)
        except ValueError:
            raise ParameterError(f"bad element {text!r}: use 0, g^k or a residue < p") from None
        if not 0 <= r < self.p:
            raise ParameterError(f"residue {r} out of range for p={self.p}; use g^k syntax")
        return self.from_int(r)

    def residue(self, x: Elt) -> int | None:
        """Integer value of x when x lies in the prime field, else None."""
        v = self.to_int(x)
        return v if v < self.p else None

    # vectorised helpers (numpy int64 arrays of element indices) ---------------

    def v_mul(self, x: np.ndarray, y: np.ndarray | int) -> np.ndarray:
        size = self.order - 1
        out = (np.asarray(x) + np.asarray(y) - 2) % size + 1
        return np.where((np.asarray(x) == 0) | (np.asarray(y) == 0), 0, out)

    def v_pow(self, x: np.ndarray, e: int) -> np.ndarray:
        x = np.asarray(x)
        size = self.order - 1
        out = ((x - 1) * (e % size)) % size + 1
        return np.where(x == 0, 0 if e else 1, out)

    def v_add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
        size = self.order - 1
        z = self._zech_arr[(y - x) % size]
        out = np.where(z < 0, 0, (x - 1 + z) % size + 1)
        out = np.where(x == 0, y, out)
        return np.where(y == 0, x, out)


def build_tower(spec: FieldSpec) -> FieldTower:
    return FieldTower(spec)


def tower(p: int, a: int = 1, m: int = 1, **kw) -> FieldTower:
    """Shorthand for ``build_tower(FieldSpec(p, a, m, ...))``."""
    return FieldTower(FieldSpec(p, a, m, **kw))


def tower_for_q(q: int, m: int, **kw) -> FieldTower:
    pa = prime_power(q)
    if pa is None:
        raise ParameterError(f"q must be a prime power, got {q}")
    return tower(pa[0], pa[1], m, **kw)

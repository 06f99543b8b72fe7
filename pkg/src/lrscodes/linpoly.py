"""Linearized (q^s-)polynomials over F_{q^m}.

A q^s-polynomial ``L(x) = sum_i c_i x^(q^(s i))`` is stored reduced modulo
``x^(q^(sm)) - x``, i.e. as exactly m coefficients.  Kernel and image
dimensions come from exhaustive (vectorised) evaluation; the Dickson matrix
gives the same image dimension through its rank.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ParameterError
from .ff import Elt, FieldTower


@dataclass(frozen=True)
class LinearizedPoly:
    tower: FieldTower
    coeffs: tuple[Elt, ...]
    s: int = 1

    def __post_init__(self) -> None:
        F = self.tower
        if math.gcd(self.s, F.m) != 1:
            raise ParameterError(f"twist s={self.s} is not coprime to m={F.m}")
        reduced = [0] * F.m
        for i, c in enumerate(self.coeffs):
            if not 0 <= c < F.order:
                raise ParameterError(f"coefficient {c} is not an element of {F}")
            reduced[i % F.m] = F.add(reduced[i % F.m], c)
        object.__setattr__(self, "coeffs", tuple(reduced))
        object.__setattr__(self, "s", self.s % F.m if F.m > 1 else self.s)

    @classmethod
    def identity(cls, F: FieldTower, s: int = 1) -> LinearizedPoly:
        return cls(F, (1,), s)

    @classmethod
    def zero(cls, F: FieldTower, s: int = 1) -> LinearizedPoly:
        return cls(F, (), s)

    @property
    def degree(self) -> int | None:
        """q^s-degree; None for the zero polynomial."""
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x: Elt) -> Elt:
        return evaluate(self, x)

    def eval_all(self) -> np.ndarray:
        """Values L(x) for every x in F_{q^m}, indexed by element."""
        F = self.tower
        xs = np.arange(F.order, dtype=np.int64)
        acc = np.zeros(F.order, dtype=np.int64)
        for i, c in enumerate(self.coeffs):
            if c:
                term = F.v_pow(xs, F.frobenius_exponent(self.s * i))
                acc = F.v_add(acc, F.v_mul(term, c))
        return acc


def evaluate(L: LinearizedPoly, x: Elt) -> Elt:
    F = L.tower
    if not 0 <= x < F.order:
        raise ParameterError(f"{x} is not an element of {F}")
    acc = 0
    for i, c in enumerate(L.coeffs):
        if c:
            acc = F.add(acc, F.mul(c, F.frobenius(x, L.s, i)))
    return acc


def _log_q(F: FieldTower, count: int) -> int:
    d = round(math.log(count, F.q))
    assert F.q**d == count, "subspace size is not a power of q"
    return d


def kernel_dim(L: LinearizedPoly) -> int:
    vals = L.eval_all()
    return _log_q(L.tower, int(np.count_nonzero(vals == 0)))


def image_dim(L: LinearizedPoly) -> int:
    vals = L.eval_all()
    return _log_q(L.tower, len(np.unique(vals)))


@dataclass(frozen=True)
class DicksonMatrix:
    entries: linalg.Matrix
    source: LinearizedPoly

    @property
    def rank(self) -> int:
        return linalg.rank(self.source.tower, self.entries)


def dickson(L: LinearizedPoly) -> DicksonMatrix:
    """m x m matrix whose row i+1 is row i shifted right cyclically, entries raised to q^s."""
    F, m, s = L.tower, L.tower.m, L.s
    rows = [tuple(L.coeffs)]
    for _ in range(1, m):
        prev = rows[-1]
        shifted = (prev[-1],) + prev[:-1]
        rows.append(tuple(F.frobenius(c, s) for c in shifted))
    return DicksonMatrix(tuple(rows), L)


def is_invertible(L: LinearizedPoly) -> bool:
    return dickson(L).rank == L.tower.m


def twist_by_alpha(F: FieldTower, coeffs: Sequence[Elt], alpha: Elt, s: int = 1) -> LinearizedPoly:
    """F_alpha: coefficient i multiplied by the i-th truncated norm of alpha.

    Coefficients are twisted before reduction mod x^(q^(sm)) - x.
    """
    if alpha == 0:
        raise ParameterError("alpha must be nonzero")
    twisted = [F.mul(c, F.truncated_norm(alpha, s, i)) for i, c in enumerate(coeffs)]
    return LinearizedPoly(F, tuple(twisted), s)


def all_polys(F: FieldTower, s: int = 1):
    """Every element of the reduced algebra (q^(m*m) of them)."""
    for cs in itertools.product(range(F.order), repeat=F.m):
        yield LinearizedPoly(F, cs, s)

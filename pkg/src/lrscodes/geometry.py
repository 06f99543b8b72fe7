"""q-systems: the geometric view of sum-rank codes, plus exhaustive isometry and stabilizer search.

A non-degenerate code with generator ``G = (G_1 | ... | G_t)`` corresponds to
the tuple of F_q-spans of the block columns.  The weight of ``vG`` is
``N - sum_i dim(U_i & v^perp)``; here the intersection dimensions are obtained
by counting points, independently of the rank computations in :mod:`codes`.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from . import linalg
from .codes import BlockCode, projective_messages, split_blocks
from .errors import CapExceededError, InvariantViolation, ParameterError
from .ff import Elt, FieldTower
from .linpoly import all_polys, dickson, is_invertible

Vector = tuple[Elt, ...]

DEFAULT_HYPERPLANE_CAP = 1 << 20
DEFAULT_ISOMETRY_LIMIT = 1 << 24
DEFAULT_GL_LIMIT = 1 << 16


def fq_span(F: FieldTower, basis: Sequence[Vector], k: int | None = None) -> list[Vector]:
    """Every F_q-combination of the basis vectors (q^len(basis) points)."""
    if k is None:
        k = len(basis[0])
    pts: list[Vector] = [(0,) * k]
    scalars = F.subfield_elements()
    for b in basis:
        multiples = [F.scale(c, b) for c in scalars]
        pts = pts + [F.vadd(p, mb) for p in pts for mb in multiples]
    return pts


@dataclass(frozen=True)
class QSystem:
    """Tuple of F_q-subspaces U_1, ..., U_t of F_{q^m}^k, each given by an F_q-basis."""

    tower: FieldTower
    k: int
    bases: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        F = self.tower
        for i, B in enumerate(self.bases):
            if any(len(v) != self.k for v in B):
                raise ParameterError(f"space {i}: vectors must have length k={self.k}")
            if linalg.fq_rank_vectors(F, B) != len(B):
                raise ParameterError(f"space {i}: basis vectors are F_q-dependent")
        allvecs = [v for B in self.bases for v in B]
        if linalg.rank(F, allvecs) != self.k:
            raise ParameterError("spaces do not span F_{q^m}^k over F_{q^m}")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(B) for B in self.bases)

    @property
    def N(self) -> int:
        return sum(self.dims)

    @cached_property
    def points(self) -> tuple[tuple[Vector, ...], ...]:
        return tuple(tuple(fq_span(self.tower, B, self.k)) for B in self.bases)

    def point_sets(self) -> tuple[frozenset[Vector], ...]:
        return tuple(frozenset(P) for P in self.points)


def system_from_code(C: BlockCode) -> QSystem:
    if not C.nondegenerate:
        raise ParameterError("code is degenerate: some block has F_q-dependent columns")
    return QSystem(C.tower, C.k, tuple(tuple(cols) for cols in C.block_columns()))


def code_from_system(U: QSystem) -> BlockCode:
    """Generator whose block-i columns are the basis of U_i."""
    cols = [v for B in U.bases for v in B]
    return BlockCode(U.tower, U.dims, linalg.transpose(cols))


def gabidulin_system(F: FieldTower, k: int, s: int = 1, S: Sequence[Elt] | None = None) -> QSystem:
    """{(x, x^(q^s), ..., x^(q^(s(k-1)))) : x in S}, S = F_{q^m} by default."""
    S = F.fq_basis() if S is None else tuple(S)
    return QSystem(F, k, (tuple(tuple(F.frobenius(b, s, i) for i in range(k)) for b in S),))


def _intersection_dim(F: FieldTower, points: Sequence[Vector], v: Sequence[Elt]) -> int:
    hits = sum(1 for u in points if F.dot(v, u) == 0)
    d = round(math.log(hits, F.q))
    assert F.q**d == hits
    return d


def weight_geometric(U: QSystem, v: Sequence[Elt]) -> int:
    """N - sum_i dim_{F_q}(U_i & v^perp), by point counting."""
    if not any(v):
        raise ParameterError("v must be nonzero")
    F = U.tower
    return U.N - sum(_intersection_dim(F, P, v) for P in U.points)


def min_distance_geometric(U: QSystem, cap: int = DEFAULT_HYPERPLANE_CAP) -> int:
    """N - max over hyperplanes H of sum_i dim(U_i & H); one normal vector per hyperplane."""
    F = U.tower
    n_hyper = (F.order**U.k - 1) // (F.order - 1)
    if n_hyper > cap:
        raise CapExceededError(f"{n_hyper} hyperplanes exceed cap {cap}")
    best = max(
        sum(_intersection_dim(F, P, v) for P in U.points) for v in projective_messages(F, U.k)
    )
    return U.N - best


# -- isometries ---------------------------------------------------------------


@dataclass(frozen=True)
class IsometryWitness:
    """phi(x)_i = gamma_i * x_{sigma(i)} * A_i, with A_i over F_q acting on row vectors."""

    gammas: tuple[Elt, ...]
    matrices: tuple[linalg.Matrix, ...]
    sigma: tuple[int, ...]


def apply_isometry(C: BlockCode, w: IsometryWitness) -> BlockCode:
    F = C.tower
    rows = []
    for row in C.G:
        blocks = split_blocks(row, C.blocks)
        new: list[Elt] = []
        for i, (g, A) in enumerate(zip(w.gammas, w.matrices)):
            new.extend(F.scale(g, linalg.vecmat(F, blocks[w.sigma[i]], A)))
        rows.append(tuple(new))
    return BlockCode(F, C.blocks, tuple(rows))


def same_code(C: BlockCode, D: BlockCode) -> bool:
    return C.k == D.k and linalg.rank(C.tower, list(C.G) + list(D.G)) == C.k


def isometry_search_size(C: BlockCode) -> int:
    F = C.tower
    size = (F.order - 1) ** C.t * math.factorial(C.t)
    for n in C.blocks:
        size *= linalg.gl_size(n, F.q)
    return size


def brute_force_equivalent(
    C: BlockCode, D: BlockCode, limit: int = DEFAULT_ISOMETRY_LIMIT
) -> IsometryWitness | None:
    """Search every sum-rank isometry for one mapping C onto D.

    Each isometry is split into per-block choices (sigma(i), A_i, gamma_i).  The
    image of C lies in D iff, for every basis row c, the per-block syndromes
    ``gamma_i (c_{sigma(i)} A_i) H_i^T`` sum to zero (H a parity-check matrix of
    D).  All choices for blocks 0..t-2 are enumerated and the last block is
    looked up in a table, which covers the full isometry group exactly once.
    The returned witness is re-verified by span equality.
    """
    F = C.tower
    if D.tower != F:
        raise ParameterError("codes live over different towers")
    if C.k != D.k or sorted(C.blocks) != sorted(D.blocks):
        return None
    size = isometry_search_size(C)
    if size > limit:
        raise CapExceededError(f"isometry search space {size} exceeds limit {limit}")
    t, k = C.t, C.k
    H = linalg.nullspace(F, D.G, D.N)
    r = len(H)
    Hb = [split_blocks(h, D.blocks) for h in H]
    # Ht[i]: n_i x r matrix (block i of H, transposed)
    Ht = [tuple(tuple(Hb[row][i][col] for row in range(r)) for col in range(D.blocks[i])) for i in range(t)]
    Cb = [split_blocks(row, C.blocks) for row in C.G]
    gl = {n: list(linalg.general_linear(F, n, F.base_field())) for n in set(C.blocks)}
    gammas = list(F.nonzero())

    tables: dict[tuple[int, int], list[tuple[Vector, int, Elt]]] = {}

    def table(i: int, j: int) -> list[tuple[Vector, int, Elt]]:
        if (i, j) not in tables:
            entries = []
            for ai, A in enumerate(gl[D.blocks[i]]):
                M = linalg.matmul(F, A, Ht[i]) if r else ()
                base = [linalg.vecmat(F, Cb[row][j], M) if r else () for row in range(k)]
                flat = tuple(x for b in base for x in b)
                for g in gammas:
                    entries.append((F.scale(g, flat), ai, g))
            tables[(i, j)] = entries
        return tables[(i, j)]

    for sigma in itertools.permutations(range(t)):
        if any(C.blocks[sigma[i]] != D.blocks[i] for i in range(t)):
            continue
        last: dict[Vector, tuple[int, Elt]] = {}
        for key, ai, g in table(t - 1, sigma[t - 1]):
            last.setdefault(key, (ai, g))
        heads = [table(i, sigma[i]) for i in range(t - 1)]
        for combo in itertools.product(*heads):
            acc: Vector = (0,) * (k * r)
            for key, _, _ in combo:
                acc = F.vadd(acc, key)
            hit = last.get(tuple(F.neg(x) for x in acc))
            if hit is None:
                continue
            choice = [(ai, g) for _, ai, g in combo] + [hit]
            w = IsometryWitness(
                gammas=tuple(g for _, g in choice),
                matrices=tuple(gl[D.blocks[i]][ai] for i, (ai, _) in enumerate(choice)),
                sigma=tuple(sigma),
            )
            if not same_code(apply_isometry(C, w), D):
                raise InvariantViolation("isometry witness failed span verification")
            return w
    return None


# -- Gabidulin stabilizers ------------------------------------------------------


def gabidulin_points(F: FieldTower, k: int, s: int, S: Sequence[Elt] | None = None) -> set[Vector]:
    """Point set of G_{k,s,m}[S] (column vectors (x, x^(q^s), ...))."""
    xs = F.elements() if S is None else S
    return {tuple(F.frobenius(x, s, i) for i in range(k)) for x in xs}


def stabilizer_enumerate(F: FieldTower, k: int, s: int = 1, limit: int = DEFAULT_GL_LIMIT) -> list[linalg.Matrix]:
    """Every A in GL(k, q^m) with A . G_{k,s,m} = G_{k,s,m} (A acting on columns)."""
    size = linalg.gl_size(k, F.order)
    if size > limit:
        raise CapExceededError(f"|GL({k}, {F.order})| = {size} exceeds limit {limit}")
    pts = gabidulin_points(F, k, s)
    probe = sorted(p for p in pts if any(p))
    out = []
    for A in linalg.general_linear(F, k, list(F.elements())):
        if all(linalg.matvec(F, A, u) in pts for u in probe):
            out.append(A)
    return out


def diagonal_stabilizer(F: FieldTower, k: int, s: int = 1) -> list[linalg.Matrix]:
    """{diag(d, d^(q^s), ..., d^(q^(s(k-1)))) : d != 0}."""
    out = []
    for d in F.nonzero():
        diag = [F.frobenius(d, s, i) for i in range(k)]
        out.append(tuple(tuple(diag[i] if i == j else 0 for j in range(k)) for i in range(k)))
    return out


def dickson_stabilizer(F: FieldTower, s: int = 1) -> list[linalg.Matrix]:
    """Dickson matrices of the invertible q^s-polynomials."""
    return [dickson(L).entries for L in all_polys(F, s) if is_invertible(L)]


def antidiagonal(k: int) -> linalg.Matrix:
    return tuple(tuple(1 if i + j == k - 1 else 0 for j in range(k)) for i in range(k))


def gabidulin_minus_s_relation(F: FieldTower, k: int, s: int, T: Sequence[Elt]) -> bool:
    """Check G_{k,-s,m}[T] = J G_{k,s,m}[T^(q^(-s(k-1)))] pointwise, J the antidiagonal."""
    pts = [p[0] for p in fq_span(F, [(b,) for b in T], 1)]
    lhs = {tuple(F.frobenius(x, -s, i) for i in range(k)) for x in pts}
    twisted = [F.frobenius(x, -s, k - 1) for x in pts]
    J = antidiagonal(k)
    rhs = {linalg.matvec(F, J, tuple(F.frobenius(y, s, i) for i in range(k))) for y in twisted}
    return lhs == rhs


"""Rank and sum-rank metric codes, Gabidulin and linearized Reed-Solomon generators."""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from . import linalg
from .errors import CapExceededError, NormCollisionError, ParameterError
from .ff import Elt, FieldTower

DEFAULT_ENUM_CAP = 1 << 22


def rank_weight(F: FieldTower, v: Sequence[Elt]) -> int:
    """dim over F_q of the span of the coordinates of v."""
    return F.fq_rank(v)


def sum_rank_weight(F: FieldTower, blocks: Sequence[Sequence[Elt]]) -> int:
    return sum(F.fq_rank(b) for b in blocks)


def split_blocks(v: Sequence[Elt], blocks: Sequence[int]) -> list[tuple[Elt, ...]]:
    out, pos = [], 0
    for n in blocks:
        out.append(tuple(v[pos : pos + n]))
        pos += n
    return out


@dataclass(frozen=True)
class BlockCode:
    """F_{q^m}-linear code in F_{q^m}^(n_1) + ... + F_{q^m}^(n_t) given by a k x N generator."""

    tower: FieldTower
    blocks: tuple[int, ...]
    G: linalg.Matrix
    nondegenerate: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        blocks = tuple(int(n) for n in self.blocks)
        G = tuple(tuple(r) for r in self.G)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "G", G)
        if not blocks or any(n < 1 for n in blocks):
            raise ParameterError("block lengths must be positive")
        if not G:
            raise ParameterError("generator matrix has no rows")
        N = sum(blocks)
        if any(len(r) != N for r in G):
            raise ParameterError(f"generator rows must have length N={N}")
        if linalg.rank(self.tower, G) != len(G):
            raise ParameterError("generator rows are not linearly independent")
        nondeg = all(
            linalg.fq_rank_vectors(self.tower, cols) == len(cols) for cols in self.block_columns()
        )
        object.__setattr__(self, "nondegenerate", nondeg)

    @property
    def k(self) -> int:
        return len(self.G)

    @property
    def N(self) -> int:
        return sum(self.blocks)

    @property
    def t(self) -> int:
        return len(self.blocks)

    def block_columns(self) -> list[list[tuple[Elt, ...]]]:
        """Columns of G_1, ..., G_t (each column a length-k vector)."""
        cols = linalg.transpose(self.G)
        return [list(c) for c in split_blocks(cols, self.blocks)]

    def encode(self, msg: Sequence[Elt]) -> tuple[Elt, ...]:
        return linalg.vecmat(self.tower, msg, self.G)

    def weight(self, word: Sequence[Elt]) -> int:
        return sum_rank_weight(self.tower, split_blocks(word, self.blocks))

    def contains(self, word: Sequence[Elt]) -> bool:
        return linalg.rank(self.tower, list(self.G) + [tuple(word)]) == self.k


def projective_messages(F: FieldTower, k: int):
    """One nonzero message per F_{q^m}-line: first nonzero entry equal to 1."""
    for lead in range(k):
        for tail in itertools.product(range(F.order), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def min_distance_exhaustive(C: BlockCode, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Minimum sum-rank weight over all nonzero codewords.

    Weights are invariant under F_{q^m}^* scaling, so one message per line is enough.
    """
    F = C.tower
    if F.order**C.k > cap:
        raise CapExceededError(f"{F.order}^{C.k} codewords exceed cap {cap}")
    return min(C.weight(C.encode(msg)) for msg in projective_messages(F, C.k))


def singleton_bound(C: BlockCode) -> int:
    return C.N - C.k + 1


def is_msrd(C: BlockCode, d: int | None = None, cap: int = DEFAULT_ENUM_CAP) -> bool:
    if d is None:
        d = min_distance_exhaustive(C, cap)
    return d == singleton_bound(C)


def is_mrd(C: BlockCode, d: int | None = None, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Equality in m k <= max(m, n) (min(m, n) - d + 1) for a single-block code."""
    if C.t != 1:
        raise ParameterError("is_mrd needs a single-block code")
    if d is None:
        d = min_distance_exhaustive(C, cap)
    m, n = C.tower.m, C.N
    return m * C.k == max(m, n) * (min(m, n) - d + 1)


def _check_points(F: FieldTower, pts: Sequence[Elt], what: str) -> None:
    if len(pts) > F.m:
        raise ParameterError(f"{what}: {len(pts)} points exceed m={F.m}")
    if F.fq_rank(pts) != len(pts):
        raise ParameterError(f"{what}: evaluation points are not F_q-linearly independent")


def gabidulin_generator(F: FieldTower, alpha: Sequence[Elt], k: int, s: int = 1) -> BlockCode:
    """Moore matrix: row i holds alpha_j^(q^(s i))."""
    alpha = tuple(alpha)
    if math.gcd(s, F.m) != 1:
        raise ParameterError(f"twist s={s} is not coprime to m={F.m}")
    _check_points(F, alpha, "gabidulin")
    if not 1 <= k <= len(alpha):
        raise ParameterError(f"need 1 <= k <= n, got k={k}, n={len(alpha)}")
    G = tuple(tuple(F.frobenius(a, s, i) for a in alpha) for i in range(k))
    return BlockCode(F, (len(alpha),), G)


@dataclass(frozen=True)
class LrsParams:
    """Parameters of LR_k^{q^s}[alpha, beta]; ``beta`` defaults to the basis (1, g, ..., g^(m-1))."""

    k: int
    s: int
    alpha: tuple[Elt, ...]
    beta: tuple[Elt, ...] | None = None

    @property
    def t(self) -> int:
        return len(self.alpha)

    def resolved_beta(self, F: FieldTower) -> tuple[Elt, ...]:
        return tuple(self.beta) if self.beta is not None else F.fq_basis()


def norms(F: FieldTower, alpha: Sequence[Elt], s: int) -> list[Elt]:
    """N_s(alpha_i) in order, rejecting zero entries and collisions."""
    out: list[Elt] = []
    for i, a in enumerate(alpha):
        if a == 0:
            raise ParameterError(f"alpha[{i}] is zero")
        n = F.norm(a, s)
        if n in out:
            j = out.index(n)
            raise NormCollisionError(
                j, i, f"alpha[{j}]={F.fmt(alpha[j])} and alpha[{i}]={F.fmt(a)} share norm {F.fmt(n)}"
            )
        out.append(n)
    return out


def validate_lrs(F: FieldTower, params: LrsParams) -> tuple[Elt, ...]:
    """Check the parameter constraints; return the resolved beta."""
    if math.gcd(params.s, F.m) != 1:
        raise ParameterError(f"twist s={params.s} is not coprime to m={F.m}")
    if params.t < 1:
        raise ParameterError("alpha must be non-empty")
    norms(F, params.alpha, params.s)
    beta = params.resolved_beta(F)
    _check_points(F, beta, "lrs beta")
    if not 1 <= params.k <= min(params.t * F.m, params.t * len(beta)):
        raise ParameterError(f"dimension k={params.k} out of range for t={params.t}, n={len(beta)}")
    return beta


def lrs_generator(F: FieldTower, params: LrsParams) -> BlockCode:
    """Block i, row r, column j: N_s^r(alpha_i) * beta_j^(q^(s r))."""
    beta = validate_lrs(F, params)
    s = params.s
    rows = []
    for r in range(params.k):
        frob = [F.frobenius(b, s, r) for b in beta]
        row: list[Elt] = []
        for a in params.alpha:
            tn = F.truncated_norm(a, s, r)
            row.extend(F.mul(tn, x) for x in frob)
        rows.append(tuple(row))
    return BlockCode(F, (len(beta),) * params.t, tuple(rows))

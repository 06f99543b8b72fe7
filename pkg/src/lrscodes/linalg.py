"""Gaussian elimination over F_p (packed coordinates) and over F_{q^m} (tower elements)."""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence

from .ff import Elt, FieldTower

Matrix = tuple[tuple[Elt, ...], ...]


def fp_rank(vectors: Sequence[int], p: int, n: int) -> int:
    """Rank over F_p of vectors given as base-p integer encodings of length n."""
    if p == 2:
        basis: dict[int, int] = {}  # leading bit -> reduced vector
        for v in vectors:
            while v:
                top = v.bit_length() - 1
                if top not in basis:
                    basis[top] = v
                    break
                v ^= basis[top]
        return len(basis)
    rows = []
    for v in vectors:
        digs = []
        for _ in range(n):
            v, r = divmod(v, p)
            digs.append(r)
        rows.append(digs)
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = [c * inv % p for c in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [(x - c * y) % p for x, y in zip(rows[r], prow)]
        rank += 1
    return rank


def rref(F: FieldTower, rows: Sequence[Sequence[Elt]]) -> tuple[list[list[Elt]], list[int]]:
    """Reduced row echelon form over F_{q^m}; pivot rows chosen by lowest index."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][col])
        M[rank] = [F.mul(inv, x) for x in M[rank]]
        prow = M[rank]
        for r in range(len(M)):
            c = M[r][col]
            if r != rank and c:
                nc = F.neg(c)
                M[r] = [F.add(x, F.mul(nc, y)) for x, y in zip(M[r], prow)]
        pivots.append(col)
        rank += 1
        if rank == len(M):
            break
    return M[:rank], pivots


def rank(F: FieldTower, rows: Sequence[Sequence[Elt]]) -> int:
    return len(rref(F, rows)[1])


def nullspace(F: FieldTower, rows: Sequence[Sequence[Elt]], ncols: int | None = None) -> list[tuple[Elt, ...]]:
    """Basis of {x : rows . x = 0} (right kernel)."""
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [0] * ncols
        x[fcol] = 1
        for r, pcol in enumerate(pivots):
            x[pcol] = F.neg(R[r][fcol])
        basis.append(tuple(x))
    return basis


def vecmat(F: FieldTower, v: Sequence[Elt], M: Sequence[Sequence[Elt]]) -> tuple[Elt, ...]:
    """Row vector times matrix."""
    ncols = len(M[0]) if M else 0
    out = [0] * ncols
    for x, row in zip(v, M):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] = F.add(out[j], F.mul(x, y))
    return tuple(out)


def matvec(F: FieldTower, M: Sequence[Sequence[Elt]], v: Sequence[Elt]) -> tuple[Elt, ...]:
    """Matrix times column vector."""
    return tuple(F.dot(row, v) for row in M)


def matmul(F: FieldTower, A: Sequence[Sequence[Elt]], B: Sequence[Sequence[Elt]]) -> Matrix:
    return tuple(vecmat(F, row, B) for row in A)


def transpose(M: Sequence[Sequence[Elt]]) -> Matrix:
    return tuple(zip(*M))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def inverse(F: FieldTower, A: Sequence[Sequence[Elt]]) -> Matrix:
    n = len(A)
    aug = [list(row) + list(e) for row, e in zip(A, identity(n))]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def gl_size(n: int, q: int) -> int:
    """|GL(n, q)|."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def general_linear(F: FieldTower, n: int, entries: Sequence[Elt]) -> Iterator[Matrix]:
    """All invertible n x n matrices with entries from ``entries`` (a subfield), row by row.

    Rows are picked in itertools.product order, skipping any row in the span of
    the previous ones, so the output order is deterministic.
    """
    vectors = list(itertools.product(entries, repeat=n))

    def extend(prefix: list[tuple[Elt, ...]]) -> Iterator[Matrix]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in vectors:
            if rank(F, prefix + [v]) == len(prefix) + 1:
                yield from extend(prefix + [v])

    yield from extend([])


def fq_rank_vectors(F: FieldTower, vectors: Sequence[Sequence[Elt]]) -> int:
    """dim over F_q of the F_q-span of vectors in F_{q^m}^k."""
    omega = F.subfield_step + 1
    scalars = [F.pow(omega, j) for j in range(F.a)]
    shift = F.p**F.n
    packed = []
    for v in vectors:
        for c in scalars:
            code = 0
            for x in reversed(v):
                code = code * shift + F.to_int(F.mul(c, x))
            packed.append(code)
    width = F.n * (len(vectors[0]) if vectors else 0)
    r = fp_rank(packed, F.p, width)
    assert r % F.a == 0
    return r // F.a

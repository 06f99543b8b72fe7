"""Equivalence of linearized Reed-Solomon codes through their norm sets.

Two square LRS codes with a common twist and 1 < k <= m are equivalent exactly
when one norm set is an F_q^*-multiple of the other.  A twist s > m/2 is first
rewritten as m - s with alpha_i -> (alpha_i^-1)^(q^(s(k-2))).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .codes import LrsParams, norms, validate_lrs
from .errors import ParameterError
from .ff import Elt, FieldTower


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    UNDETERMINED = "undetermined"


class Reason(enum.Enum):
    NORM_SET_MATCH = "NormSetMatch"
    TWIST_MISMATCH = "TwistMismatch"
    NORM_SET_MISMATCH = "NormSetMismatch"
    CROSS_TWIST_HIGH_K = "CrossTwistHighK"


@dataclass(frozen=True)
class EquivDecision:
    verdict: Verdict
    reason: Reason
    xi: Elt | None = None
    sigma: tuple[int, ...] | None = None
    note: str = ""

    def __post_init__(self) -> None:
        has_witness = self.xi is not None and self.sigma is not None
        if has_witness != (self.verdict is Verdict.EQUIVALENT):
            raise ValueError("witness present iff verdict is EQUIVALENT")

    @property
    def equivalent(self) -> bool | None:
        if self.verdict is Verdict.UNDETERMINED:
            return None
        return self.verdict is Verdict.EQUIVALENT


def norm_set(F: FieldTower, alpha: Sequence[Elt], s: int = 1) -> frozenset[Elt]:
    """{N_s(alpha_i)}; raises on zero entries or norm collisions."""
    return frozenset(norms(F, alpha, s))


def scaled_match(F: FieldTower, A: Iterable[Elt], B: Iterable[Elt]) -> Elt | None:
    """Smallest-log xi in F_q^* with xi * A = B, or None."""
    A, B = frozenset(A), frozenset(B)
    if len(A) != len(B):
        raise ParameterError(f"norm sets differ in size ({len(A)} vs {len(B)})")
    for xi in F.subfield_elements():
        if frozenset(F.mul(xi, a) for a in A) == B:
            return xi
    return None


def canonical_twist(s: int, m: int) -> int:
    """Representative of {s, -s} mod m in [1, m/2]; 1 when m <= 2."""
    if m <= 2:
        return 1
    s %= m
    return min(s, m - s)


def normalize_twist(F: FieldTower, params: LrsParams) -> LrsParams:
    """Rewrite twist s > m/2 as m - s, transforming alpha so the code stays equivalent."""
    m = F.m
    s = params.s % m if m > 1 else params.s
    if m <= 2 or s < m / 2:
        return LrsParams(params.k, 1 if m <= 2 else s, tuple(params.alpha), params.beta)
    # s = -s' with s' = m - s; alpha' = (alpha^-1)^(q^(-s'(k-2))) = (alpha^-1)^(q^(s(k-2)))
    alpha = tuple(F.frobenius(F.inv(a), s, params.k - 2) for a in params.alpha)
    return LrsParams(params.k, m - s, alpha, params.beta)


def lrs_equivalent(F: FieldTower, P: LrsParams, Q: LrsParams) -> EquivDecision:
    """Decide equivalence of two square LRS codes (n = m, 1 < k <= m) by norm sets."""
    m = F.m
    for name, X in (("first", P), ("second", Q)):
        beta = validate_lrs(F, X)
        if len(beta) != m:
            raise ParameterError(f"{name} code has n={len(beta)}; the criterion needs n = m = {m}")
    if P.t != Q.t:
        raise ParameterError(f"block counts differ: t={P.t} vs t={Q.t}")
    if P.k != Q.k:
        raise ParameterError(f"dimensions differ: k={P.k} vs k={Q.k}")
    k = P.k
    if not 1 < k <= m:
        raise ParameterError(f"the criterion covers 1 < k <= m, got k={k}, m={m}")
    Pn, Qn = normalize_twist(F, P), normalize_twist(F, Q)
    if Pn.s != Qn.s:
        if k <= m - 2:
            return EquivDecision(
                Verdict.NOT_EQUIVALENT,
                Reason.TWIST_MISMATCH,
                note=f"twists {Pn.s} and {Qn.s} are not +-equal mod {m}",
            )
        return EquivDecision(
            Verdict.UNDETERMINED,
            Reason.CROSS_TWIST_HIGH_K,
            note=f"k={k} in {{m-1, m}}: no norm-set criterion across twists {Pn.s} and {Qn.s}",
        )
    s = Pn.s
    na, nb = norms(F, Pn.alpha, s), norms(F, Qn.alpha, s)
    xi = scaled_match(F, na, nb)
    if xi is None:
        return EquivDecision(Verdict.NOT_EQUIVALENT, Reason.NORM_SET_MISMATCH)
    sigma = tuple(nb.index(F.mul(xi, a)) for a in na)
    return EquivDecision(Verdict.EQUIVALENT, Reason.NORM_SET_MATCH, xi=xi, sigma=sigma)

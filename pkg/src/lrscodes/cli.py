"""Command-line front end.

Exit codes: 0 ok, 2 bad parameters, 3 resource cap hit, 4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Any

from . import codes, counting, equivalence, geometry
from .errors import CapExceededError, InvariantViolation, ParameterError
from .ff import DEFAULT_FIELD_CAP, Elt, FieldTower, prime_power, tower

SCHEMA_VERSION = 1

FORMATS = ("json", "tsv", "pretty")

EXIT_OK, EXIT_PARAM, EXIT_CAP, EXIT_INVARIANT = 0, 2, 3, 4


# -- field and parameter parsing ------------------------------------------------


def _require_prime_power(q: int) -> tuple[int, int]:
    pa = prime_power(q)
    if pa is None:
        raise ParameterError(f"q must be a prime power, got {q}")
    return pa


def field_from_args(args: argparse.Namespace) -> FieldTower:
    if args.q is not None:
        p, a = _require_prime_power(args.q)
        if args.p is not None and args.p != p:
            raise ParameterError(f"--p {args.p} disagrees with --q {args.q}")
    elif args.p is not None:
        p, a = args.p, args.a
    else:
        raise ParameterError("give the base field with --q or --p/--a")
    modulus = None
    if args.modulus:
        modulus = tuple(int(c) for c in args.modulus.split(","))
    return tower(p, a, args.m, modulus=modulus, cap=args.field_cap)


def field_echo(F: FieldTower) -> dict[str, Any]:
    return {
        "p": F.p,
        "a": F.a,
        "q": F.q,
        "m": F.m,
        "order": F.order,
        "modulus": list(F.modulus),
        "generator": F.digits(F.gen_power(1)),
    }


def subfield_value(F: FieldTower, x: Elt) -> int | str:
    """x in F_q as an integer when q is prime, else as w^j with w = g^((q^m-1)/(q-1))."""
    r = F.residue(x)
    if r is not None:
        return r
    return f"w^{F.log(x) // F.subfield_step}"


def parse_elements(F: FieldTower, text: str | None) -> tuple[Elt, ...] | None:
    if text is None:
        return None
    parts = [t for t in text.split(",") if t.strip()]
    if not parts:
        raise ParameterError("empty element list")
    return tuple(F.parse(t) for t in parts)


def alpha_from_norms(F: FieldTower, text: str, s: int) -> tuple[Elt, ...]:
    """Pick, for each requested norm value, the smallest-index preimage."""
    values = parse_elements(F, text)
    assert values is not None
    return tuple(F.norm_preimage(v, s) for v in values)


def lrs_params(F: FieldTower, k: int, s: int, alpha: str | None, norms: str | None, beta: str | None) -> codes.LrsParams:
    if (alpha is None) == (norms is None):
        raise ParameterError("give exactly one of --alpha or --norms")
    a = parse_elements(F, alpha) if alpha is not None else alpha_from_norms(F, norms, s)
    return codes.LrsParams(k, s % F.m if F.m > 1 else s, a, parse_elements(F, beta))


def params_echo(F: FieldTower, P: codes.LrsParams) -> dict[str, Any]:
    return {
        "k": P.k,
        "s": P.s,
        "t": P.t,
        "alpha": [F.fmt(x) for x in P.alpha],
        "beta": [F.fmt(x) for x in P.resolved_beta(F)],
        "norms": [F.fmt(x) for x in codes.norms(F, P.alpha, P.s)],
        "norm_values": [subfield_value(F, x) for x in codes.norms(F, P.alpha, P.s)],
    }


def build_code(F: FieldTower, args: argparse.Namespace) -> tuple[codes.BlockCode, dict[str, Any]]:
    if args.kind == "gabidulin":
        pts = parse_elements(F, args.alpha) or F.fq_basis()
        C = codes.gabidulin_generator(F, pts, args.k, args.s)
        return C, {"kind": "gabidulin", "k": args.k, "s": args.s % F.m if F.m > 1 else args.s, "points": [F.fmt(x) for x in pts]}
    P = lrs_params(F, args.k, args.s, args.alpha, args.norms, args.beta)
    return codes.lrs_generator(F, P), {"kind": "lrs", **params_echo(F, P)}


def _int_or_m(text: str) -> int | str:
    t = text.strip()
    if t in ("m", "m-1"):
        return t
    try:
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, 'm' or 'm-1', got {text!r}") from None


# -- commands -------------------------------------------------------------------


def cmd_count(args: argparse.Namespace) -> dict[str, Any]:
    _require_prime_power(args.q)
    report = counting.count_inequivalent_lrs(args.q, args.t, args.k, args.m)
    return {"command": "count", **report.as_dict()}


def cmd_orbits(args: argparse.Namespace) -> dict[str, Any]:
    p, a = _require_prime_power(args.q)
    part = counting.enumerate_orbits(args.q, args.t, cap=args.cap)
    F = tower(p, a, 1)
    out_orbits = []
    for orb in part.orbits:
        entry: dict[str, Any] = {
            "size": len(orb),
            "stabilizer_order": (args.q - 1) // len(orb),
            "subsets": [list(A) for A in orb],
        }
        if a == 1:
            entry["residues"] = [sorted(F.residue(F.gen_power(e)) for e in A) for A in orb]
        out_orbits.append(entry)
    return {
        "command": "orbits",
        "q": args.q,
        "t": args.t,
        "generator": F.residue(F.gen_power(1)) if a == 1 else F.digits(F.gen_power(1)),
        "orbit_count": len(part),
        "representatives": [list(r) for r in part.representatives],
        "orbits": out_orbits,
    }


def cmd_equiv(args: argparse.Namespace) -> dict[str, Any]:
    F = field_from_args(args)
    P = lrs_params(F, args.k, args.s, args.alpha, args.norms, args.beta)
    s2 = args.s if args.s2 is None else args.s2
    beta2 = args.beta if args.beta2 is None else args.beta2
    Q = lrs_params(F, args.k, s2, args.alpha2, args.norms2, beta2)
    dec = equivalence.lrs_equivalent(F, P, Q)
    Pn, Qn = equivalence.normalize_twist(F, P), equivalence.normalize_twist(F, Q)
    out: dict[str, Any] = {
        "command": "equiv",
        "field": field_echo(F),
        "first": params_echo(F, P),
        "second": params_echo(F, Q),
        "normalized_twists": [Pn.s, Qn.s],
        "verdict": dec.verdict.value,
        "reason": dec.reason.value,
        "note": dec.note,
    }
    if dec.xi is not None:
        out["xi"] = F.fmt(dec.xi)
        out["xi_value"] = subfield_value(F, dec.xi)
        out["sigma"] = list(dec.sigma)
    if args.oracle:
        C, D = codes.lrs_generator(F, P), codes.lrs_generator(F, Q)
        w = geometry.brute_force_equivalent(C, D, limit=args.limit)
        out["oracle_equivalent"] = w is not None
        if dec.equivalent is None:
            out["oracle_agreement"] = "criterion undetermined"
        elif dec.equivalent == (w is not None):
            out["oracle_agreement"] = "criterion and oracle agree"
        else:
            raise InvariantViolation(
                f"criterion says {dec.verdict.value} but brute force says "
                f"{'equivalent' if w is not None else 'not equivalent'}"
            )
    return out


def cmd_gen(args: argparse.Namespace) -> dict[str, Any]:
    F = field_from_args(args)
    C, echo = build_code(F, args)
    return {
        "command": "gen",
        "field": field_echo(F),
        "code": echo,
        "blocks": list(C.blocks),
        "N": C.N,
        "nondegenerate": C.nondegenerate,
        "generator": [[F.fmt(x) for x in row] for row in C.G],
    }


def _verify_code(args: argparse.Namespace, F: FieldTower) -> dict[str, Any]:
    C, echo = build_code(F, args)
    out: dict[str, Any] = {"code": echo, "blocks": list(C.blocks), "N": C.N, "k": C.k}
    d = codes.min_distance_exhaustive(C, cap=args.limit)
    out["d"] = d
    if args.check == "msrd":
        out["bound"] = codes.singleton_bound(C)
        out["msrd"] = codes.is_msrd(C, d)
    elif args.check == "mrd":
        out["bound"] = codes.singleton_bound(C)
        out["mrd"] = codes.is_mrd(C, d)
    else:
        U = geometry.system_from_code(C)
        d_geo = geometry.min_distance_geometric(U, cap=args.limit)
        mismatches = 0
        for msg in codes.projective_messages(F, C.k):
            if geometry.weight_geometric(U, msg) != C.weight(C.encode(msg)):
                mismatches += 1
        out["d_geometric"] = d_geo
        out["weight_mismatches"] = mismatches
        if d_geo != d or mismatches:
            raise InvariantViolation(f"geometric distance {d_geo} vs direct {d}, {mismatches} weight mismatches")
        out["agree"] = True
    return out


def cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    F = field_from_args(args)
    out: dict[str, Any] = {"command": "verify", "check": args.check, "field": field_echo(F)}
    if args.check in ("msrd", "mrd", "geometric"):
        out.update(_verify_code(args, F))
        return out
    k, s = args.k, args.s % F.m if F.m > 1 else args.s
    if not 1 < k <= F.m:
        raise ParameterError(f"{args.check} needs 1 < k <= m, got k={k}, m={F.m}")
    out.update({"k": k, "s": s})
    if args.check == "stabilizer":
        found = geometry.stabilizer_enumerate(F, k, s, limit=args.limit)
        if k < F.m:
            expected, form = geometry.diagonal_stabilizer(F, k, s), "diagonal form diag(d, d^(q^s), ...)"
        else:
            expected, form = geometry.dickson_stabilizer(F, s), "invertible Dickson matrices"
        out["size"] = len(found)
        out["expected_size"] = len(expected)
        out["form"] = form
        if set(found) != set(expected):
            raise InvariantViolation(f"stabilizer of size {len(found)} does not match the {form}")
        out["matches"] = True
        out["stabilizer"] = [[[F.fmt(x) for x in row] for row in A] for A in found]
    else:
        T = parse_elements(F, args.alpha) or F.fq_basis()
        ok = geometry.gabidulin_minus_s_relation(F, k, s, T)
        out["T"] = [F.fmt(x) for x in T]
        if not ok:
            raise InvariantViolation("G_{k,-s} differs from J G_{k,s} on the twisted points")
        out["holds"] = True
    return out


# -- output -----------------------------------------------------------------------


def _tsv_scalar(v: Any) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v).lower() if isinstance(v, bool) else str(v)


def render(doc: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "tsv":
        if doc.get("command") == "orbits":
            rows = []
            for orb in doc["orbits"]:
                rows.append("\t".join(",".join(map(str, A)) for A in orb["subsets"]))
            return "\n".join(rows)
        return "\n".join(f"{k}\t{_tsv_scalar(v)}" for k, v in sorted(doc.items()))
    return _pretty(doc)


def _pretty(doc: dict[str, Any]) -> str:
    cmd = doc.get("command")
    if cmd == "count":
        lines = [f"q={doc['q']} t={doc['t']} k={doc['k']} m={doc['m']}"]
        for d in doc["divisors"]:
            lines.append(f"  f_{d} = {doc['f'][str(d)]}  ({doc['orbits_per_d'][str(d)]} orbits)")
        lines.append(f"orbits: {doc['total_orbits']}")
        lines.append(f"psi: {doc['psi_numerator']}/{doc['psi_denominator']}")
        lines.append(f"inequivalent LRS codes: {doc['final_count']}")
        return "\n".join(lines)
    if cmd == "orbits":
        lines = [f"{doc['orbit_count']} orbits of {doc['t']}-subsets of F_{doc['q']}^*"]
        for orb in doc["orbits"]:
            sets = orb.get("residues", orb["subsets"])
            lines.append(f"[{orb['size']}] " + " ".join("{" + ",".join(map(str, A)) + "}" for A in sets))
        return "\n".join(lines)
    if cmd == "equiv":
        lines = [f"verdict: {doc['verdict']} ({doc['reason']})"]
        if "xi" in doc:
            lines.append(f"xi = {doc['xi']} = {doc['xi_value']}, sigma = {doc['sigma']}")
        if doc["note"]:
            lines.append(f"note: {doc['note']}")
        if "oracle_agreement" in doc:
            lines.append(doc["oracle_agreement"])
        return "\n".join(lines)
    if cmd == "verify" and doc["check"] == "msrd":
        return f"d={doc['d']}, bound N-k+1={doc['bound']}, MSRD: {str(doc['msrd']).lower()}"
    if cmd == "verify" and doc["check"] == "mrd":
        return f"d={doc['d']}, MRD: {str(doc['mrd']).lower()}"
    if cmd == "verify" and doc["check"] == "stabilizer":
        return f"size {doc['size']}, matches {doc['form']}"
    if cmd == "verify" and doc["check"] == "geometric":
        return f"d={doc['d']}, geometric d={doc['d_geometric']}, agree: true"
    if cmd == "verify":
        return "G_{k,-s} = J G_{k,s}[T^(q^(-s(k-1)))]: holds"
    return "\n".join(f"{k}: {_tsv_scalar(v)}" for k, v in sorted(doc.items()))


# -- argument parser ----------------------------------------------------------------


def _add_field(sp: argparse.ArgumentParser) -> None:
    g = sp.add_argument_group("field")
    g.add_argument("--q", type=int, help="base field size (prime power)")
    g.add_argument("--p", type=int, help="characteristic (alternative to --q)")
    g.add_argument("--a", type=int, default=1, help="q = p^a (with --p)")
    g.add_argument("--m", type=int, required=True, help="extension degree")
    g.add_argument("--modulus", help="comma-separated coefficients, low to high, of a monic irreducible of degree a*m")
    g.add_argument("--field-cap", type=int, default=DEFAULT_FIELD_CAP)


def _add_code(sp: argparse.ArgumentParser, kinds: bool = True) -> None:
    g = sp.add_argument_group("code")
    if kinds:
        g.add_argument("--kind", choices=("lrs", "gabidulin"), default="lrs")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--s", type=int, default=1)
    g.add_argument("--alpha", help="comma-separated elements (g^k, 0 or a residue < p)")
    g.add_argument("--norms", help="comma-separated norm values; alpha_i is the smallest preimage")
    g.add_argument("--beta", help="comma-separated evaluation points (default 1, g, ..., g^(m-1))")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lrscodes", description="Linearized Reed-Solomon code toolkit")
    ap.add_argument("--format", choices=FORMATS, default="json")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", parents=[common], help="number of inequivalent LRS codes")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=_int_or_m, default="m")
    sp.add_argument("--m", type=_int_or_m, default="m")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("orbits", parents=[common], help="explicit orbits of F_q^* on t-subsets")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--cap", type=int, default=counting.DEFAULT_ORBIT_CAP)
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("equiv", parents=[common], help="decide equivalence of two LRS codes")
    _add_field(sp)
    _add_code(sp, kinds=False)
    sp.add_argument("--s2", type=int, help="twist of the second code (default --s)")
    sp.add_argument("--alpha2")
    sp.add_argument("--norms2")
    sp.add_argument("--beta2", help="default --beta")
    sp.add_argument("--oracle", action="store_true", help="also run the brute-force isometry search")
    sp.add_argument("--limit", type=int, default=geometry.DEFAULT_ISOMETRY_LIMIT)
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("gen", parents=[common], help="print a generator matrix")
    _add_field(sp)
    _add_code(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", parents=[common], help="check a structural property exhaustively")
    sp.add_argument("check", choices=("msrd", "mrd", "stabilizer", "minus-s", "geometric"))
    _add_field(sp)
    _add_code(sp)
    sp.add_argument("--limit", type=int, default=codes.DEFAULT_ENUM_CAP)
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        doc = args.func(args)
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM
    except CapExceededError as e:
        print(f"error: resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as e:
        print(f"INVARIANT VIOLATION: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    print(render(doc, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

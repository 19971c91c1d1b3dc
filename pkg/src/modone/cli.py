"""Command-line front end.

Subcommands: sturmian | extremal | oscillation | orbit | theorem1 | verify |
complexity.  All numeric inputs are exact: integers, a/b, sqrt(a/b), or a
sum/difference of at most two such terms (e.g. "sqrt(5/4)-1/2").  Floats are
rejected.  Values starting with a minus sign must use the equals form
(--x=-1/2), as usual with argparse.  Exit codes: 0 success, 1 verification
failure, 2 usage or precondition error, 3 precision exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Optional

from .exactnum import (
    ExactRational,
    PrecisionExhausted,
    RealValue,
    RefinableStream,
    decimal_str,
    format_rational,
    parse_rational,
    rational_value,
    real_add,
    real_scale,
    sqrt_value,
)
from .orbit import Orbit, OrbitParams, theorem1_gap
from .series import BoundedSeq, InsufficientPrefix, default_terms, oscillation
from .sturmian import (
    ExtremalSpec,
    SturmianSpec,
    Variant,
    block_lengths,
    extremal_word,
    marker_positions,
    partial_sums,
    sturmian_prefix,
)
from .verify import (
    ExtensionPairNotFound,
    check_proof_identities,
    mh_escalation_sweep,
    structure_audit,
)
from .words import Word, left_extension_pair, subword_complexity

_ATOM_RE = re.compile(r"sqrt\((\d+(?:/\d+)?)\)|(\d+(?:/\d+)?)")


def parse_real_expr(text: str) -> RealValue:
    """Parse 'a', 'a/b', 'sqrt(a/b)', or a two-term sum/difference of those."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty expression")
    terms: list[tuple[int, str, Fraction]] = []
    pos = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    while True:
        m = _ATOM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse expression at ...{s[pos:]!r}")
        if m.group(1) is not None:
            terms.append((sign, "sqrt", parse_rational(m.group(1))))
        else:
            terms.append((sign, "rat", parse_rational(m.group(2))))
        pos = m.end()
        if pos == len(s):
            break
        if len(terms) == 2:
            raise ValueError("expressions have at most two terms")
        if s[pos] not in "+-":
            raise ValueError(f"expected + or - at ...{s[pos:]!r}")
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    return _build_real(terms)


def _build_real(terms: list[tuple[int, str, Fraction]]) -> RealValue:
    const = Fraction(0)
    roots: list[tuple[int, Fraction]] = []
    for sign, kind, val in terms:
        if kind == "rat":
            const += sign * val
            continue
        rv = sqrt_value(val)
        if isinstance(rv, ExactRational):
            const += sign * rv.value
        else:
            roots.append((sign, rv.radicand))
    if not roots:
        return rational_value(const)
    if len(roots) == 1:
        sign, rad = roots[0]
        root = real_scale(sqrt_value(rad), sign)
        if const == 0:
            return root
        return real_add(rational_value(const), root)
    (s1, m1), (s2, m2) = roots
    if m1 == m2:
        coeff = s1 + s2
        if coeff == 0:
            return rational_value(0)
        return real_scale(sqrt_value(m1), coeff)
    # sqrt(a) +/- sqrt(b) with a != b is irrational: a rational value c
    # (nonzero since a != b) would force sqrt(b) = (c*c + b - a)/(2c) to be
    # rational too, contradicting the non-square radicand.
    total = real_add(real_scale(sqrt_value(m1), s1), real_scale(sqrt_value(m2), s2))
    assert isinstance(total, RefinableStream)
    return replace(total, known_irrational=True)


def _parse_x(text: str) -> Fraction:
    x = parse_rational(text)
    if not -1 < x < 1:
        raise ValueError(f"|x| < 1 required, got {x}")
    return x


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2)


# ---------------------------------------------------------------------------
# word sources shared by oscillation / complexity
# ---------------------------------------------------------------------------


def _add_driver_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--theta", default="sqrt(5/4)-1/2",
                    help="slope expression (default golden-ratio conjugate)")
    sp.add_argument("--rho", default="0", help="intercept expression")
    sp.add_argument("--variant", choices=["floor", "ceil"], default="floor")


def _driver_spec(args) -> SturmianSpec:
    return SturmianSpec(
        theta=parse_real_expr(args.theta),
        rho=parse_real_expr(args.rho),
        variant=Variant(args.variant),
    )


def _add_source_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--word-source", required=True,
                    choices=["extremal", "sturmian", "orbit", "literal", "file"])
    sp.add_argument("--length", type=int, default=5000,
                    help="prefix length for generated sources")
    sp.add_argument("--k", type=int, default=2, help="extremal block parameter")
    _add_driver_args(sp)
    sp.add_argument("--xi", default="1")
    sp.add_argument("--eta", default="0")
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--literal", help="word as digits, e.g. 00110011")
    sp.add_argument("--file", help="path to a file holding a digit word")
    sp.add_argument("--bound", type=int,
                    help="override the tail bound B (default: source-derived)")


def _resolve_source(args) -> BoundedSeq:
    src = args.word_source
    if src == "extremal":
        spec = ExtremalSpec(k=args.k, driver=_driver_spec(args))
        w = extremal_word(spec, args.length)
        bound = args.bound if args.bound is not None else 1
        return BoundedSeq(prefix=w, bound=bound)
    if src == "sturmian":
        w = sturmian_prefix(_driver_spec(args), args.length)
        bound = args.bound if args.bound is not None else 1
        return BoundedSeq(prefix=w, bound=bound)
    if src == "orbit":
        params = OrbitParams(
            xi=parse_real_expr(args.xi), eta=parse_real_expr(args.eta),
            p=args.p, q=args.q,
        )
        orb = Orbit(params)
        if args.bound is not None:
            return BoundedSeq(prefix=orb.digits(args.length), bound=args.bound)
        return orb.digit_seq(args.length)
    if src == "literal":
        if not args.literal:
            raise ValueError("--literal required for word-source literal")
        w = Word.from_string(args.literal)
    else:
        if not args.file:
            raise ValueError("--file required for word-source file")
        with open(args.file) as fh:
            w = Word.from_string(fh.read().strip())
    return BoundedSeq.from_word(w, bound=args.bound)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_sturmian(args) -> int:
    spec = _driver_spec(args)
    w = sturmian_prefix(spec, args.length)
    sums = partial_sums(spec, args.length)
    if args.format == "json":
        _emit(args, _json_text({"word": str(w), "partial_sums": sums}))
    elif args.format == "csv":
        rows = [[str(n), str(a), str(sums[n])] for n, a in enumerate(w)]
        _emit(args, _csv_text(["n", "letter", "sigma_n"], rows))
    else:
        _emit(args, f"{w}\nsigma={','.join(str(v) for v in sums)}")
    return 0


def cmd_extremal(args) -> int:
    spec = ExtremalSpec(k=args.k, driver=_driver_spec(args))
    w = extremal_word(spec, args.length)
    markers = marker_positions(spec, args.markers) if args.markers else []
    if args.format == "json":
        payload = {"k": args.k, "word": str(w)}
        if markers:
            payload["markers"] = markers
        _emit(args, _json_text(payload))
    else:
        lines = [str(w)]
        if markers:
            lines.append("markers=" + ",".join(str(v) for v in markers))
        _emit(args, "\n".join(lines))
    return 0


def cmd_oscillation(args) -> int:
    S = _resolve_source(args)
    x = _parse_x(args.x)
    terms = args.terms
    if terms is None:
        terms = default_terms(S.bound, x, Fraction(1, 10**9))
    end = args.window_end
    if end is None:
        end = len(S.prefix) - terms
    start = args.window_start
    if start is None:
        start = end // 10
    rep = oscillation(S, x, start, end, terms)
    if args.format == "csv":
        from .series import window_midpoints

        mids = window_midpoints(S, x, start, end, terms)
        rows = [
            [str(start + i), format_rational(v), decimal_str(v)]
            for i, v in enumerate(mids)
        ]
        _emit(args, _csv_text(["n", "midpoint_exact", "midpoint_decimal"], rows))
    else:
        _emit(args, _json_text(rep.to_json_dict()))
    return 0


def _orbit_params(args) -> OrbitParams:
    return OrbitParams(
        xi=parse_real_expr(args.xi), eta=parse_real_expr(args.eta),
        p=args.p, q=args.q,
    )


def cmd_orbit(args) -> int:
    orb = Orbit(_orbit_params(args))
    rows = []
    for n in range(args.count):
        row = orb.row(n)
        y = row.y
        exact = format_rational(y.lower) if y.width == 0 else ""
        rows.append([str(n), str(row.x), exact, decimal_str(y.midpoint), str(row.s)])
    if args.format == "json":
        payload = {
            "p": args.p,
            "q": args.q,
            "theorem_applicable": orb.params.theorem_applicable,
            "rows": [
                {"n": int(r[0]), "x": int(r[1]), "y_exact": r[2] or None,
                 "y_decimal": r[3], "s": int(r[4])}
                for r in rows
            ],
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, _csv_text(["n", "x", "y_exact", "y_decimal", "s"], rows))
    return 0


def cmd_theorem1(args) -> int:
    params = _orbit_params(args)
    slack = parse_rational(args.slack)
    rep = theorem1_gap(
        params, (args.window_start, args.window_end), terms=args.terms, slack=slack
    )
    _emit(args, _json_text(rep.to_json_dict()))
    if rep.theorem_applicable and not rep.meets_bound:
        return 1
    return 0


def cmd_verify(args) -> int:
    grid = [parse_rational(tok) for tok in args.r_grid.split(",") if tok]
    z_values = [int(tok) for tok in args.z_list.split(",") if tok]
    identities = check_proof_identities(grid, z_values)

    spec = ExtremalSpec(k=args.k, driver=_driver_spec(args))
    w = extremal_word(spec, args.length)
    audit = structure_audit(w, args.k)

    blocks = block_lengths(spec, max(64, 8 * (args.mh_max_n + 1)), start=1)
    escalations = {}
    monotone = True
    below = True
    for r in grid:
        sweep = mh_escalation_sweep(blocks, r, args.mh_max_n)
        bounds = [rep.bound for rep in sweep]
        monotone &= all(b1 <= b2 for b1, b2 in zip(bounds, bounds[1:]))
        below &= all(b < 1 + r - r * r for b in bounds)
        escalations[format_rational(r)] = [rep.to_json_dict() for rep in sweep]

    mutated_audit = None
    if args.mutate is not None:
        if not 0 <= args.mutate < len(w):
            raise ValueError(f"--mutate index {args.mutate} outside the word")
        letters = list(w.letters)
        letters[args.mutate] ^= 1
        mutated_audit = structure_audit(Word(letters), args.k)

    ok = identities.ok and audit.all_ok and monotone and below
    if mutated_audit is not None:
        ok = ok and mutated_audit.all_ok
    payload = {
        "identities": identities.to_json_dict(),
        "audit": audit.to_json_dict(),
        "escalations": escalations,
        "escalation_bounds_monotone": monotone,
        "escalation_bounds_below_limit": below,
        "ok": ok,
    }
    if mutated_audit is not None:
        payload["mutated_index"] = args.mutate
        payload["audit_mutated"] = mutated_audit.to_json_dict()
    _emit(args, _json_text(payload))
    return 0 if ok else 1


def cmd_complexity(args) -> int:
    S = _resolve_source(args)
    w = S.prefix
    rows = []
    for n in range(1, args.max_n + 1):
        rows.append([
            str(n),
            str(subword_complexity(w, n)),
            str(left_extension_pair(w, n) is not None).lower(),
        ])
    _emit(args, _csv_text(["n", "complexity", "left_extension_found"], rows))
    return 0


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modone",
        description="Exact tools for mechanical words, certified series "
                    "oscillation, and alternating geometric orbits.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sturmian", help="mechanical word prefix and partial sums")
    _add_driver_args(sp)
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sturmian)

    sp = sub.add_parser("extremal", help="block-construction word and markers")
    sp.add_argument("--k", type=int, default=2)
    _add_driver_args(sp)
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--markers", type=int, default=0,
                    help="also list this many separator positions")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("oscillation", help="certified sup/inf gap of S_n(x)")
    _add_source_args(sp)
    sp.add_argument("--x", required=True,
                    help="exact rational, |x| < 1; write --x=-1/2 for negatives")
    sp.add_argument("--window-start", type=int, default=None,
                    help="default: window-end // 10")
    sp.add_argument("--window-end", type=int, default=None,
                    help="default: prefix length minus terms")
    sp.add_argument("--terms", type=int, default=None,
                    help="lookahead K (default: tail radius <= 1e-9)")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_oscillation)

    sp = sub.add_parser("orbit", help="x_n, y_n, s_n rows")
    sp.add_argument("--xi", default="1")
    sp.add_argument("--eta", default="0")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("theorem1", help="certified y_n gap vs (1+r-r^2)/p")
    sp.add_argument("--xi", default="1")
    sp.add_argument("--eta", default="0")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--window-start", type=int, default=0)
    sp.add_argument("--window-end", type=int, required=True)
    sp.add_argument("--terms", type=int, default=0,
                    help="if > 0, also cross-check via the digit series")
    sp.add_argument("--slack", default="0",
                    help="tolerance subtracted from the bound before comparing")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_theorem1)

    sp = sub.add_parser("verify", help="proof-identity, audit and escalation suite")
    sp.add_argument("--r-grid", default="1/10,2/10,3/10,4/10,5/10,6/10,7/10,8/10,9/10")
    sp.add_argument("--z-list", default="2,4,6,8,10")
    sp.add_argument("--k", type=int, default=2)
    _add_driver_args(sp)
    sp.add_argument("--length", type=int, default=2000)
    sp.add_argument("--mh-max-n", type=int, default=8)
    sp.add_argument("--mutate", type=int, default=None,
                    help="flip the letter at this index before the audit")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("complexity", help="subword complexity profile")
    _add_source_args(sp)
    sp.add_argument("--max-n", type=int, default=50)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_complexity)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionExhausted as exc:
        print(f"error: precision exhausted: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError, InsufficientPrefix,
            ExtensionPairNotFound, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

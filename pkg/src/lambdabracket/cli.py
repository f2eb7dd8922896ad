"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 computation failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .affine import fusion_table, load_algebra, sl2
from .fusion import virasoro_fusion_table
from .linalg import Vector
from .virasoro import DEFAULT_MAX_LEVEL, kac_c, kac_h, rho_closed_form, rho_direct, singular_vector

MAX_DEPTH = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, Vector):
        return [{"key": repr(k), "coeff": to_jsonable(c)} for k, c in sorted(obj.items(), key=lambda kv: repr(kv[0]))]
    return repr(obj)


def _partition_text(part) -> str:
    out = []
    for n in sorted(set(part), reverse=True):
        k = part.count(n)
        out.append(f"L_{{-{n}}}" + (f"^{k}" if k > 1 else ""))
    return "".join(out) or "1"


def format_singular(v: Vector) -> str:
    terms = []
    for part, c in sorted(v.items(), key=lambda kv: (len(kv[0]), kv[0]), reverse=True):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _partition_text(part) if mag == 1 else f"{mag}·{_partition_text(part)}"
        terms.append((sign, body))
    text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text + " |h>"


# --- commands ---------------------------------------------------------------

def cmd_fusion_virasoro(args):
    try:
        c = kac_c(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    table = virasoro_fusion_table(args.p, args.q)
    label_of = {}
    for a, _, _ in table:
        label_of.setdefault(kac_h(args.p, args.q, *a), a)
    rows = []
    for a, b, hs in table:
        rows.append({"a": list(a), "b": list(b),
                     "h_a": kac_h(args.p, args.q, *a), "h_b": kac_h(args.p, args.q, *b),
                     "fusion": [{"h": h, "label": list(label_of[h])} for h in hs]})
    lines = [f"minimal model ({args.p},{args.q}), c = {c}"]
    for r in rows:
        out = ", ".join(f"h={f['h']} ({f['label'][0]},{f['label'][1]})" for f in r["fusion"]) or "none"
        lines.append(f"({r['a'][0]},{r['a'][1]}) x ({r['b'][0]},{r['b'][1]}) -> {out}")
    return {"p": args.p, "q": args.q}, {"central_charge": c, "table": rows}, False, lines


def cmd_fusion_affine(args):
    if args.level < 0:
        raise UsageError("level must be a nonnegative integer")
    try:
        alg = load_algebra(args.algebra) if args.algebra else sl2()
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load algebra: {exc}")
    table = fusion_table(alg, args.level, args.max_level)
    rows = [{"a": list(a), "b": list(b), "c": list(c)} for a, b, c in table]
    fmt = lambda w: "(" + ",".join(str(x) for x in w) + ")"
    lines = [f"{alg.name} at level {args.level}"]
    lines += [f"{fmt(r['a'])} x {fmt(r['b'])} -> {fmt(r['c'])}" for r in rows]
    return {"algebra": alg.name, "level": args.level}, {"table": rows}, False, lines


def cmd_singular(args):
    if args.level < 1:
        raise UsageError("level must be positive")
    if args.level > args.max_level:
        raise UsageError(f"level {args.level} exceeds --max-level {args.max_level}")
    v = singular_vector(args.c, args.h, args.level, args.max_level)
    params = {"c": args.c, "h": args.h, "level": args.level}
    if v is None:
        return params, {"vector": None}, False, [f"no singular vector at level {args.level}"]
    terms = [{"partition": list(p), "coeff": c} for p, c in sorted(v.items(), reverse=True)]
    return params, {"vector": terms}, False, [format_singular(v)]


def cmd_rho(args):
    if args.t == 0:
        raise UsageError("t must be nonzero")
    if not (args.r >= 1 and args.s >= 1):
        raise UsageError("r and s must be positive")
    if args.r * args.s > args.max_level:
        raise UsageError(f"level r*s = {args.r * args.s} exceeds --max-level {args.max_level}")
    rho = rho_direct(args.r, args.s, args.lam, args.mu, args.t, args.max_level)
    factors = {f"{u},{v}": rho_closed_form(args.r, args.s, u, v, args.lam, args.mu, args.t)
               for u in range(args.r) for v in range(args.s)}
    product = Fraction(1)
    for x in factors.values():
        product *= x
    params = {"r": args.r, "s": args.s, "lambda": args.lam, "mu": args.mu, "t": args.t}
    result = {"rho": rho, "R": factors, "R_product": product, "rho_squared": rho * rho}
    lines = [f"{rho}", f"rho^2 = {rho * rho}", f"prod R = {product}"]
    return params, result, False, lines


def cmd_verify(args):
    from .suite import run_suite

    if args.depth is None:
        args.depth = 8
    results = run_suite(args.depth, args.seed)
    rows, lines = [], []
    for name, r in results:
        row = {"instance": name, "identity": r.identity, "passed": r.passed, "checked": r.checked}
        line = f"{name}: {r.describe()}"
        if not r.passed:
            row.update({"coefficient": r.coefficient, "lhs": r.lhs, "rhs": r.rhs})
        rows.append(row)
        lines.append(line)
    ok = all(r.passed for _, r in results)
    lines.append("all identities pass" if ok else "FAILURES present")
    return {"depth": args.depth, "seed": args.seed}, {"checks": rows, "passed": ok}, False, lines


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--depth", type=int, default=None)
    common.add_argument("--max-level", type=int, default=DEFAULT_MAX_LEVEL)

    parser = _Parser(prog="lambdabracket", description="Lambda-bracket calculus for intertwiners.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fusion = sub.add_parser("fusion", help="fusion tables", parents=[common])
    fsub = fusion.add_subparsers(dest="family", required=True, parser_class=_Parser)
    fv = fsub.add_parser("virasoro", parents=[common], help="minimal-model fusion rules")
    fv.add_argument("--p", type=int, required=True)
    fv.add_argument("--q", type=int, required=True)
    fv.set_defaults(func=cmd_fusion_virasoro)
    fa = fsub.add_parser("affine", parents=[common], help="affine fusion admissibility")
    fa.add_argument("--level", type=int, required=True)
    fa.add_argument("--algebra", default=None, help="algebra data file (default: built-in sl2)")
    fa.set_defaults(func=cmd_fusion_affine)

    sg = sub.add_parser("singular", parents=[common], help="Verma-module singular vector")
    sg.add_argument("--c", type=rational, required=True)
    sg.add_argument("--h", type=rational, required=True)
    sg.add_argument("--level", type=int, required=True)
    sg.set_defaults(func=cmd_singular)

    rh = sub.add_parser("rho", parents=[common], help="evaluate rho_{r,s} and its R factors")
    rh.add_argument("--r", type=int, required=True)
    rh.add_argument("--s", type=int, required=True)
    rh.add_argument("--lambda", dest="lam", type=rational, required=True)
    rh.add_argument("--mu", type=rational, required=True)
    rh.add_argument("--t", type=rational, required=True)
    rh.set_defaults(func=cmd_rho)

    vf = sub.add_parser("verify", parents=[common], help="run the identity suite")
    vf.add_argument("--seed", type=int, default=0)
    vf.set_defaults(func=cmd_verify)
    return parser


_NEGATIVE = re.compile(r"^-\d+(/\d+)?$")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """argparse reads ``--t -3/4`` as two options; rewrite it as ``--t=-3/4``."""
    out: list[str] = []
    for tok in argv:
        if _NEGATIVE.match(tok) and out and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        if args.depth is not None and not (0 <= args.depth <= MAX_DEPTH):
            raise UsageError(f"--depth must be between 0 and {MAX_DEPTH}")
        if args.max_level < 1:
            raise UsageError("--max-level must be positive")
        params, result, truncated, lines = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ArithmeticError, ValueError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        command = args.command if args.command != "fusion" else f"fusion {args.family}"
        doc = {"command": command, "params": params, "result": result, "truncated": truncated}
        print(json.dumps(to_jsonable(doc), sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    if args.command == "verify" and not result["passed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

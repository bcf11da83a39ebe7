"""Command-line frontend.

All residue output uses the {1..m} convention: the value m denotes the zero
class.  Sets print sorted ascending, comma-separated.  Exit codes: 0 for any
completed query (including "unsolvable" answers), 2 for bad input, 3 when a
requested enumeration exceeds the cap (IDEM_MAX_ENUM / --max-enum).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .arith import EnumerationCapError, build_modulus, canon, check_enum
from .idempotents import enumerate_idempotents, idem_class, order, tower_mod
from .residues import classify, normal_set, orbit, regular_set
from .congruence import gen_primitive_roots, omega_info, solve
from .counting import (
    builtin_function,
    classify_function,
    orbit_union_size,
    r_count,
    rho_closed_form,
    rho_count,
)
from .algebra import OPS, idem_op, verify_algebra
from .quadratic import kernel, sqrt_structure
from .audit import THEOREMS, run_audit


def _fmt_set(values) -> str:
    return ",".join(str(v) for v in sorted(values))


def _emit(args, payload: dict, text_lines: list[str]) -> int:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)
    return 0


# ---------------------------------------------------------------- commands


def _cmd_modinfo(args) -> int:
    mod = build_modulus(args.m)
    payload = {
        "m": mod.m,
        "factors": [[p, a] for p, a in mod.factorization.factors],
        "phi": mod.phi,
        "psi": mod.psi,
        "omega": mod.omega,
        "square_free": mod.square_free,
        "weakly_even": mod.weakly_even,
        "barely_even": mod.barely_even,
    }
    fact = " * ".join(
        f"{p}^{a}" if a > 1 else str(p) for p, a in mod.factorization.factors
    ) or "1"
    return _emit(args, payload, [
        f"m = {mod.m} = {fact}",
        f"phi = {mod.phi}",
        f"psi = {mod.psi}",
        f"omega = {mod.omega}",
        f"square_free = {mod.square_free}",
        f"weakly_even = {mod.weakly_even}",
        f"barely_even = {mod.barely_even}",
    ])


def _cmd_idempotents(args) -> int:
    check_enum(args.m)
    es = enumerate_idempotents(args.m).elements
    payload = {"m": args.m, "idempotents": sorted(es)}
    return _emit(args, payload, [_fmt_set(es)])


def _cmd_order(args) -> int:
    info = order(args.m, args.a)
    payload = {
        "m": args.m,
        "a": canon(args.a, args.m),
        "order": info.order,
        "idem_class": info.idem_class,
    }
    return _emit(args, payload, [
        f"|{payload['a']}|_{args.m} = {info.order}",
        f"idempotent class: {info.idem_class}",
    ])


def _cmd_classify(args) -> int:
    c = classify(args.m, args.a)
    payload = {
        "m": args.m,
        "a": c.a,
        "is_normal": c.is_normal,
        "is_regular": c.is_regular,
        "order": c.order,
        "idem_class": c.idem_class,
        "mu": c.mu,
        "delta": c.delta,
    }
    return _emit(args, payload, [
        f"a = {c.a} (mod {args.m})",
        f"normal = {c.is_normal}",
        f"regular = {c.is_regular}",
        f"order = {c.order}",
        f"idem_class = {c.idem_class}",
        f"mu = {c.mu}",
        f"delta = {c.delta}",
    ])


def _cmd_sets(args) -> int:
    e = args.cls
    want_regular = args.regular or not args.normal
    want_normal = args.normal or not args.regular
    payload: dict = {"m": args.m}
    lines = []
    if want_regular:
        rs = sorted(regular_set(args.m, e))
        payload["regular"] = rs
        lines.append(f"regular: {_fmt_set(rs)}")
    if want_normal:
        ns = sorted(normal_set(args.m, e))
        payload["normal"] = ns
        lines.append(f"normal: {_fmt_set(ns)}")
    if e is not None:
        payload["class"] = canon(e, args.m)
    return _emit(args, payload, lines)


def _cmd_orbit(args) -> int:
    ob = orbit(args.m, args.a)
    payload = {
        "m": args.m,
        "a": canon(args.a, args.m),
        "orbit": sorted(ob.elements),
    }
    return _emit(args, payload, [_fmt_set(ob.elements)])


def _cmd_solve(args) -> int:
    res = solve(args.m, args.k, args.a)
    payload = {
        "m": args.m,
        "k": args.k,
        "a": res.a,
        "solutions": sorted(res.solutions),
        "regular_solutions": sorted(res.regular_solutions),
        "solvable": res.solvable,
    }
    lines = [
        f"x^{args.k} = {res.a} (mod {args.m})",
        f"solutions: {_fmt_set(res.solutions) or '(none)'}",
        f"regular solutions: {_fmt_set(res.regular_solutions) or '(none)'}",
        f"solvable: {res.solvable}",
    ]
    if res.bc01_verdict is not None:
        payload["criterion_verdict"] = res.bc01_verdict
        lines.append(f"criterion verdict: {res.bc01_verdict}")
    return _emit(args, payload, lines)


def _cmd_omega(args) -> int:
    info = omega_info(args.m, args.a)
    payload = {
        "m": args.m,
        "a": info.a,
        "omega": info.omega_a,
        "omega_set": sorted(info.omega_set),
        "ind_sup": info.ind_sup,
    }
    return _emit(args, payload, [
        f"omega_{args.m}({info.a}) = {info.omega_a}",
        f"maximizers: {_fmt_set(info.omega_set)}",
        f"ind_sup = {info.ind_sup}",
    ])


def _cmd_gproots(args) -> int:
    gs = gen_primitive_roots(args.m)
    payload = {"m": args.m, "gproots": sorted(gs)}
    return _emit(args, payload, [_fmt_set(gs)])


def _cmd_counts(args) -> int:
    mod = build_modulus(args.m)
    e = canon(args.e, args.m)
    r = r_count(mod, e, args.k)
    rho = rho_count(mod, e, args.k)
    union = orbit_union_size(mod, e, args.k)
    payload = {
        "m": args.m,
        "e": e,
        "k": args.k,
        "r": r,
        "rho": rho,
        "union_size": union.true_size,
        "union_formula": union.formula_value,
    }
    lines = [
        f"r_{args.m}^{e}({args.k}) = {r}",
        f"rho_{args.m}^{e}({args.k}) = {rho}",
        f"orbit union size = {union.true_size} (formula: {union.formula_value})",
    ]
    if mod.weakly_even and e == canon(1, args.m):
        cf = rho_closed_form(mod, args.k)
        payload["rho_closed_form"] = cf
        lines.append(f"rho closed form = {cf}")
    return _emit(args, payload, lines)


def _cmd_classify_fn(args) -> int:
    f = builtin_function(args.name)
    cls = classify_function(f, args.n)
    payload = {
        "function": args.name,
        "bound": args.n,
        "multiplicative": cls.is_m,
        "quasimultiplicative": cls.is_qm,
        "division_invariant": cls.is_di,
        "division_invariant_prime_powers": cls.is_di_pp,
        "witnesses": {k: list(v) for k, v in cls.witnesses.items()},
    }
    lines = [
        f"{args.name} on 1..{args.n}:",
        f"multiplicative = {cls.is_m}",
        f"quasimultiplicative = {cls.is_qm}",
        f"division-invariant = {cls.is_di}",
        f"division-invariant on prime powers = {cls.is_di_pp}",
    ]
    for label, w in sorted(cls.witnesses.items()):
        lines.append(f"counterexample [{label}]: {w}")
    return _emit(args, payload, lines)


def _cmd_algebra(args) -> int:
    rep = verify_algebra(args.m)
    payload = {
        "m": args.m,
        "ok": rep.ok,
        "laws": [
            {
                "law": l.law,
                "passed": l.passed,
                "counterexample": list(l.counterexample) if l.counterexample else None,
            }
            for l in rep.laws
        ],
    }
    lines = [f"{l.law}: {'ok' if l.passed else 'FAIL ' + repr(l.counterexample)}"
             for l in rep.laws]
    lines.append(f"all laws: {'ok' if rep.ok else 'FAIL'}")
    return _emit(args, payload, lines)


def _cmd_idemop(args) -> int:
    if args.op == "complement" and args.e2 is not None:
        raise ValueError("complement takes a single operand")
    out = idem_op(args.m, args.op, args.e1, args.e2)
    payload = {"m": args.m, "op": args.op, "e1": canon(args.e1, args.m),
               "result": out}
    if args.e2 is not None:
        payload["e2"] = canon(args.e2, args.m)
    return _emit(args, payload, [str(out)])


def _cmd_quadratic(args) -> int:
    ker = kernel(args.m, args.k)
    payload = {
        "m": args.m,
        "k": ker.k,
        "solutions": sorted(ker.solutions),
        "pairs": sorted(
            sorted((r, ker.rbar(r))) for r in ker.solutions if r <= ker.rbar(r)
        ),
    }
    return _emit(args, payload, [
        f"x^2 = {ker.k}x (mod {args.m})",
        f"solutions: {_fmt_set(ker.solutions)}",
    ])


def _cmd_sqrt(args) -> int:
    rep = sqrt_structure(args.m, args.e)
    payload = {
        "m": args.m,
        "e": rep.e,
        "roots": sorted(rep.roots),
        "size_formula": rep.size_formula,
        "product": rep.product,
        "product_formula": rep.product_formula,
    }
    return _emit(args, payload, [
        f"regular roots of x^2 = {rep.e} (mod {args.m}): {_fmt_set(rep.roots)}",
        f"count = {len(rep.roots)} (formula: {rep.size_formula})",
        f"product = {rep.product} (formula: {rep.product_formula})",
    ])


def _cmd_tower(args) -> int:
    value = tower_mod(args.m, args.base, args.height)
    chain = []
    mm = args.m
    while mm > 1:
        n = order(mm, args.base).order
        chain.append({"modulus": mm, "order": n})
        if n == mm:
            break
        mm = n
    payload = {
        "m": args.m,
        "base": args.base,
        "height": args.height,
        "value": value,
        "chain": chain,
        "idem_power": idem_class(args.m, args.base),
    }
    lines = [str(value)]
    for link in chain:
        lines.append(
            f"|{canon(args.base, link['modulus'])}|_{link['modulus']}"
            f" = {link['order']}"
        )
    lines.append(
        f"{canon(args.base, args.m)}^{chain[0]['order'] if chain else 1}"
        f" = {payload['idem_power']} (mod {args.m})"
    )
    return _emit(args, payload, lines)


def _cmd_audit(args) -> int:
    try:
        lo_s, hi_s = args.range.split("..")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ValueError(f"range must look like <lo>..<hi>, got {args.range!r}")
    ids = None
    if args.theorems:
        ids = [t.strip() for t in args.theorems.split(",") if t.strip()]
    report = run_audit(lo, hi, ids)
    doc = report.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc + "\n")
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        for res in report.results:
            print(f"{res.theorem_id}: {res.status}"
                  + (f" ({len(res.findings)} findings)" if res.findings else ""))
    return 0


# ---------------------------------------------------------------- dispatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idemod",
        description="Composite moduli through their idempotent residues "
        "(residues print in {1..m}; m denotes the zero class).",
    )
    parser.add_argument("--json", action="store_true",
                        help="structured output")
    parser.add_argument("--max-enum", type=int, metavar="N",
                        help="override the enumeration cap (IDEM_MAX_ENUM)")
    sub = parser.add_subparsers(dest="command", required=True)

    def _trailing_flags(p):
        # Accept --json/--max-enum after the subcommand as well; SUPPRESS
        # keeps the main parser's value when the flag precedes the command.
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.add_argument("--max-enum", type=int, metavar="N",
                       default=argparse.SUPPRESS)
        return p

    def cmd(name, fn, **pos):
        p = _trailing_flags(sub.add_parser(name))
        for arg, typ in pos.items():
            p.add_argument(arg, type=typ)
        p.set_defaults(fn=fn)
        return p

    cmd("modinfo", _cmd_modinfo, m=int)
    cmd("idempotents", _cmd_idempotents, m=int)
    cmd("order", _cmd_order, m=int, a=int)
    cmd("classify", _cmd_classify, m=int, a=int)
    p = cmd("sets", _cmd_sets, m=int)
    p.add_argument("--regular", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--class", dest="cls", type=int, default=None)
    cmd("orbit", _cmd_orbit, m=int, a=int)
    cmd("solve", _cmd_solve, m=int, k=int, a=int)
    cmd("omega", _cmd_omega, m=int, a=int)
    cmd("gproots", _cmd_gproots, m=int)
    cmd("counts", _cmd_counts, m=int, e=int, k=int)
    p = _trailing_flags(sub.add_parser("classify-fn"))
    p.add_argument("name")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_classify_fn)
    cmd("algebra", _cmd_algebra, m=int)
    p = _trailing_flags(sub.add_parser("idemop"))
    p.add_argument("m", type=int)
    p.add_argument("op", choices=OPS)
    p.add_argument("e1", type=int)
    p.add_argument("e2", type=int, nargs="?", default=None)
    p.set_defaults(fn=_cmd_idemop)
    cmd("quadratic", _cmd_quadratic, m=int, k=int)
    cmd("sqrt", _cmd_sqrt, m=int, e=int)
    cmd("tower", _cmd_tower, m=int, base=int, height=int)
    p = _trailing_flags(sub.add_parser("audit"))
    p.add_argument("range", help="<lo>..<hi>")
    p.add_argument("--theorems", help="comma-separated theorem ids "
                   f"(known: {', '.join(THEOREMS)})")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.max_enum is not None:
        if args.max_enum < 1:
            print(f"invalid --max-enum {args.max_enum}", file=sys.stderr)
            return 2
        os.environ["IDEM_MAX_ENUM"] = str(args.max_enum)
    try:
        return args.fn(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

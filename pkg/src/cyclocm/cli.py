"""Command-line front end.  Every subcommand prints one JSON object (or
``key: value`` lines with ``--text``) and exits 0 on success, 1 when a search
came back empty and 2 on bad input."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import charsum, cyclomap, poly, search, special
from .cyclomap import NotAPermutation, PsiFunction
from .ff import FieldError, field_new, parse_field_spec

EXIT_OK, EXIT_EXHAUSTED, EXIT_INVALID = 0, 1, 2
TABLE1_DEFAULT_QMAX = 11
LONG_Q = 13


class UsageError(ValueError):
    pass


def _ints(text):
    return [int(t) for t in text.split(",") if t.strip()]


def _field(args):
    modulus = _ints(args.modulus) if args.modulus else None
    if args.q is not None:
        return parse_field_spec(args.q, modulus)
    if args.p is not None:
        return field_new(args.p, args.f or 1, modulus)
    raise UsageError("a field is required: --q Q (or p^f), or --p P [--f F]")


def _elements(ctx, text):
    return [ctx.parse_element(t) for t in text.split(",") if t.strip()]


def _psi(args) -> PsiFunction:
    if args.psi:
        if not args.h:
            raise UsageError("--psi needs the cycle values in --h, e.g. --h 3,4")
        return PsiFunction.parse(f"{args.psi}; h={args.h}")
    if not args.h:
        raise UsageError('need --h "(0,1)(2); h=3,4" or --psi with --h values')
    return PsiFunction.parse(args.h)


def _polys(ctx, args):
    if not args.polys:
        raise UsageError("need --polys, e.g. --polys 0,1 1,1")
    return [poly.parse_poly(ctx, t) for t in args.polys]


def _ct(ct):
    return {str(k): v for k, v in ct.items()}


def _monomial(ct):
    return " ".join(f"x{k}" if v == 1 else f"x{k}^{v}" for k, v in ct.items())


def _omega(ctx, args):
    return None if args.omega is None else ctx.parse_element(args.omega)


def _map_out(ctx, fmap):
    ct = cyclomap.cycle_type(fmap)
    return {
        "q": ctx.q, "d": fmap.d, "omega": fmap.omega,
        "a": list(fmap.a),
        "a_text": [ctx.format_element(x) for x in fmap.a],
        "cycle_type": _ct(ct), "monomial": _monomial(ct),
    }


# subcommands: each returns (payload, exit code)

def cmd_field_info(args):
    ctx = _field(args)
    out = {"q": ctx.q, "p": ctx.p, "f": ctx.f,
           "modulus": list(ctx.modulus) if ctx.f > 1 else None,
           "omega": ctx.omega, "omega_text": ctx.format_element(ctx.omega),
           "primitive_roots": len(ctx.primitive_roots())}
    if args.x is not None:
        x = ctx.parse_element(args.x)
        out["x"] = x
        out["order"] = ctx.element_order(x) if x else None
        out["log"] = ctx.discrete_log(x) if x else None
    return out, EXIT_OK


def cmd_ctype(args):
    ctx = _field(args)
    if args.d is None or not args.a:
        raise UsageError("ctype needs --d and --a")
    fmap = cyclomap.cyclo_new(ctx, args.d, _elements(ctx, args.a), _omega(ctx, args))
    psi = cyclomap.induced_coset_perm(fmap)
    if psi is None:
        return {"q": ctx.q, "d": fmap.d, "a": list(fmap.a), "permutation": False}, EXIT_EXHAUSTED
    out = _map_out(ctx, fmap)
    out["permutation"] = True
    out["psi"] = cyclomap.format_cycles(cyclomap.perm_cycles(psi))
    out["h"] = str(cyclomap.sym_function_of(fmap))
    if args.check:
        oracle = cyclomap.cycle_type_oracle(fmap)
        out["oracle"] = _ct(oracle)
        out["agree"] = oracle == dict(sorted(cyclomap.cycle_type(fmap).items()))
    return out, EXIT_OK


def cmd_gamma_h(args):
    h = _psi(args)
    if args.q is not None or args.p is not None:
        q = _field(args).q
    else:
        raise UsageError("gamma-h needs --q")
    if not cyclomap.is_admissible(h, q):
        return {"q": q, "h": str(h), "admissible": False}, EXIT_INVALID
    ct = cyclomap.gamma_h(h, q)
    return {"q": q, "h": str(h), "admissible": True,
            "gamma": _ct(ct), "monomial": _monomial(ct)}, EXIT_OK


def _construct(args, builder):
    ctx = _field(args)
    h = _psi(args)
    fmap = builder(ctx, h, _omega(ctx, args))
    out = _map_out(ctx, fmap)
    out["h"] = str(h)
    out["gamma"] = _ct(cyclomap.gamma_h(h, ctx.q))
    out["agree"] = cyclomap.cycle_type(fmap) == cyclomap.gamma_h(h, ctx.q)
    return out, EXIT_OK if out["agree"] else EXIT_EXHAUSTED


def cmd_construct_h(args):
    return _construct(args, cyclomap.construct_from_h)


def cmd_construct_fomega(args):
    return _construct(args, cyclomap.construct_f_omega)


def cmd_charsum_verify(args):
    """Compare the indicator character sums with direct order/coset tests over the whole field."""
    ctx = _field(args)
    n = ctx.q - 1
    worst = 0.0
    checks = 0
    for e in charsum.divisors(n):
        for xi in range(ctx.q):
            want = 1.0 if xi and ctx.element_order(xi) == e else 0.0
            for formula in ("A", "B"):
                worst = max(worst, abs(charsum.f_e_sum(ctx, e, xi, formula) - want))
                checks += 1
    for d in charsum.divisors(n):
        for i in range(d):
            for xi in range(ctx.q):
                want = 1.0 if xi and (ctx.discrete_log(xi) - i) % d == 0 else 0.0
                worst = max(worst, abs(charsum.g_di_sum(ctx, d, i, xi) - want))
                checks += 1
    ok = worst < charsum.IDENTITY_TOL
    return {"q": ctx.q, "checks": checks, "max_error": worst, "ok": ok}, EXIT_OK if ok else EXIT_EXHAUSTED


def cmd_weil(args):
    ctx = _field(args)
    polys = _polys(ctx, args)
    if not args.chars:
        raise UsageError("weil needs --chars, one exponent per polynomial")
    chars = _ints(args.chars)
    s = charsum.weil_sum(ctx, polys, chars)
    out = {"q": ctx.q, "sum": [s.real, s.imag], "abs": abs(s)}
    if all(k % (ctx.q - 1) == 0 for k in chars):
        out["principal_value"] = charsum.principal_sum_value(ctx, polys)
        out["ok"] = charsum.near(s, out["principal_value"], charsum.ROUND_TOL)
    else:
        out["bound"] = charsum.weil_bound(ctx, polys)
        out["ok"] = charsum.weil_bound_check(ctx, polys, chars)
    return out, EXIT_OK if out["ok"] else EXIT_EXHAUSTED


def cmd_count(args):
    ctx = _field(args)
    polys = _polys(ctx, args)
    if not args.elist:
        raise UsageError("count needs --elist, one order per polynomial")
    n = charsum.count_carlitz(ctx, polys, _ints(args.elist))
    return {"q": ctx.q, "found": n > 0, "count": n}, EXIT_OK


def cmd_count_gen(args):
    ctx = _field(args)
    polys = _polys(ctx, args)
    if not (args.dlist and args.jlist and args.d):
        raise UsageError("count-gen needs --dlist, --jlist and --d")
    dl, jl = _ints(args.dlist), _ints(args.jlist)
    n = charsum.count_carlitz_gen(ctx, polys, dl, jl, args.d)
    via = charsum.count_via_indicators(ctx, polys, dl, jl, args.d)
    return {"q": ctx.q, "found": n > 0, "count": n, "via_characters": via,
            "agree": n == via, "c": str(charsum.c_constant(dl, args.d))}, EXIT_OK


def cmd_c_constant(args):
    if not args.dlist or args.d is None:
        raise UsageError("c-constant needs --dlist and --d")
    return {"c": str(charsum.c_constant(_ints(args.dlist), args.d))}, EXIT_OK


def _report(rep, **head):
    out = dict(head)
    out.update(rep.to_dict())
    return out, EXIT_OK if rep.found else EXIT_EXHAUSTED


def cmd_find_xi(args):
    ctx = _field(args)
    polys = _polys(ctx, args)
    if not args.dlist:
        raise UsageError("find-xi needs --dlist")
    if args.jlist:
        if args.d is None:
            raise UsageError("--jlist needs --d")
        rep = search.find_xi_gen(ctx, polys, _ints(args.dlist), _ints(args.jlist), args.d)
    else:
        rep = search.find_xi(ctx, polys, _ints(args.dlist))
    return _report(rep, q=ctx.q)


def cmd_find_complete(args):
    ctx = _field(args)
    h = _psi(args)
    cs = _elements(ctx, args.c) if args.c else [1]
    return _report(search.find_complete_cyclotomic(ctx, h, cs), q=ctx.q, h=str(h))


def cmd_realize_cosets(args):
    ctx = _field(args)
    if args.d is None or not args.c or not args.sigma:
        raise UsageError("realize-cosets needs --d, --c and --sigma")
    cs = _elements(ctx, args.c)
    sigmas = [_ints(s) for s in args.sigma]
    return _report(search.realize_coset_maps(ctx, args.d, cs, sigmas), q=ctx.q, d=args.d)


def cmd_thm3(args):
    ctx = _field(args)
    if args.d is None:
        raise UsageError("thm3 needs --d")
    return _report(search.construct_thm3(ctx, args.d, args.bound), q=ctx.q)


def cmd_special_count(args):
    ctx = _field(args)
    rep = special.enumerate_special(ctx, args.mode, symmetry=not args.no_symmetry,
                                    workers=args.workers, checkpoint=args.checkpoint)
    out = {"q": ctx.q}
    if args.mode == "first":
        out["found"] = rep.found
        if rep.found:
            out["cycle"] = special.format_cycle(ctx, rep.witness["cycle"])
    else:
        out["count"] = rep.count
        if args.mode == "all":
            out["cycles"] = [special.format_cycle(ctx, special.table_to_cycle(t)) for t in rep.obj]
    if args.report:
        out["candidates_tested"] = rep.candidates_tested
        out["exhausted"] = rep.exhausted
    if args.mode == "first" and not rep.found:
        return out, EXIT_EXHAUSTED
    return out, EXIT_OK


def cmd_table1(args):
    qmax = args.qmax
    if qmax >= LONG_Q and not args.allow_long:
        raise UsageError(f"counting q >= {LONG_Q} is gated; pass --allow-long")
    rows = []
    ok = True
    for q, (expected, example) in special.TABLE1.items():
        ctx = special.table1_field(q)
        row = {"q": q, "count": None, "expected": expected}
        if q <= min(qmax, LONG_Q):
            row["count"] = special.enumerate_special(ctx, workers=args.workers).count
            ok &= expected is None or row["count"] == expected
        row["example"] = example
        if example is not None:
            row["example_special"] = search.is_special(ctx, special.parse_mapping(ctx, example))
            ok &= row["example_special"]
        rows.append(row)
    return {"rows": rows, "ok": ok}, EXIT_OK if ok else EXIT_EXHAUSTED


def cmd_prop74(args):
    if args.p is None:
        raise UsageError("prop74 needs --p")
    ctx = field_new(args.p)
    t = special.prop74_map(args.p, args.b)
    return {"p": args.p, "b": args.b % args.p, "special": search.is_special(ctx, t),
            "cycle": special.format_cycle(ctx, special.table_to_cycle(t))}, EXIT_OK


COMMANDS = {
    "field-info": (cmd_field_info, "field parameters and the designated primitive root"),
    "ctype": (cmd_ctype, "cycle type of a cyclotomic map given by --d and --a"),
    "gamma-h": (cmd_gamma_h, "cycle type prescribed by a Sym(d)-function"),
    "construct-h": (cmd_construct_h, "build a map realizing a Sym(d)-function"),
    "construct-fomega": (cmd_construct_fomega, "build f_omega for a special permutation"),
    "charsum-verify": (cmd_charsum_verify, "check the indicator character sums over one field"),
    "weil": (cmd_weil, "a mixed character sum and its Weil bound"),
    "count": (cmd_count, "count xi with prescribed orders of Q_i(xi)"),
    "count-gen": (cmd_count_gen, "count with orders and cosets, directly and via characters"),
    "c-constant": (cmd_c_constant, "the exact density constant c(d_1..d_r; d)"),
    "find-xi": (cmd_find_xi, "first xi meeting the order (and coset) conditions"),
    "find-complete": (cmd_find_complete, "complete cyclotomic map of a prescribed cycle type"),
    "realize-cosets": (cmd_realize_cosets, "map whose translates act on cosets as prescribed"),
    "thm3": (cmd_thm3, "non-additive map with f and f+id both (q-1)-cycles"),
    "special-count": (cmd_special_count, "count special complete mappings of F_q"),
    "table1": (cmd_table1, "reproduce the table of special complete mapping counts"),
    "prop74": (cmd_prop74, "x -> x+b as a special complete mapping of F_p"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", help="field order, as q or p^f")
    common.add_argument("--p", type=int)
    common.add_argument("--f", type=int)
    common.add_argument("--modulus", help="monic modulus coefficients c0,...,cf")
    common.add_argument("--d", type=int)
    common.add_argument("--a", help="branch constants, comma separated")
    common.add_argument("--omega", help="primitive root labelling the cosets")
    common.add_argument("--h", help='Sym(d)-function "(0,1)(2); h=3,4", or values with --psi')
    common.add_argument("--psi", help="coset permutation in cycle notation")
    common.add_argument("--c", help="translation constants, comma separated")
    common.add_argument("--polys", nargs="+", help="polynomials as ascending coefficients")
    common.add_argument("--chars", help="character exponents, one per polynomial")
    common.add_argument("--elist", help="element orders, one per polynomial")
    common.add_argument("--dlist")
    common.add_argument("--jlist")
    common.add_argument("--sigma", nargs="+", help="coset maps s_j as value lists")
    common.add_argument("--x", help="an element to describe")
    common.add_argument("--b", type=int, default=1)
    common.add_argument("--bound", type=int)
    common.add_argument("--check", action="store_true", help="also run the brute-force oracle")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--checkpoint")
    common.add_argument("--mode", choices=("count", "first", "all"), default="count")
    common.add_argument("--no-symmetry", action="store_true")
    common.add_argument("--report", action="store_true", help="add search statistics")
    common.add_argument("--qmax", type=int, default=TABLE1_DEFAULT_QMAX)
    common.add_argument("--allow-long", action="store_true")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="fmt", action="store_const", const="json")
    out.add_argument("--text", dest="fmt", action="store_const", const="text")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="cyclocm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def _emit(payload, fmt):
    if fmt == "text":
        for k, v in payload.items():
            print(f"{k}: {v if isinstance(v, (str, int, float)) or v is None else json.dumps(v)}")
    else:
        print(json.dumps(payload, separators=(",", ":")))


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    handler = COMMANDS[args.command][0]
    try:
        payload, code = handler(args)
    except (UsageError, FieldError, NotAPermutation, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INVALID
    _emit(payload, args.fmt or "json")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end: ``ru4 <command> [options]``.

Exit status: 0 on success, 2 on a usage or parse error, 3 when an argument
violates a precondition (even length, non-divisor, enumeration bound...).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stdout

from . import codes as C
from .factor import PreconditionError, check_odd_length, factor_xn1, factor_xn1_f2, hensel_lift
from .galois import context_for_length, gr_construct
from .poly import NotCoprimeError, NotRegularError, Polynomial, format_polynomial
from .ring import ring_by_name


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _fmt(p, args) -> str:
    return format_polynomial(p.coeffs, args.paper_style)


def _poly(text: str, ring="R") -> Polynomial:
    try:
        return Polynomial.parse(text, ring)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _context(args):
    modulus = _poly(args.modulus) if args.modulus else None
    if args.galois_r is not None:
        return gr_construct(args.galois_r, modulus)
    if modulus is not None:
        return gr_construct(modulus.degree, modulus)
    return None


def _read_code(args) -> C.CyclicCode:
    check_odd_length(args.n)
    if not args.g:
        raise UsageError("at least one -g generator is required")
    if args.p is not None or args.a is not None:
        if len(args.g) != 1:
            raise UsageError("-p/-a need exactly one -g")
        g = _poly(args.g[0], "Z4")
        p = _poly(args.p or "0", "Z4")
        a = _poly(args.a or "0", "Z4")
        return C.CyclicCode.from_form(args.n, g, p, a)
    return C.CyclicCode(args.n, [_poly(g) for g in args.g])


# --------------------------------------------------------------------------
# commands


def cmd_factor(args):
    check_odd_length(args.n)
    ring = ring_by_name(args.ring)
    rec = factor_xn1_f2(args.n) if ring.name == "F2" else factor_xn1(args.n, ring)
    if args.json:
        out = rec.to_json()
        if args.paper_style:
            out["factors"] = [_fmt(f, args) for f in rec.factors]
        print(_dump(out))
        return
    print(f"x^{args.n}-1 over {ring.name}:")
    for f, c in zip(rec.factors, rec.cosets):
        print(f"  {_fmt(f, args):<32} coset {sorted(c.members)}")


def cmd_lift(args):
    g = _poly(args.g, "F2")
    lifted = hensel_lift(g, args.ring, args.n)
    if args.json:
        print(_dump({"input": str(g), "ring": ring_by_name(args.ring).name, "lift": _fmt(lifted, args)}))
    else:
        print(_fmt(lifted, args))


def cmd_galois(args):
    ctx = _context(args) or gr_construct(args.galois_r or 4)
    table = ctx.power_table()
    if args.json:
        print(
            _dump(
                {
                    "r": ctx.r,
                    "modulus": _fmt(ctx.modulus, args),
                    "size": ctx.size,
                    "units": ctx.unit_count,
                    "powers": {str(k): p.to_json() for k, p in table},
                }
            )
        )
        return
    print(f"GR(R,{ctx.r}) = R[x]/<{_fmt(ctx.modulus, args)}>, xi = x mod the modulus")
    for k, p in table:
        print(f"  xi^{k} = {p.format('xi', args.paper_style)}")


def cmd_roots(args):
    check_odd_length(args.n)
    ctx = _context(args) or context_for_length(args.n)
    roots = ctx.nth_roots(args.n)
    step = ctx.order // args.n
    if args.json:
        print(_dump({"n": args.n, "r": ctx.r, "modulus": str(ctx.modulus), "step": step, "roots": [z.to_json() for z in roots]}))
        return
    print(f"{args.n}-th roots of unity in GR(R,{ctx.r}): zeta = xi^{step}")
    for j, z in enumerate(roots):
        print(f"  zeta^{j} = {z.format('xi', args.paper_style)}")


def cmd_minpoly(args):
    check_odd_length(args.n)
    ctx = _context(args) or context_for_length(args.n)
    exps = args.i if args.i else [0]
    polys = {i: ctx.minimal_polynomial(i, args.n) for i in exps}
    lcm = ctx.lcm_minimal_polynomials(exps, args.n)
    if args.json:
        print(_dump({"n": args.n, "r": ctx.r, "minimal_polynomials": {str(i): _fmt(p, args) for i, p in polys.items()}, "lcm": _fmt(lcm, args)}))
        return
    for i, p in polys.items():
        print(f"M_{i} = {_fmt(p, args)}")
    if len(polys) > 1:
        print(f"lcm = {_fmt(lcm, args)}")


def cmd_code_analyze(args):
    code = _read_code(args)
    limit = C.max_enum(args.max_enum)
    distances = not args.no_distance
    if args.json:
        print(_dump(code.to_json(distances, limit)))
        return
    g, p, a = code.canonical
    s = code.summary(distances, limit)
    rep = code.rank_and_spanning()
    print(f"n = {code.n}")
    print(f"canonical: g = {_fmt(g, args)}, p = {_fmt(p, args)}, a = {_fmt(a, args)}")
    print(f"local ideals: {', '.join(loc.label for loc in code.local_ideals)}")
    print(f"size = {s.size}")
    print(f"rank = {s.rank} (ideal generators: {s.ideal_generators})")
    print(f"rank ({rep.form} form, {rep.provenance}) = {rep.claim}; oracle = {rep.oracle_rank}")
    print(f"R-free = {str(s.is_R_free).lower()}" + (f", free rank = {s.free_rank}" if s.is_R_free else ""))
    if s.dH is not None:
        print(f"dH = {s.dH}, dLee = {s.dLee}")
    elif distances and code.size > 1:
        print(f"distances skipped: |C| exceeds the enumeration bound {limit}")


def cmd_code_distance(args):
    code = _read_code(args)
    d = code.min_distance(args.metric, C.max_enum(args.max_enum))
    if args.json:
        print(_dump({"n": code.n, "metric": args.metric, "distance": d}))
    else:
        print(d if d is not None else "none (zero code)")


def cmd_code_dual(args):
    code = _read_code(args)
    d = C.dual(code)
    if args.json:
        out = d.to_json(distances=False)
        out["size_product"] = code.size * d.size
        print(_dump(out))
        return
    g, p, a = d.canonical
    print(f"dual: g = {_fmt(g, args)}, p = {_fmt(p, args)}, a = {_fmt(a, args)}")
    print(f"|C| * |C^perp| = {code.size} * {d.size} = {code.size * d.size}")


def cmd_code_idempotent(args):
    code = _read_code(args)
    e = C.idempotent_generator(code)
    dual_e = C.dual_idempotent(e)
    if args.json:
        print(_dump({"n": code.n, "idempotent": _fmt(e, args), "dual_idempotent": _fmt(dual_e, args)}))
    else:
        print(f"e = {_fmt(e, args)}")
        print(f"1 - e(x^-1) = {_fmt(dual_e, args)}")


def cmd_code_gray(args):
    code = _read_code(args)
    image = code.gray_module()
    gens = [list(C.gray_vector(g)) for g in code.generators]
    if args.json:
        print(_dump({"n": code.n, "length": 2 * code.n, "size": image.size, "generator_images": gens}))
        return
    print(f"Gray image: Z4-linear code of length {2 * code.n} with {image.size} codewords")
    for g, v in zip(code.generators, gens):
        print(f"  phi({_fmt(g, args)}) = {' '.join(map(str, v))}")


def cmd_code_enumerate(args):
    check_odd_length(args.n)
    count = C.count_cyclic_codes(args.n, args.choices)
    if args.count_only:
        print(_dump({"n": args.n, "choices": args.choices, "count": count}) if args.json else count)
        return
    rows = []
    for code in C.enumerate_cyclic_codes(args.n, args.choices):
        g, p, a = code.canonical
        rows.append({"local_ideals": [loc.label for loc in code.local_ideals], "g": str(g), "p": str(p), "a": str(a), "size": code.size})
    if args.json:
        print(_dump({"n": args.n, "choices": args.choices, "count": count, "codes": rows}))
        return
    for r in rows:
        print(f"{' + '.join(r['local_ideals']):<40} g={r['g']}  p={r['p']}  a={r['a']}  |C|={r['size']}")
    print(f"total: {count}")


def cmd_code_bch(args):
    code = _read_code(args)
    ctx = _context(args)
    res = C.bch_bound(code, ctx)
    if args.json:
        print(
            _dump(
                {
                    "n": code.n,
                    "root_exponents": sorted(res.root_exponents),
                    "longest_run": res.longest_run,
                    "run_start": res.run_start,
                    "bound": res.bound,
                    "literal_bound": res.literal_bound,
                    "applicable": res.applicable,
                }
            )
        )
        return
    print(f"root exponents: {sorted(res.root_exponents)}")
    print(f"longest run: {res.longest_run} (from {res.run_start})")
    print(f"bound: d >= {res.bound} (literal reading: d >= {res.literal_bound})")


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON (keys sorted)")
    common.add_argument("--paper-style", action="store_true", help="print coefficient 3 as -1")

    gal = _Parser(add_help=False)
    gal.add_argument("--galois-r", type=int, default=None, help="extension degree r of GR(R,r)")
    gal.add_argument("--modulus", default=None, help="basic primitive modulus of GR(R,r)")

    code_args = _Parser(add_help=False)
    code_args.add_argument("-n", type=int, required=True, help="odd code length")
    code_args.add_argument("-g", action="append", default=[], help="generator polynomial (repeatable)")
    code_args.add_argument("-p", default=None, help="p in <g+up, ua> (with -a)")
    code_args.add_argument("-a", default=None, help="a in <g+up, ua> (with -p)")
    code_args.add_argument("--max-enum", type=int, default=None, help="enumeration bound (default 2^24 or RU4_MAX_ENUM)")

    parser = _Parser(prog="ru4", description="Cyclic codes over Z4+uZ4 of odd length.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("factor", parents=[common], help="factor x^n-1")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--ring", default="Z4", choices=["F2", "Z4", "R", "f2", "z4", "r"])
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("lift", parents=[common], help="Hensel lift of an F2 divisor of x^n-1")
    p.add_argument("-g", required=True)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--ring", default="Z4", choices=["Z4", "R", "z4", "r"])
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("galois", parents=[common, gal], help="power table of xi in GR(R,r)")
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("roots", parents=[common, gal], help="n-th roots of unity")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("minpoly", parents=[common, gal], help="minimal polynomials M_i over R")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-i", type=int, action="append", default=[])
    p.set_defaults(func=cmd_minpoly)

    code = sub.add_parser("code", help="cyclic code operations")
    csub = code.add_subparsers(dest="action", required=True, parser_class=_Parser)

    p = csub.add_parser("analyze", parents=[common, code_args])
    p.add_argument("--no-distance", action="store_true")
    p.set_defaults(func=cmd_code_analyze)

    p = csub.add_parser("distance", parents=[common, code_args])
    p.add_argument("--metric", default="hamming", choices=["hamming", "lee"])
    p.set_defaults(func=cmd_code_distance)

    for name, fn in (("dual", cmd_code_dual), ("idempotent", cmd_code_idempotent), ("gray", cmd_code_gray)):
        csub.add_parser(name, parents=[common, code_args]).set_defaults(func=fn)

    p = csub.add_parser("bch", parents=[common, code_args, gal])
    p.set_defaults(func=cmd_code_bch)

    p = csub.add_parser("enumerate", parents=[common])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--choices", default="all", choices=["all", "unit-line"], help="all local ideals, or t=1 lines only")
    p.set_defaults(func=cmd_code_enumerate)
    return parser


def run(argv=None) -> tuple[int, str, str]:
    """Run the CLI and return (exit status, stdout text, stderr text)."""
    out = io.StringIO()
    try:
        with redirect_stdout(out):
            args = build_parser().parse_args(argv)
            args.func(args)
    except UsageError as exc:
        return 2, out.getvalue(), f"{exc}\n"
    except (PreconditionError, NotRegularError, NotCoprimeError, C.EnumerationLimitError) as exc:
        return 3, out.getvalue(), f"precondition violated: {exc}\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), out.getvalue(), ""
    except ValueError as exc:
        return 2, out.getvalue(), f"error: {exc}\n"
    return 0, out.getvalue(), ""


def main(argv=None) -> int:
    status, stdout, stderr = run(argv)
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())

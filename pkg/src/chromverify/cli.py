"""Command-line front end.

Exit codes: 0 success (or every check passed), 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, l33
from .cohomology import CoefficientProfile, cohomology, morava_vanishing_bound
from .degrees import IdealSpec, is_invariant, minimal_vq_exponent, minimal_vq_exponent_scan
from .exterior import (ComplexParams, basis_in_bidegree, diff, element_json, format_element,
                       format_monomial, monomial_json, parse_element)
from .may_tables import ScanReport, enumerate_entries, search, validity_bound, vanishing_scan


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _params(args) -> ComplexParams:
    return ComplexParams(args.p, args.n)


def cmd_basis(args) -> int:
    params = _params(args)
    mons = basis_in_bidegree(params, args.s, args.t)
    t_norm = params.normalize_t(args.t)
    payload = {"p": args.p, "n": args.n, "s": args.s, "t": args.t, "t_normalized": t_norm,
               "dim": len(mons), "basis": [monomial_json(m) for m in mons]}
    lines = [f"C({args.n})^{{{args.s},{args.t}}} (t = {t_norm} mod {params.qn}) at p={args.p}: "
             f"dim {len(mons)}"]
    lines += ["  " + format_monomial(m) for m in mons]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_diff(args) -> int:
    params = _params(args)
    x = parse_element(params, args.element)
    dx = diff(params, x)
    _emit(args, {"input": element_json(x), "diff": element_json(dx)},
          f"d({format_element(x)}) = {format_element(dx)}")
    return 0


def cmd_cohomology(args) -> int:
    params = _params(args)
    profile = (CoefficientProfile.truncated(args.truncate) if args.truncate
               else CoefficientProfile.morava_k())
    sl = cohomology(params, profile, args.s, args.t)
    bound = morava_vanishing_bound(params, profile, args.s, args.t)
    payload = {"p": args.p, "n": args.n, "s": args.s, "t": args.t, "t_normalized": sl.t,
               "profile": profile.kind, "exponents": list(profile.bounds(params)),
               "slice_dim": sl.slice_dim, "rank_in": sl.rank_in, "rank_out": sl.rank_out,
               "dim": sl.dim, "bound": bound}
    text = (f"H^{{{args.s},{args.t}}} (t = {sl.t} mod {params.qn}), {profile.kind}: dim {sl.dim}\n"
            f"  slice {sl.slice_dim}, rank in {sl.rank_in}, rank out {sl.rank_out}, "
            f"summed bound {bound}")
    _emit(args, payload, text)
    return 0


def cmd_check(args) -> int:
    if args.all or not args.id:
        reports = checks.run_all()
    else:
        reports = [checks.run_check(args.id)]
    if args.json:
        print(checks.reports_json(reports))
    else:
        print(checks.summary_table(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_toda_enumerate(args) -> int:
    entries = enumerate_entries(args.p, args.bound)
    _emit(args, {"entries": [e.as_json() for e in entries]},
          "\n".join(f"{e.w:>6}({e.u:>2})  {e.name}" for e in entries))
    return 0


def cmd_toda_search(args) -> int:
    hits = search(args.p, args.bound, args.degree)
    _emit(args, {"degree": args.degree, "hits": [h.as_json() for h in hits]},
          f"{args.degree}: " + (", ".join(h.name for h in hits) or "(none)"))
    return 0


def cmd_toda_scan(args) -> int:
    bound = args.bound if args.bound is not None else validity_bound(args.p)
    scan = vanishing_scan(args.p, bound, args.s_set, args.a_set, args.offset)
    lines = [f"{d}: " + (", ".join(h.name for h in hits) or "-") for d, hits in sorted(scan.items())]
    _emit(args, ScanReport(scan).as_json(), "\n".join(lines))
    return 0


def cmd_l33_scan(args) -> int:
    hits = l33.l33_scan(args.degree)
    _emit(args, {"degree": args.degree % l33.MOD,
                 "hits": [{"s": s, "stratum": st, "name": nm} for s, st, nm in hits]},
          "\n".join(f"H^{s} {st}: {nm}" for s, st, nm in hits) or "(none)")
    return 0


def cmd_ideal_check(args) -> int:
    spec = IdealSpec.parse(args.p, args.spec)
    ok = is_invariant(spec, e_n=args.e_n)
    _emit(args, {"p": args.p, "e0": spec.e0, "pairs": [list(x) for x in spec.pairs],
                 "exponents": spec.exponents(), "invariant": ok},
          f"{'invariant' if ok else 'not invariant'}: e0={spec.e0}, v-exponents {spec.exponents()}")
    return 0


def cmd_minexp(args) -> int:
    a, scan = minimal_vq_exponent(args.p, args.n), minimal_vq_exponent_scan(args.p, args.n)
    _emit(args, {"p": args.p, "n": args.n, "closed_form": a, "scan": scan},
          f"least a with a*q_{args.n - 1} = q mod q_{args.n}: {a} (scan: {scan})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromverify",
                                     description="Exact computations in Ravenel's complex C(n) "
                                                 "and the associated degree tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, parent=sub):
        sp = parent.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(func=func)
        return sp

    def pn(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)

    sp = add("basis", cmd_basis, "monomial basis of C(n)^{s,t}")
    pn(sp)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)

    sp = add("diff", cmd_diff, "apply d to an element")
    pn(sp)
    sp.add_argument("--element", required=True, help='e.g. "h3,0" or "1·h1,0 h2,1 + -1·h1,2 h2,0"')

    sp = add("cohomology", cmd_cohomology, "dimension of H^{s,t} with ranks")
    pn(sp)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--truncate", type=_int_list, help="e_1,...,e_{n-1} for E(n)_*/J")

    sp = add("check", cmd_check, "run the verification suite")
    sp.add_argument("id", nargs="?", choices=checks.check_ids())
    sp.add_argument("--all", action="store_true")

    toda = sub.add_parser("toda", help="degree-table queries").add_subparsers(dest="toda_cmd",
                                                                              required=True)
    sp = add("enumerate", cmd_toda_enumerate, "list table entries", toda)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp = add("search", cmd_toda_search, "entries of total degree exactly --degree", toda)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp = add("scan", cmd_toda_scan, "hits at s+a+offset", toda)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--s-set", type=_int_list, required=True)
    sp.add_argument("--a-set", type=_int_list, required=True)
    sp.add_argument("--offset", type=int, required=True)

    l33p = sub.add_parser("l33", help="H^*L(3,3) degree data").add_subparsers(dest="l33_cmd",
                                                                             required=True)
    sp = add("scan", cmd_l33_scan, "generators in a degree mod 248", l33p)
    sp.add_argument("--degree", type=int, required=True)

    ideal = sub.add_parser("ideal", help="invariant ideals").add_subparsers(dest="ideal_cmd",
                                                                            required=True)
    sp = add("check", cmd_ideal_check, "invariance criterion", ideal)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--spec", required=True, help='"e0;s1*p^e1,s2*p^e2,..." or "e0;k1,k2,..."')
    sp.add_argument("--e-n", type=int, help="enforce the last condition with this e_n")

    sp = add("minexp", cmd_minexp, "least v_{n-1}-exponent of degree q")
    pn(sp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

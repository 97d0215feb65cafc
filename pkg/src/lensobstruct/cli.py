"""Command-line front end.

Every command builds a plain payload dict; the renderer turns it into a
human table, JSON, or CSV.  Rationals are printed as "num/den" in lowest
terms (integers without "/1") so repeated runs are byte-identical.

Exit codes: 0 success, 2 usage or invalid input, 3 enumeration cap
exceeded, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Callable, Dict, List

from . import __version__, cables, casson, contfrac, obstruct, sweeps, tight, tridiag
from .contfrac import ContinuedFraction, LensSpace
from .errors import CapacityExceeded, InternalConsistencyError, LensObstructError

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_INTERNAL = 0, 2, 3, 4


class CommandError(Exception):
    """Raised by a command to request a specific exit code after printing its payload."""

    def __init__(self, code: int, payload: Dict):
        super().__init__(code)
        self.code = code
        self.payload = payload


# --- value normalization and rendering ------------------------------------------------

def normalize(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [normalize(v) for v in items]
    if hasattr(value, "value"):
        return value.value
    return str(value)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, list):
        if all(not isinstance(x, (list, dict)) for x in v):
            return " ".join(_cell(x) for x in v)
        return dumps(v)
    if isinstance(v, dict):
        return dumps(v)
    return str(v)


def _table(rows: List[Dict]) -> str:
    headers = list(rows[0].keys())
    cells = [[_cell(r.get(h)) for h in headers] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for c in cells:
        lines.append("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip())
    return "\n".join(lines)


def render_human(payload: Dict) -> str:
    if len(payload) == 1:
        (value,) = payload.values()
        if isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
            return _table(value)
        if isinstance(value, list) and value and all(isinstance(r, list) for r in value):
            return "\n".join(_cell(r) for r in value)
        return _cell(value)
    return "\n".join(f"{k}: {_cell(v)}" for k, v in payload.items())


def render_csv(payload: Dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = None
    if len(payload) == 1:
        (value,) = payload.values()
        if isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
            rows = value
    if rows is None:
        rows = [payload]
    headers = list(rows[0].keys())
    writer.writerow(headers)
    for r in rows:
        writer.writerow([_cell(r.get(h)) for h in headers])
    return buf.getvalue().rstrip("\n")


# --- command implementations ----------------------------------------------------------

def _space(args) -> LensSpace:
    return LensSpace(args.p, args.q)


def _cf(args) -> ContinuedFraction:
    return contfrac.expand(_space(args))


def _rvec(args) -> tight.TightStructure:
    return tight.TightStructure(tuple(args.rvec)).validate(_cf(args))


def cmd_cf_expand(args):
    return {"coeffs": list(_cf(args).coeffs)}


def cmd_cf_eval(args):
    cf = ContinuedFraction.from_coeffs(args.coeffs)
    return {"value": contfrac.evaluate(args.coeffs), "p": cf.p, "q": cf.q}


def cmd_cf_reverse(args):
    rev = contfrac.reverse(_cf(args))
    return {"coeffs": list(rev.coeffs), "p": rev.p, "q": rev.q}


def cmd_cf_det(args):
    return {"d": contfrac.det_d(args.coeffs)}


def cmd_matrix_link(args):
    return {"matrix": tridiag.linking_matrix(_cf(args))}


def cmd_matrix_apq(args):
    return {"matrix": tridiag.apq_closed_form(_cf(args))}


def cmd_matrix_oracle(args):
    cf = _cf(args)
    oracle = tridiag.apq_oracle(cf)
    if oracle != tridiag.apq_closed_form(cf):
        raise InternalConsistencyError(f"closed form and elimination disagree on {cf.space}")
    return {"matrix": oracle}


def cmd_tight_list(args):
    cf = _cf(args)
    table = tight.d3_table(cf, args.cap)
    if args.fold_conjugates:
        keep = set(tight.fold_conjugates([ts for ts, _ in table]))
        table = [(ts, d) for ts, d in table if ts in keep]
    return {"structures": [{"rvec": list(ts.rvec), "d3": d} for ts, d in table]}


def cmd_tight_count(args):
    return {"count": tight.count(_cf(args))}


def cmd_tight_d3(args):
    return {"d3": tight.d3(_cf(args), _rvec(args))}


def cmd_tight_d3can(args):
    return {"d3": tight.d3_can(_cf(args))}


def cmd_tight_xican(args):
    return {"rvec": list(tight.xi_can(_cf(args)).rvec)}


def cmd_tight_conjugate(args):
    return {"rvec": list(tight.conjugate(_rvec(args)).rvec)}


def cmd_tight_bounds(args):
    cf = _cf(args)
    return {"count_upper_bound": tight.count_upper_bound(cf),
            "d3_lower_bound": tight.d3_lower_bound(cf)}


def cmd_tight_fcheck(args):
    cf = _cf(args)
    fd, fr = tight.f_direct(cf), tight.f_recursive(cf.p, cf.q)
    payload = {"f_direct": fd, "f_recursive": fr, "match": fd == fr}
    if fd != fr:
        raise CommandError(EXIT_INTERNAL, payload)
    return payload


def cmd_rot(args):
    return {"rotation_numbers": list(obstruct.rotation_numbers(_space(args), args.cap))}


def cmd_feasible(args):
    report = obstruct.summand_feasible(_space(args), args.tb_bar, args.literature, args.cap)
    return report.to_dict()


def cmd_classify_tb(args):
    return {"cases": sorted(obstruct.classify_negative_tb(args.tb_bar, args.n))}


def cmd_surgery_d3(args):
    return {"d3": obstruct.d3_from_surgery(args.p, args.r)}


def cmd_d3_sum(args):
    return {"d3": obstruct.d3_connected_sum(args.d1, args.d2)}


def cmd_stab(args):
    start = obstruct.LegendrianClass(args.tb, args.r)
    return {"rotation_numbers": sorted(obstruct.stabilization_set(start, args.target))}


def _cable(args) -> cables.CableParams:
    return cables.CableParams(args.p, args.q)


def _front(f: cables.FrontStats) -> Dict:
    return {"writhe": f.writhe, "cusps": f.cusps, "tb": f.tb}


def cmd_cable_tb(args):
    lower, upper = cables.cable_tb_bounds(_cable(args), args.tb_bar)
    return {"lower": lower, "upper": upper}


def cmd_cable_genus(args):
    return {"genus": cables.cable_genus(_cable(args), args.g)}


def cmd_cable_pcopy(args):
    return _front(cables.p_copy_front(cables.FrontStats(args.writhe, args.cusps), args.p))


def cmd_cable_twist(args):
    front = cables.FrontStats(args.writhe, args.cusps)
    return _front(cables.twist_adjust(front, args.p, args.twists))


def cmd_cable_identity(args):
    return {"holds": cables.cable_identity_check(_cable(args), args.g)}


def cmd_casson_a2(args):
    poly = casson.parse_poly(args.poly)
    return {"half_second_derivative": casson.half_second_derivative(poly, args.normalize_sign)}


def cmd_casson_delta(args):
    return {"delta": casson.casson_surgery_delta(args.a2, args.n)}


def cmd_casson_parity(args):
    return {"obstructed": casson.parity_obstruction(args.a2, args.n)}


def cmd_sweep(args):
    check = sweeps.CHECKS[args.check]
    pmax = check.default_pmax if args.pmax is None else args.pmax
    rows = sweeps.run_check(args.check, pmax, args.workers)
    failed = sum(1 for r in rows if not r["pass"])
    lines = "".join(dumps(normalize(r)) + "\n" for r in rows)
    summary = {"check": args.check, "cases": len(rows), "failed": failed}
    if check.per_p:
        summary["pmax"] = pmax
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
        summary = None
    if failed:
        raise CommandError(EXIT_INTERNAL, summary)
    return summary


# Library operation -> the one command that exposes it.
OPERATION_COMMANDS: Dict[Callable, str] = {
    contfrac.expand: "cf expand",
    contfrac.evaluate: "cf eval",
    contfrac.reverse: "cf reverse",
    contfrac.det_d: "cf det",
    tridiag.linking_matrix: "matrix link",
    tridiag.apq_closed_form: "matrix apq",
    tridiag.apq_oracle: "matrix oracle",
    tight.enumerate_structures: "tight list",
    tight.count: "tight count",
    tight.d3: "tight d3",
    tight.d3_can: "tight d3can",
    tight.xi_can: "tight xican",
    tight.conjugate: "tight conjugate",
    tight.count_upper_bound: "tight bounds",
    tight.d3_lower_bound: "tight bounds",
    tight.f_direct: "tight fcheck",
    tight.f_recursive: "tight fcheck",
    obstruct.rotation_numbers: "rot",
    obstruct.summand_feasible: "feasible",
    obstruct.classify_negative_tb: "classify-tb",
    obstruct.d3_from_surgery: "surgery-d3",
    obstruct.d3_connected_sum: "d3-sum",
    obstruct.stabilization_set: "stab",
    cables.cable_tb_bounds: "cable tb",
    cables.cable_genus: "cable genus",
    cables.p_copy_front: "cable pcopy",
    cables.twist_adjust: "cable twist",
    cables.cable_identity_check: "cable identity",
    casson.half_second_derivative: "casson a2",
    casson.casson_surgery_delta: "casson delta",
    casson.parity_obstruction: "casson parity",
    sweeps.run_check: "sweep",
}


# --- parser -----------------------------------------------------------------------------

def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_const", const="json", dest="format")
    fmt.add_argument("--csv", action="store_const", const="csv", dest="format")
    common.add_argument("--envelope", action="store_true",
                        help="wrap JSON output with the command, parameters and version")

    def lens(sp):
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("-q", type=int, required=True)

    def capped(sp):
        sp.add_argument("--cap", type=int, default=None,
                        help=f"enumeration cap (default ${tight.CAP_ENV} or {tight.DEFAULT_CAP})")

    parser = argparse.ArgumentParser(prog="lensobstruct",
                                     description="Lens space summands of reducible surgeries.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, func, help_text):
        sp = group.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    def family(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        return sp.add_subparsers(dest="action", required=True)

    g = family("cf", "negative continued fractions")
    lens(leaf(g, "expand", cmd_cf_expand, "expansion of -p/q"))
    leaf(g, "eval", cmd_cf_eval, "value of [a1,...,an]").add_argument("coeffs", type=int, nargs="+")
    lens(leaf(g, "reverse", cmd_cf_reverse, "reversed expansion"))
    leaf(g, "det", cmd_cf_det, "d(b1,...,bk)").add_argument("coeffs", type=int, nargs="*")

    g = family("matrix", "linking matrix and A = -p M^-1")
    lens(leaf(g, "link", cmd_matrix_link, "linking matrix M"))
    lens(leaf(g, "apq", cmd_matrix_apq, "A by closed form"))
    lens(leaf(g, "oracle", cmd_matrix_oracle, "A by exact elimination"))

    g = family("tight", "tight contact structures")
    sp = leaf(g, "list", cmd_tight_list, "every tight structure with its d3")
    lens(sp)
    capped(sp)
    sp.add_argument("--fold-conjugates", action="store_true")
    lens(leaf(g, "count", cmd_tight_count, "number of tight structures"))
    sp = leaf(g, "d3", cmd_tight_d3, "d3 of one structure")
    lens(sp)
    sp.add_argument("rvec", type=int, nargs="+")
    lens(leaf(g, "d3can", cmd_tight_d3can, "d3 of the canonical structure"))
    lens(leaf(g, "xican", cmd_tight_xican, "rotation vector of the canonical structure"))
    sp = leaf(g, "conjugate", cmd_tight_conjugate, "conjugate structure")
    lens(sp)
    sp.add_argument("rvec", type=int, nargs="+")
    lens(leaf(g, "bounds", cmd_tight_bounds, "count upper bound and d3 lower bound"))
    lens(leaf(g, "fcheck", cmd_tight_fcheck, "f(p/q) directly and by recurrence"))

    sp = sub.add_parser("rot", parents=[common], help="rotation numbers of L(p,q)")
    sp.set_defaults(func=cmd_rot)
    lens(sp)
    capped(sp)

    sp = sub.add_parser("feasible", parents=[common], help="summand feasibility verdict")
    sp.set_defaults(func=cmd_feasible)
    lens(sp)
    capped(sp)
    sp.add_argument("--tb-bar", type=int, required=True)
    sp.add_argument("--literature", action="store_true", help="also apply cited classification facts")

    sp = sub.add_parser("classify-tb", parents=[common], help="open cases for n < tb_bar < 0")
    sp.set_defaults(func=cmd_classify_tb)
    sp.add_argument("--tb-bar", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)

    sp = sub.add_parser("surgery-d3", parents=[common], help="-(r^2+p)/(4p)")
    sp.set_defaults(func=cmd_surgery_d3)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-r", type=int, required=True)

    sp = sub.add_parser("d3-sum", parents=[common], help="d3 of a connected sum")
    sp.set_defaults(func=cmd_d3_sum)
    sp.add_argument("--d1", type=_fraction, required=True)
    sp.add_argument("--d2", type=_fraction, required=True)

    sp = sub.add_parser("stab", parents=[common], help="rotation numbers after stabilizing")
    sp.set_defaults(func=cmd_stab)
    sp.add_argument("--tb", type=int, required=True)
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("--target", type=int, required=True)

    g = family("cable", "cable knots")
    for name, func, text in (("tb", cmd_cable_tb, "max tb bounds"),
                             ("genus", cmd_cable_genus, "Seifert genus"),
                             ("identity", cmd_cable_identity, "genus identity check")):
        sp = leaf(g, name, func, text)
        lens(sp)
        if name == "tb":
            sp.add_argument("--tb-bar", type=int, required=True, help="max tb of the companion")
        else:
            sp.add_argument("-g", type=int, required=True, help="genus of the companion")
    for name, func, text in (("pcopy", cmd_cable_pcopy, "p parallel copies of a front"),
                             ("twist", cmd_cable_twist, "insert 1/p twists")):
        sp = leaf(g, name, func, text)
        sp.add_argument("--writhe", type=int, required=True)
        sp.add_argument("--cusps", type=int, required=True)
        sp.add_argument("-p", type=int, required=True)
        if name == "twist":
            sp.add_argument("--twists", type=int, required=True)

    g = family("casson", "Alexander polynomial and Casson-Walker parity")
    sp = leaf(g, "a2", cmd_casson_a2, "Delta''(1)/2")
    sp.add_argument("--poly", required=True,
                    help='JSON {"exp": coeff} or a sum like "t^-1 - 1 + t"')
    sp.add_argument("--normalize-sign", action="store_true", help="accept Delta(1) = -1")
    for name, func in (("delta", cmd_casson_delta), ("parity", cmd_casson_parity)):
        sp = leaf(g, name, func, "Casson surgery difference" if name == "delta" else "parity obstruction")
        sp.add_argument("--a2", type=int, required=True, help="Delta''(1)/2")
        sp.add_argument("-n", type=int, required=True, help="surgery coefficient")

    sp = sub.add_parser("sweep", parents=[common], help="exhaustive check with a certificate")
    sp.set_defaults(func=cmd_sweep)
    sp.add_argument("--check", choices=list(sweeps.CHECKS), required=True)
    sp.add_argument("--pmax", type=int, default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", default=None, help="certificate path (NDJSON); stdout if omitted")
    return parser


def _params(args) -> Dict:
    skip = {"func", "format", "envelope", "command", "action"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(args, payload) -> None:
    if payload is None:
        return
    payload = normalize(payload)
    if args.envelope:
        command = " ".join(x for x in (args.command, getattr(args, "action", None)) if x)
        payload = {"command": command, "parameters": normalize(_params(args)),
                   "result": payload, "version": __version__}
        print(dumps(payload))
    elif args.format == "json":
        print(dumps(payload))
    elif args.format == "csv":
        print(render_csv(payload))
    else:
        print(render_human(payload))


def run(argv: List[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except CommandError as exc:
        _emit(args, exc.payload)
        return exc.code
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InternalConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (LensObstructError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, payload)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

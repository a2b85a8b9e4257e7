"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 domain error, 4 scale guard
exceeded, 5 verification failure.
"""

import argparse
import json
import sys

from . import strata
from .coxeter import coxeter_cohomology
from .errors import BTStrataError, InvalidSymbol, ScaleGuard
from .harish_chandra import induce, restrict_sp
from .oracle import oracle_counts
from .oracle.field import prime_power
from .oracle.lagrangian import WORK_ENV
from .partitions import bipartition_to_json
from .qpoly import eval_at
from .symbols import degree, enumerate_symbols, format_symbol, parse_symbol, symbol_to_label
from .verify import SUITES, run_suite

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_SCALE, EXIT_VERIFY = 0, 2, 3, 4, 5

EPILOG = f"""\
exit codes: 0 ok, 2 parse error, 3 domain error, 4 scale guard, 5 verification failure.
environment: {WORK_ENV} caps the oracle's estimated work (default 10^7).
symbols are written as rows separated by ';', entries by ',': "0,2;1", "0,1,2;".
"""


class UsageError(Exception):
    pass


def _symbol_record(s, q=None):
    label = symbol_to_label(s)
    deg = degree(s)
    rec = {
        "symbol": s.to_json(),
        "text": format_symbol(s),
        "rank": s.rank,
        "defect": s.defect,
        "delta": label.delta,
        "bipartition": bipartition_to_json(label.bip),
        "label": str(label),
        "degree": str(deg),
        "degree_coeffs": deg.to_json(),
    }
    if q is not None:
        rec["degree_at_q"] = str(eval_at(deg, q))
    return rec


def _symbol_rows(symbols, q=None):
    return [_symbol_record(s, q) for s in symbols]


def _ev_record(ev):
    return {"sign": ev.sign, "exp": ev.exp}


def _emit(doc, fmt, columns=None, out=None):
    """``doc`` is a list of flat dicts for tsv/pretty, anything JSON-able for json."""
    out = out or sys.stdout
    if fmt == "json":
        json.dump(doc, out, indent=2, sort_keys=False)
        out.write("\n")
        return
    rows = doc if isinstance(doc, list) else [doc]
    columns = columns or (list(rows[0]) if rows else [])
    cells = [[_cell(r.get(c, "")) for c in columns] for r in rows]
    if fmt == "tsv":
        out.write("\t".join(columns) + "\n")
        for row in cells:
            out.write("\t".join(row) + "\n")
        return
    widths = [max([len(c)] + [len(row[k]) for row in cells]) for k, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _parse_symbol_arg(text):
    try:
        return parse_symbol(text)
    except InvalidSymbol as exc:
        raise UsageError(str(exc)) from None


def _nonneg(name, v):
    if v is None or v < 0:
        raise UsageError(f"--{name} must be a non-negative integer")
    return v


def _positive(name, v):
    if v is None or v < 1:
        raise UsageError(f"--{name} must be a positive integer")
    return v


def cmd_symbols(args):
    theta = _positive("rank", args.rank)
    rows = _symbol_rows(enumerate_symbols(theta), args.q)
    cols = ["text", "defect", "label", "degree"] + (["degree_at_q"] if args.q else [])
    _emit(rows, args.format, cols)


def cmd_degree(args):
    s = _parse_symbol_arg(args.symbol)
    rec = _symbol_record(s, args.q)
    _emit(rec, args.format, ["text", "rank", "defect", "label", "degree"]
          + (["degree_at_q"] if args.q else []))


def _rep_multiset(reps):
    rows = []
    for s in sorted(reps):
        rec = _symbol_record(s)
        rec["multiplicity"] = reps[s]
        rows.append(rec)
    return rows


def cmd_induce(args):
    s = _parse_symbol_arg(args.symbol)
    _nonneg("a", args.a)
    _emit(_rep_multiset(induce(args.a, s)), args.format, ["text", "label", "multiplicity", "degree"])


def cmd_restrict(args):
    s = _parse_symbol_arg(args.symbol)
    _nonneg("a", args.a)
    _emit(_rep_multiset(restrict_sp(args.a, s)), args.format,
          ["text", "label", "multiplicity", "degree"])


def _graded_rows(graded):
    rows = []
    for deg in sorted(graded):
        for s, ev in graded[deg]:
            rec = _symbol_record(s)
            rows.append({"cohomology_degree": deg, "text": rec["text"], "sign": ev.sign,
                         "exp": ev.exp, "label": rec["label"], "degree": rec["degree"],
                         "symbol": rec["symbol"]})
    return rows


def cmd_coxeter(args):
    theta = _positive("theta", args.theta)
    rows = _graded_rows(coxeter_cohomology(theta))
    _emit(rows, args.format, ["cohomology_degree", "text", "sign", "exp", "degree"])


def cmd_cohomology(args):
    theta = _nonneg("theta", args.theta)
    rows = _graded_rows(strata.cohomology_of_S(theta).graded())
    _emit(rows, args.format, ["cohomology_degree", "text", "sign", "exp", "label", "degree"])


def _texts(reps):
    return sorted(format_symbol(s) for s in reps.elements())


def cmd_e1(args):
    theta = _positive("theta", args.theta)
    cells = strata.e1_grid(theta)
    if args.format == "json":
        doc = [{"i": c["i"], "theta_prime": c["theta_prime"], "degree": c["degree"],
                **{k: [s.to_json() for s in sorted(c[k].elements())]
                   for k in ("A0", "A1", "B0", "B1")}} for c in cells]
        _emit(doc, "json")
        return
    by_pos = {(c["i"], c["theta_prime"]): c for c in cells}
    rows = []
    for i in range(theta, -1, -1):
        row = {"i": i}
        for tp in range(theta + 1):
            c = by_pos.get((i, tp))
            if c is None:
                row[f"theta'={tp}"] = ""
                continue
            parts = [f"{k}: {' '.join(_texts(c[k])) or '-'}" for k in ("A0", "A1", "B0", "B1")]
            row[f"theta'={tp}"] = " | ".join(parts)
        rows.append(row)
    _emit(rows, args.format, ["i"] + [f"theta'={tp}" for tp in range(theta + 1)])


def cmd_zeta(args):
    theta = _nonneg("theta", args.theta)
    n = _positive("n", args.n)
    page = strata.e1_page(theta)
    total = strata.point_count_S(theta, n)
    per = {tp: strata.point_count_stratum(theta, tp, n, page) for tp in range(theta + 1)}
    factors = []
    for i, (plus, minus) in strata.cohomology_of_S(theta).even.items():
        if plus:
            factors.append({"cohomology_degree": 2 * i, "eigenvalue": {"sign": 1, "exp": i},
                            "multiplicity": str(strata.total_degree(plus))})
        if minus:
            factors.append({"cohomology_degree": 2 * i, "eigenvalue": {"sign": -1, "exp": i},
                            "multiplicity": str(strata.total_degree(minus))})
    doc = {"theta": theta, "n": n, "point_count": str(total),
           "per_stratum": {str(tp): str(p) for tp, p in per.items()},
           "frobenius_factors": factors}
    if args.q is not None:
        doc["q"] = args.q
        doc["point_count_at_q"] = str(eval_at(total, args.q))
        doc["per_stratum_at_q"] = {str(tp): str(eval_at(p, args.q)) for tp, p in per.items()}
    if args.format == "json":
        _emit(doc, "json")
        return
    rows = [{"stratum": "total", "count": doc["point_count"],
             "at_q": doc.get("point_count_at_q", "")}]
    for tp, p in per.items():
        rows.append({"stratum": str(tp), "count": str(p),
                     "at_q": doc.get("per_stratum_at_q", {}).get(str(tp), "")})
    _emit(rows, args.format, ["stratum", "count"] + (["at_q"] if args.q is not None else []))


def cmd_oracle(args):
    theta = _nonneg("theta", args.theta)
    n = _positive("n", args.n)
    e = _positive("e", args.e)
    try:
        p, pe = prime_power(args.p)
    except ValueError:
        raise UsageError(f"--p must be prime, got {args.p}") from None
    if pe != 1:
        raise UsageError(f"--p must be prime, got {args.p}")
    q0 = p ** e
    total, per = oracle_counts(theta, q0, n, max_work=args.max_work, jobs=args.jobs)
    doc = {"theta": theta, "q": q0, "n": n, "field_order": q0 ** n, "total": total,
           "per_stratum": {str(k): v for k, v in per.items()}}
    if args.format == "json":
        _emit(doc, "json")
    else:
        rows = [{"stratum": "total", "count": total}]
        rows += [{"stratum": str(k), "count": v} for k, v in per.items()]
        _emit(rows, args.format, ["stratum", "count"])


def cmd_verify(args):
    results = run_suite(args.suite, theta_max=args.theta_max, max_work=args.max_work)
    if args.format == "json":
        _emit([{"name": r.name, "passed": r.passed, "detail": r.detail,
                "seconds": round(r.seconds, 3)} for r in results], "json")
    else:
        for r in results:
            print(r.line())
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} checks passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser():
    parser = argparse.ArgumentParser(
        prog="btstrata", description=__doc__.splitlines()[0], epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("--format", choices=["pretty", "tsv", "json"], default="pretty")
        p.set_defaults(func=func)
        return p

    p = add("symbols", cmd_symbols, "list the unipotent symbols of a given rank")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--q", type=int, help="also evaluate degrees at this q")

    p = add("degree", cmd_degree, "generic degree of one symbol")
    p.add_argument("symbol")
    p.add_argument("--q", type=int)

    p = add("induce", cmd_induce, "Harish-Chandra induction from GL(a) x Sp")
    p.add_argument("symbol")
    p.add_argument("--a", type=int, required=True)

    p = add("restrict", cmd_restrict, "Harish-Chandra restriction to the Sp factor")
    p.add_argument("symbol")
    p.add_argument("--a", type=int, required=True)

    p = add("coxeter", cmd_coxeter, "cohomology of the Coxeter variety of Sp(2 theta)")
    p.add_argument("--theta", type=int, required=True)

    p = add("e1", cmd_e1, "E1 page of the stratification spectral sequence")
    p.add_argument("--theta", type=int, required=True)

    p = add("cohomology", cmd_cohomology, "cohomology of S_theta with Frobenius eigenvalues")
    p.add_argument("--theta", type=int, required=True)

    p = add("zeta", cmd_zeta, "Lefschetz point counts of S_theta and its strata over F_(q^n)")
    p.add_argument("--theta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, help="evaluate at this prime power")

    p = add("oracle", cmd_oracle, "brute-force point counts over F_(p^(e n))")
    p.add_argument("--theta", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--max-work", type=int, default=None,
                   help=f"override the work bound (default from {WORK_ENV} or 10^7)")
    p.add_argument("--jobs", type=int, default=1)

    p = add("verify", cmd_verify, "run verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--theta-max", type=int, default=None)
    p.add_argument("--max-work", type=int, default=None)
    return parser


def _fail(code, kind, message):
    json.dump({"error": kind, "message": message}, sys.stderr)
    sys.stderr.write("\n")
    return code


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except UsageError as exc:
        return _fail(EXIT_PARSE, "UsageError", str(exc))
    except ScaleGuard as exc:
        return _fail(EXIT_SCALE, "ScaleGuard", str(exc))
    except (BTStrataError, ValueError) as exc:
        return _fail(EXIT_DOMAIN, type(exc).__name__, str(exc))
    return EXIT_OK if code is None else code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

"""``fermat-mld``: command-line front end.

Usage:
    fermat-mld beta --mu 2 --nu 3
    fermat-mld alpha --mu 4 --nu 6 --method direct
    fermat-mld mldeg --n 2 --d 3 --format json
    fermat-mld table --n-max 5 --d-max 10 --format csv --cache betas.txt --stats
    fermat-mld verify --suite all

Exit codes: 0 ok, 1 usage, 2 unsupported input, 3 budget exceeded,
4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting as C
from .cache import BetaCache
from .errors import BudgetExceeded, CacheFormatError, DegreeOneUnsupported, MethodNotApplicable, NotPrimePower
from .mldegree import FermatQuery, ml_degree_fermat
from .verify import run_suite

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _budgets(args) -> dict:
    if args.budget is None:
        return {}
    return {"budget": args.budget, "brute_budget": args.budget}


def make_resolver(args, cache=None) -> C.BetaResolver:
    return C.BetaResolver(method=getattr(args, "method", "auto") or "auto", cache=cache, **_budgets(args))


def _open_cache(args):
    return BetaCache.load(args.cache) if getattr(args, "cache", None) else None


def _finish(args, cache, resolver) -> None:
    if cache is not None and cache.dirty:
        cache.save()
    if getattr(args, "stats", False) and resolver is not None:
        print(f"cache hits: {resolver.hits}, misses: {resolver.misses}", file=sys.stderr)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _render_value(kind, mu, nu, value, method, fmt) -> str:
    if fmt == "json":
        return _json({"mu": mu, "nu": nu, kind: str(value), "method": method})
    if fmt == "csv":
        return _csv([["mu", "nu", kind, "method"], [mu, nu, value, method]])
    return f"{kind}({mu},{nu}) = {value} [{method}]"


def cmd_beta(args) -> int:
    cache = _open_cache(args)
    resolver = make_resolver(args, cache)
    rec = resolver.record(args.mu, args.nu)
    print(_render_value("beta", rec.mu, rec.nu, rec.value, rec.method, args.format))
    _finish(args, cache, resolver)
    return EXIT_OK


def cmd_alpha(args) -> int:
    mu, nu, method = args.mu, args.nu, args.method
    if mu < 1:
        raise ValueError("mu must be at least 1")
    b = _budgets(args)
    if method == "auto":
        method = "prime_power" if C.prime_power_form(nu) else "from_beta"
    if method == "direct":
        value = C.alpha_direct(mu, nu, **({"budget": b["budget"]} if b else {}))
    elif method == "prime_power":
        form = C.prime_power_form(nu)
        if form is None:
            raise MethodNotApplicable(f"nu={nu} is not a prime power")
        value = C.alpha_prime_power(mu, form)
    else:
        value = C.alpha_from_beta(mu, nu, **b)
    print(_render_value("alpha", mu, nu, value, method, args.format))
    return EXIT_OK


def render_report(report, fmt: str) -> str:
    if fmt == "json":
        return _json(report.to_dict())
    n, d = report.query.n, report.query.d
    if fmt == "csv":
        rows = [["row", "j", "binomial", "beta", "product", "value"], ["base", "", "", "", "", report.base]]
        rows += [["correction", c.j, c.binomial, c.beta, c.product, ""] for c in report.corrections]
        rows.append(["total", "", "", "", "", report.total])
        return _csv(rows)
    lines = [f"MLdeg(F_{{{n},{d}}})", f"base = {report.base}", "corrections:"]
    for c in report.corrections:
        lines.append(f"  j={c.j}  binom({n + 1},{c.j})={c.binomial}  "
                     f"beta({n - c.j},{d - 1})={c.beta}  product={c.product}")
    lines.append(f"total = {report.total}")
    return "\n".join(lines)


def cmd_mldeg(args) -> int:
    query = FermatQuery(args.n, args.d)
    cache = _open_cache(args)
    resolver = make_resolver(args, cache)
    print(render_report(ml_degree_fermat(query, resolver), args.format))
    _finish(args, cache, resolver)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.n_max < 1 or args.d_max < 1:
        raise UsageError("--n-max and --d-max must be at least 1")
    cache = _open_cache(args)
    resolver = make_resolver(args, cache)
    ns = list(range(1, args.n_max + 1))
    ds = list(range(2, args.d_max + 1))
    cells = {}
    for n in ns:
        for d in ds:
            try:
                cells[n, d] = str(ml_degree_fermat(FermatQuery(n, d), resolver).total)
            except BudgetExceeded as e:
                cells[n, d] = "?"
                print(f"note: MLdeg(F_{{{n},{d}}}) skipped: {e}", file=sys.stderr)
    if args.format == "json":
        out = _json([{"n": n, "d": d, "mldeg": cells[n, d]} for n in ns for d in ds])
    elif args.format == "csv":
        out = _csv([["n", "d", "mldeg"]] + [[n, d, cells[n, d]] for n in ns for d in ds])
    else:
        cols = [["n\\d"] + [str(d) for d in ds]] + [[str(n)] + [cells[n, d] for d in ds] for n in ns]
        widths = [max(len(row[i]) for row in cols) for i in range(len(cols[0]))]
        out = "\n".join("  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cols)
    if out:
        print(out)
    _finish(args, cache, resolver)
    return EXIT_OK


def cmd_verify(args) -> int:
    resolver = make_resolver(args)
    kw = {"budget": args.budget} if args.budget is not None else {}
    failed = 0
    total = 0
    for check in run_suite(args.suite, resolver, **kw):
        total += 1
        failed += not check.passed
        print(check.line())
    print(f"{total - failed}/{total} checks passed")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fermat-mld", description="Exact ML degrees of Fermat hypersurfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cache=True):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--budget", type=int, default=None, help="enumeration budget (tuples or multisets)")
        if cache:
            p.add_argument("--cache", metavar="PATH", default=None)
            p.add_argument("--stats", action="store_true", help="report cache hits and misses on stderr")

    p = sub.add_parser("beta", help="beta(mu, nu)")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--method", choices=("auto", "brute", "symmetric", "closed", "closed_small", "prime_power"),
                   default="auto")
    common(p)
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("alpha", help="alpha(mu, nu)")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--method", choices=("auto", "direct", "from_beta", "prime_power"), default="auto")
    common(p, cache=False)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("mldeg", help="ML degree report for F_{n,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_mldeg)

    p = sub.add_parser("table", help="ML degree table")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=("all", "counting", "mldeg", "cyclotomic"), default="all")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"fermat-mld: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"fermat-mld: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (MethodNotApplicable, NotPrimePower, DegreeOneUnsupported, CacheFormatError, ValueError) as e:
        print(f"fermat-mld: unsupported input: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())

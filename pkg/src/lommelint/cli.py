"""Command-line entry point: ``lommelint {eval,integral,bound,verify,table,asymptotic}``."""

import argparse
import json
import logging
import os
import sys
import time

from . import bounds, harness, lommel
from .integral import IntegralSpec, evaluate_normalized, integral, normalized_F

log = logging.getLogger("lommelint")

OUT_DIR_ENV = "LOMMELINT_OUT_DIR"


def _floats(text):
    return tuple(float(v) for v in text.split(",") if v.strip())


def _write(text, out, default_name):
    path = out
    if path is None and os.environ.get(OUT_DIR_ENV):
        path = os.path.join(os.environ[OUT_DIR_ENV], default_name)
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")
    log.info("wrote %s", path)


def _emit(record, fmt, out, name):
    if fmt == "json":
        _write(json.dumps(record, sort_keys=True, indent=1), out, name + ".json")
    else:
        keys = sorted(record)
        lines = [",".join(keys), ",".join(_fmt_cell(record[k]) for k in keys)]
        _write("\n".join(lines), out, name + ".csv")


def _fmt_cell(v):
    if isinstance(v, float):
        return repr(v)
    return "" if v is None else str(v)


def cmd_eval(args):
    if args.func == "t_tilde":
        res = lommel.lommel_t_tilde(args.mu, args.nu, args.x)
        record = {"func": "t_tilde", "mu": args.mu, "nu": args.nu, "x": args.x, "value": res.value,
                  "abs_error_estimate": res.abs_error_estimate, "terms": res.terms_or_evals}
    elif args.func == "t":
        res = lommel.lommel_t(args.mu, args.nu, args.x)
        record = {"func": "t", "mu": args.mu, "nu": args.nu, "x": args.x, "value": res.value,
                  "abs_error_estimate": res.abs_error_estimate, "terms": res.terms_or_evals}
    elif args.func == "struve":
        res = lommel.struve_L(args.nu, args.x)
        record = {"func": "struve", "nu": args.nu, "x": args.x, "value": res.value,
                  "abs_error_estimate": res.abs_error_estimate, "terms": res.terms_or_evals}
    else:
        value = bounds.series_lower_multiplier(args.mu, args.nu, args.beta, args.x, args.K)
        record = {"func": "lower_sum", "mu": args.mu, "nu": args.nu, "beta": args.beta, "x": args.x,
                  "K": args.K, "value": value}
    _emit(record, args.format, args.out, "eval")
    return 0


def cmd_integral(args):
    spec = IntegralSpec(args.mu, args.nu, args.beta, args.x)
    if args.normalized:
        res, route = evaluate_normalized(spec, args.route, args.tol)
    else:
        res = integral(spec, args.route, args.tol)
        route = args.route
    record = {"mu": args.mu, "nu": args.nu, "beta": args.beta, "x": args.x, "route": route,
              "normalized": args.normalized, "value": res.value,
              "abs_error_estimate": res.abs_error_estimate, "work": res.terms_or_evals,
              "converged": res.converged}
    _emit(record, args.format, args.out, "integral")
    return 0 if res.converged else 1


def cmd_bound(args):
    spec = IntegralSpec(args.mu, args.nu, args.beta, args.x)
    kind = bounds.BoundKind.parse(args.kind)
    res = bounds.evaluate_bound(kind, spec, xstar=args.xstar, K=args.K)
    record = {"kind": kind.name, "label": kind.label, "side": kind.side.value, "in_domain": res.in_domain,
              "mu": args.mu, "nu": args.nu, "beta": args.beta, "x": args.x,
              "value": None, "normalized": None, "reference": None, "margin": None}
    status = 0
    if res.in_domain:
        ref = normalized_F(bounds.target_spec(kind, spec))
        gap = res.normalized - ref if kind.side is bounds.Side.UPPER else ref - res.normalized
        record.update(value=res.value, normalized=res.normalized, reference=ref, margin=gap / abs(ref))
        status = 0 if gap >= -1e-12 * abs(ref) else 1
    _emit(record, args.format, args.out, "bound")
    return status


def cmd_verify(args):
    cfg = harness.GridConfig(
        mus=args.mu or harness.DEFAULT_MUS,
        nus=args.nu or harness.DEFAULT_NUS,
        betas=args.beta or harness.DEFAULT_BETAS,
        xs=args.x or harness.DEFAULT_XS,
        tol=args.tol,
        kinds=tuple(args.kind.split(",")) if args.kind else None,
        xstar=args.xstar,
        K=args.K,
        keep_out_of_domain=args.keep_out_of_domain,
        workers=args.workers,
    )
    report = harness.run_grid_verification(cfg)
    if not args.no_tables:
        cells = []
        for table_id in (1, 2):
            cells.extend(harness.compare_table(harness.TableSpec(table_id)))
        failed = [c for c in cells if not c["passed"]]
        report.summary["golden_cells"] = len(cells)
        report.summary["golden_failures"] = len(failed)
        report.summary["golden_failed_cells"] = failed
    text = report.to_json() if args.format == "json" else report.to_csv()
    _write(text, args.out, "verify." + args.format)
    s = report.summary
    log.info("%d in-domain cases, %d violations, %d errors", s["cases"], s["violations"], s["errors"])
    ok = report.ok and s.get("golden_failures", 0) == 0
    return 0 if ok else 1


def cmd_table(args):
    t = harness.TableSpec(args.id)
    matrix = harness.reproduce_table(t)
    if args.format == "csv":
        text = harness.table_csv(t, matrix)
    else:
        text = json.dumps({"table": args.id, "xs": list(t.xs), "rows": [list(r) for r in t.rows],
                           "cells": matrix}, indent=1)
    _write(text, args.out, f"table{args.id}.{args.format}")
    if args.compare:
        failed = [c for c in harness.compare_table(t, matrix) if not c["passed"]]
        for c in failed:
            print(f"mismatch: (mu={c['mu']:g}, nu={c['nu']:g}, beta={c['beta']:g}) x={c['x']:g} "
                  f"computed {c['computed']:.6f} published {c['published']:.4f}", file=sys.stderr)
        return 1 if failed else 0
    return 0


def cmd_asymptotic(args):
    report = harness.asymptotic_suite()
    text = report.to_json() if args.format == "json" else report.to_csv()
    _write(text, args.out, "asymptotic." + args.format)
    return 0 if report.summary["failed"] == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="lommelint", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt="json"):
        p.add_argument("--format", choices=("csv", "json"), default=fmt)
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("eval", help="evaluate t~, t, the Struve function or the truncated lower sum L")
    p.add_argument("--func", choices=("t_tilde", "t", "struve", "lower_sum"), default="t_tilde")
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--beta", type=float, default=0.5)
    p.add_argument("--K", type=int, default=4)
    common(p)
    p.set_defaults(func_=cmd_eval)

    p = sub.add_parser("integral", help="the weighted integral for one (mu, nu, beta, x)")
    for name in ("mu", "nu", "beta", "x"):
        p.add_argument(f"--{name}", type=float, required=True)
    p.add_argument("--route", choices=("auto", "series", "quadrature", "closed"), default="auto")
    p.add_argument("--tol", type=float, default=1e-13)
    p.add_argument("--normalized", action="store_true", help="report exp(beta x) x**-nu I")
    common(p)
    p.set_defaults(func_=cmd_integral)

    p = sub.add_parser("bound", help="one bound at one parameter point")
    p.add_argument("--kind", required=True, help="enum name (e.g. LB_SERIES) or label (e.g. 2.9)")
    for name in ("mu", "nu", "beta", "x"):
        p.add_argument(f"--{name}", type=float, required=True)
    p.add_argument("--xstar", type=float, default=None)
    p.add_argument("--K", type=int, default=None)
    common(p)
    p.set_defaults(func_=cmd_bound)

    p = sub.add_parser("verify", help="sweep all bounds over a grid and check the published tables")
    p.add_argument("--mu", type=_floats, default=None, help="comma-separated list")
    p.add_argument("--nu", type=_floats, default=None)
    p.add_argument("--beta", type=_floats, default=None)
    p.add_argument("--x", type=_floats, default=None)
    p.add_argument("--kind", default=None, help="comma-separated bound kinds")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--xstar", type=float, default=None)
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--keep-out-of-domain", action="store_true")
    p.add_argument("--no-tables", action="store_true")
    common(p)
    p.set_defaults(func_=cmd_verify)

    p = sub.add_parser("table", help="reproduce Table 1 (1 - L/F) or Table 2 (U/F - 1)")
    p.add_argument("--id", type=int, choices=(1, 2), required=True)
    p.add_argument("--compare", action="store_true", help="exit 1 if any cell misses the published value")
    common(p, fmt="csv")
    p.set_defaults(func_=cmd_table)

    p = sub.add_parser("asymptotic", help="small- and large-x limits of the relative errors")
    common(p)
    p.set_defaults(func_=cmd_asymptotic)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    start = time.perf_counter()
    try:
        status = args.func_(args)
    except (ValueError, OverflowError) as exc:
        print(f"lommelint: error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    print(f"lommelint {args.command}: {elapsed:.2f} s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())

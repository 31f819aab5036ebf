"""Grid verification of the bounds, table reproduction and asymptotic checks."""

import csv
import io
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import BoundKind, Side, evaluate_bound, target_spec, two_sided_envelope
from .integral import IntegralSpec, normalized_F
from .lommel import log_t_tilde, t_tilde
from .tables import GOLDEN, TABLE_ROWS, TABLE_XS

DEFAULT_MUS = (-1.4, -1.2, -0.7, -0.3, 0.0, 0.4, 1.0, 2.0, 3.5, 6.0)
DEFAULT_NUS = (-0.45, -0.2, 0.0, 0.3, 0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 5.0)
DEFAULT_BETAS = (0.1, 0.25, 0.5, 0.75, 0.9)
DEFAULT_XS = (0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0)

TABLE1_ABS_TOL = 6e-4
TABLE2_REL_TOL = 1e-3


@dataclass
class GridConfig:
    mus: tuple = DEFAULT_MUS
    nus: tuple = DEFAULT_NUS
    betas: tuple = DEFAULT_BETAS
    xs: tuple = DEFAULT_XS
    tol: float = 1e-12
    kinds: tuple = None
    xstar: float = None
    K: int = None
    keep_out_of_domain: bool = False
    workers: int = 1

    def __post_init__(self):
        for name in ("mus", "nus", "betas", "xs"):
            values = tuple(float(v) for v in getattr(self, name))
            if not values:
                raise ValueError(f"grid list {name!r} is empty")
            setattr(self, name, values)
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")
        if self.kinds is not None:
            self.kinds = tuple(BoundKind.parse(k) if isinstance(k, str) else k for k in self.kinds)
            if not self.kinds:
                raise ValueError("bound-kind filter is empty")

    def selected_kinds(self):
        return tuple(BoundKind) if self.kinds is None else self.kinds


@dataclass
class VerificationReport:
    cases: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.summary.get("violations", 0) == 0 and self.summary.get("errors", 0) == 0

    def to_json(self):
        return json.dumps({"summary": self.summary, "cases": self.cases}, sort_keys=True, indent=1)

    def to_csv(self):
        if not self.cases:
            return ""
        buf = io.StringIO()
        fields = sorted({k for case in self.cases for k in case})
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for case in self.cases:
            writer.writerow(case)
        return buf.getvalue()


def _kind_order(kind):
    return list(BoundKind).index(kind)


def _verify_spec(args):
    (mu, nu, beta, x), kinds, tol, xstar, K, keep = args
    records = []
    try:
        spec = IntegralSpec(mu, nu, beta, x)
    except ValueError:
        return records
    refs = {}
    for kind in kinds:
        base = {"mu": mu, "nu": nu, "beta": beta, "x": x, "kind": kind.name, "label": kind.label,
                "side": kind.side.value}
        try:
            res = evaluate_bound(kind, spec, xstar=xstar, K=K)
            if not res.in_domain:
                if keep:
                    records.append({**base, "in_domain": False, "bound": None, "reference": None,
                                    "margin": None, "error": None})
                continue
            tspec = target_spec(kind, spec)
            if tspec not in refs:
                refs[tspec] = normalized_F(tspec)
            ref = refs[tspec]
            bound = res.normalized
            gap = bound - ref if kind.side is Side.UPPER else ref - bound
            records.append({**base, "in_domain": True, "bound": bound, "reference": ref,
                            "margin": gap / abs(ref), "error": None})
        except (ArithmeticError, ValueError) as exc:
            records.append({**base, "in_domain": True, "bound": None, "reference": None,
                            "margin": None, "error": f"{type(exc).__name__}: {exc}"})
    return records


def run_grid_verification(cfg):
    """Check every in-domain (bound, spec) pair of the grid against the reference integral.

    Bounds and references are compared in normalised form (both divided by
    exp(-beta x) x**nu); ``margin`` is the signed gap relative to the reference,
    positive when the bound holds.
    """
    kinds = cfg.selected_kinds()
    points = list(itertools.product(cfg.mus, cfg.nus, cfg.betas, cfg.xs))
    jobs = [(p, kinds, cfg.tol, cfg.xstar, cfg.K, cfg.keep_out_of_domain) for p in points]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_verify_spec, jobs, chunksize=64))
    else:
        chunks = [_verify_spec(job) for job in jobs]
    cases = [rec for chunk in chunks for rec in chunk]
    cases.sort(key=lambda r: (r["mu"], r["nu"], r["beta"], r["x"], _kind_order(BoundKind[r["kind"]])))
    return VerificationReport(cases, _summarize(cases, cfg.tol))


def _summarize(cases, tol):
    live = [c for c in cases if c["in_domain"]]
    margins = [c["margin"] for c in live if c["margin"] is not None]
    per_kind = {}
    for c in live:
        per_kind[c["kind"]] = per_kind.get(c["kind"], 0) + 1
    violations = sum(1 for m in margins if m < -tol)
    return {
        "cases": len(live),
        "violations": violations,
        "errors": sum(1 for c in live if c["error"] is not None),
        "max_negative_margin": min([0.0] + [m for m in margins if m < 0]),
        "min_margin": min(margins) if margins else None,
        "per_kind": per_kind,
        "tolerance": tol,
    }


@dataclass(frozen=True)
class TableSpec:
    table_id: int
    rows: tuple = TABLE_ROWS
    xs: tuple = TABLE_XS

    def __post_init__(self):
        if self.table_id not in (1, 2):
            raise ValueError(f"table id must be 1 or 2, got {self.table_id}")


def table_cell(table_id, mu, nu, beta, x, K=4):
    """Table 1: 1 - L/F. Table 2: U/F - 1."""
    spec = IntegralSpec(mu, nu, beta, x)
    F = normalized_F(spec)
    lower, upper = two_sided_envelope(spec, K)
    if table_id == 1:
        return 1.0 - lower / F
    return upper / F - 1.0


def reproduce_table(t):
    """Matrix of computed cells, rows in ``t.rows`` order and columns in ``t.xs`` order."""
    return [[table_cell(t.table_id, mu, nu, beta, x) for x in t.xs] for mu, nu, beta in t.rows]


def cell_tolerance(table_id, golden):
    if table_id == 1 or golden < 1:
        return TABLE1_ABS_TOL
    return TABLE2_REL_TOL * golden


def compare_table(t, matrix=None):
    """Per-cell comparison with the published values; returns a list of dicts."""
    if matrix is None:
        matrix = reproduce_table(t)
    golden = GOLDEN[t.table_id]
    out = []
    for i, row in enumerate(t.rows):
        for j, x in enumerate(t.xs):
            g = golden[row][TABLE_XS.index(x)]
            v = matrix[i][j]
            tol = cell_tolerance(t.table_id, g)
            out.append({"table": t.table_id, "mu": row[0], "nu": row[1], "beta": row[2], "x": x,
                        "computed": v, "rounded": round(v, 4), "published": g,
                        "deviation": v - g, "tol": tol, "passed": abs(v - g) <= tol})
    return out


def table_csv(t, matrix):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["mu", "nu", "beta"] + [f"x={x:g}" for x in t.xs])
    for (mu, nu, beta), row in zip(t.rows, matrix):
        writer.writerow([f"{mu:g}", f"{nu:g}", f"{beta:g}"] + [f"{v:.4f}" for v in row])
    return buf.getvalue()


def ratio_V(spec):
    """exp(beta x) I / (x**nu t~(mu+1, nu+1, x)) on mu > -3/2, -1/2 < nu < mu + 1, 0 < beta < 1."""
    if not (spec.mu > -1.5 and -0.5 < spec.nu < spec.mu + 1 and 0 < spec.beta < 1):
        raise ValueError(f"V ratio needs mu > -3/2, -1/2 < nu < mu + 1, 0 < beta < 1; got {spec}")
    return normalized_F(spec) / t_tilde(spec.mu + 1, spec.nu + 1, spec.x)


def log_lower_sum(mu, nu, beta, x, K=4):
    logs = [k * math.log(beta) + log_t_tilde(mu + k + 1, nu + k + 1, x) for k in range(K + 1)]
    m = max(logs)
    return m + math.log(math.fsum(math.exp(v - m) for v in logs))


def lower_relative_error(mu, nu, beta, x, K=4):
    """1 - L/F, computed in log space so it also works beyond double overflow."""
    spec = IntegralSpec(mu, nu, beta, x)
    return -math.expm1(log_lower_sum(mu, nu, beta, x, K) - normalized_F(spec, log=True))


ASYMPTOTIC_ORDERS = ((0.5, 1.0), (3.0, 1.0))
LARGE_X_TARGETS = {0.25: 9.766e-4, 0.5: 0.03125}


def _check(name, mu, nu, beta, x, value, target, tol, supplementary=False):
    dev = abs(value / target - 1.0)
    return {"check": name, "mu": mu, "nu": nu, "beta": beta, "x": x, "value": value,
            "target": target, "rel_deviation": dev, "tol": tol, "passed": dev <= tol,
            "supplementary": supplementary}


def asymptotic_suite(large_x=200.0, small_x=1e-3, extrapolated_x=1e5):
    """Limits of the relative errors of L and U as x -> 0 and x -> infinity.

    The large-x tail value is also evaluated at ``extrapolated_x`` (records
    marked ``supplementary``), where the O(1/x) approach has died down.
    """
    cases = []
    for mu, nu in ASYMPTOTIC_ORDERS:
        for beta, target in LARGE_X_TARGETS.items():
            cases.append(_check("large_x_tail", mu, nu, beta, large_x,
                                lower_relative_error(mu, nu, beta, large_x), target, 0.10))
        for beta in LARGE_X_TARGETS:
            cases.append(_check("small_x_lower", mu, nu, beta, small_x,
                                lower_relative_error(mu, nu, beta, small_x), 1.0 / (mu + nu + 3), 0.01))
            spec = IntegralSpec(mu, nu, beta, small_x)
            F = normalized_F(spec)
            U = t_tilde(mu, nu, small_x) / (1 - beta)
            cases.append(_check("small_x_upper_growth", mu, nu, beta, small_x,
                                U / F * (1 - beta) * small_x / (mu + nu + 2), 1.0, 0.01))
        for beta, target in LARGE_X_TARGETS.items():
            cases.append(_check("large_x_tail", mu, nu, beta, extrapolated_x,
                                lower_relative_error(mu, nu, beta, extrapolated_x), target, 0.10,
                                supplementary=True))
    primary = [c for c in cases if not c["supplementary"]]
    summary = {"checks": len(primary), "failed": sum(1 for c in primary if not c["passed"]),
               "supplementary_failed": sum(1 for c in cases if c["supplementary"] and not c["passed"])}
    summary["violations"] = summary["failed"]
    return VerificationReport(cases, summary)

"""Command-line front end: ``qzeta <subcommand> [options]``.

Every subcommand writes one table (CSV with a header row, or a JSON array of
objects with the same keys) to ``--out`` or stdout.  Complex numbers occupy
two columns ``*_re`` / ``*_im``.  A failed evaluation becomes a row whose
``error_kind`` and ``error_message`` columns are filled; the exit status is 0
exactly when no such row was written.  Progress goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from . import __version__
from .dirichlet import RationalShift, q_decompose
from .errors import QZetaError
from .hurwitz import hurwitz_zeta_with_error, p_pair, periodic_zeta_with_error, z_pair
from .quadzeta import fe_residual, q_eval, quadrilateral_zeta, xi_completed
from .theta import integral_xi, modular_residual
from .windows import detect_zeros_by_windows, parseval_check
from .zeros import ZeroRecord, count_argument_principle, find_a0, main_term, scan_critical_line

ERROR_COLUMNS = ["error_kind", "error_message"]

COLUMNS: Dict[str, List[str]] = {
    "eval": ["fn", "s_re", "s_im", "a", "re", "im", "abs_err"],
    "fe-check": ["a", "n_points", "n_excluded", "max_residual", "argmax_re", "argmax_im"],
    "scan": ["a", "t", "t_lo", "t_hi", "residual", "method", "engine_version"],
    "count": [
        "a", "T", "box_min", "box_max", "n_critical_line", "n_argument_principle",
        "n_real", "n_nonreal", "main_term", "discrepancy", "right_edge_certified",
    ],
    "decompose": ["r", "q", "s_re", "s_im", "decomp_re", "decomp_im", "direct_re", "direct_im", "residual"],
    "theta": ["check", "a", "x_re", "x_im", "residual"],
    "a0": ["a0", "bracket_lo", "bracket_hi", "q_half"],
    "windows": [
        "record", "t", "k", "delta", "a", "i_re", "i_im", "i_abs", "j", "quad_err",
        "verdict", "lhs", "rhs", "rel_diff",
    ],
    "density-plot": ["T", "count", "main_term", "line_count"],
}

ZERO_CACHE_COLUMNS = COLUMNS["scan"]


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def parse_complex(text: str) -> complex:
    """'0.5+14i', '2', '-1.5+2j' -> complex."""
    return complex(text.replace(" ", "").replace("i", "j"))


def _workers(args) -> int:
    env = os.environ.get("QZETA_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            raise SystemExit(f"QZETA_THREADS must be a positive integer, got {env!r}")
        if n < 1:
            raise SystemExit(f"QZETA_THREADS must be a positive integer, got {env!r}")
        return n
    return max(1, int(args.workers))


def _error_row(exc: Exception) -> dict:
    kind = exc.kind if isinstance(exc, QZetaError) else type(exc).__name__
    return {"error_kind": kind, "error_message": str(exc)}


class Table:
    """Rows for one subcommand; error rows are flagged for the exit status."""

    def __init__(self, columns: Sequence[str]):
        self.columns = list(columns) + ERROR_COLUMNS
        self.rows: List[dict] = []
        self.n_errors = 0

    def add(self, **values) -> None:
        self.rows.append(values)

    def add_error(self, exc: Exception, **values) -> None:
        self.n_errors += 1
        values.update(_error_row(exc))
        self.rows.append(values)


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    return v


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        objs = [{c: _json_value(row.get(c)) for c in table.columns} for row in table.rows]
        return json.dumps(objs, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(row.get(c)) for c in table.columns])
    return buf.getvalue()


def read_table(path: str) -> List[dict]:
    """Read a CSV or JSON product back into a list of string / value dicts."""
    with open(path, newline="") as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        return json.loads(text)
    return list(csv.DictReader(io.StringIO(text)))


def zero_record_from_row(row: dict) -> ZeroRecord:
    return ZeroRecord(
        a=float(row["a"]),
        t=float(row["t"]),
        t_lo=float(row["t_lo"]),
        t_hi=float(row["t_hi"]),
        residual=float(row["residual"]),
        method=str(row["method"]),
    )


# ---------------------------------------------------------------- subcommands


def _eval_one(fn: str, s: complex, a: float):
    if fn == "q":
        p = q_eval(s, a)
        return p.value, p.abs_err_est
    if fn == "xi":
        return xi_completed(s, a), None
    if fn == "hurwitz":
        return hurwitz_zeta_with_error(s, a)
    if fn == "li":
        return periodic_zeta_with_error(s, a)
    if fn == "z":
        return z_pair(s, a), None
    if fn == "p":
        return p_pair(s, a), None
    raise ValueError(f"unknown function {fn!r}")


def cmd_eval(args, table: Table) -> None:
    for a in args.a:
        for text in args.s:
            s = parse_complex(text)
            base = dict(fn=args.fn, s_re=s.real, s_im=s.imag, a=a)
            try:
                value, err = _eval_one(args.fn, s, a)
            except (QZetaError, ValueError) as exc:
                table.add_error(exc, **base)
                continue
            table.add(**base, re=value.real, im=value.imag, abs_err=err)


def _fe_points(args) -> List[complex]:
    if args.random:
        rng = np.random.default_rng(args.seed)
        sig = rng.uniform(args.sigma_min, args.sigma_max, args.random)
        t = rng.uniform(args.t_min, args.t_max, args.random)
        return [complex(x, y) for x, y in zip(sig, t)]
    sig = np.linspace(args.sigma_min, args.sigma_max, args.n)
    t = np.linspace(args.t_min, args.t_max, args.n)
    return [complex(x, y) for x in sig for y in t]


def cmd_fe_check(args, table: Table) -> None:
    points = _fe_points(args)
    for a in args.a:
        worst, where, skipped = 0.0, None, 0
        try:
            for s in points:
                try:
                    r = fe_residual(s, a)
                except QZetaError as exc:
                    if exc.kind == "excluded":
                        skipped += 1
                        continue
                    raise
                if r > worst:
                    worst, where = r, s
        except (QZetaError, ValueError) as exc:
            table.add_error(exc, a=a)
            continue
        table.add(
            a=a, n_points=len(points) - skipped, n_excluded=skipped, max_residual=worst,
            argmax_re=None if where is None else where.real,
            argmax_im=None if where is None else where.imag,
        )
        _progress(f"fe-check a={a}: max residual {worst:.3e}")


def merge_zero_cache(existing: Iterable[dict], new: Iterable[dict], tol: float = 1e-8) -> List[dict]:
    """Union of two zero tables keyed by (a, t), keeping the first copy of near-duplicates."""
    rows = sorted(list(existing) + list(new), key=lambda r: (float(r["a"]), float(r["t"])))
    out: List[dict] = []
    for r in rows:
        if out and float(out[-1]["a"]) == float(r["a"]) and abs(float(out[-1]["t"]) - float(r["t"])) < tol:
            continue
        out.append(r)
    return out


def read_zero_cache(path: str) -> List[dict]:
    rows = []
    for row in read_table(path):
        rec = {c: row[c] for c in ZERO_CACHE_COLUMNS}
        for c in ("a", "t", "t_lo", "t_hi", "residual"):
            rec[c] = float(rec[c])
        rows.append(rec)
    return rows


def write_zero_cache(path: str, rows: Iterable[dict]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(ZERO_CACHE_COLUMNS)
        for r in rows:
            writer.writerow([_cell(r[c]) for c in ZERO_CACHE_COLUMNS])


def cmd_scan(args, table: Table) -> None:
    rows = []
    for a in args.a:
        _progress(f"scan a={a} on [{args.t0}, {args.t1}]")
        try:
            zeros = scan_critical_line(a, args.t0, args.t1, workers=_workers(args))
        except (QZetaError, ValueError) as exc:
            table.add_error(exc, a=a)
            continue
        for z in zeros:
            rows.append(dict(a=z.a, t=z.t, t_lo=z.t_lo, t_hi=z.t_hi, residual=z.residual, method=z.method, engine_version=__version__))
        _progress(f"  {len(zeros)} zeros")
    if args.cache:
        existing = []
        if os.path.exists(args.cache):
            existing = read_zero_cache(args.cache)
        rows = merge_zero_cache(existing, rows)
        write_zero_cache(args.cache, rows)
    for r in rows:
        table.add(**r)


def cmd_count(args, table: Table) -> None:
    for a in args.a:
        for T in args.T:
            _progress(f"count a={a} T={T}")
            try:
                rep = count_argument_principle(a, T, (args.box_min, args.box_max), scan=not args.no_scan)
            except (QZetaError, ValueError) as exc:
                table.add_error(exc, a=a, T=T)
                continue
            table.add(
                a=rep.a, T=rep.T, box_min=rep.box[0], box_max=rep.box[1],
                n_critical_line=rep.n_critical_line, n_argument_principle=rep.n_argument_principle,
                n_real=rep.n_real, n_nonreal=rep.n_nonreal, main_term=rep.main_term,
                discrepancy=rep.discrepancy, right_edge_certified=rep.right_edge_certified,
            )


DEFAULT_DECOMPOSE_S = ["2", "3+1i", "0.5+5i", "-1.5+2i"]


def cmd_decompose(args, table: Table) -> None:
    for text in args.s or DEFAULT_DECOMPOSE_S:
        s = parse_complex(text)
        base = dict(r=args.r, q=args.q, s_re=s.real, s_im=s.imag)
        try:
            shift = RationalShift(args.r, args.q)
            d = q_decompose(s, shift)
            v = quadrilateral_zeta(s, shift.a)
        except (QZetaError, ValueError) as exc:
            table.add_error(exc, **base)
            continue
        table.add(**base, decomp_re=d.real, decomp_im=d.imag, direct_re=v.real, direct_im=v.imag, residual=abs(d - v))


def cmd_theta(args, table: Table) -> None:
    us = np.geomspace(args.u_min, args.u_max, args.n)
    for a in args.a:
        for u in us:
            try:
                table.add(check="modular", a=a, x_re=float(u), x_im=0.0, residual=modular_residual(u, a))
            except (QZetaError, ValueError) as exc:
                table.add_error(exc, check="modular", a=a, x_re=float(u), x_im=0.0)
        for sigma in args.sigma:
            for t in args.t:
                s = complex(sigma, t)
                try:
                    r = abs(integral_xi(s, a) - xi_completed(s, a))
                except (QZetaError, ValueError) as exc:
                    table.add_error(exc, check="integral", a=a, x_re=sigma, x_im=t)
                    continue
                table.add(check="integral", a=a, x_re=sigma, x_im=t, residual=r)


def cmd_a0(args, table: Table) -> None:
    try:
        root, (lo, hi) = find_a0(bracket=(args.lo, args.hi), width=args.width, return_bracket=True)
    except (QZetaError, ValueError) as exc:
        table.add_error(exc)
        return
    table.add(a0=root, bracket_lo=lo, bracket_hi=hi, q_half=quadrilateral_zeta(0.5, root).real)


def cmd_windows(args, table: Table) -> None:
    try:
        reports = detect_zeros_by_windows(args.a, args.t0, args.t1, args.k, args.delta, stride=args.stride, workers=_workers(args))
    except (QZetaError, ValueError) as exc:
        table.add_error(exc, record="window", a=args.a)
        reports = []
    for rep in reports:
        p = rep.params
        table.add(
            record="window", t=p.t, k=p.k, delta=p.delta, a=p.a, i_re=rep.i_value.real,
            i_im=rep.i_value.imag, i_abs=rep.i_abs, j=rep.j_val, quad_err=rep.quad_err, verdict=rep.verdict,
        )
    if args.parseval:
        base = dict(record="parseval", k=args.parseval_k, delta=args.parseval_delta, a=args.a)
        try:
            lhs, rhs = parseval_check(args.parseval_k, args.parseval_delta, args.a)
        except (QZetaError, ValueError) as exc:
            table.add_error(exc, **base)
            return
        table.add(**base, lhs=lhs, rhs=rhs, rel_diff=abs(lhs - rhs) / rhs)


def cmd_density_plot(args, table: Table) -> None:
    Ts = np.linspace(args.T_max / args.n, args.T_max, args.n)
    line = scan_critical_line(args.a, 0.0, args.T_max, workers=_workers(args))
    ts = np.array([z.t for z in line])
    for T in Ts:
        T = float(T)
        _progress(f"density a={args.a} T={T:g}")
        try:
            rep = count_argument_principle(args.a, T, (args.box_min, args.box_max), scan=False)
        except (QZetaError, ValueError) as exc:
            table.add_error(exc, T=T)
            continue
        table.add(T=T, count=rep.n_nonreal, main_term=main_term(T, rep.a), line_count=2 * int(np.sum(ts < T)))


COMMANDS = {
    "eval": cmd_eval,
    "fe-check": cmd_fe_check,
    "scan": cmd_scan,
    "count": cmd_count,
    "decompose": cmd_decompose,
    "theta": cmd_theta,
    "a0": cmd_a0,
    "windows": cmd_windows,
    "density-plot": cmd_density_plot,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qzeta", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--workers", type=int, default=1, help="process pool size (QZETA_THREADS overrides)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized grids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate Q, xi, zeta(s,a), Li(s,a), Z or P")
    p.add_argument("--fn", choices=("q", "xi", "hurwitz", "li", "z", "p"), default="q")
    p.add_argument("--s", action="append", required=True, help="complex point, e.g. 0.5+14i (repeatable)")
    p.add_argument("--a", type=float, action="append", required=True)

    p = sub.add_parser("fe-check", parents=[common], help="functional-equation residuals over a grid")
    p.add_argument("--a", type=float, nargs="+", default=[0.1, 0.25, 0.3, 1 / 3, 0.5])
    p.add_argument("--sigma-min", type=float, default=-3.0)
    p.add_argument("--sigma-max", type=float, default=4.0)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=60.0)
    p.add_argument("--n", type=int, default=21, help="grid points per axis")
    p.add_argument("--random", type=int, default=0, help="use this many random points instead of the grid")

    p = sub.add_parser("scan", parents=[common], help="critical-line zeros via the Hardy function")
    p.add_argument("--a", type=float, nargs="+", required=True)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--cache", help="zero cache CSV to extend (deduplicated by (a, t))")

    p = sub.add_parser("count", parents=[common], help="argument-principle zero counts")
    p.add_argument("--a", type=float, nargs="+", required=True)
    p.add_argument("--T", type=float, nargs="+", required=True)
    p.add_argument("--box-min", type=float, default=-5.0)
    p.add_argument("--box-max", type=float, default=6.0)
    p.add_argument("--no-scan", action="store_true", help="skip the critical-line count")

    p = sub.add_parser("decompose", parents=[common], help="L-function decomposition residuals for r/q")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", action="append", help="complex point (repeatable)")

    p = sub.add_parser("theta", parents=[common], help="modular relation and integral representation residuals")
    p.add_argument("--a", type=float, nargs="+", default=[0.1, 0.3])
    p.add_argument("--u-min", type=float, default=0.1)
    p.add_argument("--u-max", type=float, default=10.0)
    p.add_argument("--n", type=int, default=41)
    p.add_argument("--sigma", type=float, nargs="+", default=[0.2, 0.5, 0.8])
    p.add_argument("--t", type=float, nargs="+", default=[0.0, 1.0, 2.0, 5.0])

    p = sub.add_parser("a0", parents=[common], help="critical shift a0 by bisection")
    p.add_argument("--lo", type=float, default=0.05)
    p.add_argument("--hi", type=float, default=0.3)
    p.add_argument("--width", type=float, default=1e-8)

    p = sub.add_parser("windows", parents=[common], help="window-integral zero detector")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--k", type=float, default=0.5)
    p.add_argument("--delta", type=float, default=0.5)
    p.add_argument("--stride", type=float, help="distance between window centres (default k)")
    p.add_argument("--parseval", action="store_true", help="append a Parseval identity row")
    p.add_argument("--parseval-k", type=float, default=5.0)
    p.add_argument("--parseval-delta", type=float, default=0.5)

    p = sub.add_parser("density-plot", parents=[common], help="(T, count, main term) for plotting")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--T-max", type=float, default=100.0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--box-min", type=float, default=-5.0)
    p.add_argument("--box-max", type=float, default=6.0)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    table = Table(COLUMNS[args.command])
    COMMANDS[args.command](args, table)
    text = render(table, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if table.n_errors == 0 else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

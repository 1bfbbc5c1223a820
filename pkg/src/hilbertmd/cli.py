"""Command-line front end: transforms, sweeps, coefficient dumps, waves.

Every run writes one or more CSV files (comma separator, mandatory
header, 17 significant digits, literal inf/nan) and, unless --no-plot
is given, a PDF figure next to each CSV.  Exit codes: 0 success,
1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from .chebyshev import cheb_coeffs
from .contour import hilbert_oscillatory
from .domains import FINITE, PiecewiseFn, build_partition, sample
from .errors import (
    ContourError,
    DecayFlagError,
    EvaluationError,
    FunctionSpecError,
    GridError,
    OracleConvergenceError,
    PartitionError,
    SolverDivergenceError,
    SolverLimitError,
    UsageError,
)
from .examples import get_example, list_examples
from .presets import PRESETS
from .soliton import SolitonProblem, newton_solve
from .transform import build_eval_grid, hilbert_md
from .weideman import GlobalTransform, weideman_coeffs
from . import plotting

__all__ = ["main"]

_USAGE_ERRORS = (UsageError, GridError, PartitionError, FunctionSpecError, DecayFlagError)
_NUMERIC_ERRORS = (
    SolverDivergenceError,
    SolverLimitError,
    OracleConvergenceError,
    EvaluationError,
    ContourError,
)


def _fmt(v) -> str:
    v = float(v)
    if np.isnan(v):
        return "nan"
    if np.isinf(v):
        return "inf" if v > 0 else "-inf"
    return "%.16e" % v


def _write_csv(path: str, header: str, rows) -> str:
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".csvtmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(header + "\n")
            for r in rows:
                fh.write(",".join(r) + "\n")
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def _resolve_out(args, default_name: str) -> str:
    out = getattr(args, "out", None)
    if not out:
        return default_name
    if os.path.isdir(out) or out.endswith(os.sep):
        os.makedirs(out, exist_ok=True)
        return os.path.join(out, default_name)
    return out


def _pdf_path(csv_path: str) -> str:
    stem, _ = os.path.splitext(csv_path)
    return stem + ".pdf"


def _resolve_degrees(partition, base, n=None, n_tail=None) -> tuple:
    """--n drives finite domains (and tails that track them); --n-tail all tails."""
    doms = partition.domains
    fin_max = max(base[i] for i, d in enumerate(doms) if d.kind == FINITE)
    out = []
    for i, d in enumerate(doms):
        v = base[i]
        if d.kind == FINITE:
            if n is not None:
                v = n
        elif n_tail is not None:
            v = n_tail
        elif n is not None and base[i] == fin_max:
            v = n
        out.append(int(v))
    return tuple(out)


def _prepare(spec, args):
    """Partition, branch function, and degrees after CLI overrides."""
    if args.breakpoints:
        try:
            bps = [float(t) for t in args.breakpoints.split(",")]
        except ValueError:
            raise UsageError(f"cannot parse breakpoints {args.breakpoints!r}") from None
        wrap = True if args.wrap is None else args.wrap
        partition = build_partition(bps, wrap=wrap)
        whole = spec.whole

        def tail(s, f=whole):
            return 0.0 if s == 0.0 else float(f(1.0 / s))

        branches = tuple(
            (lambda y, f=whole: float(f(y))) if d.kind == FINITE else tail
            for d in partition.domains
        )
        # custom partitions assume the function is smooth at the cuts
        fn = PiecewiseFn(
            branches,
            continuity={float(b): True for b in partition.breakpoints},
            name=spec.name + "-repartitioned",
        )
        fin_max = max(
            spec.degrees[i]
            for i, d in enumerate(spec.partition.domains)
            if d.kind == FINITE
        )
        base = [fin_max] * len(partition.domains)
    else:
        partition, fn, base = spec.partition, spec.fn, list(spec.degrees)
    degrees = _resolve_degrees(partition, base, args.n, args.n_tail)
    return partition, fn, degrees


def _numeric_on_grid(spec, method, partition, fn, degrees, xs, args):
    if method == "md":
        field = sample(fn, partition, degrees)
        return np.asarray(hilbert_md(field, xs, delta=args.delta))
    if method == "global":
        nf = args.nf if getattr(args, "nf", None) else spec.nf
        return GlobalTransform(spec.whole, nf, finf=spec.finf).values(xs)
    if method == "contour":
        if spec.contour_params is None:
            raise UsageError("contour method only applies to the oscillatory examples")
        alpha, beta = spec.contour_params
        return np.asarray(hilbert_oscillatory(spec.contour_rational, xs, alpha, beta))
    raise UsageError(f"unknown method {method!r}")


def run_transform(args) -> int:
    spec = get_example(args.example)
    method = args.method
    partition, fn, degrees = _prepare(spec, args)
    xs, _ = build_eval_grid(partition, degrees)
    numeric = _numeric_on_grid(spec, method, partition, fn, degrees, xs, args)
    exact = np.asarray(spec.exact(xs))
    both = np.isfinite(numeric) & np.isfinite(exact)
    err = np.where(both, np.abs(numeric - exact), np.nan)
    out = _resolve_out(args, f"transform_{spec.name}_{method}.csv")
    rows = (
        (_fmt(x), _fmt(h), _fmt(e), _fmt(d))
        for x, h, e, d in zip(xs, numeric, exact, err)
    )
    _write_csv(out, "x,H_numeric,H_exact,abs_err", rows)
    if args.plot:
        plotting.save_transform_plot(
            _pdf_path(out), xs, numeric, exact, title=f"{spec.name} ({method})"
        )
    worst = np.nanmax(err) if np.any(both) else np.nan
    print(f"{out}: {xs.size} points, max abs_err {worst:.3e}")
    return 0


def _parse_n_list(text: str) -> list:
    try:
        ns = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse --n-list {text!r}") from None
    if not ns:
        raise UsageError("--n-list is empty")
    return ns


def run_convergence(args) -> int:
    spec = get_example(args.example)
    method = args.method
    if method not in ("md", "global"):
        raise UsageError("convergence sweeps support methods md and global")
    if not args.n_list:
        raise UsageError("convergence needs --n-list")
    ns = _parse_n_list(args.n_list)
    partition, fn, base_degrees = _prepare(spec, args)
    fin_idx = {i for i, d in enumerate(partition.domains) if d.kind == FINITE}
    table = []
    for n in ns:
        if method == "md":
            degrees = _resolve_degrees(partition, list(base_degrees), n, args.n_tail)
            xs, owners = build_eval_grid(partition, degrees)
            numeric = _numeric_on_grid(spec, "md", partition, fn, degrees, xs, args)
        else:
            xs, owners = build_eval_grid(partition, base_degrees)
            numeric = GlobalTransform(spec.whole, n, finf=spec.finf).values(xs)
        exact = np.asarray(spec.exact(xs))
        both = np.isfinite(numeric) & np.isfinite(exact)
        err = np.where(both, np.abs(numeric - exact), np.nan)
        fin_mask = np.array([o in fin_idx for o in owners])
        linf = np.nanmax(err) if np.any(both) else np.nan
        e1 = np.nanmax(err[fin_mask]) if np.any(both & fin_mask) else np.nan
        e2 = np.nanmax(err[~fin_mask]) if np.any(both & ~fin_mask) else np.nan
        table.append((n, linf, e1, e2))
        print(f"N={n}: linf {linf:.3e}")
    out = _resolve_out(args, f"convergence_{spec.name}_{method}.csv")
    if method == "md":
        rows = ((str(n), _fmt(l), _fmt(e1), _fmt(e2)) for n, l, e1, e2 in table)
        _write_csv(out, "N,linf_err,err_finite,err_infinite", rows)
        cols = {
            "overall": [r[1] for r in table],
            "bounded domains": [r[2] for r in table],
            "tail domains": [r[3] for r in table],
        }
    else:
        rows = ((str(n), _fmt(l)) for n, l, _, _ in table)
        _write_csv(out, "N,linf_err", rows)
        cols = {"overall": [r[1] for r in table]}
    if args.plot:
        plotting.save_convergence_plot(
            _pdf_path(out), [r[0] for r in table], cols,
            title=f"{spec.name} ({method})",
        )
    print(f"{out}: {len(table)} rows")
    return 0


def run_coeffs(args) -> int:
    spec = get_example(args.example)
    method = args.method
    if method == "md":
        partition, fn, degrees = _prepare(spec, args)
        field = sample(fn, partition, degrees)
        out = _resolve_out(args, f"coeffs_{spec.name}_md.csv")
        stem, ext = os.path.splitext(out)
        series = []
        for i, vals in enumerate(field.samples):
            c = np.abs(cheb_coeffs(vals))
            path = f"{stem}_d{i}{ext}"
            _write_csv(
                path, "n,abs_coeff", ((str(n), _fmt(v)) for n, v in enumerate(c))
            )
            kind = partition.domains[i].kind
            series.append((f"domain {i} ({kind})", c))
            print(f"{path}: {c.size} coefficients")
        if args.plot:
            plotting.save_coeffs_plot(
                _pdf_path(out), series, title=f"{spec.name} coefficients"
            )
        return 0
    if method == "global":
        nf = args.nf if args.nf else spec.nf
        idx, coeffs = weideman_coeffs(spec.whole, nf, finf=spec.finf)
        out = _resolve_out(args, f"coeffs_{spec.name}_global.csv")
        _write_csv(
            out,
            "n,abs_a_n",
            ((str(n), _fmt(abs(a))) for n, a in zip(idx, coeffs)),
        )
        if args.plot:
            order = np.argsort(idx)
            plotting.save_coeffs_plot(
                _pdf_path(out),
                [("|a_n| vs |n|", np.abs(coeffs[order][idx[order] >= 0]))],
                title=f"{spec.name} rational-basis coefficients",
            )
        print(f"{out}: {len(idx)} coefficients")
        return 0
    raise UsageError("coeffs supports methods md and global")


def run_soliton(args) -> int:
    problem = SolitonProblem(
        m=args.m,
        n=args.n if args.n else 100,
        mu=args.mu,
        tol=args.tol,
        max_iter=args.max_iter,
        amplitude=args.amplitude,
    )
    profile = newton_solve(problem)
    exact2 = None
    if args.m == 2:
        exact2 = lambda y: 4.0 / (1.0 + y * y)  # noqa: E731
    rows = []
    for j, xi in enumerate(profile.xi):
        row = ["0", _fmt(xi), _fmt(xi), _fmt(profile.Q[j])]
        if exact2 is not None:
            row.append(_fmt(abs(profile.Q[j] - exact2(xi))))
        rows.append(tuple(row))
    for j, s in enumerate(profile.s):
        y = np.inf if s == 0.0 else 1.0 / s
        q = s * profile.v[j]
        row = ["1", _fmt(s), _fmt(y), _fmt(q)]
        if exact2 is not None:
            ref = 0.0 if np.isinf(y) else exact2(y)
            row.append(_fmt(abs(q - ref)))
        rows.append(tuple(row))
    header = "domain,node_coordinate,xi,Q"
    if exact2 is not None:
        header += ",abs_err_exact"
    out = _resolve_out(args, f"soliton_m{args.m}_n{problem.n}.csv")
    _write_csv(out, header, iter(rows))
    diag = {
        "m": profile.m,
        "c": profile.c,
        "n": profile.n,
        "iterations": profile.iterations,
        "residual": profile.residual,
        **{
            k: v
            for k, v in profile.diagnostics.items()
            if k != "residual_history"
        },
    }
    text = json.dumps(diag, indent=2, default=float)
    stem, _ = os.path.splitext(out)
    with open(stem + "_diagnostics.txt", "w") as fh:
        fh.write(text + "\n")
    if args.plot:
        plotting.save_soliton_plot(
            _pdf_path(out), profile, title=f"solitary wave m={args.m}"
        )
    print(f"{out}: converged in {profile.iterations} iterations, "
          f"residual {profile.residual:.3e}, peak {profile.peak:.6f}")
    print(text)
    return 0


def run_selftest(args) -> int:
    failures = 0

    def check(name, ok, detail=""):
        nonlocal failures
        if ok:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name} {detail}")

    spec = get_example("lorentz_a1")
    field = spec.make_field()
    xs = np.array([-3.0, -1.0, -0.3, 0.0, 0.5, 1.0, 2.5])
    err = np.max(np.abs(np.asarray(hilbert_md(field, xs)) - spec.exact(xs)))
    check("split transform, narrow rational bump", err <= 1e-12, f"err={err:.2e}")

    gt = GlobalTransform(spec.whole, 16)
    err = np.max(np.abs(gt.values(xs) - spec.exact(xs)))
    check("global transform, narrow rational bump", err <= 1e-12, f"err={err:.2e}")

    gs = get_example("gauss")
    err = abs(gs.exact(1.0) - 2.0 / np.sqrt(np.pi) * 0.5380795069127684)
    check("Gaussian closed form at x=1", err <= 1e-12, f"err={err:.2e}")

    problem = SolitonProblem(m=2, n=40)
    profile = newton_solve(problem)
    qerr = np.max(np.abs(profile.Q - 4.0 / (1.0 + profile.xi**2)))
    check(
        "solitary wave m=2 quick solve",
        profile.residual < 1e-10 and qerr <= 1e-10,
        f"residual={profile.residual:.2e} qerr={qerr:.2e}",
    )
    return 0 if failures == 0 else 2


def run_preset(args, parser) -> int:
    if args.list or not args.name:
        width = max(len(k) for k in PRESETS)
        for k, (desc, _) in PRESETS.items():
            print(f"{k:<{width}}  {desc}")
        return 0
    if args.name not in PRESETS:
        known = ", ".join(PRESETS)
        raise UsageError(f"unknown preset {args.name!r}; known: {known}")
    _, argv = PRESETS[args.name]
    argv = list(argv)
    if args.out:
        argv += ["--out", args.out if args.out.endswith(os.sep) else args.out + os.sep]
    if not args.plot:
        argv.append("--no-plot")
    sub = parser.parse_args(argv)
    return _dispatch(sub, parser)


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(p):
    p.add_argument("--out", help="output CSV path (or directory)")
    p.add_argument(
        "--plot",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="write a PDF figure next to the CSV",
    )
    p.add_argument("--delta", type=float, default=0.25,
                   help="near-domain margin fraction for the split method")


def _add_example_opts(p, need_example=True):
    p.add_argument("--example", required=need_example,
                   help="registered example id (see README)")
    p.add_argument("--method", choices=("md", "global", "contour"), default="md")
    p.add_argument("--n", type=int, help="per-domain degree for the split method")
    p.add_argument("--n-tail", type=int, dest="n_tail",
                   help="degree override for tail domains")
    p.add_argument("--nf", type=int, help="grid size for the global method")
    p.add_argument("--n-list", dest="n_list",
                   help="comma-separated degrees for convergence sweeps")
    p.add_argument("--breakpoints",
                   help="comma-separated partition override (finite cuts)")
    p.add_argument("--wrap", action=argparse.BooleanOptionalAction, default=None,
                   help="join the two tails through infinity (with --breakpoints)")


def build_parser() -> _Parser:
    parser = _Parser(prog="hilbertmd",
                     description="Hilbert transforms on the real line, "
                                 "split-domain and global spectral methods")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("transform", help="pointwise transform on the report grid")
    _add_example_opts(p)
    _add_common(p)

    p = sub.add_parser("convergence", help="error vs resolution sweep")
    _add_example_opts(p)
    _add_common(p)

    p = sub.add_parser("coeffs", help="coefficient decay dump")
    _add_example_opts(p)
    _add_common(p)

    p = sub.add_parser("soliton", help="solitary-wave Newton solve")
    p.add_argument("--m", type=int, default=2, help="nonlinearity power")
    p.add_argument("--n", type=int, help="per-domain degree (even)")
    p.add_argument("--mu", type=float, help="Newton relaxation in (0,1]")
    p.add_argument("--tol", type=float, default=1e-10, help="residual tolerance")
    p.add_argument("--max-iter", type=int, default=400, dest="max_iter")
    p.add_argument("--amplitude", type=float, default=None,
                   help="initial bump height (default 3.5 for m=2, 8/m above)")
    _add_common(p)

    p = sub.add_parser("selftest", help="quick numerical sanity checks")
    _add_common(p)

    p = sub.add_parser("preset", help="run a named standard experiment")
    p.add_argument("name", nargs="?", help="preset id (omit with --list)")
    p.add_argument("--list", action="store_true", help="list presets")
    _add_common(p)

    return parser


def _dispatch(args, parser) -> int:
    if args.command == "transform":
        return run_transform(args)
    if args.command == "convergence":
        return run_convergence(args)
    if args.command == "coeffs":
        return run_coeffs(args)
    if args.command == "soliton":
        return run_soliton(args)
    if args.command == "selftest":
        return run_selftest(args)
    if args.command == "preset":
        return run_preset(args, parser)
    parser.print_help()
    return 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _dispatch(args, parser)
    except _USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except _NUMERIC_ERRORS as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

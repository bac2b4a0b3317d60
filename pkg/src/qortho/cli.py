"""Command-line front end.

    qortho eval    --family F --n N --q Q [params] --grid a:b:count
    qortho coeffs  --family F --n N --q Q [params]
    qortho zeros   --family F --n N --q Q [params] [--method pencil|aberth|both]
    qortho table   --preset table1|table2|table3|table4
    qortho verify  [--suite NAME ...]
    qortho sweep   --family F --n N --q Q --gamma-grid a:b:count [...]

Output format is csv (default), json, or svg where applicable; --fig PATH
additionally renders a matplotlib figure for the zeros/table/sweep reports.
Exit codes: 0 ok, 1 usage error, 2 numerical failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report
from .errors import DomainError, QOrthoError
from .families import CLASSICAL_FAMILIES, Family, Params, coeffs, eval as family_eval, rescaled_zero_polynomial
from .verify import VERIFY_SUITES, run_suites
from .zeros import aberth_roots, classify_real, compute_zeros


class UsageError(Exception):
    pass


def _family(name: str) -> Family:
    try:
        return Family.from_name(name)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_grid(text: str):
    try:
        start, stop, count = text.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}; expected start:stop:count") from exc
    if count < 1:
        raise UsageError("grid count must be >= 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _params(args) -> Params:
    if args.exact:
        q = Fraction(args.q)
        return Params(q=q, gamma=int(args.gamma), xi=int(args.xi), c=int(args.c))
    return Params(q=float(args.q), gamma=float(args.gamma), xi=float(args.xi), c=float(args.c))


def _emit(args, config, header, rows, diagnostics=None, svg_text=None):
    if args.format == "json":
        text = report.rows_to_json(config, header, rows, diagnostics or {})
    elif args.format == "svg":
        if svg_text is None:
            raise UsageError("svg output is not available for this command")
        text = svg_text
    else:
        text = report.rows_to_csv(header, rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(sp, family_required=True):
    sp.add_argument("--family", required=family_required)
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--q", default="0.5")
    sp.add_argument("--gamma", default="0")
    sp.add_argument("--xi", default="0")
    sp.add_argument("--c", default="0")
    sp.add_argument("--exact", action="store_true", help="exact rational arithmetic (integer parameters)")
    sp.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    sp.add_argument("--out", default=None)
    sp.add_argument("--fig", default=None, help="write a matplotlib figure to this path")


def build_parser() -> _Parser:
    ap = _Parser(prog="qortho", description="generalized q-orthogonal polynomial toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="evaluate a family member on a z-grid")
    _add_common(sp)
    sp.add_argument("--grid", default="0:1:11", help="z grid start:stop:count")
    sp.add_argument("--z", default=None, help="single z value (overrides --grid)")

    sp = sub.add_parser("coeffs", help="dump monomial coefficients")
    _add_common(sp)

    sp = sub.add_parser("zeros", help="compute zeros")
    _add_common(sp)
    sp.add_argument("--method", choices=("pencil", "aberth", "both"), default="both")

    sp = sub.add_parser("table", help="reproduce a preset reference table")
    sp.add_argument("--preset", required=True, choices=("table1", "table2", "table3", "table4"))
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None)
    sp.add_argument("--fig", default=None)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", action="append", default=None,
                    help=f"suite name (repeatable); known: {', '.join(VERIFY_SUITES)}")
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("sweep", help="zero-count map over a parameter grid")
    _add_common(sp)
    sp.add_argument("--gamma-grid", default=None)
    sp.add_argument("--xi-grid", default=None)
    sp.add_argument("--c-grid", default=None)
    sp.add_argument("--method", choices=("pencil", "aberth", "both"), default="both")
    return ap


def cmd_eval(args) -> int:
    family = _family(args.family)
    p = _params(args)
    zs = [float(args.z)] if args.z is not None else _parse_grid(args.grid)
    rows = [(z, float(family_eval(family, args.n, p, z))) for z in zs]
    config = {"command": "eval", "family": family.value, "n": args.n, "q": str(args.q),
              "gamma": str(args.gamma), "xi": str(args.xi), "c": str(args.c)}
    _emit(args, config, ("z", "value"), rows)
    return 0


def cmd_coeffs(args) -> int:
    family = _family(args.family)
    p = _params(args)
    cs = coeffs(family, args.n, p)
    rows = [(k, float(c)) for k, c in enumerate(cs.coeffs)]
    config = {"command": "coeffs", "family": family.value, "n": args.n, "q": str(args.q),
              "gamma": str(args.gamma), "xi": str(args.xi), "c": str(args.c)}
    _emit(args, config, ("k", "coefficient"), rows)
    return 0


def cmd_zeros(args) -> int:
    family = _family(args.family)
    p = _params(args)
    zs = compute_zeros(family, args.n, p, method=args.method)
    order = sorted(range(len(zs.roots)), key=lambda i: (zs.roots[i].real, zs.roots[i].imag))
    rows = [(zs.roots[i].real, zs.roots[i].imag, "real" if zs.real_flags[i] else "complex",
             zs.method, zs.residuals[i]) for i in order]
    config = {"command": "zeros", "family": family.value, "n": args.n, "q": str(args.q),
              "gamma": str(args.gamma), "xi": str(args.xi), "c": str(args.c), "method": args.method}
    diagnostics = {"warnings": zs.warnings, "n_real": zs.n_real}
    svg_text = report.zeros_svg(zs.roots, title=f"{family.value} n={args.n} q={args.q}")
    _emit(args, config, ("re", "im", "class", "method", "residual"), rows, diagnostics, svg_text)
    if args.fig:
        report.save_zero_figure(zs.roots, args.fig, title=f"{family.value} n={args.n} q={args.q}")
    for w in zs.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return 0


TABLE_PRESETS = {
    # q -> 1 study of the degree-6 extended jacobi-type member
    "table1": {"family": Family.GEN_LITTLE_Q_JACOBI, "n": 6, "gamma": 0.1, "xi": 0.2, "c": 1.0,
               "q_columns": (0.99997, 0.99998, 0.999985), "classical": Family.CLASSICAL_JACOBI,
               "rescale": False},
    # q -> 1 study of the degree-6 extended laguerre-type member (classical scale)
    "table2": {"family": Family.GEN_Q_LAGUERRE, "n": 6, "gamma": 0.1, "xi": 0.0, "c": 1.0,
               "q_columns": (0.9999, 0.99999, 0.999990001), "classical": Family.CLASSICAL_LAGUERRE,
               "rescale": True},
    # consecutive degrees of the extended laguerre-type member at q = 0.9
    "table3": {"family": Family.GEN_Q_LAGUERRE, "gamma": 0.5, "c": 1.0, "q": 0.9,
               "degrees": (6, 7)},
    # classical q-Laguerre vs its extension at q = 0.9 (one-sided interlacing)
    "table4": {"q": 0.9, "gamma": 0.1, "columns": ((Family.Q_LAGUERRE, 5, 0.0),
                                                   (Family.GEN_Q_LAGUERRE, 5, 1.0))},
}


def _real_sorted_zeros(family: Family, n: int, p: Params, rescale: bool = False):
    if family in CLASSICAL_FAMILIES:
        roots = aberth_roots(coeffs(family, n, p))
    elif rescale:
        roots = aberth_roots(rescaled_zero_polynomial(family, n, p))
    else:
        roots = compute_zeros(family, n, p, method="both").roots
    classify_real(roots)
    return sorted(r.real for r in roots)


def table_rows(preset: str):
    cfg = TABLE_PRESETS[preset]
    if preset in ("table1", "table2"):
        n = cfg["n"]
        cols = []
        headers = []
        for q in cfg["q_columns"]:
            p = Params(q=q, gamma=cfg["gamma"], xi=cfg["xi"], c=cfg["c"])
            cols.append(_real_sorted_zeros(cfg["family"], n, p, rescale=cfg["rescale"]))
            headers.append(f"q={q}")
        p = Params(q=0.5, gamma=cfg["gamma"], xi=cfg["xi"], c=cfg["c"])
        cols.append(_real_sorted_zeros(cfg["classical"], n, p))
        headers.append("classical")
        rows = [tuple(col[i] for col in cols) for i in range(n)]
        return headers, rows
    if preset == "table3":
        q, g, c = cfg["q"], cfg["gamma"], cfg["c"]
        cols = []
        headers = []
        for n in cfg["degrees"]:
            p = Params(q=q, gamma=g, c=c)
            cols.append(_real_sorted_zeros(cfg["family"], n, p))
            headers.append(f"n={n}")
        depth = max(len(c_) for c_ in cols)
        rows = [tuple(col[i] if i < len(col) else float("nan") for col in cols) for i in range(depth)]
        return headers, rows
    if preset == "table4":
        q, g = cfg["q"], cfg["gamma"]
        cols = []
        headers = []
        for family, n, c in cfg["columns"]:
            p = Params(q=q, gamma=g, c=c)
            cols.append(_real_sorted_zeros(family, n, p))
            headers.append(family.value)
        rows = [tuple(col[i] for col in cols) for i in range(len(cols[0]))]
        return headers, rows
    raise UsageError(f"unknown preset {preset!r}")


def cmd_table(args) -> int:
    headers, rows = table_rows(args.preset)
    config = {"command": "table", "preset": args.preset}
    _emit(args, config, headers, rows)
    if args.fig:
        panels = []
        for j, h in enumerate(headers):
            panels.append((f"{args.preset} {h}", [complex(r[j], 0.0) for r in rows
                                                  if r[j] == r[j]]))
        report.save_sweep_figure(panels, args.fig)
    return 0


def cmd_verify(args) -> int:
    names = args.suite or list(VERIFY_SUITES)
    reports = run_suites(names)
    failed = [r.suite for r in reports if not r.passed]
    if args.format == "json":
        payload = {"suites": [r.to_dict() for r in reports], "passed": not failed}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        rows = []
        for r in reports:
            for c in r.checks:
                rows.append((r.suite, c.check_id, c.value,
                             "" if c.threshold is None else c.threshold,
                             {True: "pass", False: "FAIL", None: "info"}[c.passed]))
        text = report.rows_to_csv(("suite", "check", "value", "threshold", "status"), rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for r in reports:
        worst = r.worst
        status = "pass" if r.passed else "FAIL"
        detail = f" worst={worst.check_id} value={worst.value:.3e}" if worst else ""
        print(f"suite {r.suite}: {status}{detail}", file=sys.stderr)
    return 3 if failed else 0


def cmd_sweep(args) -> int:
    family = _family(args.family)
    base = _params(args)
    g_grid = _parse_grid(args.gamma_grid) if args.gamma_grid else [float(args.gamma)]
    # omitted xi / c grids follow the gamma grid (tied sweep), matching the
    # equal-parameter zero-pattern studies
    if args.xi_grid:
        x_grid = _parse_grid(args.xi_grid)
    else:
        x_grid = g_grid if args.gamma_grid else [float(args.xi)]
    if args.c_grid:
        c_grid = _parse_grid(args.c_grid)
    else:
        c_grid = g_grid if args.gamma_grid else [float(args.c)]
    if len(x_grid) not in (1, len(g_grid)) or len(c_grid) not in (1, len(g_grid)):
        raise UsageError("xi/c grids must have length 1 or match the gamma grid")
    rows = []
    panels = []
    for i, g in enumerate(g_grid):
        x = x_grid[i % len(x_grid)] if len(x_grid) > 1 else x_grid[0]
        c = c_grid[i % len(c_grid)] if len(c_grid) > 1 else c_grid[0]
        p = Params(q=base.q, gamma=g, xi=x, c=c)
        zs = compute_zeros(family, args.n, p, method=args.method)
        rows.append((g, x, c, zs.n_real, len(zs.roots) - zs.n_real))
        panels.append((f"gamma={g:.3g} xi={x:.3g} c={c:.3g}: {zs.n_real} real", zs.roots))
    config = {"command": "sweep", "family": family.value, "n": args.n, "q": str(args.q)}
    svg_text = report.sweep_svg(panels)
    _emit(args, config, ("gamma", "xi", "c", "n_real", "n_complex"), rows, None, svg_text)
    if args.fig:
        report.save_sweep_figure(panels, args.fig)
    return 0


COMMANDS = {
    "eval": cmd_eval,
    "coeffs": cmd_coeffs,
    "zeros": cmd_zeros,
    "table": cmd_table,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except QOrthoError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

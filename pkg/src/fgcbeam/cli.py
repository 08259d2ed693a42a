"""Command line interface.

Subcommands:

    run <config>                          single case report
    converge <config> --ne 2,4,8,...      mesh convergence table
    sweep <config> --param p --values ... parameter sweep (CSV)
    bench [--table T6,T7] [--csv FILE]    embedded benchmark gate
    profile <config> --x mid --samples N  through-thickness stress CSV

Config files use the INI grammar documented in ``fgcbeam.config``.
All CSV output is UTF-8 with '.' decimals and 10-significant-digit
scientific notation; identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .benchmarks import TABLE_IDS, BenchReport, benchmark_compare
from .config import CaseConfig, ConfigError, parse_config
from .postproc import thickness_profile
from .section import compute_rigidities
from .solver import solve_static
from .studies import convergence_study, evaluate_case, sweep


def _fmt(x: float) -> str:
    return f"{x:.9e}"


def _load_config(path: str) -> CaseConfig:
    try:
        return parse_config(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")


def _case_header(cfg: CaseConfig) -> list[str]:
    rl = "inf" if math.isinf(cfg.R_over_L) else f"{cfg.R_over_L:g}"
    scheme = "-".join(f"{s:g}" for s in cfg.layup.scheme)
    lines = [
        f"layup    : kind {cfg.layup.kind.value}"
        + ("" if cfg.layup.kind.value == "A" else f", scheme {scheme}")
        + f", p = {cfg.layup.p:g}",
        f"geometry : L = {cfg.L:g} m, h = {cfg.h:g} m (L/h = {cfg.L / cfg.h:g}), "
        f"R/L = {rl}",
        f"material : E_m = {cfg.material.E_m:g} Pa, E_c = {cfg.material.E_c:g} Pa, "
        f"nu = {cfg.material.nu:g}",
        f"case     : {cfg.bc.value}, {cfg.load.kind} of magnitude "
        f"{cfg.load.magnitude:g}, ne = {cfg.ne}",
    ]
    return lines


def _cmd_run(args) -> int:
    cfg = _load_config(args.config)
    res = evaluate_case(cfg)
    out = sys.stdout
    for line in _case_header(cfg):
        out.write(line + "\n")
    out.write(f"w at x = {res.x_deflection:g} m : {_fmt(res.w)} m\n")
    if res.w_bar is not None:
        out.write(f"w_bar     = {_fmt(res.w_bar)}\n")
        out.write(f"sigma_bar = {_fmt(res.sigma_bar)}   (x = L/2, z = +h/2)\n")
        out.write(f"tau_bar   = {_fmt(res.tau_bar)}   (x = 0, z = 0)\n")
    else:
        out.write("nondimensional outputs are defined for the udl load case only\n")
    if args.profile:
        x = _parse_station(args.profile_x, cfg)
        _write_profile(cfg, x, args.profile_samples, Path(args.profile))
        out.write(f"profile written to {args.profile}\n")
    return 0


def _parse_station(text: str, cfg: CaseConfig) -> float:
    if text == "mid":
        return cfg.L / 2.0
    if text == "end":
        return cfg.L
    if text == "support":
        return 0.0
    try:
        x = float(text)
    except ValueError:
        raise ConfigError(f"--x must be mid, end, support or a coordinate, got {text!r}")
    if not (0.0 <= x <= cfg.L):
        raise ConfigError(f"--x = {x} outside the beam [0, {cfg.L}]")
    return x


def _write_profile(cfg: CaseConfig, x: float, samples: int, path: Path) -> None:
    res = evaluate_case(cfg)
    rows = thickness_profile(res.solution, cfg.material, cfg.layup, x, samples)
    q = cfg.load.magnitude
    scale = cfg.h / (q * cfg.L) if cfg.load.kind == "udl" else None
    lines = ["z_over_h,sigma_bar,tau_bar,side" if scale is not None
             else "z_over_h,sigma_x,tau_xz,side"]
    for r in rows:
        s = r.sigma_x * scale if scale is not None else r.sigma_x
        t = r.tau_xz * scale if scale is not None else r.tau_xz
        lines.append(f"{_fmt(r.z_over_h)},{_fmt(s)},{_fmt(t)},{r.side}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _cmd_profile(args) -> int:
    cfg = _load_config(args.config)
    x = _parse_station(args.x, cfg)
    out = Path(args.out) if args.out else None
    if out is None:
        res = evaluate_case(cfg)
        rows = thickness_profile(res.solution, cfg.material, cfg.layup, x, args.samples)
        q = cfg.load.magnitude
        scale = cfg.h / (q * cfg.L) if cfg.load.kind == "udl" else None
        sys.stdout.write("z_over_h,sigma_bar,tau_bar,side\n" if scale is not None
                         else "z_over_h,sigma_x,tau_xz,side\n")
        for r in rows:
            s = r.sigma_x * scale if scale is not None else r.sigma_x
            t = r.tau_xz * scale if scale is not None else r.tau_xz
            sys.stdout.write(f"{_fmt(r.z_over_h)},{_fmt(s)},{_fmt(t)},{r.side}\n")
    else:
        _write_profile(cfg, x, args.samples, out)
        sys.stdout.write(f"profile written to {out}\n")
    return 0


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"{flag} expects a comma-separated integer list, got {text!r}")


def _cmd_converge(args) -> int:
    cfg = _load_config(args.config)
    ne_list = _parse_int_list(args.ne, "--ne")
    result = convergence_study(cfg, ne_list)
    sys.stdout.write(f"ne,{result.quantity}\n")
    for row in result.rows:
        sys.stdout.write(f"{row.ne},{_fmt(row.value)}\n")
    if not result.monotone:
        sys.stdout.write("# warning: sequence is not monotone\n")
    return 0


def _cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    values = [s.strip() for s in args.values.split(",") if s.strip()]
    rows = sweep(cfg, args.param, values)
    sys.stdout.write(f"{args.param},w_bar,sigma_bar,tau_bar\n")
    for row in rows:
        r = row.results
        if r.w_bar is None:
            sys.stdout.write(f"{row.value},{_fmt(r.w)},,\n")
        else:
            sys.stdout.write(f"{row.value},{_fmt(r.w_bar)},{_fmt(r.sigma_bar)},"
                             f"{_fmt(r.tau_bar)}\n")
    return 0


def _parse_tol_overrides(items: list[str]) -> dict[str, float]:
    overrides = {}
    for item in items:
        if "=" not in item:
            raise ConfigError(f"--tol expects TABLE=VALUE, got {item!r}")
        table, _, value = item.partition("=")
        try:
            overrides[table.strip()] = float(value)
        except ValueError:
            raise ConfigError(f"--tol value must be numeric, got {item!r}")
    return overrides


def _format_bench_report(report: BenchReport) -> str:
    lines = []
    header = (f"{'table':<5} {'row':<16} {'column':<14} {'quantity':<10}"
              f" {'expected':>12} {'computed':>15} {'rel_err':>10} {'status':<7}")
    lines.append(header)
    lines.append("-" * len(header))
    by_table: dict[str, list] = {}
    for r in report.results:
        by_table.setdefault(r.cell.table, []).append(r)
    for table, results in by_table.items():
        n_pass = sum(r.passed and not r.skipped for r in results)
        n_gated = sum(not r.skipped for r in results)
        n_skip = sum(r.skipped for r in results)
        worst = max((r.rel_err for r in results if not r.skipped), default=0.0)
        skip_note = f", {n_skip} suspect cells skipped" if n_skip else ""
        lines.append(f"{table}: {n_pass}/{n_gated} within tolerance, "
                     f"worst rel err {worst:.2e}{skip_note}")
        for r in results:
            if r.skipped or not r.passed:
                status = "SKIP" if r.skipped else "FAIL"
                lines.append(
                    f"{r.cell.table:<5} {r.cell.row:<16} {r.cell.col:<14} "
                    f"{r.cell.quantity:<10} {r.cell.expected:>12g} "
                    f"{r.computed:>15.8g} {r.rel_err:>10.2e} {status:<7}")
    lines.append("")
    lines.append(f"total: {report.n_pass} pass, {report.n_fail} fail, "
                 f"{report.n_skipped} suspect cells skipped")
    if report.n_fail:
        lines.append("worst offenders:")
        for r in report.worst(5):
            lines.append(f"  {r.cell.table} {r.cell.row} {r.cell.col} "
                         f"{r.cell.quantity}: expected {r.cell.expected:g}, "
                         f"computed {r.computed:.8g}, rel err {r.rel_err:.2e}")
    return "\n".join(lines) + "\n"


def _bench_csv(report: BenchReport) -> str:
    lines = ["table,row,column,quantity,expected,computed,rel_err,tol,status"]
    for r in report.results:
        status = "skip" if r.skipped else ("pass" if r.passed else "fail")
        lines.append(f"{r.cell.table},{r.cell.row},{r.cell.col},{r.cell.quantity},"
                     f"{_fmt(r.cell.expected)},{_fmt(r.computed)},{_fmt(r.rel_err)},"
                     f"{_fmt(r.cell.tol)},{status}")
    return "\n".join(lines) + "\n"


def _cmd_bench(args) -> int:
    tables = None
    if args.table:
        tables = [t.strip() for t in args.table.split(",") if t.strip()]
    overrides = _parse_tol_overrides(args.tol or [])
    report = benchmark_compare(tables=tables, tol_overrides=overrides)
    sys.stdout.write(_format_bench_report(report))
    if args.csv:
        Path(args.csv).write_text(_bench_csv(report), encoding="utf-8")
        sys.stdout.write(f"csv report written to {args.csv}\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fgcbeam",
        description="Static bending of functionally graded sandwich straight and "
                    "curved beams (two-node shear-deformable element).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="solve one case and print the report")
    p_run.add_argument("config")
    p_run.add_argument("--profile", metavar="FILE",
                       help="also write a through-thickness stress profile CSV")
    p_run.add_argument("--profile-x", default="mid",
                       help="profile station: mid, end, support or a coordinate")
    p_run.add_argument("--profile-samples", type=int, default=201)
    p_run.set_defaults(func=_cmd_run)

    p_conv = sub.add_parser("converge", help="mesh convergence study")
    p_conv.add_argument("config")
    p_conv.add_argument("--ne", default="2,4,8,12,16,24,32",
                        help="comma-separated element counts")
    p_conv.set_defaults(func=_cmd_converge)

    p_sweep = sub.add_parser("sweep", help="sweep one parameter, emit CSV")
    p_sweep.add_argument("config")
    p_sweep.add_argument("--param", required=True,
                         choices=("p", "R_over_L", "scheme", "L_over_h"))
    p_sweep.add_argument("--values", required=True,
                         help="comma-separated values (R_over_L accepts inf)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_bench = sub.add_parser("bench", help="run the embedded benchmark gate")
    p_bench.add_argument("--table", help=f"subset, e.g. T6,T9 (available: {','.join(TABLE_IDS)})")
    p_bench.add_argument("--csv", metavar="FILE", help="write machine-readable results")
    p_bench.add_argument("--tol", action="append", metavar="TABLE=VALUE",
                         help="override a table's tolerance class")
    p_bench.set_defaults(func=_cmd_bench)

    p_prof = sub.add_parser("profile", help="through-thickness stress profile CSV")
    p_prof.add_argument("config")
    p_prof.add_argument("--x", default="mid",
                        help="station: mid, end, support or a coordinate (m)")
    p_prof.add_argument("--samples", type=int, default=201)
    p_prof.add_argument("--out", metavar="FILE", help="write to a file instead of stdout")
    p_prof.set_defaults(func=_cmd_profile)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

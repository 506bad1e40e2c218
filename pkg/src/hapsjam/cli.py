"""Command-line front end: ``hapsjam {eval,sweep-threshold,sweep-elevation,validate}``.

Exit codes: 0 success, 1 validation failure, 2 config/usage error, 3 I/O error.
"""

import argparse
import datetime
import io
import os
import sys

import numpy as np

from . import __version__, config
from .analytics import Scenario, jam_prob, jam_prob_link, sjr_cdf_curve
from .linkbudget import db_to_linear
from .montecarlo import McConfig, compare, run_cdf

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_IO = 3


class CliIOError(Exception):
    pass


def _timestamp():
    # SOURCE_DATE_EPOCH pins the manifest timestamp for reproducible files
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        moment = datetime.datetime.fromtimestamp(int(epoch), tz=datetime.timezone.utc)
    else:
        moment = datetime.datetime.now(datetime.timezone.utc)
    return moment.replace(microsecond=0).isoformat()


def manifest_lines(command, resolved, **extra):
    lines = [f"hapsjam {__version__}", f"command = {command}", f"created = {_timestamp()}"]
    lines += [f"{k} = {v}" for k, v in extra.items()]
    lines.append("[config]")
    lines += config.dump(resolved)
    lines.append("[end]")
    return ["# " + line for line in lines]


def parse_manifest(text):
    """Resolved config embedded in a CSV manifest header."""
    pairs, inside = [], False
    for line in text.splitlines():
        if not line.startswith("# "):
            break
        body = line[2:]
        if body == "[config]":
            inside = True
        elif body == "[end]":
            inside = False
        elif inside:
            pairs.append(body)
    return config.resolve(config.read_pairs("\n".join(pairs)))


def _write_csv(path, manifest, header, rows):
    buf = io.StringIO(newline="")
    for line in manifest:
        buf.write(line + "\n")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    text = buf.getvalue()
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliIOError(f"cannot write {path}: {exc.strerror}") from None


def _fmt(value):
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.10g}"
    return str(value)


def _mc_config(args, samples):
    return McConfig(samples=samples, seed=args.seed, workers=args.workers,
                    jammer_draw=args.resolved["jammer_draw"],
                    budget_mode=args.resolved["budget_mode"])


def cmd_eval(args):
    cfg = config.build_scenario(args.resolved, scenario=args.scenario, beta=args.beta,
                                thresholds_db=(args.gamma_db,))
    p = jam_prob(cfg, float(db_to_linear(args.gamma_db)))
    print(f"scenario = {cfg.scenario.value}")
    print(f"gamma_db = {args.gamma_db:g}")
    print(f"p_jam_analytic = {p:.10f}")
    if args.mc:
        emp = run_cdf(cfg, _mc_config(args, args.mc))
        print(f"p_jam_mc = {emp.cdf[0]:.10f} +/- {emp.stderr[0]:.10f} "
              f"(n = {emp.n}, seed = {emp.seed})")
    return EXIT_OK


def cmd_sweep_threshold(args):
    grid = config.parse_grid(args.grid) if args.grid else None
    cfg = config.build_scenario(args.resolved, scenario=args.scenario, beta=args.beta,
                                thresholds_db=grid)
    curve = sjr_cdf_curve(cfg)
    header = ["gamma_db", "p_jam_analytic"]
    columns = [curve.thresholds_db, curve.p_jam]
    if args.mc:
        emp = run_cdf(cfg, _mc_config(args, args.mc))
        header += ["p_jam_mc", "stderr_mc"]
        columns += [emp.cdf, emp.stderr]
    manifest = manifest_lines("sweep-threshold", args.resolved, scenario=cfg.scenario.value,
                              beta=args.beta or "config", seed=args.seed, mc=args.mc or 0)
    _write_csv(args.out, manifest, header, zip(*columns))
    return EXIT_OK


def elevation_sweep(resolved, angles, gamma_db, theta_rg_values, beta=None):
    """Rows of (theta_tg, P_sc1, P_sc2 for each theta_rg)."""
    gamma = float(db_to_linear(gamma_db))
    base = config.build_scenario(resolved, scenario=Scenario.RELAY, beta=beta,
                                 thresholds_db=(gamma_db,))
    rows = []
    for theta in angles:
        cfg = config.build_scenario(resolved, scenario=Scenario.RELAY, beta=beta,
                                    thresholds_db=(gamma_db,), tg={"elevation_deg": theta})
        p1 = jam_prob_link(cfg.tg, cfg.hg, cfg.fading, gamma)
        row = [theta, p1]
        for theta_rg in theta_rg_values:
            rg = config.build_link(resolved, "rg", elevation_deg=theta_rg,
                                   **({"beta": beta} if beta is not None else {}))
            row.append(p1 * jam_prob_link(rg, base.hg, base.fading, gamma))
        rows.append(row)
    return rows


def cmd_sweep_elevation(args):
    angles = config.parse_grid(args.grid or "5:90:5")
    if any(not 0 < a <= 90 for a in angles):
        raise config.ConfigError("--grid", "elevation angles must lie in (0, 90]")
    theta_rg = config.parse_grid(args.theta_rg or args.resolved["theta_rg_list"])
    rows = elevation_sweep(args.resolved, angles, args.gamma_db, theta_rg, beta=args.beta)
    header = ["theta_tg_deg", "p_jam_scenario1"] + [f"p_jam_scenario2_rg{t:g}" for t in theta_rg]
    manifest = manifest_lines("sweep-elevation", args.resolved, gamma_db=args.gamma_db,
                              beta=args.beta or "config")
    _write_csv(args.out, manifest, header, rows)
    return EXIT_OK


def validate_report(cfg, mc, tolerance, analytic_cfg=None):
    """(report text, passed) for an MC run against the analytic curve.

    ``analytic_cfg`` lets a caller evaluate the closed form on a different
    configuration than the simulation (used for negative controls).
    """
    analytic = sjr_cdf_curve(analytic_cfg or cfg)
    report = compare(analytic, run_cdf(cfg, mc))
    passed = report.max_abs_dev <= tolerance
    head = [
        f"scenario = {cfg.scenario.value}",
        f"seed = {mc.seed}",
        f"jammer_draw = {mc.jammer_draw.value}",
        f"budget_mode = {mc.budget_mode.value}",
        f"block_size = {mc.block_size}",
        f"tolerance = {tolerance:g}",
    ]
    verdict = "PASS" if passed else "FAIL"
    return "\n".join(head + [report.format(), f"result = {verdict}"]), passed


def cmd_validate(args):
    grid = config.parse_grid(args.grid) if args.grid else None
    cfg = config.build_scenario(args.resolved, scenario=args.scenario, beta=args.beta,
                                thresholds_db=grid)
    text, passed = validate_report(cfg, _mc_config(args, args.mc or 1_000_000), args.tolerance)
    print(text)
    return EXIT_OK if passed else EXIT_VALIDATION


def build_parser():
    parser = argparse.ArgumentParser(prog="hapsjam", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hapsjam {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="flat key = value file (defaults if omitted)")
        p.add_argument("--scenario", choices=["1", "2"], help="override the config scenario")
        p.add_argument("--beta", help="environment preset name or beta value for every link")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("eval", help="jamming probability at one threshold")
    common(p)
    p.add_argument("--gamma-db", type=float, required=True)
    p.add_argument("--mc", type=int, default=0, metavar="N", help="add an N-sample MC estimate")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep-threshold", help="CSV of P_jam over a dB threshold grid")
    common(p)
    p.add_argument("--grid", help="start:stop:step in dB (default from config)")
    p.add_argument("--mc", type=int, default=0, metavar="N")
    p.add_argument("--out", help="output CSV path (stdout if omitted)")
    p.set_defaults(func=cmd_sweep_threshold)

    p = sub.add_parser("sweep-elevation", help="CSV of P_jam over the TG elevation")
    common(p)
    p.add_argument("--grid", help="start:stop:step in degrees (default 5:90:5)")
    p.add_argument("--gamma-db", type=float, default=10.0)
    p.add_argument("--theta-rg", help="comma list of RG elevations (default from config)")
    p.add_argument("--out", help="output CSV path (stdout if omitted)")
    p.set_defaults(func=cmd_sweep_elevation)

    p = sub.add_parser("validate", help="Monte Carlo check of the analytic curve")
    common(p)
    p.add_argument("--grid", help="start:stop:step in dB (default from config)")
    p.add_argument("--mc", "--samples", type=int, default=1_000_000, dest="mc", metavar="N")
    p.add_argument("--tolerance", type=float, default=0.015)
    p.set_defaults(func=cmd_validate)
    return parser


_VALUE_FLAGS = ("--grid", "--theta-rg")


def _join_negative_values(argv):
    # argparse reads "-20:40:1" as an option; glue such values to their flag
    out, i = [], 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_negative_values(argv))
    try:
        args.resolved = config.load(args.config) if args.config else config.resolve({})
        if args.beta is not None:
            try:
                config._normalise_beta(args.beta)
            except ValueError as exc:
                raise config.ConfigError("--beta", str(exc)) from None
        return args.func(args)
    except config.ConfigError as exc:
        print(f"hapsjam: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CliIOError as exc:
        print(f"hapsjam: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"hapsjam: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

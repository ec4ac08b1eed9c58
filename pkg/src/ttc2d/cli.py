"""Command-line surface: simulate scenarios, compute measures, validate.

Every flag can also be supplied through a ``TTC2D_``-prefixed environment
variable (e.g. ``TTC2D_TRIALS=500``); an explicit flag wins. Exit codes:
0 success, 2 I/O or configuration problem, 3 invalid measure/trajectory
pairing, 4 validation tolerance breach.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import evaluate, scenario, validation
from .articulated import SolverConfig

EXIT_OK = 0
EXIT_IO = 2
EXIT_BAD_SELECTION = 3
EXIT_VALIDATION = 4


def _env_default(name: str, fallback=None):
    return os.environ.get(f"TTC2D_{name.upper()}", fallback)


def _add_simulate(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("simulate", help="run a cut-in scenario and write the trajectory CSV")
    p.add_argument("--scenario", default=_env_default("scenario"),
                   help="scenario INI file (default: packaged calibrated cut-in)")
    p.add_argument("--out", default=_env_default("out", "trajectory.csv"),
                   help="output trajectory CSV path")
    p.add_argument("--dt", type=float, default=_env_default("dt"),
                   help="override simulation timestep")
    p.add_argument("--duration", type=float, default=_env_default("duration"),
                   help="override simulation duration")
    p.set_defaults(func=cmd_simulate)


def _add_compute(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("compute", help="evaluate TTC measures over a trajectory CSV")
    p.add_argument("--trajectory", default=_env_default("trajectory"), required=_env_default("trajectory") is None,
                   help="input trajectory CSV")
    p.add_argument("--measures", default=_env_default("measures", "CONV,GUO2D,V2,V3"),
                   help="comma-separated subset of CONV,GUO2D,V1,V2,V3")
    p.add_argument("--out", default=_env_default("out", "measures.csv"),
                   help="output CSV path")
    p.add_argument("--truncate", nargs="?", type=float, const=5.0,
                   default=_env_default("truncate"),
                   help="clamp emitted finite values (default 5 s when given bare)")
    p.add_argument("--stride", type=int, default=int(_env_default("stride", 1)),
                   help="evaluate every N-th sample")
    p.add_argument("--precision", choices=("default", "full"),
                   default=_env_default("precision", "default"),
                   help="numeric output precision")
    p.set_defaults(func=cmd_compute)


def _add_validate(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("validate", help="compare a measure against the brute-force oracle")
    p.add_argument("--version", dest="version", default=_env_default("version", "v2"),
                   choices=("v1", "v2", "v3", "guo"), help="measure under test")
    p.add_argument("--trials", type=int, default=int(_env_default("trials", 500)))
    p.add_argument("--seed", type=int, default=int(_env_default("seed", 0)))
    p.add_argument("--dt", type=float, default=_env_default("dt"),
                   help="discretization budget of the comparison")
    p.set_defaults(func=cmd_validate)


def cmd_simulate(args) -> int:
    try:
        if args.scenario:
            cfg = scenario.load_config(args.scenario)
        else:
            cfg = scenario.default_config()
        overrides = {}
        if args.dt is not None:
            overrides["dt"] = float(args.dt)
        if args.duration is not None:
            overrides["duration"] = float(args.duration)
        if overrides:
            from dataclasses import replace

            cfg = replace(cfg, **overrides)
        traj = scenario.generate_cutin(cfg)
        scenario.save_trajectory(traj, args.out)
    except (OSError, scenario.ScenarioError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    contact = scenario.first_contact(traj)
    print(f"trajectory: {len(traj)} samples at dt={traj.dt:.6g} s -> {args.out}")
    if contact is None:
        print("contact: none within the simulated duration")
    else:
        print(
            f"contact: {contact.kind} at t={contact.time:.6g} s "
            f"({contact.unit.value} vs car)"
        )
    return EXIT_OK


def _format(value: float, precision: str) -> str:
    if math.isinf(value):
        return "inf"
    if precision == "full":
        return repr(float(value))
    return f"{value:.6g}"


def cmd_compute(args) -> int:
    try:
        traj = scenario.load_trajectory(args.trajectory)
    except (OSError, scenario.ScenarioError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        selection = evaluate.normalize_selection(args.measures.split(","))
        if "V1" in selection:
            raise evaluate.MeasureSelectionError(
                "V1 is defined for rigid vehicle pairs only and cannot run on an "
                "articulated trajectory"
            )
    except evaluate.MeasureSelectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_SELECTION

    truncate = float(args.truncate) if args.truncate is not None else None
    stride = max(1, args.stride)
    indices = range(0, len(traj), stride)
    cfg = SolverConfig()
    below_threshold = {m: 0 for m in selection}
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("t,measure,ttc,direction,unit\n")
            for m in selection:
                for i in indices:
                    out = evaluate.measure_at(traj, i, m, cfg)
                    value = out.time
                    if out.collides and value < 1.5:
                        below_threshold[m] += 1
                    if truncate is not None and out.collides:
                        value = min(value, truncate)
                    fh.write(
                        f"{_format(traj.t[i], args.precision)},{m},"
                        f"{_format(value, args.precision)},"
                        f"{out.direction.value},{out.unit.value}\n"
                    )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for m in selection:
        print(f"{m}: {below_threshold[m]} samples below 1.5 s")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return EXIT_IO
    dt = float(args.dt) if args.dt is not None else None
    report = validation.run_validation(args.version, args.trials, args.seed, dt=dt)
    print(report.summary())
    if not report.passed:
        if report.worst_case is not None:
            print("worst configuration for reproduction:", file=sys.stderr)
            print(repr(report.worst_case), file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ttc2d",
        description="Two-dimensional time-to-collision measures for articulated vehicles",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_simulate(sub)
    _add_compute(sub)
    _add_validate(sub)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

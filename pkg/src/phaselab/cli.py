"""Command-line front end: run, breakdown, sweep, readout.

Standard output carries short human summaries, except ``breakdown`` whose
contract is a single JSON object on stdout; machine-readable series go to
files named with ``--out``, never mixed with summaries. Numbers are
serialized with shortest round-trip precision (17 significant digits when
needed), so identical invocations produce byte-identical files. Undefined
phases appear as the literal ``nan`` in CSV and ``null`` in JSON. Angles
are radians throughout.

Exit codes: 0 success, 1 usage, 2 parse/validation, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .errors import NotCyclic, ParseError, PhaseLabError, ValidationError
from .phases import (
    DEFAULT_SAMPLES,
    phase_breakdown,
    phase_samples,
    readout_probability,
)
from .qstate import schmidt_state
from .schedule import RotationSchedule, RotationSegment, parse_schedule

RUN_FIELDS = [
    "t",
    "sp_re",
    "sp_im",
    "phase_total_principal",
    "phase_total_unwrapped",
    "phase_dyn",
    "bloch_x",
    "bloch_y",
    "bloch_z",
    "so3_ax",
    "so3_ay",
    "so3_az",
    "so3_angle",
    "crossing_flag",
]

SWEEP_FIELDS = [
    "lambda0",
    "theta",
    "phi_total",
    "phi_dyn",
    "phi_geo",
    "crossings",
    "closure_residual",
]

_AXES = {"x": (1.0, 0.0, 0.0), "y": (0.0, 1.0, 0.0), "z": (0.0, 0.0, 1.0)}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise _UsageError(message)


def _cell(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


def _write_csv(path, fields, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(fields) + "\n")
        for row in rows:
            fh.write(",".join(_cell(x) for x in row) + "\n")


def _json_value(x):
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    return None if math.isnan(x) else x


def _write_json_rows(path, fields, rows):
    payload = [dict(zip(fields, (_json_value(x) for x in row))) for row in rows]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def _load(path) -> RotationSchedule:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_schedule(fh.read())


def _cmd_run(args) -> int:
    sched = _load(args.schedule_file)
    samples, flags, crossings = phase_samples(sched.initial, sched, args.steps)
    final = samples[-1]
    if abs(abs(final.sp) - 1.0) > 1e-6:
        print(
            "warning: schedule is not cyclic (final overlap magnitude "
            f"{abs(final.sp):.9f})",
            file=sys.stderr,
        )
    if args.out:
        rows = [
            [
                s.time,
                s.sp.real,
                s.sp.imag,
                s.total_principal,
                s.total_unwrapped,
                s.dyn,
                s.bloch[0],
                s.bloch[1],
                s.bloch[2],
                s.so3.axis[0],
                s.so3.axis[1],
                s.so3.axis[2],
                s.so3.angle,
                flag,
            ]
            for s, flag in zip(samples, flags)
        ]
        if args.format == "csv":
            _write_csv(args.out, RUN_FIELDS, rows)
        else:
            _write_json_rows(args.out, RUN_FIELDS, rows)
    parity = "odd" if len(crossings) % 2 else "even"
    print(f"final total phase: {_cell(final.total_principal)}")
    print(f"crossings: {len(crossings)} ({parity})")
    return 0


def _cmd_breakdown(args) -> int:
    sched = _load(args.schedule_file)
    b = phase_breakdown(sched.initial, sched, args.steps)
    payload = {
        "total": b.total,
        "dynamical": b.dynamical,
        "geometric": b.geometric,
        "crossings": b.crossings,
        "parity": b.parity,
        "degenerate": b.degenerate,
        "closure_residual": _json_value(b.closure_residual),
    }
    print(json.dumps(payload))
    return 0


def _parse_range(spec: str, name: str) -> np.ndarray:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValidationError(f"malformed {name} range {spec!r}; expected a:b:n")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValidationError(
            f"malformed {name} range {spec!r}; expected a:b:n"
        ) from None
    if n < 1:
        raise ValidationError(f"{name} range count must be >= 1")
    return np.linspace(a, b, n)


def _cmd_sweep(args) -> int:
    lams = _parse_range(args.lambda0, "lambda0")
    thetas = _parse_range(args.theta, "theta")
    if np.any((lams < 0.0) | (lams > 1.0)):
        raise ValidationError("lambda0 range must stay within [0, 1]")
    if args.turns < 1:
        raise ValidationError("turns must be >= 1")
    axis = np.array(_AXES[args.axis])
    duration = 2.0 * math.pi * args.turns
    rows = []
    for lam in lams:  # lambda0-major grid order
        for th in thetas:
            state = schmidt_state(float(lam), float(th))
            sched = RotationSchedule(
                (RotationSegment(axis.copy(), duration),), 1, state
            )
            b = phase_breakdown(state, sched, args.steps)
            rows.append(
                [
                    float(lam),
                    float(th),
                    b.total,
                    b.dynamical,
                    b.geometric,
                    b.crossings,
                    b.closure_residual,
                ]
            )
    _write_csv(args.out, SWEEP_FIELDS, rows)
    print(f"wrote {len(rows)} grid points to {args.out}")
    return 0


def _cmd_readout(args) -> int:
    sched = _load(args.schedule_file)
    p = readout_probability(sched.initial, sched)
    print(f"click probability: {_cell(p)}")
    print(f"|cos(total phase)|: {_cell(abs(1.0 - 2.0 * p))}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="phaselab",
        description="Run two-qubit rotation schedules and decompose the "
        "acquired global phase.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="emit the phase/geometry time series")
    run.add_argument("schedule_file")
    run.add_argument("--steps", type=int, default=DEFAULT_SAMPLES,
                     help="samples per segment (default 2000)")
    run.add_argument("--out", help="write the series to this file")
    run.add_argument("--format", choices=("csv", "json"), default="csv")
    run.set_defaults(func=_cmd_run)

    br = sub.add_parser("breakdown", help="print the phase decomposition as JSON")
    br.add_argument("schedule_file")
    br.add_argument("--steps", type=int, default=DEFAULT_SAMPLES)
    br.set_defaults(func=_cmd_breakdown)

    sw = sub.add_parser("sweep", help="fixed-axis grid sweep over (lambda0, theta)")
    sw.add_argument("--lambda0", required=True, metavar="A:B:N")
    sw.add_argument("--theta", required=True, metavar="A:B:M")
    sw.add_argument("--axis", choices=("x", "y", "z"), default="z")
    sw.add_argument("--turns", type=int, default=1)
    sw.add_argument("--steps", type=int, default=DEFAULT_SAMPLES)
    sw.add_argument("--out", required=True)
    sw.set_defaults(func=_cmd_sweep)

    rd = sub.add_parser("readout", help="interferometric click probability")
    rd.add_argument("schedule_file")
    rd.set_defaults(func=_cmd_readout)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotCyclic as exc:
        print(f"error: not cyclic: {exc}", file=sys.stderr)
        return 3
    except PhaseLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

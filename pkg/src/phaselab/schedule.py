"""Rotation schedules: ordered fixed-axis segments acting on one qubit.

Includes the two builtin four-segment trajectory tables, a line-oriented
schedule file format, and exact cumulative-unitary sampling (segment
boundaries never accumulate sampling drift).

File format (one directive per line, ``#`` starts a comment, keywords are
case sensitive)::

    phaselab-schedule v1
    state schmidt <lambda0> <theta>
    state amplitudes <re im re im re im re im>
    evolve-qubit <1|2>
    segment <nx> <ny> <nz> <duration>
    builtin <plus|minus>

Numbers are decimal with optional scientific notation. ``segment`` axes
are normalized by the parser; an axis shorter than 1e-3 is rejected.
Durations are rotation angles in radians and must be positive. The
``evolve-qubit`` directive defaults to qubit 1 when omitted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParseError, ValidationError, ZeroNorm
from .qstate import evolution_operator, make_two_qubit, pauli_dot, schmidt_state

__all__ = [
    "HEADER",
    "RotationSegment",
    "RotationSchedule",
    "builtin_plus",
    "builtin_minus",
    "parse_schedule",
    "serialize_schedule",
    "cumulative_unitaries",
    "unitary_at",
    "total_duration",
]

HEADER = "phaselab-schedule v1"

_BUILTIN_STEP = 2.0 * math.pi / 3.0
_DIAG = math.sqrt(1.0 / 3.0)
_PLUS_TABLE = ((-1, -1, -1), (1, -1, -1), (-1, -1, 1), (-1, 1, 1))
_MINUS_TABLE = ((-1, -1, -1), (1, -1, -1), (-1, -1, -1), (1, -1, -1))


@dataclass(frozen=True, eq=False)
class RotationSegment:
    """One fixed-axis rotation: unit axis, duration = rotation angle > 0."""

    axis: np.ndarray
    duration: float


@dataclass(frozen=True, eq=False)
class RotationSchedule:
    """Ordered segments acting on one designated qubit of an initial state.

    A schedule owns its initial state, so a schedule file is a complete,
    reproducible experiment description. Immutable after construction.
    """

    segments: tuple
    evolved_qubit: int
    initial: np.ndarray


def builtin_plus() -> list[RotationSegment]:
    """Four-segment table whose closed loop stays in the trivial homotopy
    class (touches the ball border without crossing it)."""
    return [
        RotationSegment(_DIAG * np.array(a, dtype=float), _BUILTIN_STEP)
        for a in _PLUS_TABLE
    ]


def builtin_minus() -> list[RotationSegment]:
    """Four-segment table whose closed loop crosses the ball border once,
    picking up the extra half-turn of the double cover."""
    return [
        RotationSegment(_DIAG * np.array(a, dtype=float), _BUILTIN_STEP)
        for a in _MINUS_TABLE
    ]


def _float(token: str, lineno: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(lineno, f"not a number: {token!r}") from None


def _parse_state(fields, lineno):
    if len(fields) < 2:
        raise ParseError(lineno, "state needs a kind: 'schmidt' or 'amplitudes'")
    kind = fields[1]
    if kind == "schmidt":
        if len(fields) != 4:
            raise ParseError(lineno, "state schmidt takes <lambda0> <theta>")
        lam = _float(fields[2], lineno)
        theta = _float(fields[3], lineno)
        if not 0.0 <= lam <= 1.0:
            raise ValidationError("lambda0 must lie in [0, 1]", line=lineno)
        return schmidt_state(lam, theta)
    if kind == "amplitudes":
        if len(fields) != 10:
            raise ParseError(lineno, "state amplitudes takes 8 numbers (re im, four times)")
        vals = [_float(tok, lineno) for tok in fields[2:]]
        amps = [complex(vals[i], vals[i + 1]) for i in range(0, 8, 2)]
        try:
            return make_two_qubit(*amps)
        except ZeroNorm as exc:
            raise ValidationError(str(exc), line=lineno) from None
    raise ParseError(lineno, f"unknown state kind {kind!r}")


def _parse_segment(fields, lineno) -> RotationSegment:
    if len(fields) != 5:
        raise ParseError(lineno, "segment takes <nx> <ny> <nz> <duration>")
    nx, ny, nz, dur = (_float(tok, lineno) for tok in fields[1:])
    axis = np.array([nx, ny, nz], dtype=float)
    norm = float(np.linalg.norm(axis))
    if norm < 1e-3:
        raise ValidationError("axis too short to normalize", line=lineno)
    if abs(norm - 1.0) > 1e-12:
        axis = axis / norm
    if not dur > 0.0:
        raise ValidationError("duration must be positive", line=lineno)
    return RotationSegment(axis, float(dur))


def parse_schedule(text: str) -> RotationSchedule:
    """Parse schedule text into a validated RotationSchedule.

    ParseError (carrying the line number) flags malformed syntax;
    ValidationError flags semantic problems: axis too short to normalize,
    lambda0 outside [0, 1], non-positive duration, missing or duplicate
    state declaration.
    """
    initial = None
    qubit = 1
    segments: list[RotationSegment] = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line != HEADER:
                raise ParseError(lineno, f"expected {HEADER!r} header")
            header_seen = True
            continue
        fields = line.split()
        key = fields[0]
        if key == "state":
            if initial is not None:
                raise ValidationError("duplicate state declaration", line=lineno)
            initial = _parse_state(fields, lineno)
        elif key == "evolve-qubit":
            if len(fields) != 2:
                raise ParseError(lineno, "evolve-qubit takes exactly one argument")
            if fields[1] not in ("1", "2"):
                raise ValidationError("evolved qubit must be 1 or 2", line=lineno)
            qubit = int(fields[1])
        elif key == "segment":
            segments.append(_parse_segment(fields, lineno))
        elif key == "builtin":
            if len(fields) != 2 or fields[1] not in ("plus", "minus"):
                raise ParseError(lineno, "builtin takes 'plus' or 'minus'")
            segments.extend(builtin_plus() if fields[1] == "plus" else builtin_minus())
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if not header_seen:
        raise ParseError(1, f"empty schedule; expected {HEADER!r} header")
    if initial is None:
        raise ValidationError("missing state declaration")
    return RotationSchedule(tuple(segments), qubit, initial)


def serialize_schedule(schedule: RotationSchedule) -> str:
    """Canonical text form; ``parse_schedule(serialize_schedule(s))``
    reproduces ``s`` bitwise (floats use shortest round-trip notation)."""
    lines = [HEADER]
    amps = " ".join(
        repr(float(part)) for a in schedule.initial for part in (a.real, a.imag)
    )
    lines.append(f"state amplitudes {amps}")
    lines.append(f"evolve-qubit {schedule.evolved_qubit}")
    for seg in schedule.segments:
        axis = " ".join(repr(float(c)) for c in seg.axis)
        lines.append(f"segment {axis} {seg.duration!r}")
    return "\n".join(lines) + "\n"


def total_duration(schedule: RotationSchedule) -> float:
    return float(sum(seg.duration for seg in schedule.segments))


def _boundaries(schedule: RotationSchedule):
    """Cumulative end times and exact boundary products B_k, k = 0..n."""
    times = [0.0]
    prods = [np.eye(2, dtype=complex)]
    for seg in schedule.segments:
        times.append(times[-1] + seg.duration)
        prods.append(evolution_operator(seg.axis, seg.duration) @ prods[-1])
    return times, prods


def _unitary_samples(schedule: RotationSchedule, samples_per_segment: int):
    """Sampled times (M,), cumulative unitaries (M, 2, 2) and the segment
    axis active in each of the M-1 sample intervals.

    Each segment contributes ``samples_per_segment - 1`` new samples; its
    last one is the exact boundary product, independent of the sampling
    density.
    """
    if samples_per_segment < 2:
        raise DomainError("samples_per_segment must be >= 2")
    bt, bp = _boundaries(schedule)
    times = [0.0]
    units = [bp[0]]
    axes = []
    eye = np.eye(2, dtype=complex)
    for k, seg in enumerate(schedule.segments):
        delta = seg.duration / (samples_per_segment - 1)
        offs = delta * np.arange(1, samples_per_segment)
        half = 0.5 * offs
        c = np.cos(half)
        s = np.sin(half)
        nsig = pauli_dot(seg.axis)
        block = (c[:, None, None] * eye - 1j * s[:, None, None] * nsig) @ bp[k]
        block[-1] = bp[k + 1]
        ts = (bt[k] + offs).tolist()
        ts[-1] = bt[k + 1]
        times.extend(ts)
        units.extend(block)
        axes.extend([seg.axis] * (samples_per_segment - 1))
    axes_arr = np.array(axes) if axes else np.zeros((0, 3))
    return np.array(times), np.array(units), axes_arr


def cumulative_unitaries(schedule: RotationSchedule, samples_per_segment: int):
    """Strictly increasing ``(time, cumulative unitary)`` samples from 0 to
    the total duration, with exact products at segment boundaries."""
    times, units, _ = _unitary_samples(schedule, samples_per_segment)
    return [(float(t), u) for t, u in zip(times, units)]


def unitary_at(schedule: RotationSchedule, t: float) -> np.ndarray:
    """Cumulative unitary at an arbitrary time along the schedule."""
    bt, bp = _boundaries(schedule)
    if t <= 0.0:
        return bp[0]
    if t >= bt[-1]:
        return bp[-1]
    k = int(np.searchsorted(np.asarray(bt), t, side="right")) - 1
    seg = schedule.segments[k]
    return evolution_operator(seg.axis, t - bt[k]) @ bp[k]

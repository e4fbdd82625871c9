"""Phase decomposition along rotation schedules.

A single sign convention is used throughout: the dynamical phase is
``-integral <H> dt`` with ``H = (axis . sigma)/2`` acting on the evolved
qubit. Overlap phases are principal values in (-pi, pi]. Phases at
orthogonality (overlap magnitude <= 1e-9) are NaN, a first-class value
rather than an exception: time series must be able to represent the
discontinuities where the evolving state becomes orthogonal to the
initial one.

Textbook-orientation closed forms for one full turn about a fixed axis
are provided by :func:`fixed_axis_closed_forms`; they carry the opposite
overall sign to this engine's convention, and all identities between the
two hold modulo 2 pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrum, DomainError, NotCyclic, OrthogonalStep
from .geometry import (
    SO3Point,
    ball_radius,
    bloch_of_density,
    bloch_of_pure,
    purify,
    su2_to_so3,
    transversal_zero_times,
)
from .qstate import apply_local, evolution_operator, inner_product, reduced_density
from .schedule import RotationSchedule, _unitary_samples, total_duration, unitary_at

__all__ = [
    "ORTHOGONALITY_EPS",
    "CROSSING_EPS",
    "DEFAULT_SAMPLES",
    "DYNAMICAL_SIGN",
    "principal",
    "PhaseSample",
    "PhaseBreakdown",
    "total_phase",
    "mixed_total_phase",
    "sp_formula",
    "dynamical_phase",
    "geometric_phase_pure",
    "geometric_phase_mixed",
    "topological_crossings",
    "phase_breakdown",
    "fixed_axis_closed_forms",
    "readout_probability",
    "overlap_at",
    "phase_samples",
]

ORTHOGONALITY_EPS = 1e-9
CROSSING_EPS = 1e-6
DEFAULT_SAMPLES = 2000

#: The one dynamical-phase convention used everywhere: phi_d = -int <H> dt.
DYNAMICAL_SIGN = -1.0

_TWO_PI = 2.0 * math.pi


def principal(x: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    r = math.remainder(x, _TWO_PI)
    return r + _TWO_PI if r <= -math.pi else r


def _arg(z: complex) -> float:
    p = cmath.phase(z)
    return p + _TWO_PI if p <= -math.pi else p


def _mod2pi_distance(x: float) -> float:
    return abs(principal(x))


@dataclass(frozen=True)
class PhaseSample:
    """One time sample of a run: overlap, phases, Bloch and ball tracks.

    ``total_principal`` and ``total_unwrapped`` are NaN exactly when the
    overlap magnitude is at or below the orthogonality threshold.
    """

    time: float
    sp: complex
    total_principal: float
    total_unwrapped: float
    dyn: float
    bloch: np.ndarray
    so3: SO3Point


@dataclass(frozen=True)
class PhaseBreakdown:
    """Phase decomposition of one cyclic run; angles in (-pi, pi] radians.

    ``closure_residual`` is the mod-2pi distance of
    ``total - dynamical - geometric`` from zero. For degenerate runs
    (maximally entangled input, where the geometric phase is reported as
    the flagged value 0) it is NaN.
    """

    total: float
    dynamical: float
    geometric: float
    crossings: int
    parity: str
    degenerate: bool
    closure_residual: float


def total_phase(initial, current) -> float:
    """``arg <initial|current>`` in (-pi, pi]; NaN when the overlap
    magnitude is at or below 1e-9 (orthogonal states)."""
    ip = inner_product(initial, current)
    if abs(ip) <= ORTHOGONALITY_EPS:
        return math.nan
    return _arg(ip)


def mixed_total_phase(u, rho) -> float:
    """``arg Tr(u rho)``; NaN when ``|Tr(u rho)| <= 1e-9``."""
    z = complex(np.trace(np.asarray(u, dtype=complex) @ np.asarray(rho, dtype=complex)))
    if abs(z) <= ORTHOGONALITY_EPS:
        return math.nan
    return _arg(z)


def sp_formula(t: float, axis, bloch) -> complex:
    """Closed-form overlap ``cos(t/2) - i (axis . bloch) sin(t/2)``.

    Valid for a single segment started from the reference state, with
    ``bloch`` the evolved qubit's reduced Bloch vector at the segment
    start; it then equals ``<psi(0)|psi(t)>`` exactly.
    """
    n = np.asarray(axis, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > 1e-9:
        raise DomainError("axis must be a unit 3-vector")
    nb = float(np.dot(n, np.asarray(bloch, dtype=float)))
    return complex(math.cos(t / 2.0), -nb * math.sin(t / 2.0))


def dynamical_phase(s0, schedule: RotationSchedule) -> float:
    """``-sum_k <H_k> dt_k``, exact per segment.

    Each segment's generator commutes with its own evolution, so its
    expectation is constant within the segment and the integral reduces
    to ``-(1/2) (axis . bloch at segment start) * duration`` per segment.
    """
    psi = np.asarray(s0, dtype=complex)
    q = schedule.evolved_qubit
    acc = 0.0
    for seg in schedule.segments:
        b = bloch_of_density(reduced_density(psi, q))
        acc += DYNAMICAL_SIGN * 0.5 * float(np.dot(seg.axis, b)) * seg.duration
        psi = apply_local(evolution_operator(seg.axis, seg.duration), q, psi)
    return acc


def _leg_args(path: np.ndarray, closed: bool) -> np.ndarray:
    """Principal args of consecutive overlaps along a path of unit kets."""
    legs = np.einsum("kj,kj->k", path[:-1].conj(), path[1:])
    if closed:
        legs = np.append(legs, np.vdot(path[-1], path[0]))
    if np.any(np.abs(legs) <= ORTHOGONALITY_EPS):
        raise OrthogonalStep("consecutive path states are orthogonal")
    return np.angle(legs)


def geometric_phase_pure(path, closed: bool = True) -> float:
    """Discrete overlap-product phase of a pure-state path,
    ``-arg[<p0|p1><p1|p2> ... ]``, with the closing leg appended when
    ``closed``; reported in (-pi, pi].

    Gauge invariant by construction (per-state phase factors cancel
    between adjacent legs) and converges to minus half the enclosed
    signed solid angle as the mesh refines. Raises OrthogonalStep when
    consecutive states are orthogonal.
    """
    arr = np.asarray(path, dtype=complex)
    if arr.ndim != 2 or len(arr) < 3:
        raise DomainError("path must contain at least 3 states")
    return principal(-float(np.sum(_leg_args(arr, closed))))


def geometric_phase_mixed(
    s0, schedule: RotationSchedule, samples_per_segment: int = DEFAULT_SAMPLES
) -> float:
    """Weighted sum of the two purified eigenstate geometric phases along
    the schedule, reported in (-pi, pi].

    The eigenstates of the evolved qubit's initial reduced density matrix
    are transported by the cumulative unitaries and each one's
    overlap-product phase is computed. A bare overlap product is only
    defined mod 2pi, which is not enough for a weighted sum, so each
    eigenstate's phase is branch-aligned to equal that state's total
    phase minus its dynamical phase as a real number; the branch integer
    never affects the reported value mod 2pi but makes the weighting well
    defined. Raises DegenerateSpectrum for a maximally entangled input
    (no eigenvalue gap).
    """
    psi = np.asarray(s0, dtype=complex)
    pur = purify(reduced_density(psi, schedule.evolved_qubit))
    if not schedule.segments:
        return 0.0
    _, units, _ = _unitary_samples(schedule, samples_per_segment)
    starts = [k * (samples_per_segment - 1) for k in range(len(schedule.segments))]
    weighted = 0.0
    for weight, vec in ((pur.weight_m, pur.state_m), (pur.weight_n, pur.state_n)):
        path = units @ vec
        barg = -float(np.sum(_leg_args(path, closed=True)))
        dyn = 0.0
        for k, seg in enumerate(schedule.segments):
            b = bloch_of_pure(path[starts[k]])
            dyn += DYNAMICAL_SIGN * 0.5 * float(np.dot(seg.axis, b)) * seg.duration
        tot = _arg(complex(np.vdot(vec, path[-1])))
        branch = barg + _TWO_PI * round((tot - dyn - barg) / _TWO_PI)
        weighted += weight * branch
    return principal(weighted)


def overlap_at(s0, schedule: RotationSchedule, t: float) -> complex:
    """``<s0| U(t) |s0>`` (the unitary acting on the evolved qubit) at an
    arbitrary schedule time, evaluated as ``Tr[U(t) rho_evolved]``."""
    rho = reduced_density(np.asarray(s0, dtype=complex), schedule.evolved_qubit)
    return complex(np.trace(unitary_at(schedule, t) @ rho))


def _overlap_series(s0, schedule, samples_per_segment):
    psi = np.asarray(s0, dtype=complex)
    rho = reduced_density(psi, schedule.evolved_qubit)
    times, units, axes = _unitary_samples(schedule, samples_per_segment)
    sps = np.einsum("kij,ji->k", units, rho)
    return times, sps, units, axes, rho


def _ternary_min(f, a, b, tol=1e-10):
    while (b - a) > tol:
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        if f(m1) <= f(m2):
            b = m2
        else:
            a = m1
    return 0.5 * (a + b)


def _crossing_times(s0, schedule, samples_per_segment):
    """Times where the initial-state overlap passes through zero.

    For (numerically) maximally entangled input the overlap equals half
    the cumulative unitary's trace, a real quantity, and zeros are
    ordinary transversal sign changes. Otherwise zeros are isolated dips
    of ``|overlap|``: dip candidates are refined by ternary search on the
    squared magnitude and counted when the refined minimum is below 1e-6
    with a principal-phase jump of about pi across it. The overlap slope
    is bounded by 1/2, so a zero can hide at most dt/4 deep between
    samples; the candidate threshold is widened to the sample spacing.
    """
    psi = np.asarray(s0, dtype=complex)
    times, sps, _, _, _ = _overlap_series(psi, schedule, samples_per_segment)
    if ball_radius(psi) <= CROSSING_EPS:
        return transversal_zero_times(
            times.tolist(),
            sps.real.tolist(),
            lambda t: overlap_at(psi, schedule, t).real,
        )
    mags = np.abs(sps)
    candidate_eps = 1e-3
    if len(times) > 1:
        candidate_eps = max(candidate_eps, float(np.max(np.diff(times))))
    mag2 = lambda t: abs(overlap_at(psi, schedule, t)) ** 2
    found = []
    for i in range(1, len(mags) - 1):
        if mags[i] > candidate_eps:
            continue
        if not (mags[i] <= mags[i - 1] and mags[i] < mags[i + 1]):
            continue
        t_min = _ternary_min(mag2, times[i - 1], times[i + 1])
        if math.sqrt(mag2(t_min)) > CROSSING_EPS:
            continue
        dt = times[i] - times[i - 1]
        p_lo = _arg(overlap_at(psi, schedule, max(times[0], t_min - dt)))
        p_hi = _arg(overlap_at(psi, schedule, min(times[-1], t_min + dt)))
        if abs(_mod2pi_distance(p_hi - p_lo) - math.pi) < 1.0:
            if not found or t_min - found[-1] > 1e-8:
                found.append(t_min)
    return found


def topological_crossings(
    s0, schedule: RotationSchedule, samples_per_segment: int = DEFAULT_SAMPLES
) -> tuple[int, str]:
    """Count of transversal zeros of ``<psi(0)|psi(t)>`` along the path and
    its parity, ``"even"`` or ``"odd"``."""
    count = len(_crossing_times(s0, schedule, samples_per_segment))
    return count, ("odd" if count % 2 else "even")


def phase_breakdown(
    s0, schedule: RotationSchedule, samples_per_segment: int = DEFAULT_SAMPLES
) -> PhaseBreakdown:
    """Assemble total, dynamical, geometric phases and crossing data for a
    cyclic schedule.

    Raises NotCyclic when the evolution does not return the initial ray
    (final overlap magnitude differs from 1 by more than 1e-6). For a
    maximally entangled input the geometric phase is reported as 0 with
    ``degenerate=True`` and a NaN closure residual.
    """
    psi = np.asarray(s0, dtype=complex)
    v = overlap_at(psi, schedule, total_duration(schedule))
    if abs(abs(v) - 1.0) > 1e-6:
        raise NotCyclic(f"final overlap magnitude {abs(v):.9f} differs from 1 beyond 1e-6")
    total = _arg(v)
    dyn = dynamical_phase(psi, schedule)
    try:
        geo = geometric_phase_mixed(psi, schedule, samples_per_segment)
        degenerate = False
        residual = _mod2pi_distance(total - dyn - geo)
    except DegenerateSpectrum:
        geo = 0.0
        degenerate = True
        residual = math.nan
    count, parity = topological_crossings(psi, schedule, samples_per_segment)
    return PhaseBreakdown(total, dyn, geo, count, parity, degenerate, residual)


def fixed_axis_closed_forms(lambda0: float, theta: float) -> tuple[float, float, float]:
    """Closed-form ``(phi_d, phi_g, phi_t)`` for one full turn about a
    fixed axis at parameters ``(lambda0, theta)``:

        phi_d = pi (2 lambda0 - 1) cos(theta)
        phi_g = pi + pi (1 - 2 lambda0) cos(theta)
        phi_t = pi

    These use the opposite overall sign convention to this engine, so the
    numerically computed dynamical phase equals ``-phi_d`` exactly and the
    computed geometric phase equals ``-phi_g`` modulo 2 pi.
    """
    if not 0.0 <= lambda0 <= 1.0:
        raise DomainError("lambda0 must lie in [0, 1]")
    k = (2.0 * lambda0 - 1.0) * math.cos(theta)
    return math.pi * k, math.pi - math.pi * k, math.pi


def readout_probability(s0, schedule: RotationSchedule) -> float:
    """Ancilla click probability of the conditional-rotation interferometer,
    ``(1 - Re <s0|U_total|s0>) / 2`` (equal to ``||(U - I)|s0>||^2 / 4``)."""
    v = overlap_at(np.asarray(s0, dtype=complex), schedule, total_duration(schedule))
    return float(min(1.0, max(0.0, 0.5 * (1.0 - v.real))))


def _unwrap_skipnan(p: np.ndarray) -> np.ndarray:
    """Minimal-jump unwrap carried through NaN gaps.

    Each defined increment is wrapped into (-pi, pi] before accumulation;
    a jump of exactly pi, as happens across an orthogonality crossing,
    therefore survives as +pi.
    """
    out = np.full(len(p), math.nan)
    last = None
    last_out = 0.0
    for i, v in enumerate(p):
        if math.isnan(v):
            continue
        if last is None:
            out[i] = v
        else:
            out[i] = last_out + principal(v - last)
        last = v
        last_out = out[i]
    return out


def phase_samples(
    s0, schedule: RotationSchedule, samples_per_segment: int = DEFAULT_SAMPLES
):
    """Full diagnostic time series along a schedule.

    Returns ``(samples, crossing_flags, crossing_times)`` where samples is
    a list of PhaseSample, crossing_flags marks the first sample at or
    after each refined crossing time, and crossing_times are the refined
    zero times of the initial-state overlap.
    """
    psi = np.asarray(s0, dtype=complex)
    times, sps, units, _, rho = _overlap_series(psi, schedule, samples_per_segment)
    # evolved-qubit reduced state transported sample by sample: U rho U+
    rhot = np.einsum("kij,jl,kml->kim", units, rho, units.conj())
    blochs = np.stack(
        [
            2.0 * rhot[:, 0, 1].real,
            2.0 * rhot[:, 1, 0].imag,
            (rhot[:, 0, 0] - rhot[:, 1, 1]).real,
        ],
        axis=1,
    )
    mags = np.abs(sps)
    principal_vals = np.where(mags > ORTHOGONALITY_EPS, np.angle(sps), math.nan)
    unwrapped = _unwrap_skipnan(principal_vals)
    dyn_vals = np.zeros(len(times))
    acc = 0.0
    spp = samples_per_segment
    for k, seg in enumerate(schedule.segments):
        i0 = k * (spp - 1)
        rate = DYNAMICAL_SIGN * 0.5 * float(np.dot(seg.axis, blochs[i0]))
        sl = slice(i0 + 1, i0 + spp)
        dyn_vals[sl] = acc + rate * (times[sl] - times[i0])
        acc = float(dyn_vals[i0 + spp - 1])
    so3s = [su2_to_so3(u) for u in units]
    crossing_times = _crossing_times(psi, schedule, samples_per_segment)
    flags = [0] * len(times)
    for ct in crossing_times:
        idx = int(np.searchsorted(times, ct))
        flags[min(idx, len(times) - 1)] = 1
    samples = [
        PhaseSample(
            float(times[i]),
            complex(sps[i]),
            float(principal_vals[i]),
            float(unwrapped[i]),
            float(dyn_vals[i]),
            blochs[i].copy(),
            so3s[i],
        )
        for i in range(len(times))
    ]
    return samples, flags, [float(c) for c in crossing_times]

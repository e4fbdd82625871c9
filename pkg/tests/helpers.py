"""Shared random generators and brute-force oracles for the test suite."""

import math

import numpy as np

import phaselab as pl


def random_state(rng) -> np.ndarray:
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return v / np.linalg.norm(v)


def random_qubit(rng) -> np.ndarray:
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return v / np.linalg.norm(v)


def random_axis(rng) -> np.ndarray:
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_su2(rng) -> np.ndarray:
    return pl.evolution_operator(random_axis(rng), float(rng.uniform(0.0, 2.0 * math.pi)))


def random_mes(rng) -> np.ndarray:
    """Random maximally entangled state: local rotations of the Bell state."""
    s = pl.schmidt_state(0.5, 0.0)
    s = pl.apply_local(random_su2(rng), 1, s)
    return pl.apply_local(random_su2(rng), 2, s)


def random_segments(rng, max_segments=6, min_segments=1):
    n = int(rng.integers(min_segments, max_segments + 1))
    return tuple(
        pl.RotationSegment(random_axis(rng), float(rng.uniform(0.3, 6.0)))
        for _ in range(n)
    )


def random_schedule(rng, state=None, max_segments=6):
    if state is None:
        state = random_state(rng)
    qubit = int(rng.integers(1, 3))
    return pl.RotationSchedule(random_segments(rng, max_segments), qubit, state)


def cyclic_completion(segments):
    """Segments followed by their exact inverses in reverse order; the total
    unitary is the identity, so any schedule built this way is cyclic."""
    inverse = tuple(pl.RotationSegment(-s.axis, s.duration) for s in reversed(segments))
    return tuple(segments) + inverse


def random_cyclic_schedule(rng, state=None, max_prefix=3, extra_turn=False):
    if state is None:
        state = random_state(rng)
    segs = cyclic_completion(random_segments(rng, max_prefix))
    if extra_turn:
        segs = segs + (pl.RotationSegment(np.array([0.0, 0.0, 1.0]), 2.0 * math.pi),)
    return pl.RotationSchedule(segs, int(rng.integers(1, 3)), state)


def evolve(schedule, state=None) -> np.ndarray:
    """Final state of a schedule via the exact boundary product."""
    psi = schedule.initial if state is None else state
    u = pl.unitary_at(schedule, pl.total_duration(schedule))
    return pl.apply_local(u, schedule.evolved_qubit, psi)


def kron_apply(u, qubit, state) -> np.ndarray:
    """4x4 matrix-product oracle for apply_local."""
    eye = np.eye(2, dtype=complex)
    big = np.kron(u, eye) if qubit == 1 else np.kron(eye, u)
    return big @ np.asarray(state, dtype=complex)


def brute_partial_trace(state, keep) -> np.ndarray:
    """Index-summation oracle for reduced_density from the 4x4 projector."""
    psi = np.asarray(state, dtype=complex)
    proj = np.outer(psi, psi.conj()).reshape(2, 2, 2, 2)  # [i, j, i', j']
    if keep == 1:
        return np.einsum("ijkj->ik", proj)
    return np.einsum("ijil->jl", proj)


def triangle_solid_angle(a, b, c) -> float:
    """Signed solid angle of the geodesic triangle through three unit
    Bloch vectors (positive for counterclockwise seen from outside)."""
    num = float(np.dot(a, np.cross(b, c)))
    den = 1.0 + float(np.dot(a, b)) + float(np.dot(b, c)) + float(np.dot(c, a))
    return 2.0 * math.atan2(num, den)


def dynamical_quadrature(s0, schedule, steps_per_segment=20000) -> float:
    """Brute-force midpoint quadrature of -<H> dt along the evolution."""
    psi = np.asarray(s0, dtype=complex)
    q = schedule.evolved_qubit
    acc = 0.0
    for seg in schedule.segments:
        h = pl.pauli_dot(seg.axis) / 2.0
        dt = seg.duration / steps_per_segment
        for k in range(steps_per_segment):
            u = pl.evolution_operator(seg.axis, (k + 0.5) * dt)
            mid = pl.apply_local(u, q, psi)
            rho = pl.reduced_density(mid, q)
            acc -= float(np.trace(h @ rho).real) * dt
        psi = pl.apply_local(pl.evolution_operator(seg.axis, seg.duration), q, psi)
    return acc

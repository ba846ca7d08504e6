"""Batch verification of the library's defining invariants.

Runs a fixed set of named properties over independently seeded trials and
reports the worst residual per property.  Trial ``i`` of a run with seed
``s`` draws from ``numpy.random.default_rng([s, i])``, so results do not
depend on how trials are partitioned across worker processes and the
aggregated report is byte-stable for a fixed request.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import pi

import numpy as np

from . import algebra, states, transform
from .algebra import adjoint, max_abs_diff, multiply, to_matrix, unitary_conjugate
from .hamiltonian import (
    ExternalFieldHamiltonian,
    build_operator,
    diagonalize,
    oscillator_in_transformed_mode,
    transform_fermi_oscillator,
)
from .transform import (
    axis_angle_to_quaternion,
    compose,
    from_axis_angle,
    invert,
    isotropic_frame,
    quaternion_to_axis_angle,
    random_axis_angle,
    random_canonical,
    rotation_matrix,
    to_kappa,
    to_unitary,
    validate,
)

_IDENTITY3 = np.eye(3)


def _canonicity_constraints(rng) -> float:
    report = validate(random_canonical(rng))
    return max(report.residuals.values())


def _car_preservation(rng) -> float:
    b = to_matrix(transform.apply(random_canonical(rng)))
    bd = b.conj().T
    anti = np.abs(b @ bd + bd @ b - np.eye(2)).max()
    nil = np.abs(b @ b).max()
    return max(anti, nil)


def _conjugation_identity(rng) -> float:
    p = random_axis_angle(rng)
    u = to_unitary(p)
    lhs = unitary_conjugate(u, algebra.ANNIHILATOR)
    residual = max_abs_diff(lhs, transform.apply(from_axis_angle(p)))
    unitarity = max_abs_diff(multiply(u, adjoint(u)), algebra.ONE)
    return max(residual, unitarity)


def _diagonalization_round_trip(rng) -> float:
    alpha = rng.uniform(0.0, 10.0)
    radius = 10.0 * np.sqrt(rng.uniform())
    phase = rng.uniform(0.0, 2.0 * pi)
    h = ExternalFieldHamiltonian(alpha, radius * np.exp(1j * phase))
    result = diagonalize(h)
    rebuilt = result.energy * transform_fermi_oscillator(result.coefficients).as_operator()
    return max_abs_diff(rebuilt, build_operator(h)) / max(1.0, result.energy)


def _double_cover(rng) -> float:
    p = random_axis_angle(rng)
    w, x, y, z = axis_angle_to_quaternion(p)
    flipped = quaternion_to_axis_angle(-w, -x, -y, -z)
    l, lf = from_axis_angle(p), from_axis_angle(flipped)
    return max(
        abs(l.l00 - lf.l00),
        abs(l.l01 - lf.l01),
        abs(l.l10 - lf.l10),
        abs(l.l11 - lf.l11),
    )


def _frame_consistency(rng) -> float:
    l = random_canonical(rng)
    a = rotation_matrix(l)
    frame = isotropic_frame(to_kappa(l))
    rows = np.abs(a - np.vstack(frame)).max()
    orth = np.abs(a.T @ a - _IDENTITY3).max()
    det = abs(np.linalg.det(a) - 1.0)
    return max(rows, orth, det)


def _inversion_round_trip(rng) -> float:
    l = random_canonical(rng)
    nu = invert(l)
    nu_residual = max(validate(nu).residuals.values())
    round_trip = compose(nu, l)
    identity = transform.BVCoefficients.identity()
    diff = max(
        abs(round_trip.l00 - identity.l00),
        abs(round_trip.l01 - identity.l01),
        abs(round_trip.l10 - identity.l10),
        abs(round_trip.l11 - identity.l11),
    )
    return max(nu_residual, diff)


def _so3_homomorphism(rng) -> float:
    outer = random_canonical(rng)
    inner = random_canonical(rng)
    product = np.abs(
        rotation_matrix(compose(outer, inner))
        - rotation_matrix(outer) @ rotation_matrix(inner)
    ).max()
    inverse = np.abs(rotation_matrix(invert(inner)) - rotation_matrix(inner).T).max()
    return max(product, inverse)


def _transformed_oscillator(rng) -> float:
    l = random_canonical(rng)
    closed_form = transform_fermi_oscillator(l).as_operator()
    return max_abs_diff(closed_form, oscillator_in_transformed_mode(l))


def _vacuum_annihilation(rng) -> float:
    p = random_axis_angle(rng)
    state = states.transformed_vacuum(p)
    annihilated = states.apply_operator(transform.apply(from_axis_angle(p)), state)
    return max(
        abs(annihilated.amp0),
        abs(annihilated.amp1),
        abs(state.norm() - 1.0),
    )


PROPERTIES = {
    "canonicity_constraints": _canonicity_constraints,
    "car_preservation": _car_preservation,
    "conjugation_identity": _conjugation_identity,
    "diagonalization_round_trip": _diagonalization_round_trip,
    "double_cover": _double_cover,
    "frame_consistency": _frame_consistency,
    "inversion_round_trip": _inversion_round_trip,
    "so3_homomorphism": _so3_homomorphism,
    "transformed_oscillator": _transformed_oscillator,
    "vacuum_annihilation": _vacuum_annihilation,
}

_PROPERTY_ORDER = sorted(PROPERTIES)


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    trials: int
    tolerance: float
    max_residuals: dict[str, float]

    @property
    def all_pass(self) -> bool:
        return all(r <= self.tolerance for r in self.max_residuals.values())

    def failing(self) -> list[str]:
        return [n for n in _PROPERTY_ORDER if self.max_residuals[n] > self.tolerance]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "tolerance": self.tolerance,
            "properties": {
                name: {
                    "max_residual": self.max_residuals[name],
                    "pass": self.max_residuals[name] <= self.tolerance,
                }
                for name in _PROPERTY_ORDER
            },
            "all_pass": self.all_pass,
        }


def _run_range(seed: int, start: int, stop: int) -> dict[str, float]:
    worst = dict.fromkeys(_PROPERTY_ORDER, 0.0)
    for index in range(start, stop):
        rng = np.random.default_rng([seed, index])
        for name in _PROPERTY_ORDER:
            residual = PROPERTIES[name](rng)
            if residual > worst[name]:
                worst[name] = residual
    return worst


def run_suite(
    seed: int = 0,
    trials: int = 1000,
    tolerance: float = transform.DEFAULT_TOLERANCE,
    jobs: int = 1,
) -> VerificationReport:
    """Run every property over ``trials`` independently seeded trials."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    jobs = min(jobs, trials)
    if jobs == 1:
        worst = _run_range(seed, 0, trials)
    else:
        bounds = np.linspace(0, trials, jobs + 1, dtype=int)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_run_range, [seed] * jobs, bounds[:-1], bounds[1:])
        worst = dict.fromkeys(_PROPERTY_ORDER, 0.0)
        for chunk in chunks:
            for name, residual in chunk.items():
                if residual > worst[name]:
                    worst[name] = residual
    return VerificationReport(seed, trials, tolerance, worst)

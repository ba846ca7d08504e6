"""External-field Hamiltonians of one fermionic mode and their diagonalization.

The class under study is

    H = alpha·(a†a − 1/2) + beta·a + conj(beta)·a†,   alpha ≥ 0,

which a canonical transformation carries to a single Fermi oscillator
E·(b†b − 1/2) with E = sqrt(alpha² + 4|beta|²).  The converse direction,
expanding b†b − 1/2 over the original mode, is also provided.
"""
from __future__ import annotations

from cmath import isfinite
from dataclasses import dataclass
from math import hypot, isfinite as fisfinite

import numpy as np

from . import algebra
from .algebra import FockOperator, max_abs_diff
from .errors import InternalConsistencyError
from .transform import (
    DEFAULT_TOLERANCE,
    AxisAngle,
    BVCoefficients,
    KappaTriple,
    apply,
    axis_angle_from_coefficients,
    from_kappa,
    require_canonical,
)

_FERMI_OSCILLATOR = FockOperator((-0.5, 0, 0, 1))  # a†a − 1/2


@dataclass(frozen=True, slots=True)
class ExternalFieldHamiltonian:
    """Parameters (alpha, beta) of the hermitian one-mode Hamiltonian."""

    alpha: float
    beta: complex

    def __post_init__(self):
        alpha = float(self.alpha)
        beta = complex(self.beta)
        if not (fisfinite(alpha) and isfinite(beta)):
            raise ValueError("alpha and beta must be finite")
        if alpha < 0.0:
            raise ValueError("alpha must be non-negative")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def energy(self) -> float:
        """Spectral gap sqrt(alpha² + 4|beta|²)."""
        return hypot(self.alpha, 2.0 * abs(self.beta))

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": [self.beta.real, self.beta.imag]}

    @classmethod
    def from_dict(cls, doc: dict) -> ExternalFieldHamiltonian:
        return cls(doc["alpha"], complex(*doc["beta"]))


@dataclass(frozen=True, slots=True)
class TransformedOscillator:
    """b†b − 1/2 expanded over (a†a − 1/2, a, a†).

    Hermitian by construction: ``a_dagger`` is the conjugate of ``a`` and
    the number coefficient is real (it may be negative, unlike the alpha
    of :class:`ExternalFieldHamiltonian`).
    """

    number: float
    a: complex
    a_dagger: complex

    def as_operator(self) -> FockOperator:
        return FockOperator(
            (-0.5 * self.number + 0j, self.a, self.a_dagger, self.number + 0j)
        )

    def to_dict(self) -> dict:
        return {
            "number": self.number,
            "a": [self.a.real, self.a.imag],
            "a_dagger": [self.a_dagger.real, self.a_dagger.imag],
        }


@dataclass(frozen=True, slots=True)
class DiagonalizationResult:
    """Energy E and the transformation with E·(b†b − 1/2) = H."""

    energy: float
    coefficients: BVCoefficients
    axis_angle: AxisAngle

    def to_dict(self) -> dict:
        return {
            "energy": self.energy,
            "coefficients": self.coefficients.to_dict(),
            "axis_angle": self.axis_angle.to_dict(),
        }


def build_operator(h: ExternalFieldHamiltonian) -> FockOperator:
    """The Hamiltonian as an operator; hermitian."""
    return FockOperator(
        (-0.5 * h.alpha + 0j, h.beta, h.beta.conjugate(), h.alpha + 0j)
    )


def transform_fermi_oscillator(
    l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE
) -> TransformedOscillator:
    """Closed-form coefficients of b†b − 1/2 over the original mode.

    number = |l01| − |l10|, a-coefficient = conj(l00)·l01 − l00·conj(l10),
    a†-coefficient its conjugate.  Agrees with the operator-algebra
    expansion of b†b − 1/2 for every canonical l (the number coefficient
    arises there as |l01|² − |l10|², equal on the canonical manifold where
    |l01| + |l10| = 1).
    """
    require_canonical(l, tolerance)
    a_coeff = l.l00.conjugate() * l.l01 - l.l00 * l.l10.conjugate()
    return TransformedOscillator(
        number=abs(l.l01) - abs(l.l10),
        a=a_coeff,
        a_dagger=a_coeff.conjugate(),
    )


def diagonalize(
    h: ExternalFieldHamiltonian, tolerance: float = DEFAULT_TOLERANCE
) -> DiagonalizationResult:
    """Find E and a canonical l with E·(b†b − 1/2) equal to the Hamiltonian.

    In the quaternion basis the Hamiltonian is −i(v1·i + v2·j + v3·k) with
    the real axis vector v = (Re beta, −Im beta, alpha/2) of length E/2,
    while b†b − 1/2 is −i/2 times the transformed k-unit.  Diagonalizing
    therefore means choosing the rotation that carries k onto v/|v|: take
    e3 = v/|v|, complete it to a right-handed orthonormal frame, and read
    the coefficients off the frame.  The derivation is rechecked on every
    call by expanding E·(b†b − 1/2) back over the original mode; a
    mismatch raises :class:`InternalConsistencyError` rather than
    returning a wrong frame.
    """
    energy = h.energy()
    if energy == 0.0:
        return DiagonalizationResult(
            0.0, BVCoefficients.identity(), AxisAngle(0.0, (0.0, 0.0, 1.0))
        )
    axis = np.array([h.beta.real, -h.beta.imag, 0.5 * h.alpha])
    e3 = axis / np.linalg.norm(axis)
    seed = np.array([1.0, 0.0, 0.0])
    if np.linalg.norm(np.cross(e3, seed)) < 1e-8:
        seed = np.array([0.0, 1.0, 0.0])
    e1 = seed - (e3 @ seed) * e3
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(e3, e1)
    kappa = KappaTriple(*(complex(re, im) for re, im in zip(e1, e2)))
    coefficients = from_kappa(kappa, tolerance=tolerance)

    rebuilt = energy * transform_fermi_oscillator(coefficients, tolerance).as_operator()
    deviation = max_abs_diff(rebuilt, build_operator(h))
    if deviation > tolerance * max(1.0, energy):
        raise InternalConsistencyError(
            f"diagonalization frame check failed: deviation {deviation:.3e} "
            f"for alpha={h.alpha!r}, beta={h.beta!r}"
        )
    return DiagonalizationResult(
        energy, coefficients, axis_angle_from_coefficients(coefficients, tolerance)
    )


def fermi_oscillator() -> FockOperator:
    """a†a − 1/2, the normal form every such Hamiltonian reduces to."""
    return _FERMI_OSCILLATOR


def oscillator_in_transformed_mode(
    l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE
) -> FockOperator:
    """b†b − 1/2 computed purely by operator algebra (cross-check route)."""
    b = apply(l, tolerance)
    return algebra.multiply(algebra.adjoint(b), b) - 0.5 * algebra.ONE

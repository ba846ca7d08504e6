"""Arithmetic in the operator algebra of a single fermionic mode.

The algebra is four-dimensional, spanned by (1, a, a†, a†a) with the
canonical anticommutation relations {a, a†} = 1 and a² = (a†)² = 0.
The anti-hermitian combinations

    i = i(a + a†),    j = a − a†,    k = i·j = i(2a†a − 1)

satisfy i² = j² = k² = −1 and anticommute pairwise, so the algebra is the
complexified quaternion algebra (the real Clifford algebra C(0,2)), and
every operator can equally be written over the basis (1, i, j, k).

A faithful representation on the two-dimensional Fock space with basis
{|0⟩, |1⟩} (``a|1⟩ = |0⟩``) doubles as a brute-force oracle: products of
operators map to 2×2 matrix products.
"""
from __future__ import annotations

from cmath import isfinite
from dataclasses import dataclass

import numpy as np

from ._backend import product4, sandwich4
from .errors import BasisMismatchError, ConstraintError

STANDARD = "standard"
QUATERNION = "quaternion"

_BASES = (STANDARD, QUATERNION)


@dataclass(frozen=True, slots=True)
class FockOperator:
    """Element of the one-mode operator algebra.

    ``coeffs`` holds four complex coefficients over the ordered basis
    (1, a, a†, a†a) when ``basis == "standard"``, or (1, i, j, k) when
    ``basis == "quaternion"``.  Instances are immutable values; all
    arithmetic returns new instances.
    """

    coeffs: tuple[complex, complex, complex, complex]
    basis: str = STANDARD

    def __post_init__(self):
        if self.basis not in _BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        c = tuple(complex(v) for v in self.coeffs)
        if len(c) != 4:
            raise ValueError("FockOperator takes exactly 4 coefficients")
        if not all(isfinite(v) for v in c):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    def __add__(self, other: FockOperator) -> FockOperator:
        _require_same_basis(self, other)
        x, y = self.coeffs, other.coeffs
        return FockOperator(tuple(a + b for a, b in zip(x, y)), self.basis)

    def __sub__(self, other: FockOperator) -> FockOperator:
        _require_same_basis(self, other)
        x, y = self.coeffs, other.coeffs
        return FockOperator(tuple(a - b for a, b in zip(x, y)), self.basis)

    def __neg__(self) -> FockOperator:
        return FockOperator(tuple(-a for a in self.coeffs), self.basis)

    def __mul__(self, other):
        if isinstance(other, FockOperator):
            return multiply(self, other)
        return FockOperator(tuple(other * a for a in self.coeffs), self.basis)

    def __rmul__(self, scalar) -> FockOperator:
        return FockOperator(tuple(scalar * a for a in self.coeffs), self.basis)

    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "c": [[v.real, v.imag] for v in self.coeffs],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> FockOperator:
        c = [complex(re, im) for re, im in doc["c"]]
        return cls(tuple(c), doc["basis"])


ONE = FockOperator((1, 0, 0, 0))
ANNIHILATOR = FockOperator((0, 1, 0, 0))
CREATOR = FockOperator((0, 0, 1, 0))
NUMBER = FockOperator((0, 0, 0, 1))

# quaternion units expressed over (1, a, a†, a†a)
UNIT_I = FockOperator((0, 1j, 1j, 0))
UNIT_J = FockOperator((0, 1, -1, 0))
UNIT_K = FockOperator((-1j, 0, 0, 2j))

ZERO = FockOperator((0, 0, 0, 0))


def _require_same_basis(x: FockOperator, y: FockOperator) -> None:
    if x.basis != y.basis:
        raise BasisMismatchError(
            f"operands live in different bases: {x.basis!r} vs {y.basis!r}"
        )


def _require_standard(x: FockOperator, what: str) -> None:
    if x.basis != STANDARD:
        raise BasisMismatchError(
            f"{what} is defined on standard-basis coefficients; "
            "convert with from_quaternion_basis first"
        )


def multiply(x: FockOperator, y: FockOperator) -> FockOperator:
    """Operator product, bilinear and associative."""
    _require_same_basis(x, y)
    _require_standard(x, "multiply")
    return FockOperator(product4(*x.coeffs, *y.coeffs))


def adjoint(x: FockOperator) -> FockOperator:
    """Hermitian conjugate: coefficients conjugated, a ↔ a† swapped."""
    _require_standard(x, "adjoint")
    c0, c1, c2, c3 = x.coeffs
    return FockOperator(
        (c0.conjugate(), c2.conjugate(), c1.conjugate(), c3.conjugate())
    )


def unitary_conjugate(u: FockOperator, x: FockOperator) -> FockOperator:
    """u·x·adjoint(u) as a single fused kernel call."""
    _require_standard(u, "unitary_conjugate")
    _require_standard(x, "unitary_conjugate")
    return FockOperator(sandwich4(*u.coeffs, *x.coeffs))


def anticommutator(x: FockOperator, y: FockOperator) -> FockOperator:
    """xy + yx."""
    return multiply(x, y) + multiply(y, x)


def commutator(x: FockOperator, y: FockOperator) -> FockOperator:
    """xy − yx."""
    return multiply(x, y) - multiply(y, x)


def is_hermitian(x: FockOperator, tol: float = 1e-12) -> bool:
    return max_abs_diff(adjoint(x), x) <= tol


def is_antihermitian(x: FockOperator, tol: float = 1e-12) -> bool:
    return max_abs_diff(adjoint(x), -x) <= tol


def max_abs_diff(x: FockOperator, y: FockOperator) -> float:
    """Largest coefficient-wise deviation between two operators."""
    _require_same_basis(x, y)
    return max(abs(a - b) for a, b in zip(x.coeffs, y.coeffs))


def to_quaternion_basis(x: FockOperator) -> FockOperator:
    """Re-express standard-basis coefficients over (1, i, j, k).

    The change of basis is exact in floating point (entries are 0, ±1/2,
    ±i/2), so the round trip reproduces the input bit-for-bit.
    """
    _require_standard(x, "to_quaternion_basis")
    c0, c1, c2, c3 = x.coeffs
    return FockOperator(
        (
            c0 + 0.5 * c3,
            -0.5j * (c1 + c2),
            0.5 * (c1 - c2),
            -0.5j * c3,
        ),
        QUATERNION,
    )


def from_quaternion_basis(x: FockOperator) -> FockOperator:
    """Inverse of :func:`to_quaternion_basis`."""
    if x.basis != QUATERNION:
        raise BasisMismatchError(
            "from_quaternion_basis expects quaternion-basis coefficients"
        )
    q0, q1, q2, q3 = x.coeffs
    return FockOperator(
        (
            q0 - 1j * q3,
            1j * q1 + q2,
            1j * q1 - q2,
            2j * q3,
        ),
        STANDARD,
    )


def to_matrix(x: FockOperator) -> np.ndarray:
    """2×2 Fock-space representation over the basis {|0⟩, |1⟩}.

    a ↦ [[0,1],[0,0]], a† ↦ [[0,0],[1,0]], a†a ↦ [[0,0],[0,1]]; an algebra
    homomorphism, so products of operators become matrix products.
    """
    _require_standard(x, "to_matrix")
    c0, c1, c2, c3 = x.coeffs
    return np.array([[c0, c1], [c2, c0 + c3]], dtype=complex)


def eigenvalues_hermitian(m: np.ndarray, tol: float = 1e-12) -> tuple[float, float]:
    """Eigenvalues of a hermitian 2×2 matrix, ascending.

    Raises :class:`ConstraintError` if ``m`` deviates from hermiticity by
    more than ``tol``.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ConstraintError(f"expected a 2×2 matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > tol:
        raise ConstraintError(f"matrix is not hermitian (deviation {dev:.3e})")
    lo, hi = np.linalg.eigvalsh(m)
    return float(lo), float(hi)

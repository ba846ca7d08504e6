"""The group of nonlinear canonical transformations of one fermionic mode.

A transformation sends the annihilator to

    b = l00·1 + l01·a + l10·a† + l11·a†a

and is canonical (b, b† again satisfy the anticommutation relations) iff

    2|l00|² + |l10|² + |l01|² = 1        (normalization)
    l00² + l10·l01 = 0                   (nilpotency of b)
    2·l00 + l11 = 0
    |l10| + |l01| = 1                    (derived from the first two)

Canonical coefficient sets form a group isomorphic to SO(3); this module
provides validation, application, inversion, composition, and the three
equivalent geometric representations:

* the complex parameter triple (k01, k10, k11) = (l01 + l10, i(l01 − l10),
  l11), an isotropic 3-vector whose real and imaginary parts are an
  orthonormal pair,
* the 3×3 rotation matrix acting on the quaternion units (i, j, k),
* the unit quaternion / axis-angle form of the implementing unitary,
  which covers the group twice (U and −U give identical coefficients).
"""
from __future__ import annotations

from cmath import isfinite, sqrt as csqrt
from dataclasses import dataclass
from math import atan2, cos, hypot, sin
from typing import NamedTuple

import numpy as np

from . import algebra
from ._backend import canonicity_residuals
from .algebra import FockOperator, adjoint, multiply
from .errors import CanonicityError, ConstraintError, InternalConsistencyError

DEFAULT_TOLERANCE = 1e-12

_AXIS_EPS = 1e-12


@dataclass(frozen=True, slots=True)
class BVCoefficients:
    """The four complex coefficients (l00, l01, l10, l11) of b."""

    l00: complex
    l01: complex
    l10: complex
    l11: complex

    def __post_init__(self):
        for name in ("l00", "l01", "l10", "l11"):
            v = complex(getattr(self, name))
            if not isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> BVCoefficients:
        """b = a."""
        return cls(0, 1, 0, 0)

    def to_dict(self) -> dict:
        return {
            name: [v.real, v.imag]
            for name, v in (
                ("l00", self.l00),
                ("l01", self.l01),
                ("l10", self.l10),
                ("l11", self.l11),
            )
        }

    @classmethod
    def from_dict(cls, doc: dict) -> BVCoefficients:
        return cls(*(complex(*doc[name]) for name in ("l00", "l01", "l10", "l11")))


@dataclass(frozen=True, slots=True)
class KappaTriple:
    """Complex triple (k01, k10, k11); an isotropic vector of norm² 2."""

    k01: complex
    k10: complex
    k11: complex

    def __post_init__(self):
        for name in ("k01", "k10", "k11"):
            v = complex(getattr(self, name))
            if not isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)

    def residuals(self) -> tuple[float, float]:
        """Deviations from |k|² = 2 and kᵀk = 0."""
        a = abs(self.k01) ** 2 + abs(self.k10) ** 2 + abs(self.k11) ** 2 - 2.0
        b = self.k01**2 + self.k10**2 + self.k11**2
        return abs(a), abs(b)


class IsotropicFrame(NamedTuple):
    """Right-handed orthonormal triple (e1, e2, e3 = e1 × e2)."""

    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray


@dataclass(frozen=True, slots=True)
class AxisAngle:
    """Rotation angle ``phi`` and unit axis ``n`` of the unitary.

    The unitary is U = cos(phi/2) + sin(phi/2)(n1·i + n2·j + n3·k); the
    canonical representative keeps phi in [0, π], but any finite angle is
    accepted since the coefficient formulas are periodic.
    """

    phi: float
    n: tuple[float, float, float]

    def __post_init__(self):
        phi = float(self.phi)
        n = tuple(float(v) for v in self.n)
        if len(n) != 3:
            raise ValueError("axis must have 3 components")
        if not all(map(np.isfinite, (phi, *n))):
            raise ValueError("axis-angle parameters must be finite")
        if abs(n[0] ** 2 + n[1] ** 2 + n[2] ** 2 - 1.0) > DEFAULT_TOLERANCE:
            raise ValueError("axis must be a unit vector")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "n", n)

    def to_dict(self) -> dict:
        return {"phi": self.phi, "n": list(self.n)}

    @classmethod
    def from_dict(cls, doc: dict) -> AxisAngle:
        return cls(doc["phi"], tuple(doc["n"]))


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """Residuals of the four canonicity constraints plus a verdict."""

    residuals: dict[str, float]
    canonical: bool
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "residuals": dict(self.residuals),
            "canonical": self.canonical,
            "tolerance": self.tolerance,
        }


def validate(l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE) -> ValidationReport:
    """Check the canonicity constraints; never raises on finite input."""
    r6a, r6b, r6c, r6d = canonicity_residuals(l.l00, l.l01, l.l10, l.l11)
    residuals = {"eq6a": r6a, "eq6b": r6b, "eq6c": r6c, "eq6d": r6d}
    return ValidationReport(
        residuals=residuals,
        canonical=max(residuals.values()) <= tolerance,
        tolerance=tolerance,
    )


def require_canonical(l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE) -> None:
    """Raise :class:`CanonicityError` unless ``l`` passes :func:`validate`."""
    report = validate(l, tolerance)
    if not report.canonical:
        worst = max(report.residuals, key=report.residuals.get)
        raise CanonicityError(
            f"coefficients are not canonical: residual {report.residuals[worst]:.3e} "
            f"on {worst} exceeds {tolerance:.1e}",
            report=report,
        )


def apply(l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE) -> FockOperator:
    """The transformed annihilator b as an operator."""
    require_canonical(l, tolerance)
    return FockOperator((l.l00, l.l01, l.l10, l.l11))


def invert(l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE) -> BVCoefficients:
    """Coefficients expressing a through (1, b, b†, b†b)."""
    require_canonical(l, tolerance)
    n00 = l.l00.conjugate() * l.l10 - l.l00 * l.l01.conjugate()
    return BVCoefficients(n00, l.l01.conjugate(), l.l10, -2.0 * n00)


def compose(
    outer: BVCoefficients,
    inner: BVCoefficients,
    tolerance: float = DEFAULT_TOLERANCE,
) -> BVCoefficients:
    """Coefficients of the composite map a ↦ outer(inner(a)).

    Computed by expanding the outer ansatz on the operators produced by
    the inner transformation and collecting standard-basis coefficients;
    with this order ``rotation_matrix`` is a homomorphism onto matrix
    products.
    """
    require_canonical(outer, tolerance)
    b = apply(inner, tolerance)
    bd = adjoint(b)
    op = (
        outer.l00 * algebra.ONE
        + outer.l01 * b
        + outer.l10 * bd
        + outer.l11 * multiply(bd, b)
    )
    result = BVCoefficients(*op.coeffs)
    report = validate(result, tolerance)
    if not report.canonical:
        raise InternalConsistencyError(
            "composition of canonical transformations left the canonical manifold; "
            f"residuals {report.residuals}"
        )
    return result


def to_kappa(l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE) -> KappaTriple:
    """Linear recombination (l01 + l10, i(l01 − l10), l11)."""
    require_canonical(l, tolerance)
    return KappaTriple(l.l01 + l.l10, 1j * (l.l01 - l.l10), l.l11)


def from_kappa(
    k: KappaTriple,
    sign: int = 1,
    tolerance: float = DEFAULT_TOLERANCE,
) -> BVCoefficients:
    """Invert :func:`to_kappa`.

    The map is linear and uniquely invertible; ``sign`` selects nothing
    and is accepted (and checked) only for interface symmetry with the
    two-sheeted axis-angle parametrization.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _require_isotropic(k, tolerance)
    return BVCoefficients(
        -0.5 * k.k11,
        0.5 * (k.k01 - 1j * k.k10),
        0.5 * (k.k01 + 1j * k.k10),
        k.k11,
    )


def _require_isotropic(k: KappaTriple, tolerance: float) -> None:
    r_norm, r_iso = k.residuals()
    if max(r_norm, r_iso) > tolerance:
        raise ConstraintError(
            f"not an isotropic vector of norm² 2: residuals ({r_norm:.3e}, {r_iso:.3e})"
        )


def isotropic_frame(k: KappaTriple, tolerance: float = DEFAULT_TOLERANCE) -> IsotropicFrame:
    """Split k into the orthonormal pair (Re k, Im k) plus their cross product."""
    _require_isotropic(k, tolerance)
    vec = np.array([k.k01, k.k10, k.k11])
    e1 = vec.real.copy()
    e2 = vec.imag.copy()
    return IsotropicFrame(e1, e2, np.cross(e1, e2))


def rotation_matrix(l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """The SO(3) matrix A with b-units given by rows: b⁽ᵖ⁾ = Σ_q A[p,q]·a⁽ᵠ⁾.

    Rows one and two are the real and imaginary parts of the parameter
    triple; row three is built from its pairwise conjugate products (and
    equals the cross product of the first two rows).
    """
    k = to_kappa(l, tolerance)
    ks = (k.k01, k.k10, k.k11)
    return np.array(
        [
            [v.real for v in ks],
            [v.imag for v in ks],
            [
                (k.k10.conjugate() * k.k11).imag,
                (k.k11.conjugate() * k.k01).imag,
                (k.k01.conjugate() * k.k10).imag,
            ],
        ]
    )


def from_axis_angle(p: AxisAngle) -> BVCoefficients:
    """Coefficients of the transformation implemented by the unitary U(p).

    With u = cos(φ/2) − i·n3·sin(φ/2) and v = (n1 + i·n2)·sin(φ/2):
    l01 = u², l10 = v², l00 = −i·u·v, l11 = −2·l00.  Quadratic in U, so
    U and −U give identical coefficients (the double cover).
    """
    u, v = _half_turn_parts(p)
    l00 = -1j * u * v
    return BVCoefficients(l00, u * u, v * v, -2.0 * l00)


def to_unitary(p: AxisAngle) -> FockOperator:
    """U = cos(φ/2)·1 + sin(φ/2)·(n1·i + n2·j + n3·k), standard basis."""
    half = 0.5 * p.phi
    c, s = cos(half), sin(half)
    n1, n2, n3 = p.n
    return FockOperator(
        (
            complex(c, -n3 * s),
            complex(n2 * s, n1 * s),
            complex(-n2 * s, n1 * s),
            complex(0.0, 2.0 * n3 * s),
        )
    )


def _half_turn_parts(p: AxisAngle) -> tuple[complex, complex]:
    half = 0.5 * p.phi
    c, s = cos(half), sin(half)
    n1, n2, n3 = p.n
    return complex(c, -n3 * s), complex(n1, n2) * s


def axis_angle_from_coefficients(
    l: BVCoefficients, tolerance: float = DEFAULT_TOLERANCE
) -> AxisAngle:
    """Recover the canonical axis-angle representative of ``l``.

    Inverts the quadratic map of :func:`from_axis_angle`: u and v are
    square roots of l01 and l10 with the relative sign fixed by
    l00 = −i·u·v, and the overall quaternion sign is chosen so that
    φ ∈ [0, π].  Conventions at the boundary: φ = 0 reports axis
    (0, 0, 1); at φ = π the first axis component exceeding 1e-12 in
    magnitude is made positive.
    """
    require_canonical(l, tolerance)
    # at least one of |l01|, |l10| is ≥ 1/2, making the division safe
    if abs(l.l01) >= abs(l.l10):
        u = csqrt(l.l01)
        v = 1j * l.l00 / u
    else:
        v = csqrt(l.l10)
        u = 1j * l.l00 / v
    w, z = u.real, -u.imag
    x, y = v.real, v.imag
    norm = hypot(hypot(w, x), hypot(y, z))
    w, x, y, z = w / norm, x / norm, y / norm, z / norm
    if w < -_AXIS_EPS:
        w, x, y, z = -w, -x, -y, -z
    elif abs(w) <= _AXIS_EPS:
        for comp in (x, y, z):
            if abs(comp) > _AXIS_EPS:
                if comp < 0.0:
                    w, x, y, z = -w, -x, -y, -z
                break
    s = hypot(hypot(x, y), z)
    if s <= _AXIS_EPS:
        return AxisAngle(0.0, (0.0, 0.0, 1.0))
    return AxisAngle(2.0 * atan2(s, w), (x / s, y / s, z / s))


def axis_angle_to_quaternion(p: AxisAngle) -> tuple[float, float, float, float]:
    """Unit quaternion (w, x, y, z) of the implementing unitary."""
    half = 0.5 * p.phi
    s = sin(half)
    return (cos(half), p.n[0] * s, p.n[1] * s, p.n[2] * s)


def quaternion_to_axis_angle(w: float, x: float, y: float, z: float) -> AxisAngle:
    """Axis-angle form of a unit quaternion, without canonicalization.

    φ = 2·atan2(|(x,y,z)|, w) lands in [0, 2π]; values above π represent
    the −U sheet of the double cover and are accepted everywhere.
    """
    norm = hypot(hypot(w, x), hypot(y, z))
    if norm == 0.0:
        raise ValueError("zero quaternion has no axis-angle form")
    w, x, y, z = w / norm, x / norm, y / norm, z / norm
    s = hypot(hypot(x, y), z)
    if s <= _AXIS_EPS:
        return AxisAngle(0.0 if w > 0 else 2.0 * atan2(s, w), (0.0, 0.0, 1.0))
    return AxisAngle(2.0 * atan2(s, w), (x / s, y / s, z / s))


def random_axis_angle(rng: np.random.Generator) -> AxisAngle:
    """Haar-uniform rotation: four standard normals, normalized, w ≥ 0 sheet."""
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    if q[0] < 0:
        q = -q
    return quaternion_to_axis_angle(*q)


def random_canonical(rng: np.random.Generator) -> BVCoefficients:
    """Haar-uniform canonical coefficient set (surjective onto the group)."""
    return from_axis_angle(random_axis_angle(rng))

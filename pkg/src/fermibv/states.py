"""States of the one-mode Fock space and transformed vacua."""
from __future__ import annotations

from cmath import isfinite
from dataclasses import dataclass
from math import hypot

from .algebra import FockOperator, to_matrix
from .transform import AxisAngle, to_unitary


@dataclass(frozen=True, slots=True)
class StateVector:
    """Amplitudes on the occupation basis {|0⟩, |1⟩}."""

    amp0: complex
    amp1: complex

    def __post_init__(self):
        a0, a1 = complex(self.amp0), complex(self.amp1)
        if not (isfinite(a0) and isfinite(a1)):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amp0", a0)
        object.__setattr__(self, "amp1", a1)

    def norm(self) -> float:
        return hypot(abs(self.amp0), abs(self.amp1))

    def to_dict(self) -> dict:
        return {
            "amp0": [self.amp0.real, self.amp0.imag],
            "amp1": [self.amp1.real, self.amp1.imag],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> StateVector:
        return cls(complex(*doc["amp0"]), complex(*doc["amp1"]))


def vacuum() -> StateVector:
    """The state annihilated by a."""
    return StateVector(1.0, 0.0)


def apply_operator(x: FockOperator, s: StateVector) -> StateVector:
    """Act with an operator on a state via the 2×2 representation."""
    m = to_matrix(x)
    return StateVector(
        m[0, 0] * s.amp0 + m[0, 1] * s.amp1,
        m[1, 0] * s.amp0 + m[1, 1] * s.amp1,
    )


def transformed_vacuum(p: AxisAngle) -> StateVector:
    """U(p)|0⟩: the normalized state annihilated by the transformed b.

    This is a spin coherent state; no phase convention is imposed, the
    amplitudes are exactly the first column of the unitary, so the state
    transforms with the SU(2) element (flipping the quaternion sign
    negates the state while leaving all physics intact).
    """
    return apply_operator(to_unitary(p), vacuum())

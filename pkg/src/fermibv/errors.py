"""Exception types shared across the package."""


class BasisMismatchError(ValueError):
    """Operands expressed over incompatible operator bases."""


class CanonicityError(ValueError):
    """Coefficients do not satisfy the canonicity constraints.

    Carries the failing :class:`~fermibv.transform.ValidationReport` in
    ``report`` when one is available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConstraintError(ValueError):
    """An input violates a documented mathematical precondition."""


class InternalConsistencyError(RuntimeError):
    """A built-in cross-check failed; indicates a bug, never bad input."""

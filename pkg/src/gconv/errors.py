"""Exception types shared by the package and mapped to CLI exit codes."""

from __future__ import annotations


class GConvError(Exception):
    """Base class for all errors raised by this package."""


class SpecMismatchError(GConvError):
    """Operands built over different groups, or residues out of range."""


class DomainMismatchError(GConvError):
    """A signal tagged for one side of the transform was used on the other."""


class ShapeMismatchError(GConvError):
    """Filter, signal, or matrix dimensions do not line up."""


class SchemaError(GConvError):
    """A JSON document does not match the expected schema."""


class SizeCapError(GConvError):
    """Input exceeds the size caps of the dense verification path."""


class NonHermitianError(GConvError):
    """A matrix family required to be Hermitian deviates beyond tolerance."""

    def __init__(self, deviation: float, tolerance: float):
        self.deviation = deviation
        self.tolerance = tolerance
        super().__init__(
            f"matrices deviate from Hermitian by {deviation:.3e} "
            f"(tolerance {tolerance:.3e})"
        )


class ExactnessError(GConvError):
    """An operation needing an exact symbol was given a grid-sampled one."""


class NotInvertibleError(GConvError):
    """Invertibility certificate failed; carries the offending frequency."""

    def __init__(self, min_det_abs: float, argmin_xi: int, tolerance: float):
        self.min_det_abs = min_det_abs
        self.argmin_xi = argmin_xi
        self.tolerance = tolerance
        super().__init__(
            f"symbol determinant has magnitude {min_det_abs:.3e} at dual index "
            f"{argmin_xi} (tolerance {tolerance:.3e}); operator is not invertible"
        )

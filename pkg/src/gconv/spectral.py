"""Frequency-domain spectral analysis of convolution operators.

The operator norm is the largest transfer-matrix singular value over all
dual points; invertibility holds exactly when the smallest determinant
magnitude over dual points stays above zero, and then the inverse operator's
norm is the reciprocal of the smallest singular value. On a finite dual
group these extrema are plain maxima and minima; for grid-sampled symbols
they are one-sided bounds, the reports say so (exact=False), and no
invertibility certificate is issued.

Ties in arg-extrema always resolve to the lowest dual index, so reports are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .convop import FilterMatrix, SymbolMatrix, filter_from_symbol, symbol
from .errors import ExactnessError, NonHermitianError, NotInvertibleError, ShapeMismatchError
from .jacobi import hermitian_eigenvalues, singular_values

DET_TOL_SCALE = 1e-12


@dataclass(frozen=True)
class InvertibilityResult:
    """Outcome of the determinant test; ``invertible`` is None when the
    symbol is grid-sampled and no certificate can be issued."""

    min_det_abs: float
    argmin_xi: int
    invertible: bool | None
    tolerance: float


@dataclass(frozen=True)
class ExtremalEigs:
    min_value: float
    min_xi: int
    max_value: float
    max_xi: int
    hermitian_deviation: float


@dataclass(frozen=True)
class SpectralReport:
    operator_norm: float
    benzi_bound: float
    argmax_xi: int
    exact: bool
    min_det_abs: float | None = None
    argmin_xi: int | None = None
    invertible: bool | None = None
    inverse_norm: float | None = None
    det_tolerance: float | None = None


def operator_norm(sym: SymbolMatrix) -> tuple[float, int]:
    """Largest singular value over all dual points, with the attaining index.

    For grid-sampled symbols this is a lower bound of the true norm.
    """
    top = singular_values(sym.data)[:, 0]
    xi = int(np.argmax(top))
    return float(top[xi]), xi


def benzi_bound(sym: SymbolMatrix) -> float:
    """Spectral norm of the matrix of entrywise sup magnitudes.

    Always at or above the operator norm, and equal to it for 1x1 filters.
    """
    mags = np.abs(sym.data).max(axis=0)
    return float(singular_values(mags[None, :, :].astype(np.complex128))[0, 0])


def default_det_tolerance(sym: SymbolMatrix) -> float:
    """Scale-aware determinant threshold: 1e-12 * (operator norm)^N."""
    norm, _ = operator_norm(sym)
    return DET_TOL_SCALE * norm ** sym.rows


def invertibility(sym: SymbolMatrix, det_tol: float | None = None) -> InvertibilityResult:
    """Minimum determinant magnitude over dual points and the verdict.

    Requires a square symbol. On a grid sampling the minimum is only an
    upper bound of the true infimum, so ``invertible`` is left undecided.
    """
    if sym.rows != sym.cols:
        raise ShapeMismatchError(
            f"invertibility needs a square symbol, got {sym.rows}x{sym.cols}"
        )
    dets = np.abs(np.linalg.det(sym.data))
    xi = int(np.argmin(dets))
    tol = default_det_tolerance(sym) if det_tol is None else float(det_tol)
    verdict = bool(dets[xi] > tol) if sym.exact else None
    return InvertibilityResult(float(dets[xi]), xi, verdict, tol)


def inverse_norm(sym: SymbolMatrix, det_tol: float | None = None) -> float:
    """Norm of the inverse operator: 1 over the smallest singular value
    across dual points. Only defined once the invertibility test passes."""
    check = invertibility(sym, det_tol)
    if check.invertible is None:
        raise ExactnessError(
            "invertibility cannot be certified from a grid-sampled symbol"
        )
    if not check.invertible:
        raise NotInvertibleError(check.min_det_abs, check.argmin_xi, check.tolerance)
    smallest = float(singular_values(sym.data)[:, -1].min())
    return 1.0 / smallest


def inverse_filter(filt: FilterMatrix, det_tol: float | None = None) -> FilterMatrix:
    """Filter whose symbol is the pointwise matrix inverse of the input's.

    Composing with the input on either side gives the identity filter.
    Raises NotInvertibleError (with the offending dual index) otherwise.
    """
    sym = symbol(filt)
    check = invertibility(sym, det_tol)
    if not check.invertible:
        raise NotInvertibleError(check.min_det_abs, check.argmin_xi, check.tolerance)
    inv_data = np.linalg.inv(sym.data)
    return filter_from_symbol(SymbolMatrix(sym.spec, inv_data, exact=True))


def hermitian_extremal_eigs(mats: np.ndarray, herm_tol: float = 1e-10) -> ExtremalEigs:
    """Extreme eigenvalues over a (P, N, N) family of Hermitian matrices.

    The family is symmetrized before solving; the worst spectral-norm
    deviation from Hermitian is reported and must stay within ``herm_tol``
    relative to the family's scale.
    """
    H = np.asarray(mats, dtype=np.complex128)
    if H.ndim != 3 or H.shape[1] != H.shape[2]:
        raise ShapeMismatchError(f"expected a (P, N, N) family, got shape {H.shape}")
    Hc = np.conj(np.transpose(H, (0, 2, 1)))
    deviation = float(singular_values(H - Hc)[:, 0].max())
    sym = 0.5 * (H + Hc)
    eigs = hermitian_eigenvalues(sym)
    scale = max(1.0, float(np.abs(eigs).max()))
    if deviation > herm_tol * scale:
        raise NonHermitianError(deviation, herm_tol * scale)
    mins, maxs = eigs[:, 0], eigs[:, -1]
    imin, imax = int(np.argmin(mins)), int(np.argmax(maxs))
    return ExtremalEigs(float(mins[imin]), imin, float(maxs[imax]), imax, deviation)


def spectral_report(sym: SymbolMatrix, det_tol: float | None = None) -> SpectralReport:
    """Full per-symbol analysis; determinant fields only for square symbols,
    inverse norm only when invertibility is certified."""
    norm, argmax = operator_norm(sym)
    benzi = benzi_bound(sym)
    min_det = argmin = verdict = inv_norm = tol = None
    if sym.rows == sym.cols:
        check = invertibility(sym, det_tol)
        min_det, argmin, verdict, tol = (
            check.min_det_abs, check.argmin_xi, check.invertible, check.tolerance,
        )
        if verdict:
            smallest = float(singular_values(sym.data)[:, -1].min())
            inv_norm = 1.0 / smallest
    return SpectralReport(
        operator_norm=norm,
        benzi_bound=benzi,
        argmax_xi=argmax,
        exact=sym.exact,
        min_det_abs=min_det,
        argmin_xi=argmin,
        invertible=verdict,
        inverse_norm=inv_norm,
        det_tolerance=tol,
    )

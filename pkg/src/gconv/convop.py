"""Matrix convolution filters, their transfer-matrix symbols, and the
operator algebra on them.

A filter with M x N matrix taps acts on N-component signals by channelwise
group convolution. Its symbol assigns to each dual point the M x N complex
matrix of entrywise transforms; under that map composition becomes the
pointwise matrix product and the Hilbert adjoint becomes the pointwise
conjugate transpose. Taps are the ground truth and are what file formats
store; symbols are derived (and cached).

Note on naming: ``adjoint`` returns the filter of the Hilbert-adjoint
operator. Its tap matrix is the transpose of the entrywise reverse-conjugate,
which is not the entrywise conjugate of the tap matrix itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ExactnessError, ShapeMismatchError, SpecMismatchError
from .fourier import (
    DOMAIN_GROUP,
    Signal,
    fft_last_axis,
    ifft_last_axis,
    convolve,
)
from .group import Element, GroupSpec


@dataclass(eq=False)
class FilterMatrix:
    """M x N matrix of group-domain taps; ``taps`` has shape (M, N, |G|)."""

    spec: GroupSpec
    taps: np.ndarray
    _symbol_cache: "SymbolMatrix | None" = field(default=None, init=False, repr=False)

    def __post_init__(self):
        arr = np.array(self.taps, dtype=np.complex128)
        if arr.ndim != 3:
            raise ShapeMismatchError(f"taps must be (rows, cols, |G|), got shape {arr.shape}")
        if arr.shape[2] != self.spec.cardinality:
            raise SpecMismatchError(
                f"taps length {arr.shape[2]} does not match |G|={self.spec.cardinality}"
            )
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeMismatchError("filter needs at least one row and one column")
        self.taps = arr

    @property
    def rows(self) -> int:
        return self.taps.shape[0]

    @property
    def cols(self) -> int:
        return self.taps.shape[1]

    def entry(self, m: int, n: int) -> Signal:
        return Signal(self.spec, self.taps[m, n].copy())

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[Signal]]) -> "FilterMatrix":
        spec = entries[0][0].spec
        for row in entries:
            for sig in row:
                if sig.spec != spec:
                    raise SpecMismatchError("filter entries live on different groups")
                if sig.domain != DOMAIN_GROUP:
                    raise SpecMismatchError("filter entries must be group-domain signals")
        taps = np.stack([np.stack([sig.values for sig in row]) for row in entries])
        return cls(spec, taps)

    @classmethod
    def identity(cls, spec: GroupSpec, n: int) -> "FilterMatrix":
        """The unit of the algebra: impulse taps on the diagonal."""
        taps = np.zeros((n, n, spec.cardinality), dtype=np.complex128)
        taps[range(n), range(n), 0] = 1.0
        return cls(spec, taps)


@dataclass(eq=False)
class SymbolMatrix:
    """Per-dual-point M x N matrices; ``data`` has shape (points, M, N).

    exact=True means the points enumerate the full dual group of ``spec``.
    exact=False marks a grid sampling of a continuous symbol (integer-lattice
    taps); extrema over it are one-sided bounds only.
    """

    spec: GroupSpec
    data: np.ndarray
    exact: bool = True

    def __post_init__(self):
        arr = np.array(self.data, dtype=np.complex128)
        if arr.ndim != 3:
            raise ShapeMismatchError(f"symbol data must be (points, M, N), got {arr.shape}")
        if arr.shape[0] != self.spec.cardinality:
            raise SpecMismatchError(
                f"symbol has {arr.shape[0]} points, dual index space has "
                f"{self.spec.cardinality}"
            )
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[1]

    @property
    def cols(self) -> int:
        return self.data.shape[2]

    def at(self, xi_index: int) -> np.ndarray:
        return self.data[xi_index].copy()


@dataclass(eq=False)
class VectorSignal:
    """An element of the N-fold product of signal spaces; shape (N, |G|)."""

    spec: GroupSpec
    stacked: np.ndarray

    def __post_init__(self):
        arr = np.array(self.stacked, dtype=np.complex128)
        if arr.ndim != 2:
            raise ShapeMismatchError(f"stacked values must be (N, |G|), got {arr.shape}")
        if arr.shape[1] != self.spec.cardinality:
            raise SpecMismatchError(
                f"components have {arr.shape[1]} values, |G|={self.spec.cardinality}"
            )
        self.stacked = arr

    @property
    def n_components(self) -> int:
        return self.stacked.shape[0]

    def component(self, n: int) -> Signal:
        return Signal(self.spec, self.stacked[n].copy())

    @classmethod
    def from_signals(cls, signals: Sequence[Signal]) -> "VectorSignal":
        spec = signals[0].spec
        for sig in signals:
            if sig.spec != spec:
                raise SpecMismatchError("vector components live on different groups")
            if sig.domain != DOMAIN_GROUP:
                raise SpecMismatchError("vector components must be group-domain signals")
        return cls(spec, np.stack([sig.values for sig in signals]))

    @classmethod
    def basis_delta(cls, spec: GroupSpec, n_components: int, component: int,
                    at: Iterable[int] | None = None) -> "VectorSignal":
        """Impulse in one component, zero elsewhere."""
        stacked = np.zeros((n_components, spec.cardinality), dtype=np.complex128)
        idx = 0 if at is None else spec.index_of(at)
        stacked[component, idx] = 1.0
        return cls(spec, stacked)

    def norm(self) -> float:
        return float(np.linalg.norm(self.stacked))


@dataclass(frozen=True)
class TranslationVarianceReport:
    """Certificate that a dense map is not translation invariant.

    The witnessing column is the probe T_g(delta e_n) at which the rebuilt
    convolution operator and the given map differ the most.
    """

    max_deviation: float
    tolerance: float
    witness_translation: Element
    witness_component: int


def symbol(filt: FilterMatrix) -> SymbolMatrix:
    """Entrywise transform of the taps, regrouped per dual point. Cached."""
    if filt._symbol_cache is None:
        data = fft_last_axis(filt.taps, filt.spec).transpose(2, 0, 1)
        filt._symbol_cache = SymbolMatrix(filt.spec, np.ascontiguousarray(data), exact=True)
    return filt._symbol_cache


def filter_from_symbol(sym: SymbolMatrix) -> FilterMatrix:
    """Inverse of ``symbol``; requires an exact (full dual group) symbol."""
    if not sym.exact:
        raise ExactnessError("cannot rebuild taps from a grid-sampled symbol")
    taps = ifft_last_axis(np.ascontiguousarray(sym.data.transpose(1, 2, 0)), sym.spec)
    return FilterMatrix(sym.spec, taps)


def apply(filt: FilterMatrix, x: VectorSignal) -> VectorSignal:
    """Convolve the filter with a vector signal (frequency-domain fast path)."""
    if x.spec != filt.spec:
        raise SpecMismatchError("apply: filter and signal live on different groups")
    if x.n_components != filt.cols:
        raise ShapeMismatchError(
            f"apply: filter has {filt.cols} columns, signal has {x.n_components} components"
        )
    xhat = fft_last_axis(x.stacked, filt.spec)
    yhat = np.einsum("pmn,np->mp", symbol(filt).data, xhat)
    return VectorSignal(filt.spec, ifft_last_axis(yhat, filt.spec))


def compose(outer: FilterMatrix, inner: FilterMatrix) -> FilterMatrix:
    """Filter of the composition outer after inner.

    Computed as the pointwise product of symbols and transformed back;
    equals the matrix convolution of the tap matrices. ``compose_direct``
    keeps the time-domain evaluation for cross-checks.
    """
    if outer.spec != inner.spec:
        raise SpecMismatchError("compose: filters live on different groups")
    if outer.cols != inner.rows:
        raise ShapeMismatchError(
            f"compose: outer has {outer.cols} columns, inner has {inner.rows} rows"
        )
    data = symbol(outer).data @ symbol(inner).data
    return filter_from_symbol(SymbolMatrix(outer.spec, data, exact=True))


def compose_direct(outer: FilterMatrix, inner: FilterMatrix) -> FilterMatrix:
    """Time-domain matrix convolution of tap matrices (testing path)."""
    if outer.spec != inner.spec:
        raise SpecMismatchError("compose: filters live on different groups")
    if outer.cols != inner.rows:
        raise ShapeMismatchError(
            f"compose: outer has {outer.cols} columns, inner has {inner.rows} rows"
        )
    spec = outer.spec
    taps = np.zeros((outer.rows, inner.cols, spec.cardinality), dtype=np.complex128)
    for m in range(outer.rows):
        for p in range(inner.cols):
            acc = np.zeros(spec.cardinality, dtype=np.complex128)
            for n in range(outer.cols):
                acc += convolve(outer.entry(m, n), inner.entry(n, p)).values
            taps[m, p] = acc
    return FilterMatrix(spec, taps)


def adjoint(filt: FilterMatrix) -> FilterMatrix:
    """Filter of the Hilbert-adjoint operator.

    Entry (n, m) of the result is g -> conj(a_{m,n}(-g)); the symbol of the
    result is the pointwise conjugate transpose of the original symbol.
    """
    rev = filt.taps[:, :, filt.spec.negation_index]
    return FilterMatrix(filt.spec, np.conj(rev).transpose(1, 0, 2))


def extract_filter(matrix: np.ndarray, spec: GroupSpec, rows: int, cols: int,
                   tol: float | None = None) -> FilterMatrix | TranslationVarianceReport:
    """Recover the filter of a dense linear map, or certify it is not one.

    The map is given as a (|G| rows) x (|G| cols) complex matrix over the
    basis of translated impulses, component-major: column n*|G| + index(g)
    is the image of T_g(delta e_n), row m*|G| + index(h) its value at
    component m, element h. The candidate taps are read off the g = 0
    columns; the map is a convolution operator (equivalently, commutes with
    every translation and is bounded) exactly when it equals the candidate's
    dense realization, which is checked entrywise against ``tol``.
    """
    dense = np.asarray(matrix, dtype=np.complex128)
    P = spec.cardinality
    if dense.shape != (rows * P, cols * P):
        raise ShapeMismatchError(
            f"dense map has shape {dense.shape}, expected {(rows * P, cols * P)}"
        )
    taps = np.empty((rows, cols, P), dtype=np.complex128)
    for m in range(rows):
        for n in range(cols):
            taps[m, n] = dense[m * P:(m + 1) * P, n * P]
    candidate = FilterMatrix(spec, taps)

    from .oracle import densify

    rebuilt = densify(candidate).matrix
    deviation = np.abs(dense - rebuilt)
    max_dev = float(deviation.max())
    tol_val = 1e-9 * max(1.0, float(np.abs(dense).max())) if tol is None else float(tol)
    if max_dev <= tol_val:
        return candidate
    flat = int(np.argmax(deviation))
    _, col = np.unravel_index(flat, deviation.shape)
    n, g_idx = divmod(int(col), P)
    return TranslationVarianceReport(
        max_deviation=max_dev,
        tolerance=tol_val,
        witness_translation=spec.element_at(g_idx),
        witness_component=n,
    )

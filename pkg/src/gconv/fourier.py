"""Fourier layer: transforms, translations, convolution, grid-sampled symbols.

The forward transform is the bare character sum X(xi) = sum_g x(g) <-g, xi>;
the inverse carries the full 1/|G| factor. With that normalization Parseval
reads ||x||^2 = (1/|G|) sum_xi |X(xi)|^2.

Transforms are evaluated with a multidimensional FFT over the factor axes,
which computes the defining sums exactly in the mixed-radix sense (prime
sizes included). Convolution, in contrast, is evaluated straight from its
defining sum; the product rule for its transform is a verified property,
not the implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import DomainMismatchError, GConvError, SpecMismatchError
from .group import GroupSpec

DOMAIN_GROUP = "group"
DOMAIN_DUAL = "dual"


@dataclass(eq=False)
class Signal:
    """A complex function on a finite abelian group or on its dual.

    ``values`` is dense, complex, indexed by element index. The domain tag
    records which side of the transform the values live on.
    """

    spec: GroupSpec
    values: np.ndarray
    domain: str = DOMAIN_GROUP

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.complex128).reshape(-1)
        if vals.size != self.spec.cardinality:
            raise SpecMismatchError(
                f"signal has {vals.size} values, group has {self.spec.cardinality} elements"
            )
        if self.domain not in (DOMAIN_GROUP, DOMAIN_DUAL):
            raise DomainMismatchError(f"unknown domain tag {self.domain!r}")
        self.values = vals

    @classmethod
    def zeros(cls, spec: GroupSpec, domain: str = DOMAIN_GROUP) -> "Signal":
        return cls(spec, np.zeros(spec.cardinality, dtype=np.complex128), domain)

    @classmethod
    def delta(cls, spec: GroupSpec, at: Iterable[int] | None = None) -> "Signal":
        """Unit impulse at ``at`` (default: the identity element)."""
        out = np.zeros(spec.cardinality, dtype=np.complex128)
        idx = 0 if at is None else spec.index_of(at)
        out[idx] = 1.0
        return cls(spec, out)

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))


def _require(sig: Signal, domain: str, what: str) -> None:
    if sig.domain != domain:
        raise DomainMismatchError(f"{what} expects a {domain!r} signal, got {sig.domain!r}")


def _require_same_spec(a: Signal, b: Signal, what: str) -> None:
    if a.spec != b.spec:
        raise SpecMismatchError(f"{what}: operands live on different groups")


def fft_last_axis(arr: np.ndarray, spec: GroupSpec) -> np.ndarray:
    """Forward transform applied along the trailing axis of ``arr``."""
    if spec.dim == 0:
        return np.array(arr, dtype=np.complex128)
    shape = arr.shape[:-1] + spec.orders
    axes = tuple(range(arr.ndim - 1, arr.ndim - 1 + spec.dim))
    out = np.fft.fftn(np.asarray(arr, dtype=np.complex128).reshape(shape), axes=axes)
    return out.reshape(arr.shape)


def ifft_last_axis(arr: np.ndarray, spec: GroupSpec) -> np.ndarray:
    """Inverse transform (with the 1/|G| factor) along the trailing axis."""
    if spec.dim == 0:
        return np.array(arr, dtype=np.complex128)
    shape = arr.shape[:-1] + spec.orders
    axes = tuple(range(arr.ndim - 1, arr.ndim - 1 + spec.dim))
    out = np.fft.ifftn(np.asarray(arr, dtype=np.complex128).reshape(shape), axes=axes)
    return out.reshape(arr.shape)


def forward(x: Signal) -> Signal:
    """X(xi) = sum_g x(g) conj(<g, xi>); no normalization on this side."""
    _require(x, DOMAIN_GROUP, "forward")
    return Signal(x.spec, fft_last_axis(x.values, x.spec), DOMAIN_DUAL)


def inverse(X: Signal) -> Signal:
    """x(g) = (1/|G|) sum_xi X(xi) <g, xi>; exact round trip with forward."""
    _require(X, DOMAIN_DUAL, "inverse")
    return Signal(X.spec, ifft_last_axis(X.values, X.spec), DOMAIN_GROUP)


def translate(x: Signal, g: Iterable[int]) -> Signal:
    """(T_g x)(h) = x(h - g)."""
    _require(x, DOMAIN_GROUP, "translate")
    shift = x.spec.validate_element(g)
    if x.spec.dim == 0:
        return Signal(x.spec, x.values.copy())
    nd = x.values.reshape(x.spec.orders)
    rolled = np.roll(nd, shift=shift, axis=tuple(range(x.spec.dim)))
    return Signal(x.spec, rolled.reshape(-1))


def convolve(x: Signal, y: Signal) -> Signal:
    """(x * y)(h) = sum_g x(g) y(h - g), evaluated from the defining sum."""
    _require(x, DOMAIN_GROUP, "convolve")
    _require(y, DOMAIN_GROUP, "convolve")
    _require_same_spec(x, y, "convolve")
    table = x.spec.difference_index_table
    return Signal(x.spec, y.values[table] @ x.values)


def _normalize_taps(entry: Mapping, dim: int | None, where: str):
    out = {}
    for key, value in entry.items():
        offs = (int(key),) if isinstance(key, (int, np.integer)) else tuple(int(k) for k in key)
        if dim is None:
            dim = len(offs)
        elif len(offs) != dim:
            raise GConvError(
                f"{where}: tap offset {offs} has {len(offs)} coordinates, expected {dim}"
            )
        out[offs] = complex(value)
    return out, dim


def grid_symbol(taps, grid_points: int, dim: int | None = None):
    """Sample the transfer function of integer-lattice filter taps on a grid.

    ``taps`` is one offset->coefficient mapping (a 1x1 filter) or an MxN
    nested sequence of mappings; offsets are ints (one dimension) or length-d
    tuples. The trigonometric polynomial sum_n c_n z^-n is evaluated at the
    uniform grid z_j = exp(2 pi i k_j / grid_points), by folding offsets
    modulo the grid and transforming.

    The result carries exact=False: extrema taken over it are one-sided
    bounds of the true essential extrema (suprema approached from below,
    infima from above), tightening as ``grid_points`` grows.
    """
    from .convop import SymbolMatrix

    K = int(grid_points)
    if K < 1:
        raise GConvError(f"grid_points must be >= 1, got {grid_points}")
    if isinstance(taps, Mapping):
        rows = [[taps]]
    else:
        rows = [list(r) for r in taps]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise GConvError("taps must be a mapping or a rectangular nest of mappings")
    M, N = len(rows), len(rows[0])
    normalized = []
    for r, row in enumerate(rows):
        out_row = []
        for c, entry in enumerate(row):
            ent, dim = _normalize_taps(entry, dim, f"taps[{r}][{c}]")
            out_row.append(ent)
        normalized.append(out_row)
    if dim is None:
        raise GConvError("empty support: no taps given and no dimension to infer")
    if not any(ent for row in normalized for ent in row):
        raise GConvError("empty support: no taps given")

    grid = GroupSpec((K,) * dim)
    folded = np.zeros((M, N, grid.cardinality), dtype=np.complex128)
    for m in range(M):
        for n in range(N):
            for offs, coeff in normalized[m][n].items():
                idx = grid.index_of(tuple(o % K for o in offs))
                folded[m, n, idx] += coeff
    data = np.ascontiguousarray(fft_last_axis(folded, grid).transpose(2, 0, 1))
    return SymbolMatrix(grid, data, exact=False)

"""Dense ground truth for cross-checking the frequency-domain fast paths.

Everything here stays deliberately independent of the rest of the package's
machinery: no transforms, no per-point shortcuts. Convolution operators are
written out as generalized block-circulant matrices by direct indexing, and
generator systems as explicit synthesis matrices; extremes come from a full
dense decomposition. Size caps keep the dense work at test scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .convop import FilterMatrix
from .errors import SizeCapError
from .group import GroupSpec
from .riesz import GeneratorSystem

DENSE_DIM_CAP = 512
AMBIENT_CAP = 1024


@dataclass(eq=False)
class DenseOperator:
    """(|G| rows) x (|G| cols) matrix over the translated-impulse basis,
    component-major: column n*|G| + index(g) is the image of T_g(delta e_n)."""

    matrix: np.ndarray
    spec: GroupSpec
    rows: int
    cols: int


def densify(filt: FilterMatrix) -> DenseOperator:
    """Write the filter out as a dense matrix; block (m, n) has entry
    (h, g) = taps[m, n](h - g), circulant with respect to the group."""
    P = filt.spec.cardinality
    table = filt.spec.difference_index_table
    M, N = filt.rows, filt.cols
    out = np.empty((M * P, N * P), dtype=np.complex128)
    for m in range(M):
        for n in range(N):
            out[m * P:(m + 1) * P, n * P:(n + 1) * P] = filt.taps[m, n][table]
    return DenseOperator(out, filt.spec, M, N)


def dense_singular_values(op: DenseOperator) -> np.ndarray:
    """All singular values of the dense matrix, descending."""
    if max(op.matrix.shape) > DENSE_DIM_CAP:
        raise SizeCapError(
            f"dense matrix {op.matrix.shape} exceeds the {DENSE_DIM_CAP} cap"
        )
    return np.linalg.svd(op.matrix, compute_uv=False)


def dense_svd_extremes(op: DenseOperator) -> tuple[float, float]:
    """(largest, smallest) singular value of the dense realization."""
    vals = dense_singular_values(op)
    return float(vals[0]), float(vals[-1])


def dense_synthesis(system: GeneratorSystem) -> np.ndarray:
    """(|K|, N * |G|) matrix with column n*|G| + index(g) = pi_g phi_n."""
    K = system.ambient.cardinality
    G = system.acting.cardinality
    N = system.n_generators
    if K > AMBIENT_CAP:
        raise SizeCapError(f"ambient group size {K} exceeds the {AMBIENT_CAP} cap")
    if N * G > DENSE_DIM_CAP:
        raise SizeCapError(
            f"synthesis matrix has {N * G} columns, exceeding the {DENSE_DIM_CAP} cap"
        )
    # (pi_g phi)(k) = phi(k - iota(g)), written out by index lookup
    table = system.ambient.difference_index_table
    images = system.action_image_indices
    out = np.empty((K, N * G), dtype=np.complex128)
    for n, phi in enumerate(system.generators):
        for g in range(G):
            out[:, n * G + g] = phi.values[table[:, images[g]]]
    return out

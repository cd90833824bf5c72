"""Jacobi-rotation spectra for batches of small complex matrices.

Built for the many-tiny-matrices workload of per-frequency transfer-matrix
analysis: channel counts of a handful, batch size equal to the number of
dual points. Sweeps are cyclic by pairs with the rotation angles computed
vectorized across the whole batch.

Hermitian eigenvalues use two-sided rotations. Singular values use one-sided
column rotations, which never forms A*A explicitly and therefore keeps small
singular values at full absolute accuracy relative to the matrix scale.
"""

from __future__ import annotations

import numpy as np

_MAX_SWEEPS = 64
_EPS = 1e-14


def _plane_rotation(app, aqq, apq, active):
    """Per-batch 2x2 unitary diagonalizing [[app, apq], [conj(apq), aqq]].

    app/aqq are real arrays, apq complex. Returns (c, s, w) describing
    V = [[c, s], [-s w, c w]] with c, s real and w the unit phase that makes
    the pivot block real; V* H V is diagonal. Inactive lanes get identity.
    """
    beta = np.abs(apq)
    safe = np.where(beta > 0, beta, 1.0)
    w = np.conj(apq) / safe  # exp(-i arg apq)
    tau = (aqq - app) / (2.0 * safe)
    t = np.sign(tau) / (np.abs(tau) + np.hypot(1.0, tau))  # hypot: no overflow
    t = np.where(tau == 0.0, 1.0, t)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    c = np.where(active, c, 1.0)
    s = np.where(active, s, 0.0)
    w = np.where(active, w, 1.0)
    return c, s, w


def hermitian_eigenvalues(mats: np.ndarray, eps: float = _EPS) -> np.ndarray:
    """Eigenvalues of a (P, N, N) batch of Hermitian matrices, ascending per row.

    Cyclic two-sided Jacobi; converges when every off-diagonal entry is below
    eps times the matrix Frobenius norm. Accuracy is ~eps * scale, far inside
    the 1e-10 relative contract for N <= 8.
    """
    A = np.array(mats, dtype=np.complex128)
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise ValueError(f"expected a (P, N, N) batch, got shape {A.shape}")
    P, n, _ = A.shape
    if n == 1:
        return A[:, 0, 0].real.reshape(P, 1).copy()
    scale = np.maximum(np.abs(A).max(axis=(1, 2)) * n, 1e-300)
    offmask = ~np.eye(n, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        if np.all(np.abs(A[:, offmask]).max(axis=1) <= eps * scale):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[:, p, q]
                active = np.abs(apq) > eps * scale
                if not active.any():
                    continue
                c, s, w = _plane_rotation(A[:, p, p].real, A[:, q, q].real, apq, active)
                cp, cq = A[:, :, p].copy(), A[:, :, q].copy()
                A[:, :, p] = c[:, None] * cp - (s * w)[:, None] * cq
                A[:, :, q] = s[:, None] * cp + (c * w)[:, None] * cq
                wc = np.conj(w)
                rp, rq = A[:, p, :].copy(), A[:, q, :].copy()
                A[:, p, :] = c[:, None] * rp - (s * wc)[:, None] * rq
                A[:, q, :] = s[:, None] * rp + (c * wc)[:, None] * rq
    return np.sort(np.diagonal(A, axis1=1, axis2=2).real, axis=1)


def singular_values(mats: np.ndarray, eps: float = _EPS) -> np.ndarray:
    """Singular values of a (P, M, N) batch, descending, min(M, N) per row.

    One-sided Jacobi on columns: rotate column pairs until mutually
    orthogonal to eps relative accuracy; the singular values are the final
    column norms.
    """
    A = np.asarray(mats, dtype=np.complex128)
    if A.ndim != 3:
        raise ValueError(f"expected a (P, M, N) batch, got shape {A.shape}")
    if A.shape[1] < A.shape[2]:
        A = np.conj(np.transpose(A, (0, 2, 1)))
    B = np.array(A)
    _, _, n = B.shape
    if n > 1:
        for _ in range(_MAX_SWEEPS):
            rotated = False
            for p in range(n - 1):
                for q in range(p + 1, n):
                    up, uq = B[:, :, p], B[:, :, q]
                    hpp = np.einsum("pi,pi->p", np.conj(up), up).real
                    hqq = np.einsum("pi,pi->p", np.conj(uq), uq).real
                    hpq = np.einsum("pi,pi->p", np.conj(up), uq)
                    active = np.abs(hpq) > eps * np.sqrt(np.maximum(hpp * hqq, 1e-300))
                    if not active.any():
                        continue
                    rotated = True
                    c, s, w = _plane_rotation(hpp, hqq, hpq, active)
                    new_p = c[:, None] * up - (s * w)[:, None] * uq
                    new_q = s[:, None] * up + (c * w)[:, None] * uq
                    B[:, :, p], B[:, :, q] = new_p, new_q
            if not rotated:
                break
    sig = np.sqrt(np.einsum("pij,pij->pj", np.conj(B), B).real)
    return -np.sort(-sig, axis=1)

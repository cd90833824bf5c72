"""Per-frequency profile tables and figure rendering.

The analysis commands can dump, next to their JSON report, the underlying
per-dual-point data: singular values and determinant magnitude of the
symbol, or the eigenvalue range of the Gram symbol. Tables are written as
CSV; figures are rendered with the Agg backend so everything works headless.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .convop import SymbolMatrix
from .jacobi import hermitian_eigenvalues, singular_values


@dataclass(frozen=True)
class ProfileTable:
    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]


def _index_columns(sym: SymbolMatrix):
    res = sym.spec.residue_table
    names = tuple(f"xi_{j}" for j in range(sym.spec.dim))
    return names, res


def symbol_profile(sym: SymbolMatrix, title: str = "symbol spectrum") -> ProfileTable:
    """sigma_max, sigma_min, and (square case) |det| at every dual point."""
    names, res = _index_columns(sym)
    sv = singular_values(sym.data)
    square = sym.rows == sym.cols
    columns = ("xi_index",) + names + ("sigma_max", "sigma_min") + (("abs_det",) if square else ())
    dets = np.abs(np.linalg.det(sym.data)) if square else None
    rows = []
    for i in range(sym.data.shape[0]):
        row = (i, *map(int, res[i]), float(sv[i, 0]), float(sv[i, -1]))
        if square:
            row = row + (float(dets[i]),)
        rows.append(row)
    return ProfileTable(title, columns, tuple(rows))


def gram_profile(gram_sym: SymbolMatrix, title: str = "gram spectrum") -> ProfileTable:
    """lambda_min, lambda_max, and det of the Gram symbol at every dual point."""
    names, res = _index_columns(gram_sym)
    G = gram_sym.data
    sym = 0.5 * (G + np.conj(np.transpose(G, (0, 2, 1))))
    eigs = hermitian_eigenvalues(sym)
    dets = np.linalg.det(sym).real
    columns = ("xi_index",) + names + ("lambda_min", "lambda_max", "det")
    rows = tuple(
        (i, *map(int, res[i]), float(eigs[i, 0]), float(eigs[i, -1]), float(dets[i]))
        for i in range(G.shape[0])
    )
    return ProfileTable(title, columns, rows)


def write_csv(table: ProfileTable, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(table.columns)
        writer.writerows(table.rows)


def render_figure(table: ProfileTable, path) -> None:
    """Plot every numeric series of the table against the dual index."""
    xi = [row[0] for row in table.rows]
    series_start = len(table.columns) - sum(
        1 for c in table.columns if not c.startswith("xi")
    )
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    for j in range(series_start, len(table.columns)):
        ax.plot(xi, [row[j] for row in table.rows], marker="o", markersize=3,
                linewidth=1.2, label=table.columns[j])
    ax.set_xlabel("dual index")
    ax.set_ylabel("value")
    ax.set_title(table.title)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(Path(path), dpi=150)
    plt.close(fig)

"""Finite abelian groups as ordered products of cyclic factors.

A group is described by its factor sizes, e.g. ``(4, 2)`` for Z4 x Z2.
Elements and dual points are plain residue tuples. For a finite product of
cyclic groups the dual group is identified with the same residue tuples, so
a single arithmetic layer serves both sides of the Fourier transform.

Enumeration is row-major in factor order and never canonicalized; the
resulting element index is the array index used by every dense structure in
the package and by the JSON file formats. All functions here are pure and
``GroupSpec`` is immutable, so concurrent use needs no locking.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import SpecMismatchError

Element = tuple[int, ...]
DualPoint = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """Z_{s1} x ... x Z_{sd}, with significant factor order."""

    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(s) for s in self.orders))
        if any(s < 1 for s in self.orders):
            raise SpecMismatchError(
                f"cyclic factor sizes must be >= 1, got {list(self.orders)}"
            )

    @property
    def dim(self) -> int:
        return len(self.orders)

    @cached_property
    def cardinality(self) -> int:
        return math.prod(self.orders)

    def validate_element(self, g: Iterable[int]) -> Element:
        """Coerce ``g`` to a residue tuple for this group or raise."""
        try:
            tup = tuple(int(v) for v in g)
        except TypeError as exc:
            raise SpecMismatchError(f"element {g!r} is not a residue tuple") from exc
        if len(tup) != self.dim:
            raise SpecMismatchError(
                f"element {tup} has {len(tup)} residues, group has {self.dim} factors"
            )
        if any(not (0 <= v < s) for v, s in zip(tup, self.orders)):
            raise SpecMismatchError(f"element {tup} out of range for orders {self.orders}")
        return tup

    def index_of(self, g: Iterable[int]) -> int:
        """Row-major index of an element: sum_j g_j * prod_{k>j} s_k."""
        tup = self.validate_element(g)
        idx = 0
        for v, s in zip(tup, self.orders):
            idx = idx * s + v
        return idx

    def element_at(self, index: int) -> Element:
        if not (0 <= index < self.cardinality):
            raise SpecMismatchError(f"index {index} out of range for |G|={self.cardinality}")
        out = []
        for s in reversed(self.orders):
            index, r = divmod(index, s)
            out.append(r)
        return tuple(reversed(out))

    def elements(self) -> Iterator[Element]:
        """All elements exactly once, in index order."""
        for i in range(self.cardinality):
            yield self.element_at(i)

    def add(self, g: Iterable[int], h: Iterable[int]) -> Element:
        a = self.validate_element(g)
        b = self.validate_element(h)
        return tuple((x + y) % s for x, y, s in zip(a, b, self.orders))

    def neg(self, g: Iterable[int]) -> Element:
        a = self.validate_element(g)
        return tuple((-x) % s for x, s in zip(a, self.orders))

    @cached_property
    def residue_table(self) -> np.ndarray:
        """(|G|, d) int array of residues in index order. Read-only."""
        if self.dim == 0:
            table = np.zeros((1, 0), dtype=np.int64)
        else:
            table = np.indices(self.orders).reshape(self.dim, -1).T.copy()
        table.setflags(write=False)
        return table

    @cached_property
    def _index_weights(self) -> np.ndarray:
        # weights[j] = prod_{k>j} s_k, so index = residues @ weights
        w = np.ones(self.dim, dtype=np.int64)
        for j in range(self.dim - 2, -1, -1):
            w[j] = w[j + 1] * self.orders[j + 1]
        return w

    @cached_property
    def negation_index(self) -> np.ndarray:
        """(|G|,) indices of -g, i.e. value at position i is index_of(-element_at(i))."""
        if self.dim == 0:
            out = np.zeros(1, dtype=np.int64)
        else:
            res = (-self.residue_table) % np.asarray(self.orders)
            out = res @ self._index_weights
        out.setflags(write=False)
        return out

    @cached_property
    def difference_index_table(self) -> np.ndarray:
        """(|G|, |G|) table with entry (h, g) = index_of(element h - element g)."""
        if self.dim == 0:
            out = np.zeros((1, 1), dtype=np.int64)
        else:
            res = self.residue_table
            diff = (res[:, None, :] - res[None, :, :]) % np.asarray(self.orders)
            out = diff @ self._index_weights
        out.setflags(write=False)
        return out


def character(g: Iterable[int], xi: Iterable[int], spec: GroupSpec) -> complex:
    """Pairing <g, xi> = exp(2 pi i sum_j g_j xi_j / s_j).

    Unit modulus, multiplicative in each argument; this is the kernel of the
    transform on ``spec``.
    """
    a = spec.validate_element(g)
    b = spec.validate_element(xi)
    angle = 2.0 * math.pi * sum(((x * y) % s) / s for x, y, s in zip(a, b, spec.orders))
    return cmath.exp(1j * angle)

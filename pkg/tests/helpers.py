"""Shared generators and oracles for the test suite."""

import numpy as np

from gconv import (
    FilterMatrix,
    GeneratorSystem,
    GroupSpec,
    Signal,
    SymbolMatrix,
    SpecMismatchError,
    VectorSignal,
    character,
    filter_from_symbol,
    invertibility,
    symbol,
)

GROUP_POOL = [
    (1,), (2,), (3,), (4,), (5,), (6,), (7,), (8,), (9,), (12,), (16,),
    (2, 2), (4, 2), (2, 3), (3, 3), (2, 2, 2), (3, 3, 2), (4, 4), (2, 2, 3),
    (8, 2), (6, 2), (5, 2),
]


def random_spec(rng, max_card=64, min_card=1):
    pool = [o for o in GROUP_POOL if min_card <= int(np.prod(o)) <= max_card]
    return GroupSpec(pool[rng.integers(0, len(pool))])


def random_values(rng, size):
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)


def random_signal(rng, spec, domain="group"):
    return Signal(spec, random_values(rng, spec.cardinality), domain)


def random_filter(rng, spec, rows, cols):
    return FilterMatrix(spec, random_values(rng, (rows, cols, spec.cardinality)))


def random_vector(rng, spec, n):
    return VectorSignal(spec, random_values(rng, (n, spec.cardinality)))


def conditioned_invertible_filter(rng, min_det=0.1, max_card=16, max_n=3):
    """Random square filter with min |det symbol| at or above min_det."""
    while True:
        spec = random_spec(rng, max_card=max_card)
        n = int(rng.integers(1, max_n + 1))
        filt = random_filter(rng, spec, n, n)
        if invertibility(symbol(filt)).min_det_abs >= min_det:
            return filt


def forced_singular_filter(rng, max_card=16, max_n=3):
    """Random square filter whose symbol is exactly singular at one point."""
    spec = random_spec(rng, max_card=max_card, min_card=2)
    n = int(rng.integers(1, max_n + 1))
    filt = random_filter(rng, spec, n, n)
    data = symbol(filt).data.copy()
    data /= max(1.0, np.abs(data).max())
    xi0 = int(rng.integers(0, spec.cardinality))
    if n == 1:
        data[xi0] = 0.0
    else:
        data[xi0, -1, :] = data[xi0, 0, :]
    return filter_from_symbol(SymbolMatrix(spec, data, exact=True))


def random_system(rng, max_ambient=64, max_gens=3):
    """Random generator system with an injective embedding and N|G| <= |K|."""
    while True:
        factors, card = [], 1
        for _ in range(int(rng.integers(1, 4))):
            s = int(rng.choice([2, 3, 4, 5, 6, 8]))
            if card * s > max_ambient:
                break
            factors.append(s)
            card *= s
        if not factors:
            continue
        ambient = GroupSpec(tuple(factors))
        images, orders = [], []
        for _ in range(int(rng.integers(1, 3))):
            k = tuple(int(rng.integers(0, s)) for s in ambient.orders)
            order, cur = 1, k
            while any(cur):
                cur = ambient.add(cur, k)
                order += 1
            images.append(k)
            orders.append(order)
        acting = GroupSpec(tuple(orders))
        n_max = max(1, ambient.cardinality // acting.cardinality)
        n = int(rng.integers(1, min(max_gens, n_max) + 1))
        gens = tuple(random_signal(rng, ambient) for _ in range(n))
        try:
            return GeneratorSystem(ambient, acting, tuple(images), gens)
        except SpecMismatchError:
            continue  # embedding not injective; redraw


def direct_dft_matrix(spec):
    """Forward transform as an explicit character-sum matrix (the slow oracle)."""
    els = list(spec.elements())
    P = spec.cardinality
    out = np.empty((P, P), dtype=np.complex128)
    for i, xi in enumerate(els):
        for j, g in enumerate(els):
            out[i, j] = np.conj(character(g, xi, spec))
    return out


def vec_of(vector):
    """Component-major flattening matching the dense operator column layout."""
    return vector.stacked.reshape(-1)


def rel_dev(a, b, floor=1.0):
    return abs(a - b) / max(floor, abs(a), abs(b))

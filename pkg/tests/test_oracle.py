import numpy as np
import pytest

from gconv import (
    FilterMatrix,
    GeneratorSystem,
    GroupSpec,
    Signal,
    SizeCapError,
    adjoint,
    apply,
    compose,
    dense_singular_values,
    dense_svd_extremes,
    dense_synthesis,
    densify,
    riesz_analysis,
    symbol,
)
from gconv.jacobi import singular_values
from gconv.oracle import DenseOperator

from helpers import random_filter, random_spec, random_system, random_vector, vec_of


def test_densify_examples():
    spec = GroupSpec((3,))
    eye = densify(FilterMatrix.identity(spec, 2))
    np.testing.assert_allclose(eye.matrix, np.eye(6), atol=1e-15)

    z2 = GroupSpec((2,))
    circ = densify(FilterMatrix(z2, np.array([[[1, 2]]], dtype=complex)))
    np.testing.assert_allclose(circ.matrix, [[1, 2], [2, 1]], atol=1e-15)

    perm = densify(FilterMatrix(spec, np.array([[[0, 1, 0]]], dtype=complex)))
    np.testing.assert_allclose(perm.matrix, [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
                               atol=1e-15)


def test_densify_matches_apply():
    rng = np.random.default_rng(70)
    for _ in range(10):
        spec = random_spec(rng, max_card=24)
        m, n = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        filt = random_filter(rng, spec, m, n)
        dense = densify(filt)
        x = random_vector(rng, spec, n)
        lhs = dense.matrix @ vec_of(x)
        rhs = vec_of(apply(filt, x))
        assert np.abs(lhs - rhs).max() < 1e-12 * max(1.0, np.abs(rhs).max())


def test_block_circulant_structure():
    rng = np.random.default_rng(71)
    spec = random_spec(rng, max_card=16, min_card=2)
    filt = random_filter(rng, spec, 2, 2)
    dense = densify(filt).matrix
    P = spec.cardinality
    for m in range(2):
        for n in range(2):
            block = dense[m * P:(m + 1) * P, n * P:(n + 1) * P]
            for hi, h in enumerate(spec.elements()):
                for gi, g in enumerate(spec.elements()):
                    diff = spec.index_of(spec.add(h, spec.neg(g)))
                    assert block[hi, gi] == filt.taps[m, n, diff]


def test_densify_is_faithful():
    rng = np.random.default_rng(72)
    for _ in range(5):
        spec = random_spec(rng, max_card=12)
        m, k, n = (int(rng.integers(1, 4)) for _ in range(3))
        outer = random_filter(rng, spec, m, k)
        inner = random_filter(rng, spec, k, n)
        lhs = densify(compose(outer, inner)).matrix
        rhs = densify(outer).matrix @ densify(inner).matrix
        assert np.abs(lhs - rhs).max() < 1e-10 * max(1.0, np.abs(rhs).max())
        lhs = densify(adjoint(outer)).matrix
        rhs = np.conj(densify(outer).matrix.T)
        assert np.abs(lhs - rhs).max() < 1e-10 * max(1.0, np.abs(rhs).max())


def test_dense_svd_extremes():
    spec = GroupSpec((2,))
    eye = densify(FilterMatrix.identity(spec, 1))
    assert dense_svd_extremes(eye) == (pytest.approx(1.0), pytest.approx(1.0))

    ones = DenseOperator(np.ones((2, 2), dtype=complex), spec, 1, 1)
    top, bottom = dense_svd_extremes(ones)
    assert top == pytest.approx(2.0)
    assert bottom == pytest.approx(0.0, abs=1e-14)

    with pytest.raises(SizeCapError):
        dense_svd_extremes(DenseOperator(np.zeros((600, 600), dtype=complex),
                                         spec, 300, 300))


def test_singular_multiset_identity():
    rng = np.random.default_rng(73)
    for _ in range(10):
        spec = random_spec(rng, max_card=24)
        n = int(rng.integers(1, 4))
        filt = random_filter(rng, spec, n, n)
        union = np.sort(singular_values(symbol(filt).data).reshape(-1))
        dense = np.sort(dense_singular_values(densify(filt)))
        scale = max(1.0, dense.max())
        assert np.abs(union - dense).max() < 1e-9 * scale


def test_dense_synthesis_examples():
    K, G = GroupSpec((4,)), GroupSpec((2,))
    system = GeneratorSystem(K, G, ((2,),), (Signal.delta(K),))
    S = dense_synthesis(system)
    np.testing.assert_allclose(np.conj(S.T) @ S, np.eye(2), atol=1e-14)

    degenerate = GeneratorSystem(K, G, ((2,),), (Signal(K, [1, 0, 1, 0]),))
    S = dense_synthesis(degenerate)
    np.testing.assert_allclose(S[:, 0], S[:, 1])
    assert np.linalg.svd(S, compute_uv=False)[-1] == pytest.approx(0.0, abs=1e-14)


def test_dense_synthesis_matches_riesz_bounds():
    rng = np.random.default_rng(74)
    system = random_system(rng, max_ambient=32)
    rep = riesz_analysis(system)
    sv = np.linalg.svd(dense_synthesis(system), compute_uv=False)
    assert abs(rep.bessel_bound - sv.max() ** 2) < 1e-9 * max(1.0, sv.max() ** 2)


def test_dense_synthesis_size_cap():
    K = GroupSpec((2,) * 6)  # |K| = 64
    G = GroupSpec((2,) * 6)
    gens = tuple(Signal.delta(K) for _ in range(9))  # 9 * 64 columns > 512
    embedding = tuple(K.element_at(2 ** i) for i in range(5, -1, -1))
    system = GeneratorSystem(K, G, embedding, gens)
    with pytest.raises(SizeCapError):
        dense_synthesis(system)

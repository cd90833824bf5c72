"""Acceptance gate: one test per criterion, each printing a verdict line.

All tolerances are pinned here; run with `pytest -s tests/test_acceptance.py`
to see the per-criterion verdict lines.
"""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from gconv import (
    FilterMatrix,
    GeneratorSystem,
    GroupSpec,
    Signal,
    VectorSignal,
    adjoint,
    apply,
    benzi_bound,
    compose,
    correlation_identity_gap,
    dense_singular_values,
    dense_synthesis,
    densify,
    extract_filter,
    forward,
    gram,
    hermitian_extremal_eigs,
    inverse,
    inverse_filter,
    inverse_norm,
    invertibility,
    operator_norm,
    riesz_analysis,
    symbol,
    translate,
)
from gconv.jacobi import singular_values
from gconv.serialization import dumps, filter_from_jsonable, filter_to_jsonable
from gconv.oracle import dense_svd_extremes

from helpers import (
    conditioned_invertible_filter,
    direct_dft_matrix,
    forced_singular_filter,
    random_filter,
    random_signal,
    random_spec,
    random_system,
    random_vector,
    rel_dev,
)


def _passed(n, text):
    print(f"[PASS] criterion {n}: {text}", flush=True)


@pytest.fixture(scope="module")
def norm_instances():
    rng = np.random.default_rng(1001)
    out = []
    for _ in range(200):
        spec = random_spec(rng, max_card=64)
        m, n = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        out.append(random_filter(rng, spec, m, n))
    return out


def test_criterion_1_norm_formula(norm_instances):
    start = time.perf_counter()
    for filt in norm_instances:
        norm, _ = operator_norm(symbol(filt))
        top, _ = dense_svd_extremes(densify(filt))
        assert rel_dev(norm, top) < 1e-9
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _passed(1, f"operator norm equals dense sigma_max on 200 random filters "
               f"(1e-9 relative, {elapsed:.2f} s)")


def test_criterion_2_inverse_formula():
    rng = np.random.default_rng(1002)
    for _ in range(100):
        filt = conditioned_invertible_filter(rng, min_det=0.1, max_card=16, max_n=4)
        sym = symbol(filt)
        assert invertibility(sym).invertible
        _, smallest = dense_svd_extremes(densify(filt))
        assert rel_dev(inverse_norm(sym), 1.0 / smallest) < 1e-9
        inv = inverse_filter(filt)
        eye = FilterMatrix.identity(filt.spec, filt.rows).taps
        assert np.abs(compose(filt, inv).taps - eye).max() < 1e-9
        assert np.abs(compose(inv, filt).taps - eye).max() < 1e-9
    for _ in range(20):
        res = invertibility(symbol(forced_singular_filter(rng, max_card=16, max_n=4)))
        assert res.invertible is False
        assert res.min_det_abs < 1e-12
    _passed(2, "inverse norm equals 1/sigma_min(dense) and inverse filters "
               "round-trip to the identity; forced symbol zeros are rejected")


def test_criterion_3_cstar_isomorphism():
    rng = np.random.default_rng(1003)
    for _ in range(100):
        spec = random_spec(rng, max_card=32)
        m, k, n = (int(rng.integers(1, 5)) for _ in range(3))
        outer = random_filter(rng, spec, m, k)
        inner = random_filter(rng, spec, k, n)
        lhs = symbol(compose(outer, inner)).data
        rhs = symbol(outer).data @ symbol(inner).data
        assert np.abs(lhs - rhs).max() < 1e-10 * max(1.0, np.abs(rhs).max())
        adj = symbol(adjoint(outer)).data
        ct = np.conj(np.transpose(symbol(outer).data, (0, 2, 1)))
        assert np.abs(adj - ct).max() < 1e-10 * max(1.0, np.abs(ct).max())

        square = random_filter(rng, spec, n, n)
        norm, _ = operator_norm(symbol(square))
        gram_norm, _ = operator_norm(symbol(compose(adjoint(square), square)))
        assert abs(gram_norm - norm ** 2) < 1e-9 * max(1.0, norm ** 2)
    _passed(3, "symbols turn composition into products and adjoints into "
               "conjugate transposes; the norm identity ||A*A|| = ||A||^2 holds")


def test_criterion_4_multiplier_equivalence():
    rng = np.random.default_rng(1004)
    for _ in range(100):
        spec = random_spec(rng, max_card=32)
        m, n = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        filt = random_filter(rng, spec, m, n)
        x = random_vector(rng, spec, n)
        out = apply(filt, x)
        lhs = np.stack([forward(out.component(i)).values for i in range(m)])
        xhat = np.stack([forward(x.component(j)).values for j in range(n)])
        rhs = np.einsum("pmn,np->mp", symbol(filt).data, xhat)
        scale = max(1.0, np.abs(rhs).max())
        assert np.abs(lhs - rhs).max() < 1e-10 * scale
        for g in spec.elements():
            shifted = VectorSignal(spec, np.stack(
                [translate(x.component(j), g).values for j in range(n)]))
            left = apply(filt, shifted).stacked
            right = np.stack([translate(out.component(i), g).values for i in range(m)])
            assert np.abs(left - right).max() < 1e-10 * scale

    for _ in range(20):
        spec = random_spec(rng, max_card=16, min_card=2)
        m, n = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        filt = random_filter(rng, spec, m, n)
        dense = densify(filt).matrix
        recovered = extract_filter(dense, spec, m, n)
        assert isinstance(recovered, FilterMatrix)
        assert np.array_equal(recovered.taps, filt.taps)
        perturbed = dense.copy()
        i = int(rng.integers(0, perturbed.shape[0]))
        j = int(rng.integers(0, perturbed.shape[1]))
        perturbed[i, j] += 1e-3 * (1.0 + np.abs(dense).max())
        rejected = extract_filter(perturbed, spec, m, n)
        assert not isinstance(rejected, FilterMatrix)
    _passed(4, "apply is the symbol multiplier and commutes with every "
               "translation; filters are recovered exactly from dense form and "
               "non-invariant maps are rejected")


def test_criterion_5_riesz_bounds():
    rng = np.random.default_rng(1005)
    for _ in range(100):
        system = random_system(rng, max_ambient=64, max_gens=3)
        rep = riesz_analysis(system)
        sv = np.linalg.svd(dense_synthesis(system), compute_uv=False)
        width = system.n_generators * system.acting.cardinality
        squared = np.zeros(width)
        squared[:sv.size] = sv ** 2
        assert rel_dev(rep.bessel_bound, squared.max()) < 1e-9
        ext = hermitian_extremal_eigs(gram(system).gram_symbol.data)
        assert rel_dev(ext.min_value, squared.min()) < 1e-9
        if rep.is_riesz:
            assert rep.lower_bound == ext.min_value

        x = random_vector(rng, system.acting, system.n_generators)
        y = random_vector(rng, system.acting, system.n_generators)
        scale = max(1.0, x.norm() * y.norm() *
                    max(phi.norm() for phi in system.generators) ** 2)
        assert correlation_identity_gap(system, x, y) < 1e-10 * scale

    K, G = GroupSpec((4,)), GroupSpec((2,))
    degenerate = GeneratorSystem(K, G, ((2,),), (Signal(K, [1, 0, 1, 0]),))
    rep = riesz_analysis(degenerate)
    assert rep.is_riesz is False
    assert rep.min_det <= 1e-12
    _passed(5, "Riesz/Bessel bounds equal the extreme squared singular values "
               "of the dense synthesis matrix; the synthesis inner-product "
               "identity holds; the degenerate translate system is flagged")


def test_criterion_6_benzi_bound(norm_instances):
    scalar_cases = 0
    for filt in norm_instances:
        sym = symbol(filt)
        norm, _ = operator_norm(sym)
        bound = benzi_bound(sym)
        assert bound >= norm - 1e-12 * max(1.0, norm)
        if filt.rows == filt.cols == 1:
            scalar_cases += 1
            assert abs(bound - norm) < 1e-12 * max(1.0, norm)
    assert scalar_cases > 0
    _passed(6, f"entrywise-sup bound dominates the norm on all 200 instances "
               f"(equality in all {scalar_cases} scalar cases)")


def test_criterion_7_fourier_layer():
    rng = np.random.default_rng(1007)
    required = [(1,), (2,), (7,), (4, 2), (3, 3, 2)]
    specs = [GroupSpec(o) for o in required]
    dfts = {spec: direct_dft_matrix(spec) for spec in specs}
    count = 0
    while count < 200:
        spec = specs[count % len(specs)] if count < 100 else random_spec(rng, max_card=36)
        if spec not in dfts:
            dfts[spec] = direct_dft_matrix(spec)
        x = random_signal(rng, spec)
        X = forward(x)
        back = inverse(X)
        scale = max(1.0, np.abs(x.values).max())
        assert np.abs(back.values - x.values).max() < 1e-10 * scale
        lhs = np.sum(np.abs(x.values) ** 2)
        rhs = np.sum(np.abs(X.values) ** 2) / spec.cardinality
        assert abs(lhs - rhs) < 1e-10 * max(1.0, lhs)
        slow = dfts[spec] @ x.values
        assert np.abs(X.values - slow).max() < 1e-10 * max(1.0, np.abs(slow).max())
        count += 1
    _passed(7, "Parseval, round-trip, and direct-sum agreement hold on 200 "
               "random signals across the required group list")


def test_criterion_8_spectral_multiset():
    rng = np.random.default_rng(1008)
    for _ in range(50):
        spec = random_spec(rng, max_card=32)
        n = int(rng.integers(1, 5))
        filt = random_filter(rng, spec, n, n)
        union = np.sort(singular_values(symbol(filt).data).reshape(-1))
        dense = np.sort(dense_singular_values(densify(filt)))
        assert union.shape == dense.shape
        assert np.abs(union - dense).max() < 1e-9 * max(1.0, dense.max())
    _passed(8, "dense singular values coincide with the union of per-frequency "
               "symbol singular values on 50 random square filters")


def _run_cli(*args, path=None):
    cmd = [sys.executable, "-m", "gconv", *args]
    if path is not None:
        cmd.append(path)
    proc = subprocess.run(cmd, capture_output=True, text=True)
    return proc.returncode, proc.stdout


def test_criterion_9_cli_contract(tmp_path):
    rng = np.random.default_rng(1009)
    filt = random_filter(rng, GroupSpec((4, 2)), 2, 3)
    text = dumps(filter_to_jsonable(filt))
    parsed = filter_from_jsonable(json.loads(text))
    assert dumps(filter_to_jsonable(parsed)) == text
    assert np.array_equal(parsed.taps, filt.taps)

    z2 = GroupSpec((2,))
    cases = {
        "identity": FilterMatrix.identity(z2, 2),
        "singular": FilterMatrix(z2, np.array([[[1, 1]]], dtype=complex)),
        "invertible": FilterMatrix(z2, np.array([[[2, 1]]], dtype=complex)),
    }
    paths = {}
    for name, f in cases.items():
        p = tmp_path / f"{name}.json"
        p.write_text(dumps(filter_to_jsonable(f)))
        paths[name] = str(p)

    code, out = _run_cli("norm", path=paths["identity"])
    assert code == 0
    doc = json.loads(out)
    assert doc["operator_norm"] == 1.0 and doc["exact"] is True

    code, out = _run_cli("invert", path=paths["singular"])
    assert code == 2
    doc = json.loads(out)
    assert doc["min_det_abs"] == 0.0 and doc["argmin_xi"] == 1

    code, out = _run_cli("invert", path=paths["invertible"])
    assert code == 0
    taps = json.loads(out)["entries"][0][0]
    assert taps[0][0] == pytest.approx(2 / 3, abs=1e-15)
    assert taps[1][0] == pytest.approx(-1 / 3, abs=1e-15)
    _passed(9, "serialization round-trips bit-exactly and the CLI honors the "
               "exit-code contract on the three worked micro-cases")

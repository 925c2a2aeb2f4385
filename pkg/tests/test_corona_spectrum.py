import math

import numpy as np
import pytest
from conftest import random_connected_graph, random_satellites

from coronawalk import (
    Graph,
    complete_graph,
    corona,
    corona_eigenprojectors,
    corona_laplacian_blocks,
    corona_spectrum,
    cycle_graph,
    eigendecompose,
    empty_graph,
    hypercube_graph,
    lambda_pm,
    laplacian,
    path_graph,
    reconstruct,
)

MIXED3 = [empty_graph(3), Graph(3, frozenset({(0, 1)})), path_graph(3), complete_graph(3)]


def mult_at(pairs, value, tol=1e-9):
    hits = [m for v, m in pairs if abs(v - value) <= tol]
    assert len(hits) == 1
    return hits[0]


def test_lambda_pm_examples():
    assert lambda_pm(0.0, 1) == (2.0, 0.0)
    plus, minus = lambda_pm(2.0, 1)
    assert abs(plus - (2 + math.sqrt(2))) < 1e-12
    assert abs(minus - (2 - math.sqrt(2))) < 1e-12
    plus, minus = lambda_pm(2.0, 6)
    assert abs(plus - (9 + math.sqrt(73)) / 2) < 1e-12
    assert abs(minus - (9 - math.sqrt(73)) / 2) < 1e-12
    with pytest.raises(ValueError):
        lambda_pm(1.0, 0)


def test_lambda_pm_identities():
    rng = np.random.default_rng(3)
    for _ in range(200):
        lam = float(rng.uniform(0.0, 12.0))
        m = int(rng.integers(1, 9))
        plus, minus = lambda_pm(lam, m)
        assert abs(plus + minus - (m + lam + 1)) < 1e-12
        assert abs(plus * minus - lam) < 1e-11
        assert abs((1 - plus) * (1 - minus) + m) < 1e-11


def test_k2_corona_k1_matches_p4():
    cs = corona_spectrum(complete_graph(2), [empty_graph(1)] * 2)
    assert not cs.class_a.present and cs.class_a.multiplicity == 0
    assert cs.class_b == ()
    assert len(cs.class_c) == 2
    assert cs.total_multiplicity() == 4
    got = cs.eigenvalue_list()
    oracle = np.linalg.eigvalsh(laplacian(path_graph(4)))
    assert len(got) == 4
    for (value, mult), expect in zip(got, sorted(oracle)):
        assert mult == 1
        assert abs(value - expect) < 1e-9


def test_double_star_classes():
    cs = corona_spectrum(complete_graph(2), [empty_graph(6)] * 2)
    assert cs.class_a.present and cs.class_a.multiplicity == 10
    assert cs.class_b == ()
    c0, c2 = cs.class_c
    assert (c0.lam_plus, c0.lam_minus) == (7.0, 0.0)
    assert (c0.delta_sq, c0.s, c0.c) == (49, 7, 1)
    assert (c2.delta_sq, c2.s, c2.c) == (73, 1, 73)
    assert abs(c2.lam_plus - (9 + math.sqrt(73)) / 2) < 1e-12
    assert cs.total_multiplicity() == 14


def test_mixed_satellite_class_structure():
    cs = corona_spectrum(hypercube_graph(2), MIXED3)
    assert cs.m == 3
    assert cs.class_a.present and cs.class_a.multiplicity == 3

    assert np.allclose([b.mu for b in cs.class_b], [1.0, 2.0, 3.0], atol=1e-9)
    assert np.allclose([b.value for b in cs.class_b], [2.0, 3.0, 4.0], atol=1e-9)
    assert [b.satellites for b in cs.class_b] == [(2,), (1,), (2, 3)]
    assert [b.multiplicity for b in cs.class_b] == [1, 1, 3]

    assert np.allclose([c.lam for c in cs.class_c], [0.0, 2.0, 4.0], atol=1e-9)
    assert [c.multiplicity for c in cs.class_c] == [1, 2, 1]
    assert [c.delta_sq for c in cs.class_c] == [16, 28, 48]
    assert [(c.s, c.c) for c in cs.class_c] == [(4, 1), (2, 7), (4, 3)]
    assert cs.total_multiplicity() == 16

    # class (b) value 4 meets lambda_plus(0) = m + 1 = 4
    assert mult_at(cs.eigenvalue_list(), 4.0) == 4

    # classes property: class (a) entry first, then (b), then (c)
    assert len(cs.classes) == 1 + 3 + 3
    assert cs.classes[0] is cs.class_a


def test_homogeneous_satellites_pool_all_cells():
    cs = corona_spectrum(cycle_graph(4), [path_graph(3)] * 4)
    assert not cs.class_a.present
    assert np.allclose([b.value for b in cs.class_b], [2.0, 4.0], atol=1e-9)
    assert all(b.satellites == (0, 1, 2, 3) for b in cs.class_b)
    assert all(b.multiplicity == 4 for b in cs.class_b)
    assert mult_at(cs.eigenvalue_list(), 4.0) == 5  # 4 from class (b) plus lambda_plus(0)
    assert cs.total_multiplicity() == 16


def test_non_integer_base_eigenvalues_have_no_exact_split():
    # C5 eigenvalues are 0 and (5 +/- sqrt(5))/2, the latter irrational
    cs = corona_spectrum(cycle_graph(5), [empty_graph(1)] * 5)
    non_integer = [c for c in cs.class_c if abs(c.lam) > 0.5]
    assert len(non_integer) == 2
    for c in non_integer:
        assert c.delta_sq is None and c.s is None and c.c is None
    zero = cs.class_c[0]
    assert abs(zero.lam) < 1e-9
    assert zero.delta_sq == 4 and (zero.s, zero.c) == (2, 1)


def test_projectors_reconstruct_blocks():
    g, hs = hypercube_graph(2), MIXED3
    d = corona_eigenprojectors(g, hs)
    assert sum(d.multiplicities) == 16
    total = np.sum(d.projectors, axis=0)
    assert np.max(np.abs(total - np.eye(d.dim))) < 1e-10
    assert np.max(np.abs(reconstruct(d) - corona_laplacian_blocks(g, hs))) < 1e-9
    for i, fi in enumerate(d.projectors):
        assert np.max(np.abs(fi @ fi - fi)) < 1e-9


def test_projectors_match_dense_oracle():
    cases = [
        (complete_graph(2), [empty_graph(3)] * 2),
        (hypercube_graph(2), MIXED3),
        (complete_graph(2), [complete_graph(2)] * 2),
    ]
    rng = np.random.default_rng(41)
    for _ in range(5):
        n = int(rng.integers(2, 5))
        g = random_connected_graph(rng, n)
        cases.append((g, random_satellites(rng, n, int(rng.integers(1, 4)))))
    for g, hs in cases:
        closed = corona_eigenprojectors(g, hs)
        oracle = eigendecompose(corona_laplacian_blocks(g, hs))
        assert len(closed.eigenvalues) == len(oracle.eigenvalues)
        assert np.max(np.abs(closed.eigenvalues - oracle.eigenvalues)) < 1e-9
        assert closed.multiplicities == oracle.multiplicities
        assert np.max(np.abs(closed.projectors - oracle.projectors)) < 1e-8


def test_base_entries_of_pair_projectors():
    # On base vertices the pair projector reduces to
    # F_lam(G)[u,v] * (1 - value)^2 / ((1 - value)^2 + m).
    g, hs = complete_graph(2), [empty_graph(3)] * 2
    m = 3
    d = corona_eigenprojectors(g, hs)
    g_decomp = eigendecompose(laplacian(g))
    for lam, f_lam in zip(g_decomp.eigenvalues, g_decomp.projectors):
        for value in lambda_pm(float(lam), m):
            idx = int(np.argmin(np.abs(d.eigenvalues - value)))
            w0 = 1.0 - value
            expect = f_lam[0, 1] * w0 * w0 / (w0 * w0 + m)
            assert abs(d.projectors[idx][0, m + 1] - expect) < 1e-12


def test_satellite_confined_projector_has_zero_base_rows():
    d = corona_eigenprojectors(complete_graph(2), [path_graph(3)] * 2)
    idx = int(np.argmin(np.abs(d.eigenvalues - 2.0)))  # mu = 1 class (b) value
    proj = d.projectors[idx]
    assert np.max(np.abs(proj[0, :])) < 1e-12  # base vertex (1,0)
    assert np.max(np.abs(proj[4, :])) < 1e-12  # base vertex (2,0)


def test_collision_merges_into_single_projector():
    # K2 with K2 satellites: class (b) value 3 collides with lambda_plus(0) = 3.
    d = corona_eigenprojectors(complete_graph(2), [complete_graph(2)] * 2)
    idx = int(np.argmin(np.abs(d.eigenvalues - 3.0)))
    assert abs(d.eigenvalues[idx] - 3.0) < 1e-12
    assert d.multiplicities[idx] == 3
    proj = d.projectors[idx]
    assert np.max(np.abs(proj @ proj - proj)) < 1e-10
    assert abs(np.trace(proj) - 3.0) < 1e-10


def test_cluster_tol_validation():
    with pytest.raises(ValueError):
        corona_eigenprojectors(complete_graph(2), [empty_graph(1)] * 2, cluster_tol=0.0)


def test_satellite_order_mismatch():
    with pytest.raises(ValueError):
        corona_spectrum(complete_graph(2), [empty_graph(1), empty_graph(2)])

"""Laplacians, eigensolver contracts, exact kernel, spectral bounds."""

from fractions import Fraction

import numpy as np
import pytest

from conftest import random_connected_graph, random_instance
from rothlab.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    compose,
    cycle_graph,
    join,
    path_graph,
)
from rothlab.spectra import (
    EIG_TOL,
    exact_kernel_dim,
    full_spectrum,
    integer_candidate,
    laplacian,
    mu_lower_bound_degrees,
    mu_upper_bound_cut,
    rayleigh_quotient_signless,
    sign_normalize,
    signless_laplacian,
    smallest_eigenpair,
)


def test_signless_laplacian_entries():
    q = signless_laplacian(complete_graph(2))
    assert np.array_equal(q, [[1, 1], [1, 1]])
    q3 = signless_laplacian(cycle_graph(3))
    vals = np.linalg.eigvalsh(q3)
    assert np.allclose(vals, [1, 1, 4], atol=1e-12)


def test_laplacian_entries():
    ell = laplacian(complete_graph(2))
    assert np.array_equal(ell, [[1, -1], [-1, 1]])
    rng = np.random.default_rng(0)
    for _ in range(10):
        g = random_connected_graph(rng, int(rng.integers(2, 10)))
        assert np.abs(laplacian(g).sum(axis=1)).max() == 0


def test_bipartite_kernel_counts_components():
    # kernel dimension of Q = number of bipartite components
    g = complete_bipartite(2, 3)
    vals = np.linalg.eigvalsh(signless_laplacian(g))
    assert (np.abs(vals) < 1e-9).sum() == 1
    two = Graph(8, frozenset({(0, 1), (2, 3), (4, 5), (6, 7)}))
    vals = np.linalg.eigvalsh(signless_laplacian(two))
    assert (np.abs(vals) < 1e-9).sum() == 4


def test_full_spectrum_contracts():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        m = rng.normal(size=(n, n))
        m = (m + m.T) / 2
        es = full_spectrum(m)
        assert (np.diff(es.values) >= -1e-12).all()
        scale = 1.0 + np.abs(m).sum(axis=1).max()
        assert es.residual_bound <= EIG_TOL * scale
    with pytest.raises(ValueError):
        full_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_smallest_eigenpair_k2():
    pair = smallest_eigenpair(signless_laplacian(complete_graph(2)))
    assert abs(pair.mu) < 1e-12
    assert pair.multiplicity == 1
    x = pair.vector
    assert abs(abs(x[0]) - abs(x[1])) < 1e-12 and x[0] * x[1] < 0


def test_smallest_eigenpair_split(ex88):
    q = signless_laplacian(ex88.H)
    pair = smallest_eigenpair(q, t_split=ex88.t)
    assert abs(pair.mu - 2.0) < 1e-9
    assert pair.w.shape == (6,) and pair.z.shape == (4,)
    assert np.allclose(np.concatenate([pair.w, pair.z]), pair.vector)


def test_join_k2bar_k3_mu_above_gap():
    # two isolated vertices joined with a triangle: t - s = 1, strict inequality
    inst = compose(2, complete_graph(3))
    pair = smallest_eigenpair(signless_laplacian(inst.H))
    assert pair.mu > 1.0 + 1e-6


def test_sign_normalize():
    x = np.array([1.0, 1.0, -2.0, -2.0])
    y = sign_normalize(x, 2)
    assert y[2] > 0 and y[0] < 0
    assert np.array_equal(sign_normalize(-x, 2), y)


def test_integer_candidate():
    assert integer_candidate(2.0) == 2
    assert integer_candidate(2.0 + 5e-8) == 2
    assert integer_candidate(2.001) is None
    assert integer_candidate(0.63226) is None


def test_exact_kernel_known_cases(ex88):
    nullity, basis = exact_kernel_dim(signless_laplacian(complete_graph(2)), 0)
    assert nullity == 1
    v = basis[0]
    assert v[0] == -v[1] != 0
    nullity, _ = exact_kernel_dim(signless_laplacian(cycle_graph(3)), 1)
    assert nullity == 2
    nullity, basis = exact_kernel_dim(signless_laplacian(ex88.H), 2)
    assert nullity == 1
    v = np.array([float(c) for c in basis[0]])
    v /= np.abs(v).max()
    # zeros exactly on the two-side of K_{4,2}
    assert basis[0][4] == basis[0][5] == Fraction(0)
    assert np.allclose(np.abs(v[:4]), 1.0) and np.allclose(np.abs(v[6:]), 1.0)


def test_exact_kernel_rejects_non_integer():
    with pytest.raises(ValueError):
        exact_kernel_dim(np.array([[0.5, 0.0], [0.0, 0.5]]), 0)


def test_exact_kernel_agrees_with_float_multiplicity():
    # whenever the spectrum separates cleanly from c, exact and float agree
    rng = np.random.default_rng(2)
    for _ in range(40):
        g = random_connected_graph(rng, int(rng.integers(2, 9)))
        q = signless_laplacian(g)
        vals = np.linalg.eigvalsh(q)
        for c in range(0, int(np.ceil(vals[-1])) + 1):
            d = np.abs(vals - c)
            if not ((d < 1e-9) | (d > 1e-6)).all():
                continue
            nullity, _ = exact_kernel_dim(q, c)
            assert nullity == (d < 1e-9).sum()


def test_rayleigh_quotient():
    g = complete_graph(2)
    assert rayleigh_quotient_signless(g, np.ones(2)) == pytest.approx(2.0)
    # signed-by-parts vector on a bipartite graph gives zero
    kb = complete_bipartite(2, 3)
    x = np.array([1.0, 1.0, -1.0, -1.0, -1.0])
    assert rayleigh_quotient_signless(kb, x) == pytest.approx(0.0, abs=1e-14)
    with pytest.raises(ValueError):
        rayleigh_quotient_signless(g, np.zeros(2))


def test_rayleigh_never_below_mu():
    rng = np.random.default_rng(3)
    g = random_connected_graph(rng, 8)
    mu = float(np.linalg.eigvalsh(signless_laplacian(g))[0])
    for _ in range(200):
        x = rng.normal(size=8)
        assert rayleigh_quotient_signless(g, x) >= mu - 1e-10


def test_cut_bound_value(ex88):
    # the +-1 vector signed by (S, T) realizes 4e/(s+t)
    assert mu_upper_bound_cut(ex88) == pytest.approx(4 * 8 / 10)
    x = np.concatenate([np.ones(6), -np.ones(4)])
    assert rayleigh_quotient_signless(ex88.H, x) == pytest.approx(3.2)
    inst0 = compose(3, Graph(4))  # edgeless G: bipartite H
    assert mu_upper_bound_cut(inst0) == 0.0


def test_degree_bound_values():
    assert mu_lower_bound_degrees(complete_graph(2)) == pytest.approx(0.0)
    assert mu_lower_bound_degrees(cycle_graph(3)) == pytest.approx(1.0)


def test_mu_sandwich_on_random_instances():
    rng = np.random.default_rng(4)
    for _ in range(60):
        inst = random_instance(rng)
        mu = float(np.linalg.eigvalsh(signless_laplacian(inst.H))[0])
        assert mu_lower_bound_degrees(inst.H) <= mu + 1e-9
        assert mu <= mu_upper_bound_cut(inst) + 1e-9


def test_mu_strictly_below_min_degree():
    # connected with at least one edge: mu < delta, strict
    rng = np.random.default_rng(5)
    for _ in range(60):
        g = random_connected_graph(rng, int(rng.integers(2, 11)))
        mu = float(np.linalg.eigvalsh(signless_laplacian(g))[0])
        assert mu < min(g.degrees())


def test_span_monotonicity_chains():
    rng = np.random.default_rng(6)
    for _ in range(15):
        n = int(rng.integers(3, 10))
        g = Graph(n)
        mu_prev = 0.0
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(non_edges)
        for (u, v) in non_edges:
            g = Graph(n, frozenset(set(g.edges) | {(u, v)}))
            mu = float(np.linalg.eigvalsh(signless_laplacian(g))[0])
            assert mu >= mu_prev - 1e-10
            mu_prev = mu


def test_join_laplacian_top_eigenvalue():
    rng = np.random.default_rng(7)
    for _ in range(15):
        a = random_connected_graph(rng, int(rng.integers(1, 6)))
        b = random_connected_graph(rng, int(rng.integers(1, 6)))
        h = join(a, b)
        vals = np.linalg.eigvalsh(laplacian(h))
        assert vals[-1] == pytest.approx(h.n, abs=1e-9)


def test_bipartite_smallest_vector_constant_by_parts():
    rng = np.random.default_rng(8)
    for _ in range(20):
        a, b = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        k = complete_bipartite(a, b)
        pair = smallest_eigenpair(signless_laplacian(k), t_split=a)
        x = sign_normalize(pair.vector, a)
        assert np.allclose(x[:a], x[0]) and x[0] < 0
        assert np.allclose(x[a:], x[a]) and x[a] > 0

"""Weighted, mixed, and modulation norms against quadrature and closed forms."""

import math

import numpy as np
import pytest
from scipy import integrate

from tfuncert.norms import (
    AdmissibleTriple,
    BracketWeight,
    MixedOrder,
    PowerOmegaWeight,
    PowerXWeight,
    TabulatedWeight,
    default_window,
    fourier_weighted,
    lp_weighted,
    mixed_norm,
    modulation_norm,
    modulation_norm_m,
    moment_seminorm,
    psi_phi_norm,
    stft_mixed_norm,
)
from tfuncert.sampling import RandomFunctionSpec, make_grid, random_smooth
from tfuncert.transforms import stft

from conftest import gaussian


# ---------------------------------------------------------------------------
# function-side norms


def test_lp_gaussian_closed_form(grid512):
    # || e^(-pi x^2) ||_p = p^(-1/(2p))
    f = gaussian(grid512, math.pi)
    for p in (1.0, 1.5, 2.0, 3.0):
        assert lp_weighted(f, p) == pytest.approx(p ** (-0.5 / p), rel=1e-13)
    assert lp_weighted(f, math.inf) == pytest.approx(1.0)


def test_lp_weighted_against_quadrature_oracle(grid512):
    # independent continuous quadrature; the |x| kink in the weight limits the
    # node sum to second order, so check the value and the convergence rate
    p, a, width = 1.7, 1.3, 2.0
    oracle = integrate.quad(
        lambda x: (math.exp(-width * x * x) * (1.0 + abs(x)) ** a) ** p, -6, 6
    )[0] ** (1.0 / p)
    coarse = abs(lp_weighted(gaussian(grid512, width), p, a) - oracle)
    fine = abs(lp_weighted(gaussian(make_grid(4096, 12.0), width), p, a) - oracle)
    assert coarse <= 3e-4 * oracle
    assert fine <= coarse / 16.0


def test_lp_weighted_2d():
    grid = make_grid(64, 10.0, dim=2)
    f = gaussian(grid, math.pi)
    # separable squared Gaussian: each axis contributes p^(-1/(2p))
    assert lp_weighted(f, 2.0) == pytest.approx(2.0 ** (-0.5), rel=1e-12)


def test_moment_seminorm_sides(grid512):
    f = gaussian(grid512, math.pi)
    oracle = (2.0 * integrate.quad(lambda x: x * x * math.exp(-2 * math.pi * x * x), 0, 6)[0]) ** 0.5
    assert moment_seminorm(f, 2.0, 1.0, "x") == pytest.approx(oracle, rel=1e-12)
    # e^(-pi x^2) is invariant under the transform, so both sides agree
    assert moment_seminorm(f, 2.0, 1.0, "omega") == pytest.approx(
        moment_seminorm(f, 2.0, 1.0, "x"), rel=1e-12
    )
    with pytest.raises(ValueError):
        moment_seminorm(f, 2.0, -1.0)
    with pytest.raises(ValueError):
        moment_seminorm(f, 2.0, 1.0, "phase")


def test_fourier_weighted(grid512):
    f = gaussian(grid512, 2.0)
    from tfuncert.transforms import fourier

    assert fourier_weighted(f, 1.5, 0.7) == pytest.approx(
        lp_weighted(fourier(f), 1.5, 0.7), rel=1e-14
    )


# ---------------------------------------------------------------------------
# weights


def test_weight_profiles(grid128):
    w = BracketWeight(1.5, 0.5)
    np.testing.assert_allclose(w.x_profile(grid128), (1 + grid128.radii()) ** 1.5)
    np.testing.assert_allclose(w.omega_profile(grid128), (1 + grid128.freq_radii()) ** 0.5)
    np.testing.assert_allclose(
        w.field(grid128), np.outer(w.x_profile(grid128), w.omega_profile(grid128))
    )
    assert w.separable
    np.testing.assert_allclose(PowerXWeight(2.0).x_profile(grid128), grid128.radii() ** 2)
    np.testing.assert_allclose(
        PowerOmegaWeight(1.0).omega_profile(grid128), grid128.freq_radii()
    )
    with pytest.raises(ValueError):
        BracketWeight(-0.1, 0.0)
    with pytest.raises(ValueError):
        TabulatedWeight(np.full((4, 4), -1.0))


def test_admissible_triple_validation(grid128):
    x = grid128.axis.astype(complex)
    w = grid128.freq_axis.astype(complex)
    triple = AdmissibleTriple(x, w, 1.0)
    assert not triple.separable
    field = triple.field(grid128)
    np.testing.assert_allclose(
        field, np.sqrt(1.0 + np.abs(x[:, None]) ** 2 + np.abs(w[None, :]) ** 2)
    )
    # psi and phi both vanish at the center node, so m0 = 0 leaves m zero there
    with pytest.raises(ValueError):
        AdmissibleTriple(x, w, 0.0)
    with pytest.raises(ValueError):
        AdmissibleTriple(x, w[:-1], 1.0)
    with pytest.raises(ValueError):
        AdmissibleTriple(x, w, np.ones(grid128.size))  # m0 tabulation must be square


# ---------------------------------------------------------------------------
# mixed norms


def test_mixed_norm_orders_and_inf(grid128):
    f = random_smooth(RandomFunctionSpec(seed=1), grid128)
    g = default_window(grid128)
    V = stft(f, g)
    mags = np.abs(V.values)
    # brute-force iterated sums as the oracle
    r, s = 1.5, 2.5
    inner = (np.sum(mags**r, axis=0) * grid128.cell) ** (1 / r)
    expected = (np.sum(inner**s) * grid128.freq_cell) ** (1 / s)
    assert mixed_norm(V, MixedOrder(r, s, "x")) == pytest.approx(expected, rel=1e-13)
    inner = (np.sum(mags**r, axis=1) * grid128.freq_cell) ** (1 / r)
    expected = (np.sum(inner**s) * grid128.cell) ** (1 / s)
    assert mixed_norm(V, MixedOrder(r, s, "omega")) == pytest.approx(expected, rel=1e-13)
    assert mixed_norm(V, MixedOrder(math.inf, math.inf, "x")) == pytest.approx(mags.max())
    with pytest.raises(ValueError):
        MixedOrder(1.5, 2.0, "t")


def test_streaming_matches_dense(grid128):
    f = random_smooth(RandomFunctionSpec(seed=2), grid128)
    g = default_window(grid128)
    V = stft(f, g)
    weight = BracketWeight(0.7, 1.1)
    for order in (
        MixedOrder(1.5, 2.5, "x"),
        MixedOrder(2.5, 1.5, "omega"),
        MixedOrder(math.inf, 2.0, "x"),
        MixedOrder(2.0, math.inf, "omega"),
    ):
        dense = mixed_norm(V, order, weight)
        streamed = stft_mixed_norm(f, g, order, weight, chunk=29)
        assert streamed == pytest.approx(dense, rel=1e-12)
    with pytest.raises(ValueError):
        stft_mixed_norm(f, g, MixedOrder(2.0, 2.0), TabulatedWeight(np.abs(V.values)))


# ---------------------------------------------------------------------------
# modulation norms


def test_default_window_normalized():
    for dim in (1, 2):
        grid = make_grid(64, 10.0, dim=dim)
        assert lp_weighted(default_window(grid), 2.0) == pytest.approx(1.0, abs=1e-14)


def test_modulation_norm_moyal(grid512):
    f = random_smooth(RandomFunctionSpec(seed=3), grid512)
    g = default_window(grid512)
    assert modulation_norm(f, g, 2.0, 2.0) == pytest.approx(lp_weighted(f, 2.0), rel=1e-13)


def test_modulation_norm_gaussian_closed_form(grid512):
    # |V_g g| = e^(-pi(x^2+w^2)/2) gives (2/r)^(1/2r) (2/s)^(1/2s)
    g = default_window(grid512)
    for r, s in ((1.5, 1.5), (1.0, 2.0), (2.0, 3.0)):
        expected = (2.0 / r) ** (0.5 / r) * (2.0 / s) ** (0.5 / s)
        assert modulation_norm(g, g, r, s) == pytest.approx(expected, rel=1e-12)


def test_modulation_norm_weighted_monotone(grid512):
    f = random_smooth(RandomFunctionSpec(seed=4), grid512)
    g = default_window(grid512)
    base = modulation_norm(f, g, 2.0, 2.0)
    heavier = modulation_norm(f, g, 2.0, 2.0, alpha=1.0, beta=0.5)
    assert heavier > base


def test_modulation_norm_m_routes(grid128):
    f = random_smooth(RandomFunctionSpec(seed=5), grid128)
    g = default_window(grid128)
    # separable weight goes through the streaming path, tabulated through dense
    sep = modulation_norm_m(f, g, BracketWeight(0.5, 0.5))
    tab = modulation_norm_m(
        f, g, TabulatedWeight(BracketWeight(0.5, 0.5).field(grid128))
    )
    assert tab == pytest.approx(sep, rel=1e-12)


def test_psi_phi_norm_components(grid128):
    f = random_smooth(RandomFunctionSpec(seed=6), grid128)
    g = default_window(grid128)
    x = grid128.axis.astype(complex)
    w = grid128.freq_axis.astype(complex)
    triple = AdmissibleTriple(x, w, 1.0)
    total = psi_phi_norm(f, g, triple)
    base = modulation_norm_m(f, g, triple.m0_weight())
    locx = moment_seminorm(f, 2.0, 1.0, "x")
    locw = moment_seminorm(f, 2.0, 1.0, "omega")
    assert total == pytest.approx(
        math.sqrt(base**2 + locx**2 + locw**2), rel=1e-12
    )
    # with m0 = 1 the base norm is the plain L2 norm by the Moyal identity
    assert base == pytest.approx(lp_weighted(f, 2.0), rel=1e-12)

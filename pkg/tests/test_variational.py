"""Eigenproblem assembly against brute-force matrices, gradients against
finite differences, and the constrained descent against the Gaussian minimizer."""

import math

import numpy as np
import pytest

from tfuncert.constants import DomainError, ExponentSet, check_galperin_grochenig
from tfuncert.norms import (
    AdmissibleTriple,
    default_window,
    lp_weighted,
    modulation_norm,
    moment_seminorm,
)
from tfuncert.sampling import RandomFunctionSpec, make_grid, random_smooth, scale
from tfuncert.variational import (
    MinimizeOptions,
    ModulationTerm,
    OmegaMomentTerm,
    XMomentTerm,
    build_forms,
    el_residual_banach,
    frechet_directional,
    hilbert_functional,
    minimize_banach,
    minimize_multistart,
    operator_A_apply,
    oscillator_modes,
    oscillator_spectrum,
    smallest_eigen,
)

from conftest import gaussian


SMALL_SPEC = RandomFunctionSpec(seed=21, band_fraction=0.5, envelope_sigma=1.2)


def _unit_window(grid):
    win = default_window(grid)
    return scale(win, 1.0 / lp_weighted(win, 2.0))


def _brute_forms(triple, window, grid):
    """O(size^3) assembly straight from the defining quadrature sums."""
    size, n = grid.size, grid.n
    cell, fcell = grid.cell, grid.freq_cell
    x = grid.coords()
    w = grid.freq_coords()
    gp = window.values
    shape = grid.shape
    # S[(i, k), j] = cell * conj(g(x_j - x_i)) e^{-2 pi i x_j . w_k}
    S = np.empty((size * size, size), dtype=complex)
    ax = np.unravel_index(np.arange(size), shape)
    for i in range(size):
        ii = np.unravel_index(i, shape)
        shift = np.ravel_multi_index(
            tuple((a - o + n // 2) % n for a, o in zip(ax, ii)), shape
        )
        rows = cell * np.conj(gp[shift])[None, :] * np.exp(-2j * math.pi * (w @ x.T))
        S[i * size : (i + 1) * size] = rows
    m0sq = triple._m0_squared().reshape(size * size)
    Q0 = S.conj().T @ (m0sq[:, None] * cell * fcell * S)
    W = cell * np.exp(-2j * math.pi * (w @ x.T))
    Qphi = W.conj().T @ (np.abs(triple.phi[:, None]) ** 2 * fcell * W)
    Qpsi = np.diag(np.abs(triple.psi) ** 2 * cell)
    return Q0, Q0 + Qpsi + Qphi


# ---------------------------------------------------------------------------
# form assembly


def test_build_forms_matches_brute_force_1d():
    grid = make_grid(16, 8.0)
    win = _unit_window(grid)
    x, w = grid.axis, grid.freq_axis
    m0 = 1.0 + np.exp(-np.add.outer(x**2, w**2))
    triple = AdmissibleTriple(x.astype(complex), w.astype(complex), m0)
    pair = build_forms(triple, win, grid)
    Q0, Qfull = _brute_forms(triple, win, grid)
    np.testing.assert_allclose(pair.form0, Q0, atol=1e-13)
    np.testing.assert_allclose(pair.form_full, Qfull, atol=1e-13)
    assert pair.herm_defect0 < 1e-12 and pair.herm_defect_full < 1e-12


def test_build_forms_matches_brute_force_2d():
    grid = make_grid(8, 9.0, dim=2)
    win = _unit_window(grid)
    psi = grid.radii().astype(complex)
    phi = grid.freq_radii().astype(complex)
    m0 = 1.0 + 0.5 * np.cos(np.add.outer(grid.radii(), grid.freq_radii()))
    triple = AdmissibleTriple(psi, phi, m0)
    pair = build_forms(triple, win, grid)
    Q0, Qfull = _brute_forms(triple, win, grid)
    np.testing.assert_allclose(pair.form0, Q0, atol=1e-13)
    np.testing.assert_allclose(pair.form_full, Qfull, atol=1e-13)


def test_build_forms_constant_weight_tight_frame():
    grid = make_grid(32, 10.0)
    win = _unit_window(grid)
    triple = AdmissibleTriple(
        grid.axis.astype(complex), grid.freq_axis.astype(complex), 2.0
    )
    pair = build_forms(triple, win, grid)
    # constant m0: the frame identity collapses form0 to m0^2 h I
    np.testing.assert_allclose(
        pair.form0, 4.0 * grid.cell * np.eye(grid.size), atol=1e-14
    )


def test_build_forms_requires_normalized_window():
    grid = make_grid(16, 8.0)
    win = default_window(grid)
    triple = AdmissibleTriple(grid.axis.astype(complex), grid.freq_axis.astype(complex), 1.0)
    with pytest.raises(ValueError):
        build_forms(triple, scale(win, 2.0), grid)
    with pytest.raises(ValueError):
        build_forms(triple, win, make_grid(32, 8.0))


# ---------------------------------------------------------------------------
# eigenproblem


def test_smallest_eigen_oscillator_triple():
    grid = make_grid(256, 10.0)
    win = _unit_window(grid)
    triple = AdmissibleTriple(grid.axis.astype(complex), grid.freq_axis.astype(complex), 1.0)
    pair = build_forms(triple, win, grid)
    sols = smallest_eigen(pair, 3)
    for k, sol in enumerate(sols):
        assert sol.lam == pytest.approx((2 * k + 1) / (2 * math.pi), abs=1e-6)
        assert sol.nu == pytest.approx(1.0 + sol.lam)
        assert sol.residual < 1e-10
        # vectors come back form0-orthonormal
        v = sol.vector.values
        assert np.vdot(v, pair.form0 @ v).real == pytest.approx(1.0, rel=1e-10)
    with pytest.raises(ValueError):
        smallest_eigen(pair, 0)


def test_operator_apply_and_functional():
    grid = make_grid(128, 10.0)
    win = _unit_window(grid)
    triple = AdmissibleTriple(grid.axis.astype(complex), grid.freq_axis.astype(complex), 1.0)
    pair = build_forms(triple, win, grid)
    sol = smallest_eigen(pair, 1)[0]
    # the localization operator acts as 1/nu on the eigenvector
    Av = operator_A_apply(pair, sol.vector)
    np.testing.assert_allclose(Av.values, sol.vector.values / sol.nu, atol=1e-10)
    assert hilbert_functional(pair, sol.vector) == pytest.approx(sol.lam, rel=1e-10)
    # Rayleigh principle: any other function lies above the bottom eigenvalue
    probe = random_smooth(RandomFunctionSpec(seed=3), grid)
    assert hilbert_functional(pair, probe) >= sol.lam - 1e-12


def test_oscillator_spectrum_and_modes():
    vals = oscillator_spectrum(1024, 16.0, 6)
    targets = [(2 * k + 1) / (2 * math.pi) for k in range(6)]
    np.testing.assert_allclose(vals, targets, atol=1e-3)
    mvals, modes = oscillator_modes(512, 12.0, 3)
    np.testing.assert_allclose(mvals, oscillator_spectrum(512, 12.0, 3), rtol=1e-14)
    h = modes[0].grid.spacing
    gram = np.array(
        [[np.vdot(a.values, b.values).real * h for b in modes] for a in modes]
    )
    np.testing.assert_allclose(gram, np.eye(3), atol=1e-12)
    with pytest.raises(ValueError):
        oscillator_spectrum(512, 12.0, 11)


# ---------------------------------------------------------------------------
# Frechet derivatives


def _term_value(f, term):
    if isinstance(term, XMomentTerm):
        return moment_seminorm(f, term.p, term.a, "x")
    if isinstance(term, OmegaMomentTerm):
        return moment_seminorm(f, term.q, term.b, "omega")
    return modulation_norm(f, term.window, term.r, term.s, term.alpha, term.beta)


def _central_diff(f, u, term, step=1e-4):
    plus = _term_value(f.with_values(f.values + step * u.values), term)
    minus = _term_value(f.with_values(f.values - step * u.values), term)
    return (plus - minus) / (2.0 * step)


def test_frechet_terms_match_central_differences(grid128):
    f = random_smooth(RandomFunctionSpec(seed=31), grid128)
    u = random_smooth(RandomFunctionSpec(seed=32), grid128)
    win = default_window(grid128)
    terms = [
        XMomentTerm(2.0, 1.0),
        XMomentTerm(2.5, 0.7),
        OmegaMomentTerm(2.0, 1.0),
        OmegaMomentTerm(2.2, 0.9),
        ModulationTerm(2.0, 2.0, 0.0, 0.0, win),
        ModulationTerm(1.5, 1.8, 0.3, 0.2, win),
    ]
    for term in terms:
        exact = frechet_directional(f, u, term)
        approx = _central_diff(f, u, term)
        assert exact == pytest.approx(approx, rel=1e-5, abs=1e-8)


def test_frechet_term_validation(grid128):
    with pytest.raises(DomainError):
        XMomentTerm(1.0, 1.0)  # p = 1 is not differentiable
    with pytest.raises(DomainError):
        OmegaMomentTerm(2.0, -0.5)
    with pytest.raises(DomainError):
        ModulationTerm(2.0, 2.0)  # window missing
    with pytest.raises(DomainError):
        ModulationTerm(math.inf, 2.0, window=default_window(grid128))


def test_frechet_homogeneity(grid128):
    # all three terms are 1-homogeneous: dF(f)[f] = F(f)
    f = random_smooth(RandomFunctionSpec(seed=33), grid128)
    win = default_window(grid128)
    for term in (XMomentTerm(2.5, 0.7), OmegaMomentTerm(2.2, 0.9), ModulationTerm(1.5, 1.8, 0.3, 0.2, win)):
        assert frechet_directional(f, f, term) == pytest.approx(_term_value(f, term), rel=1e-10)


# ---------------------------------------------------------------------------
# Banach minimization


HEISENBERG = ExponentSet(d=1, p=2, q=2, a=1, b=1, r=2, s=2, alpha=0, beta=0)


def test_el_residual_gaussian_stationary(grid128):
    win = default_window(grid128)
    f = gaussian(grid128)
    f = scale(f, 1.0 / modulation_norm(f, win, 2, 2))
    lam = moment_seminorm(f, 2, 1, "x") + moment_seminorm(f, 2, 1, "omega")
    assert lam == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-10)
    dirs = [random_smooth(RandomFunctionSpec(seed=40 + k), grid128) for k in range(3)]
    assert el_residual_banach(f, lam, HEISENBERG, win, dirs) < 1e-10
    with pytest.raises(ValueError):
        el_residual_banach(scale(f, 2.0), lam, HEISENBERG, win, dirs)
    with pytest.raises(ValueError):
        el_residual_banach(f, lam, HEISENBERG, win, [])


def test_minimize_gaussian_init_is_fixed_point(grid128):
    win = default_window(grid128)
    sol = minimize_banach(HEISENBERG, win, grid128, init=gaussian(grid128))
    assert sol.converged and sol.iterations == 0
    assert sol.lam == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-9)
    assert not sol.exploratory


def test_minimize_random_start_reaches_gaussian_value(grid128):
    win = default_window(grid128)
    init = random_smooth(RandomFunctionSpec(seed=50), grid128)
    sol = minimize_banach(HEISENBERG, win, grid128, init=init)
    assert sol.converged
    assert sol.el_residual <= 1e-4
    assert sol.lam == pytest.approx(1.0 / math.sqrt(math.pi), abs=1e-5)
    # the minimizer stays clean enough for the guarded certificate route
    dirs = [random_smooth(RandomFunctionSpec(seed=60 + k), grid128) for k in range(3)]
    assert el_residual_banach(sol.minimizer, sol.lam, HEISENBERG, win, dirs) <= 1e-4


def test_minimize_validation(grid128):
    win = default_window(grid128)
    with pytest.raises(DomainError):
        minimize_banach(ExponentSet(d=2, p=2, q=2, a=1, b=1, r=2, s=2), win, grid128)
    with pytest.raises(DomainError):
        minimize_banach(ExponentSet(d=1, p=2, q=2, a=1, b=1), win, grid128)
    with pytest.raises(ValueError):
        minimize_banach(HEISENBERG, win, grid128, init=scale(win, 0.0))
    with pytest.raises(ValueError):
        MinimizeOptions(tol=-1.0)


def test_minimize_exploratory_flag(grid128):
    # moment orders too small for the positivity criterion: run proceeds flagged
    e = ExponentSet(d=1, p=2, q=2, a=0.05, b=0.05, r=1.5, s=1.5)
    assert not bool(check_galperin_grochenig(e))
    win = default_window(grid128)
    sol = minimize_banach(e, win, grid128, init=gaussian(grid128), options=MinimizeOptions(max_iter=5))
    assert sol.exploratory


def test_minimize_multistart_deterministic(grid128):
    win = default_window(grid128)
    opts = MinimizeOptions(max_iter=60)
    a = minimize_multistart(HEISENBERG, win, grid128, starts=2, options=opts, seed=7)
    b = minimize_multistart(HEISENBERG, win, grid128, starts=2, options=opts, seed=7)
    assert [s.lam for s in a] == [s.lam for s in b]
    with pytest.raises(ValueError):
        minimize_multistart(HEISENBERG, win, grid128, starts=0)

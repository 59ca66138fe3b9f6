"""Weighted Lebesgue, mixed, and modulation norms.

Exponents below 1 are quasi-norms and are computed by the same power-sum
formula; ``math.inf`` selects the essential supremum (grid maximum).  Mixed
norms iterate an inner norm over one phase-space variable and an outer norm
over the other, in either order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .sampling import Grid, SampledFunction, GaussianSpec, sample_gaussian, _require_same_grid
from .transforms import PhaseSpaceFunction, fourier, stft, stft_row_chunks

__all__ = [
    "WeightSpec",
    "BracketWeight",
    "PowerXWeight",
    "PowerOmegaWeight",
    "TabulatedWeight",
    "AdmissibleTriple",
    "MixedOrder",
    "default_window",
    "lp_weighted",
    "fourier_weighted",
    "moment_seminorm",
    "mixed_norm",
    "stft_mixed_norm",
    "modulation_norm",
    "modulation_norm_m",
    "psi_phi_norm",
]


def _check_exponent(p: float, name: str = "p") -> float:
    p = float(p)
    if p == math.inf:
        return p
    if not (p > 0.0 and math.isfinite(p)):
        raise ValueError(f"exponent {name} must be positive or inf, got {p}")
    return p


def _power_sum(mags: np.ndarray, p: float, cell: float, axis=None) -> np.ndarray:
    """(sum |.|^p * cell)^(1/p), or the max when p = inf."""
    if p == math.inf:
        return np.max(mags, axis=axis)
    return (np.sum(mags**p, axis=axis) * cell) ** (1.0 / p)


# ---------------------------------------------------------------------------
# weights


class WeightSpec:
    """A non-negative weight on phase space, possibly separable."""

    def x_profile(self, grid: Grid) -> np.ndarray:
        raise NotImplementedError

    def omega_profile(self, grid: Grid) -> np.ndarray:
        raise NotImplementedError

    @property
    def separable(self) -> bool:
        return True

    def field(self, grid: Grid) -> np.ndarray:
        return np.outer(self.x_profile(grid), self.omega_profile(grid))


@dataclass(frozen=True)
class BracketWeight(WeightSpec):
    """(1 + |x|)^alpha (1 + |w|)^beta with nonnegative exponents."""

    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("bracket weight exponents must be nonnegative")

    def x_profile(self, grid: Grid) -> np.ndarray:
        return (1.0 + grid.radii()) ** self.alpha

    def omega_profile(self, grid: Grid) -> np.ndarray:
        return (1.0 + grid.freq_radii()) ** self.beta


@dataclass(frozen=True)
class PowerXWeight(WeightSpec):
    """|x|^a, vanishing at the origin node."""

    a: float

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError("moment weight exponent must be nonnegative")

    def x_profile(self, grid: Grid) -> np.ndarray:
        return grid.radii() ** self.a

    def omega_profile(self, grid: Grid) -> np.ndarray:
        return np.ones(grid.size)


@dataclass(frozen=True)
class PowerOmegaWeight(WeightSpec):
    """|w|^b on the frequency side."""

    b: float

    def __post_init__(self) -> None:
        if self.b < 0:
            raise ValueError("moment weight exponent must be nonnegative")

    def x_profile(self, grid: Grid) -> np.ndarray:
        return np.ones(grid.size)

    def omega_profile(self, grid: Grid) -> np.ndarray:
        return grid.freq_radii() ** self.b


class TabulatedWeight(WeightSpec):
    """Arbitrary nonnegative weight tabulated on the phase-space lattice."""

    def __init__(self, values: np.ndarray):
        vals = np.asarray(values, dtype=float)
        if vals.ndim != 2 or vals.shape[0] != vals.shape[1]:
            raise ValueError("tabulated weight must be a square (x node, w node) array")
        if not np.all(np.isfinite(vals)) or np.any(vals < 0):
            raise ValueError("tabulated weight values must be finite and nonnegative")
        vals = vals.copy()
        vals.setflags(write=False)
        self.values = vals

    @property
    def separable(self) -> bool:
        return False

    def field(self, grid: Grid) -> np.ndarray:
        if self.values.shape != (grid.size, grid.size):
            raise ValueError(
                f"tabulated weight shape {self.values.shape} does not match grid size {grid.size}"
            )
        return self.values


class AdmissibleTriple(WeightSpec):
    """Localization triple (psi on the x grid, phi on the w grid, m0 on phase space).

    The composite weight m = sqrt(m0^2 + |psi|^2 + |phi|^2) must be finite and
    strictly positive everywhere; m0 may be a scalar or a full tabulation.
    """

    def __init__(self, psi: np.ndarray, phi: np.ndarray, m0: Union[float, np.ndarray]):
        psi = np.asarray(psi, dtype=np.complex128).copy()
        phi = np.asarray(phi, dtype=np.complex128).copy()
        if psi.ndim != 1 or phi.ndim != 1 or psi.shape != phi.shape:
            raise ValueError("psi and phi must be flat arrays of equal length")
        if np.isscalar(m0) or np.ndim(m0) == 0:
            m0_arr = float(m0)
            if not (math.isfinite(m0_arr) and m0_arr >= 0):
                raise ValueError("m0 must be finite and nonnegative")
        else:
            m0_arr = np.asarray(m0, dtype=float).copy()
            size = psi.shape[0]
            if m0_arr.shape != (size, size):
                raise ValueError("tabulated m0 must have shape (size, size)")
            if not np.all(np.isfinite(m0_arr)) or np.any(m0_arr < 0):
                raise ValueError("m0 values must be finite and nonnegative")
            m0_arr.setflags(write=False)
        for arr in (psi, phi):
            if not np.all(np.isfinite(arr.view(np.float64))):
                raise ValueError("psi and phi must be finite")
            arr.setflags(write=False)
        self.psi = psi
        self.phi = phi
        self.m0 = m0_arr
        msq = self._m_squared()
        if float(np.min(msq)) <= 0.0:
            raise ValueError("composite weight m vanishes somewhere; the triple is not admissible")

    def _m0_squared(self) -> np.ndarray:
        size = self.psi.shape[0]
        if np.ndim(self.m0) == 0:
            return np.full((size, size), float(self.m0) ** 2)
        return np.asarray(self.m0) ** 2

    def _m_squared(self) -> np.ndarray:
        return (
            self._m0_squared()
            + np.abs(self.psi[:, None]) ** 2
            + np.abs(self.phi[None, :]) ** 2
        )

    def m0_weight(self) -> WeightSpec:
        if np.ndim(self.m0) == 0:
            return TabulatedWeight(self._m0_squared() ** 0.5)
        return TabulatedWeight(np.asarray(self.m0))

    def composite_weight(self) -> "TabulatedWeight":
        return TabulatedWeight(np.sqrt(self._m_squared()))

    @property
    def separable(self) -> bool:
        return False

    def field(self, grid: Grid) -> np.ndarray:
        if self.psi.shape[0] != grid.size:
            raise ValueError("triple tabulation does not match grid size")
        return np.sqrt(self._m_squared())

    @staticmethod
    def from_callables(psi_fn, phi_fn, m0, grid: Grid) -> "AdmissibleTriple":
        psi = np.asarray(psi_fn(grid.coords()), dtype=complex).reshape(grid.size)
        phi = np.asarray(phi_fn(grid.freq_coords()), dtype=complex).reshape(grid.size)
        return AdmissibleTriple(psi, phi, m0)


_UNIT_WEIGHT = BracketWeight(0.0, 0.0)


@dataclass(frozen=True)
class MixedOrder:
    """Inner/outer exponents and which variable the inner norm runs over."""

    r: float
    s: float
    inner: str = "x"

    def __post_init__(self) -> None:
        _check_exponent(self.r, "r")
        _check_exponent(self.s, "s")
        if self.inner not in ("x", "omega"):
            raise ValueError(f"inner must be 'x' or 'omega', got {self.inner!r}")


def default_window(grid: Grid) -> SampledFunction:
    """The L2-normalized Gaussian window 2^(d/4) exp(-pi |x|^2)."""
    d = grid.dim
    spec = GaussianSpec(
        quad_real=math.pi * np.eye(d),
        log_amp=0.25 * d * math.log(2.0),
    )
    return sample_gaussian(spec, grid)


# ---------------------------------------------------------------------------
# function-side norms


def lp_weighted(f: SampledFunction, p: float, a: float = 0.0) -> float:
    """Weighted norm (sum |f|^p (1+|x|)^(a p) h^d)^(1/p); max norm when p=inf."""
    p = _check_exponent(p)
    mags = np.abs(f.values)
    if a != 0.0:
        mags = mags * (1.0 + f.grid.radii()) ** a
    return float(_power_sum(mags, p, f.grid.cell))


def fourier_weighted(f: SampledFunction, q: float, b: float = 0.0) -> float:
    """Weighted norm of the Fourier transform on the conjugate grid."""
    return lp_weighted(fourier(f), q, b)


def moment_seminorm(f: SampledFunction, p: float, a: float, side: str = "x") -> float:
    """Moment seminorm || |x|^a f ||_p, or || |w|^a F f ||_p when side='omega'."""
    p = _check_exponent(p)
    if a < 0:
        raise ValueError(f"moment order must be nonnegative, got {a}")
    if side == "x":
        target, radii, cell = f, f.grid.radii(), f.grid.cell
    elif side == "omega":
        target = fourier(f)
        radii, cell = target.grid.radii(), target.grid.cell
    else:
        raise ValueError(f"side must be 'x' or 'omega', got {side!r}")
    mags = np.abs(target.values) * radii**a
    return float(_power_sum(mags, p, cell))


# ---------------------------------------------------------------------------
# phase-space norms


def mixed_norm(
    F: PhaseSpaceFunction, order: MixedOrder, weight: WeightSpec = _UNIT_WEIGHT
) -> float:
    """Iterated norm of a phase-space field.

    With inner='x' the inner norm integrates over x at fixed w with exponent
    r and cell h^d, and the outer norm integrates over w with exponent s and
    cell (1/L)^d; inner='omega' swaps the roles.  The weight multiplies the
    field values before either norm is taken.
    """
    grid = F.grid
    if weight.separable:
        wx = weight.x_profile(grid)
        ww = weight.omega_profile(grid)
        mags = np.abs(F.values) * wx[:, None] * ww[None, :]
    else:
        mags = np.abs(F.values) * weight.field(grid)
    if order.inner == "x":
        inner = _power_sum(mags, order.r, grid.cell, axis=0)
        return float(_power_sum(inner, order.s, grid.freq_cell))
    inner = _power_sum(mags, order.r, grid.freq_cell, axis=1)
    return float(_power_sum(inner, order.s, grid.cell))


def stft_mixed_norm(
    f: SampledFunction,
    g: SampledFunction,
    order: MixedOrder,
    weight: WeightSpec = _UNIT_WEIGHT,
    chunk: int = 256,
) -> float:
    """Mixed norm of V_g f computed row by row without materializing it.

    Only separable weights are supported here; the inner='x' order
    accumulates power sums over x per frequency node, the inner='omega'
    order reduces each x row as it is produced.
    """
    if not weight.separable:
        raise ValueError("streaming mixed norm requires a separable weight")
    grid = f.grid
    wx = weight.x_profile(grid)
    ww = weight.omega_profile(grid)
    r, s = order.r, order.s
    if order.inner == "x":
        if r == math.inf:
            acc = np.zeros(grid.size)
            for idx, rows in stft_row_chunks(f, g, chunk):
                acc = np.maximum(acc, np.max(np.abs(rows) * wx[idx, None], axis=0))
            inner = acc * ww
        else:
            acc = np.zeros(grid.size)
            for idx, rows in stft_row_chunks(f, g, chunk):
                acc += np.sum((np.abs(rows) * wx[idx, None]) ** r, axis=0)
            inner = (acc * grid.cell) ** (1.0 / r) * ww
        return float(_power_sum(inner, s, grid.freq_cell))
    outers = np.empty(grid.size)
    for idx, rows in stft_row_chunks(f, g, chunk):
        mags = np.abs(rows) * ww[None, :]
        outers[idx] = _power_sum(mags, r, grid.freq_cell, axis=1) * wx[idx]
    return float(_power_sum(outers, s, grid.cell))


# Materialize the phase-space field only up to this many entries; beyond it
# the streaming row-chunk path is used.
_STREAM_THRESHOLD = 1 << 24


def _stft_norm_dispatch(
    f: SampledFunction, g: SampledFunction, order: MixedOrder, weight: WeightSpec
) -> float:
    if weight.separable:
        return stft_mixed_norm(f, g, order, weight)
    if f.grid.size**2 <= _STREAM_THRESHOLD:
        return mixed_norm(stft(f, g), order, weight)
    raise ValueError("field too large for a tabulated weight; supply a separable weight")


def modulation_norm(
    f: SampledFunction,
    g: SampledFunction,
    r: float,
    s: float,
    alpha: float = 0.0,
    beta: float = 0.0,
) -> float:
    """Weighted modulation norm: mixed (r, s) norm of V_g f, inner over x,
    with bracket weight (1+|x|)^alpha (1+|w|)^beta."""
    order = MixedOrder(r, s, inner="x")
    return _stft_norm_dispatch(f, g, order, BracketWeight(alpha, beta))


def modulation_norm_m(f: SampledFunction, g: SampledFunction, m: WeightSpec) -> float:
    """Hilbertian modulation norm (integral of m^2 |V_g f|^2 over phase space)^(1/2)."""
    return _stft_norm_dispatch(f, g, MixedOrder(2.0, 2.0, inner="x"), m)


def psi_phi_norm(f: SampledFunction, g: SampledFunction, w: AdmissibleTriple) -> float:
    """Graph norm sqrt(||f||_{M, m0}^2 + ||psi f||_2^2 + ||phi Ff||_2^2)."""
    _require_same_grid(f, g, "psi_phi_norm")
    if w.psi.shape[0] != f.grid.size:
        raise ValueError("triple tabulation does not match the grid")
    base = modulation_norm_m(f, g, w.m0_weight())
    loc_x = float(np.sum(np.abs(w.psi * f.values) ** 2) * f.grid.cell)
    F = fourier(f)
    loc_w = float(np.sum(np.abs(w.phi * F.values) ** 2) * F.grid.cell)
    return math.sqrt(base**2 + loc_x + loc_w)

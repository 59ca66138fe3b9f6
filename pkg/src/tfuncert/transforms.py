"""Fourier transform, convolution, and time-frequency transforms on grids.

The Fourier transform uses the convention F(w) = \\int f(x) e^{-2 pi i x.w} dx,
realized as a centered DFT scaled by the quadrature cell: with nodes
x_j = (j - n/2) h and frequencies w_k = (k - n/2)/extent, the map is exactly
unitary from the h-weighted to the (1/extent)-weighted inner product.

Circular wrap-around stands in for the real line, so convolution and
windowed transforms guard that their inputs decay at the grid boundary.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .sampling import Grid, SampledFunction, _require_same_grid

__all__ = [
    "AliasingError",
    "PhaseSpaceFunction",
    "fourier",
    "inverse_fourier",
    "convolve",
    "stft",
    "ambiguity",
    "ambiguity_direct",
    "stft_adjoint",
    "stft_row_chunks",
]

# Relative boundary decay required of convolution and STFT inputs.
# loose enough that optimizer iterates with ~1e-9 boundary mass pass, strict
# enough that genuinely non-decaying inputs are still rejected
ALIASING_THRESHOLD = 1e-8

# Largest phase-space field materialized by stft(): size**2 complex entries.
_MAX_MATERIALIZED = 1 << 24


class AliasingError(ValueError):
    """Input does not decay at the grid boundary; wrap-around would alias."""


def _centered_fftn(arr: np.ndarray) -> np.ndarray:
    return np.fft.fftshift(np.fft.fftn(np.fft.ifftshift(arr)))


def _centered_ifftn(arr: np.ndarray) -> np.ndarray:
    return np.fft.fftshift(np.fft.ifftn(np.fft.ifftshift(arr)))


def _centered_fft_rows(arr: np.ndarray, dim_axes: tuple[int, ...]) -> np.ndarray:
    return np.fft.fftshift(
        np.fft.fftn(np.fft.ifftshift(arr, axes=dim_axes), axes=dim_axes), axes=dim_axes
    )


def fourier(f: SampledFunction) -> SampledFunction:
    """Forward transform; the result lives on the conjugate grid."""
    g = f.grid
    out = _centered_fftn(f.reshaped()) * g.cell
    return SampledFunction(g.conjugate(), out.ravel())


def inverse_fourier(F: SampledFunction) -> SampledFunction:
    """Inverse transform; exact two-sided inverse of :func:`fourier`."""
    g = F.grid
    out = _centered_ifftn(F.reshaped()) * g.extent**g.dim
    return SampledFunction(g.conjugate(), out.ravel())


def _check_decay(f: SampledFunction, what: str) -> None:
    mags = np.abs(f.values)
    peak = float(mags.max())
    if peak == 0.0:
        return
    edge = float(mags[f.grid.boundary_mask()].max())
    if edge > ALIASING_THRESHOLD * peak:
        raise AliasingError(
            f"{what}: boundary magnitude {edge:.3e} exceeds "
            f"{ALIASING_THRESHOLD:g} of peak {peak:.3e}; aliasing risk"
        )


def convolve(f: SampledFunction, g: SampledFunction) -> SampledFunction:
    """Continuous convolution (f*g)(x) = \\int f(x-y) g(y) dy via DFT product."""
    _require_same_grid(f, g, "convolve")
    _check_decay(f, "convolve: first input")
    _check_decay(g, "convolve: second input")
    F = fourier(f)
    G = fourier(g)
    return inverse_fourier(F.with_values(F.values * G.values))


@dataclass(frozen=True)
class PhaseSpaceFunction:
    """Complex values on the phase-space lattice (x node, w node).

    ``values[i, k]`` is the value at spatial node i (flat, row-major) and
    frequency node k of the conjugate grid.  One phase-space cell carries
    quadrature weight ``grid.cell * grid.freq_cell``.
    """

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.complex128)
        size = self.grid.size
        if vals.shape != (size, size):
            raise ValueError(f"values must have shape ({size}, {size}), got {vals.shape}")
        if not np.all(np.isfinite(vals.view(np.float64))):
            raise ValueError("values must be finite")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def freq_grid(self) -> Grid:
        return self.grid.conjugate()

    def to_json_dict(self) -> dict:
        return {
            "grid": {"n": self.grid.n, "extent": self.grid.extent, "dim": self.grid.dim},
            "values": [[float(v.real), float(v.imag)] for v in self.values.ravel()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_csv(self, path) -> None:
        """One row per phase-space node: x coords, w coords, re, im."""
        d = self.grid.dim
        size = self.grid.size
        xc = self.grid.coords()
        wc = self.grid.freq_coords()
        xi, ki = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
        cols = [xc[xi.ravel(), ax] for ax in range(d)]
        cols += [wc[ki.ravel(), ax] for ax in range(d)]
        flat = self.values.ravel()
        cols += [flat.real, flat.imag]
        header = ",".join(
            [f"x{ax + 1}" for ax in range(d)] + [f"w{ax + 1}" for ax in range(d)] + ["re", "im"]
        )
        np.savetxt(path, np.column_stack(cols), delimiter=",", header=header, comments="")


def _shift_index_matrix(n: int) -> np.ndarray:
    """idx[i, t] = (t - i + n/2) mod n, so g[idx[i]] samples g(. - x_i)."""
    t = np.arange(n)
    return (t[None, :] - t[:, None] + n // 2) % n


def _window_chunk(g2: np.ndarray, flat_idx: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    """Stack of circularly shifted windows g(. - x_i) for the given flat x nodes."""
    n = shape[0]
    multi = np.unravel_index(flat_idx, shape)
    grids = np.meshgrid(*[np.arange(n)] * len(shape), indexing="ij")
    gathered = [
        (t[None] - idx.reshape((-1,) + (1,) * len(shape)) + n // 2) % n
        for t, idx in zip(grids, multi)
    ]
    return g2[tuple(gathered)]


def stft_row_chunks(f: SampledFunction, g: SampledFunction, chunk: int = 256):
    """Yield ``(flat_x_indices, V rows)`` of the short-time Fourier transform.

    Rows arrive in increasing x-node order; each row holds V_g f(x_i, .) over
    the full frequency lattice.  This is the memory-bounded route to mixed
    norms of phase-space fields too large to materialize.
    """
    grid = f.grid
    d = grid.dim
    axes = tuple(range(1, d + 1))
    f2 = f.reshaped()
    g2 = g.reshaped()
    size = grid.size
    for start in range(0, size, chunk):
        idx = np.arange(start, min(start + chunk, size))
        windows = _window_chunk(g2, idx, grid.shape)
        prod = f2[None] * np.conj(windows)
        rows = _centered_fft_rows(prod, axes) * grid.cell
        yield idx, rows.reshape(len(idx), size)


def stft(f: SampledFunction, g: SampledFunction, *, check: bool = True) -> PhaseSpaceFunction:
    """Short-time Fourier transform V_g f(x, w) with window g.

    V_g f(x, w) = \\int f(t) conj(g(t - x)) e^{-2 pi i t.w} dt; the window
    shift is realized by circular shift, guarded by boundary decay of both
    inputs.  ``check=False`` skips the decay guard; callers that manage
    their own iterates (descent loops evaluating transient candidates whose
    bulk nearly cancels) use it, everything user-facing keeps the default.
    """
    _require_same_grid(f, g, "stft")
    if not np.any(g.values):
        raise ValueError("stft window is identically zero")
    if check:
        _check_decay(f, "stft: function")
        _check_decay(g, "stft: window")
    size = f.grid.size
    if size * size > _MAX_MATERIALIZED:
        raise ValueError(
            f"phase-space field with {size}x{size} entries is too large to materialize; "
            "use stft_row_chunks / the streaming mixed norm instead"
        )
    out = np.empty((size, size), dtype=np.complex128)
    for idx, rows in stft_row_chunks(f, g):
        out[idx] = rows
    return PhaseSpaceFunction(f.grid, out)


def _flip_indices(grid: Grid) -> np.ndarray:
    """Flat index permutation realizing x -> -x under periodic identification."""
    n = grid.n
    axis_flip = (n - np.arange(n)) % n
    if grid.dim == 1:
        return axis_flip
    mesh = np.meshgrid(*[axis_flip] * grid.dim, indexing="ij")
    return np.ravel_multi_index([m.ravel() for m in mesh], grid.shape)


def ambiguity(f: SampledFunction, g: SampledFunction) -> PhaseSpaceFunction:
    """Cross-ambiguity A(f,g)(x,w) = \\int f(t - x/2) conj(g(t + x/2)) e^{-2 pi i w.t} dt.

    Computed from the STFT through A(f,g)(x,w) = e^{-i pi w.x} V_g f(-x, w),
    which avoids half-node shifts.
    """
    V = stft(f, g)
    grid = f.grid
    flip = _flip_indices(grid)
    dots = grid.coords() @ grid.freq_coords().T
    phase = np.exp(-1j * math.pi * dots)
    return PhaseSpaceFunction(grid, phase * V.values[flip])


def ambiguity_direct(f: SampledFunction, g: SampledFunction, steps: int) -> np.ndarray:
    """Defining integral of the ambiguity function along one even lag.

    ``steps`` is the x-node offset from the center node and must be even, so
    that the half shifts t -/+ x/2 land on grid nodes.  Returns the row over
    all frequency nodes, for cross-checking :func:`ambiguity`.  One
    dimension only.
    """
    _require_same_grid(f, g, "ambiguity_direct")
    if f.grid.dim != 1:
        raise ValueError("ambiguity_direct supports one dimension only")
    if steps % 2 != 0:
        raise ValueError(f"lag must be an even node offset, got {steps}")
    half = steps // 2
    fs = np.roll(f.values, half)
    gs = np.roll(g.values, -half)
    prod = fs * np.conj(gs)
    return _centered_fftn(prod) * f.grid.cell


def stft_adjoint(Y: np.ndarray, g: SampledFunction) -> np.ndarray:
    """Adjoint of the STFT under flat (unweighted) inner products.

    For the linear map u -> stft(u, g).values, returns S^H Y so that
    ``vdot(Y, stft(u, g).values) == vdot(stft_adjoint(Y, g), u.values)``.
    Fold any quadrature or weight factors into Y before calling.
    """
    grid = g.grid
    size = grid.size
    Y = np.asarray(Y, dtype=np.complex128)
    if Y.shape != (size, size):
        raise ValueError(f"Y must have shape ({size}, {size})")
    d = grid.dim
    axes = tuple(range(1, d + 1))
    # W[i, j] = sum_k Y[i, k] e^{+2 pi i x_j . w_k}
    Yr = Y.reshape((size,) + grid.shape)
    W = np.fft.fftshift(
        np.fft.ifftn(np.fft.ifftshift(Yr, axes=axes), axes=axes), axes=axes
    ).reshape(size, size) * (grid.n**d)
    g2 = g.reshaped()
    acc = np.zeros(size, dtype=np.complex128)
    chunk = 256
    for start in range(0, size, chunk):
        idx = np.arange(start, min(start + chunk, size))
        # windows[i, j] = g(x_j - x_i)
        windows = _window_chunk(g2, idx, grid.shape).reshape(len(idx), size)
        acc += np.sum(windows * W[idx], axis=0)
    return grid.cell * acc

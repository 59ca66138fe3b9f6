"""Shared helpers: canonical grids, Gaussian samplers, in-process CLI runner."""

import contextlib
import io
import math

import numpy as np
import pytest

from tfuncert.cli import main
from tfuncert.sampling import GaussianSpec, make_grid, sample_gaussian


@pytest.fixture(scope="session")
def grid512():
    return make_grid(512, 12.0)


@pytest.fixture(scope="session")
def grid128():
    return make_grid(128, 10.0)


def gaussian(grid, width=math.pi, chirp=0.0, log_amp=0.0):
    """Centered Gaussian exp(-width |x|^2 - i chirp |x|^2) on the grid."""
    d = grid.dim
    spec = GaussianSpec(width * np.eye(d), chirp * np.eye(d), log_amp=log_amp)
    return sample_gaussian(spec, grid)


def run_cli(argv):
    """Invoke the CLI entry point, capturing stdout; returns (exit code, text)."""
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            code = main(argv)
    except SystemExit as exc:  # argparse usage failures carry their own code
        code = exc.code
    return code, buf.getvalue()

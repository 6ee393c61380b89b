"""Module frames over finite-dimensional C*-algebras."""

from ._cframe import (
    CframeError,
    Frame,
    brute_force_bounds,
    expectation_frames,
    interval_frame,
    load_frame,
    quasi_basis_residual,
    random_frame,
    run_cli,
)

__all__ = [
    "CframeError",
    "Frame",
    "brute_force_bounds",
    "expectation_frames",
    "interval_frame",
    "load_frame",
    "quasi_basis_residual",
    "random_frame",
    "run_cli",
]

"""Vaidya metric curvature and soliton residual checks."""

from ._core import (
    InvalidInput,
    VaidyaError,
    __version__,
    classify,
    kappa,
    ricci,
    run,
    scalar_curvature,
    solved_residual,
)

__all__ = [
    "InvalidInput",
    "VaidyaError",
    "__version__",
    "classify",
    "kappa",
    "ricci",
    "run",
    "scalar_curvature",
    "solved_residual",
]

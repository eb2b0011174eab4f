"""Resource limits and default numerical tolerances shared across the package."""

from __future__ import annotations

import os

# Largest chain the dense 2^L representation is allowed to build.  16384^2
# complex entries is about 4 GB for a single operator, so 14 is already
# generous; override with the FFMZM_LMAX environment variable.
DEFAULT_L_MAX = 14
ENV_L_MAX = "FFMZM_LMAX"

# Spectral-norm tolerance for "this operator is zero" checks.
ZERO_TOL = 1e-10
# Absolute tolerance grouping eigenvalues into the ground level.
DEGENERACY_TOL = 1e-9
# Hermiticity check tolerance (max-entry norm).
HERMITIAN_TOL = 1e-12
# Frustration-freeness: ground energy of the zero-normalized chain.
FF_ENERGY_TOL = 1e-10
# Frustration-freeness: per-dimer residual on ground vectors.
FF_RESIDUAL_TOL = 1e-9
# Eigenvalues above this count towards the range of a PSD dimer.
RANGE_TOL = 1e-10
# Singular values of the Majorana coefficient matrix below this are zero modes.
ZERO_MODE_TOL = 1e-9


class ResourceLimitError(RuntimeError):
    """Requested chain length exceeds the configured dense-matrix limit."""


def max_sites() -> int:
    """Current chain-length limit, honouring the FFMZM_LMAX override."""
    raw = os.environ.get(ENV_L_MAX)
    if raw is None:
        return DEFAULT_L_MAX
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_L_MAX} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ENV_L_MAX} must be >= 1, got {value}")
    return value


def check_sites(L: int) -> None:
    """Raise ResourceLimitError if a 2^L-dimensional operator is too large."""
    if L > max_sites():
        raise ResourceLimitError(
            f"chain length L={L} exceeds the limit of {max_sites()} sites "
            f"(set {ENV_L_MAX} to raise it)"
        )

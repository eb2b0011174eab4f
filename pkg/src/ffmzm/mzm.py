"""Majorana zero-mode machinery.

A quadratic parity-conserving chain is summarised by the real antisymmetric
coefficient matrix A with

    H = const * I + (i/4) sum_{jk} A_{jk} g_j g_k,

where (g_1, g_2, ...) = (a_1, b_1, a_2, b_2, ...) interleaves the two
Majorana flavours site by site.  Kernel vectors of A are zero modes; the
five defining conditions (Hermiticity, parity anticommutation, commutation
with H, unit square, edge localization) are measured as residuals on the
dense operators.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import hamiltonians as ham
from . import jordan_wigner as jw
from .config import ZERO_MODE_TOL
from .hilbert import PAULI, embed_pauli, parity_signs, spectral_norm

# Floor below which a localization weight is treated as numerically zero
# when fitting the log-linear decay profile.
PROFILE_FLOOR = 1e-30


class NonQuadraticError(ValueError):
    """The operator has quartic (interacting) Majorana content."""


@dataclass(frozen=True)
class MajoranaQuadraticForm:
    """Antisymmetric coefficient matrix of a quadratic Majorana Hamiltonian."""

    a_matrix: np.ndarray  # real, shape (2L, 2L), ordering a1, b1, a2, b2, ...
    L: int
    constant: float
    quartic_residual: float

    def __post_init__(self):
        if np.max(np.abs(self.a_matrix + self.a_matrix.T)) > 1e-12:
            raise ValueError("coefficient matrix must be antisymmetric")


def _trace_product(M: np.ndarray, N: np.ndarray) -> complex:
    """Tr[M N] without forming the product matrix."""
    return complex(np.sum(M * N.T))


def quadratic_part(H: np.ndarray, ops: jw.FermionOpSet):
    """Project H onto constant + quadratic Majorana monomials.

    Returns (form, residual) where residual is the Frobenius norm of the
    part of H outside that span (nonzero linear or quartic content).
    """
    L = ops.L
    dim = 2**L
    gammas = ops.majoranas()
    n = 2 * L
    products = [g @ H for g in gammas]
    A = np.zeros((n, n), dtype=float)
    for j in range(n):
        for k in range(j + 1, n):
            # coefficient of the Hermitian monomial i g_j g_k
            h_jk = 1j * _trace_product(gammas[j], products[k]) / dim
            A[j, k] = 2.0 * h_jk.real
            A[k, j] = -A[j, k]
    constant = float((np.trace(H) / dim).real)
    rebuilt = reconstruct_quadratic(A, ops) + constant * np.eye(dim)
    residual = float(np.linalg.norm(H - rebuilt))
    form = MajoranaQuadraticForm(a_matrix=A, L=L, constant=constant, quartic_residual=residual)
    return form, residual


def reconstruct_quadratic(a_matrix: np.ndarray, ops: jw.FermionOpSet) -> np.ndarray:
    """Dense operator (i/4) sum_{jk} A_{jk} g_j g_k."""
    gammas = ops.majoranas()
    dim = 2**ops.L
    out = np.zeros((dim, dim), dtype=complex)
    for j, gj in enumerate(gammas):
        row = a_matrix[j]
        combo = np.zeros((dim, dim), dtype=complex)
        for k, gk in enumerate(gammas):
            if row[k] != 0.0:
                combo += row[k] * gk
        out += gj @ combo
    return 0.25j * out


def extract_quadratic_form(
    H: np.ndarray, ops: jw.FermionOpSet, tol: float = 1e-10
) -> MajoranaQuadraticForm:
    """Antisymmetric coefficient matrix of a quadratic H; error on quartic content."""
    form, residual = quadratic_part(H, ops)
    scale = max(1.0, float(np.linalg.norm(H)))
    if residual > tol * scale:
        raise NonQuadraticError(
            f"operator has non-quadratic Majorana content (residual {residual:.3e}); "
            "this signals an interacting chain"
        )
    return form


def null_modes(form: MajoranaQuadraticForm, tol: float = ZERO_MODE_TOL) -> np.ndarray:
    """Orthonormal kernel basis of the coefficient matrix, rows = mode vectors.

    The kernel basis is made deterministic (and edge modes well separated)
    by diagonalizing the site-position operator within the kernel, then
    fixing each vector's overall sign.
    """
    A = form.a_matrix
    _, svals, vt = np.linalg.svd(A)
    kernel = vt[svals <= tol]
    if kernel.shape[0] == 0:
        return kernel
    positions = np.repeat(np.arange(1, form.L + 1, dtype=float), 2)
    pos_in_kernel = kernel @ (positions[:, None] * kernel.T)
    pos_in_kernel = 0.5 * (pos_in_kernel + pos_in_kernel.T)
    _, rot = np.linalg.eigh(pos_in_kernel)
    modes = rot.T @ kernel
    for row in modes:
        pivot = np.argmax(np.abs(row))
        if row[pivot] < 0:
            row *= -1.0
    return modes


def mode_operator(vector: np.ndarray, ops: jw.FermionOpSet) -> np.ndarray:
    """Dense operator sum_m v_m g_m for a Majorana coefficient vector."""
    vector = np.asarray(vector)
    gammas = ops.majoranas()
    if vector.shape != (len(gammas),):
        raise ValueError(f"expected a length-{len(gammas)} coefficient vector")
    dim = 2**ops.L
    out = np.zeros((dim, dim), dtype=complex)
    for vm, gm in zip(vector, gammas):
        if vm != 0.0:
            out += vm * gm
    return out


def case_iii_mode(f: float, L: int, ops: jw.FermionOpSet | None = None) -> np.ndarray:
    """The geometric complex zero mode N sum_j f^j c_j of the case3 chain.

    Commutes with the case3 chain exactly when the two dimer eigenvalues
    coincide (A = B); the normalization makes {mode, mode^dag} = 1.
    """
    if f == 0.0:
        raise ValueError("f must be nonzero")
    if ops is None:
        ops = jw.build_fermion_ops(L)
    weights = np.array([f**j for j in range(1, L + 1)])
    weights = weights / np.linalg.norm(weights)
    dim = 2**L
    out = np.zeros((dim, dim), dtype=complex)
    for w, cj in zip(weights, ops.c):
        out += w * cj
    return out


@dataclass(frozen=True)
class ModeReport:
    """Residuals of the zero-mode conditions plus the localization summary."""

    hermiticity_residual: float
    parity_anticomm_residual: float
    commutator_residual: float
    normalization_residual: float
    localization_profile: np.ndarray  # per-site weights, sums to 1
    edge: str  # left | right | delocalized
    decay_rate: float
    decay_r2: float

    def to_json_dict(self) -> dict:
        return {
            "hermiticity_residual": self.hermiticity_residual,
            "parity_anticomm_residual": self.parity_anticomm_residual,
            "commutator_residual": self.commutator_residual,
            "normalization_residual": self.normalization_residual,
            "localization_profile": [float(w) for w in self.localization_profile],
            "edge": self.edge,
            "decay_fit": {"rate": self.decay_rate, "r2": self.decay_r2},
        }


def _majorana_linear_coefficients(gamma: np.ndarray, ops: jw.FermionOpSet):
    """Coefficient vector if gamma is linear in the Majoranas, else None."""
    dim = 2**ops.L
    gammas = ops.majoranas()
    coeffs = np.array([_trace_product(gm, gamma) / dim for gm in gammas])
    rebuilt = np.zeros_like(gamma)
    for cm, gm in zip(coeffs, gammas):
        rebuilt += cm * gm
    scale = max(1.0, float(np.linalg.norm(gamma)))
    if np.linalg.norm(gamma - rebuilt) <= 1e-10 * scale:
        return coeffs
    return None


def _pauli_site_weights(gamma: np.ndarray, L: int) -> np.ndarray:
    """Per-site share of Pauli terms acting nontrivially on that site."""
    hs2 = float(np.linalg.norm(gamma) ** 2)
    weights = np.zeros(L)
    for site in range(1, L + 1):
        averaged = gamma.copy()
        for letter in "XYZ":
            P = embed_pauli(letter, site, L)
            averaged = averaged + P @ gamma @ P
        averaged /= 4.0  # projection onto identity-at-site terms
        weights[site - 1] = hs2 - float(np.linalg.norm(averaged) ** 2)
    total = weights.sum()
    if total <= 0:
        raise ValueError("operator has no single-site support to localize")
    return weights / total


def _decay_fit(weights: np.ndarray) -> tuple[float, float]:
    """Least-squares slope of log(weight) against distance from the heavy edge."""
    L = len(weights)
    if L < 2:
        return 0.0, 0.0
    ref_left = int(np.argmax(weights)) < L / 2
    distances = np.arange(L, dtype=float) if ref_left else np.arange(L - 1, -1, -1, dtype=float)
    logs = np.log(np.maximum(weights, PROFILE_FLOOR))
    slope, intercept = np.polyfit(distances, logs, 1)
    fitted = slope * distances + intercept
    ss_res = float(np.sum((logs - fitted) ** 2))
    ss_tot = float(np.sum((logs - logs.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    return float(slope), float(r2)


def mzm_condition_report(
    gamma: np.ndarray, H: np.ndarray, L: int, ops: jw.FermionOpSet | None = None
) -> ModeReport:
    """Measure the zero-mode conditions for a candidate operator.

    The localization profile uses the per-site quadratic weights when gamma
    is linear in the Majoranas and the single-site Pauli-weight marginal
    otherwise.  The edge label follows the thirds rule on the profile's
    center of mass (left below L/3, right above 2L/3, else delocalized).
    """
    if gamma.shape != H.shape:
        raise ValueError("gamma and H must share one dimension")
    if ops is None:
        ops = jw.build_fermion_ops(L)
    signs = parity_signs(L)
    herm = spectral_norm(gamma - gamma.conj().T)
    anti = spectral_norm(signs[:, None] * gamma + gamma * signs[None, :])
    comm = spectral_norm(gamma @ H - H @ gamma)
    norm2 = spectral_norm(gamma @ gamma - np.eye(gamma.shape[0]))

    coeffs = _majorana_linear_coefficients(gamma, ops)
    if coeffs is not None:
        pair = np.abs(coeffs) ** 2
        profile = pair[0::2] + pair[1::2]
        profile = profile / profile.sum()
    else:
        profile = _pauli_site_weights(gamma, L)

    com = float(np.dot(np.arange(1, L + 1), profile))
    if com < L / 3:
        edge = "left"
    elif com > 2 * L / 3:
        edge = "right"
    else:
        edge = "delocalized"
    rate, r2 = _decay_fit(profile)
    return ModeReport(
        hermiticity_residual=float(herm),
        parity_anticomm_residual=float(anti),
        commutator_residual=float(comm),
        normalization_residual=float(norm2),
        localization_profile=profile,
        edge=edge,
        decay_rate=rate,
        decay_r2=r2,
    )


@dataclass(frozen=True)
class MZMScanReport:
    """Zero-mode census of one quadratic family spec."""

    n_zero_modes: int
    reports: list
    spatially_separated: bool
    quadratic_form_zero: bool
    zero_mode_tol: float

    def to_json_dict(self) -> dict:
        return {
            "n_zero_modes": self.n_zero_modes,
            "reports": [r.to_json_dict() for r in self.reports],
            "spatially_separated": self.spatially_separated,
            "quadratic_form_zero": self.quadratic_form_zero,
            "zero_mode_tol": self.zero_mode_tol,
        }


def mzm_scan(spec: ham.FFModelSpec, zero_mode_tol: float = ZERO_MODE_TOL) -> MZMScanReport:
    """Extract the quadratic form of a non-interacting spec and grade its modes.

    Interacting specs (two distinct dimer eigenvalues, A != B) are rejected:
    their chains have quartic Majorana content and no coefficient matrix.
    When the quadratic part vanishes identically (the type2 point, whose
    fermionic image is pure interaction) the report documents that
    degenerate case with zero modes counted as none.
    """
    p = spec.params
    if spec.family not in ("type1", "type2", "case2", "case3"):
        raise NonQuadraticError(f"no fermionic quadratic form for family {spec.family!r}")
    if abs(p["A"] - p["B"]) > 1e-12:
        raise NonQuadraticError(
            f"A = {p['A']} and B = {p['B']} differ; the chain is interacting "
            "and has no quadratic Majorana form"
        )
    ops = jw.build_fermion_ops(spec.L)
    H = jw.fermionic_hprime(spec)
    form, residual = quadratic_part(H, ops)
    if np.max(np.abs(form.a_matrix)) <= 1e-10:
        return MZMScanReport(
            n_zero_modes=0,
            reports=[],
            spatially_separated=False,
            quadratic_form_zero=True,
            zero_mode_tol=zero_mode_tol,
        )
    scale = max(1.0, float(np.linalg.norm(H)))
    if residual > 1e-10 * scale:
        raise NonQuadraticError(
            f"operator has non-quadratic Majorana content (residual {residual:.3e})"
        )
    modes = null_modes(form, tol=zero_mode_tol)
    reports = [mzm_condition_report(mode_operator(v, ops), H, spec.L, ops) for v in modes]
    edges = [r.edge for r in reports]
    separated = "left" in edges and "right" in edges
    return MZMScanReport(
        n_zero_modes=len(modes),
        reports=reports,
        spatially_separated=bool(separated),
        quadratic_form_zero=False,
        zero_mode_tol=zero_mode_tol,
    )


def kitaev_topological_inequality(t: float, mu_bulk: float) -> bool:
    """The non-interacting topological-phase test 2|t| > |mu|."""
    return 2.0 * abs(t) > abs(mu_bulk)

"""Exact diagonalization: spectra, frustration-freeness, gaps, sector splits.

All eigenproblems are dense Hermitian ones; no iterative solver is used, so
there is no convergence tolerance to argue about.  "Gapped" statements at
these sizes are finite-chain trend measurements, never thermodynamic claims,
and the reports label them as such.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import hamiltonians as ham
from .config import DEGENERACY_TOL, FF_ENERGY_TOL, FF_RESIDUAL_TOL, RANGE_TOL, check_sites
from .hilbert import is_hermitian, kron_chain, parity_signs, sites_of, spectral_norm


@dataclass(frozen=True)
class SpectrumResult:
    """Full spectrum of a Hermitian operator with its ground-level summary."""

    eigenvalues: np.ndarray
    ground_energy: float
    ground_degeneracy: int
    gap: float
    ground_basis: np.ndarray  # shape (dim, ground_degeneracy), orthonormal columns
    degeneracy_tol: float

    def to_json_dict(self) -> dict:
        return {
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "ground_energy": self.ground_energy,
            "ground_degeneracy": self.ground_degeneracy,
            "gap": self.gap,
            "degeneracy_tol": self.degeneracy_tol,
        }


@dataclass(frozen=True)
class FFVerdict:
    """Outcome of the frustration-freeness test for one chain."""

    is_ff: bool
    ground_energy: float
    per_dimer_residuals: list
    energy_tol: float
    residual_tol: float

    def to_json_dict(self) -> dict:
        return {
            "is_ff": self.is_ff,
            "ground_energy": self.ground_energy,
            "per_dimer_residuals": [float(r) for r in self.per_dimer_residuals],
            "energy_tol": self.energy_tol,
            "residual_tol": self.residual_tol,
        }


@dataclass(frozen=True)
class LemmaAReport:
    """Two-sided comparison of a PSD chain against its projector replacement."""

    E: float
    E_tilde: float
    s_min: float
    h_norm: float
    lower_ok: bool
    upper_ok: bool
    same_kernel: bool
    kernel_distance: float

    def to_json_dict(self) -> dict:
        return dataclasses.asdict(self)


def diagonalize(H: np.ndarray, degeneracy_tol: float = DEGENERACY_TOL) -> SpectrumResult:
    """Dense Hermitian eigendecomposition with ground-level bookkeeping.

    The ground level collects all eigenvalues within `degeneracy_tol`
    (absolute) of the minimum; the gap is measured from the minimum to the
    first eigenvalue above that window.  If no level lies above the window
    the gap is reported as nan.
    """
    if not is_hermitian(H, tol=1e-12):
        raise ValueError("operator is not Hermitian within 1e-12")
    evals, evecs = np.linalg.eigh(H)
    e0 = float(evals[0])
    deg = int(np.searchsorted(evals, e0 + degeneracy_tol, side="right"))
    gap = float(evals[deg] - e0) if deg < len(evals) else math.nan
    return SpectrumResult(
        eigenvalues=evals,
        ground_energy=e0,
        ground_degeneracy=deg,
        gap=gap,
        ground_basis=evecs[:, :deg],
        degeneracy_tol=degeneracy_tol,
    )


def embedded_dimer_terms(spec: ham.FFModelSpec) -> list[np.ndarray]:
    """The chain's two-site terms, each embedded in the full 2^L space."""
    L = spec.L
    check_sites(L)
    h = ham.build_dimer(spec)
    terms = [
        kron_chain([np.eye(2 ** (i - 1)), h, np.eye(2 ** (L - i - 1))])
        for i in range(1, L)
    ]
    if spec.boundary == "closed":
        from .hilbert import embed_two_site

        terms.append(embed_two_site(h, L, 1, L))
    return terms


def verdict_for_chain(
    H: np.ndarray,
    dimer_terms: list[np.ndarray],
    energy_tol: float = FF_ENERGY_TOL,
    residual_tol: float = FF_RESIDUAL_TOL,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> FFVerdict:
    """Frustration-freeness verdict for an explicit chain and its local terms."""
    spectrum = diagonalize(H, degeneracy_tol=degeneracy_tol)
    basis = spectrum.ground_basis
    residuals = [float(np.max(np.linalg.norm(term @ basis, axis=0))) for term in dimer_terms]
    is_ff = abs(spectrum.ground_energy) <= energy_tol and all(r <= residual_tol for r in residuals)
    return FFVerdict(
        is_ff=bool(is_ff),
        ground_energy=spectrum.ground_energy,
        per_dimer_residuals=residuals,
        energy_tol=energy_tol,
        residual_tol=residual_tol,
    )


def check_frustration_free(
    spec: ham.FFModelSpec,
    energy_tol: float = FF_ENERGY_TOL,
    residual_tol: float = FF_RESIDUAL_TOL,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> FFVerdict:
    """Diagonalize the chain and test every dimer against every ground vector."""
    terms = embedded_dimer_terms(spec)
    H = sum(terms)
    return verdict_for_chain(H, terms, energy_tol, residual_tol, degeneracy_tol)


def gap_scan(spec: ham.FFModelSpec, L_values, degeneracy_tol: float = DEGENERACY_TOL):
    """Per-length spectra of the family: rows (L, gap, degeneracy, ground energy)."""
    rows = []
    for L in L_values:
        point = dataclasses.replace(spec, L=int(L))
        result = diagonalize(ham.build_chain(point), degeneracy_tol=degeneracy_tol)
        rows.append(
            {
                "L": int(L),
                "gap": result.gap,
                "ground_degeneracy": result.ground_degeneracy,
                "ground_energy": result.ground_energy,
            }
        )
    return rows


def parity_resolved_spectrum(H: np.ndarray, tol: float = 1e-10):
    """Spectra restricted to the +1 and -1 eigenspaces of Z tensored over sites.

    The parity operator is diagonal in the computational basis, so the
    sectors are plain index subsets; H must commute with parity within tol.
    """
    L = sites_of(H)
    signs = parity_signs(L)
    even = np.where(signs > 0)[0]
    odd = np.where(signs < 0)[0]
    off_block = H[np.ix_(even, odd)]
    if spectral_norm(off_block) > tol:
        raise ValueError("operator does not commute with the parity operator")
    even_evals = np.linalg.eigvalsh(H[np.ix_(even, even)])
    odd_evals = np.linalg.eigvalsh(H[np.ix_(odd, odd)])
    return even_evals, odd_evals


def projector_replacement(dimer: np.ndarray, range_tol: float = RANGE_TOL) -> np.ndarray:
    """Spectral projector onto the strictly positive eigenspace of a PSD term."""
    if not is_hermitian(dimer, tol=1e-12):
        raise ValueError("dimer is not Hermitian within 1e-12")
    evals, evecs = np.linalg.eigh(dimer)
    keep = evals > range_tol
    V = evecs[:, keep]
    return V @ V.conj().T


def subspace_distance_matrices(basis1: np.ndarray, basis2: np.ndarray) -> float:
    """Spectral norm of the difference of the two orthogonal projectors."""
    if basis1.shape != basis2.shape:
        raise ValueError(f"subspace dimension mismatch: {basis1.shape} vs {basis2.shape}")
    q1 = np.linalg.qr(basis1)[0]
    q2 = np.linalg.qr(basis2)[0]
    return spectral_norm(q1 @ q1.conj().T - q2 @ q2.conj().T)


def lemma_a_bounds(spec: ham.FFModelSpec, degeneracy_tol: float = DEGENERACY_TOL) -> LemmaAReport:
    """Compare the PSD chain with the projector chain sharing its dimer ranges.

    Checks the two-sided bound ||h|| Etilde >= E >= s Etilde on the smallest
    strictly positive eigenvalues and that both chains share one kernel.
    """
    if spec.L > 10:
        raise ValueError("lemma bound check is restricted to L <= 10")
    L = spec.L
    h = ham.build_dimer(spec)
    dimer_evals = np.linalg.eigh(h)[0]
    positive = dimer_evals[dimer_evals > RANGE_TOL]
    s_min = float(positive.min())
    h_norm = float(positive.max())

    pi = projector_replacement(h)
    H = np.zeros((2**L, 2**L), dtype=complex)
    H_tilde = np.zeros_like(H)
    for i in range(1, L):
        left, right = np.eye(2 ** (i - 1)), np.eye(2 ** (L - i - 1))
        H += kron_chain([left, h, right])
        H_tilde += kron_chain([left, pi, right])

    spec_H = diagonalize(H, degeneracy_tol=degeneracy_tol)
    spec_Ht = diagonalize(H_tilde, degeneracy_tol=degeneracy_tol)
    E = spec_H.gap  # ground energy is zero, so the gap is the smallest positive level
    E_tilde = spec_Ht.gap
    slack = 1e-9 * max(1.0, abs(E), abs(E_tilde))
    lower_ok = E >= s_min * E_tilde - slack
    upper_ok = h_norm * E_tilde >= E - slack
    same_dim = spec_H.ground_degeneracy == spec_Ht.ground_degeneracy
    distance = (
        subspace_distance_matrices(spec_H.ground_basis, spec_Ht.ground_basis)
        if same_dim
        else math.inf
    )
    return LemmaAReport(
        E=float(E),
        E_tilde=float(E_tilde),
        s_min=s_min,
        h_norm=h_norm,
        lower_ok=bool(lower_ok),
        upper_ok=bool(upper_ok),
        same_kernel=bool(same_dim and distance <= 1e-9),
        kernel_distance=float(distance),
    )

"""Analytic ground-space constructions and subspace comparisons.

The product-state spans built here are generally not orthogonal, so all
comparisons go through orthogonal projectors rather than vector matching.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import hamiltonians as ham
from . import spectral
from .config import check_sites
from .hilbert import parity_signs


@dataclass(frozen=True)
class AnalyticSpan:
    """A list of linearly independent (not necessarily orthogonal) vectors."""

    vectors: tuple
    L: int
    labels: tuple

    def __post_init__(self):
        mat = self.matrix()
        gram = mat.conj().T @ mat
        if abs(np.linalg.det(gram)) <= 1e-12:
            raise ValueError("span vectors are (numerically) linearly dependent")

    def matrix(self) -> np.ndarray:
        """Vectors as columns of a (2^L, k) array."""
        return np.column_stack([np.asarray(v, dtype=complex) for v in self.vectors])

    def orthonormal_basis(self) -> np.ndarray:
        return np.linalg.qr(self.matrix())[0]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def alpha_beta(theta: float) -> tuple[np.ndarray, np.ndarray]:
    """The conjugate pair of single-qubit states cos(t/2)|0> +- i sin(t/2)|1>."""
    if not 0.0 < theta < math.pi:
        raise ValueError(f"theta must lie in the open interval (0, pi), got {theta}")
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    alpha = np.array([c, 1j * s], dtype=complex)
    beta = np.array([c, -1j * s], dtype=complex)
    return alpha, beta


def product_state(factors) -> np.ndarray:
    out = np.array([1.0 + 0j])
    for vec in factors:
        out = np.kron(out, np.asarray(vec, dtype=complex))
    return out


def case_i_span(theta: float, L: int) -> AnalyticSpan:
    """The two uniform product vectors alpha^L and beta^L."""
    check_sites(L)
    alpha, beta = alpha_beta(theta)
    return AnalyticSpan(
        vectors=(product_state([alpha] * L), product_state([beta] * L)),
        L=L,
        labels=("alpha^L", "beta^L"),
    )


def case_ii_span(theta: float, L: int, sublattice: str = "even") -> AnalyticSpan:
    """Alternating product vectors; the sublattice-Z image of the uniform pair."""
    check_sites(L)
    if sublattice not in ("even", "odd"):
        raise ValueError(f"sublattice must be 'even' or 'odd', got {sublattice!r}")
    alpha, beta = alpha_beta(theta)
    # Z flips alpha <-> beta, so applying Z on the chosen sublattice turns the
    # uniform products into the alternating ones.
    start_swapped = sublattice == "odd"
    first = [beta if (i % 2 == 0) == start_swapped else alpha for i in range(L)]
    second = [alpha if (i % 2 == 0) == start_swapped else beta for i in range(L)]
    return AnalyticSpan(
        vectors=(product_state(first), product_state(second)),
        L=L,
        labels=("alternating-1", "alternating-2"),
    )


def case_iii_span(f: float, L: int) -> AnalyticSpan:
    """All-zeros vector plus the geometric single-excitation vector.

    The excitation at site k+1 carries weight f^k (k = 0..L-1), so |f| < 1
    piles weight on the left end and |f| > 1 on the right.
    """
    if f == 0.0:
        raise ValueError("f must be nonzero")
    check_sites(L)
    dim = 2**L
    vac = np.zeros(dim, dtype=complex)
    vac[0] = 1.0
    excited = np.zeros(dim, dtype=complex)
    for k in range(L):
        index = 1 << (L - 1 - k)  # single 1-bit at site k+1 (site 1 = MSB)
        excited[index] = f**k
    excited /= np.linalg.norm(excited)
    return AnalyticSpan(vectors=(vac, excited), L=L, labels=("all-zero", "geometric"))


def parity_combinations(span: AnalyticSpan, tol: float = 1e-10) -> AnalyticSpan:
    """Normalized sum and difference of a pair swapped by the parity operator.

    The first output has parity +1, the second -1; inputs must satisfy
    Z^(x)L v1 = v2 (as the uniform and alternating pairs do).
    """
    if span.dimension != 2:
        raise ValueError("parity combination needs exactly two vectors")
    v1, v2 = (np.asarray(v, dtype=complex) for v in span.vectors)
    signs = parity_signs(span.L)
    if np.linalg.norm(signs * v1 - v2) > tol * np.linalg.norm(v2):
        raise ValueError("span vectors are not swapped by the parity operator")
    plus = v1 + v2
    minus = v1 - v2
    return AnalyticSpan(
        vectors=(plus / np.linalg.norm(plus), minus / np.linalg.norm(minus)),
        L=span.L,
        labels=("parity+1", "parity-1"),
    )


def analytic_span_for(spec: ham.FFModelSpec) -> AnalyticSpan:
    """Predicted open-chain ground space for the two-fold degenerate families."""
    if spec.family == "type1":
        return case_i_span(ham.theta_from_omega(spec.params["omega"]), spec.L)
    if spec.family == "type2":
        alpha = np.array([1, 0], dtype=complex)
        beta = np.array([0, 1], dtype=complex)
        return AnalyticSpan(
            vectors=(product_state([alpha] * spec.L), product_state([beta] * spec.L)),
            L=spec.L,
            labels=("zeros", "ones"),
        )
    if spec.family == "case2":
        theta = ham.theta_from_omega(spec.params["omega"])
        return case_ii_span(theta, spec.L, spec.params["sublattice"])
    if spec.family == "case3":
        return case_iii_span(spec.params["f"], spec.L)
    if spec.family == "rank3":
        psi = np.asarray(spec.params["psi"], dtype=complex)
        return AnalyticSpan(
            vectors=(product_state([psi] * spec.L),), L=spec.L, labels=("psi^L",)
        )
    raise ValueError(f"no closed-form ground space implemented for family {spec.family!r}")


def subspace_distance(span1, span2) -> float:
    """Spectral norm of the projector difference of two equal-dimension spans.

    Accepts AnalyticSpan instances or arrays whose columns span the subspace.
    """
    mat1 = span1.matrix() if isinstance(span1, AnalyticSpan) else np.asarray(span1)
    mat2 = span2.matrix() if isinstance(span2, AnalyticSpan) else np.asarray(span2)
    if mat1.ndim == 1:
        mat1 = mat1[:, None]
    if mat2.ndim == 1:
        mat2 = mat2[:, None]
    return spectral.subspace_distance_matrices(mat1, mat2)


@dataclass(frozen=True)
class ClosedChainReport:
    """Effect of adding the (L, 1) coupling on the ground space."""

    open_deg: int
    closed_deg: int
    gs_preserved: bool
    closed_ground_energy: float
    survivor_zero_overlap: float

    def to_json_dict(self) -> dict:
        return dataclasses.asdict(self)


def closed_chain_experiment(spec: ham.FFModelSpec, distance_tol: float = 1e-8) -> ClosedChainReport:
    """Diagonalize the open and closed chains and compare their ground spaces.

    gs_preserved means the closed-chain ground space equals the open one
    (same degeneracy, projector distance within `distance_tol`).  The
    survivor overlap records the norm of the all-zeros state's projection
    onto the closed ground space, which pins down the case3 survivor.
    """
    if spec.family not in ("type1", "case2", "case3"):
        raise ValueError("closed-chain experiment is defined for type1, case2 and case3")
    open_spec = dataclasses.replace(spec, boundary="open")
    closed_spec = dataclasses.replace(spec, boundary="closed")
    open_result = spectral.diagonalize(ham.build_chain(open_spec))
    closed_result = spectral.diagonalize(ham.build_chain(closed_spec))
    preserved = open_result.ground_degeneracy == closed_result.ground_degeneracy and (
        spectral.subspace_distance_matrices(open_result.ground_basis, closed_result.ground_basis)
        <= distance_tol
    )
    zero_state = np.zeros(2**spec.L, dtype=complex)
    zero_state[0] = 1.0
    overlap = float(np.linalg.norm(closed_result.ground_basis.conj().T @ zero_state))
    return ClosedChainReport(
        open_deg=open_result.ground_degeneracy,
        closed_deg=closed_result.ground_degeneracy,
        gs_preserved=bool(preserved),
        closed_ground_energy=closed_result.ground_energy,
        survivor_zero_overlap=overlap,
    )

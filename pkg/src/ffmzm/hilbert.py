"""Dense operator algebra on a chain of L qubits.

Conventions used everywhere in this package:

* the computational basis is ordered by the binary expansion of the index
  with site 1 as the most significant bit, and |0> = (1, 0)^T;
* operators are plain complex numpy arrays of shape (2^L, 2^L), the number
  of sites being recoverable from the shape via :func:`sites_of`;
* "equal to zero" always means spectral norm below a stated tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import check_sites

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

PAULI_LETTERS = "IXYZ"


@dataclass(frozen=True)
class PauliString:
    """One term of a Pauli-sum operator: coefficient times a tensor string."""

    letters: str
    coefficient: complex = 1.0

    def __post_init__(self):
        if len(self.letters) < 1:
            raise ValueError("PauliString needs at least one site")
        bad = set(self.letters) - set(PAULI_LETTERS)
        if bad:
            raise ValueError(f"unknown Pauli letters {sorted(bad)}; allowed: I, X, Y, Z")
        if not np.isfinite(complex(self.coefficient)):
            raise ValueError("PauliString coefficient must be finite")

    @property
    def sites(self) -> int:
        return len(self.letters)


def sites_of(op: np.ndarray) -> int:
    """Number of chain sites an operator acts on (validates the 2^L shape)."""
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise ValueError(f"operator must be square, got shape {op.shape}")
    L = int(round(np.log2(op.shape[0])))
    if 2**L != op.shape[0]:
        raise ValueError(f"operator dimension {op.shape[0]} is not a power of 2")
    return L


def is_hermitian(op: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(op - op.conj().T)) <= tol)


def kron_chain(ops) -> np.ndarray:
    """Tensor product of a list of matrices, leftmost factor first."""
    out = np.array([[1.0 + 0j]])
    for op in ops:
        out = np.kron(out, op)
    return out


def string_matrix(letters: str) -> np.ndarray:
    """Dense matrix of a Pauli tensor string like "IXZ"."""
    check_sites(len(letters))
    return kron_chain([PAULI[ch] for ch in letters])


def embed_pauli(letter: str, site: int, L: int) -> np.ndarray:
    """Single-site Pauli at `site` (1-based, site 1 = leftmost factor) on L sites."""
    if letter not in PAULI:
        raise ValueError(f"unknown Pauli letter {letter!r}")
    if not 1 <= site <= L:
        raise ValueError(f"site {site} out of range 1..{L}")
    check_sites(L)
    return string_matrix("I" * (site - 1) + letter + "I" * (L - site))


def assemble(terms) -> np.ndarray:
    """Sum of PauliString terms as a dense operator.

    All terms must share one chain length; an empty list has no well-defined
    dimension and is rejected.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("assemble needs at least one term (size would be ambiguous)")
    L = terms[0].sites
    if any(t.sites != L for t in terms):
        raise ValueError("all PauliStrings must share the same chain length")
    check_sites(L)
    out = np.zeros((2**L, 2**L), dtype=complex)
    for t in terms:
        out += complex(t.coefficient) * string_matrix(t.letters)
    return out


def parity_operator(L: int) -> np.ndarray:
    """Z tensored over every site: diagonal +-1, squares to the identity."""
    if L < 1:
        raise ValueError("L must be >= 1")
    check_sites(L)
    return string_matrix("Z" * L)


def parity_signs(L: int) -> np.ndarray:
    """Diagonal of the parity operator: (-1)^(number of 1 bits) per basis state."""
    bits = np.arange(2**L)
    pop = np.zeros(2**L, dtype=np.int64)
    for k in range(L):
        pop += (bits >> k) & 1
    return np.where(pop % 2 == 0, 1.0, -1.0)


def spectral_norm(M: np.ndarray) -> float:
    """Operator 2-norm ||M||, via the largest eigenvalue of M^dag M."""
    evals = np.linalg.eigvalsh(M.conj().T @ M)
    return float(np.sqrt(max(evals[-1], 0.0)))


def commutator_norm(A: np.ndarray, B: np.ndarray) -> float:
    """Spectral norm of AB - BA."""
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return spectral_norm(A @ B - B @ A)


def anticommutator_norm(A: np.ndarray, B: np.ndarray) -> float:
    """Spectral norm of AB + BA."""
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return spectral_norm(A @ B + B @ A)


def pauli_coefficients_two_site(h: np.ndarray) -> np.ndarray:
    """4x4 table c[p, q] with h = sum_pq c[p,q] P_p (x) P_q over I, X, Y, Z."""
    if h.shape != (4, 4):
        raise ValueError("expected a two-site (4x4) operator")
    coeffs = np.zeros((4, 4), dtype=complex)
    for p, P in enumerate(PAULI_LETTERS):
        for q, Q in enumerate(PAULI_LETTERS):
            basis = np.kron(PAULI[P], PAULI[Q])
            coeffs[p, q] = np.trace(basis.conj().T @ h) / 4.0
    return coeffs


def embed_two_site(h: np.ndarray, site_a: int, site_b: int, L: int) -> np.ndarray:
    """Embed a 4x4 operator with its first tensor slot on site_a, second on site_b.

    The sites need not be adjacent or ordered; this is what makes closed-chain
    (L, 1) couplings and long-range extra dimers expressible.
    """
    if site_a == site_b:
        raise ValueError("the two sites must differ")
    for s in (site_a, site_b):
        if not 1 <= s <= L:
            raise ValueError(f"site {s} out of range 1..{L}")
    check_sites(L)
    coeffs = pauli_coefficients_two_site(h)
    out = np.zeros((2**L, 2**L), dtype=complex)
    for p, P in enumerate(PAULI_LETTERS):
        for q, Q in enumerate(PAULI_LETTERS):
            c = coeffs[p, q]
            if abs(c) < 1e-16:
                continue
            letters = ["I"] * L
            letters[site_a - 1] = P
            letters[site_b - 1] = Q
            out += c * string_matrix("".join(letters))
    return out

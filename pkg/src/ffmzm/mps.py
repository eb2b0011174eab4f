"""Matrix-product states for the degenerate product-pair ground space.

Open-boundary states only: the first site holds 1 x D row vectors, the last
site D x 1 columns, so amplitudes are plain ordered matrix products and no
trace is needed.  A trace-form contraction over square tensors is kept only
to validate the block-diagonal superposition construction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .config import check_sites


@dataclass(frozen=True)
class MPSState:
    """Per-site pairs (W[0], W[1]) of bond matrices; physical dimension 2."""

    site_tensors: tuple  # tuple of (ndarray, ndarray) pairs
    L: int

    def __post_init__(self):
        if len(self.site_tensors) != self.L or self.L < 2:
            raise ValueError("need one (W[0], W[1]) pair per site and L >= 2")
        shapes = [pair[0].shape for pair in self.site_tensors]
        for pair, shape in zip(self.site_tensors, shapes):
            if pair[1].shape != shape:
                raise ValueError("W[0] and W[1] must share a shape on every site")
        for k in range(self.L - 1):
            if shapes[k][1] != shapes[k + 1][0]:
                raise ValueError(
                    f"bond dimension mismatch between sites {k + 1} and {k + 2}: "
                    f"{shapes[k]} then {shapes[k + 1]}"
                )
        if shapes[0][0] != 1 or shapes[-1][1] != 1:
            raise ValueError("open boundary needs a 1 x D first site and D x 1 last site")

    @property
    def physical_dim(self) -> int:
        return 2

    @property
    def bond_dim(self) -> int:
        return max(pair[0].shape[1] for pair in self.site_tensors[:-1])


def build_case_i_mps(u: complex, v: complex, theta: float, L: int) -> MPSState:
    """Bond-dimension-2 diagonal MPS of u alpha^L + v beta^L.

    Bulk tensors are cos(theta/2) I and i sin(theta/2) Z; the (u, v) weights
    sit on the first site's row vectors and the last site closes with
    (1, 1)^T and i sin(theta/2)(1, -1)^T columns.
    """
    if u == 0 and v == 0:
        raise ValueError("(u, v) must not both vanish")
    if not 0.0 < theta < math.pi:
        raise ValueError(f"theta must lie in the open interval (0, pi), got {theta}")
    if L < 2:
        raise ValueError("L must be >= 2")
    check_sites(L)
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    first = (
        c * np.array([[u, v]], dtype=complex),
        1j * s * np.array([[u, -v]], dtype=complex),
    )
    bulk = (c * np.eye(2, dtype=complex), 1j * s * np.diag([1.0, -1.0]).astype(complex))
    last = (
        c * np.array([[1.0], [1.0]], dtype=complex),
        1j * s * np.array([[1.0], [-1.0]], dtype=complex),
    )
    tensors = [first] + [bulk] * (L - 2) + [last]
    return MPSState(site_tensors=tuple(tensors), L=L)


def contract(mps: MPSState) -> np.ndarray:
    """Full 2^L amplitude vector of the state (bitstring index, site 1 = MSB)."""
    check_sites(mps.L)
    w0, w1 = mps.site_tensors[0]
    partial = np.stack([w0[0], w1[0]])  # shape (2, D)
    for pair in mps.site_tensors[1:]:
        branch = np.stack([partial @ pair[0], partial @ pair[1]])  # (2, n, D')
        partial = np.transpose(branch, (1, 0, 2)).reshape(-1, branch.shape[2])
    return partial[:, 0]


def contract_trace(site_tensors) -> np.ndarray:
    """Trace-form contraction over square tensors (periodic convention)."""
    L = len(site_tensors)
    check_sites(L)
    D = site_tensors[0][0].shape[0]
    partial = np.stack([site_tensors[0][0], site_tensors[0][1]])  # (2, D, D)
    for pair in site_tensors[1:]:
        branch = np.einsum("nij,pjk->npik", partial, np.stack([pair[0], pair[1]]))
        partial = branch.reshape(-1, D, D)
    return np.einsum("nii->n", partial)


def superpose(mps1: MPSState, mps2: MPSState, u: complex, v: complex) -> MPSState:
    """Block-diagonal MPS of u * state1 + v * state2.

    The scalar weights are absorbed into the first site; bond dimensions add.
    """
    if mps1.L != mps2.L:
        raise ValueError(f"length mismatch: {mps1.L} vs {mps2.L}")
    tensors = []
    for k, (pair1, pair2) in enumerate(zip(mps1.site_tensors, mps2.site_tensors)):
        if k == 0:
            tensors.append(
                tuple(
                    np.hstack([u * a, v * b]) for a, b in zip(pair1, pair2)
                )
            )
        elif k == mps1.L - 1:
            tensors.append(tuple(np.vstack([a, b]) for a, b in zip(pair1, pair2)))
        else:
            tensors.append(
                tuple(_block_diag(a, b) for a, b in zip(pair1, pair2))
            )
    return MPSState(site_tensors=tuple(tensors), L=mps1.L)


def _block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=complex)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


@dataclass(frozen=True)
class InjectivityReport:
    injective: bool
    attained_rank: int
    full_rank: int

    def to_json_dict(self) -> dict:
        return {
            "injective": self.injective,
            "attained_rank": self.attained_rank,
            "full_rank": self.full_rank,
        }


def injectivity_check(mps: MPSState, block_len: int = 2) -> InjectivityReport:
    """Rank of the span of length-`block_len` bulk tensor products.

    The MPS is injective at this blocking when the 2^block_len products span
    the full D x D matrix space.  Requires a uniform bulk (all interior site
    tensors equal), so L must be at least 3.
    """
    if block_len < 1:
        raise ValueError("block_len must be >= 1")
    interior = mps.site_tensors[1:-1]
    if not interior:
        raise ValueError("injectivity needs at least one bulk site (L >= 3)")
    w0, w1 = interior[0]
    for pair in interior[1:]:
        if not (np.array_equal(pair[0], w0) and np.array_equal(pair[1], w1)):
            raise ValueError("bulk tensors are not translationally uniform")
    if w0.shape[0] != w0.shape[1]:
        raise ValueError("bulk tensors must be square")
    D = w0.shape[0]
    products = [np.eye(D, dtype=complex)]
    for _ in range(block_len):
        products = [w @ p for p in products for w in (w0, w1)]
    stack = np.stack([p.reshape(-1) for p in products])
    rank = int(np.linalg.matrix_rank(stack, tol=1e-10))
    return InjectivityReport(injective=rank == D * D, attained_rank=rank, full_rank=D * D)


def mps_to_json_dict(mps: MPSState) -> dict:
    """JSON-friendly encoding: entries as nested [re, im] pairs."""

    def encode(mat: np.ndarray):
        return [[[float(z.real), float(z.imag)] for z in row] for row in mat]

    return {
        "L": mps.L,
        "physical_dim": mps.physical_dim,
        "site_tensors": [[encode(pair[0]), encode(pair[1])] for pair in mps.site_tensors],
    }


def mps_to_json(mps: MPSState) -> str:
    return json.dumps(mps_to_json_dict(mps), sort_keys=True)


def mps_from_json(text: str) -> MPSState:
    data = json.loads(text)

    def decode(rows):
        return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)

    tensors = tuple((decode(p0), decode(p1)) for p0, p1 in data["site_tensors"])
    return MPSState(site_tensors=tensors, L=int(data["L"]))

"""Jordan-Wigner fermion operators and the fermionic chain builders.

The fermion operators are represented as dense matrices on the same qubit
space as the spin operators, with the Z-string accumulating to the left of
the acting site:

    c_j = Z (x) ... (x) Z (x) |0><1| (x) I (x) ... (x) I
              (j-1 factors)

so that the JW dictionary X_j = [prod_{k<j} Z_k] (c_j^dag + c_j),
Y_j = i [prod_{k<j} Z_k] (c_j^dag - c_j), Z_j = 1 - 2 n_j holds exactly and
the fermion parity prod_j (1 - 2 n_j) coincides with Z^(x)L.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from . import hamiltonians as ham
from .config import check_sites
from .hilbert import kron_chain, sites_of

_LOWER = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|
_Z = np.diag([1.0, -1.0]).astype(complex)


@dataclass(frozen=True)
class KitaevParams:
    """Fermionic couplings of the hopping/pairing/interaction chain."""

    t: float
    delta: float
    u_int: float
    mu_bulk: float
    mu_edge: float
    L: int

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "delta": self.delta,
            "u": self.u_int,
            "mu_bulk": self.mu_bulk,
            "mu_edge": self.mu_edge,
            "L": self.L,
        }


@dataclass(frozen=True)
class FermionOpSet:
    """Annihilation/creation and Majorana matrices for every site of a chain."""

    c: tuple
    cdag: tuple
    a: tuple
    b: tuple
    L: int

    def number_op(self, j: int) -> np.ndarray:
        """n_j = c_j^dag c_j (1-based site index)."""
        return self.cdag[j - 1] @ self.c[j - 1]

    def majoranas(self) -> list:
        """All 2L Majorana matrices in the interleaved order a1, b1, a2, b2, ..."""
        out = []
        for aj, bj in zip(self.a, self.b):
            out.extend((aj, bj))
        return out

    def parity(self) -> np.ndarray:
        """(-1)^F = prod_j (1 - 2 n_j); equals Z^(x)L in this representation."""
        dim = 2**self.L
        out = np.eye(dim, dtype=complex)
        for j in range(1, self.L + 1):
            out = out @ (np.eye(dim) - 2 * self.number_op(j))
        return out


@functools.lru_cache(maxsize=3)
def build_fermion_ops(L: int) -> FermionOpSet:
    """Dense JW fermion operators on L sites (cached; arrays are read-only)."""
    check_sites(L)
    c = []
    for j in range(1, L + 1):
        mat = kron_chain([_Z] * (j - 1) + [_LOWER] + [np.eye(2)] * (L - j))
        mat.setflags(write=False)
        c.append(mat)
    cdag, a, b = [], [], []
    for mat in c:
        dag = mat.conj().T.copy()
        aj = mat + dag
        bj = -1j * (mat - dag)
        for arr in (dag, aj, bj):
            arr.setflags(write=False)
        cdag.append(dag)
        a.append(aj)
        b.append(bj)
    return FermionOpSet(c=tuple(c), cdag=tuple(cdag), a=tuple(a), b=tuple(b), L=L)


def kitaev_params_from_spin(A: float, B: float, omega: float, L: int) -> KitaevParams:
    """Map the type1 couplings to fermionic ones.

    t = 2A, delta = -2B sin(omega), u = B - A, mu_bulk = 4B cos(omega) and
    the edge chemical potential is exactly half the bulk value.
    """
    if A <= 0 or B <= 0:
        raise ValueError("A and B must be positive")
    if not 0.0 < omega < math.pi:
        raise ValueError(f"omega must lie in the open interval (0, pi), got {omega}")
    return KitaevParams(
        t=2.0 * A,
        delta=-2.0 * B * math.sin(omega),
        u_int=B - A,
        mu_bulk=4.0 * B * math.cos(omega),
        mu_edge=2.0 * B * math.cos(omega),
        L=int(L),
    )


def build_fermionic_chain(p: KitaevParams) -> np.ndarray:
    """The traceless fermionic chain H' for the given couplings.

    H' = sum_j [-t (c_j^dag c_{j+1} + h.c.) + delta (c_j c_{j+1} + c_{j+1}^dag c_j^dag)]
         - 1/2 sum_j mu_j (2 n_j - 1) + u sum_j (2 n_j - 1)(2 n_{j+1} - 1),
    with mu_j taking the edge value at j = 1 and j = L.
    """
    L = p.L
    check_sites(L)
    ops = build_fermion_ops(L)
    dim = 2**L
    eye = np.eye(dim)
    H = np.zeros((dim, dim), dtype=complex)
    zops = [eye - 2 * ops.number_op(j) for j in range(1, L + 1)]  # 2n_j - 1 = -zops[j-1]
    for j in range(L - 1):
        cj, cj1 = ops.c[j], ops.c[j + 1]
        cdj, cdj1 = ops.cdag[j], ops.cdag[j + 1]
        H += -p.t * (cdj @ cj1 + cdj1 @ cj)
        H += p.delta * (cj @ cj1 + cdj1 @ cdj)
        H += p.u_int * (-zops[j]) @ (-zops[j + 1])
    for j in range(L):
        mu = p.mu_edge if j in (0, L - 1) else p.mu_bulk
        H += -0.5 * mu * (-zops[j])
    return H


def build_case_iii_fermionic(A: float, B: float, f: float, L: int) -> np.ndarray:
    """Traceless fermionic chain of the geometric-ground-space family."""
    if A <= 0 or B <= 0:
        raise ValueError("A and B must be positive")
    if f == 0.0:
        raise ValueError("f must be nonzero")
    check_sites(L)
    ops = build_fermion_ops(L)
    dim = 2**L
    eye = np.eye(dim)
    g = (1 - f * f) / (1 + f * f)
    hop = 4.0 * B * f / (1 + f * f)
    H = np.zeros((dim, dim), dtype=complex)
    num = [2 * ops.number_op(j) - eye for j in range(1, L + 1)]
    for j in range(L - 1):
        H += (A - B * g) * num[j] + (A + B * g) * num[j + 1]
        H += -hop * (ops.cdag[j] @ ops.c[j + 1] + ops.cdag[j + 1] @ ops.c[j])
        H += (A - B) * num[j] @ num[j + 1]
    return H


def hprime_s_family(A: float, omega: float, s: float, L: int) -> np.ndarray:
    """One-parameter interpolation between interacting chains and the s=0 one.

    s = (B - A) / 2A, so s = 0 is the non-interacting point and the family
    equals build_fermionic_chain(kitaev_params_from_spin(A, A(1+2s), omega, L)).
    """
    if s <= -0.5:
        raise ValueError(f"s must exceed -1/2, got {s}")
    if A <= 0:
        raise ValueError("A must be positive")
    if not 0.0 < omega < math.pi:
        raise ValueError(f"omega must lie in the open interval (0, pi), got {omega}")
    check_sites(L)
    ops = build_fermion_ops(L)
    dim = 2**L
    eye = np.eye(dim)
    H = np.zeros((dim, dim), dtype=complex)
    num = [2 * ops.number_op(j) - eye for j in range(1, L + 1)]
    for j in range(L - 1):
        cj, cj1 = ops.c[j], ops.c[j + 1]
        cdj, cdj1 = ops.cdag[j], ops.cdag[j + 1]
        term = cdj @ cj1 + cdj1 @ cj
        term = term + (1 + 2 * s) * math.sin(omega) * (cj @ cj1 + cdj1 @ cdj)
        term = term + (1 + 2 * s) * math.cos(omega) * 0.5 * (num[j] + num[j + 1])
        term = term - s * (num[j] @ num[j + 1])
        H += -2.0 * A * term
    return H


def _phase_diagonal(L: int, which: str) -> np.ndarray:
    """Diagonal of the product unitary for the sign transforms."""
    idx = np.arange(2**L)
    bits = np.array([(idx >> (L - 1 - site)) & 1 for site in range(L)])  # bits[site, state]
    diag = np.ones(2**L, dtype=complex)
    if which in ("gauge_V", "both"):
        diag = diag * (1j ** bits.sum(axis=0))
    if which in ("sublattice", "both"):
        even_sites = bits[1::2].sum(axis=0)  # sites 2, 4, ... (1-based)
        diag = diag * ((-1.0) ** even_sites)
    return diag


def sign_transforms(H: np.ndarray, which: str) -> np.ndarray:
    """Conjugate H by the product unitary flipping coupling signs.

    'gauge_V' sends the pairing delta -> -delta only; 'sublattice' (Z on the
    even sites) sends (t, delta) -> (-t, -delta); 'both' composes them,
    flipping t only.
    """
    if which not in ("gauge_V", "sublattice", "both"):
        raise ValueError(f"unknown transform {which!r}")
    L = sites_of(H)
    diag = _phase_diagonal(L, which)
    return (diag[:, None] * H) * np.conj(diag)[None, :]


def fermionic_hprime(spec: ham.FFModelSpec) -> np.ndarray:
    """Fermion-built traceless chain H' for a parity-conserving family spec.

    type1 and case2 go through the coupling map (case2 with both hopping and
    pairing signs flipped), case3 through its dedicated builder.  type2 has
    no quadratic fermion content of its own; its H' is built from the Pauli
    terms, whose JW image it is.
    """
    p = spec.params
    if spec.family == "type1":
        return build_fermionic_chain(kitaev_params_from_spin(p["A"], p["B"], p["omega"], spec.L))
    if spec.family == "case2":
        base = kitaev_params_from_spin(p["A"], p["B"], p["omega"], spec.L)
        flipped = KitaevParams(
            t=-base.t,
            delta=-base.delta,
            u_int=base.u_int,
            mu_bulk=base.mu_bulk,
            mu_edge=base.mu_edge,
            L=base.L,
        )
        return build_fermionic_chain(flipped)
    if spec.family == "case3":
        return build_case_iii_fermionic(p["A"], p["B"], p["f"], spec.L)
    if spec.family == "type2":
        return ham.build_hprime(spec)
    raise ValueError(f"no fermionic chain defined for family {spec.family!r}")

"""Constructors for the classified frustration-free nearest-neighbour chains.

Six families are supported, each selected by an :class:`FFModelSpec`:

==========  =====================================  =========================
family      parameters                             two-site ground space
==========  =====================================  =========================
rank1       theta in (0, pi/2)                     3-dim (rank-1 projector)
type1       A, B > 0, omega in (0, pi)             {alpha alpha, beta beta}
type2       A, B > 0, gamma in (0, pi)             {00, 11}
case2       A, B > 0, omega in (0, pi), sublattice sublattice-flipped type1
case3       A, B > 0, real f != 0                  {00, f|01> + |10>}
rank3       psi (unit qubit state), 3 positive eigs {psi psi}
==========  =====================================  =========================

Every dimer is returned positive semidefinite with minimum eigenvalue zero,
so chain sums have ground energy exactly zero when frustration-free.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .config import check_sites
from .hilbert import (
    PauliString,
    assemble,
    embed_two_site,
    kron_chain,
    spectral_norm,
    string_matrix,
)

FAMILIES = ("rank1", "type1", "type2", "case2", "case3", "rank3")

# Computational two-qubit basis vectors, site 1 = most significant bit.
_B00 = np.array([1, 0, 0, 0], dtype=complex)
_B01 = np.array([0, 1, 0, 0], dtype=complex)
_B10 = np.array([0, 0, 1, 0], dtype=complex)
_B11 = np.array([0, 0, 0, 1], dtype=complex)

SINGLET = (_B01 - _B10) / math.sqrt(2)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _as_positive(params: dict, key: str) -> float:
    value = float(params[key])
    _require(value > 0 and math.isfinite(value), f"{key} must be a positive real, got {value}")
    return value


def _as_open_interval(params: dict, key: str, hi: float, hi_name: str) -> float:
    value = float(params[key])
    _require(
        0.0 < value < hi and math.isfinite(value),
        f"{key} must lie in the open interval (0, {hi_name}), got {value}",
    )
    return value


@dataclass(frozen=True)
class FFModelSpec:
    """Parameter record selecting one Hamiltonian family on an L-site chain."""

    family: str
    L: int
    boundary: str = "open"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        _require(self.family in FAMILIES, f"unknown family {self.family!r}; expected one of {FAMILIES}")
        _require(int(self.L) >= 2, f"L must be an integer >= 2, got {self.L}")
        _require(self.boundary in ("open", "closed"), f"boundary must be 'open' or 'closed', got {self.boundary!r}")
        object.__setattr__(self, "L", int(self.L))
        object.__setattr__(self, "params", dict(self.params))
        self._validate_params()

    def _validate_params(self) -> None:
        p = self.params
        try:
            if self.family == "rank1":
                _as_open_interval(p, "theta", math.pi / 2, "pi/2")
            elif self.family in ("type1", "case2"):
                _as_positive(p, "A")
                _as_positive(p, "B")
                _as_open_interval(p, "omega", math.pi, "pi")
                if self.family == "case2":
                    sub = p.setdefault("sublattice", "even")
                    _require(sub in ("even", "odd"), f"sublattice must be 'even' or 'odd', got {sub!r}")
            elif self.family == "type2":
                _as_positive(p, "A")
                _as_positive(p, "B")
                _as_open_interval(p, "gamma", math.pi, "pi")
            elif self.family == "case3":
                _as_positive(p, "A")
                _as_positive(p, "B")
                f = float(p["f"])
                _require(f != 0.0 and math.isfinite(f), "f must be a nonzero real")
            elif self.family == "rank3":
                psi = np.asarray(p.get("psi", [1.0, 0.0]), dtype=complex).reshape(-1)
                _require(psi.shape == (2,), "psi must be a single-qubit (length-2) state")
                _require(abs(np.linalg.norm(psi) - 1.0) <= 1e-12, "psi must be normalized to 1 within 1e-12")
                eigs = tuple(float(x) for x in p.get("eigs", (1.0, 1.0, 1.0)))
                _require(len(eigs) == 3 and all(x > 0 for x in eigs), "eigs must be three positive reals")
                p["psi"] = psi
                p["eigs"] = eigs
        except KeyError as exc:
            raise ValueError(f"family {self.family!r} requires parameter {exc.args[0]!r}") from exc

    # Convenience accessors used all over the test-suite and CLI.
    def __getattr__(self, name: str):
        params = object.__getattribute__(self, "params")
        if name in params:
            return params[name]
        raise AttributeError(name)

    def to_json_dict(self) -> dict[str, Any]:
        params: dict[str, Any] = {}
        for key, value in self.params.items():
            if key == "psi":
                params[key] = [[float(z.real), float(z.imag)] for z in np.asarray(value)]
            elif key == "eigs":
                params[key] = [float(x) for x in value]
            elif isinstance(value, str):
                params[key] = value
            else:
                params[key] = float(value)
        return {"family": self.family, "L": self.L, "boundary": self.boundary, "params": params}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "FFModelSpec":
        _require(isinstance(data, dict), "spec JSON must be an object")
        for key in ("family", "L"):
            _require(key in data, f"spec JSON missing required field {key!r}")
        params = dict(data.get("params", {}))
        if "psi" in params and not np.isscalar(params["psi"]):
            psi = np.asarray(params["psi"], dtype=float)
            if psi.ndim == 2 and psi.shape[1] == 2:
                params["psi"] = psi[:, 0] + 1j * psi[:, 1]
        return cls(
            family=str(data["family"]),
            L=int(data["L"]),
            boundary=str(data.get("boundary", "open")),
            params=params,
        )

    @classmethod
    def from_json(cls, text: str) -> "FFModelSpec":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class TMatrix:
    """The 2x2 matrix of boundary inner products attached to a two-qubit state."""

    entries: np.ndarray
    source_state: np.ndarray

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvals(self.entries)

    def determinant(self) -> complex:
        return complex(np.linalg.det(self.entries))


def projector(vec: np.ndarray) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex)
    return np.outer(vec, vec.conj())


def type1_range_states(omega: float) -> tuple[np.ndarray, np.ndarray]:
    """Singlet and even-parity pairing state spanning the type1 dimer range."""
    phi = math.cos(omega / 2) * _B00 + math.sin(omega / 2) * _B11
    return SINGLET, phi


def type2_range_states(gamma: float) -> tuple[np.ndarray, np.ndarray]:
    c, s = math.cos(gamma / 2), math.sin(gamma / 2)
    return c * _B01 + s * _B10, s * _B01 - c * _B10


def case3_range_states(f: float) -> tuple[np.ndarray, np.ndarray]:
    nu = (_B01 - f * _B10) / math.sqrt(1 + f * f)
    return _B11, nu


def build_dimer(spec: FFModelSpec) -> np.ndarray:
    """Two-site term of the chain, as a PSD 4x4 matrix with min eigenvalue 0."""
    p = spec.params
    if spec.family == "rank1":
        theta = p["theta"]
        psi = math.cos(theta / 2) * _B01 + math.sin(theta / 2) * _B10
        return projector(psi)
    if spec.family == "type1":
        psi, phi = type1_range_states(p["omega"])
        return p["A"] * projector(psi) + p["B"] * projector(phi)
    if spec.family == "case2":
        psi, phi = type1_range_states(p["omega"])
        h = p["A"] * projector(psi) + p["B"] * projector(phi)
        # Z on either site of the pair gives the same conjugation because the
        # type1 dimer commutes with Z(x)Z; so the dimer is sublattice-blind.
        iz = np.kron(np.eye(2), np.diag([1.0, -1.0])).astype(complex)
        return iz @ h @ iz
    if spec.family == "type2":
        psi, phi = type2_range_states(p["gamma"])
        return p["A"] * projector(psi) + p["B"] * projector(phi)
    if spec.family == "case3":
        e11, nu = case3_range_states(p["f"])
        return p["A"] * projector(e11) + p["B"] * projector(nu)
    if spec.family == "rank3":
        psi = np.asarray(p["psi"], dtype=complex)
        psi_bar = np.array([-np.conj(psi[1]), np.conj(psi[0])], dtype=complex)
        basis = [np.kron(psi, psi_bar), np.kron(psi_bar, psi), np.kron(psi_bar, psi_bar)]
        eigs = p["eigs"]
        return sum(lam * projector(v) for lam, v in zip(eigs, basis))
    raise ValueError(f"unknown family {spec.family!r}")


def dimer_trace(spec: FFModelSpec) -> float:
    """Trace of the family dimer; the per-bond constant of the Pauli expansion."""
    if spec.family == "rank1":
        return 1.0
    if spec.family == "rank3":
        return float(sum(spec.params["eigs"]))
    return float(spec.params["A"] + spec.params["B"])


def build_chain(spec: FFModelSpec) -> np.ndarray:
    """Sum of the dimer over nearest-neighbour bonds (plus (L,1) when closed).

    The closed-boundary term places the same 4x4 dimer on the ordered pair
    (L, 1), i.e. its first tensor slot acts on site L.
    """
    L = spec.L
    check_sites(L)
    h = build_dimer(spec)
    dim = 2**L
    out = np.zeros((dim, dim), dtype=complex)
    for i in range(1, L):
        left, right = 2 ** (i - 1), 2 ** (L - i - 1)
        out += kron_chain([np.eye(left), h, np.eye(right)])
    if spec.boundary == "closed":
        out += embed_two_site(h, L, 1, L)
    return out


def hprime_terms(spec: FFModelSpec) -> list[PauliString]:
    """Pauli terms of the traceless chain form H' (open boundary).

    The chain relates to the PSD form by H = ((L-1) * dimer_trace * I + H')/4,
    which is asserted exactly in the tests.
    """
    L = spec.L
    p = spec.params
    terms: list[PauliString] = []

    def at(letters_pair: str, i: int, coeff: float) -> None:
        if abs(coeff) < 1e-300:
            return
        letters = "I" * (i - 1) + letters_pair + "I" * (L - i - len(letters_pair))
        terms.append(PauliString(letters, coeff))

    if spec.family == "type1":
        A, B, omega = p["A"], p["B"], p["omega"]
        for i in range(1, L):
            at("Z", i, B * math.cos(omega))
            at("IZ", i, B * math.cos(omega))
            at("XX", i, -(A - B * math.sin(omega)))
            at("YY", i, -(A + B * math.sin(omega)))
            at("ZZ", i, -(A - B))
    elif spec.family == "case2":
        A, B, omega = p["A"], p["B"], p["omega"]
        for i in range(1, L):
            at("Z", i, B * math.cos(omega))
            at("IZ", i, B * math.cos(omega))
            at("XX", i, A - B * math.sin(omega))
            at("YY", i, A + B * math.sin(omega))
            at("ZZ", i, -(A - B))
    elif spec.family == "type2":
        A, B, gamma = p["A"], p["B"], p["gamma"]
        for i in range(1, L):
            at("Z", i, (A - B) * math.cos(gamma))
            at("IZ", i, -(A - B) * math.cos(gamma))
            at("XX", i, (A - B) * math.sin(gamma))
            at("YY", i, (A - B) * math.sin(gamma))
            at("ZZ", i, -(A + B))
    elif spec.family == "case3":
        A, B, f = p["A"], p["B"], p["f"]
        g = (1 - f * f) / (1 + f * f)
        for i in range(1, L):
            at("Z", i, -(A - B * g))
            at("IZ", i, -(A + B * g))
            at("XX", i, -2 * B * f / (1 + f * f))
            at("YY", i, -2 * B * f / (1 + f * f))
            at("ZZ", i, A - B)
    elif spec.family == "rank1":
        theta = p["theta"]
        for i in range(1, L):
            at("Z", i, math.cos(theta))
            at("IZ", i, -math.cos(theta))
            at("XX", i, math.sin(theta))
            at("YY", i, math.sin(theta))
            at("ZZ", i, -1.0)
    else:
        raise ValueError(f"no traceless Pauli form defined for family {spec.family!r}")
    return terms


def build_hprime(spec: FFModelSpec) -> np.ndarray:
    """Dense matrix of the traceless chain form H' built from its Pauli terms."""
    check_sites(spec.L)
    return assemble(hprime_terms(spec))


def chain_from_hprime(hprime: np.ndarray, spec: FFModelSpec) -> np.ndarray:
    """Recover the PSD chain from H': H = ((L-1) c0 I + H') / 4."""
    c0 = dimer_trace(spec)
    dim = hprime.shape[0]
    return ((spec.L - 1) * c0 * np.eye(dim) + hprime) / 4.0


def omega_from_theta(theta: float) -> float:
    """Pairing angle of the type1 dimer whose kernel is the theta product pair.

    cos(omega/2) = sin^2(theta/2) / sqrt(sin^4(theta/2) + cos^4(theta/2)).
    """
    if not 0.0 < theta < math.pi:
        raise ValueError(f"theta must lie in the open interval (0, pi), got {theta}")
    s2 = math.sin(theta / 2) ** 2
    c2 = math.cos(theta / 2) ** 2
    return 2.0 * math.acos(s2 / math.sqrt(s2 * s2 + c2 * c2))


def theta_from_omega(omega: float) -> float:
    """Inverse of :func:`omega_from_theta` on (0, pi)."""
    if not 0.0 < omega < math.pi:
        raise ValueError(f"omega must lie in the open interval (0, pi), got {omega}")
    k = math.cos(omega / 2)
    s2 = k / (k + math.sin(omega / 2))  # sin^2(theta/2)
    return 2.0 * math.asin(math.sqrt(s2))


def t_matrix(psi: np.ndarray) -> TMatrix:
    """Boundary-product matrix [[<psi|01>, <psi|11>], [-<psi|00>, -<psi|10>]]."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.shape != (4,):
        raise ValueError("psi must be a two-qubit state (length 4)")
    a, b, c, d = psi  # amplitudes on |00>, |01>, |10>, |11>
    entries = np.array(
        [[np.conj(b), np.conj(d)], [-np.conj(a), -np.conj(c)]], dtype=complex
    )
    return TMatrix(entries=entries, source_state=psi.copy())


def rank1_gap_criterion(psi: np.ndarray, rel_tol: float = 1e-9) -> bool:
    """True iff the boundary-product matrix has eigenvalues of distinct modulus.

    Defined for entangled states only; a product state has a singular matrix
    and is rejected.
    """
    tm = t_matrix(psi)
    if abs(tm.determinant()) <= 1e-12:
        raise ValueError("psi is a product state (singular boundary-product matrix)")
    m1, m2 = sorted(abs(tm.eigenvalues()))
    return bool(m2 - m1 > rel_tol * m2)


def singlet_identity_check(psi: np.ndarray) -> float:
    """Residual of reconstructing psi from the unnormalised singlet.

    Returns || psi - det(T)^* (I (x) T^{-dag}) xi || with xi = |01> - |10>;
    the identity holds for every entangled two-qubit state.
    """
    tm = t_matrix(psi)
    det = tm.determinant()
    if abs(det) <= 1e-12:
        raise ValueError("psi is a product state (singular boundary-product matrix)")
    t_inv_dag = np.linalg.inv(tm.entries.conj().T)
    xi = _B01 - _B10
    rebuilt = np.conj(det) * (np.kron(np.eye(2), t_inv_dag) @ xi)
    return float(np.linalg.norm(np.asarray(psi, dtype=complex) - rebuilt))


def parity_sector_check(dimer: np.ndarray, tol: float = 1e-12) -> bool:
    """True iff the two-site term commutes with Z(x)Z within tol."""
    if dimer.shape != (4, 4):
        raise ValueError("expected a two-site (4x4) operator")
    zz = string_matrix("ZZ")
    return spectral_norm(dimer @ zz - zz @ dimer) <= tol

"""Finite-dimensional operator algebra for the extended-space builders.

Conventions fixed here and shared by every other module:

* vectorization is column-stacking (``order="F"``), so
  ``vec(A rho B) = (B^T kron A) vec(rho)``;
* composite-space layout is system factor slowest-varying, auxiliary modes
  following in declaration order;
* truncated bosonic ladders exist in several Fock normalizations, all with
  the number operator ``a_dag a = diag(0, ..., n_F-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import DimensionMismatch, InvalidParams, ZeroWeight

__all__ = [
    "FOCK_CONVENTIONS",
    "SystemSpec",
    "SuperOpSet",
    "ladder",
    "vec",
    "unvec",
    "lift_left",
    "lift_right",
    "kron_compose",
    "embed_factor",
    "fock_frame_rescale",
    "convention_weights",
    "build_superop_set",
    "thermal_state",
    "vacuum_state",
    "pauli",
]

#: Supported Fock normalizations, as (annihilation, creation) entry rules
#: acting on level n: a|n> = f_a(n)|n-1>, a_dag|n> = f_c(n)|n+1>.
FOCK_CONVENTIONS = {
    "Normalized": (lambda n: np.sqrt(n), lambda n: np.sqrt(n + 1.0)),
    "UnnormPlain": (lambda n: float(n), lambda n: 1.0),
    "UnnormLeftSign": (lambda n: -float(n), lambda n: -1.0),
    "UnnormShift": (lambda n: 1.0, lambda n: n + 1.0),
}

_PAULI = {
    "i": np.eye(2, dtype=complex),
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


def pauli(name: str) -> np.ndarray:
    """Return a Pauli matrix by name ('i', 'x', 'y', 'z'; 'sz' etc. accepted)."""
    key = name.lower().removeprefix("sigma_").removeprefix("sigma").removeprefix("s")
    if key not in _PAULI:
        raise InvalidParams(f"unknown Pauli name {name!r}")
    return _PAULI[key].copy()


@dataclass(frozen=True)
class SystemSpec:
    """System Hamiltonian and coupling operator."""

    H_s: np.ndarray
    S: np.ndarray

    def __post_init__(self):
        H = np.atleast_2d(np.asarray(self.H_s, dtype=complex))
        S = np.atleast_2d(np.asarray(self.S, dtype=complex))
        if H.shape != S.shape or H.shape[0] != H.shape[1]:
            raise DimensionMismatch(
                f"H_s {H.shape} and S {S.shape} must be square and equal-sized"
            )
        for name, M in (("H_s", H), ("S", S)):
            if np.max(np.abs(M - M.conj().T)) > 1e-12:
                raise InvalidParams(f"{name} is not Hermitian to 1e-12")
        object.__setattr__(self, "H_s", H)
        object.__setattr__(self, "S", S)

    @property
    def dim_s(self):
        return self.H_s.shape[0]


def ladder(n_F: int, conv: str = "Normalized"):
    """Truncated annihilation/creation pair in the given Fock convention.

    In every convention the annihilation operator lowers the level index by
    one, creation raises it by one, and ``a_dag @ a = diag(0, ..., n_F-1)``.
    """
    if n_F < 1:
        raise InvalidParams(f"n_F must be >= 1, got {n_F}")
    if conv not in FOCK_CONVENTIONS:
        raise InvalidParams(
            f"unknown Fock convention {conv!r}; expected one of "
            f"{sorted(FOCK_CONVENTIONS)}"
        )
    f_a, f_c = FOCK_CONVENTIONS[conv]
    a = np.zeros((n_F, n_F), dtype=complex)
    a_dag = np.zeros((n_F, n_F), dtype=complex)
    for n in range(1, n_F):
        a[n - 1, n] = f_a(n)
    for n in range(n_F - 1):
        a_dag[n + 1, n] = f_c(n)
    return a, a_dag


def vec(rho):
    """Column-stack an operator into a vector."""
    return np.asarray(rho, dtype=complex).reshape(-1, order="F")


def unvec(v, dim: int):
    """Inverse of :func:`vec` for a dim x dim operator."""
    v = np.asarray(v)
    if v.size != dim * dim:
        raise DimensionMismatch(f"vector of size {v.size} is not {dim}x{dim}")
    return v.reshape((dim, dim), order="F")


def _check_dims(op, dims):
    op = np.asarray(op, dtype=complex)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionMismatch(f"operator must be square, got shape {op.shape}")
    if dims is not None and int(np.prod(dims)) != op.shape[0]:
        raise DimensionMismatch(
            f"layout dims {tuple(dims)} (product {int(np.prod(dims))}) do not "
            f"match operator dimension {op.shape[0]}"
        )
    return op


def lift_left(op, dims=None):
    """Left-multiplication superoperator: vec(A rho) = lift_left(A) vec(rho)."""
    A = _check_dims(op, dims)
    return np.kron(np.eye(A.shape[0], dtype=complex), A)


def lift_right(op, dims=None):
    """Right-multiplication superoperator: vec(rho A) = lift_right(A) vec(rho)."""
    A = _check_dims(op, dims)
    return np.kron(A.T, np.eye(A.shape[0], dtype=complex))


def kron_compose(factors):
    """Kronecker product in layout order (system slowest, then modes)."""
    mats = [np.asarray(f, dtype=complex) for f in factors]
    if not mats:
        raise InvalidParams("kron_compose needs at least one factor")
    return reduce(np.kron, mats)


def embed_factor(op, dims, index: int):
    """Embed a single-factor operator into the composite space at ``index``."""
    dims = list(dims)
    op = np.asarray(op, dtype=complex)
    if op.shape != (dims[index], dims[index]):
        raise DimensionMismatch(
            f"operator shape {op.shape} does not match dims[{index}]={dims[index]}"
        )
    factors = [np.eye(d, dtype=complex) for d in dims]
    factors[index] = op
    return kron_compose(factors)


def fock_frame_rescale(L, weights):
    """Diagonal similarity L' = D L D^{-1} with D = diag(weights).

    Used to move generators between Fock conventions (the weights are indexed
    by the mode level; compose per-factor weight vectors with an outer
    product for multi-factor spaces).  The spectrum is preserved exactly in
    exact arithmetic.
    """
    L = np.asarray(L)
    w = np.asarray(weights, dtype=complex).ravel()
    if np.any(w == 0):
        raise ZeroWeight("rescaling weights must all be nonzero")
    if w.size != L.shape[0] or L.shape[0] != L.shape[1]:
        raise DimensionMismatch(
            f"weight vector of length {w.size} does not match matrix {L.shape}"
        )
    return (w[:, None] * L) / w[None, :]


def convention_weights(conv_from: str, conv_to: str, n_F: int):
    """Per-level weights w with diag(w) a_from diag(w)^{-1} = a_to.

    Relative to the Normalized convention the weights are
    UnnormPlain: (n!)^{-1/2}, UnnormShift: (n!)^{1/2},
    UnnormLeftSign: (-1)^n (n!)^{-1/2}.
    """
    def to_normalized(conv):
        n = np.arange(n_F, dtype=float)
        log_fact = np.cumsum(np.concatenate(([0.0], np.log(np.maximum(n[1:], 1)))))
        if conv == "Normalized":
            return np.ones(n_F)
        if conv == "UnnormPlain":
            return np.exp(-0.5 * log_fact)
        if conv == "UnnormShift":
            return np.exp(0.5 * log_fact)
        if conv == "UnnormLeftSign":
            return (-1.0) ** np.arange(n_F) * np.exp(-0.5 * log_fact)
        raise InvalidParams(f"unknown Fock convention {conv!r}")

    return to_normalized(conv_to) / to_normalized(conv_from)


@dataclass(frozen=True)
class SuperOpSet:
    """Classical/quantum superoperators of the coupling, plus per-mode
    Keldysh ladder combinations, all in the flattened extended space."""

    Sc: np.ndarray
    Sq: np.ndarray
    #: per mode: dict with keys a_c, a_q, a_c_dag, a_q_dag, L_a, R_a, L_ad, R_ad
    modes: tuple


def build_superop_set(S_full, mode_ops) -> SuperOpSet:
    """Assemble the superoperator combinations used by the builders.

    ``S_full`` is the coupling operator embedded in the full Hilbert space;
    ``mode_ops`` is a list of (a_full, a_dag_full) pairs, one per auxiliary
    mode.  The classical/quantum combinations carry the 1/sqrt(2)
    normalization; the Keldysh mode operators are
    a_c = (a_+ + a_-)/sqrt(2), a_q = (a_+ - a_-)/sqrt(2) with a_+/a_- the
    left/right multiplications.
    """
    s2 = np.sqrt(2.0)
    Ls, Rs = lift_left(S_full), lift_right(S_full)
    modes = []
    for a_full, ad_full in mode_ops:
        La, Ra = lift_left(a_full), lift_right(a_full)
        Lad, Rad = lift_left(ad_full), lift_right(ad_full)
        modes.append(
            {
                "a_c": (La + Ra) / s2,
                "a_q": (La - Ra) / s2,
                "a_c_dag": (Lad + Rad) / s2,
                "a_q_dag": (Lad - Rad) / s2,
                "L_a": La,
                "R_a": Ra,
                "L_ad": Lad,
                "R_ad": Rad,
            }
        )
    return SuperOpSet(Sc=(Ls + Rs) / s2, Sq=(Ls - Rs) / s2, modes=tuple(modes))


def thermal_state(nbar: float, n_F: int):
    """Truncated thermal density matrix of a single mode (normalized)."""
    if nbar <= 0.0:
        p = np.zeros(n_F)
        p[0] = 1.0
    else:
        ratio = nbar / (1.0 + nbar)
        p = ratio ** np.arange(n_F)
        p = p / p.sum()
    return np.diag(p).astype(complex)


def vacuum_state(n_F: int):
    """|0><0| of a single mode."""
    rho = np.zeros((n_F, n_F), dtype=complex)
    rho[0, 0] = 1.0
    return rho

"""Damped-oscillator bath correlation functions and their decompositions.

The environment is characterized by a two-point correlation function built
from damped-exponential pairs,

    C(t >= 0) = sum_k [ c1_k exp(-i(zeta_k - i gamma0_k) t)
                       + c2_k exp(+i(zeta_k + i gamma0_k) t) ],

extended to t < 0 by Hermitian reflection C(-t) = conj(C(t)).  The pairs are
either supplied directly or derived from the physical parameters of a
Brownian-oscillator spectral density in one of three limiting regimes
(classical high-temperature, quasi-thermal weak damping, Debye overdamped).

This module also provides the retarded-response decomposition
(kappa, E, eta, eta') used by the Hilbert-space embedding, and the closed-form
power spectrum used for fluctuation-dissipation residual checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BasisUnsupported,
    InvalidParams,
    MissingProvenance,
    OverdampedUnsupported,
    RegimeViolation,
)

__all__ = [
    "BrownianParams",
    "CorrelatorModel",
    "RIDecomposition",
    "FdtReport",
    "spectral_density",
    "model_from_regime",
    "model_from_pairs",
    "eval_correlator",
    "power_spectrum",
    "fdt_residual",
    "ri_decompose",
    "REGIMES",
]

#: Recognized limiting regimes of the Brownian-oscillator correlator.
REGIMES = ("Classical", "QuasiThermal", "Debye", "Custom")

#: Overdamped ratio gamma0/omega0 required before the Debye limit is accepted.
DEBYE_MIN_RATIO = 5.0

#: High-temperature bound beta*zeta for the classical phase-space basis.
CLASSICALQP_MAX_BETA_ZETA = 0.2


@dataclass(frozen=True)
class BrownianParams:
    """Physical parameters of the Brownian-oscillator spectral density.

    Units follow hbar = k_B = 1; ``c0`` carries frequency^{3/2}.
    """

    c0: float
    omega0: float
    gamma0: float
    beta: float

    def __post_init__(self):
        if self.c0 < 0:
            raise InvalidParams(f"c0 must be >= 0, got {self.c0}")
        if self.omega0 <= 0:
            raise InvalidParams(f"omega0 must be > 0, got {self.omega0}")
        if self.gamma0 < 0:
            raise InvalidParams(f"gamma0 must be >= 0, got {self.gamma0}")
        if self.beta <= 0:
            raise InvalidParams(f"beta must be > 0, got {self.beta}")

    @property
    def zeta(self):
        """Effective oscillation frequency sqrt(omega0^2 - gamma0^2).

        Only defined in the underdamped regime omega0 > gamma0.
        """
        if self.omega0 <= self.gamma0:
            raise OverdampedUnsupported(
                f"zeta undefined for omega0={self.omega0} <= gamma0={self.gamma0}"
            )
        return float(np.sqrt(self.omega0**2 - self.gamma0**2))

    @property
    def omega_debye(self):
        """Effective Debye relaxation rate omega0^2 / (2 gamma0)."""
        return self.omega0**2 / (2.0 * self.gamma0)

    def n_bose(self, omega):
        """Bose occupation 1/(e^{beta*omega} - 1)."""
        return 1.0 / np.expm1(self.beta * omega)


@dataclass(frozen=True)
class CorrelatorModel:
    """Correlation function as a list of damped-exponential pairs.

    Each pair is a tuple ``(c1, c2, zeta, gamma0)`` with complex weights and
    real frequency/rate.  ``provenance``/``regime`` record the physical
    parameters the pairs were derived from, when known.
    """

    pairs: tuple
    provenance: BrownianParams | None = None
    regime: str = "Custom"

    def __post_init__(self):
        pairs = tuple(
            (complex(c1), complex(c2), float(zeta), float(gamma0))
            for (c1, c2, zeta, gamma0) in self.pairs
        )
        object.__setattr__(self, "pairs", pairs)
        if self.regime not in REGIMES:
            raise InvalidParams(f"unknown regime tag {self.regime!r}")
        for c1, c2, zeta, gamma0 in pairs:
            if gamma0 < 0:
                raise InvalidParams(
                    f"pair decay rate must be >= 0, got gamma0={gamma0}"
                )
        if pairs and self.value_at_zero.real < -1e-12:
            raise InvalidParams(
                f"Re C(0) = {self.value_at_zero.real} < 0 is not a valid "
                "autocorrelation"
            )

    @property
    def value_at_zero(self):
        """C(0) = sum of all pair weights."""
        return complex(sum(c1 + c2 for c1, c2, _, _ in self.pairs))

    def single_pair(self):
        """Return the unique pair, for constructions restricted to one mode."""
        if len(self.pairs) != 1:
            raise InvalidParams(
                f"operation requires a single-pair model, got {len(self.pairs)}"
            )
        return self.pairs[0]


@dataclass(frozen=True)
class RIDecomposition:
    """Retarded-response decomposition of a correlator.

    Re C(t) and Im C(t) are represented through a K-dimensional linear mode
    space:  Re C(t) = kappa^dag e^{-iEt} eta  and
    Im C(t) = kappa^dag e^{-iEt} eta'  for t >= 0.
    """

    kappa: np.ndarray
    E: np.ndarray
    eta: np.ndarray
    eta_prime: np.ndarray
    basis_tag: str
    model: CorrelatorModel = field(repr=False)

    def __post_init__(self):
        for name in ("kappa", "E", "eta", "eta_prime"):
            object.__setattr__(
                self, name, np.array(getattr(self, name), dtype=complex)
            )
        evals = np.linalg.eigvals(-1j * self.E)
        if np.any(evals.real > 1e-12):
            raise InvalidParams(
                "mode matrix E has a growing eigenvalue; propagator not decaying"
            )

    @property
    def n_modes(self):
        return len(self.kappa)

    def reconstruct(self, t):
        """Return (Re C, Im C) reconstructed from the mode propagator at ``t >= 0``."""
        P = _expm(-1j * self.E * t)
        re = complex(self.kappa.conj() @ P @ self.eta)
        im = complex(self.kappa.conj() @ P @ self.eta_prime)
        return re, im

    def reconstruction_residual(self, t_grid):
        """Max deviation of the reconstructed Re/Im parts from the model."""
        err = 0.0
        for t in np.asarray(t_grid, dtype=float):
            re, im = self.reconstruct(t)
            ct = eval_correlator(self.model, t)
            err = max(err, abs(re - ct.real), abs(im - ct.imag))
        return err


def _expm(M):
    # local import keeps scipy off the module-import path for light users
    from scipy.linalg import expm

    return expm(M)


def spectral_density(params: BrownianParams, omega):
    """Brownian-oscillator spectral density J(omega).

    J(w) = 4 c0^2 gamma0 w / [(w^2 - omega0^2)^2 + 4 gamma0^2 w^2];
    antisymmetric in omega.
    """
    w = np.asarray(omega, dtype=float)
    num = 4.0 * params.c0**2 * params.gamma0 * w
    den = (w**2 - params.omega0**2) ** 2 + 4.0 * params.gamma0**2 * w**2
    out = num / den
    return out if out.ndim else float(out)


def _classical_pairs(params: BrownianParams):
    zeta = params.zeta
    g0 = params.gamma0
    pref = params.c0**2 / (4.0 * zeta)
    zp = params.beta * (zeta - 1j * g0) / 2.0
    zm = params.beta * (zeta + 1j * g0) / 2.0
    c1 = pref * (1.0 / np.tan(zp) + 1.0)
    c2 = pref * (1.0 / np.tan(zm) - 1.0)
    return ((c1, c2, zeta, g0),)


def _quasi_thermal_pairs(params: BrownianParams):
    zeta = params.zeta
    nb = params.n_bose(zeta)
    g2 = params.c0**2 / (2.0 * zeta)
    return ((g2 * (nb + 1.0), g2 * nb, zeta, params.gamma0),)


def _debye_pairs(params: BrownianParams):
    wd = params.omega_debye
    c1 = params.c0**2 / (4.0 * params.gamma0) * (
        1.0 / np.tan(params.beta * wd / 2.0) - 1j
    )
    return ((c1, 0.0, 0.0, wd),)


def model_from_regime(params: BrownianParams, regime: str) -> CorrelatorModel:
    """Derive the exponential pairs of a limiting regime.

    Classical: high-temperature form, one pair with coth coefficients of the
    complex poles.  QuasiThermal: weak damping, one pair weighted by Bose
    factors at the effective frequency.  Debye: strong damping
    (gamma0 >= 5 omega0 enforced), single real decay at rate
    omega_D = omega0^2/(2 gamma0).
    """
    if regime in ("Classical", "QuasiThermal"):
        if params.omega0 <= params.gamma0:
            raise OverdampedUnsupported(
                f"{regime} regime requires omega0 > gamma0, got "
                f"omega0={params.omega0}, gamma0={params.gamma0}"
            )
        pairs = (
            _classical_pairs(params)
            if regime == "Classical"
            else _quasi_thermal_pairs(params)
        )
    elif regime == "Debye":
        if params.gamma0 < DEBYE_MIN_RATIO * params.omega0:
            raise RegimeViolation(
                f"Debye limit requires gamma0 >= {DEBYE_MIN_RATIO}*omega0, got "
                f"gamma0/omega0 = {params.gamma0 / params.omega0:.3g}"
            )
        pairs = _debye_pairs(params)
    else:
        raise RegimeViolation(f"cannot derive pairs for regime {regime!r}")
    return CorrelatorModel(pairs=pairs, provenance=params, regime=regime)


def model_from_pairs(pairs, provenance=None, regime="Custom") -> CorrelatorModel:
    """Wrap explicit (c1, c2, zeta, gamma0) tuples into a model."""
    return CorrelatorModel(pairs=tuple(pairs), provenance=provenance, regime=regime)


def eval_correlator(model: CorrelatorModel, t):
    """Evaluate C(t); negative times by Hermitian reflection, never directly."""
    t_arr = np.asarray(t, dtype=float)
    if t_arr.ndim == 0:
        return _eval_scalar(model, float(t_arr))
    return np.array([_eval_scalar(model, tk) for tk in t_arr.ravel()]).reshape(
        t_arr.shape
    )


def _eval_scalar(model, t):
    if t < 0.0:
        return np.conj(_eval_scalar(model, -t))
    val = 0.0 + 0.0j
    for c1, c2, zeta, gamma0 in model.pairs:
        val += c1 * np.exp(-1j * (zeta - 1j * gamma0) * t)
        val += c2 * np.exp(1j * (zeta + 1j * gamma0) * t)
    return complex(val)


def power_spectrum(model: CorrelatorModel, omega):
    """Closed-form Fourier transform S(w) = int dt e^{i w t} C(t).

    With the Hermitian extension the transform of each pair is a sum of
    Lorentzians:

        S(w) = sum_k 2 Re[ c1_k / (gamma0_k + i(zeta_k - w))
                          + c2_k / (gamma0_k - i(zeta_k + w)) ].
    """
    w = np.asarray(omega, dtype=float)
    out = np.zeros_like(w, dtype=float)
    for c1, c2, zeta, gamma0 in model.pairs:
        out = out + 2.0 * (
            c1 / (gamma0 + 1j * (zeta - w)) + c2 / (gamma0 - 1j * (zeta + w))
        ).real
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class FdtReport:
    """Pointwise fluctuation-dissipation residuals of a model's spectrum."""

    omega_grid: np.ndarray
    spectrum: np.ndarray
    reference: np.ndarray
    residual: np.ndarray

    @property
    def max_abs(self):
        return float(np.max(np.abs(self.residual)))

    @property
    def max_relative(self):
        scale = np.max(np.abs(self.reference))
        return self.max_abs / scale if scale > 0 else self.max_abs


def fdt_residual(model: CorrelatorModel, params: BrownianParams, omega_grid) -> FdtReport:
    """Compare the model spectrum with the detailed-balance reference.

    The reference is J(w)/(1 - e^{-beta w}) from the originating spectral
    density; the model side is the closed-form Lorentzian spectrum.  The
    residual measures the truncation of the pair decomposition (neglected
    Matsubara contributions) and is reported, not asserted.
    """
    if params is None:
        params = model.provenance
    if params is None:
        raise MissingProvenance(
            "fdt_residual needs the BrownianParams the model was derived from"
        )
    w = np.asarray(omega_grid, dtype=float)
    got = power_spectrum(model, w)
    with np.errstate(divide="ignore", invalid="ignore"):
        ref = np.where(
            w == 0.0,
            # limit J/(1-e^{-bw}) -> J'(0)/beta at w=0
            4.0 * params.c0**2 * params.gamma0 / (params.beta * params.omega0**4),
            spectral_density(params, w) / -np.expm1(-params.beta * w),
        )
    return FdtReport(omega_grid=w, spectrum=got, reference=ref, residual=got - ref)


def _ri_expdiag(pair, model):
    c1, c2, zeta, gamma0 = pair
    E = np.diag([zeta - 1j * gamma0, -zeta - 1j * gamma0])
    kappa = np.array([1.0, 1.0])
    eta = np.array([(c1 + np.conj(c2)) / 2.0, (np.conj(c1) + c2) / 2.0])
    eta_prime = np.array(
        [(c1 - np.conj(c2)) / 2.0j, (c2 - np.conj(c1)) / 2.0j]
    )
    return RIDecomposition(kappa, E, eta, eta_prime, "ExpDiagonal", model)


def _ri_phasespace(pair, model):
    c1, c2, zeta, gamma0 = pair
    E = np.array([[-1j * gamma0, zeta], [zeta, -1j * gamma0]])
    kappa = np.array([1.0, 0.0])
    eta = np.array([np.real(c1 + c2), 1j * np.imag(c1 - c2)])
    eta_prime = np.array([np.imag(c1 + c2), 1j * np.real(c2 - c1)])
    return RIDecomposition(kappa, E, eta, eta_prime, "PhaseSpace", model)


def _ri_classical_qp(pair, model):
    params = model.provenance
    if params is None or model.regime != "Classical":
        raise RegimeViolation(
            "ClassicalQP basis requires a Classical-regime model with provenance"
        )
    bz = params.beta * params.zeta
    if bz > CLASSICALQP_MAX_BETA_ZETA:
        raise RegimeViolation(
            f"ClassicalQP basis requires beta*zeta <= {CLASSICALQP_MAX_BETA_ZETA}, "
            f"got {bz:.3g}"
        )
    w0, g0 = params.omega0, params.gamma0
    E = -1j * np.array([[0.0, w0], [-w0, 2.0 * g0]])
    kappa = np.array([1.0, 0.0])
    pos_weight = params.c0**2 / (params.beta * w0**2)
    mom_weight = params.c0**2 / (2.0 * w0)
    eta = np.array([pos_weight, 0.0])
    eta_prime = np.array([0.0, mom_weight])
    # The position/momentum response reproduces the equipartition
    # (leading high-temperature) correlator exactly; the coth pair differs
    # from it by O((beta*zeta)^2) corrections.  Attach the pair this basis
    # actually represents so the reconstruction invariant is exact.
    zeta = params.zeta
    c1 = pos_weight / 2.0 + mom_weight * w0 / (2.0 * zeta) + 1j * pos_weight * g0 / (2.0 * zeta)
    c2 = pos_weight / 2.0 - mom_weight * w0 / (2.0 * zeta) - 1j * pos_weight * g0 / (2.0 * zeta)
    qp_model = CorrelatorModel(
        pairs=((c1, c2, zeta, g0),), provenance=params, regime="Classical"
    )
    return RIDecomposition(kappa, E, eta, eta_prime, "ClassicalQP", qp_model)


_RI_BUILDERS = {
    "ExpDiagonal": _ri_expdiag,
    "PhaseSpace": _ri_phasespace,
    "ClassicalQP": _ri_classical_qp,
}


def ri_decompose(model: CorrelatorModel, basis_tag: str) -> RIDecomposition:
    """Build the (kappa, E, eta, eta') mode decomposition in a named basis.

    ExpDiagonal: diagonal mode matrix with the pair's complex frequencies.
    PhaseSpace: real symmetric rotation mixing the two exponentials.
    ClassicalQP: position/momentum response of the classical oscillator;
    restricted to high-temperature Classical models (beta*zeta <= 0.2), where
    the weights reduce to the equipartition values c0^2/(beta omega0^2) and
    c0^2/(2 omega0).
    """
    if basis_tag not in _RI_BUILDERS:
        raise BasisUnsupported(
            f"unknown basis {basis_tag!r}; expected one of {sorted(_RI_BUILDERS)}"
        )
    pair = model.single_pair()
    return _RI_BUILDERS[basis_tag](pair, model)

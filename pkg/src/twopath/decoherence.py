"""Which-path decoherence from photons emitted at the slits.

Each photon is a spherical wave ``exp(iK|r - r0|) / |r - r0|`` centred on
the slit the emitter passed.  The overlap of the left- and right-slit waves
is ``sin(Kd) / (Kd)`` and ``N`` independent photons multiply it ``N``
times.  :func:`overlap_oracle` recomputes the single-photon overlap by
direct quadrature in prolate spheroidal coordinates, so the closed form has
an independent numerical check.

Lengths are in micrometres and wavenumbers in rad/um.  Only ``K * d``
matters.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NonFiniteInput, QuadratureBudgetExceeded

SERIES_CUTOFF = 1e-4
CONVERGENCE_TOL = 1e-6
MAX_POINTS_ENV = "TWOPATH_QUAD_MAX_POINTS"
DEFAULT_MAX_POINTS = 20_000_000

# depth of the log-graded xi mesh below xi_max - 1, in e-folds
_XI_DEPTH = 45.0
_PANEL_WIDTH = 1.0


@dataclass(frozen=True)
class EmissionModel:
    K: float
    d: float
    N: int = 1

    def __post_init__(self):
        for name in ("K", "d"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise NonFiniteInput(f"{name}={v!r} is not finite")
            if v <= 0:
                raise ValueError(f"{name} must be positive, got {v!r}")
        if int(self.N) != self.N or self.N < 0:
            raise ValueError(f"N must be a non-negative integer, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))

    @classmethod
    def from_wavelength(cls, wavelength: float, d: float, N: int = 1) -> "EmissionModel":
        return cls(2.0 * math.pi / wavelength, d, N)

    @property
    def f(self) -> float:
        """Focal half-distance of the prolate coordinates."""
        return 0.5 * self.d


@dataclass(frozen=True)
class QuadratureSpec:
    """Cutoff ``xi_max`` of the prolate radial coordinate and Gauss-Legendre
    nodes per panel along ``xi`` and ``eta``."""

    xi_max: float = 1e3
    nodes_xi: int = 16
    nodes_eta: int = 16

    def __post_init__(self):
        if not math.isfinite(self.xi_max) or self.xi_max <= 1.0:
            raise ValueError(f"xi_max must be finite and > 1, got {self.xi_max!r}")
        if self.nodes_xi < 8 or self.nodes_eta < 8:
            raise ValueError("node counts must be at least 8")

    def refined(self) -> "QuadratureSpec":
        return QuadratureSpec(self.xi_max, 2 * self.nodes_xi, 2 * self.nodes_eta)


@dataclass(frozen=True)
class OverlapResult:
    """Normalized overlap plus the diagnostics of the convergence check."""

    value: complex
    refined_value: complex | None
    converged: bool
    n_points: int

    def __complex__(self) -> complex:
        return self.value

    def __abs__(self) -> float:
        return abs(self.value)

    @property
    def change_on_refinement(self) -> float:
        if self.refined_value is None:
            return float("nan")
        return abs(self.refined_value - self.value)


def sinc_overlap(K: float, d: float) -> float:
    """``sin(Kd) / (Kd)``; even in ``Kd`` and equal to 1 at ``Kd = 0``."""
    x = K * d
    if not math.isfinite(x):
        raise NonFiniteInput(f"K*d={x!r} is not finite")
    if abs(x) < SERIES_CUTOFF:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return math.sin(x) / x


def visibility_after_emission(model: EmissionModel) -> float:
    if model.N == 0:
        return 1.0
    return abs(sinc_overlap(model.K, model.d)) ** model.N


def max_quadrature_points() -> int:
    raw = os.environ.get(MAX_POINTS_ENV)
    return int(raw) if raw else DEFAULT_MAX_POINTS


def norm_integral_closed_form(xi_max: float) -> float:
    """``int_1^xi_max int_-1^1 (xi+eta)/(xi-eta) deta dxi`` in closed form.

    This is the reduced self-overlap of one spherical wave over the cutoff
    ellipsoid (divide out ``2 pi f``).  Used only as a test reference.
    """
    return (xi_max ** 2 - 1.0) * math.log((xi_max + 1.0) / (xi_max - 1.0))


def cutoff_overlap_closed_form(Kd: float, xi_max: float) -> float:
    """Exact normalized overlap on the ellipsoid ``xi <= xi_max``.

    The cross term integrates to ``2 (xi_max - 1) sinc(Kd)`` and each norm
    to :func:`norm_integral_closed_form`, so the ratio approaches
    ``sinc(Kd)`` like ``1 - 1/xi_max``.
    """
    return (2.0 * (xi_max - 1.0) * sinc_overlap(Kd, 1.0)
            / norm_integral_closed_form(xi_max))


@lru_cache(maxsize=32)
def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _panel_rule(lo: float, hi: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre on ``[lo, hi]`` with unit-width panels."""
    n_panels = max(1, math.ceil((hi - lo) / _PANEL_WIDTH))
    x, w = _gauss_legendre(n)
    edges = np.linspace(lo, hi, n_panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    return ((mid[:, None] + half[:, None] * x).ravel(),
            (half[:, None] * w).ravel())


def _xi_rule(spec: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    # xi = 1 + exp(s): geometric grading towards the focal line xi = 1,
    # where the norm integrands have a logarithmic endpoint singularity
    s_hi = math.log(spec.xi_max - 1.0)
    s, w = _panel_rule(s_hi - _XI_DEPTH, s_hi, spec.nodes_xi)
    sigma = np.exp(s)
    return sigma, w * sigma


def _eta_count(sigma: np.ndarray, n: int) -> int:
    spans = np.log1p(1.0 / sigma)
    panels = np.maximum(1, np.ceil(spans / _PANEL_WIDTH)).astype(int)
    return int(2 * n * panels.sum())


def _spherical_wave(r: np.ndarray, K: float) -> np.ndarray:
    return np.exp(1j * K * r) / r


def _eta_rule(sigma: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes for the ``eta`` integral of every ``xi`` strip, flattened.

    Each half of ``[-1, 1]`` is mapped logarithmically in the distance to
    the nearer focus, ``tau = log(xi - |eta|)``, so the ``1/r`` peak next
    to a slit is resolved however close ``xi`` is to 1.  ``sigma = xi - 1``
    is carried separately to avoid cancellation.

    Returns the strip index, ``xi - |eta|`` and the weight for ``d|eta|``.
    """
    strip, near, weight = [], [], []
    for i, sg in enumerate(sigma):
        lo = math.log(sg)
        tau, w = _panel_rule(lo, lo + math.log1p(1.0 / sg), n)
        r = np.exp(tau)
        strip.append(np.full(r.shape, i))
        near.append(r)
        weight.append(w * r)        # d|eta| = (xi - |eta|) dtau
    return np.concatenate(strip), np.concatenate(near), np.concatenate(weight)


def _evaluate(K: float, d: float, spec: QuadratureSpec) -> complex:
    f = 0.5 * d
    sigma, w_xi = _xi_rule(spec)
    strip, near, w_eta = _eta_rule(sigma, spec.nodes_eta)
    w = w_xi[strip] * w_eta
    far = 2.0 + 2.0 * sigma[strip] - near   # xi + |eta|
    jac = f ** 3 * near * far               # f^3 (xi^2 - eta^2)
    cross = 0.0j
    norm_l = 0.0
    norm_r = 0.0
    # eta > 0 puts the left slit at the near focus; eta < 0 mirrors it
    for r_l, r_r in ((near, far), (far, near)):
        phi_l = _spherical_wave(f * r_l, K)
        phi_r = _spherical_wave(f * r_r, K)
        cross += np.dot(w, phi_l * np.conj(phi_r) * jac)
        norm_l += np.dot(w, np.abs(phi_l) ** 2 * jac)
        norm_r += np.dot(w, np.abs(phi_r) ** 2 * jac)
    # the azimuthal factor 2 pi cancels in the normalized ratio
    return complex(cross / math.sqrt(norm_l * norm_r))


def planned_points(spec: QuadratureSpec) -> int:
    sigma, _ = _xi_rule(spec)
    return _eta_count(sigma, spec.nodes_eta)


def overlap_oracle(K: float, d: float, spec: QuadratureSpec | None = None, *,
                   check_convergence: bool = True,
                   max_points: int | None = None) -> OverlapResult:
    """Normalized overlap of the left- and right-slit spherical waves.

    Computes ``<phi_R|phi_L> / sqrt(<phi_L|phi_L> <phi_R|phi_R>)`` with every
    inner product integrated over the prolate ellipsoid
    ``1 <= xi <= xi_max`` (foci at the slits).  The amplitudes are evaluated
    point by point from the spherical waves themselves; no antiderivative is
    used.  The result tends to ``sinc(Kd)`` as ``xi_max`` grows, with an
    error of order ``1/xi_max``.

    Parameters
    ----------
    K, d : float
        Photon wavenumber (rad/um) and slit separation (um).
    spec : QuadratureSpec, optional
        Cutoff and node counts; defaults to ``xi_max = 1e3``, 16 x 16 nodes.
    check_convergence : bool
        Re-evaluate with doubled node counts and set ``converged`` to False
        if the value moves by more than 1e-6.
    max_points : int, optional
        Cap on integrand evaluations for the finest pass.  Defaults to the
        ``TWOPATH_QUAD_MAX_POINTS`` environment variable or 2e7.

    Raises
    ------
    QuadratureBudgetExceeded
        If the requested grid would exceed ``max_points``.
    """
    spec = spec or QuadratureSpec()
    for name, v in (("K", K), ("d", d)):
        if not math.isfinite(v):
            raise NonFiniteInput(f"{name}={v!r} is not finite")
    if K < 0 or d <= 0:
        raise ValueError(f"need K >= 0 and d > 0, got K={K!r}, d={d!r}")
    cap = max_points if max_points is not None else max_quadrature_points()
    finest = spec.refined() if check_convergence else spec
    needed = planned_points(finest)
    if needed > cap:
        raise QuadratureBudgetExceeded(
            f"quadrature needs {needed} points, cap is {cap} (set {MAX_POINTS_ENV})"
        )

    value = _evaluate(K, d, spec)
    refined = None
    converged = True
    n_points = planned_points(spec)
    if check_convergence:
        refined = _evaluate(K, d, finest)
        converged = abs(refined - value) <= CONVERGENCE_TOL
        n_points += needed
    return OverlapResult(value, refined, converged, n_points)

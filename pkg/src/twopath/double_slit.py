"""Far-field double-slit pattern and the information stored in its fringes.

The screen density over one period ``Y = 2 pi L / (k d)`` is

    p(y) = (1 / Y) * [1 + 2ab cos(2 pi y / Y + chi)]

Probe pairs ``(y, y + Y/2)`` and ``(y + Y/4, y + 3Y/4)`` each carry a
conditional two-outcome information; together with the path information
they sum to one bit at every ``y``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegeneratePair, NonFiniteInput
from .states import DetectorOverlap, TwoPathState

PAIR_TOL = 1e-15


@dataclass(frozen=True)
class FringeGeometry:
    """De Broglie wavenumber ``k`` (rad/um), slit separation ``d`` and
    screen distance ``L`` (um)."""

    k: float
    d: float
    L: float

    def __post_init__(self):
        for name in ("k", "d", "L"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise NonFiniteInput(f"{name}={v!r} is not finite")
            if v <= 0:
                raise ValueError(f"{name} must be positive, got {v!r}")

    @classmethod
    def from_wavelength(cls, wavelength: float, d: float, L: float) -> "FringeGeometry":
        return cls(2.0 * math.pi / wavelength, d, L)

    @property
    def period(self) -> float:
        return 2.0 * math.pi * self.L / (self.k * self.d)

    @property
    def spatial_frequency(self) -> float:
        """``k d / L`` in rad/um."""
        return self.k * self.d / self.L


@dataclass(frozen=True)
class PatternPoint:
    y: float
    density: float


def canonical_y(y, geom: FringeGeometry):
    return np.mod(y, geom.period)


def _contrast(state: TwoPathState, overlap: DetectorOverlap | None) -> tuple[float, float]:
    amp = 2.0 * state.a * state.b
    if overlap is None:
        return amp, state.chi
    return amp * abs(overlap.overlap), state.chi + overlap.phase


def density(y, state: TwoPathState, geom: FringeGeometry,
            overlap: DetectorOverlap | None = None):
    """Probability density at screen position(s) ``y`` (per um).

    ``y`` may be a scalar or array; it is reduced modulo the period first.
    An optional detector ``overlap`` scales and shifts the fringe term.
    """
    Y = geom.period
    amp, phase = _contrast(state, overlap)
    yc = canonical_y(np.asarray(y, dtype=float), geom)
    p = (1.0 + amp * np.cos(geom.spatial_frequency * yc + phase)) / Y
    p = np.maximum(p, 0.0)
    return float(p) if p.ndim == 0 else p


def pattern_point(y: float, state: TwoPathState, geom: FringeGeometry) -> PatternPoint:
    yc = float(canonical_y(y, geom))
    return PatternPoint(yc, density(yc, state, geom))


def _conditional_info(p_first, p_second):
    total = p_first + p_second
    if np.any(total < PAIR_TOL):
        raise DegeneratePair("probe pair has vanishing total probability")
    return ((p_first - p_second) / total) ** 2


def pair_information(y, state: TwoPathState, geom: FringeGeometry):
    """Return ``(I_A, I_B)`` for the probe pairs anchored at ``y``.

    ``I_A`` uses the points ``y`` and ``y + Y/2``; ``I_B`` uses ``y + Y/4``
    and ``y + 3Y/4``.  Vectorizes over ``y``.
    """
    Y = geom.period
    y = np.asarray(y, dtype=float)
    pa1 = density(y, state, geom)
    pa2 = density(y + 0.5 * Y, state, geom)
    pb1 = density(y + 0.25 * Y, state, geom)
    pb2 = density(y + 0.75 * Y, state, geom)
    i_a = _conditional_info(pa1, pa2)
    i_b = _conditional_info(pb1, pb2)
    if np.ndim(i_a) == 0:
        return float(i_a), float(i_b)
    return i_a, i_b


@lru_cache(maxsize=32)
def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _composite_gl(f, lo: float, hi: float, nodes: int, panel_nodes: int = 16) -> float:
    n_panels = max(1, nodes // panel_nodes)
    per_panel = max(nodes // n_panels, 1)
    x, w = _gauss_legendre(per_panel)
    edges = np.linspace(lo, hi, n_panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    pts = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wts = (half[:, None] * w[None, :]).ravel()
    return float(np.dot(wts, f(pts)))


def fringe_difference_integral(state: TwoPathState, geom: FringeGeometry,
                               quad_nodes: int = 64) -> float:
    """``int_0^{Y/2} [p(y) - p(y + Y/2)]**2 dy`` by composite Gauss-Legendre."""
    if quad_nodes < 16:
        raise ValueError("quad_nodes must be at least 16")
    Y = geom.period

    def integrand(y):
        return (density(y, state, geom) - density(y + 0.5 * Y, state, geom)) ** 2

    return _composite_gl(integrand, 0.0, 0.5 * Y, quad_nodes)


def interference_information_integral(state: TwoPathState, geom: FringeGeometry,
                                      quad_nodes: int = 64) -> float:
    """Information in the full fringe pattern, by quadrature.

    Equals the average of ``I_A + I_B`` over ``y`` in one quarter period,
    i.e. ``Y`` times :func:`fringe_difference_integral`.  The result matches
    ``4 a**2 b**2``.  A prefactor of ``2Y`` instead of ``Y`` would count each
    probe pair twice and give ``8 a**2 b**2``.
    """
    return geom.period * fringe_difference_integral(state, geom, quad_nodes)


def interference_information_closed_form(state: TwoPathState) -> float:
    return 4.0 * state.a ** 2 * state.b ** 2

"""Two-path superposition states and which-path detector records.

A particle crossing a two-path apparatus is described by real amplitudes
``a`` (path 1 / left slit) and ``b`` (path 2 / right slit) together with a
relative phase ``chi`` carried by path 1.  Which-path detectors are never
represented as vectors; only the complex overlap ``<D_R|D_L>`` is kept,
because every observable depends on it alone.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import NonFiniteInput, NormalizationError

TAU = 2.0 * math.pi
NORM_TOL = 1e-9
OVERLAP_TOL = 1e-12


def wrap_phase(chi: float) -> float:
    """Map ``chi`` into ``[0, 2*pi)``."""
    w = math.fmod(chi, TAU)
    if w < 0.0:
        w += TAU
    # fmod of a tiny negative number plus TAU rounds up to TAU
    return 0.0 if w >= TAU else w


@dataclass(frozen=True)
class TwoPathState:
    """Pure state ``a e^{i chi}|1> + b|2>`` with real ``a``, ``b``.

    Signs of ``a`` and ``b`` are kept as given.  ``chi`` is wrapped into
    ``[0, 2*pi)`` on construction.
    """

    a: float
    b: float
    chi: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "chi"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise NonFiniteInput(f"{name}={v!r} is not finite")
        norm = self.a * self.a + self.b * self.b
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError(
                f"a**2 + b**2 = {norm!r}; expected 1 within {NORM_TOL:g}"
            )
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "chi", wrap_phase(float(self.chi)))

    @classmethod
    def from_weight(cls, asq: float, chi: float = 0.0) -> "TwoPathState":
        """Build a state from the path-1 weight ``a**2`` (non-negative roots)."""
        if not math.isfinite(asq):
            raise NonFiniteInput(f"asq={asq!r} is not finite")
        if not 0.0 <= asq <= 1.0:
            raise NormalizationError(f"asq={asq!r} outside [0, 1]")
        return cls(math.sqrt(asq), math.sqrt(1.0 - asq), chi)

    @property
    def fringe_amplitude(self) -> float:
        """``2ab``, the largest attainable fringe contrast for this state."""
        return 2.0 * self.a * self.b


def make_state(a: float, b: float, chi: float = 0.0) -> TwoPathState:
    return TwoPathState(a, b, chi)


@dataclass(frozen=True)
class DetectorOverlap:
    """Scalar product ``<D_R|D_L>`` of the two which-path detector states."""

    overlap: complex = field(default=1.0 + 0.0j)

    def __post_init__(self):
        s = complex(self.overlap)
        if not (math.isfinite(s.real) and math.isfinite(s.imag)):
            raise NonFiniteInput(f"overlap={s!r} is not finite")
        if abs(s) > 1.0 + OVERLAP_TOL:
            raise ValueError(f"|overlap| = {abs(s)!r} exceeds 1")
        object.__setattr__(self, "overlap", s)

    @classmethod
    def from_polar(cls, modulus: float, phase: float = 0.0) -> "DetectorOverlap":
        return cls(cmath.rect(modulus, phase))

    @property
    def phase(self) -> float:
        return cmath.phase(self.overlap)


def visibility(overlap: DetectorOverlap) -> float:
    """Fringe visibility left by detectors with the given overlap."""
    return min(abs(overlap.overlap), 1.0)

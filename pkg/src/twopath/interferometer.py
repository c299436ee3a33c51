"""Symmetric beam-splitter interferometer.

Beams 1 and 2 carry amplitudes ``a e^{i chi}`` and ``b``.  A reflection at
the beam splitter multiplies by ``i``, so the output beams are

    psi3 = (i a e^{i chi} + b) / sqrt(2)
    psi4 = (a e^{i chi} + i b) / sqrt(2)

The "shifted" probabilities correspond to an extra pi/2 phase plate, which
turns ``sin(chi)`` into ``cos(chi)`` in the fringe term.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .states import DetectorOverlap, TwoPathState

SQRT_HALF = math.sqrt(0.5)
PROB_TOL = 1e-12


@dataclass(frozen=True)
class OutputAmplitudes:
    psi3: complex
    psi4: complex

    @property
    def probabilities(self) -> tuple[float, float]:
        return abs(self.psi3) ** 2, abs(self.psi4) ** 2


@dataclass(frozen=True)
class PortProbabilities:
    """Detection probabilities in beams 1-4 plus the pi/2-shifted pair."""

    p1: float
    p2: float
    p3: float
    p4: float
    p3_shift: float
    p4_shift: float

    def __post_init__(self):
        for lo, hi in ((self.p1, self.p2), (self.p3, self.p4), (self.p3_shift, self.p4_shift)):
            if not (-PROB_TOL <= lo <= 1 + PROB_TOL and -PROB_TOL <= hi <= 1 + PROB_TOL):
                raise ValueError(f"probabilities out of range: {lo!r}, {hi!r}")
            if abs(lo + hi - 1.0) > PROB_TOL:
                raise ValueError(f"pair {lo!r} + {hi!r} does not sum to 1")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.p1, self.p2, self.p3, self.p4, self.p3_shift, self.p4_shift)


def output_amplitudes(state: TwoPathState) -> OutputAmplitudes:
    a1 = state.a * cmath.exp(1j * state.chi)
    b = state.b
    return OutputAmplitudes(
        psi3=SQRT_HALF * (1j * a1 + b),
        psi4=SQRT_HALF * (a1 + 1j * b),
    )


def _fringe_pair(c: float) -> tuple[float, float]:
    # c = 2ab * (fringe factor); clip guards against |c| = 1 + ulp
    lo = min(max(0.5 * (1.0 - c), 0.0), 1.0)
    return lo, 1.0 - lo


def port_probabilities(state: TwoPathState) -> PortProbabilities:
    return port_probabilities_with_decoherence(state, DetectorOverlap(1.0))


def port_probabilities_with_decoherence(
    state: TwoPathState, overlap: DetectorOverlap
) -> PortProbabilities:
    """Port probabilities when each path leaves a detector record.

    The interference terms are scaled by ``|s|`` and phase-shifted by
    ``arg s`` where ``s = <D_R|D_L>``.  Path probabilities are untouched.
    ``s = 1`` reproduces :func:`port_probabilities`; ``s = 0`` gives
    balanced outputs.
    """
    a, b, chi = state.a, state.b, state.chi
    s = overlap.overlap
    amp = 2.0 * a * b * abs(s)
    phi = chi + cmath.phase(s)
    p3, p4 = _fringe_pair(amp * math.sin(phi))
    p3s, p4s = _fringe_pair(amp * math.cos(phi))
    p1 = a * a
    return PortProbabilities(p1, 1.0 - p1, p3, p4, p3s, p4s)


def beam_splitter_matrix() -> np.ndarray:
    """Unitary acting on (beam1, beam2) -> (beam3, beam4)."""
    return SQRT_HALF * np.array([[1j, 1.0], [1.0, 1j]])

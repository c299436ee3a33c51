"""Squared-probability information measures and complementarity totals.

For a two-outcome experiment with probabilities ``p`` and ``1 - p`` the
information is ``(p - (1 - p))**2``.  Applied to the path, the output and
the pi/2-shifted output of the interferometer, the three amounts always
add up to one bit for a pure state.  A Shannon-entropy analogue is
provided to show that the same construction does not give a constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .interferometer import PortProbabilities


@dataclass(frozen=True)
class InformationTriple:
    i1: float
    i2: float
    i3: float

    @property
    def total(self) -> float:
        return self.i1 + self.i2 + self.i3


@dataclass(frozen=True)
class ComplementaritySplit:
    i_path: float
    i_interf: float

    @property
    def total(self) -> float:
        return self.i_path + self.i_interf


def binary_information(p: float, q: float) -> float:
    """Information ``(p - q)**2`` carried by a binary outcome pair."""
    return (p - q) ** 2


def info_measures(probs: PortProbabilities) -> InformationTriple:
    return InformationTriple(
        i1=binary_information(probs.p1, probs.p2),
        i2=binary_information(probs.p3, probs.p4),
        i3=binary_information(probs.p3_shift, probs.p4_shift),
    )


def complementarity_split(triple: InformationTriple) -> ComplementaritySplit:
    return ComplementaritySplit(i_path=triple.i1, i_interf=triple.i2 + triple.i3)


def binary_entropy(p: float) -> float:
    """Shannon entropy of a Bernoulli(p) variable in bits."""
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def shannon_sum(probs: PortProbabilities) -> float:
    """Sum of ``1 - H(p)`` over path, output and shifted output.

    Unlike :func:`info_measures`, this total depends on the state: it is 1
    for the path eigenstate and for the balanced state at ``chi = pi/2``,
    but about 0.813 for ``a, b, chi = 0.8, 0.6, pi/6``.
    """
    return sum(1.0 - binary_entropy(p) for p in (probs.p1, probs.p3, probs.p3_shift))

"""Seeded detection-event experiments.

Every run draws from one of four mutually exclusive set-ups: a path
measurement, the interferometer output, the pi/2-shifted output, or the
double-slit screen.  Random numbers come from numpy's ``Philox`` counter
generator keyed by ``SeedSequence(seed, spawn_key=(mode_index, chunk))``;
each chunk of ``CHUNK`` events has its own stream, so the record is
identical for any number of worker threads.
"""
from __future__ import annotations

import cmath
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .double_slit import FringeGeometry
from .errors import InsufficientSamples, InvalidMode, ModeMismatch, OutOfRange
from .information import InformationTriple
from .interferometer import port_probabilities_with_decoherence
from .states import DetectorOverlap, TwoPathState

CHUNK = 1 << 16
MIN_VISIBILITY_SAMPLES = 100
BISECTION_RTOL = 1e-12


class Mode(str, Enum):
    PATH = "path-measurement"
    OUTPUT = "interferometer-output"
    SHIFTED = "interferometer-shifted"
    SCREEN = "screen-pattern"

    @property
    def index(self) -> int:
        return list(Mode).index(self)

    @property
    def outcomes(self) -> tuple[str, str]:
        return {
            Mode.PATH: ("1", "2"),
            Mode.OUTPUT: ("3", "4"),
            Mode.SHIFTED: ("3'", "4'"),
        }[self]


DISCRETE_MODES = (Mode.PATH, Mode.OUTPUT, Mode.SHIFTED)


@dataclass(frozen=True)
class ExperimentRun:
    """Outcome record of one seeded run.

    Discrete modes fill ``counts`` (first, second outcome); the screen mode
    fills ``positions`` in ``[0, period)``.
    """

    mode: Mode
    n_samples: int
    seed: int
    counts: tuple[int, int] | None = None
    positions: np.ndarray | None = None
    period: float | None = None

    def __post_init__(self):
        if self.counts is not None and sum(self.counts) != self.n_samples:
            raise ValueError("counts do not sum to n_samples")
        if self.positions is not None:
            if len(self.positions) != self.n_samples:
                raise ValueError("positions length differs from n_samples")
            self.positions.setflags(write=False)

    @property
    def frequencies(self) -> tuple[float, float]:
        if self.counts is None:
            raise InvalidMode(f"{self.mode.value} has no discrete outcomes")
        c1, c2 = self.counts
        return c1 / self.n_samples, c2 / self.n_samples

    def table(self) -> tuple[list[str], list[list]]:
        """Columns and rows used by the CSV/JSON writers."""
        if self.counts is not None:
            cols = ["mode", "n_samples", "seed", "outcome", "count", "frequency"]
            rows = [
                [self.mode.value, self.n_samples, self.seed, o, c, c / self.n_samples]
                for o, c in zip(self.mode.outcomes, self.counts)
            ]
            return cols, rows
        return ["y"], [[float(y)] for y in self.positions]


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def _generator(seed: int, stream: int, chunk: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(stream, chunk))
    return np.random.Generator(np.random.Philox(ss))


def _chunked(n: int, seed: int, stream: int, work, workers: int) -> list:
    """Apply ``work(rng, size)`` to consecutive chunks, results in chunk order."""
    sizes = [min(CHUNK, n - start) for start in range(0, n, CHUNK)]
    jobs = [(i, s) for i, s in enumerate(sizes)]

    def run(job):
        i, size = job
        return work(_generator(seed, stream, i), size)

    if workers <= 1 or len(jobs) <= 1:
        return [run(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, jobs))


def mode_probability(state: TwoPathState, mode: Mode,
                     overlap: DetectorOverlap | None = None) -> float:
    """Analytic probability of the first outcome of a discrete mode."""
    probs = port_probabilities_with_decoherence(state, overlap or DetectorOverlap(1.0))
    if mode is Mode.PATH:
        return probs.p1
    if mode is Mode.OUTPUT:
        return probs.p3
    if mode is Mode.SHIFTED:
        return probs.p3_shift
    raise InvalidMode(f"{mode.value} is not a discrete-outcome mode")


def sample_ports(state: TwoPathState, mode: Mode | str, n: int, seed: int, *,
                 overlap: DetectorOverlap | None = None,
                 workers: int = 1) -> ExperimentRun:
    mode = Mode(mode)
    if mode is Mode.SCREEN:
        raise InvalidMode("use sample_pattern for the screen-pattern mode")
    if n <= 0:
        raise ValueError("n must be positive")
    seed = _check_seed(seed)
    p = mode_probability(state, mode, overlap)

    def work(rng, size):
        return int(np.count_nonzero(rng.random(size) < p))

    first = sum(_chunked(n, seed, mode.index, work, workers))
    return ExperimentRun(mode, n, seed, counts=(first, n - first))


def pattern_cdf(y, amp: float, phase: float, period: float):
    """CDF of the screen density on ``[0, period)``."""
    theta = 2.0 * np.pi * np.asarray(y) / period
    return theta / (2.0 * np.pi) + amp / (2.0 * np.pi) * (np.sin(theta + phase) - math.sin(phase))


def _invert_cdf(u: np.ndarray, amp: float, phase: float, period: float) -> np.ndarray:
    lo = np.zeros_like(u)
    hi = np.full_like(u, period)
    tol = BISECTION_RTOL * period
    # bracket halves each step; this bound gives width < tol
    steps = int(math.ceil(math.log2(period / tol))) + 1
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        below = pattern_cdf(mid, amp, phase, period) < u
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    y = 0.5 * (lo + hi)
    return np.minimum(y, np.nextafter(period, 0.0))


def sample_pattern(state: TwoPathState, geom: FringeGeometry, n: int, seed: int, *,
                   overlap: DetectorOverlap | None = None,
                   workers: int = 1) -> ExperimentRun:
    """Draw ``n`` screen positions by inverse-CDF with bisection."""
    if n <= 0:
        raise ValueError("n must be positive")
    seed = _check_seed(seed)
    amp = 2.0 * state.a * state.b
    phase = state.chi
    if overlap is not None:
        amp *= abs(overlap.overlap)
        phase += cmath.phase(overlap.overlap)
    Y = geom.period

    def work(rng, size):
        return _invert_cdf(rng.random(size), amp, phase, Y)

    y = np.concatenate(_chunked(n, seed, Mode.SCREEN.index, work, workers))
    return ExperimentRun(Mode.SCREEN, n, seed, positions=y, period=Y)


def estimate_visibility(run: ExperimentRun, geom: FringeGeometry | None = None) -> float:
    """First-harmonic fringe contrast ``2 |<exp(2 pi i y / Y)>|``.

    For screen data this converges to ``2ab`` (times ``|s|`` with detector
    records).  Values above 1 can only come from non-physical input; they
    are clamped with an :class:`OutOfRange` warning.
    """
    if run.mode is not Mode.SCREEN:
        raise InvalidMode("visibility is estimated from screen-pattern runs")
    if run.n_samples < MIN_VISIBILITY_SAMPLES:
        raise InsufficientSamples(
            f"need at least {MIN_VISIBILITY_SAMPLES} samples, got {run.n_samples}"
        )
    Y = geom.period if geom is not None else run.period
    theta = 2.0 * np.pi * run.positions / Y
    m = complex(np.cos(theta).mean(), np.sin(theta).mean())
    est = 2.0 * abs(m)
    if est > 1.0:
        warnings.warn(f"visibility estimate {est:.6g} > 1 clamped to 1", OutOfRange,
                      stacklevel=2)
        return 1.0
    return est


def empirical_information(path: ExperimentRun, output: ExperimentRun,
                          shifted: ExperimentRun) -> InformationTriple:
    """Plug-in estimate of the three information amounts from three runs."""
    runs = (path, output, shifted)
    for run, expected in zip(runs, DISCRETE_MODES):
        if run.mode is not expected:
            raise ModeMismatch(f"expected a {expected.value} run, got {run.mode.value}")
    if len({r.n_samples for r in runs}) != 1:
        raise ModeMismatch("runs must have the same number of samples")
    vals = []
    for run in runs:
        f1, f2 = run.frequencies
        vals.append((f1 - f2) ** 2)
    return InformationTriple(*vals)

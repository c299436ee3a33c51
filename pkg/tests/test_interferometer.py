import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twopath.interferometer import (
    PortProbabilities,
    beam_splitter_matrix,
    output_amplitudes,
    port_probabilities,
    port_probabilities_with_decoherence,
)
from twopath.states import DetectorOverlap, TwoPathState

from .conftest import pure_states

R = 1 / math.sqrt(2)


def reduced_port_probs(state, s):
    """Brute force on path (x) detector: returns (p3, p3_shift).

    Detector states are realized as D_L = (1, 0) and D_R = (conj(s), r) so
    that <D_R|D_L> = s.  The pi/2 plate acts on beam 1 before the splitter.
    """
    d_l = np.array([1.0, 0.0], dtype=complex)
    d_r = np.array([np.conj(s), math.sqrt(max(0.0, 1 - abs(s) ** 2))], dtype=complex)
    out = []
    for plate in (1.0, 1j):
        psi = (np.kron([plate * state.a * cmath.exp(1j * state.chi), 0], d_l)
               + np.kron([0, state.b], d_r))
        psi = np.kron(beam_splitter_matrix(), np.eye(2)) @ psi
        rho = np.outer(psi, psi.conj()).reshape(2, 2, 2, 2)
        rho_path = np.einsum("ajbj->ab", rho)
        out.append(rho_path[0, 0].real)
    return tuple(out)


def test_amplitudes_all_left():
    amp = output_amplitudes(TwoPathState(1, 0, 0))
    assert amp.psi3 == pytest.approx(1j * R)
    assert amp.psi4 == pytest.approx(R)


@pytest.mark.parametrize("chi", [0.0, 1.0, 4.0])
def test_amplitudes_all_right(chi):
    amp = output_amplitudes(TwoPathState(0, 1, chi))
    assert amp.psi3 == pytest.approx(R)
    assert amp.psi4 == pytest.approx(1j * R)


def test_amplitudes_balanced(balanced):
    p3, p4 = output_amplitudes(balanced).probabilities
    assert p3 == pytest.approx(0.0, abs=1e-15)
    assert p4 == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("chi", [0.0, 0.7, 3.0])
def test_probabilities_full_path_knowledge(chi):
    p = port_probabilities(TwoPathState(1, 0, chi))
    assert p.as_tuple() == pytest.approx((1, 0, 0.5, 0.5, 0.5, 0.5), abs=1e-15)


def test_probabilities_balanced_zero_phase():
    p = port_probabilities(TwoPathState(R, R, 0.0))
    assert (p.p3, p.p4) == pytest.approx((0.5, 0.5), abs=1e-15)
    assert (p.p3_shift, p.p4_shift) == pytest.approx((0.0, 1.0), abs=1e-15)


def test_probabilities_hand_example():
    state = TwoPathState(0.8, 0.6, math.pi / 6)
    p = port_probabilities(state)
    assert p.p3 == pytest.approx(0.26, abs=1e-15)
    assert p.p4 == pytest.approx(0.74, abs=1e-15)
    assert p.p3 == pytest.approx(output_amplitudes(state).probabilities[0], abs=1e-15)


@given(pure_states())
def test_unitarity_and_amplitude_route(state):
    p = port_probabilities(state)
    assert p.p1 + p.p2 == pytest.approx(1, abs=1e-12)
    assert p.p3 + p.p4 == pytest.approx(1, abs=1e-12)
    assert p.p3_shift + p.p4_shift == pytest.approx(1, abs=1e-12)
    q3, q4 = output_amplitudes(state).probabilities
    assert q3 + q4 == pytest.approx(1, abs=1e-12)
    assert (q3, q4) == pytest.approx((p.p3, p.p4), abs=1e-12)


@given(pure_states())
def test_shifted_pair_is_quarter_turn(state):
    p = port_probabilities(state)
    q = port_probabilities(TwoPathState(state.a, state.b, state.chi + math.pi / 2))
    assert p.p3_shift == pytest.approx(q.p3, abs=1e-15)
    assert p.p4_shift == pytest.approx(q.p4, abs=1e-15)


@given(st.floats(0, math.pi / 2))
def test_max_fringe_amplitude_is_2ab(theta):
    a, b = math.cos(theta), math.sin(theta)
    chis = np.linspace(0, 2 * math.pi, 721)
    best = max(abs(port_probabilities(TwoPathState(a, b, c)).p3
                   - port_probabilities(TwoPathState(a, b, c)).p4) for c in chis)
    assert best == pytest.approx(2 * a * b, abs=1e-12)


def test_decoherence_identity_and_erasure():
    state = TwoPathState(0.8, 0.6, 1.1)
    assert port_probabilities_with_decoherence(state, DetectorOverlap(1.0)) == port_probabilities(state)
    p = port_probabilities_with_decoherence(state, DetectorOverlap(0.0))
    assert (p.p3, p.p4, p.p3_shift, p.p4_shift) == (0.5, 0.5, 0.5, 0.5)
    assert (p.p1, p.p2) == (port_probabilities(state).p1, port_probabilities(state).p2)


def test_decoherence_fullerene_example(balanced):
    s = 0.9354893
    p = port_probabilities_with_decoherence(balanced, DetectorOverlap(s))
    assert p.p3 == pytest.approx((1 - s) / 2, abs=1e-15)
    assert p.p3 == pytest.approx(0.03225535, abs=1e-12)
    assert p.p3 == pytest.approx(reduced_port_probs(balanced, s)[0], abs=1e-14)


@given(pure_states(), st.floats(0, 1), st.floats(-4, 4))
def test_decoherence_matches_reduced_state(state, mod, phase):
    s = cmath.rect(mod, phase)
    p = port_probabilities_with_decoherence(state, DetectorOverlap(s))
    p3, p3s = reduced_port_probs(state, s)
    assert p.p3 == pytest.approx(p3, abs=1e-12)
    assert p.p3_shift == pytest.approx(p3s, abs=1e-12)


@given(pure_states(), st.floats(0, 1), st.floats(0, 1))
def test_decoherence_contrast_monotone(state, v1, v2):
    lo, hi = sorted((v1, v2))
    c_lo = abs(port_probabilities_with_decoherence(state, DetectorOverlap(lo)).p3 - 0.5)
    c_hi = abs(port_probabilities_with_decoherence(state, DetectorOverlap(hi)).p3 - 0.5)
    assert c_lo <= c_hi + 1e-15
    amp = 2 * state.a * state.b * hi
    assert c_hi <= 0.5 * amp + 1e-15


def test_port_probabilities_validation():
    with pytest.raises(ValueError):
        PortProbabilities(0.5, 0.6, 0.5, 0.5, 0.5, 0.5)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twopath.decoherence import (
    EmissionModel,
    QuadratureSpec,
    cutoff_overlap_closed_form,
    norm_integral_closed_form,
    overlap_oracle,
    sinc_overlap,
    visibility_after_emission,
)
from twopath.errors import NonFiniteInput, QuadratureBudgetExceeded

# mpmath, 30 digits
SINC_FULLERENE = 0.935489289971761572    # sin(x)/x at x = 0.6283185
SINC_FULLERENE_SQ = 0.875140211651870606
SINC_REF = {0.5: 0.958851077208406001, 1.0: 0.841470984807896507,
            2.0: 0.454648713412840848, 3.0: 0.0470400026866224074}


def test_sinc_at_zero():
    assert sinc_overlap(0.0, 1.0) == 1.0


def test_sinc_at_pi():
    assert abs(sinc_overlap(math.pi, 1.0)) < 1e-15


def test_sinc_fullerene():
    assert sinc_overlap(0.6283185, 1.0) == pytest.approx(SINC_FULLERENE, abs=1e-15)


@pytest.mark.parametrize("kd", sorted(SINC_REF))
def test_sinc_reference(kd):
    assert sinc_overlap(kd, 1.0) == pytest.approx(SINC_REF[kd], rel=1e-15)


def test_series_branch_is_continuous():
    x = 1e-4
    below = sinc_overlap(np.nextafter(x, 0), 1.0)
    above = sinc_overlap(x, 1.0)
    assert below == pytest.approx(above, abs=4e-16)


def test_sinc_rejects_nonfinite():
    with pytest.raises(NonFiniteInput):
        sinc_overlap(math.inf, 1.0)


@given(st.floats(min_value=1e-8, max_value=1e4))
def test_sinc_even_and_bounded(x):
    s = sinc_overlap(x, 1.0)
    assert s == sinc_overlap(-x, 1.0)
    assert abs(s) <= min(1.0, 1.0 / x) + 1e-15


def test_visibility_no_photons():
    assert visibility_after_emission(EmissionModel(3.7, 0.2, 0)) == 1.0


def test_visibility_two_photons_fullerene():
    m = EmissionModel(2 * math.pi / 10, 1.0, 2)
    # exact 2*pi/10 differs from 0.6283185 by < 1e-8 in the sinc
    assert visibility_after_emission(m) == pytest.approx(SINC_FULLERENE_SQ, abs=1e-7)


def test_visibility_zero_at_pi():
    assert visibility_after_emission(EmissionModel(math.pi, 1.0, 1)) < 1e-15


@given(st.floats(0.01, 50), st.integers(0, 20))
def test_visibility_monotone_in_photons(kd, n):
    v0 = visibility_after_emission(EmissionModel(kd, 1.0, n))
    v1 = visibility_after_emission(EmissionModel(kd, 1.0, n + 1))
    assert v1 <= v0
    assert 0.0 <= v1 <= 1.0


def test_emission_model_validation():
    with pytest.raises(ValueError):
        EmissionModel(-1.0, 1.0, 1)
    with pytest.raises(ValueError):
        EmissionModel(1.0, 1.0, 1.5)
    assert EmissionModel.from_wavelength(10.0, 1.0).K == pytest.approx(2 * math.pi / 10)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(xi_max=1.0)
    with pytest.raises(ValueError):
        QuadratureSpec(nodes_xi=4)


def test_norm_closed_form_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    ref = mpmath.quad(
        lambda xi: 2 * xi * mpmath.log((xi + 1) / (xi - 1)) - 2, [1, 2, 10, 50])
    assert norm_integral_closed_form(50.0) == pytest.approx(float(ref), rel=1e-13)


# --- the quadrature oracle -------------------------------------------------

def test_oracle_matches_cutoff_closed_form():
    for kd in (0.3, 1.7, 2.9):
        for xi_max in (10.0, 1e3):
            r = overlap_oracle(kd, 1.0, QuadratureSpec(xi_max))
            assert r.converged
            assert r.value.real == pytest.approx(cutoff_overlap_closed_form(kd, xi_max), abs=1e-11)
            assert abs(r.value.imag) < 1e-12


def test_oracle_at_pi():
    r = overlap_oracle(math.pi, 1.0, QuadratureSpec(1e3))
    assert abs(r.value) < 5e-3


def test_oracle_fullerene():
    r = overlap_oracle(0.6283185, 1.0, QuadratureSpec(1e3))
    assert abs(r.value.real - SINC_FULLERENE) < 1e-2
    assert abs(r.value.imag) < 1e-3


def test_oracle_small_kd_carries_cutoff_factor():
    # identical emitters on a finite ellipsoid: the overlap is the
    # amplitude-mismatch factor 2 / ((X+1) log((X+1)/(X-1))), not 1
    for xi_max in (1e2, 1e4):
        r = overlap_oracle(1e-6, 1.0, QuadratureSpec(xi_max))
        factor = 2.0 / ((xi_max + 1) * math.log((xi_max + 1) / (xi_max - 1)))
        assert abs(r.value) == pytest.approx(factor, abs=1e-11)
        assert abs(abs(r.value) - 1.0) < 1.5 / xi_max


def test_oracle_independent_of_scale():
    a = overlap_oracle(1.3, 1.0, QuadratureSpec(100.0), check_convergence=False)
    b = overlap_oracle(0.13, 10.0, QuadratureSpec(100.0), check_convergence=False)
    assert a.value == pytest.approx(b.value, abs=1e-12)


@pytest.mark.parametrize("kd", [0.5, 1.0, 2.0, 3.0])
def test_oracle_converges_in_cutoff(kd):
    cutoffs = np.array([1e2, 1e3, 1e4])
    errs = np.array([abs(overlap_oracle(kd, 1.0, QuadratureSpec(x), check_convergence=False).value
                         - SINC_REF[kd]) for x in cutoffs])
    assert np.all(np.diff(errs) < 0)
    order = -np.polyfit(np.log(cutoffs), np.log(errs), 1)[0]
    assert order >= 0.8


@settings(max_examples=25)
@given(st.floats(0.0, 12.0), st.sampled_from([3.0, 40.0, 500.0]))
def test_oracle_bounded_by_one(kd, xi_max):
    r = overlap_oracle(kd, 1.0, QuadratureSpec(xi_max, 8, 8), check_convergence=False)
    assert abs(r.value) <= 1.0


def test_oracle_is_deterministic():
    a = overlap_oracle(2.2, 1.0, QuadratureSpec(300.0))
    b = overlap_oracle(2.2, 1.0, QuadratureSpec(300.0))
    assert a == b


def test_oracle_budget(monkeypatch):
    with pytest.raises(QuadratureBudgetExceeded):
        overlap_oracle(1.0, 1.0, max_points=1000)
    monkeypatch.setenv("TWOPATH_QUAD_MAX_POINTS", "1000")
    with pytest.raises(QuadratureBudgetExceeded):
        overlap_oracle(1.0, 1.0)


def test_oracle_flags_unconverged_grid():
    # 8-node panels of width 1 cannot resolve the phase at large K*d
    r = overlap_oracle(400.0, 1.0, QuadratureSpec(50.0, 8, 8))
    assert not r.converged
    assert r.change_on_refinement > 1e-6

import math

import numpy as np
import pytest
from hypothesis import given

from spinpair.errors import InvalidTemperature, NumericOverflow
from spinpair.model import ModelParams, analytic_spectrum, build_hamiltonian
from spinpair.thermal import (
    Temperature,
    log_partition_function,
    partition_function,
    thermal_state_analytic,
    thermal_state_oracle,
)

from conftest import log_uniform_temps, model_params, random_params, temperature


def lapack_gibbs(p, t):
    e, v = np.linalg.eigh(build_hamiltonian(p))
    w = np.exp(-(e - e.min()) / t)
    return (v * (w / w.sum())) @ v.conj().T


@pytest.mark.parametrize("t", [0.0, -1.0, math.inf, math.nan])
def test_temperature_validation(t):
    with pytest.raises(InvalidTemperature):
        Temperature(t)


def test_partition_function_example():
    # sum of exp(-e) over the energies (3, -1, 1, -3)
    expected = 2 * math.cosh(3) + 2 * math.cosh(1)
    assert partition_function(ModelParams(1, 0, 1), 1.0) == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(23.2215, abs=1e-4)


def test_partition_function_high_temperature():
    assert partition_function(ModelParams(1, 1, 1), 1e8) == pytest.approx(4.0, rel=1e-7)


def test_partition_function_identity_over_draws(rng):
    temps = log_uniform_temps(rng, 10_000)
    for p, t in zip(random_params(rng, 10_000), temps):
        direct = float(np.sum(np.exp(-analytic_spectrum(p).energies / t)))
        assert partition_function(p, t) == pytest.approx(direct, rel=1e-12)


def test_partition_function_overflow_and_log_fallback():
    p = ModelParams(1, 1, 1)
    with pytest.raises(NumericOverflow):
        partition_function(p, 1e-3)
    e = analytic_spectrum(p).energies
    expected = -e.min() / 1e-3 + math.log(np.sum(np.exp(-(e - e.min()) / 1e-3)))
    assert log_partition_function(p, 1e-3) == pytest.approx(expected, rel=1e-15)


def test_zero_hamiltonian_is_maximally_mixed():
    for state in (thermal_state_analytic(ModelParams(0, 0, 0), 1.3), thermal_state_oracle(ModelParams(0, 0, 0), 1.3)):
        assert np.allclose(state.rho, np.eye(4) / 4, atol=1e-15)
    el = thermal_state_analytic(ModelParams(0, 0, 0), 1.3).elements
    assert el.a == pytest.approx(1) and el.b == pytest.approx(1)
    assert max(abs(el.c), abs(el.d), abs(el.mu), abs(el.nu)) <= 1e-15


def test_analytic_matches_oracle_example():
    p = ModelParams(1, 1, 1)
    assert np.abs(thermal_state_analytic(p, 1.0).rho - thermal_state_oracle(p, 1.0).rho).max() <= 1e-12


def test_singlet_at_low_temperature():
    rho = thermal_state_oracle(ModelParams(1, 0, 0), 0.1).rho
    assert np.allclose(np.diag(rho).real, [0, 0.5, 0.5, 0], atol=1e-15)
    assert rho[1, 2].real == pytest.approx(-0.5, abs=1e-15)
    singlet = analytic_spectrum(ModelParams(1, 0, 0)).eigenvectors[:, 3]
    assert np.allclose(rho, np.outer(singlet, singlet.conj()), atol=1e-15)


def test_low_temperature_projector():
    # unique ground state |phi4>; the excited weight is of order exp(-gap / T)
    p = ModelParams(1, 1, 0.5)
    e = np.sort(analytic_spectrum(p).energies)
    t = 0.05
    vec = analytic_spectrum(p).eigenvectors[:, 3]
    rho = thermal_state_analytic(p, t).rho
    assert np.abs(rho - np.outer(vec, vec.conj())).max() <= 3 * math.exp(-(e[1] - e[0]) / t) + 1e-15


def test_beta_to_zero_limit():
    rho = thermal_state_analytic(ModelParams(1, 1, 1), 1e6).rho
    assert np.abs(rho - np.eye(4) / 4).max() <= 1e-4


@given(model_params(), temperature)
def test_gibbs_state_properties(p, t):
    st = thermal_state_analytic(p, t)
    rho = st.rho
    assert abs(np.trace(rho) - 1) <= 1e-12
    assert np.array_equal(rho, rho.conj().T) or np.abs(rho - rho.conj().T).max() <= 1e-15
    h = build_hamiltonian(p)
    assert np.abs(rho @ h - h @ rho).max() <= 1e-10
    w = np.linalg.eigvalsh(rho)
    assert w.min() >= -1e-10 and w.max() <= 1 + 1e-10
    a, b = st.elements.a, st.elements.b
    assert 2 * (a + b) == pytest.approx(st.z, rel=1e-12)


@given(model_params(), temperature)
def test_analytic_matches_lapack_gibbs(p, t):
    assert np.abs(thermal_state_analytic(p, t).rho - lapack_gibbs(p, t)).max() <= 1e-11


def test_analytic_matches_oracle_over_draws(rng):
    temps = log_uniform_temps(rng, 2000)
    for p, t in zip(random_params(rng, 2000), temps):
        assert np.abs(thermal_state_analytic(p, t).rho - thermal_state_oracle(p, t).rho).max() <= 1e-11


def test_shifted_weights_beyond_guard():
    p = ModelParams(1, 1, 1)
    t = 1e-3
    st = thermal_state_analytic(p, t)
    assert st.log_scale != 0.0
    assert st.log_z == pytest.approx(log_partition_function(p, t), rel=1e-15)
    assert np.abs(st.rho - lapack_gibbs(p, t)).max() <= 1e-12
    assert np.abs(thermal_state_oracle(p, t).rho - st.rho).max() <= 1e-12

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fockmaj import (
    FockDistribution,
    ThermalSpec,
    is_passive,
    mean_photon_number,
    mean_photons_for_entropy,
    passive_decomposition,
    passive_rearrangement,
    thermal_distribution,
    von_neumann_entropy,
)
from fockmaj.errors import InvalidDistribution, NonPassiveInput
from fockmaj.fock import thermal_cutoff, thermal_entropy

from conftest import distributions, passive_distributions


def test_construction_clamps_roundoff_and_records_it():
    rho = FockDistribution([1.0 + 5e-13, -5e-13])
    assert rho.probs[1] == 0.0
    assert rho.clamped_mass == pytest.approx(5e-13)


@pytest.mark.parametrize("probs", [[], [0.5, 0.6], [1.1, -0.1], [float("nan")]])
def test_invalid_distributions_rejected(probs):
    with pytest.raises(InvalidDistribution):
        FockDistribution(probs)


def test_probs_are_read_only():
    rho = FockDistribution([0.5, 0.5])
    with pytest.raises(ValueError):
        rho.probs[0] = 1.0


def test_cutoff_zero_is_vacuum():
    assert FockDistribution.vacuum().cutoff == 0


@pytest.mark.parametrize(
    "probs, expected",
    [
        (thermal_distribution(1.0, 40).probs, True),
        ([0.0, 1.0, 0.0], False),
        ([0.5, 0.25, 0.25], True),
    ],
)
def test_is_passive(probs, expected):
    total = float(np.sum(probs))
    assert is_passive(FockDistribution(probs, 1.0 - total)) is expected


@pytest.mark.parametrize(
    "probs, expected",
    [([0.0, 1.0], [1.0, 0.0]), ([0.2, 0.5, 0.3], [0.5, 0.3, 0.2])],
)
def test_passive_rearrangement(probs, expected):
    np.testing.assert_array_equal(passive_rearrangement(FockDistribution(probs)).probs, expected)


@given(distributions())
def test_rearrangement_idempotent_and_entropy_preserving(rho):
    once = passive_rearrangement(rho)
    assert is_passive(once)
    assert passive_rearrangement(once) == once
    assert von_neumann_entropy(once) == pytest.approx(von_neumann_entropy(rho), abs=1e-14)


@given(passive_distributions())
def test_passive_state_is_fixed_point(rho):
    assert passive_rearrangement(rho) == rho


def test_passive_decomposition_examples():
    np.testing.assert_array_equal(passive_decomposition(FockDistribution([1, 0, 0])).weights, [1, 0, 0])
    np.testing.assert_allclose(passive_decomposition(FockDistribution([1 / 3] * 3)).weights, [0, 0, 1 / 3], atol=1e-16)
    th = thermal_distribution(1.0, 3)
    e = passive_decomposition(th).weights
    n = np.arange(3)
    np.testing.assert_allclose(e[:3], 0.5 ** (n + 1) - 0.5 ** (n + 2), rtol=0, atol=1e-16)
    # last weight is the last probability itself
    assert e[3] == th.probs[3]


@given(passive_distributions())
def test_passive_decomposition_round_trip(rho):
    dec = passive_decomposition(rho)
    assert np.all(dec.weights >= 0)
    np.testing.assert_allclose(dec.reconstruct(), rho.probs, atol=1e-12)
    assert dec.trace() == pytest.approx(1.0, abs=1e-10)


def test_passive_decomposition_rejects_non_passive():
    with pytest.raises(NonPassiveInput):
        passive_decomposition(FockDistribution([0.0, 1.0]))


def test_mean_photon_number():
    assert mean_photon_number(FockDistribution.fock(3)) == 3
    assert mean_photon_number(FockDistribution.vacuum()) == 0
    th = thermal_distribution(1.0, 60)
    value, caveat = mean_photon_number(th, with_caveat=True)
    assert caveat
    assert abs(value - 1.0) <= 10 * 1e-10


def test_entropy_examples():
    assert von_neumann_entropy(FockDistribution.fock(4)) == 0.0
    assert von_neumann_entropy(FockDistribution([0.25] * 4)) == pytest.approx(math.log(4), abs=1e-15)
    # closed form (n+1)ln(n+1) - n ln n at n = 1
    assert thermal_entropy(1.0) == pytest.approx(2 * math.log(2), abs=1e-15)
    assert von_neumann_entropy(thermal_distribution(1.0, 80)) == pytest.approx(2 * math.log(2), abs=1e-20 + 1e-12)


@given(distributions())
def test_entropy_bounds(rho):
    s = von_neumann_entropy(rho)
    assert -1e-15 <= s <= math.log(rho.cutoff + 1) + 1e-12


def test_thermal_distribution_examples():
    vac = thermal_distribution(ThermalSpec(0.0), 3)
    np.testing.assert_array_equal(vac.probs, [1, 0, 0, 0])
    assert vac.tail_mass == 0.0
    th = thermal_distribution(ThermalSpec(1.0), 2)
    np.testing.assert_array_equal(th.probs, [0.5, 0.25, 0.125])
    assert th.tail_mass == 0.125


@given(st.floats(min_value=0.01, max_value=50))
def test_thermal_strictly_decreasing(nbar):
    p = thermal_distribution(nbar, 30).probs
    assert np.all(np.diff(p) < 0)


def test_thermal_cutoff_meets_tail():
    for nbar in (0.3, 1.0, 7.5):
        n = thermal_cutoff(nbar, 1e-10)
        assert thermal_distribution(nbar, n).tail_mass <= 1e-10
        assert thermal_distribution(nbar, n - 1).tail_mass > 1e-10


def test_entropy_inversion_examples():
    assert mean_photons_for_entropy(0.0) == 0.0
    assert mean_photons_for_entropy(2 * math.log(2)) == pytest.approx(1.0, abs=1e-10)
    # g(5) = 6 ln 6 - 5 ln 5
    assert mean_photons_for_entropy(6 * math.log(6) - 5 * math.log(5)) == pytest.approx(5.0, abs=1e-10)


@given(st.floats(min_value=0.0, max_value=100.0))
def test_entropy_inversion_round_trip(nbar):
    s = thermal_entropy(nbar)
    back = mean_photons_for_entropy(s)
    assert abs(thermal_entropy(back) - s) <= 1e-12
    assert back == pytest.approx(nbar, abs=1e-10)


@given(st.floats(min_value=0.0, max_value=99.0), st.floats(min_value=1e-6, max_value=1.0))
def test_thermal_entropy_strictly_increasing(a, step):
    assert thermal_entropy(a + step) > thermal_entropy(a)

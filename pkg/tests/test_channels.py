import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fockmaj import (
    Amplifier,
    ChannelKernel,
    Composite,
    FockDistribution,
    PureLoss,
    amplifier_kernel,
    apply,
    compose,
    dual_kernel,
    loss_kernel,
    mean_photon_number,
    thermal_distribution,
    von_neumann_entropy,
)
from fockmaj.channels import realize
from fockmaj.errors import CutoffOverflow, DimensionMismatch, ParameterOutOfRange
from fockmaj.oracles import beam_splitter_amplitudes, two_mode_squeezer_amplitudes

TAIL = 1e-10


def test_parameter_ranges():
    for bad in (-0.1, 1.5):
        with pytest.raises(ParameterOutOfRange):
            PureLoss(bad)
    with pytest.raises(ParameterOutOfRange):
        Amplifier(0.9)
    with pytest.raises(ParameterOutOfRange):
        Composite([])


def test_loss_examples():
    np.testing.assert_array_equal(loss_kernel(1.0, 6).matrix, np.eye(7))
    k = loss_kernel(0.5, 2)
    np.testing.assert_array_equal(k.matrix[:, 2], [0.25, 0.5, 0.25])
    np.testing.assert_array_equal(k.matrix[:2, 1], [0.5, 0.5])
    assert np.all(k.column_tails == 0)


def test_loss_eta_zero_sends_everything_to_vacuum():
    k = loss_kernel(0.0, 50)
    np.testing.assert_array_equal(k.matrix[0], np.ones(51))


def test_amplifier_examples():
    np.testing.assert_array_equal(amplifier_kernel(1.0, 5).matrix, np.eye(6))
    k = amplifier_kernel(2.0, 3)
    col0 = k.matrix[:, 0]
    np.testing.assert_allclose(col0[:6], 0.5 ** np.arange(1, 7), rtol=0, atol=1e-17)
    # s_n^(1) = (n+1)(1/2)^n (1/4) at output levels 1, 2, 3
    np.testing.assert_allclose(k.matrix[1:4, 1], [0.25, 0.25, 3 / 16], rtol=0, atol=1e-17)
    assert k.matrix[0, 1] == 0.0


@pytest.mark.parametrize("gain", [1.25, 2.0, 5.0])
def test_amplifier_tails_below_budget(gain):
    k = amplifier_kernel(gain, 60, TAIL)
    assert np.all(k.column_tails < TAIL)
    np.testing.assert_allclose(k.matrix.sum(axis=0) + k.column_tails, 1.0, atol=1e-13)


def test_amplifier_cap():
    with pytest.raises(CutoffOverflow):
        amplifier_kernel(50.0, 60, max_rows=4096)


def test_triangular_support():
    loss = loss_kernel(0.37, 30).matrix
    rows, cols = np.indices(loss.shape)
    assert np.all(loss[rows > cols] == 0)
    amp = amplifier_kernel(1.7, 30).matrix
    rows, cols = np.indices(amp.shape)
    assert np.all(amp[rows < cols] == 0)


@pytest.mark.parametrize("k", [0, 5, 40, 41, 55])
def test_loss_mean_energy(k):
    out = apply(loss_kernel(0.3, k), FockDistribution.fock(k))
    assert mean_photon_number(out) == pytest.approx(0.3 * k, abs=1e-12)


@pytest.mark.parametrize("gain, k", [(1.5, 0), (2.0, 3), (3.0, 41), (1.25, 60)])
def test_amplifier_mean_energy(gain, k):
    out = apply(amplifier_kernel(gain, k, TAIL), FockDistribution.fock(k))
    # truncation removes at most tail * (rows) worth of energy
    assert mean_photon_number(out) == pytest.approx(gain * k + gain - 1, abs=10 * TAIL * out.cutoff)


def test_log_space_switch_is_continuous():
    # k = 40 uses direct binomials, k = 41 log space; both must match the loss recurrence
    k = loss_kernel(0.45, 41).matrix
    rec = 0.45 * np.concatenate([[0.0], k[:41, 40]]) + 0.55 * k[:42, 40]
    np.testing.assert_allclose(k[:42, 41], rec, rtol=1e-12, atol=1e-300)


def test_compose_examples():
    ident = compose([PureLoss(1.0), Amplifier(1.0)], 8)
    np.testing.assert_array_equal(ident.matrix, np.eye(9))
    lo = compose([PureLoss(0.8), PureLoss(0.5)], 30)
    np.testing.assert_allclose(lo.matrix, loss_kernel(0.4, 30).matrix, rtol=0, atol=1e-12)
    for eta in (0.0, 0.3, 1.0):
        k = compose([PureLoss(eta), Amplifier(1.6)], 5)
        th = thermal_distribution(0.6, k.output_cutoff)
        np.testing.assert_allclose(k.matrix[:, 0], th.probs, rtol=0, atol=1e-15)


def test_compose_order_is_application_order():
    # amplifying first and then attenuating leaves vacuum thermal with mean eta(G-1)
    k = compose([Amplifier(2.0), PureLoss(0.5)], 0)
    assert mean_photon_number(k.column(0)) == pytest.approx(0.5, abs=1e-9)


def test_compose_associativity():
    a, b, c = PureLoss(0.7), Amplifier(1.5), PureLoss(0.4)
    flat = compose([a, b, c], 20)
    nested = compose([a, Composite([b, c])], 20)
    np.testing.assert_allclose(flat.matrix, nested.matrix, rtol=0, atol=1e-12)


def test_composite_tails_bound_discarded_mass():
    k = compose([Amplifier(1.5), PureLoss(0.9), Amplifier(2.0)], 30, TAIL)
    assert np.all(k.column_tails <= TAIL)
    np.testing.assert_allclose(k.matrix.sum(axis=0) + k.column_tails, 1.0, atol=1e-13)


def test_dual_kernel():
    np.testing.assert_array_equal(dual_kernel(loss_kernel(1.0, 4)), np.eye(5))
    k = loss_kernel(0.6, 10)
    d = dual_kernel(k)
    assert not np.allclose(d.sum(axis=0), 1.0)
    np.testing.assert_array_equal(d.T, k.matrix)


def test_apply_examples():
    rho = FockDistribution([0.2, 0.3, 0.5])
    assert apply(loss_kernel(1.0, 2), rho) == rho
    np.testing.assert_array_equal(apply(loss_kernel(0.5, 2), FockDistribution.fock(2)).probs, [0.25, 0.5, 0.25])
    out = apply(amplifier_kernel(2.0, 0), FockDistribution.vacuum())
    assert von_neumann_entropy(out) == pytest.approx(2 * np.log(2), abs=1e-8)
    with pytest.raises(DimensionMismatch):
        apply(loss_kernel(0.5, 2), FockDistribution.fock(3))


def test_apply_tracks_tail():
    rho = thermal_distribution(0.5, 10)
    k = amplifier_kernel(2.0, 10)
    out = apply(k, rho)
    assert out.tail_mass == pytest.approx(rho.tail_mass + k.column_tails @ rho.probs)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.one_of(
            st.floats(0.0, 1.0).map(PureLoss),
            st.floats(1.0, 3.0).map(Amplifier),
        ),
        min_size=1,
        max_size=4,
    ),
    st.integers(0, 15),
)
def test_composite_columns_stochastic(specs, K):
    k = compose(specs, K, TAIL)
    assert np.all(k.matrix >= 0)
    assert np.all(k.column_tails <= TAIL)
    np.testing.assert_allclose(k.matrix.sum(axis=0) + k.column_tails, 1.0, atol=1e-12)


# --- oracle equivalence -----------------------------------------------------

@pytest.mark.parametrize("eta", [0.1, 0.3, 0.5, 0.9])
def test_loss_matches_beam_splitter(eta):
    table = beam_splitter_amplitudes(eta, 10)
    kernel = loss_kernel(eta, 10)
    for k in range(11):
        np.testing.assert_allclose(table.signal_marginal(k), kernel.matrix[: k + 1, k], rtol=0, atol=1e-10)


@pytest.mark.parametrize("gain", [1.25, 2.0])
def test_amplifier_matches_squeezer(gain):
    table = two_mode_squeezer_amplitudes(gain, 10)
    kernel = amplifier_kernel(gain, 10, TAIL)
    for k in range(11):
        ref = table.signal_marginal(k)
        n = min(ref.size, kernel.matrix.shape[0])
        np.testing.assert_allclose(ref[:n], kernel.matrix[:n, k], rtol=0, atol=1e-10)
        assert abs(ref[n:].sum() - kernel.column_tails[k]) < 1e-10


def test_realize_dispatch():
    assert realize(PureLoss(0.5), 3).matrix.shape == (4, 4)
    with pytest.raises(TypeError):
        realize("loss", 3)


def test_kernel_constructor_validates_shape():
    with pytest.raises(DimensionMismatch):
        ChannelKernel(np.eye(3), np.zeros(2))

import json

import numpy as np
from hypothesis import given

from fockmaj import Amplifier, FockDistribution, Mode, compare_fock_majorization, partial_sums, thermal_distribution
from fockmaj import serialize as ser
from fockmaj.channels import realize, spec_from_params, spec_params, Composite, PureLoss

from conftest import distributions


@given(distributions())
def test_distribution_json_round_trip(rho):
    back = ser.dist_from_dict(json.loads(ser.dumps(ser.dist_to_dict(rho))))
    assert back == rho


@given(distributions())
def test_distribution_csv_round_trip(rho):
    assert ser.dist_from_csv(ser.dist_to_csv(rho)) == rho


def test_csv_keeps_tail():
    th = thermal_distribution(1.0, 5)
    assert ser.dist_from_csv(ser.dist_to_csv(th)) == th


def test_load_distribution(tmp_path):
    th = thermal_distribution(0.5, 4)
    (tmp_path / "a.json").write_text(ser.dumps(ser.dist_to_dict(th)))
    (tmp_path / "a.csv").write_text(ser.dist_to_csv(th))
    assert ser.load_distribution(tmp_path / "a.json") == th
    assert ser.load_distribution(tmp_path / "a.csv") == th


def test_kernel_round_trips():
    k = realize(Composite([PureLoss(0.6), Amplifier(1.8)]), 4)
    back = ser.kernel_from_dict(json.loads(ser.dumps(ser.kernel_to_dict(k))))
    np.testing.assert_array_equal(back.matrix, k.matrix)
    np.testing.assert_array_equal(back.column_tails, k.column_tails)
    assert spec_from_params(back.params) == Composite([PureLoss(0.6), Amplifier(1.8)])
    np.testing.assert_array_equal(ser.kernel_matrix_from_csv(ser.kernel_to_csv(k)), k.matrix)


@given(distributions())
def test_curve_csv_round_trip(rho):
    for mode in Mode:
        curve = partial_sums(rho, mode)
        np.testing.assert_array_equal(ser.curve_from_csv(ser.curve_to_csv(curve)), curve.sums)


def test_outcome_json():
    out = compare_fock_majorization(FockDistribution([0.5, 0, 0.5]), FockDistribution([0.4, 0.3, 0.3]))
    data = json.loads(ser.dumps(ser.outcome_to_dict(out)))
    assert data["verdict"] == "Incomparable"
    assert (data["witness_up"], data["witness_down"]) == (0, 1)


def test_spec_params_round_trip():
    spec = Composite([PureLoss(0.25), Composite([Amplifier(2.0), PureLoss(1.0)])])
    assert spec_from_params(spec_params(spec)) == spec

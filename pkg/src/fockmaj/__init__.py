"""Fock-majorization of single-mode Fock-diagonal states under phase-insensitive Gaussian channels."""

from .channels import (
    Amplifier,
    ChannelKernel,
    Composite,
    PureLoss,
    amplifier_kernel,
    apply,
    compose,
    dual_kernel,
    loss_kernel,
    realize,
)
from .fock import (
    FockDistribution,
    PassiveDecomposition,
    ThermalSpec,
    is_passive,
    mean_photon_number,
    mean_photons_for_entropy,
    passive_decomposition,
    passive_rearrangement,
    thermal_distribution,
    von_neumann_entropy,
)
from .majorization import (
    ComparisonOutcome,
    Mode,
    PartialSumCurve,
    Verdict,
    check_energy_order,
    compare_fock_majorization,
    compare_majorization,
    partial_sums,
)

__version__ = "0.1.0"

"""Regular majorization and Fock-majorization of Fock-diagonal states.

Both preorders compare cumulative sums. Regular majorization sorts the
spectrum non-increasingly first; Fock-majorization accumulates in photon
number order, i.e. compares ``Tr(P_n rho)`` with ``P_n`` the projector on
``|0>..|n>``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import PreorderNotEstablished, TailTooLarge
from .fock import FockDistribution, mean_photon_number
from .tolerances import EPS_CMP, TAIL_EPS


class Mode(str, enum.Enum):
    SORTED = "sorted"
    FOCK = "fock"


class Verdict(str, enum.Enum):
    MAJORIZES = "Majorizes"
    MAJORIZED_BY = "MajorizedBy"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True, eq=False)
class PartialSumCurve:
    sums: np.ndarray
    mode: Mode

    def __len__(self):
        return self.sums.size

    def padded(self, length: int) -> np.ndarray:
        # past the cutoff a curve stays at its last value
        out = np.full(length, self.sums[-1])
        out[: self.sums.size] = self.sums
        return out


@dataclass(frozen=True)
class ComparisonOutcome:
    """Result of comparing ``rho`` (first operand) against ``sigma``.

    ``witness_up`` is the first index where rho's partial sum exceeds sigma's
    by more than the tolerance, ``witness_down`` the first where it falls short.
    ``margin`` is the largest partial-sum difference running against the
    verdict (at most the tolerance for a clean verdict); for ``Incomparable``
    it is the smaller of the two crossing amplitudes.
    """

    verdict: Verdict
    witness_up: Optional[int]
    witness_down: Optional[int]
    margin: float

    @property
    def holds(self) -> bool:
        """True when the first operand majorizes the second (ties included)."""
        return self.verdict in (Verdict.MAJORIZES, Verdict.EQUIVALENT)

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "witness_up": self.witness_up,
            "witness_down": self.witness_down,
            "margin": self.margin,
        }


def partial_sums(rho: FockDistribution, mode: Mode | str = Mode.FOCK) -> PartialSumCurve:
    mode = Mode(mode)
    p = rho.probs
    if mode is Mode.SORTED:
        p = np.sort(p)[::-1]
    sums = np.cumsum(p)
    sums.setflags(write=False)
    return PartialSumCurve(sums, mode)


def compare_curves(a: np.ndarray, b: np.ndarray, eps_cmp: float = EPS_CMP) -> ComparisonOutcome:
    """Compare two cumulative curves pointwise with a tie band of ``eps_cmp``."""
    length = max(a.size, b.size)
    if a.size < length:
        a = np.concatenate([a, np.full(length - a.size, a[-1])])
    if b.size < length:
        b = np.concatenate([b, np.full(length - b.size, b[-1])])
    d = a - b
    up = np.flatnonzero(d > eps_cmp)
    down = np.flatnonzero(d < -eps_cmp)
    w_up = int(up[0]) if up.size else None
    w_down = int(down[0]) if down.size else None
    max_up = float(d.max())
    max_down = float(-d.min())
    if w_up is None and w_down is None:
        return ComparisonOutcome(Verdict.EQUIVALENT, None, None, float(np.abs(d).max()))
    if w_down is None:
        return ComparisonOutcome(Verdict.MAJORIZES, w_up, None, max_down)
    if w_up is None:
        return ComparisonOutcome(Verdict.MAJORIZED_BY, None, w_down, max_up)
    return ComparisonOutcome(Verdict.INCOMPARABLE, w_up, w_down, min(max_up, max_down))


def _check_tails(rho, sigma, tail_eps):
    for name, x in (("first", rho), ("second", sigma)):
        if x.tail_mass > tail_eps:
            raise TailTooLarge(f"{name} operand has tail mass {x.tail_mass:.3e} > {tail_eps:.1e}")


def compare_majorization(
    rho: FockDistribution,
    sigma: FockDistribution,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ComparisonOutcome:
    """Regular majorization: sorted partial sums."""
    _check_tails(rho, sigma, tail_eps)
    return compare_curves(partial_sums(rho, Mode.SORTED).sums, partial_sums(sigma, Mode.SORTED).sums, eps_cmp)


def compare_fock_majorization(
    rho: FockDistribution,
    sigma: FockDistribution,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ComparisonOutcome:
    """Fock-majorization: partial sums in photon-number order."""
    _check_tails(rho, sigma, tail_eps)
    return compare_curves(partial_sums(rho, Mode.FOCK).sums, partial_sums(sigma, Mode.FOCK).sums, eps_cmp)


def compare(rho, sigma, mode: Mode | str, eps_cmp: float = EPS_CMP, tail_eps: float = TAIL_EPS) -> ComparisonOutcome:
    if Mode(mode) is Mode.FOCK:
        return compare_fock_majorization(rho, sigma, eps_cmp, tail_eps)
    return compare_majorization(rho, sigma, eps_cmp, tail_eps)


@dataclass(frozen=True)
class EnergyOrderReport:
    mean_first: float
    mean_second: float
    gap: float
    holds: bool


def check_energy_order(
    rho: FockDistribution,
    sigma: FockDistribution,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> EnergyOrderReport:
    """Check that rho ≻_F sigma comes with the lower mean photon number.

    Raises PreorderNotEstablished unless rho Fock-majorizes sigma.
    """
    outcome = compare_fock_majorization(rho, sigma, eps_cmp, tail_eps)
    if not outcome.holds:
        raise PreorderNotEstablished(f"first operand does not Fock-majorize the second ({outcome.verdict.value})")
    a = mean_photon_number(rho)
    b = mean_photon_number(sigma)
    n = max(rho.cutoff, sigma.cutoff)
    return EnergyOrderReport(a, b, b - a, a <= b + eps_cmp * max(n, 1))

"""Truncated Fock-diagonal states of a single bosonic mode.

A Fock-diagonal density operator is fully described by its photon-number
distribution. We keep the distribution up to a cutoff ``N`` and record the
probability weight that lives beyond it in ``tail_mass``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.special import xlogy

from .errors import InvalidDistribution, NonPassiveInput
from .tolerances import EPS_CMP, EPS_NORM


@dataclass(frozen=True, eq=False)
class FockDistribution:
    """Photon-number distribution ``probs[0..N]`` plus the mass beyond ``N``.

    Entries in ``[-EPS_CMP, 0)`` are treated as round-off: they are clamped to
    zero and the removed amount is kept in ``clamped_mass``. Anything more
    negative, or a total outside ``1 +/- eps_norm``, is rejected.
    """

    probs: np.ndarray
    tail_mass: float = 0.0
    clamped_mass: float = field(default=0.0, compare=False)

    def __init__(
        self,
        probs: Sequence[float] | np.ndarray,
        tail_mass: float = 0.0,
        *,
        eps_cmp: float = EPS_CMP,
        eps_norm: float = EPS_NORM,
    ):
        p = np.array(probs, dtype=float).ravel()
        if p.size == 0:
            raise InvalidDistribution("distribution must have at least one entry")
        if not np.all(np.isfinite(p)):
            raise InvalidDistribution("distribution entries must be finite")
        tail = float(tail_mass)
        if not math.isfinite(tail) or tail < -eps_cmp:
            raise InvalidDistribution(f"tail_mass must be >= 0, got {tail_mass!r}")
        if p.min() < -eps_cmp:
            raise InvalidDistribution(f"negative probability {p.min():.3e} below tolerance")
        neg = p < 0
        clamped = float(-p[neg].sum()) + (-tail if tail < 0 else 0.0)
        p[neg] = 0.0
        tail = max(tail, 0.0)
        total = float(p.sum()) + tail
        if abs(total - 1.0) > eps_norm:
            raise InvalidDistribution(f"total probability {total!r} is not 1 within {eps_norm}")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)
        object.__setattr__(self, "tail_mass", tail)
        object.__setattr__(self, "clamped_mass", clamped)

    @property
    def cutoff(self) -> int:
        return self.probs.size - 1

    def __len__(self) -> int:
        return self.probs.size

    def __eq__(self, other):
        if not isinstance(other, FockDistribution):
            return NotImplemented
        return self.tail_mass == other.tail_mass and np.array_equal(self.probs, other.probs)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"FockDistribution(probs={self.probs.tolist()!r}, tail_mass={self.tail_mass!r})"

    def padded(self, cutoff: int) -> np.ndarray:
        """Return ``probs`` zero-padded to length ``cutoff + 1``."""
        if cutoff < self.cutoff:
            raise ValueError("cannot pad to a smaller cutoff")
        out = np.zeros(cutoff + 1)
        out[: self.probs.size] = self.probs
        return out

    @classmethod
    def fock(cls, k: int) -> FockDistribution:
        """Number state |k>."""
        if k < 0:
            raise InvalidDistribution("photon number must be >= 0")
        p = np.zeros(k + 1)
        p[k] = 1.0
        return cls(p)

    @classmethod
    def vacuum(cls) -> FockDistribution:
        return cls([1.0])


@dataclass(frozen=True)
class ThermalSpec:
    mean_photons: float

    def __post_init__(self):
        if not (self.mean_photons >= 0 and math.isfinite(self.mean_photons)):
            raise InvalidDistribution("mean photon number must be finite and >= 0")


@dataclass(frozen=True, eq=False)
class PassiveDecomposition:
    """Weights ``e_n`` with rho = sum_n e_n P_n, P_n the projector on |0>..|n>."""

    weights: np.ndarray

    def reconstruct(self) -> np.ndarray:
        # (sum_n e_n P_n)_{ii} = sum_{n >= i} e_n
        return np.cumsum(self.weights[::-1])[::-1]

    def trace(self) -> float:
        return float(np.dot(self.weights, np.arange(1, self.weights.size + 1)))


def is_passive(rho: FockDistribution, eps_cmp: float = EPS_CMP) -> bool:
    p = rho.probs
    return bool(np.all(p[:-1] >= p[1:] - eps_cmp))


def passive_rearrangement(rho: FockDistribution) -> FockDistribution:
    """Sort the spectrum non-increasingly along the Fock basis."""
    return FockDistribution(np.sort(rho.probs)[::-1], rho.tail_mass)


def passive_decomposition(rho: FockDistribution, eps_cmp: float = EPS_CMP) -> PassiveDecomposition:
    if not is_passive(rho, eps_cmp):
        raise NonPassiveInput("passive decomposition requires non-increasing probabilities")
    p = rho.probs
    nxt = np.append(p[1:], 0.0)
    # differences inside the tolerance band are round-off, not negative weight
    w = np.clip(p - nxt, 0.0, None)
    w.setflags(write=False)
    return PassiveDecomposition(w)


def mean_photon_number(rho: FockDistribution, with_caveat: bool = False):
    """Mean photon number of the retained part of the distribution.

    With ``with_caveat=True`` returns ``(value, caveat)`` where ``caveat`` is
    set whenever mass was discarded beyond the cutoff, in which case the value
    is a lower bound.
    """
    value = float(np.dot(np.arange(rho.probs.size), rho.probs))
    if with_caveat:
        return value, rho.tail_mass > 0
    return value


def von_neumann_entropy(rho: FockDistribution) -> float:
    """Shannon entropy of the diagonal, in nats."""
    return float(-np.sum(xlogy(rho.probs, rho.probs)))


def thermal_distribution(spec: ThermalSpec | float, cutoff: int) -> FockDistribution:
    nbar = spec.mean_photons if isinstance(spec, ThermalSpec) else ThermalSpec(float(spec)).mean_photons
    if cutoff < 0:
        raise InvalidDistribution("cutoff must be >= 0")
    q = nbar / (nbar + 1.0)
    n = np.arange(cutoff + 1)
    p = np.power(q, n) / (nbar + 1.0)
    return FockDistribution(p, q ** (cutoff + 1))


def thermal_cutoff(nbar: float, tail_eps: float) -> int:
    """Smallest cutoff whose thermal tail ``q**(N+1)`` is at most ``tail_eps``."""
    if nbar == 0:
        return 0
    q = nbar / (nbar + 1.0)
    n = max(int(math.ceil(math.log(tail_eps) / math.log(q))) - 1, 0)
    while q ** (n + 1) > tail_eps:
        n += 1
    return n


def thermal_entropy(nbar: float) -> float:
    """g(n) = (n+1) ln(n+1) - n ln n, written to avoid cancellation at large n."""
    if nbar < 0:
        raise ValueError("mean photon number must be >= 0")
    if nbar == 0:
        return 0.0
    if nbar < 1.0:
        return (nbar + 1.0) * math.log1p(nbar) - nbar * math.log(nbar)
    return math.log1p(nbar) + nbar * math.log1p(1.0 / nbar)


def mean_photons_for_entropy(entropy: float, tol: float = 1e-12) -> float:
    """Invert the thermal entropy by bisection."""
    if entropy < 0:
        raise ValueError("entropy must be >= 0")
    if entropy == 0:
        return 0.0
    lo, hi = 0.0, 1.0
    while thermal_entropy(hi) < entropy:
        lo, hi = hi, 2.0 * hi
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        g = thermal_entropy(mid)
        if abs(g - entropy) <= tol and hi - lo <= tol * max(1.0, mid):
            return mid
        if g < entropy:
            lo = mid
        else:
            hi = mid

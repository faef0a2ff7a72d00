"""Photon-number transition kernels of phase-insensitive Gaussian channels.

A Fock-preserving channel acts on Fock-diagonal states through a
column-stochastic matrix ``P(n|k)``: column ``k`` is the output photon-number
distribution for the input |k><k|. Pure loss columns are binomial and
quantum-limited amplifier columns are negative binomial shifted by ``k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np
from scipy.special import gammaln, xlogy
from scipy.stats import nbinom

from .errors import CutoffOverflow, DimensionMismatch, ParameterOutOfRange
from .fock import FockDistribution
from .tolerances import MAX_ROWS, TAIL_EPS

# columns with k above this use log-space binomials
_DIRECT_BINOMIAL_MAX_K = 40


@dataclass(frozen=True)
class PureLoss:
    eta: float

    def __post_init__(self):
        if not (0.0 <= self.eta <= 1.0):
            raise ParameterOutOfRange(f"transmittance must lie in [0, 1], got {self.eta!r}")


@dataclass(frozen=True)
class Amplifier:
    gain: float

    def __post_init__(self):
        if not (self.gain >= 1.0 and math.isfinite(self.gain)):
            raise ParameterOutOfRange(f"gain must be finite and >= 1, got {self.gain!r}")

    @property
    def t(self) -> float:
        return 1.0 - 1.0 / self.gain

    @property
    def squeezing(self) -> float:
        return math.atanh(math.sqrt(self.t)) if self.gain > 1 else 0.0


@dataclass(frozen=True)
class Composite:
    """Channels applied in listed order: ``Composite([L, A])`` is A∘L."""

    parts: tuple

    def __init__(self, parts: Sequence["ChannelSpec"]):
        parts = tuple(parts)
        if not parts:
            raise ParameterOutOfRange("composite channel needs at least one part")
        object.__setattr__(self, "parts", parts)


ChannelSpec = Union[PureLoss, Amplifier, Composite]


def spec_params(spec: ChannelSpec):
    """JSON-friendly description of a channel spec."""
    if isinstance(spec, PureLoss):
        return {"type": "loss", "eta": spec.eta}
    if isinstance(spec, Amplifier):
        return {"type": "amplifier", "gain": spec.gain}
    if isinstance(spec, Composite):
        return {"type": "composite", "parts": [spec_params(p) for p in spec.parts]}
    raise TypeError(f"not a channel spec: {spec!r}")


def spec_from_params(params) -> ChannelSpec:
    kind = params["type"]
    if kind == "loss":
        return PureLoss(float(params["eta"]))
    if kind == "amplifier":
        return Amplifier(float(params["gain"]))
    if kind == "composite":
        return Composite([spec_from_params(p) for p in params["parts"]])
    raise ValueError(f"unknown channel type {kind!r}")


def _leaf_count(spec: ChannelSpec) -> int:
    if isinstance(spec, Composite):
        return sum(_leaf_count(p) for p in spec.parts)
    return 1


@dataclass(frozen=True, eq=False)
class ChannelKernel:
    """Dense transition matrix, rows = output photon number 0..M, columns = input 0..K.

    ``column_tails[k]`` is the output probability discarded above row ``M``
    for input |k>.
    """

    matrix: np.ndarray
    column_tails: np.ndarray
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2:
            raise DimensionMismatch("kernel matrix must be two-dimensional")
        tails = np.zeros(m.shape[1]) if self.column_tails is None else np.array(self.column_tails, dtype=float)
        if tails.shape != (m.shape[1],):
            raise DimensionMismatch("need one tail entry per kernel column")
        m.setflags(write=False)
        tails.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "column_tails", tails)

    @property
    def input_cutoff(self) -> int:
        return self.matrix.shape[1] - 1

    @property
    def output_cutoff(self) -> int:
        return self.matrix.shape[0] - 1

    def column(self, k: int) -> FockDistribution:
        return FockDistribution(self.matrix[:, k], self.column_tails[k])

    def cumulative(self) -> np.ndarray:
        """``C[n, k] = Tr(P_n Φ[|k><k|])``, the Fock partial sums of every column."""
        return np.cumsum(self.matrix, axis=0)


def _loss_column(eta: float, k: int) -> np.ndarray:
    n = np.arange(k + 1)
    if k <= _DIRECT_BINOMIAL_MAX_K:
        return np.array([float(math.comb(k, i)) * eta**i * (1.0 - eta) ** (k - i) for i in n])
    logc = gammaln(k + 1) - gammaln(n + 1) - gammaln(k - n + 1)
    return np.exp(logc + xlogy(n, eta) + xlogy(k - n, 1.0 - eta))


def loss_kernel(eta: float, K: int, tail_eps: float = TAIL_EPS) -> ChannelKernel:
    """Pure loss kernel ``P(n|k) = C(k, n) eta^n (1-eta)^(k-n)``; square, no tails."""
    spec = PureLoss(float(eta))
    if K < 0:
        raise ParameterOutOfRange("input cutoff must be >= 0")
    mat = np.zeros((K + 1, K + 1))
    for k in range(K + 1):
        mat[: k + 1, k] = _loss_column(spec.eta, k)
    return ChannelKernel(mat, np.zeros(K + 1), spec_params(spec))


def _amplifier_column(t: float, k: int, length: int) -> np.ndarray:
    """s_n^(k) = C(n+k, n) t^n (1-t)^(k+1) for n = 0..length-1."""
    n = np.arange(length)
    if k <= _DIRECT_BINOMIAL_MAX_K:
        binom = np.array([float(math.comb(i + k, i)) for i in n])
        return binom * np.power(t, n) * (1.0 - t) ** (k + 1)
    logc = gammaln(n + k + 1) - gammaln(n + 1) - gammaln(k + 1)
    return np.exp(logc + xlogy(n, t) + (k + 1) * math.log1p(-t))


def amplifier_kernel(gain: float, K: int, tail_eps: float = TAIL_EPS, max_rows: int = MAX_ROWS) -> ChannelKernel:
    """Quantum-limited amplifier kernel; input |k> is spread over rows k, k+1, ...

    The row cutoff ``M`` is the smallest one that leaves every column with
    discarded mass below ``tail_eps``.
    """
    spec = Amplifier(float(gain))
    if K < 0:
        raise ParameterOutOfRange("input cutoff must be >= 0")
    if spec.gain == 1.0:
        return ChannelKernel(np.eye(K + 1), np.zeros(K + 1), spec_params(spec))
    t = spec.t
    p = 1.0 - t
    ks = np.arange(K + 1)
    # the extra photons added to |k> follow NegBinomial(k+1 successes, p = 1-t)
    extra = nbinom.isf(tail_eps, ks + 1, p).astype(int)
    extra = np.maximum(extra, 0)
    for i, k in enumerate(ks):
        while nbinom.sf(extra[i], k + 1, p) >= tail_eps:
            extra[i] += 1
    M = int(np.max(ks + extra))
    if M + 1 > max_rows:
        raise CutoffOverflow(f"amplifier gain {gain} at input cutoff {K} needs {M + 1} rows (cap {max_rows})")
    mat = np.zeros((M + 1, K + 1))
    tails = np.zeros(K + 1)
    for k in range(K + 1):
        mat[k:, k] = _amplifier_column(t, k, M + 1 - k)
        tails[k] = nbinom.sf(M - k, k + 1, p)
    return ChannelKernel(mat, tails, spec_params(spec))


def realize(spec: ChannelSpec, K: int, tail_eps: float = TAIL_EPS, max_rows: int = MAX_ROWS) -> ChannelKernel:
    """Build the kernel of any channel spec for inputs 0..K."""
    if isinstance(spec, PureLoss):
        return loss_kernel(spec.eta, K, tail_eps)
    if isinstance(spec, Amplifier):
        return amplifier_kernel(spec.gain, K, tail_eps, max_rows)
    if isinstance(spec, Composite):
        return compose(spec.parts, K, tail_eps, max_rows)
    raise TypeError(f"not a channel spec: {spec!r}")


def compose(specs: Sequence[ChannelSpec], K: int, tail_eps: float = TAIL_EPS, max_rows: int = MAX_ROWS) -> ChannelKernel:
    """Kernel of the channels in ``specs`` applied first to last.

    The tail budget is split evenly across the leaf channels so the composite
    column tails stay below ``tail_eps``.
    """
    composite = Composite(specs)
    eps = tail_eps / _leaf_count(composite)
    mat = np.eye(K + 1)
    tails = np.zeros(K + 1)
    for part in composite.parts:
        step = realize(part, mat.shape[0] - 1, eps * _leaf_count(part), max_rows)
        tails = tails + step.column_tails @ mat
        mat = step.matrix @ mat
    return ChannelKernel(mat, tails, spec_params(composite))


def dual_kernel(kernel: ChannelKernel) -> np.ndarray:
    """Matrix of the dual (Heisenberg-picture) map: the plain transpose.

    Column ``k`` of the result is ``diag Φ†[|k><k|]``; columns are not normalized.
    """
    return kernel.matrix.T


def apply(kernel: ChannelKernel, rho: FockDistribution) -> FockDistribution:
    if rho.cutoff > kernel.input_cutoff:
        raise DimensionMismatch(
            f"state cutoff {rho.cutoff} exceeds kernel input cutoff {kernel.input_cutoff}"
        )
    n = rho.probs.size
    out = kernel.matrix[:, :n] @ rho.probs
    tail = rho.tail_mass + float(kernel.column_tails[:n] @ rho.probs)
    return FockDistribution(out, tail)


def evolve(spec: ChannelSpec, rho: FockDistribution, tail_eps: float = TAIL_EPS) -> FockDistribution:
    """Convenience wrapper: realize the kernel at the state's cutoff and apply it."""
    return apply(realize(spec, rho.cutoff, tail_eps), rho)

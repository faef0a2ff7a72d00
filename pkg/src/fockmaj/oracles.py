"""Brute-force ground truth for the channel kernels.

Nothing here is used by the rest of the package. The beam splitter table is
built by applying the mixed creation operator ``k`` times to the two-mode
vacuum; the two-mode squeezer table by exponentiating the squeezing generator
on its invariant ladder of states. The exact kernels use rational arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import expm

from .channels import Amplifier, PureLoss
from .errors import CutoffOverflow, ParameterNotRational, ParameterOutOfRange


@dataclass(frozen=True)
class TwoModeAmplitudeTable:
    """``amplitudes[k]`` maps (n, m) to <n, m|U|k, 0>."""

    parameter: float
    amplitudes: dict

    def norm(self, k: int) -> float:
        return float(sum(abs(a) ** 2 for a in self.amplitudes[k].values()))

    def signal_marginal(self, k: int) -> np.ndarray:
        """Photon-number distribution of the first mode after the unitary."""
        top = max(n for n, _ in self.amplitudes[k])
        out = np.zeros(top + 1)
        for (n, _), a in self.amplitudes[k].items():
            out[n] += abs(a) ** 2
        return out


def beam_splitter_amplitudes(eta: float, k_cap: int) -> TwoModeAmplitudeTable:
    """(sqrt(eta) a† + sqrt(1-eta) b†)^k |0,0> / sqrt(k!) for k = 0..k_cap."""
    if not 0.0 <= eta <= 1.0:
        raise ParameterOutOfRange("transmittance must lie in [0, 1]")
    ca, cb = math.sqrt(eta), math.sqrt(1.0 - eta)
    state = {(0, 0): 1.0}
    table = {0: dict(state)}
    for k in range(1, k_cap + 1):
        nxt: dict = {}
        for (n, m), amp in state.items():
            # a†|n> = sqrt(n+1)|n+1>
            nxt[(n + 1, m)] = nxt.get((n + 1, m), 0.0) + ca * math.sqrt(n + 1) * amp
            nxt[(n, m + 1)] = nxt.get((n, m + 1), 0.0) + cb * math.sqrt(m + 1) * amp
        state = nxt
        norm = math.sqrt(math.factorial(k))
        table[k] = {key: v / norm for key, v in state.items()}
    return TwoModeAmplitudeTable(eta, table)


def _squeezed_ladder(r: float, k: int, length: int) -> np.ndarray:
    # basis |k+j, j>, j = 0..length-1; a†b†|k+j, j> = sqrt((k+j+1)(j+1)) |k+j+1, j+1>
    j = np.arange(length - 1)
    off = r * np.sqrt((k + j + 1.0) * (j + 1.0))
    gen = np.diag(off, -1) - np.diag(off, 1)
    return expm(gen)[:, 0]


def two_mode_squeezer_amplitudes(
    gain: float, k_cap: int, tail_eps: float = 1e-14, max_length: int = 4096
) -> TwoModeAmplitudeTable:
    """exp(r(a†b† - ab)) |k, 0> with tanh(r)^2 = 1 - 1/gain.

    The ladder is truncated at a length that is doubled until the amplitudes
    stop changing and the weight near the truncation edge is below ``tail_eps``.
    """
    spec = Amplifier(gain)
    r = spec.squeezing
    table = {}
    for k in range(k_cap + 1):
        length = 32
        prev = None
        while True:
            if length > max_length:
                raise CutoffOverflow(f"squeezer ladder for k={k} did not converge within {max_length} levels")
            amps = _squeezed_ladder(r, k, length)
            edge = float(np.sum(amps[length // 2 :] ** 2))
            if prev is not None and edge < tail_eps:
                if np.max(np.abs(amps[: prev.size] ** 2 - prev**2)) < tail_eps:
                    break
            prev = amps
            length *= 2
        table[k] = {(k + j, j): float(a) for j, a in enumerate(amps) if a != 0.0}
    return TwoModeAmplitudeTable(gain, table)


def as_fraction(x) -> Fraction:
    """Exact rational value of ``x``; floats must be short decimals or dyadics."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterNotRational(f"cannot read {x!r} as a rational") from exc
    if isinstance(x, float) and math.isfinite(x):
        fr = Fraction(x).limit_denominator(10**6)
        if float(fr) == x:
            return fr
    raise ParameterNotRational(f"{x!r} is not a recognizable rational")


@dataclass(frozen=True)
class ExactKernel:
    """Rational kernel entries ``rows[n][k]``; amplifier kernels are cut at ``len(rows)``."""

    rows: list
    kind: str
    parameter: Fraction

    def column(self, k: int) -> list:
        return [row[k] for row in self.rows]


def exact_small_kernels(spec, k_cap: int, extra_rows: int = 12) -> ExactKernel:
    """Exact loss or amplifier kernel for inputs 0..k_cap.

    ``spec`` is a PureLoss/Amplifier or a ``("loss", eta)`` / ``("amplifier", gain)``
    pair; parameters may be given as Fractions or strings to avoid float
    conversion. Amplifier columns are kept up to row ``k_cap + extra_rows``.
    """
    if k_cap < 0 or k_cap > 64:
        raise ParameterOutOfRange("exact kernels are limited to k_cap <= 64")
    if isinstance(spec, PureLoss):
        kind, value = "loss", spec.eta
    elif isinstance(spec, Amplifier):
        kind, value = "amplifier", spec.gain
    else:
        kind, value = spec
    x = as_fraction(value)
    if kind == "loss":
        if not 0 <= x <= 1:
            raise ParameterOutOfRange("transmittance must lie in [0, 1]")
        rows = [[Fraction(0)] * (k_cap + 1) for _ in range(k_cap + 1)]
        for k in range(k_cap + 1):
            for n in range(k + 1):
                rows[n][k] = math.comb(k, n) * x**n * (1 - x) ** (k - n)
        return ExactKernel(rows, kind, x)
    if kind == "amplifier":
        if x < 1:
            raise ParameterOutOfRange("gain must be >= 1")
        t = 1 - 1 / x
        size = k_cap + extra_rows + 1
        rows = [[Fraction(0)] * (k_cap + 1) for _ in range(size)]
        for k in range(k_cap + 1):
            for n in range(size - k):
                rows[n + k][k] = math.comb(n + k, n) * t**n * (1 - t) ** (k + 1)
        return ExactKernel(rows, kind, x)
    raise ValueError(f"unknown kernel kind {kind!r}")


def exact_ladder_residuals(kernel: ExactKernel) -> list:
    """Residuals of the partial-sum ladder identities in exact arithmetic.

    Loss: sum_{i<=n} r_i^(k) - sum_{i<=n} r_i^(k+1) - eta r_n^(k).
    Amplifier (index n counts photons added on top of k):
    sum_{i<=n} s_i^(k) - sum_{i<=n} s_i^(k+1) - (G-1) s_n^(k+1).
    Only entries fully inside the stored rows are checked.
    """
    rows = kernel.rows
    ncols = len(rows[0])
    out = []
    for k in range(ncols - 1):
        a = kernel.column(k)
        b = kernel.column(k + 1)
        if kernel.kind == "loss":
            sa = sb = Fraction(0)
            for n in range(k + 2):
                sa += a[n]
                sb += b[n]
                out.append(sa - sb - kernel.parameter * a[n])
        else:
            g = kernel.parameter
            sa = sb = Fraction(0)
            for n in range(len(rows) - k - 1):
                sa += a[n + k]
                sb += b[n + k + 1]
                out.append(sa - sb - (g - 1) * b[n + k + 1])
    return out

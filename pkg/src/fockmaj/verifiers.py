"""Numerical checks of the ladder, preservation and conjecture statements.

Every check returns a :class:`ScanReport`. A *violation* means a statement
that should hold failed numerically, which points at a bug. The broadcast
conjecture scan is different: a negative entropy margin there is a
*candidate* counterexample and is reported as such, never as a violation.

All sampling goes through a single ``numpy.random.Generator`` seeded from the
caller's seed and consumed in trial order, so reports are reproducible.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from . import channels as ch
from .channels import Amplifier, ChannelKernel, ChannelSpec, PureLoss
from .errors import SearchExhausted
from .fock import (
    FockDistribution,
    mean_photons_for_entropy,
    passive_rearrangement,
    thermal_cutoff,
    thermal_distribution,
    von_neumann_entropy,
)
from .majorization import Mode, Verdict, compare, compare_majorization, partial_sums
from .tolerances import EPS_CMP, TAIL_EPS

Channel = Union[ChannelSpec, ChannelKernel]

IDENTITY_TOL = 1e-12


@dataclass
class ScanReport:
    name: str
    trials: int
    violations: int
    worst_margin: float
    witnesses: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.violations != len(self.witnesses):
            raise ValueError("violations must equal the number of witnesses")

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self):
        return asdict(self)


class _Scan:
    """Accumulates checks: each one contributes an amount, positive = failing."""

    def __init__(self, name, config, tol=EPS_CMP):
        self.name = name
        self.config = config
        self.tol = tol
        self.trials = 0
        self.worst = -math.inf
        self.witnesses = []
        self.details = {}

    def check(self, amount: float, witness: Callable[[], dict], tol: Optional[float] = None):
        amount = float(amount)
        self.worst = max(self.worst, amount)
        if amount > (self.tol if tol is None else tol):
            self.witnesses.append(witness())

    def report(self) -> ScanReport:
        worst = self.worst if self.worst != -math.inf else 0.0
        return ScanReport(self.name, self.trials, len(self.witnesses), worst, self.witnesses, self.config, self.details)


def _channel_params(channel: Channel):
    if isinstance(channel, ChannelKernel):
        return channel.params or {"type": "kernel", "shape": list(channel.matrix.shape)}
    return ch.spec_params(channel)


def _kernel(channel: Channel, K: int, tail_eps: float) -> ChannelKernel:
    # hand-built kernels are used as given; callers clamp their sampling cutoffs
    if isinstance(channel, ChannelKernel):
        return channel
    return ch.realize(channel, K, tail_eps)


def _dist_json(rho: FockDistribution):
    return {"probs": rho.probs.tolist(), "tail_mass": rho.tail_mass}


def _fock_curve_gap(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Cumulative sums of ``b - a`` after zero-padding; positive entries mean a fails to Fock-majorize b."""
    n = max(a.size, b.size)
    pa = np.zeros(n)
    pb = np.zeros(n)
    pa[: a.size] = a
    pb[: b.size] = b
    return np.cumsum(pb - pa)


# --- samplers ---------------------------------------------------------------

def sample_passive(rng: np.random.Generator, cutoff: int) -> FockDistribution:
    """Sorted, normalized exponential variates on a random number of levels."""
    d = int(rng.integers(1, cutoff + 2))
    x = np.sort(rng.exponential(size=d))[::-1]
    p = np.zeros(cutoff + 1)
    p[:d] = x / x.sum()
    return FockDistribution(p)


def sample_diagonal(rng: np.random.Generator, cutoff: int) -> FockDistribution:
    """Normalized exponential variates on a random subset of levels (generally not passive)."""
    d = int(rng.integers(1, cutoff + 2))
    support = np.sort(rng.choice(cutoff + 1, size=d, replace=False))
    p = np.zeros(cutoff + 1)
    x = rng.exponential(size=d)
    p[support] = x / x.sum()
    return FockDistribution(p)


def push_down(rng: np.random.Generator, probs: np.ndarray, moves: Optional[int] = None) -> np.ndarray:
    """Move random fractions of mass from an index to a lower one.

    Each move only raises the Fock partial sums, so the result Fock-majorizes
    the input.
    """
    p = np.array(probs, dtype=float)
    n = p.size
    if n < 2:
        return p
    if moves is None:
        moves = int(rng.integers(1, 2 * n + 1))
    for _ in range(moves):
        j = int(rng.integers(1, n))
        i = int(rng.integers(0, j))
        amount = rng.uniform() * p[j]
        p[j] -= amount
        p[i] += amount
    return p


def sample_fock_pair(rng: np.random.Generator, cutoff: int):
    """(rho, sigma) with rho ≻_F sigma by construction."""
    sigma = sample_diagonal(rng, cutoff)
    rho = FockDistribution(push_down(rng, sigma.probs))
    return rho, sigma


def sample_passive_pair(rng: np.random.Generator, cutoff: int):
    """Passive (rho, sigma) with rho ≻ sigma.

    Pushing mass down from a passive sigma gives a state that Fock-majorizes
    it; sorting that state only raises its sorted partial sums, and for the
    passive sigma sorted and Fock partial sums coincide.
    """
    sigma = sample_passive(rng, cutoff)
    rho = passive_rearrangement(FockDistribution(push_down(rng, sigma.probs)))
    return rho, sigma


# --- ladders ----------------------------------------------------------------

def verify_ladder(
    channel: Channel,
    k_max: int = 20,
    n_max: Optional[int] = None,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ScanReport:
    """Check Φ[|k>] ≻_F Φ[|k+1>] and Φ[|k>] ≻ Φ[|k+1>] for k < k_max.

    For a bare loss or amplifier spec the exact partial-sum difference
    identities are checked as well, to ``IDENTITY_TOL``.
    """
    kernel = _kernel(channel, k_max, tail_eps)
    k_max = min(k_max, kernel.input_cutoff)
    config = {"channel": _channel_params(channel), "k_max": k_max, "n_max": n_max, "eps_cmp": eps_cmp, "tail_eps": tail_eps}
    scan = _Scan("ladder", config, eps_cmp)
    mat = kernel.matrix
    rows = mat.shape[0]
    top = rows if n_max is None else min(rows, n_max + 1)
    cum = kernel.cumulative()
    for k in range(k_max):
        scan.trials += 1
        gap = cum[:top, k + 1] - cum[:top, k]
        n_bad = int(np.argmax(gap))
        scan.check(gap.max(), lambda: {"check": "fock_ladder", "k": k, "n": n_bad, "amount": float(gap[n_bad])})
        regular = compare_majorization(kernel.column(k), kernel.column(k + 1), eps_cmp, tail_eps)
        scan.check(
            0.0 if regular.holds else regular.margin,
            lambda: {"check": "regular_ladder", "k": k, **regular.to_dict()},
        )
        if isinstance(channel, PureLoss):
            n = np.arange(min(k + 2, top))
            resid = cum[n, k] - cum[n, k + 1] - channel.eta * mat[n, k]
            i = int(np.argmax(np.abs(resid)))
            scan.check(abs(resid[i]), lambda: {"check": "loss_identity", "k": k, "n": int(n[i]), "residual": float(resid[i])}, IDENTITY_TOL)
        elif isinstance(channel, Amplifier):
            # index n counts photons added on top of the input: column k starts at row k
            n = np.arange(0, top - k - 1)
            if n.size:
                sum_k = cum[n + k, k]
                sum_k1 = cum[n + k + 1, k + 1]
                resid = sum_k - sum_k1 - (channel.gain - 1.0) * mat[n + k + 1, k + 1]
                i = int(np.argmax(np.abs(resid)))
                scan.check(abs(resid[i]), lambda: {"check": "amplifier_identity", "k": k, "n": int(n[i]), "residual": float(resid[i])}, IDENTITY_TOL)
    return scan.report()


def column_swap_kernel() -> ChannelKernel:
    """3x3 permutation kernel exchanging |0> and |1>; not passive-preserving."""
    m = np.eye(3)[:, [1, 0, 2]]
    return ChannelKernel(m, np.zeros(3), {"type": "kernel", "name": "column_swap"})


def dual_ladder_gaps(kernel: ChannelKernel, k_max: int, n_max: Optional[int] = None) -> np.ndarray:
    """``gap[k, n] = Tr(P_n Φ†[|k+1>]) - Tr(P_n Φ†[|k>])``; the dual ladder holds iff all <= 0."""
    dual = ch.dual_kernel(kernel)
    ncols = dual.shape[0] if n_max is None else min(dual.shape[0], n_max + 1)
    k_max = min(k_max, dual.shape[1] - 1)
    cum = np.cumsum(dual[:ncols, : k_max + 1], axis=0)
    return (cum[:, 1:] - cum[:, :-1]).T


def verify_dual_ladder_criterion(
    channel: Channel,
    k_max: int = 20,
    n_max: Optional[int] = None,
    sample_count: int = 200,
    cutoff: Optional[int] = None,
    seed: int = 0,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ScanReport:
    """Dual ladder check, cross-checked against empirical passive preservation.

    The dual partial sums are read off the transpose and compared with the
    diagonal of Φ[P_n] (the trace identity). Both sides of the equivalence are
    evaluated; ``details`` says whether they agree.
    """
    if cutoff is None:
        cutoff = k_max
    kernel = _kernel(channel, max(k_max, cutoff), tail_eps)
    config = {
        "channel": _channel_params(channel), "k_max": k_max, "n_max": n_max, "sample_count": sample_count,
        "cutoff": cutoff, "seed": seed, "eps_cmp": eps_cmp, "tail_eps": tail_eps,
    }
    scan = _Scan("dual", config, eps_cmp)
    gaps = dual_ladder_gaps(kernel, k_max, n_max)
    dual_ok = True
    for k in range(gaps.shape[0]):
        scan.trials += 1
        n_bad = int(np.argmax(gaps[k]))
        if gaps[k, n_bad] > eps_cmp:
            dual_ok = False
        scan.check(gaps[k, n_bad], lambda: {"check": "dual_ladder", "k": k, "n": n_bad, "amount": float(gaps[k, n_bad])})

    # trace identity: Tr(P_n Φ†[|k>]) = <k|Φ[P_n]|k>
    ncols = gaps.shape[1]
    proj = np.triu(np.ones((kernel.matrix.shape[1], ncols)))  # column n = diag(P_n)
    via_channel = kernel.matrix @ proj
    via_dual = np.cumsum(ch.dual_kernel(kernel)[:ncols, :], axis=0).T
    kk = min(via_channel.shape[0], k_max + 1)
    mismatch = float(np.abs(via_channel[:kk] - via_dual[:kk]).max())
    scan.check(mismatch, lambda: {"check": "trace_identity", "amount": mismatch}, IDENTITY_TOL)

    rng = np.random.default_rng(seed)
    sample_cut = min(cutoff, kernel.input_cutoff)
    preserved = True
    for _ in range(sample_count):
        scan.trials += 1
        rho = sample_passive(rng, sample_cut)
        out = ch.apply(kernel, rho)
        amount = float(np.max(np.diff(out.probs))) if out.probs.size > 1 else 0.0
        if amount > eps_cmp:
            preserved = False
        scan.check(amount, lambda: {"check": "passive_output", "input": _dist_json(rho), "amount": amount})
    scan.details = {"dual_ladder_holds": dual_ok, "passive_preserved": preserved, "iff_consistent": dual_ok == preserved}
    if dual_ok != preserved:
        scan.witnesses.append({"check": "iff", "dual_ladder_holds": dual_ok, "passive_preserved": preserved})
    return scan.report()


# --- preservation -----------------------------------------------------------

def verify_passive_preservation(
    channel: Channel,
    sample_count: int = 1000,
    cutoff: int = 30,
    seed: int = 0,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ScanReport:
    kernel = _kernel(channel, cutoff, tail_eps)
    cutoff = min(cutoff, kernel.input_cutoff)
    config = {"channel": _channel_params(channel), "sample_count": sample_count, "cutoff": cutoff, "seed": seed, "eps_cmp": eps_cmp, "tail_eps": tail_eps}
    scan = _Scan("passive", config, eps_cmp)
    rng = np.random.default_rng(seed)
    for _ in range(sample_count):
        scan.trials += 1
        rho = sample_passive(rng, cutoff)
        out = ch.apply(kernel, rho)
        amount = float(np.max(np.diff(out.probs))) if out.probs.size > 1 else 0.0
        scan.check(amount, lambda: {"input": _dist_json(rho), "amount": amount})
    return scan.report()


@dataclass(frozen=True)
class RecurrenceTrace:
    """The alpha/beta descent for one pair rho ≻_F sigma through a kernel.

    ``alpha[k, n]`` = R_k P_n^(k) + sum_{i>k} r_i P_n^(i) and likewise ``beta``
    with sigma; ``slack[k, n]`` = (R_k - S_k)(P_n^(k) - P_n^(k+1)), the amount
    by which alpha - beta grows when stepping from k+1 down to k.
    """

    alpha: np.ndarray
    beta: np.ndarray
    slack: np.ndarray
    output_gap: np.ndarray  # A_n - B_n

    @property
    def min_slack(self) -> float:
        return float(self.slack.min()) if self.slack.size else 0.0

    @property
    def start_mismatch(self) -> float:
        """|(alpha^(0) - beta^(0)) - (A - B)|, max over n."""
        return float(np.abs(self.alpha[0] - self.beta[0] - self.output_gap).max())

    @property
    def step_mismatch(self) -> float:
        """Max deviation from alpha^(k) - beta^(k) = alpha^(k+1) - beta^(k+1) + slack^(k)."""
        if self.slack.size == 0:
            return 0.0
        d = self.alpha - self.beta
        return float(np.abs(d[:-1] - d[1:] - self.slack).max())


def recurrence_trace(kernel: ChannelKernel, rho: FockDistribution, sigma: FockDistribution) -> RecurrenceTrace:
    N = max(rho.cutoff, sigma.cutoff)
    r = rho.padded(N)
    s = sigma.padded(N)
    C = kernel.cumulative()[:, : N + 1]  # C[n, i] = P_n^(i)
    R = np.cumsum(r)
    S = np.cumsum(s)

    def descent(w, W):
        # sum_{i>k} w_i C[:, i] for every k, by a reverse cumulative sum
        weighted = C * w
        after = np.cumsum(weighted[:, ::-1], axis=1)[:, ::-1]
        after = np.concatenate([after[:, 1:], np.zeros((C.shape[0], 1))], axis=1)
        return (W * C + after).T

    alpha = descent(r, R)
    beta = descent(s, S)
    slack = ((R - S)[:-1, None] * (C[:, :-1] - C[:, 1:]).T)
    gap = C @ r - C @ s
    return RecurrenceTrace(alpha, beta, slack, gap)


def verify_fock_preservation(
    channel: Channel,
    pair_count: int = 1000,
    cutoff: int = 30,
    seed: int = 0,
    trace: bool = True,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ScanReport:
    kernel = _kernel(channel, cutoff, tail_eps)
    cutoff = min(cutoff, kernel.input_cutoff)
    config = {"channel": _channel_params(channel), "pair_count": pair_count, "cutoff": cutoff, "seed": seed, "trace": trace, "eps_cmp": eps_cmp, "tail_eps": tail_eps}
    scan = _Scan("fock-preserve", config, eps_cmp)
    rng = np.random.default_rng(seed)
    min_slack = math.inf
    for _ in range(pair_count):
        scan.trials += 1
        rho, sigma = sample_fock_pair(rng, cutoff)
        a = ch.apply(kernel, rho)
        b = ch.apply(kernel, sigma)
        gap = _fock_curve_gap(a.probs, b.probs)
        amount = float(gap.max())
        scan.check(amount, lambda: {"check": "output_order", "rho": _dist_json(rho), "sigma": _dist_json(sigma), "amount": amount})
        if trace:
            tr = recurrence_trace(kernel, rho, sigma)
            min_slack = min(min_slack, tr.min_slack)
            scan.check(-tr.min_slack, lambda: {"check": "slack", "rho": _dist_json(rho), "sigma": _dist_json(sigma), "min_slack": tr.min_slack})
            bad = max(tr.start_mismatch, tr.step_mismatch)
            scan.check(bad, lambda: {"check": "recurrence_identity", "rho": _dist_json(rho), "sigma": _dist_json(sigma), "amount": bad})
    if trace:
        scan.details = {"min_slack": min_slack if pair_count else 0.0}
    return scan.report()


def verify_majorization_preservation_passive(
    channel: Channel,
    pair_count: int = 1000,
    cutoff: int = 30,
    seed: int = 0,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ScanReport:
    kernel = _kernel(channel, cutoff, tail_eps)
    cutoff = min(cutoff, kernel.input_cutoff)
    config = {"channel": _channel_params(channel), "pair_count": pair_count, "cutoff": cutoff, "seed": seed, "eps_cmp": eps_cmp, "tail_eps": tail_eps}
    scan = _Scan("passive-major", config, eps_cmp)
    rng = np.random.default_rng(seed)
    for _ in range(pair_count):
        scan.trials += 1
        rho, sigma = sample_passive_pair(rng, cutoff)
        a = ch.apply(kernel, rho)
        b = ch.apply(kernel, sigma)
        out = compare_majorization(a, b, eps_cmp, tail_eps)
        scan.check(0.0 if out.holds else out.margin, lambda: {"check": "output_order", "rho": _dist_json(rho), "sigma": _dist_json(sigma), **out.to_dict()})
        for which, x in (("rho", a), ("sigma", b)):
            amount = float(np.max(np.diff(x.probs))) if x.probs.size > 1 else 0.0
            scan.check(amount, lambda: {"check": f"{which}_output_passive", "rho": _dist_json(rho), "sigma": _dist_json(sigma), "amount": amount})
    return scan.report()


def verify_passive_output_dominance(
    channel: Channel,
    sample_count: int = 1000,
    cutoff: int = 30,
    seed: int = 0,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> ScanReport:
    """Check Φ[rho↓] ≻ Φ[rho] for random Fock-diagonal rho."""
    kernel = _kernel(channel, cutoff, tail_eps)
    cutoff = min(cutoff, kernel.input_cutoff)
    config = {"channel": _channel_params(channel), "sample_count": sample_count, "cutoff": cutoff, "seed": seed, "eps_cmp": eps_cmp, "tail_eps": tail_eps}
    scan = _Scan("dominance", config, eps_cmp)
    rng = np.random.default_rng(seed)
    for _ in range(sample_count):
        scan.trials += 1
        rho = sample_diagonal(rng, cutoff)
        out = compare_majorization(ch.apply(kernel, passive_rearrangement(rho)), ch.apply(kernel, rho), eps_cmp, tail_eps)
        scan.check(0.0 if out.holds else out.margin, lambda: {"rho": _dist_json(rho), **out.to_dict()})
    return scan.report()


# --- conjecture and incomparability -----------------------------------------

def scan_broadcast_conjecture(
    channel: Channel,
    entropy_target: float,
    sample_count: int = 500,
    cutoff: int = 30,
    seed: int = 0,
    tolerance: float = 1e-9,
    reference_tail: float = 1e-15,
    tail_eps: float = 1e-13,
    max_attempts: Optional[int] = None,
) -> ScanReport:
    """Minimum over passive rho with S(rho) >= S of S(Φ[rho]) - S(Φ[tau]).

    tau is the thermal state of entropy S, truncated where its tail drops
    below ``reference_tail``. It is always evaluated as trial 0, so the
    reported minimum is at most zero. Margins below ``-tolerance`` are listed
    as candidates in ``details``; they do not count as violations.
    """
    nbar = mean_photons_for_entropy(entropy_target)
    tau = thermal_distribution(nbar, thermal_cutoff(nbar, reference_tail))
    K = max(cutoff, tau.cutoff)
    kernel = _kernel(channel, K, tail_eps)
    ref_entropy = von_neumann_entropy(ch.apply(kernel, tau))
    config = {
        "channel": _channel_params(channel), "entropy_target": entropy_target, "sample_count": sample_count,
        "cutoff": cutoff, "seed": seed, "tolerance": tolerance, "reference_tail": reference_tail, "tail_eps": tail_eps,
    }
    rng = np.random.default_rng(seed)
    if max_attempts is None:
        max_attempts = 100 * max(sample_count, 1)
    margins = [0.0]  # trial 0: rho = tau
    candidates = []
    attempts = accepted = 0
    while accepted < sample_count and attempts < max_attempts:
        attempts += 1
        rho = sample_passive(rng, cutoff)
        if von_neumann_entropy(rho) < entropy_target:
            continue
        accepted += 1
        margin = von_neumann_entropy(ch.apply(kernel, rho)) - ref_entropy
        margins.append(margin)
        if margin < -tolerance:
            candidates.append({"rho": _dist_json(rho), "margin": margin})
    min_margin = float(min(margins))
    details = {
        "thermal_mean_photons": nbar,
        "reference_output_entropy": ref_entropy,
        "min_margin": min_margin,
        "min_margin_excluding_reference": float(min(margins[1:])) if accepted else None,
        "attempts": attempts,
        "accepted": accepted,
        "acceptance_rate": accepted / attempts if attempts else 0.0,
        "flagged": bool(candidates),
        "candidates": candidates,
    }
    return ScanReport("conjecture", accepted + 1, 0, 0.0 - min_margin, [], config, details)


def find_incomparable_pairs(
    mode: Mode | str = Mode.FOCK,
    sample_count: int = 1000,
    cutoff: int = 3,
    seed: int = 0,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
    max_witnesses: Optional[int] = 20,
) -> ScanReport:
    """Random search for incomparable pairs.

    Even trials pair two random diagonal states; odd trials pair a random
    state with a thermal state of random mean (truncated where its tail is
    below ``tail_eps``). Every witness is re-checked at its crossing indices.
    Here ``violations`` counts incomparable pairs found. Raises SearchExhausted
    if there are none.
    """
    mode = Mode(mode)
    config = {"mode": mode.value, "sample_count": sample_count, "cutoff": cutoff, "seed": seed, "eps_cmp": eps_cmp, "tail_eps": tail_eps}
    rng = np.random.default_rng(seed)
    witnesses = []
    found = found_thermal = 0
    best = -math.inf
    for trial in range(sample_count):
        rho = sample_diagonal(rng, cutoff)
        thermal = trial % 2 == 1
        if thermal:
            nbar = float(rng.uniform(0.05, 3.0))
            sigma = thermal_distribution(nbar, thermal_cutoff(nbar, tail_eps))
        else:
            sigma = sample_diagonal(rng, cutoff)
        out = compare(rho, sigma, mode, eps_cmp, tail_eps)
        if out.verdict is not Verdict.INCOMPARABLE:
            continue
        _confirm_crossing(rho, sigma, mode, out, eps_cmp)
        best = max(best, out.margin)
        found += 1
        found_thermal += thermal
        keep = max_witnesses is None or len(witnesses) < max_witnesses
        # always keep the first thermal witness
        if keep or (thermal and found_thermal == 1):
            witnesses.append({"a": _dist_json(rho), "b": _dist_json(sigma), "thermal": thermal, **out.to_dict()})
    if not witnesses:
        raise SearchExhausted(f"no incomparable pair in {sample_count} trials at cutoff {cutoff}")
    details = {"found": found, "found_with_thermal": found_thermal}
    return ScanReport("incomparable", sample_count, len(witnesses), best, witnesses, config, details)


def _confirm_crossing(rho, sigma, mode, out, eps_cmp):
    a = partial_sums(rho, mode).sums
    b = partial_sums(sigma, mode).sums
    n = max(a.size, b.size)
    a = np.concatenate([a, np.full(n - a.size, a[-1])])
    b = np.concatenate([b, np.full(n - b.size, b[-1])])
    if not (a[out.witness_up] - b[out.witness_up] > eps_cmp and b[out.witness_down] - a[out.witness_down] > eps_cmp):
        raise AssertionError("comparator witness indices do not cross")


SUITES = ("ladder", "passive", "dual", "fock-preserve", "passive-major", "dominance")


def run_suite(
    suite: str,
    channel: Channel,
    *,
    k_max: int = 20,
    n_max: Optional[int] = None,
    pairs: int = 1000,
    samples: int = 1000,
    cutoff: int = 30,
    seed: int = 0,
    eps_cmp: float = EPS_CMP,
    tail_eps: float = TAIL_EPS,
) -> list:
    """Run one named suite, or every suite for ``"all"``, in a fixed order."""
    names = SUITES if suite == "all" else (suite,)
    reports = []
    for name in names:
        if name == "ladder":
            reports.append(verify_ladder(channel, k_max, n_max, eps_cmp, tail_eps))
        elif name == "passive":
            reports.append(verify_passive_preservation(channel, samples, cutoff, seed, eps_cmp, tail_eps))
        elif name == "dual":
            reports.append(verify_dual_ladder_criterion(channel, k_max, n_max, samples, cutoff, seed, eps_cmp, tail_eps))
        elif name == "fock-preserve":
            reports.append(verify_fock_preservation(channel, pairs, cutoff, seed, True, eps_cmp, tail_eps))
        elif name == "passive-major":
            reports.append(verify_majorization_preservation_passive(channel, pairs, cutoff, seed, eps_cmp, tail_eps))
        elif name == "dominance":
            reports.append(verify_passive_output_dominance(channel, samples, cutoff, seed, eps_cmp, tail_eps))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return reports

"""Command-line interface.

Channel flags compose in application order: ``--loss 0.5 --amp 2`` first
attenuates, then amplifies (the channel A_2 ∘ L_0.5).

Exit codes: 0 success, 1 verification violations, 2 bad arguments or state,
3 kernel overflow or dimension mismatch, 4 comparison tail too large,
5 incomparable search exhausted.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import channels as ch
from . import serialize as ser
from .errors import CutoffOverflow, DimensionMismatch, InvalidDistribution, SearchExhausted, TailTooLarge
from .fock import FockDistribution, mean_photon_number, thermal_distribution, von_neumann_entropy
from .majorization import Mode, compare, partial_sums
from .tolerances import EPS_CMP, EPS_NORM, TAIL_EPS
from .verifiers import (
    SUITES,
    column_swap_kernel,
    find_incomparable_pairs,
    run_suite,
    scan_broadcast_conjecture,
)

EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_KERNEL = 3
EXIT_TAIL = 4
EXIT_EXHAUSTED = 5


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    cutoff: int = 64
    tail_eps: float = TAIL_EPS
    eps_cmp: float = EPS_CMP
    eps_norm: float = EPS_NORM
    seed: int = 0
    format: str = "json"

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        """Read a flat ``key = value`` file; ``#`` starts a comment."""
        cfg = cls()
        types = {f.name: f.type for f in fields(cls)}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or key not in types:
                raise UsageError(f"{path}:{lineno}: cannot read {raw!r}")
            setattr(cfg, key, _convert(key, value.strip()))
        cfg.validate()
        return cfg

    def validate(self):
        if self.cutoff < 0:
            raise UsageError("cutoff must be >= 0")
        if self.format not in ("json", "csv", "table"):
            raise UsageError(f"unknown format {self.format!r}")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be a 64-bit unsigned integer")


def _convert(key, value):
    try:
        if key in ("cutoff", "seed"):
            return int(value)
        if key == "format":
            return value
        return float(value)
    except ValueError as exc:
        raise UsageError(f"bad value for {key}: {value!r}") from exc


def resolve_config(args) -> RunConfig:
    cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
    for f in fields(RunConfig):
        value = getattr(args, f.name, None)
        if value is not None:
            setattr(cfg, f.name, value)
    cfg.validate()
    return cfg


class _ChannelAction(argparse.Action):
    """Collect --loss / --amp into one ordered list."""

    def __call__(self, parser, namespace, values, option_string=None):
        chain = list(getattr(namespace, "chain", None) or [])
        chain.append((self.const, values))
        namespace.chain = chain


def build_channel(chain):
    specs = []
    for kind, value in chain or []:
        try:
            specs.append(ch.PureLoss(value) if kind == "loss" else ch.Amplifier(value))
        except ch.ParameterOutOfRange as exc:
            raise UsageError(str(exc)) from exc
    if not specs:
        return ch.Composite([ch.PureLoss(1.0)])
    if len(specs) == 1:
        return specs[0]
    return ch.Composite(specs)


def parse_state(text: str, cfg: RunConfig) -> FockDistribution:
    """``fock:k``, ``thermal:nbar``, ``probs:p0,p1,...`` or ``@path`` (JSON or CSV)."""
    try:
        if text.startswith("@"):
            return ser.load_distribution(text[1:])
        kind, sep, body = text.partition(":")
        if not sep:
            raise UsageError(f"cannot parse state {text!r}")
        if kind == "fock":
            return FockDistribution.fock(int(body))
        if kind == "thermal":
            return thermal_distribution(float(body), cfg.cutoff)
        if kind == "probs":
            return FockDistribution([float(x) for x in body.split(",")], eps_cmp=cfg.eps_cmp, eps_norm=cfg.eps_norm)
    except (ValueError, OSError) as exc:
        raise UsageError(f"cannot parse state {text!r}: {exc}") from exc
    raise UsageError(f"unknown state kind {kind!r}")


def _common(parser):
    parser.add_argument("--config", help="flat key=value config file; flags override it")
    parser.add_argument("--cutoff", type=int)
    parser.add_argument("--tail-eps", dest="tail_eps", type=float)
    parser.add_argument("--eps-cmp", dest="eps_cmp", type=float)
    parser.add_argument("--eps-norm", dest="eps_norm", type=float)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--format", choices=("json", "csv", "table"))


def _channel_flags(parser):
    parser.add_argument("--loss", type=float, action=_ChannelAction, const="loss", metavar="ETA", help="pure loss of transmittance ETA")
    parser.add_argument("--amp", type=float, action=_ChannelAction, const="amp", metavar="G", help="quantum-limited amplifier of gain G")
    parser.set_defaults(chain=None)


def build_parser():
    parser = argparse.ArgumentParser(prog="fockmaj", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="send a state through a channel")
    _common(p)
    _channel_flags(p)
    p.add_argument("state")
    p.add_argument("--bits", action="store_true", help="report entropy in bits")

    p = sub.add_parser("compare", help="compare two states")
    _common(p)
    p.add_argument("--mode", choices=("fock", "regular"), default="fock")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("curve", help="partial-sum curve of a state as CSV")
    _common(p)
    p.add_argument("--mode", choices=("fock", "regular"), default="fock")
    p.add_argument("state")

    p = sub.add_parser("kernel", help="export a channel kernel")
    _common(p)
    _channel_flags(p)
    p.add_argument("--input-cutoff", dest="input_cutoff", type=int, default=10)

    p = sub.add_parser("verify", help="run verification suites")
    _common(p)
    _channel_flags(p)
    p.add_argument("suite")
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--nmax", type=int)
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--demo-broken-kernel", action="store_true", help="use a 3x3 column-swap kernel")
    p.add_argument("--witness-dir", type=Path)

    p = sub.add_parser("scan", help="conjecture scan or incomparable-pair search")
    _common(p)
    _channel_flags(p)
    p.add_argument("target", choices=("conjecture", "incomparable"))
    p.add_argument("--entropy", type=float, default=0.0, help="entropy constraint in nats")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--mode", choices=("fock", "regular"), default="fock")
    p.add_argument("--witness-dir", type=Path)
    return parser


def _mode(name):
    return Mode.FOCK if name == "fock" else Mode.SORTED


def _table(rows):
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


def cmd_evolve(args, cfg, out):
    rho = parse_state(args.state, cfg)
    kernel = ch.realize(build_channel(args.chain), rho.cutoff, cfg.tail_eps)
    res = ch.apply(kernel, rho)
    entropy = von_neumann_entropy(res)
    if args.bits:
        entropy /= math.log(2)
    mean, caveat = mean_photon_number(res, with_caveat=True)
    if cfg.format == "csv":
        out.write(ser.dist_to_csv(res))
    elif cfg.format == "table":
        out.write(_table([(str(i), repr(float(p))) for i, p in enumerate(res.probs)]))
        out.write(_table([("tail_mass", repr(res.tail_mass)), ("entropy", f"{entropy!r} {'bits' if args.bits else 'nats'}"), ("mean_photon_number", repr(mean))]))
    else:
        data = ser.dist_to_dict(res)
        data.update(entropy=entropy, entropy_unit="bits" if args.bits else "nats", mean_photon_number=mean, tail_caveat=caveat)
        out.write(ser.dumps(data))
    return 0


def cmd_compare(args, cfg, out):
    a = parse_state(args.first, cfg)
    b = parse_state(args.second, cfg)
    res = compare(a, b, _mode(args.mode), cfg.eps_cmp, cfg.tail_eps)
    if cfg.format == "table":
        out.write(_table([(k, str(v)) for k, v in res.to_dict().items()]))
    elif cfg.format == "csv":
        ca = partial_sums(a, _mode(args.mode)).sums.tolist()
        cb = partial_sums(b, _mode(args.mode)).sums.tolist()
        n = max(len(ca), len(cb))
        ca += [ca[-1]] * (n - len(ca))
        cb += [cb[-1]] * (n - len(cb))
        out.write("index,first,second\n" + "".join(f"{i},{x!r},{y!r}\n" for i, (x, y) in enumerate(zip(ca, cb))))
    else:
        out.write(ser.dumps(res.to_dict()))
    return 0


def cmd_curve(args, cfg, out):
    out.write(ser.curve_to_csv(partial_sums(parse_state(args.state, cfg), _mode(args.mode))))
    return 0


def cmd_kernel(args, cfg, out):
    kernel = ch.realize(build_channel(args.chain), args.input_cutoff, cfg.tail_eps)
    out.write(ser.kernel_to_csv(kernel) if cfg.format == "csv" else ser.dumps(ser.kernel_to_dict(kernel)))
    return 0


def _write_witnesses(reports, directory: Path):
    directory.mkdir(parents=True, exist_ok=True)
    for rep in reports:
        for i, w in enumerate(rep.witnesses):
            for key, value in w.items():
                if isinstance(value, dict) and "probs" in value:
                    (directory / f"{rep.name}_{i:03d}_{key}.json").write_text(ser.dumps(value))


def _render_reports(reports, cfg, out):
    if cfg.format == "table":
        rows = [("suite", "trials  violations  worst_margin")]
        rows += [(r.name, f"{r.trials:6d}  {r.violations:10d}  {r.worst_margin:.3e}") for r in reports]
        out.write(_table(rows))
        for r in reports:
            if r.details:
                out.write(_table([(f"{r.name}.{k}", str(v)) for k, v in r.details.items() if k != "candidates"]))
    else:
        total = sum(r.violations for r in reports)
        out.write(ser.dumps({"violations": total, "reports": [r.to_dict() for r in reports]}))


def cmd_verify(args, cfg, out):
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    channel = column_swap_kernel() if args.demo_broken_kernel else build_channel(args.chain)
    reports = run_suite(
        args.suite, channel, k_max=args.kmax, n_max=args.nmax, pairs=args.pairs, samples=args.samples,
        cutoff=cfg.cutoff, seed=cfg.seed, eps_cmp=cfg.eps_cmp, tail_eps=cfg.tail_eps,
    )
    _render_reports(reports, cfg, out)
    if args.witness_dir:
        _write_witnesses(reports, args.witness_dir)
    return 0 if all(r.passed for r in reports) else EXIT_VIOLATIONS


def cmd_scan(args, cfg, out):
    if args.target == "conjecture":
        report = scan_broadcast_conjecture(build_channel(args.chain), args.entropy, args.samples, cfg.cutoff, cfg.seed)
        if args.witness_dir:
            args.witness_dir.mkdir(parents=True, exist_ok=True)
            for i, c in enumerate(report.details["candidates"]):
                (args.witness_dir / f"candidate_{i:03d}.json").write_text(ser.dumps(c["rho"]))
    else:
        report = find_incomparable_pairs(_mode(args.mode), args.samples, cfg.cutoff, cfg.seed, cfg.eps_cmp, cfg.tail_eps)
        if args.witness_dir:
            _write_witnesses([report], args.witness_dir)
    _render_reports([report], cfg, out)
    return 0


COMMANDS = {
    "evolve": cmd_evolve,
    "compare": cmd_compare,
    "curve": cmd_curve,
    "kernel": cmd_kernel,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](args, cfg, out)
    except (UsageError, InvalidDistribution) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CutoffOverflow, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_KERNEL
    except TailTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TAIL
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED


if __name__ == "__main__":
    sys.exit(main())

"""JSON and CSV encodings for distributions, kernels, curves and reports."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .channels import ChannelKernel
from .fock import FockDistribution
from .majorization import ComparisonOutcome, PartialSumCurve


def dumps(obj) -> str:
    # repr-based float output is the shortest string that round-trips exactly
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def dist_to_dict(rho: FockDistribution) -> dict:
    return {"probs": rho.probs.tolist(), "tail_mass": rho.tail_mass}


def dist_from_dict(data) -> FockDistribution:
    if isinstance(data, list):
        return FockDistribution(data)
    return FockDistribution(data["probs"], data.get("tail_mass", 0.0))


def dist_to_csv(rho: FockDistribution) -> str:
    """One probability per row under a ``prob`` header; the tail goes in a trailing comment."""
    lines = ["prob"] + [repr(float(p)) for p in rho.probs] + [f"# tail_mass={rho.tail_mass!r}"]
    return "\n".join(lines) + "\n"


def dist_from_csv(text: str) -> FockDistribution:
    probs = []
    tail = 0.0
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            if key.strip() == "tail_mass":
                tail = float(value)
            continue
        if line == "prob":
            continue
        probs.append(float(line.split(",")[0]))
    return FockDistribution(probs, tail)


def load_distribution(path: str | Path) -> FockDistribution:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".csv":
        return dist_from_csv(text)
    return dist_from_dict(json.loads(text))


def kernel_to_dict(kernel: ChannelKernel) -> dict:
    return {
        "params": kernel.params,
        "matrix": kernel.matrix.tolist(),
        "column_tails": kernel.column_tails.tolist(),
    }


def kernel_from_dict(data) -> ChannelKernel:
    return ChannelKernel(np.array(data["matrix"], dtype=float), np.array(data["column_tails"], dtype=float), data.get("params", {}))


def kernel_to_csv(kernel: ChannelKernel) -> str:
    """Dense matrix, one output photon number per row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in kernel.matrix:
        writer.writerow([repr(float(x)) for x in row])
    return buf.getvalue()


def kernel_matrix_from_csv(text: str) -> np.ndarray:
    rows = [[float(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
    return np.array(rows)


def curve_to_csv(curve: PartialSumCurve) -> str:
    lines = ["index,cumulative"] + [f"{i},{float(v)!r}" for i, v in enumerate(curve.sums)]
    return "\n".join(lines) + "\n"


def curve_from_csv(text: str) -> np.ndarray:
    reader = csv.DictReader(io.StringIO(text))
    return np.array([float(row["cumulative"]) for row in reader])


def outcome_to_dict(outcome: ComparisonOutcome) -> dict:
    return outcome.to_dict()

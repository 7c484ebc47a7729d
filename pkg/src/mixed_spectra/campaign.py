"""Seeded random-graph campaigns over every check."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from . import graphfile
from .config import Tolerances
from .graph import MixedGraph, random_mixed_graph
from .report import EXPLORATORY
from .theorems import run_all


@dataclass(frozen=True)
class CampaignConfig:
    n_max: int = 8
    trials: int = 100
    seed: int = 0
    p_digon: float = 0.3
    p_arc: float = 0.3

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be positive")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")


def trial_graphs(cfg: CampaignConfig) -> list[MixedGraph]:
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.trials):
        n = rng.randint(1, cfg.n_max)
        out.append(random_mixed_graph(n, cfg.p_digon, cfg.p_arc, rng.getrandbits(63)))
    return out


def _run_one(args):
    X, tols = args
    return run_all(X, tols)


def run_campaign(
    cfg: CampaignConfig,
    tols: Tolerances | None = None,
    workers: int = 1,
    witness_dir: str | Path | None = None,
) -> dict:
    """Run every check on ``cfg.trials`` random graphs.

    The summary is a plain dict with deterministic key order, independent of
    ``workers``.
    """
    graphs = trial_graphs(cfg)
    jobs = [(X, tols) for X in graphs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_run_one(j) for j in jobs]

    checks: dict[str, dict] = {}
    failures = []
    for trial, (X, reports) in enumerate(zip(graphs, results)):
        for r in reports:
            entry = checks.setdefault(
                r.name,
                {"kind": r.kind, "pass": 0, "fail": 0, "inapplicable": 0, "min_slack": None},
            )
            if not r.applicable:
                entry["inapplicable"] += 1
                continue
            entry["pass" if r.holds else "fail"] += 1
            if r.slack is not None:
                cur = entry["min_slack"]
                entry["min_slack"] = r.slack if cur is None else min(cur, r.slack)
            if r.failed and r.kind != EXPLORATORY:
                failures.append({"trial": trial, "check": r.name, "graph": graphfile.emit(X)})

    if witness_dir is not None and failures:
        d = Path(witness_dir)
        d.mkdir(parents=True, exist_ok=True)
        for f in failures:
            (d / f"trial{f['trial']:05d}_{f['check']}.mg").write_text(f["graph"])

    for entry in checks.values():
        if entry["min_slack"] is not None:
            entry["min_slack"] = round(entry["min_slack"], 12)
    return {
        "config": asdict(cfg),
        "checks": {k: checks[k] for k in sorted(checks)},
        "failures": failures,
    }

"""Random-graph campaign over every check; prints the per-check table.

    python3 scripts/run_campaign.py --trials 1000 --n-max 10 --workers 4
"""

import argparse
import json
import time

from mixed_spectra.campaign import CampaignConfig, run_campaign
from mixed_spectra.config import Tolerances


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--witness-dir", default=None)
    ap.add_argument("--json", default=None, help="also dump the raw summary here")
    args = ap.parse_args()

    # sweep a few digon/arc mixes so arc-heavy and digon-heavy graphs both show up
    mixes = [(0.3, 0.3), (0.6, 0.1), (0.1, 0.6), (0.0, 0.5)]
    per_mix = args.trials // len(mixes)
    summaries = []
    start = time.perf_counter()
    for i, (pd, pa) in enumerate(mixes):
        cfg = CampaignConfig(n_max=args.n_max, trials=per_mix, seed=args.seed + i, p_digon=pd, p_arc=pa)
        summaries.append(run_campaign(cfg, Tolerances.from_env(), args.workers, args.witness_dir))
    elapsed = time.perf_counter() - start

    merged = {}
    for s in summaries:
        for name, e in s["checks"].items():
            m = merged.setdefault(name, {"kind": e["kind"], "pass": 0, "fail": 0, "inapplicable": 0, "min_slack": None})
            for key in ("pass", "fail", "inapplicable"):
                m[key] += e[key]
            if e["min_slack"] is not None:
                m["min_slack"] = e["min_slack"] if m["min_slack"] is None else min(m["min_slack"], e["min_slack"])

    print(f"{per_mix * len(mixes)} graphs, n <= {args.n_max}, {elapsed:.1f}s")
    print(f"{'check':<28} {'kind':<11} {'pass':>6} {'fail':>6} {'n/a':>6}  min slack")
    for name in sorted(merged):
        e = merged[name]
        slack = "" if e["min_slack"] is None else f"{e['min_slack']:.3e}"
        print(f"{name:<28} {e['kind']:<11} {e['pass']:>6} {e['fail']:>6} {e['inapplicable']:>6}  {slack}")
    failures = sum(len(s["failures"]) for s in summaries)
    print(f"identity/bound failures: {failures}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"mixes": mixes, "summaries": summaries}, fh, indent=2)


if __name__ == "__main__":
    main()

"""Survey of the Cassels-type bound on nonsingular Q.

The displayed inequality fails on small examples (K3 among them), so this
script measures how often and by how much, split by digon/arc content.
Also tallies the edge-count bounds on arc-only graphs, which the gated
check does not assert.
"""

import argparse
import random
from collections import Counter

from mixed_spectra import graphfile
from mixed_spectra.graph import random_mixed_graph
from mixed_spectra.theorems import GraphContext, check_cassels_bound, check_edge_count_bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--show", type=int, default=5, help="print this many worst violators")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    worst = []
    arc_only = Counter()
    for _ in range(args.trials):
        n = rng.randint(2, args.n_max)
        pd = rng.choice((0.0, 0.2, 0.5))
        X = random_mixed_graph(n, pd, rng.uniform(0.1, 0.7 - pd) if pd < 0.7 else 0.0, rng.getrandbits(63))
        ctx = GraphContext(X)
        r = check_cassels_bound(X, ctx=ctx)
        if r.applicable:
            group = "arcs only" if X.l == 0 else ("digons only" if X.k == 0 else "mixed")
            tally[group, r.holds] += 1
            if not r.holds:
                worst.append((r.slack, graphfile.emit(X)))
        if X.l == 0 and X.m:
            e = check_edge_count_bounds(X, ctx=ctx)
            arc_only[e.holds] += 1

    print("cassels bound, applicable graphs")
    for group in ("digons only", "mixed", "arcs only"):
        ok, bad = tally[group, True], tally[group, False]
        total = ok + bad
        if total:
            print(f"  {group:<12} holds {ok:>5}  fails {bad:>5}  ({100 * bad / total:.1f}% fail)")
    worst.sort()
    for slack, text in worst[: args.show]:
        print(f"\nslack {slack:.4f}\n{text}", end="")
    print(f"\nedge-count bounds on arc-only graphs: holds {arc_only[True]}, fails {arc_only[False]}")


if __name__ == "__main__":
    main()

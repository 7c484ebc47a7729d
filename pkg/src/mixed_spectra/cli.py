"""Command line interface: ``mixed-spectra {spectrum,verify,linegraph,switch,batch}``.

Exit status: 0 all applicable checks hold, 1 a proven bound is violated,
2 an exact identity fails, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import graphfile
from .campaign import CampaignConfig, run_campaign
from .config import default_tolerances
from .linegraph import algebraic_line_graph
from .matrices import apply_switching, build_H_gamma, build_Q
from .report import BOUND, IDENTITY
from .spectra import char_poly_exact, eigenvalues, format_poly
from .theorems import exit_status, run_all

EXIT_OK, EXIT_BOUND, EXIT_IDENTITY, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    X = graphfile.load(args.path)
    tols = default_tolerances()
    M = build_Q(X) if args.matrix == "Q" else build_H_gamma(X)
    spectrum = eigenvalues(M, tolerances=tols)
    poly = char_poly_exact(M)
    det = (-1) ** X.n * poly.coeffs[0]
    trace = M.trace().a
    if args.json:
        out = {
            "matrix": args.matrix,
            "n": X.n,
            "eigenvalues": [round(v, 12) for v in spectrum.values],
            "trace": trace,
            "determinant": det,
        }
        if args.exact_charpoly:
            out["charpoly"] = list(reversed(poly.coeffs))
        _write(json.dumps(out, indent=2) + "\n", None)
        return EXIT_OK
    values = ", ".join(f"{v + 0.0:.6f}" for v in spectrum.values)
    print(f"{values}; det={det}")
    print(f"trace={trace}")
    if args.exact_charpoly:
        print(f"charpoly: {format_poly(poly.coeffs, 'λ')}")
        print("coefficients: " + " ".join(str(c) for c in reversed(poly.coeffs)))
    return EXIT_OK


def cmd_verify(args) -> int:
    X = graphfile.load(args.path)
    reports = run_all(X, default_tolerances())
    if args.json:
        payload = {"graph": graphfile.emit(X), "reports": [r.to_dict() for r in reports]}
        _write(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _write("".join(r.line() + "\n" for r in reports), args.out)
    return exit_status(reports)


def cmd_linegraph(args) -> int:
    X = graphfile.load(args.path)
    line = algebraic_line_graph(X)
    comments = ["algebraic line mixed graph; vertex i is edge i of the source"]
    comments += [f"{i}: {e}" for i, e in enumerate(X.edges())]
    _write(graphfile.emit(line, comments), args.emit_file)
    return EXIT_OK


def parse_gauge(text: str, n: int) -> list[int]:
    powers: dict[int, int] = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        try:
            v, p = (int(x) for x in item.split(":"))
        except ValueError as exc:
            raise InputError(f"bad gauge item {item!r}; expected vertex:power") from exc
        if p not in (0, 1, 2):
            raise InputError(f"gauge power {p} for vertex {v} is not in {{0,1,2}}")
        if not 0 <= v < n:
            raise InputError(f"gauge vertex {v} out of range")
        powers[v] = p
    missing = [v for v in range(n) if v not in powers]
    if missing:
        raise InputError(f"gauge is missing vertices {missing}")
    return [powers[v] for v in range(n)]


def cmd_switch(args) -> int:
    X = graphfile.load(args.path)
    g = parse_gauge(args.gauge, X.n)
    Y = apply_switching(X, g)
    tols = default_tolerances()
    a = eigenvalues(build_Q(X), tolerances=tols).as_array()
    b = eigenvalues(build_Q(Y), tolerances=tols).as_array()
    err = float(np.max(np.abs(a - b), initial=0.0))
    same = err <= 1e-9
    note = f"Q-spectra match to 1e-9: {'yes' if same else 'NO'} (max difference {err:.1e})"
    _write(graphfile.emit(Y, [f"switched by gauge {args.gauge}", note]), args.emit_file)
    if args.emit_file:
        print(note)
    return EXIT_OK if same else EXIT_IDENTITY


def cmd_batch(args) -> int:
    cfg = CampaignConfig(
        n_max=args.n_max, trials=args.trials, seed=args.seed, p_digon=args.p_digon, p_arc=args.p_arc
    )
    summary = run_campaign(cfg, default_tolerances(), workers=args.workers, witness_dir=args.witness_dir)
    if args.json:
        _write(json.dumps(summary, indent=2) + "\n", args.out)
    else:
        lines = [f"trials={cfg.trials} seed={cfg.seed} n_max={cfg.n_max} p_digon={cfg.p_digon} p_arc={cfg.p_arc}"]
        for name, e in summary["checks"].items():
            slack = "" if e["min_slack"] is None else f" min_slack={e['min_slack']:.3e}"
            lines.append(
                f"{name:<28} {e['kind']:<11} pass={e['pass']} fail={e['fail']} "
                f"inapplicable={e['inapplicable']}{slack}"
            )
        lines.append(f"failures={len(summary['failures'])}")
        _write("\n".join(lines) + "\n", args.out)
    kinds = {e["kind"] for e in summary["checks"].values() if e["fail"]}
    if IDENTITY in kinds:
        return EXIT_IDENTITY
    if BOUND in kinds:
        return EXIT_BOUND
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixed-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues, trace, determinant of H or Q")
    p.add_argument("path")
    p.add_argument("--matrix", choices=("H", "Q"), default="Q")
    p.add_argument("--exact-charpoly", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run every identity and bound check")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("linegraph", help="emit the algebraic line mixed graph")
    p.add_argument("path")
    p.add_argument("--emit-file", help="output path (default stdout)")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("switch", help="apply a diagonal switching gauge")
    p.add_argument("path")
    p.add_argument("--gauge", required=True, help="comma separated vertex:power, power in {0,1,2}")
    p.add_argument("--emit-file", help="output path (default stdout)")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("batch", help="random-graph campaign over every check")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-digon", type=float, default=0.3)
    p.add_argument("--p-arc", type=float, default=0.3)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--witness-dir", help="directory for failing graphs")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write the summary here instead of stdout")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

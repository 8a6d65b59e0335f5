"""Command-line front end.

Commands: characteristic, locus, lemmas, verify-bound, analyze. Results are
written as CSV/JSON artifacts into the output directory; exit status is 0 iff
all verdicts in scope are true. Output is deterministic for a fixed config and
seed, apart from the 'generated_at' timestamp field.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

import numpy as np

from .characteristic import build_table
from .errors import QuadratureBudgetError, SpecFileError
from .lemmas import harness_report
from .locus import branch_asymptotics, regularity_radius, trace_branches
from .pipeline import verify_theorem
from .specfile import load_curve

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


def _write_json(path: Path, payload: dict):
    payload = dict(payload)
    payload["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _radii(args):
    if args.grid < 8:
        raise SpecFileError("grid size must be >= 8")
    if not (0 < args.rmin < args.rmax):
        raise SpecFileError("need 0 < rmin < rmax")
    return list(np.geomspace(args.rmin, args.rmax, args.grid))


def _cmd_characteristic(args, out: Path):
    curve = load_curve(args.input)
    table = build_table(curve, _radii(args), tol=args.tol)
    (out / "characteristic.csv").write_text(table.to_csv())
    _write_json(out / "characteristic.json", json.loads(table.to_json()))
    print(table.to_csv(), end="")
    return EXIT_OK


def _cmd_locus(args, out: Path):
    curve = load_curve(args.input)
    polys = curve.reduced_polys()
    r0 = regularity_radius(polys)
    summary = trace_branches(polys, r0, max(args.rmax, 4 * r0))
    branch_info = []
    for idx, br in enumerate(summary.branches):
        rows = ["re,im,arclen,density"]
        arc = np.concatenate([[0.0], br.arclens])
        for p, a, d in zip(br.points, arc, br.densities):
            rows.append(f"{p.real!r},{p.imag!r},{a!r},{d!r}")
        (out / f"branch_{idx:03d}.csv").write_text("\n".join(rows) + "\n")
        b_k, c_k = branch_asymptotics(br)
        branch_info.append({
            "pair": list(br.pair), "b_k": b_k, "c_k": c_k, "active": br.active,
        })
    _write_json(out / "locus.json", {
        "r0": summary.r0, "b": summary.b, "c0": summary.c0,
        "branches": branch_info,
    })
    print(f"r0={summary.r0:.6g} branches={len(summary.branches)} "
          f"b={summary.b:.6g} c0={summary.c0:.6g}")
    return EXIT_OK


def _cmd_lemmas(args, out: Path):
    report = harness_report(args.seed, args.count)
    _write_json(out / "lemmas.json", report)
    print(f"harmonic min margin      {report['harmonic_min_margin']:.3e}")
    print(f"superharmonic min margin {report['superharmonic_min_margin']:.3e}")
    print(f"green kernel minimum     {report['green_kernel_min']:.12f}")
    print(f"failures                 {len(report['failures'])}")
    return EXIT_OK if not report["failures"] else EXIT_VERDICT_FALSE


def _cmd_verify_bound(args, out: Path):
    curve = load_curve(args.input)
    report = verify_theorem(curve, _radii(args), epsilon=args.epsilon, tol=args.tol)
    _write_json(out / "bound_report.json", json.loads(report.to_json()))
    print(f"sigma={report.sigma} K={report.K:.6g} "
          f"C(n,sigma)={report.theorem_constant:.6g}")
    for name, verdict in report.verdicts.items():
        print(f"  {name:8s} {'PASS' if verdict else 'FAIL'}")
    return EXIT_OK if report.all_true else EXIT_VERDICT_FALSE


def _cmd_analyze(args, out: Path):
    status = _cmd_characteristic(args, out)
    status = max(status, _cmd_locus(args, out))
    status = max(status, _cmd_verify_bound(args, out))
    return status


_COMMANDS = {
    "characteristic": (_cmd_characteristic, True),
    "locus": (_cmd_locus, True),
    "lemmas": (_cmd_lemmas, False),
    "verify-bound": (_cmd_verify_bound, True),
    "analyze": (_cmd_analyze, True),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvelab",
        description="Growth analysis of holomorphic curves omitting coordinate hyperplanes")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, needs_input) in _COMMANDS.items():
        p = sub.add_parser(name)
        if needs_input:
            p.add_argument("--input", required=True, help="curve spec JSON file")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--rmin", type=float, default=1.0)
        p.add_argument("--rmax", type=float, default=20.0)
        p.add_argument("--grid", type=int, default=16)
        p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--epsilon", type=float, default=0.01,
                       help="slack in the distance constant (2+epsilon)^{sigma+1}")
        p.add_argument("--seed", type=int, default=0)
        if name == "lemmas":
            p.add_argument("--count", type=int, default=1000)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    handler, _ = _COMMANDS[args.command]
    try:
        return handler(args, out)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QuadratureBudgetError as exc:
        print(f"numerical budget error in {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Sweep the full claim registry over a modulus range and write the report.

Usage:
    python3 scripts/run_audit.py [--lo 2] [--hi 100] [--theorems id,id,...]
                                 [--out audit_report.json]

Prints a one-line status per registry entry and a summary of all
counterexample witnesses, then writes the JSON report.
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from idemod.audit import run_audit


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=100)
    ap.add_argument("--theorems", default=None,
                    help="comma-separated registry ids (default: all)")
    ap.add_argument("--out", default="audit_report.json")
    args = ap.parse_args()

    ids = args.theorems.split(",") if args.theorems else None
    t0 = time.monotonic()
    report = run_audit(args.lo, args.hi, ids)
    dt = time.monotonic() - t0

    n_bad = 0
    for res in report.results:
        line = f"{res.theorem_id:14s} {res.status}"
        if res.findings:
            line += f"  ({len(res.findings)} findings)"
            n_bad += 1
        print(line)
    print(f"\n{len(report.results)} claims audited on [{args.lo},{args.hi}] "
          f"in {dt:.1f}s; {n_bad} with counterexamples")

    for res in report.results:
        for f in res.findings[:3]:
            print(f"  {f.theorem_id}: m={f.modulus} witness={f.witness} "
                  f"expected={f.expected} actual={f.actual}")
        if len(res.findings) > 3:
            print(f"  {res.theorem_id}: ... {len(res.findings) - 3} more")

    Path(args.out).write_text(report.dumps() + "\n")
    print(f"report written to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

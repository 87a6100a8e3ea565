#!/usr/bin/env python3
"""Run the bundled sensitivity suite and print the comparison table."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import namecluster as nc


def main():
    onom = nc.load_onomasticon()
    _, descriptors, observed_fields = nc.load_hypothesis_config()
    observed = nc.TombConfiguration(**observed_fields)
    reports = nc.run_suite(onom, descriptors, nc.RuleLedger(), observed,
                           nc.load_suite())
    width = max(len(r.name) for r in reports)
    matches = 0
    for r in reports:
        if r.error:
            print(f"{r.name.ljust(width)}  error: {r.error}")
            continue
        flag = "ok" if r.matches_reference else "DIVERGES"
        matches += bool(r.matches_reference)
        print(f"{r.name.ljust(width)}  {float(r.adjusted_area):10.4g}"
              f"  ref {r.reference:>9s}  {flag}")
    print(f"\n{matches}/{len(reports)} scenarios at printed reference precision")


if __name__ == "__main__":
    main()

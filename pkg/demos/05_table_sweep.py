"""Recompute the invariant table for graphs on at most five vertices.

Rows are compared with the published reference values; any difference is
listed under the table. Each row runs in a worker with a time budget.
"""
import argparse

from cutalg.classify import format_table1, table1, theorem_sweep

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--timeout", type=float, default=300.0)
    args = ap.parse_args()

    rows = table1(max_n=args.max_n, timeout=args.timeout)
    print(format_table1(rows))
    print()
    reports = theorem_sweep(max_n=min(args.max_n, 5))
    bad = [r for r in reports if not r.agree]
    print(f"{len(reports)} structural checks, {len(bad)} disagreements")
    for r in bad:
        print(" ", r.line())

"""Integrality vs ``F(n) | m`` on parameter pairs with gcd(m, r) > 1.

These points fall outside the coprime setting, so disagreements here are
observations, not failures. Prints a summary and every disagreeing point.
"""

import argparse

from apsum.integrality import verify_theorem2_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=12)
    ap.add_argument("--max-r", type=int, default=12)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    reports = verify_theorem2_grid(args.max_m, args.max_r, args.max_n, coprime_only=False, workers=args.workers)
    others = [rep for rep in reports if not rep.coprime]
    bad = [rep for rep in others if not rep.agrees]
    print(f"non-coprime points: {len(others)}, disagreements: {len(bad)}")
    for rep in bad:
        p = rep.params
        print(f"  m={p.m} r={p.r} n={p.n} integral={rep.is_integral} F(n)={rep.F_of_n}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Show the decoding transition steepening with blocklength.

For repetition codes over F_2 and F_3, print the noise interval over
which g(p) falls from 0.9 to 0.1, together with the envelope decay rate
sqrt(d_min)/q^(3/2) that governs it: the interval shrinks like the
inverse of that rate.
"""

import sys

from qthreshold import repetition_code, success_exact


def transition_window(code, lo=0.1, hi=0.9):
    grid = [j / 2000 for j in range(2001)]
    rows = success_exact(code, grid).rows
    p_hi = next((r.p for r in rows if r.g <= hi), None)
    p_lo = next((r.p for r in rows if r.g <= lo), None)
    return p_hi, p_lo


def main() -> int:
    print(f"{'code':>12} {'rate decay':>11} {'g=0.9 at':>9} {'g=0.1 at':>9} {'window':>8}")
    # blocklengths chosen to keep q^n inside the enumeration cap
    for q, lengths in ((2, (8, 16, 20)), (3, (6, 9, 12))):
        for n in lengths:
            code = repetition_code(q, n)
            rate = code.d_min ** 0.5 / q ** 1.5
            p_hi, p_lo = transition_window(code)
            print(f"{code.describe():>12} {rate:11.3f} {p_hi:9.4f} "
                  f"{p_lo:9.4f} {p_lo - p_hi:8.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

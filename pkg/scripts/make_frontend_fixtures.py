#!/usr/bin/env python3
"""Regenerate the CSV fixtures consumed by the plotting frontend's tests.

The frontend reads only the public curve CSV schema, so these files are
its sole contact point with this package.
"""

import pathlib
import sys

from qthreshold import repetition_code, success_exact
from qthreshold.cli import parse_grid
from qthreshold.emit import curve_to_csv, write_text
from qthreshold.threshold import curve_mc


def main() -> int:
    root = pathlib.Path(__file__).resolve().parent.parent
    fixtures = root / "frontend" / "tests" / "fixtures"
    fixtures.mkdir(parents=True, exist_ok=True)
    rep8 = repetition_code(2, 8)
    exact = success_exact(rep8, parse_grid(None, 2))
    write_text(str(fixtures / "rep-2-8.exact.csv"), curve_to_csv(exact))
    mc = curve_mc(rep8, [j / 20 for j in range(11)], samples=100_000, seed=14,
                  parallelism=4)
    write_text(str(fixtures / "rep-2-8.mc.csv"), curve_to_csv(mc))
    print(f"fixtures written under {fixtures}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

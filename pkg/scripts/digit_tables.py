#!/usr/bin/env python3
"""Print hand-calculation style digit tables for base-p carrying arithmetic.

Shows the classic identities ...444444 + 1 = 0 and ...313132 * 3 = 1 (for
p = 5) and a few extra rows for whatever prime is requested.

    python scripts/digit_tables.py -p 5 -N 8
"""

import argparse
from fractions import Fraction

from padic import Form, PadicNumber


def row(label: str, x: PadicNumber) -> str:
    return f"  {label:>12}  {str(x):>20}"


def table(title: str, entries: list[tuple[str, PadicNumber]]):
    print(title)
    for label, x in entries:
        print(row(label, x))
    print()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-p", type=int, default=5, help="prime base")
    parser.add_argument("-N", type=int, default=8, help="digits to display")
    args = parser.parse_args()
    p, n = args.p, args.N

    minus_one = PadicNumber.from_rational(p, -1, n)
    one = PadicNumber.from_rational(p, 1, n)
    table(
        f"(-1) + 1 = 0 in Z_{p} (all carries propagate off to the left):",
        [("-1", minus_one), ("+ 1", one), ("=", minus_one + one)],
    )

    if p != 3:
        third = PadicNumber.from_rational(p, Fraction(1, 3), n)
        table(
            f"(1/3) * 3 = 1 in Z_{p}:",
            [("1/3", third), ("* 3", PadicNumber.from_rational(p, 3, n)),
             ("=", third * 3)],
        )
        table(
            f"(1/3) + (-1) = -2/3 in Z_{p}:",
            [("1/3", third), ("+ -1", minus_one), ("=", third + minus_one)],
        )

    seven_halves = PadicNumber.from_rational(p, Fraction(7, 2) if p != 2 else 7, n)
    squared = seven_halves * seven_halves
    table(
        "a value and its square:",
        [("x", seven_halves), ("x^2", squared)],
    )

    cancel = seven_halves - seven_halves
    print("full cancellation x - x leaves an inexact zero:")
    print(row("x - x", cancel))
    if cancel.form is Form.ZERO_AT_LEAST:
        print(f"  (only known to vanish modulo {p}^{cancel.v})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

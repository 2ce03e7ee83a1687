#!/usr/bin/env python3
"""Enumerate the even base-2 pseudoprimes below 10^7.

Every even pseudoprime is 2 mod 4, and the Jacobi condition kills the classes
6 and 10 mod 16, so candidates are just n = 2 or 14 (mod 16).  Skipping
multiples of 9 is a further sound shortcut (no pseudoprime is divisible by 9);
the demo runs the enumerator with and without it and with the gcd-2145 variant
to show they agree.
"""

import time

import pseudoprimes as pp

LIMIT = 10**7

for label, nine_filter in (("mod-9 exclusion", "mod9"),
                           ("gcd(n, 2145) = 1", "gcd2145"),
                           ("no extra filter", None)):
    start = time.perf_counter()
    values = pp.enumerate_even_psp(LIMIT, nine_filter)
    elapsed = time.perf_counter() - start
    print(f"{label:>17}: {len(values)} found in {elapsed:5.2f}s -> {values}")

values = pp.enumerate_even_psp(LIMIT)
print("\nclass shape of each (mod 16):", sorted({n % 16 for n in values}))
print("factorizations:")
for n in values:
    parts = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in pp.factor(n).factors)
    print(f"  {n} = {parts}")

"""Which n make -1 an eigenvalue of (LCM, GCD) on {1, ..., n}?

-1 is an eigenvalue exactly when det(L + G) = 0.  The scan tests that
determinant modulo primes just above 2**60; with --certify it uses enough
primes to exceed the Hadamard bound, which turns every zero verdict into a
proof.  The result is compared with the rule "n written in binary starts
with 10".

    python demos/04_minus_one_scan.py [N]
"""

import sys
import time

from gpencil import binary_begins_10, members, scan_minus_one

N = int(sys.argv[1]) if len(sys.argv) > 1 else 128

start = time.perf_counter()
records = scan_minus_one(N, certify=True)
elapsed = time.perf_counter() - start

found = members(records)
print(f"certified scan n <= {N} in {elapsed:.1f}s")
print("members:", found)

rule = [n for n in range(4, N + 1) if binary_begins_10(n)]
print("n >= 4 agree with the binary rule:", [n for n in found if n >= 4] == rule)
print("below 4:", [n for n in found if n < 4], "(3 has the factor x + 1 but 3 = 0b11)")

worst = max(records, key=lambda r: r.exact_verdict.primes_used)
print(f"most primes needed: {worst.exact_verdict.primes_used} at n={worst.n}")

"""Interlacing between the spectra of consecutive leading sections.

Dropping the last element of T removes the last row and column of both L and
G.  The eigenvalues of the smaller pencil separate those of the larger one,
so the number of positive eigenvalues can only grow with n.

    python demos/03_interlacing.py
"""

from gpencil import check_interlacing, consecutive_lcm_gcd_spectra, positive_count_monotone

spectra = consecutive_lcm_gcd_spectra(8)
for n in range(2, 9):
    parent, child = spectra[n - 1], spectra[n - 2]
    rep = check_interlacing(parent, child, slack=1e-6)
    print(f"n={n}: {'holds' if rep.holds else rep.violations}")
    print("   ", ", ".join(f"{v:8.4f}" for v in parent))

counts = positive_count_monotone(64)
print("\npositive eigenvalues by n:")
print("  ", " ".join(str(c) for _, c in counts))

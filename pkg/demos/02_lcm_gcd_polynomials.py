"""Exact characteristic polynomials of (LCM, GCD) on {1, ..., n}.

det(L - xG) is computed from integer determinants only, so the
coefficients, the multiplicity of the root -1 and surd evaluations are exact.

    python demos/02_lcm_gcd_polynomials.py
"""

from gpencil import (
    SetSpec,
    build_gcd_matrix,
    build_lcm_matrix,
    pencil_charpoly,
    poly_eval_surd,
    root_multiplicity,
)

for n in range(1, 9):
    T = SetSpec.range(1, n)
    p = pencil_charpoly(build_lcm_matrix(T), build_gcd_matrix(T))
    print(f"n={n}: {p}")
    print(f"      multiplicity of -1: {root_multiplicity(p, -1)}")

T = SetSpec.range(1, 5)
p5 = pencil_charpoly(build_lcm_matrix(T), build_gcd_matrix(T))
v = poly_eval_surd(p5, 42)
print(f"\np5(sqrt 42) = {v}   (zero: {v.is_zero()})")

# dividing out the root -1 leaves the quartic factor
print("p5 / (x + 1) =", p5.exact_divide_linear(-1))

# two coprime numbers and the triple {1, u, v}
for elems in ([3, 4], [1, 3, 4], [2, 3, 5]):
    T = SetSpec.integers(elems)
    print(f"T = {elems}: {pencil_charpoly(build_lcm_matrix(T), build_gcd_matrix(T))}")

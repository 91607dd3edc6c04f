"""MAX/MIN pencils: the solver against the closed form.

For any set of positive reals, the pencil (MAX, MIN) has eigenvalue -1 with
multiplicity n - 2 and two extremes +-sqrt(max/min).  This script builds the
matrices for a few sets, solves numerically and prints both.

    python demos/01_maxmin_spectrum.py
"""

import random

from gpencil import (
    SetSpec,
    build_max_matrix,
    build_min_matrix,
    cluster_count,
    generalized_eigenvalues,
    maxmin_closed_form,
)


def show(S):
    spec = generalized_eigenvalues(build_max_matrix(S), build_min_matrix(S))
    closed = maxmin_closed_form(S)
    print(f"S = {list(S.elements)}")
    print("  solver     :", ", ".join(f"{v:.6f}" for v in spec))
    print("  closed form:", ", ".join(f"{v:.6f}" for v in closed))
    print(f"  values at -1: {cluster_count(spec, -1.0, 1e-8).count}")


show(SetSpec.range(1, 4))
show(SetSpec.integers([1, 3, 9, 27]))
show(SetSpec.reals([0.5, 2.25, 7.0, 11.5, 40.0]))

# MAX on S against MIN on S shifted by c: the -1 block survives, the extremes move
S = SetSpec.range(1, 4)
for c in (1, 5):
    shifted = SetSpec.integers([s + c for s in S.elements])
    spec = generalized_eigenvalues(build_max_matrix(S), build_min_matrix(shifted))
    print(f"MAX on {list(S.elements)}, MIN on {list(shifted.elements)}")
    print("  solver     :", ", ".join(f"{v:.6f}" for v in spec))
    print(f"  values at -1: {cluster_count(spec, -1.0, 1e-6).count}")

rng = random.Random(0)
show(SetSpec.reals(rng.sample(range(1, 1000), 12)))

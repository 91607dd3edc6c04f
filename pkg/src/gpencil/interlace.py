"""Interlacing of generalized spectra under deletion of the last index."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidParameter, VerificationFailure
from .pencilsolve import Spectrum, generalized_eigenvalues
from .setmatrix import BigIntMatrix, SetSpec, build_gcd_matrix, build_lcm_matrix

SYNTHETIC_SLACK = 1e-8
SOLVER_SLACK = 1e-6


@dataclass(frozen=True)
class InterlaceReport:
    """Result of checking parent[0] >= child[0] >= parent[1] >= ... >= parent[-1].

    ``violations`` holds (link, gap) pairs.  Links are numbered 1..2(n-1)
    along that chain: link 2k-1 compares parent[k] with child[k], link 2k
    compares child[k] with parent[k+1] (1-based).  ``gap`` is how far the
    right-hand side exceeds the left-hand side.
    """

    order: int
    parent_spectrum: Spectrum
    child_spectrum: Spectrum
    slack: float
    violations: tuple
    holds: bool


def leading_principal_submatrix(X, k: int):
    """Top-left k x k block of X, of the same kind as X."""
    if isinstance(X, BigIntMatrix):
        n = X.order
    else:
        X = np.asarray(X)
        n = X.shape[0]
    if not 1 <= k <= n:
        raise InvalidParameter(f"k = {k} outside 1..{n}")
    if isinstance(X, BigIntMatrix):
        return X.leading(k)
    return X[:k, :k].copy()


def _as_spectrum(s) -> Spectrum:
    return s if isinstance(s, Spectrum) else Spectrum.from_unsorted(s)


def check_interlacing(parent, child, slack: float = SYNTHETIC_SLACK) -> InterlaceReport:
    parent = _as_spectrum(parent)
    child = _as_spectrum(child)
    if len(child) != len(parent) - 1:
        raise DimensionMismatch(f"child spectrum has {len(child)} values, parent has {len(parent)}")
    if slack < 0:
        raise InvalidParameter(f"slack must be non-negative, got {slack}")
    violations = []
    for k in range(len(child)):
        upper = child[k] - parent[k]
        if upper > slack:
            violations.append((2 * k + 1, upper))
        lower = parent[k + 1] - child[k]
        if lower > slack:
            violations.append((2 * k + 2, lower))
    return InterlaceReport(len(parent), parent, child, slack, tuple(violations), not violations)


def pencil_interlacing(A, B, slack: float = SYNTHETIC_SLACK) -> InterlaceReport:
    """Compare the spectrum of (A, B) with that of its order n-1 leading sections."""
    n = A.order if isinstance(A, BigIntMatrix) else np.asarray(A).shape[0]
    parent = generalized_eigenvalues(A, B)
    child = generalized_eigenvalues(leading_principal_submatrix(A, n - 1),
                                    leading_principal_submatrix(B, n - 1))
    return check_interlacing(parent, child, slack)


def consecutive_lcm_gcd_spectra(n_max: int) -> list[Spectrum]:
    """Spectra of (L, G) on {1..n} for n = 1..n_max."""
    T = SetSpec.range(1, n_max)
    L = build_lcm_matrix(T)
    G = build_gcd_matrix(T)
    return [generalized_eigenvalues(L.leading(n), G.leading(n)) for n in range(1, n_max + 1)]


def positive_count_monotone(T_max: int, slack: float = SOLVER_SLACK) -> list[tuple[int, int]]:
    """Number of positive g-eigenvalues of (L, G) on {1..n} for n = 1..T_max.

    Interlacing forces this count to be non-decreasing in n; a decrease raises
    VerificationFailure.
    """
    if T_max < 2:
        raise InvalidParameter(f"T_max must be at least 2, got {T_max}")
    counts = []
    for n, spec in enumerate(consecutive_lcm_gcd_spectra(T_max), start=1):
        counts.append((n, sum(1 for v in spec if v > slack)))
    for (n0, c0), (n1, c1) in zip(counts, counts[1:]):
        if c1 < c0:
            raise VerificationFailure(f"positive count drops from {c0} at n={n0} to {c1} at n={n1}")
    return counts

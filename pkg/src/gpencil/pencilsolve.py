"""Generalized eigenvalues of symmetric-definite pencils, and closed forms.

The numeric path factors B = F F^T, forms C = F^-1 A F^-T with triangular
solves and diagonalizes C with cyclic Jacobi rotations.  The closed forms are
kept separate so they can serve as independent checks on the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import solve_triangular

from .errors import (
    DimensionMismatch,
    InvalidParameter,
    InvalidSet,
    NoConvergence,
    NotPositiveDefinite,
    UnsupportedSet,
)
from .setmatrix import SetSpec, as_array

DEFAULT_PD_TOLERANCE = 1e-12
JACOBI_TOLERANCE = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Real generalized eigenvalues in non-increasing order."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise InvalidParameter("spectrum values must be non-increasing")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_unsorted(cls, values) -> "Spectrum":
        # stable: equal values keep their input order
        return cls(tuple(sorted((float(v) for v in values), key=lambda v: -v)))

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


@dataclass(frozen=True)
class ClusterReport:
    target: float
    tolerance: float
    count: int
    members: tuple


def _symmetric_array(X, name: str, tol: float) -> np.ndarray:
    a = as_array(X)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if a.size and np.max(np.abs(a - a.T)) > tol * scale:
        raise InvalidParameter(f"{name} is not symmetric")
    return a


def cholesky_factor(B, pd_tolerance: float = DEFAULT_PD_TOLERANCE) -> np.ndarray:
    """Lower-triangular F with F F^T = B.

    Raises NotPositiveDefinite when a pivot falls to pd_tolerance times the
    largest diagonal entry of B or below.
    """
    b = _symmetric_array(B, "B", max(pd_tolerance, 1e-12))
    n = b.shape[0]
    F = np.zeros_like(b)
    if n == 0:
        return F
    threshold = pd_tolerance * float(np.max(np.diag(b)))
    for j in range(n):
        d = b[j, j] - F[j, :j] @ F[j, :j]
        if not d > threshold:
            raise NotPositiveDefinite(f"pivot {j + 1} is {d:.3e}, not above {threshold:.3e}")
        F[j, j] = math.sqrt(d)
        F[j + 1:, j] = (b[j + 1:, j] - F[j + 1:, :j] @ F[j, :j]) / F[j, j]
    return F


def reduce_to_standard(A, B, pd_tolerance: float = DEFAULT_PD_TOLERANCE) -> np.ndarray:
    """The symmetric matrix F^-1 A F^-T whose eigenvalues are those of (A, B)."""
    a = _symmetric_array(A, "A", 1e-12)
    b = as_array(B)
    if a.shape != b.shape:
        raise DimensionMismatch(f"pencil members have shapes {a.shape} and {b.shape}")
    F = cholesky_factor(b, pd_tolerance)
    if a.shape[0] == 0:
        return a
    X = solve_triangular(F, a, lower=True)
    C = solve_triangular(F, X.T, lower=True)
    return 0.5 * (C + C.T)


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair exactly once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(C: np.ndarray) -> float:
    off = C - np.diag(np.diag(C))
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(C, tol: float = JACOBI_TOLERANCE, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every off-diagonal pair once, in rounds of disjoint
    pairs so a whole round is applied with array operations.  Iteration stops
    when the off-diagonal Frobenius norm is at most tol * ||C||_F.
    """
    C = np.array(C, dtype=float, copy=True)
    n = C.shape[0]
    if n <= 1:
        return np.diag(C).copy()
    limit = tol * float(np.linalg.norm(C))
    rounds = _round_robin(n)
    for _ in range(max_sweeps + 1):
        if _off_norm(C) <= limit:
            return np.diag(C).copy()
        if _ == max_sweeps:
            break
        for p, q in rounds:
            app, aqq, apq = C[p, p], C[q, q], C[p, q]
            active = apq != 0.0
            safe = np.where(active, apq, 1.0)
            theta = (aqq - app) / (2.0 * safe)
            sign = np.where(theta >= 0.0, 1.0, -1.0)
            t = sign / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = C[p, :].copy(), C[q, :].copy()
            C[p, :] = c[:, None] * rp - s[:, None] * rq
            C[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = C[:, p].copy(), C[:, q].copy()
            C[:, p] = cp * c - cq * s
            C[:, q] = cp * s + cq * c
            C[p, q] = 0.0
            C[q, p] = 0.0
    raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                        f"(off-diagonal norm {_off_norm(C):.3e}, limit {limit:.3e})")


def generalized_eigenvalues(A, B, pd_tolerance: float = DEFAULT_PD_TOLERANCE) -> Spectrum:
    """Solve A x = lambda B x for symmetric A and positive definite B."""
    C = reduce_to_standard(A, B, pd_tolerance)
    return Spectrum.from_unsorted(jacobi_eigenvalues(C))


def _extreme_ratio_root(S: SetSpec) -> float:
    hi, lo = max(S.elements), min(S.elements)
    return math.sqrt(hi / lo)


def maxmin_closed_form(S: SetSpec) -> Spectrum:
    """Spectrum of (MAX, MIN) on S: (r, -1, ..., -1, -r), r = sqrt(max S / min S)."""
    if not isinstance(S, SetSpec):
        raise InvalidSet(f"expected a SetSpec, got {type(S).__name__}")
    n = S.order
    if n == 1:
        return Spectrum((1.0,))
    r = _extreme_ratio_root(S)
    return Spectrum((r,) + (-1.0,) * (n - 2) + (-r,))


def lcmgcd_small_closed_form(T: SetSpec) -> Spectrum:
    """Spectrum of (LCM, GCD) for a pair {u, v} or a triple {1, u, v} with gcd(u, v) = 1.

    A pair with common divisor d is reduced to {u/d, v/d}; both matrices scale
    by d, which leaves the spectrum unchanged.
    """
    if not isinstance(T, SetSpec) or not all(isinstance(x, int) for x in T.elements):
        raise InvalidSet("LCM/GCD closed forms need a set of positive integers")
    elems = sorted(T.elements)
    if len(elems) == 2:
        u, v = elems
        d = math.gcd(u, v)
        r = math.sqrt((u // d) * (v // d))
        return Spectrum((r, -r))
    if len(elems) == 3 and elems[0] == 1 and math.gcd(elems[1], elems[2]) == 1:
        r = math.sqrt(elems[1] * elems[2])
        return Spectrum((r, -1.0, -r))
    raise UnsupportedSet(f"no closed form for {tuple(T.elements)}; only {{u, v}} and "
                         f"{{1, u, v}} with gcd(u, v) = 1 are covered")


def cluster_count(spec: Spectrum | Sequence[float], target: float, tolerance: float) -> ClusterReport:
    if not tolerance > 0:
        raise InvalidParameter(f"tolerance must be positive, got {tolerance}")
    members = tuple(i for i, v in enumerate(spec) if abs(v - target) <= tolerance)
    return ClusterReport(float(target), float(tolerance), len(members), members)

"""Exact scan for -1 in the spectrum of (LCM, GCD) on {1, ..., n}.

-1 is a generalized eigenvalue exactly when det(L + G) = 0, so the scan only
needs zero tests of integer determinants.  Every order n = 1..N is handled by
a single incremental elimination per prime (see ``LeadingRankTracker``); the
verdict for each n is the one ``modular_zero_test`` would give on L + G of
order n with the same primes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._modp import Field, LeadingRankTracker
from .errors import InvalidParameter
from .exactdet import (
    DEFAULT_NUM_PRIMES,
    Verdict,
    ZeroTestVerdict,
    modular_primes,
    primes_for_certificate,
)

CONJECTURE_MIN_N = 4
JOBS_ENV = "GPENCIL_JOBS"


@dataclass(frozen=True)
class ScanRecord:
    n: int
    exact_verdict: ZeroTestVerdict
    has_minus_one: bool
    predicted: bool
    agrees: bool
    in_conjecture_range: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "has_minus_one": self.has_minus_one,
            "predicted": self.predicted,
            "agrees": self.agrees,
            "in_conjecture_range": self.in_conjecture_range,
            **self.exact_verdict.to_dict(),
        }


@dataclass(frozen=True)
class SequenceWindow:
    start_index: int
    terms: tuple


def binary_begins_10(n: int) -> bool:
    """True when the two leading binary digits of n are 1, 0."""
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    if n < 2:
        return False
    return n >> (n.bit_length() - 2) == 0b10


def a004754_term(index: int) -> int:
    """Term `index` (1-based) of A004754: a(2^m + k) = 2^(m+1) + k."""
    if index < 1:
        raise InvalidParameter(f"index must be positive, got {index}")
    m = index.bit_length() - 1
    k = index - (1 << m)
    return (1 << (m + 1)) + k


def a004754_window(start_index: int, count: int) -> SequenceWindow:
    return SequenceWindow(start_index, tuple(a004754_term(i) for i in range(start_index, start_index + count)))


def predicate_formula_consistency(N: int) -> bool:
    """Does the binary-prefix predicate list the same n <= N as the term formula (first term dropped)?"""
    if N < 4:
        raise InvalidParameter(f"N must be at least 4, got {N}")
    by_predicate = {n for n in range(1, N + 1) if binary_begins_10(n)} - {2}
    by_formula = set()
    i = 2
    while (t := a004754_term(i)) <= N:
        by_formula.add(t)
        i += 1
    return by_predicate == by_formula


def lcm_plus_gcd(N: int) -> np.ndarray:
    """L + G on {1..N} as an object array of Python ints."""
    i = np.arange(1, N + 1, dtype=object)
    g = np.gcd.outer(np.arange(1, N + 1), np.arange(1, N + 1)).astype(object)
    return np.outer(i, i) // g + g


def _row_prefix_norms_bits(A: np.ndarray) -> list[int]:
    """Hadamard bit bound of every leading block of A."""
    N = A.shape[0]
    # cum[r, n-1] is the squared norm of row r cut to its first n entries
    cum = np.cumsum(A * A, axis=1)
    bits = []
    for n in range(1, N + 1):
        prod = 1
        col = cum[:n, n - 1]
        for v in col:
            prod *= int(v)
        bits.append(((prod - 1).bit_length() + 1) // 2)
    return bits


def _nonzero_flags(A: np.ndarray, p: int, upto: int) -> np.ndarray:
    """flags[n-1] is True when det of the leading n-block of A is nonzero mod p."""
    field = Field(p)
    tracker = LeadingRankTracker(field, field.reduce(A[:upto, :upto]))
    ranks = tracker.leading_ranks(upto)
    return np.array([r == n for n, r in enumerate(ranks, start=1)], dtype=bool)


def _flags_job(args):
    A, p, upto = args
    return _nonzero_flags(A, p, upto)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def scan_minus_one(N: int, num_primes: int = DEFAULT_NUM_PRIMES, certify: bool = False,
                   seed: int = 0, jobs: Optional[int] = None) -> list[ScanRecord]:
    """Zero-test det(L + G) on {1..n} for every n = 1..N.

    With `certify`, order n uses at least as many primes as its Hadamard
    bound requires, so every zero verdict is a proof.  Records are always in
    increasing n, and the result does not depend on `jobs`.
    """
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    if num_primes < 1:
        raise InvalidParameter(f"num_primes must be at least 1, got {num_primes}")
    jobs = default_jobs() if jobs is None else max(1, int(jobs))
    A = lcm_plus_gcd(N)

    bits = _row_prefix_norms_bits(A) if certify else [None] * N
    needed = [max(num_primes, primes_for_certificate(b, seed)) if certify else num_primes for b in bits]
    primes = modular_primes(max(needed), seed)

    witness_index: list[Optional[int]] = [None] * N
    i = 0
    while i < len(primes):
        # an order still needs prime i if no witness is known and its budget reaches i
        open_orders = [n for n in range(1, N + 1) if witness_index[n - 1] is None and needed[n - 1] > i]
        if not open_orders:
            break
        upto = max(open_orders)
        batch = list(range(i, min(i + jobs, len(primes))))
        if jobs > 1 and len(batch) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_flags_job, [(A, primes[j], upto) for j in batch]))
        else:
            results = [_nonzero_flags(A, primes[j], upto) for j in batch]
        for j, flags in zip(batch, results):
            for n in range(1, upto + 1):
                if witness_index[n - 1] is None and j < needed[n - 1] and flags[n - 1]:
                    witness_index[n - 1] = j
        i = batch[-1] + 1

    records = []
    for n in range(1, N + 1):
        w = witness_index[n - 1]
        if w is not None:
            verdict = ZeroTestVerdict(Verdict.CERTIFIED_NONZERO, primes[w], w + 1, bits[n - 1])
        else:
            kind = Verdict.CERTIFIED_ZERO if certify else Verdict.PROBABLY_ZERO
            verdict = ZeroTestVerdict(kind, None, needed[n - 1], bits[n - 1])
        has = verdict.is_zero
        in_range = n >= CONJECTURE_MIN_N
        predicted = in_range and binary_begins_10(n)
        records.append(ScanRecord(n, verdict, has, predicted, has == predicted, in_range))
    return records


def members(records: list[ScanRecord]) -> list[int]:
    return [r.n for r in records if r.has_minus_one]

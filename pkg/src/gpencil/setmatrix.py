"""Structured matrices on finite sets: MAX, MIN, LCM and GCD.

Sets are kept in the order they are given.  Spectra and determinants do not
depend on that order, so nothing here sorts.
"""

from __future__ import annotations

import enum
import math
import numbers
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidParameter, InvalidSet


class SetKind(enum.Enum):
    REAL = "real"
    INTEGER = "integer"


def _as_exact_real(x):
    if isinstance(x, bool):
        raise InvalidSet(f"boolean {x!r} is not a set element")
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, numbers.Real):
        x = float(x)
        if not math.isfinite(x):
            raise InvalidSet(f"element {x!r} is not finite")
        return x
    raise InvalidSet(f"element {x!r} is not a real number")


@dataclass(frozen=True)
class SetSpec:
    """An ordered finite set of distinct positive values.

    Use :meth:`integers` for LCM/GCD sets and :meth:`reals` for MAX/MIN sets.
    Integers and fractions are stored exactly; floats stay floats.
    """

    elements: tuple
    kind: SetKind

    def __post_init__(self):
        if len(self.elements) == 0:
            raise InvalidSet("set must have at least one element")
        if self.kind is SetKind.INTEGER:
            for x in self.elements:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise InvalidSet(f"integer set element {x!r} is not an integer")
        for x in self.elements:
            if not x > 0:
                raise InvalidSet(f"element {x!r} is not strictly positive")
        if len(set(self.elements)) != len(self.elements):
            dup = sorted({x for x in self.elements if self.elements.count(x) > 1})
            raise InvalidSet(f"duplicate elements {dup}")

    @classmethod
    def integers(cls, values: Iterable) -> "SetSpec":
        elems = []
        for v in values:
            if isinstance(v, bool) or not isinstance(v, numbers.Integral):
                if isinstance(v, Fraction) and v.denominator == 1:
                    v = v.numerator
                else:
                    raise InvalidSet(f"integer set element {v!r} is not an integer")
            elems.append(int(v))
        return cls(tuple(elems), SetKind.INTEGER)

    @classmethod
    def reals(cls, values: Iterable) -> "SetSpec":
        return cls(tuple(_as_exact_real(v) for v in values), SetKind.REAL)

    @classmethod
    def range(cls, first: int, last: int) -> "SetSpec":
        """The consecutive integers first, first+1, ..., last."""
        if last < first:
            raise InvalidSet(f"empty range {first}..{last}")
        return cls.integers(range(first, last + 1))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def shuffled(self, rng: random.Random) -> "SetSpec":
        elems = list(self.elements)
        rng.shuffle(elems)
        return SetSpec(tuple(elems), self.kind)

    def prefix(self, k: int) -> "SetSpec":
        return SetSpec(self.elements[:k], self.kind)


@dataclass(frozen=True)
class BigIntMatrix:
    """Immutable dense square matrix of exact entries.

    Entries are Python ints for LCM/GCD constructions.  MAX/MIN matrices over
    real sets carry whatever exact type the set holds (int, Fraction, float).
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch(f"matrix is not square: {n} rows, row of length {len(r)}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_function(cls, n: int, entry: Callable[[int, int], object]) -> "BigIntMatrix":
        return cls(tuple(tuple(entry(i, j) for j in range(n)) for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def to_array(self, dtype=float) -> np.ndarray:
        if self.order == 0:
            return np.zeros((0, 0), dtype=dtype)
        return np.array([[float(x) for x in r] for r in self.rows], dtype=dtype)

    def is_symmetric(self) -> bool:
        n = self.order
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for r in self.rows for x in r)

    def _check_same_order(self, other: "BigIntMatrix"):
        if self.order != other.order:
            raise DimensionMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "BigIntMatrix") -> "BigIntMatrix":
        self._check_same_order(other)
        return BigIntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "BigIntMatrix") -> "BigIntMatrix":
        self._check_same_order(other)
        return BigIntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scaled(self, c) -> "BigIntMatrix":
        return BigIntMatrix(tuple(tuple(c * a for a in r) for r in self.rows))

    def pencil_at(self, other: "BigIntMatrix", k) -> "BigIntMatrix":
        """The matrix self - k*other."""
        self._check_same_order(other)
        return BigIntMatrix(tuple(tuple(a - k * b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def leading(self, k: int) -> "BigIntMatrix":
        return BigIntMatrix(tuple(r[:k] for r in self.rows[:k]))

    def __repr__(self) -> str:
        return f"BigIntMatrix({self.tolist()!r})"


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1, ..., n}, stored as its 1-based image array."""

    image: tuple

    def __post_init__(self):
        image = tuple(self.image)
        n = len(image)
        if any(isinstance(v, bool) or not isinstance(v, numbers.Integral) for v in image):
            raise InvalidParameter(f"permutation image {image} must contain integers")
        if sorted(image) != list(range(1, n + 1)):
            raise InvalidParameter(f"{image} is not a rearrangement of 1..{n}")
        object.__setattr__(self, "image", tuple(int(v) for v in image))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Permutation":
        image = list(range(1, n + 1))
        rng.shuffle(image)
        return cls(tuple(image))

    @property
    def order(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]


def _require_nonempty(S: SetSpec):
    if not isinstance(S, SetSpec):
        raise InvalidSet(f"expected a SetSpec, got {type(S).__name__}")


def _require_integer_set(T: SetSpec):
    _require_nonempty(T)
    if T.kind is not SetKind.INTEGER:
        # a RealSet whose elements happen to be integers is still acceptable
        if not all(isinstance(x, int) for x in T.elements):
            raise InvalidSet("LCM/GCD matrices need a set of positive integers")


def build_max_matrix(S: SetSpec) -> BigIntMatrix:
    _require_nonempty(S)
    s = S.elements
    return BigIntMatrix.from_function(len(s), lambda i, j: max(s[i], s[j]))


def build_min_matrix(S: SetSpec) -> BigIntMatrix:
    _require_nonempty(S)
    s = S.elements
    return BigIntMatrix.from_function(len(s), lambda i, j: min(s[i], s[j]))


def build_gcd_matrix(T: SetSpec) -> BigIntMatrix:
    _require_integer_set(T)
    t = T.elements
    return BigIntMatrix.from_function(len(t), lambda i, j: math.gcd(t[i], t[j]))


def build_lcm_matrix(T: SetSpec) -> BigIntMatrix:
    _require_integer_set(T)
    t = T.elements
    return BigIntMatrix.from_function(len(t), lambda i, j: t[i] * t[j] // math.gcd(t[i], t[j]))


def permute_conjugate(X: BigIntMatrix, sigma: Permutation) -> BigIntMatrix:
    """Return X_sigma with entry (i, j) equal to X[sigma(i), sigma(j)]."""
    if sigma.order != X.order:
        raise DimensionMismatch(f"permutation of order {sigma.order} applied to matrix of order {X.order}")
    idx = [v - 1 for v in sigma.image]
    return BigIntMatrix(tuple(tuple(X.rows[a][b] for b in idx) for a in idx))


def as_array(X: BigIntMatrix | np.ndarray | Sequence) -> np.ndarray:
    """Float view of any matrix-like input, for the floating-point solvers."""
    if isinstance(X, BigIntMatrix):
        return X.to_array()
    return np.asarray(X, dtype=float)

"""Partitions in the r x (n-r) box and strictly increasing index tuples.

A partition of length ``r`` in the box corresponds to the subset
``k_i = lambda_{r-i+1} + i``.  Matrices throughout the package are indexed in
ascending lexicographic order of these subsets, which is a linear extension of
containment.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers.

    Trailing zeros are kept, so ``Partition((2, 1, 0))`` has length 3.
    Compares and hashes like the underlying tuple.
    """

    signed = False

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if not cls.signed and parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    def strip(self) -> "Partition":
        """Drop trailing zeros."""
        parts = list(self)
        while parts and parts[-1] == 0:
            parts.pop()
        return type(self)(parts)

    def pad(self, length: int) -> "Partition":
        """Append zeros up to ``length``; fails if there are too many nonzero parts."""
        core = self.strip()
        if len(core) > length:
            raise ValueError(f"{tuple(self)} has more than {length} nonzero parts")
        return type(self)(tuple(core) + (0,) * (length - len(core)))

    def conjugate(self) -> "Partition":
        if not self or self[0] <= 0:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def shift(self, c: int) -> "Weight":
        """Add ``c`` to every part (a twist by the ``c``-th power of det)."""
        return Weight(p + c for p in self)

    def to_string(self) -> str:
        return ",".join(str(p) for p in self)


class Weight(Partition):
    """Weakly decreasing integer tuple whose entries may be negative (a GL_r weight)."""

    signed = True


@dataclass(frozen=True)
class BoxContext:
    """The Grassmannian Gr(r, n); partitions live in the r x (n-r) box."""

    r: int
    n: int

    def __post_init__(self):
        if not (1 <= self.r < self.n):
            raise ValueError(f"need 1 <= r < n, got r={self.r}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.r

    def fits(self, lam: Iterable[int]) -> bool:
        lam = tuple(lam)
        return (
            len(lam) == self.r
            and all(0 <= p <= self.width for p in lam)
            and all(a >= b for a, b in zip(lam, lam[1:]))
        )


class SubsetIndex(tuple):
    """Strictly increasing tuple of 1-based indices."""

    def __new__(cls, indices: Iterable[int], n: int | None = None):
        indices = tuple(int(k) for k in indices)
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError(f"indices must be strictly increasing: {indices}")
        if indices and indices[0] < 1:
            raise ValueError(f"indices are 1-based: {indices}")
        if n is not None and indices and indices[-1] > n:
            raise ValueError(f"index exceeds n={n}: {indices}")
        return super().__new__(cls, indices)

    def __repr__(self) -> str:
        return f"SubsetIndex({tuple(self)!r})"

    def to_string(self) -> str:
        return ",".join(str(k) for k in self)


def partition_to_subset(lam: Iterable[int], ctx: BoxContext) -> SubsetIndex:
    lam = tuple(lam)
    if not ctx.fits(lam):
        raise ValueError(f"{lam} does not fit the {ctx.r}x{ctx.width} box")
    r = ctx.r
    return SubsetIndex((lam[r - i] + i for i in range(1, r + 1)), ctx.n)


def subset_to_partition(k: Iterable[int], ctx: BoxContext) -> Partition:
    k = SubsetIndex(k, ctx.n)
    if len(k) != ctx.r:
        raise ValueError(f"expected {ctx.r} indices, got {tuple(k)}")
    r = ctx.r
    # lambda_j = k_{r-j+1} - (r-j+1)
    return Partition(k[r - j] - (r - j + 1) for j in range(1, r + 1))


def enumerate_subsets(ctx: BoxContext) -> list[SubsetIndex]:
    """All r-subsets of {1..n} in ascending lexicographic order."""
    return [SubsetIndex(c) for c in combinations(range(1, ctx.n + 1), ctx.r)]


def enumerate_box(ctx: BoxContext) -> list[Partition]:
    """All C(n, r) partitions in the box, in canonical (lex-subset) order."""
    return [subset_to_partition(k, ctx) for k in enumerate_subsets(ctx)]


def complement(mu: Iterable[int]) -> Partition:
    """``(mu_1 - mu_r, mu_1 - mu_{r-1}, ..., mu_1 - mu_2, 0)``."""
    mu = tuple(mu)
    if not mu:
        return Partition()
    top = mu[0]
    return Partition(top - p for p in reversed(mu))


def contains(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff ``lam`` is contained in ``mu`` (``lam_i <= mu_i`` for all i)."""
    mu, lam = tuple(mu), tuple(lam)
    if len(mu) != len(lam):
        raise ValueError(f"length mismatch: {mu} vs {lam}")
    return all(a <= b for a, b in zip(lam, mu))


def parse_partition(text: str, signed: bool = False) -> Partition:
    """Parse ``"2,1,0"``; the empty string gives the empty partition."""
    text = text.strip()
    parts = [int(t) for t in text.split(",")] if text else []
    return (Weight if signed else Partition)(parts)


def parse_subset(text: str, n: int | None = None) -> SubsetIndex:
    text = text.strip()
    return SubsetIndex([int(t) for t in text.split(",")] if text else [], n)

"""Stokes matrices of quantum cohomology and the canonical-coordinate diagnostics.

Matrix content is exact.  Floating point appears only in the canonical
coordinates (critical values of the mirror superpotential) and in the
admissibility / ordering checks built on them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .partitions import BoxContext, Partition, SubsetIndex, enumerate_subsets, subset_to_partition
from .symfunc import det_exact, h_spec

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class StokesMatrix:
    """Rows L and columns K, both in ascending lex order of subsets.

    ``entries[a][b]`` is S_{L,K} with ``L = order[a]``, ``K = order[b]``.
    With this orientation the Grassmannian matrix is unit lower triangular.
    """

    ctx: BoxContext
    order: tuple[SubsetIndex, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.order)

    @property
    def partitions(self) -> list[Partition]:
        return [subset_to_partition(k, self.ctx) for k in self.order]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> list[list[int]]:
        return [list(col) for col in zip(*self.entries)]


def projective_stokes(n: int) -> list[list[int]]:
    """``C(n-1+j-i, j-i)`` for ``j >= i``, else 0 (unit upper triangular)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return [[comb(n - 1 + j - i, j - i) if j >= i else 0 for j in range(n)] for i in range(n)]


def stokes_entry(row: Sequence[int], col: Sequence[int], n: int) -> int:
    """S_{L,K} = det C(n + l_i - k_j - 1, l_i - k_j) for L = ``row``, K = ``col``."""
    return det_exact([[h_spec(l - k, n) for k in col] for l in row])


def grassmann_stokes(ctx: BoxContext) -> StokesMatrix:
    order = tuple(enumerate_subsets(ctx))
    entries = tuple(tuple(stokes_entry(L, K, ctx.n) for K in order) for L in order)
    return StokesMatrix(ctx, order, entries)


# --- canonical coordinates -------------------------------------------------


@dataclass(frozen=True)
class CanonicalPoint:
    """A critical value ``u`` with its exact generators.

    ``label`` is the subset K (a 1-tuple in the projective case); the value is
    the sum over ``k in K`` of ``n * exp(t/n) * zeta^k``.
    """

    label: SubsetIndex
    value: complex
    n: int
    t: complex


@dataclass(frozen=True)
class AdmissibleLine:
    phi: float
    epsilon: float = 1e-3

    def __post_init__(self):
        if not (0 <= self.phi < math.pi):
            raise ValueError(f"phi must lie in [0, pi), got {self.phi}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")


def _projective_values(n: int, t: complex) -> list[complex]:
    scale = n * cmath.exp(complex(t) / n)
    return [scale * cmath.exp(2j * math.pi * k / n) for k in range(1, n + 1)]


def canonical_coords_projective(n: int, t: complex = 0) -> list[CanonicalPoint]:
    """Critical values ``n * e^{t/n} * zeta^k``, k = 1..n, of the P^{n-1} superpotential."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    t = complex(t)
    return [
        CanonicalPoint(SubsetIndex((k,)), u, n, t)
        for k, u in enumerate(_projective_values(n, t), start=1)
    ]


def canonical_coords_grassmannian(ctx: BoxContext, t: complex = 0) -> list[CanonicalPoint]:
    """``u_K = sum of u_k over k in K``, one point per r-subset, in lex order."""
    t = complex(t)
    base = _projective_values(ctx.n, t)
    return [
        CanonicalPoint(K, sum(base[k - 1] for k in K), ctx.n, t)
        for K in enumerate_subsets(ctx)
    ]


def superpotential(x: Sequence[complex], t: complex) -> complex:
    """``x_1 + ... + x_{n-1} + e^t / (x_1 ... x_{n-1})``."""
    return sum(x) + cmath.exp(t) / np.prod(x)


def refine_critical_point(seed: Sequence[complex], t: complex, tol: float = 1e-14,
                          max_iter: int = 100) -> np.ndarray:
    """Newton iteration for a critical point of the P^{n-1} superpotential."""
    x = np.array(seed, dtype=complex)
    q = cmath.exp(t)
    for _ in range(max_iter):
        p = np.prod(x)
        grad = 1 - q / (x * p)
        hess = np.outer(q / (x * p), 1 / x) + np.diag(q / (x * x * p))
        step = np.linalg.solve(hess, grad)
        x = x - step
        if np.max(np.abs(step)) <= tol * max(1.0, np.max(np.abs(x))):
            break
    return x


@dataclass
class Admissibility:
    """Result of an admissibility check; truthy iff admissible."""

    admissible: bool
    degenerate: bool = False
    coincident: list[tuple[SubsetIndex, SubsetIndex]] = field(default_factory=list)
    orthogonal: list[tuple[SubsetIndex, SubsetIndex]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.admissible


def _scale(points: Sequence[CanonicalPoint]) -> float:
    return max((abs(p.value) for p in points), default=0.0) or 1.0


def is_admissible(line: AdmissibleLine, points: Sequence[CanonicalPoint],
                  tol: float = DEFAULT_TOL) -> Admissibility:
    """No segment joining two canonical values may be orthogonal to the line.

    Coincident values make every line non-admissible and set ``degenerate``.
    """
    scale = tol * _scale(points)
    rot = cmath.exp(-1j * line.phi)
    result = Admissibility(admissible=True)
    for a, b in combinations(points, 2):
        diff = a.value - b.value
        if abs(diff) <= scale:
            result.coincident.append((a.label, b.label))
        elif abs((rot * diff).real) <= scale:
            result.orthogonal.append((a.label, b.label))
    result.degenerate = bool(result.coincident)
    result.admissible = not (result.coincident or result.orthogonal)
    return result


def order_by_line(line: AdmissibleLine, points: Sequence[CanonicalPoint],
                  opposite: bool = False, tol: float = DEFAULT_TOL) -> list[SubsetIndex]:
    """Labels sorted by decreasing ``Re(exp(-i phi) u)``.

    ``opposite=True`` uses the reversed co-orientation of the line.
    """
    check = is_admissible(line, points, tol)
    if not check:
        raise ValueError(
            f"line phi={line.phi} is not admissible "
            f"(coincident={check.coincident}, orthogonal={check.orthogonal})"
        )
    sign = -1 if opposite else 1
    rot = cmath.exp(-1j * line.phi)
    ranked = sorted(points, key=lambda p: -sign * (rot * p.value).real)
    return [p.label for p in ranked]

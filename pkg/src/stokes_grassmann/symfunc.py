"""Exact symmetric-function arithmetic at the principal specialization x = (1^n).

Littlewood-Richardson coefficients are counted by enumerating LR fillings
row by row.  For a filling, ``a[i][k]`` is the number of letters ``k`` in row
``i`` (both 1-based in the comments); two constraints make it an LR tableau:

* columns strictly increase: the cells of row ``i`` holding letters ``<= k``
  end no further right than the cells of row ``i-1`` holding letters ``<= k-1``;
* the reverse reading word is a lattice word: the number of ``k`` in rows
  ``<= i`` never exceeds the number of ``k-1`` in rows ``< i``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .partitions import Partition, contains

INF = float("inf")


def h_spec(m: int, n: int) -> int:
    """Complete homogeneous h_m at n ones: C(n+m-1, m), and 0 for m < 0."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if m < 0:
        return 0
    return comb(n + m - 1, m)


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for p in range(k + 1, size):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                num = row_i[j] * pivot - aik * row_k[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def jacobi_trudi_matrix(lam: Sequence[int], mu: Sequence[int], n: int) -> list[list[int]]:
    """The r x r matrix ``h_{lam_i - mu_j - i + j}(1^n)``."""
    r = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (r - len(lam))
    mu = tuple(mu) + (0,) * (r - len(mu))
    return [[h_spec(lam[i] - mu[j] - i + j, n) for j in range(r)] for i in range(r)]


@lru_cache(maxsize=None)
def _skew_schur_spec(lam: tuple, mu: tuple, n: int) -> int:
    return det_exact(jacobi_trudi_matrix(lam, mu, n))


def skew_schur_spec(lam: Iterable[int], mu: Iterable[int], n: int) -> int:
    """s_{lam/mu}(1^n) via the Jacobi-Trudi determinant.

    Vanishes when ``mu`` is not contained in ``lam``.
    """
    return _skew_schur_spec(tuple(lam), tuple(mu), n)


@lru_cache(maxsize=None)
def _schur_dim(nu: tuple, n: int) -> int:
    nu = tuple(p for p in nu if p)
    if len(nu) > n:
        return 0
    conj = Partition(nu).conjugate()
    num, den = 1, 1
    for i, row in enumerate(nu):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (conj[j] - i) - 1
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"hook-content quotient not integral for {nu}, n={n}")
    return q


def schur_dim(nu: Iterable[int], n: int) -> int:
    """Dimension of the irreducible GL_n module with highest weight ``nu``.

    Hook-content formula; returns 0 when ``nu`` has more than ``n`` nonzero rows.
    """
    nu = tuple(nu)
    if any(p < 0 for p in nu):
        raise ValueError(f"schur_dim needs a nonnegative partition, got {nu}")
    return _schur_dim(nu, n)


def _normalize(lam: Sequence[int], rows: int | None) -> Partition | None:
    core = list(lam)
    while core and core[-1] == 0:
        core.pop()
    if rows is None:
        return Partition(core)
    if len(core) > rows:
        return None
    return Partition(core + [0] * (rows - len(core)))


def _lr_fillings(inner: tuple, content: tuple | None, outer: tuple | None, nrows: int):
    """Yield (outer shape, content) for every LR filling.

    Exactly one of ``content`` / ``outer`` is fixed.
    """
    inner = inner + (0,) * (nrows - len(inner))
    if outer is not None:
        outer = outer + (0,) * (nrows - len(outer))
    nletters = len(content) if content is not None else nrows
    # totals[k]: letters k+1 placed so far (0-based letter index)
    totals = [0] * (nletters + 1)
    shape = [0] * nrows

    def row(i, prev_bounds):
        if i == nrows:
            if content is None or all(totals[k] == content[k] for k in range(nletters)):
                got = tuple(totals[:nletters]) if content is None else content
                yield tuple(shape), got
            return
        if content is not None and all(totals[k] == content[k] for k in range(nletters)):
            # nothing left to place: remaining rows equal the inner shape
            for j in range(i, nrows):
                shape[j] = inner[j]
            if all(shape[j] <= shape[j - 1] for j in range(max(i, 1), nrows)):
                yield tuple(shape), content
            return
        before = totals[:]  # counts in rows < i, for the lattice condition
        start = inner[i]
        target = None if outer is None else outer[i] - inner[i]
        if target is not None and target < 0:
            return
        bounds = [start]  # bounds[k]: right end of letters <= k in this row

        def letter(k, pos, placed):
            # k is 1-based; pos is the right end of letters < k
            if k > min(i + 1, nletters):
                if target is not None and placed != target:
                    return
                shape[i] = pos
                if i > 0 and pos > shape[i - 1]:
                    return
                yield from row(i + 1, bounds + [pos] * (nletters + 1 - len(bounds)))
                return
            cap = prev_bounds[k - 1] - pos  # column strictness
            if k >= 2:
                cap = min(cap, before[k - 2] - totals[k - 1])
            if content is not None:
                cap = min(cap, content[k - 1] - totals[k - 1])
            if target is not None:
                cap = min(cap, target - placed)
            if cap == INF:
                raise AssertionError("unbounded row")
            for a in range(int(cap) + 1):
                totals[k - 1] += a
                bounds.append(pos + a)
                yield from letter(k + 1, pos + a, placed + a)
                bounds.pop()
                totals[k - 1] -= a

        yield from letter(1, start, 0)

    yield from row(0, [INF] * (nletters + 1))


@lru_cache(maxsize=None)
def _lr_expand(mu: tuple, nu: tuple, rows: int | None) -> dict:
    mu = tuple(p for p in mu if p)
    nu = tuple(p for p in nu if p)
    if sum(nu) > sum(mu):
        mu, nu = nu, mu  # fewer letters to place
    nrows = len(mu) + len(nu) if rows is None else rows
    if len(mu) > nrows or len(nu) > nrows:
        return {}
    if not nu:
        return {mu: 1}
    out: dict = {}
    for shape, _ in _lr_fillings(mu, nu, None, nrows):
        key = tuple(p for p in shape if p)
        out[key] = out.get(key, 0) + 1
    return out


def lr_expand(mu: Iterable[int], nu: Iterable[int], rows: int | None = None) -> dict[Partition, int]:
    """Littlewood-Richardson expansion ``{lam: c^lam_{mu,nu}}`` of s_mu * s_nu.

    Keys have trailing zeros stripped; with ``rows`` given, shapes with more
    than ``rows`` nonzero parts are dropped (they vanish for GL_rows) and keys
    are padded to that length.
    """
    mu, nu = Partition(mu), Partition(nu)
    result = {}
    for lam, c in _lr_expand(tuple(mu), tuple(nu), rows).items():
        key = _normalize(lam, rows)
        if key is not None:
            result[key] = c
    return result


@lru_cache(maxsize=None)
def _skew_expand(lam: tuple, mu: tuple) -> dict:
    if not contains(lam, mu):
        return {}
    out: dict = {}
    for _, content in _lr_fillings(mu, None, lam, len(lam)):
        key = tuple(p for p in content if p)
        out[key] = out.get(key, 0) + 1
    return out


def skew_expand(lam: Iterable[int], mu: Iterable[int], rows: int | None = None) -> dict[Partition, int]:
    """Expansion ``{nu: c^lam_{mu,nu}}`` of the skew Schur function s_{lam/mu}.

    Empty when ``mu`` is not contained in ``lam``.
    """
    lam, mu = Partition(lam), Partition(mu)
    r = max(len(lam), len(mu))
    lam, mu = lam.pad(r), mu.pad(r)
    result = {}
    for nu, c in _skew_expand(tuple(lam), tuple(mu)).items():
        key = _normalize(nu, rows)
        if key is not None:
            result[key] = c
    return result


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^lam_{mu,nu}."""
    key = Partition(lam).strip()
    return lr_expand(mu, nu).get(key, 0)

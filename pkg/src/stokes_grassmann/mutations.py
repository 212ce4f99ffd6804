"""Braid group action on unit upper triangular Gram matrices.

Generator ``b_i`` changes the basis by ``e_{i+1} -> e_{i+1} - G[i][i+1] e_i``
and then swaps positions ``i`` and ``i+1`` (a left mutation of an exceptional
pair).  The Gram matrix transforms by the congruence ``M^T G M``.  Indices in
words are 1-based, as in ``"b1 b2 b1^-1"``.
"""

from __future__ import annotations

import random
import re
from collections import deque
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]

_TOKEN = re.compile(r"b(\d+)(\^-1)?$")


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def is_unipotent_upper(g: Sequence[Sequence[int]]) -> bool:
    size = len(g)
    return all(
        len(row) == size
        and row[i] == 1
        and all(row[j] == 0 for j in range(i))
        for i, row in enumerate(g)
    )


def _check(g: Matrix, i: int) -> int:
    if not is_unipotent_upper(g):
        raise ValueError("matrix must be unit upper triangular")
    if not (1 <= i < len(g)):
        raise IndexError(f"generator index {i} out of range 1..{len(g) - 1}")
    return i - 1


def _congruence(g: Matrix, p: int, block: tuple[int, int, int, int]) -> Matrix:
    """``M^T G M`` where M is the identity except rows/cols p, p+1 = block."""
    size = len(g)
    a, b, c, d = block  # [[a, b], [c, d]]
    q = p + 1
    # G M: only columns p, q change
    gm = [list(row) for row in g]
    for row_g, row in zip(g, gm):
        row[p] = row_g[p] * a + row_g[q] * c
        row[q] = row_g[p] * b + row_g[q] * d
    # M^T (G M): only rows p, q change
    out = [list(row) for row in gm]
    out[p] = [a * x + c * y for x, y in zip(gm[p], gm[q])]
    out[q] = [b * x + d * y for x, y in zip(gm[p], gm[q])]
    assert len(out) == size
    return as_matrix(out)


def mutate(g: Sequence[Sequence[int]], i: int) -> Matrix:
    """Apply the braid generator ``b_i``."""
    g = as_matrix(g)
    p = _check(g, i)
    return _congruence(g, p, (-g[p][p + 1], 1, 1, 0))


def mutate_inverse(g: Sequence[Sequence[int]], i: int) -> Matrix:
    """Apply ``b_i^-1``."""
    g = as_matrix(g)
    p = _check(g, i)
    return _congruence(g, p, (0, 1, 1, -g[p][p + 1]))


def parse_word(text: str) -> list[tuple[int, int]]:
    """``"b1 b2^-1"`` -> ``[(1, 1), (2, -1)]``."""
    word = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"bad braid token {token!r}")
        word.append((int(m.group(1)), -1 if m.group(2) else 1))
    return word


def format_word(word: Sequence[tuple[int, int]]) -> str:
    return " ".join(f"b{i}" + ("^-1" if e < 0 else "") for i, e in word)


def apply_word(g: Sequence[Sequence[int]], word: Sequence[tuple[int, int]] | str) -> Matrix:
    """Apply generators left to right."""
    if isinstance(word, str):
        word = parse_word(word)
    g = as_matrix(g)
    for i, e in word:
        g = mutate(g, i) if e > 0 else mutate_inverse(g, i)
    return g


def sign_canonical(g: Matrix) -> Matrix:
    """Canonical representative of ``D G D`` over diagonal sign matrices D.

    Signs are fixed along a spanning forest of the nonzero off-diagonal
    entries, built in index order, so that tree edges become positive.
    """
    size = len(g)
    sign = [0] * size
    for root in range(size):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in range(size):
                if b == a or sign[b]:
                    continue
                entry = g[a][b] if a < b else g[b][a]
                if entry:
                    sign[b] = sign[a] * (1 if entry > 0 else -1)
                    queue.append(b)
    return tuple(tuple(sign[a] * sign[b] * g[a][b] for b in range(size)) for a in range(size))


def braid_orbit_search(g: Sequence[Sequence[int]], h: Sequence[Sequence[int]], depth: int,
                       signs: bool = False) -> list[tuple[int, int]] | None:
    """Breadth-first search for a braid word taking ``g`` to ``h``.

    Words of length at most ``depth`` over ``b_i`` and ``b_i^-1`` are tried.
    With ``signs=True`` matrices are compared up to sign changes of basis
    vectors.  ``None`` means nothing was found within the bound; it does not
    prove that ``g`` and ``h`` lie in different orbits.
    """
    g, h = as_matrix(g), as_matrix(h)
    if len(g) != len(h):
        raise ValueError("matrices must have the same size")
    key = sign_canonical if signs else (lambda m: m)
    target = key(h)
    start = key(g)
    if start == target:
        return []
    seen = {start}
    frontier = [(g, [])]
    gens = [(i, e) for i in range(1, len(g)) for e in (1, -1)]
    for _ in range(depth):
        nxt = []
        for m, word in frontier:
            for i, e in gens:
                m2 = mutate(m, i) if e > 0 else mutate_inverse(m, i)
                k = key(m2)
                if k in seen:
                    continue
                if k == target:
                    return word + [(i, e)]
                seen.add(k)
                nxt.append((m2, word + [(i, e)]))
        frontier = nxt
    return None


def random_unipotent(size: int, rng: random.Random, bound: int = 5) -> Matrix:
    """Random integral unit upper triangular matrix with entries in [-bound, bound]."""
    return tuple(
        tuple(1 if i == j else (rng.randint(-bound, bound) if j > i else 0) for j in range(size))
        for i in range(size)
    )

"""Euler pairing of Kapranov's exceptional collection on Gr(r, n).

``Hom(E_lam, E_mu)`` is the sum over GL_r weights ``nu`` with ``nu_r >= 0`` of
``mult(nu) * dim R_nu``, where ``mult`` comes from decomposing the dual of
``rho_lam`` tensored with ``rho_mu``.  Higher Ext groups vanish between members
of the collection, so the Euler pairing equals the Hom dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .partitions import BoxContext, Partition, Weight, complement, enumerate_box
from .symfunc import lr_expand, schur_dim


def dual_tensor_decompose(lam: Iterable[int], mu: Iterable[int], r: int) -> dict[Weight, int]:
    """Multiplicities of irreducibles in ``rho_lam^dual (x) rho_mu`` for GL_r.

    Uses ``rho_lam^dual (x) det^lam_1 = rho_{lam^c}``: expand ``s_{lam^c} s_mu``
    in r rows and shift every weight down by ``lam_1``.
    """
    lam = Partition(lam).pad(r)
    mu = Partition(mu).pad(r)
    shift = lam[0] if r else 0
    return {
        pi.shift(-shift): c
        for pi, c in lr_expand(complement(lam), mu, rows=r).items()
    }


def truncate(weights: dict) -> dict[Weight, int]:
    """Keep the weights whose last entry is nonnegative."""
    return {Weight(nu): c for nu, c in weights.items() if not nu or nu[-1] >= 0}


@lru_cache(maxsize=None)
def _hom_dim(lam: tuple, mu: tuple, r: int, n: int) -> int:
    kept = truncate(dual_tensor_decompose(lam, mu, r))
    return sum(c * schur_dim(nu, n) for nu, c in kept.items())


def hom_dim(lam: Iterable[int], mu: Iterable[int], ctx: BoxContext) -> int:
    """dim Hom(E_lam, E_mu) on Gr(r, n)."""
    lam, mu = tuple(lam), tuple(mu)
    for p in (lam, mu):
        if not ctx.fits(p):
            raise ValueError(f"{p} does not fit the {ctx.r}x{ctx.width} box")
    return _hom_dim(lam, mu, ctx.r, ctx.n)


@dataclass(frozen=True)
class EulerMatrix:
    """chi(E_lam, E_mu) with rows = source lam, columns = target mu."""

    ctx: BoxContext
    order: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.order)

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def euler_matrix(ctx: BoxContext) -> EulerMatrix:
    order = tuple(enumerate_box(ctx))
    entries = tuple(tuple(hom_dim(lam, mu, ctx) for mu in order) for lam in order)
    return EulerMatrix(ctx, order, entries)

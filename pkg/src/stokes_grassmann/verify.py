"""Entrywise check that the Stokes matrix equals the Euler pairing matrix.

Every pair (lam, mu) in the box is evaluated three independent ways:

* ``stokes``: the r x r binomial minor with ``K`` from lam and ``L`` from mu;
* ``euler``: the representation sum ``hom_dim(lam, mu)``;
* ``skew``: the Jacobi-Trudi value ``s_{mu/lam}(1^n)``.

The Stokes matrix is stored with rows L, so the Euler matrix is compared
against its transpose.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .dercat import euler_matrix
from .partitions import BoxContext, Partition, partition_to_subset
from .stokes import grassmann_stokes
from .symfunc import det_exact, skew_schur_spec


@dataclass
class Mismatch:
    lam: Partition
    mu: Partition
    stokes_value: int
    euler_value: int
    skew_value: int

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "stokes": str(self.stokes_value),
            "euler": str(self.euler_value),
            "skew": str(self.skew_value),
        }


@dataclass
class VerificationReport:
    ctx: BoxContext
    matrix_size: int
    pairs_checked: int
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0
    determinant: int = 1

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.pairs_checked == self.matrix_size ** 2

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "r": self.ctx.r,
            "n": self.ctx.n,
            "matrix_size": self.matrix_size,
            "pairs_checked": self.pairs_checked,
            "mismatches": [m.to_dict() for m in self.mismatches],
            "determinant": str(self.determinant),
            "verdict": self.verdict,
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out


def verify(ctx: BoxContext) -> VerificationReport:
    start = time.perf_counter()
    stokes = grassmann_stokes(ctx)
    euler = euler_matrix(ctx)
    order = euler.order
    if [partition_to_subset(lam, ctx) for lam in order] != list(stokes.order):
        raise AssertionError("Stokes and Euler matrices use different index orders")
    size = len(order)
    report = VerificationReport(ctx, size, 0)
    for a, lam in enumerate(order):
        for b, mu in enumerate(order):
            s = stokes[b, a]
            e = euler[a, b]
            k = skew_schur_spec(mu, lam, ctx.n)
            report.pairs_checked += 1
            if not s == e == k:
                report.mismatches.append(Mismatch(lam, mu, s, e, k))
    report.determinant = det_exact(euler.rows())
    report.elapsed = time.perf_counter() - start
    return report


def verify_all(max_n: int) -> list[VerificationReport]:
    return [verify(BoxContext(r, n)) for n in range(2, max_n + 1) for r in range(1, n)]

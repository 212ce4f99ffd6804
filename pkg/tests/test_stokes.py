import cmath
import math

import numpy as np
import pytest

from oracles import leibniz_det
from stokes_grassmann.partitions import BoxContext, SubsetIndex
from stokes_grassmann.stokes import (
    AdmissibleLine,
    canonical_coords_grassmannian,
    canonical_coords_projective,
    grassmann_stokes,
    is_admissible,
    order_by_line,
    projective_stokes,
    refine_critical_point,
    stokes_entry,
    superpotential,
)
from stokes_grassmann.symfunc import det_exact

BOXES = [BoxContext(r, n) for n in range(2, 9) for r in range(1, n)]


def test_projective_examples():
    assert projective_stokes(2) == [[1, 2], [0, 1]]
    assert projective_stokes(3) == [[1, 3, 6], [0, 1, 3], [0, 0, 1]]
    assert projective_stokes(4)[0] == [1, 4, 10, 20]


def test_grassmann_entry_examples():
    assert stokes_entry((1, 3), (1, 3), 4) == 1
    assert stokes_entry((1, 3), (1, 2), 4) == 4
    assert stokes_entry((1, 4), (2, 3), 4) == 0


def test_gr1n_is_transpose_of_projective():
    for n in range(2, 10):
        s = grassmann_stokes(BoxContext(1, n))
        assert s.transpose() == projective_stokes(n)


@pytest.mark.parametrize("ctx", BOXES, ids=str)
def test_vanishing_pattern_and_determinant(ctx):
    s = grassmann_stokes(ctx)
    for a, L in enumerate(s.order):
        for b, K in enumerate(s.order):
            below = all(k <= l for k, l in zip(K, L))
            if below:
                assert s[a, b] >= 1
            else:
                assert s[a, b] == 0
            if b > a:
                assert s[a, b] == 0
        assert s[a, a] == 1
    assert det_exact(s.rows()) == 1


def test_entry_against_leibniz():
    ctx = BoxContext(3, 7)
    s = grassmann_stokes(ctx)
    from stokes_grassmann.symfunc import h_spec
    for a in range(0, s.size, 5):
        for b in range(0, s.size, 3):
            L, K = s.order[a], s.order[b]
            m = [[math.comb(ctx.n + l - k - 1, l - k) if l >= k else 0 for k in K] for l in L]
            assert s[a, b] == leibniz_det(m)


def test_canonical_projective_examples():
    vals = sorted(p.value.real for p in canonical_coords_projective(2, 0))
    assert vals == pytest.approx([-2, 2])
    zeta = cmath.exp(2j * math.pi / 3)
    got = [p.value for p in canonical_coords_projective(3, 0)]
    assert np.allclose(got, [3 * zeta, 3 * zeta**2, 3])


@pytest.mark.parametrize("n", range(2, 11))
def test_canonical_projective_geometry(n, rng):
    for _ in range(5):
        t = complex(rng.uniform(-2, 2), rng.uniform(-4, 4))
        pts = canonical_coords_projective(n, t)
        mod = n * math.exp(t.real / n)
        assert abs(sum(p.value for p in pts)) <= 1e-10 * mod
        for p in pts:
            assert abs(abs(p.value) - mod) <= 1e-10 * mod


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_critical_values_by_newton(n, rng):
    t = complex(rng.uniform(-1, 1), rng.uniform(-3, 3))
    for p in canonical_coords_projective(n, t):
        seed = np.full(n - 1, p.value / n) * (1 + 0.01 * np.array(
            [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n - 1)]))
        x = refine_critical_point(seed, t)
        grad = 1 - cmath.exp(t) / (x * np.prod(x))
        assert np.max(np.abs(grad)) < 1e-10
        assert abs(superpotential(x, t) - p.value) <= 1e-8 * abs(p.value)


def test_grassmannian_points():
    pts = canonical_coords_grassmannian(BoxContext(1, 5), 0.3)
    proj = canonical_coords_projective(5, 0.3)
    assert [p.value for p in pts] == [p.value for p in proj]
    g = {tuple(p.label): p.value for p in canonical_coords_grassmannian(BoxContext(2, 4), 0)}
    assert abs(g[(1, 3)]) < 1e-12 and abs(g[(2, 4)]) < 1e-12
    base = [p.value for p in canonical_coords_projective(6, 1j)]
    for p in canonical_coords_grassmannian(BoxContext(3, 6), 1j):
        assert p.value == pytest.approx(sum(base[k - 1] for k in p.label))


def test_admissibility_examples():
    pts = canonical_coords_projective(2, 0)
    assert not is_admissible(AdmissibleLine(math.pi / 2), pts)
    assert is_admissible(AdmissibleLine(0.0), pts)
    check = is_admissible(AdmissibleLine(0.3), canonical_coords_grassmannian(BoxContext(2, 4), 0))
    assert not check and check.degenerate
    assert (SubsetIndex((1, 3)), SubsetIndex((2, 4))) in check.coincident


def test_gr24_coincidence_persists_along_t():
    # zeta + zeta^3 = 0 for n = 4, so u_(1,3) = u_(2,4) = 0 for every t
    for t in (0.4 + 0.1j, -1.0, 2j):
        check = is_admissible(AdmissibleLine(0.3), canonical_coords_grassmannian(BoxContext(2, 4), t))
        assert check.degenerate
        assert check.coincident == [(SubsetIndex((1, 3)), SubsetIndex((2, 4)))]


def test_gr25_generic_points_distinct():
    check = is_admissible(AdmissibleLine(0.3), canonical_coords_grassmannian(BoxContext(2, 5), 0.4 + 0.1j))
    assert not check.degenerate


def test_line_validation():
    with pytest.raises(ValueError):
        AdmissibleLine(math.pi)
    with pytest.raises(ValueError):
        AdmissibleLine(0.1, 0)


def test_order_by_line():
    pts = canonical_coords_projective(2, 0)
    assert order_by_line(AdmissibleLine(0.0), pts) == [(2,), (1,)]
    pts3 = canonical_coords_projective(3, 0)
    assert order_by_line(AdmissibleLine(0.1), pts3)[0] == (3,)
    fwd = order_by_line(AdmissibleLine(0.1), pts3)
    assert order_by_line(AdmissibleLine(0.1), pts3, opposite=True) == fwd[::-1]
    with pytest.raises(ValueError):
        order_by_line(AdmissibleLine(math.pi / 2), pts)

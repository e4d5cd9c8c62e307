import pytest

from cmtilt import linalg
from cmtilt.builders import build_progenerator_algebra, build_tilting_algebra
from cmtilt.errors import WindowUnstable
from cmtilt.fields import FieldSpec
from cmtilt.gmodules import (GradedModuleWindow, K_TRUNC, R_QUOT, R_TRUNC,
                             default_window_bound, graded_hom_basis,
                             graded_hom_dim, is_locally_free_over_quotient,
                             truncation_module)
from cmtilt.quotient import QuotientRing
from cmtilt.ring import GradedRing, WeightedPoly

F101 = FieldSpec.prime(101)


def window_setup(quotient_cache, text, weights):
    q = quotient_cache(text, weights)
    ring = q.ring
    b = default_window_bound(q)
    hi = b + 3 * max(ring.wx, ring.wy)
    return q, b, hi


def test_truncation_dims(quotient_cache):
    q, b, hi = window_setup(quotient_cache, "x^4-y^2", (1, 2))
    ring = q.ring
    m0 = truncation_module(ring, 0, R_TRUNC, hi)
    for d in range(hi + 1):
        assert m0.dim(d) == ring.dim(d)
    cot = truncation_module(ring, 1, R_QUOT, 0)
    assert (cot.lo, cot.hi) == (-1, -1)
    assert cot.dim(-1) == 1
    cot3 = truncation_module(ring, 3, R_QUOT, 0)
    assert [cot3.dim(d) for d in range(-3, 0)] == [ring.dim(0), ring.dim(1), ring.dim(2)]
    mk = truncation_module(q, q.a + 1, K_TRUNC, hi)
    for d in range(hi + 1):
        assert mk.dim(d) == q.dim(q.a + 1 + d)


def test_oracle_matches_block_entries(quotient_cache):
    q, b, hi = window_setup(quotient_cache, "x^4-y^2", (1, 2))
    gam = build_tilting_algebra(q)
    mods = {i: truncation_module(q.ring, i, R_TRUNC, hi)
            for i in range(1, q.a + q.p + 1)}
    for i in range(1, q.a + q.p + 1):
        for j in range(1, q.a + q.p + 1):
            expected = sum(1 for (r, c, t) in gam.block_index if (r, c) == (i, j))
            assert graded_hom_dim(mods[j], mods[i], b) == expected


def test_endomorphisms_contain_identity(quotient_cache):
    q, b, hi = window_setup(quotient_cache, "x^3*y-y^3", (2, 3))
    for i in range(1, q.a + 1):
        m = truncation_module(q.ring, i, R_TRUNC, hi)
        assert graded_hom_dim(m, m, b) == 1


def test_vanishing_grid_e7(quotient_cache):
    q, b, hi = window_setup(quotient_cache, "x^3*y-y^3", (2, 3))
    mods = {i: truncation_module(q.ring, i, R_TRUNC, hi)
            for i in range(1, q.a + q.p + 1)}
    for i in range(1, q.a + q.p + 1):
        for j in range(1, min(i, q.a + 1)):
            assert graded_hom_dim(mods[i], mods[j], b) == 0


def test_hom_composition_closure(quotient_cache):
    """Composites of oracle basis maps stay in the oracle space."""
    q, b, hi = window_setup(quotient_cache, "x^4-y^2", (1, 2))
    ring = q.ring
    use = b + max(ring.wx, ring.wy)
    triples = [(1, 2, 2), (1, 1, 2), (2, 2, 2)]
    for (i, j, k) in triples:
        mi = truncation_module(ring, i, R_TRUNC, hi)
        mj = truncation_module(ring, j, R_TRUNC, hi)
        mk = truncation_module(ring, k, R_TRUNC, hi)
        h_ij = graded_hom_basis(mi, mj, use)
        h_jk = graded_hom_basis(mj, mk, use)
        h_ik = graded_hom_basis(mi, mk, use)
        flat_ik = []
        degs = sorted(set(d for h in h_ik for d in h))
        for h in h_ik:
            flat_ik.append([x for d in degs if d in h for row in h[d] for x in row])
        space = linalg.SubspaceTracker(F101, len(flat_ik[0]) if flat_ik else 0)
        space.add_many(flat_ik)
        for f1 in h_ij:
            for f2 in h_jk:
                comp = {}
                for d in f1:
                    if d in f2:
                        comp[d] = linalg.mat_mul(F101, f1[d], f2[d])
                flat = [x for d in degs if d in comp for row in comp[d] for x in row]
                if flat and any(x % 101 for x in flat):
                    assert space.contains(flat)


def test_window_too_short_raises(quotient_cache):
    q = quotient_cache("x^4-y^2", (1, 2))
    m = truncation_module(q.ring, 1, R_TRUNC, 4)
    with pytest.raises(WindowUnstable):
        graded_hom_dim(m, m, 40)


def test_locally_free_detection():
    field = F101
    f = WeightedPoly.parse(field, "y^2", (1, 1))
    q = QuotientRing(GradedRing(field, f))
    lam = build_progenerator_algebra(q)
    hi = default_window_bound(q) + 8
    m_ring = truncation_module(q.ring, 0, R_TRUNC, hi)
    assert is_locally_free_over_quotient(m_ring, q, lam)
    # the quotient by the nilpotent variable is not locally free
    dims = {d: 1 for d in range(hi + 1)}
    one = [[field.one()]]
    zero = [[field.zero()]]
    ax = {d: one for d in range(hi)}
    ay = {d: zero for d in range(hi)}
    m_bad = GradedModuleWindow(q.ring, 0, hi, dims, ax, ay, gen_bound=0, label="R/yR")
    assert not is_locally_free_over_quotient(m_bad, q, lam)


def test_locally_free_for_truncations(quotient_cache):
    q, b, hi = window_setup(quotient_cache, "x(x-y)(x-2y)(x-3y)", (1, 1))
    lam = build_progenerator_algebra(q)
    for i in range(0, q.a + 1):
        m = truncation_module(q.ring, i, R_TRUNC, hi + 6)
        assert is_locally_free_over_quotient(m, q, lam)

from cmtilt.fields import QQ, FieldSpec
from cmtilt.quotient import QuotientRing, a_invariant, choose_nzd, divisors
from cmtilt.ring import GradedRing, WeightedPoly

F101 = FieldSpec.prime(101)


def ring(text, weights, field=F101):
    return GradedRing(field, WeightedPoly.parse(field, text, weights))


def test_choose_nzd():
    r = ring("x^4-y^2", (1, 2), QQ)
    assert choose_nzd(r).to_poly() == {(1, 0): QQ.one()}
    r = ring("y^2", (3, 1), QQ)
    assert choose_nzd(r).to_poly() == {(1, 0): QQ.one()}
    r = ring("x^2", (1, 1), QQ)
    assert choose_nzd(r).to_poly() == {(0, 1): QQ.one()}
    # x divides f, so the scan must skip to y
    r = ring("x^4-x*y^2", (2, 3))
    assert choose_nzd(r).to_poly() == {(0, 1): F101.one()}


def test_a_invariant_values():
    assert a_invariant(ring("x^5-y^3", (3, 5))) == 7
    assert a_invariant(ring("y^2", (3, 1), QQ)) == -2
    assert a_invariant(ring("x^4-y^2", (1, 2))) == 1


def test_quotient_dims(quotient_cache):
    q = quotient_cache("x^4-y^2", (1, 2))
    assert q.dim(0) == 2
    q2 = QuotientRing(ring("y^2", (3, 1), QQ))
    assert q2.dim(2) == 0
    assert q2.dim(0) == 1 and q2.dim(1) == 1
    # above a the quotient piece equals the ring piece
    q3 = quotient_cache("x^5-y^3", (3, 5))
    for i in range(q3.a + 1, q3.a + 12):
        assert q3.dim(i) == q3.ring.dim(i)


def test_multiply_quotient_elements():
    q = QuotientRing(ring("y^2", (3, 1), QQ))
    u = q.basis(-2)[0]  # class of y / x
    assert q.multiply(u, u).is_zero()
    one = q.one()
    assert q.multiply(one, u) == u
    # the defining relation survives localization
    qa = QuotientRing(ring("x^4-y^2", (1, 2), QQ))
    x = qa.from_ring(qa.ring.x())
    y = qa.from_ring(qa.ring.y())
    x4 = qa.multiply(qa.multiply(x, x), qa.multiply(x, x))
    assert x4 == qa.multiply(y, y)


def test_periods(quotient_cache):
    assert quotient_cache("x^5-y^3", (3, 5)).p == 1
    assert QuotientRing(ring("y^2", (3, 1), QQ)).p == 3
    assert quotient_cache("x^4-x*y^2", (2, 3)).p == 3
    assert quotient_cache("x^3*y-y^3", (2, 3)).p == 2


def test_period_divides_localized_degree(quotient_cache):
    for text, weights in [("x^5-y^3", (3, 5)), ("x^4-x*y^2", (2, 3)),
                          ("x^5-x*y^2", (1, 2))]:
        q = quotient_cache(text, weights)
        assert q.p in divisors(q.dr)
        # dimension periodicity on a window
        for i in range(-2 * q.ring.n, 2 * q.ring.n + 1):
            assert q.dim(i) == q.dim(i + q.p)


def test_decompose(quotient_cache):
    q = quotient_cache("x^4-y^2", (1, 2))
    comps = q.components()
    assert len(comps) == 2
    assert sorted(c.p_i for c in comps) == [1, 1]
    q2 = quotient_cache("x^5-x*y^2", (1, 2))
    assert sorted(c.p_i for c in q2.components()) == [1, 1, 2]
    q3 = QuotientRing(ring("y^2", (3, 1), QQ))
    assert len(q3.components()) == 1
    assert q3.components()[0].p_i == 3


def test_decompose_idempotent_properties(quotient_cache):
    q = quotient_cache("x(x-y)(x-2y)(x-3y)", (1, 1))
    comps = q.components()
    assert len(comps) == 4
    total = comps[0].idempotent
    for c in comps[1:]:
        total = total + c.idempotent
    assert total == q.one()
    for i, c in enumerate(comps):
        assert q.multiply(c.idempotent, c.idempotent) == c.idempotent
        assert c.local_dim == 1
        for c2 in comps[i + 1:]:
            assert q.multiply(c.idempotent, c2.idempotent).is_zero()


def test_stabilization_window(quotient_cache):
    """Ring dimensions never exceed quotient dimensions up to a, are
    strictly smaller at a, and agree strictly above a."""
    for text, weights in [("x^4-y^2", (1, 2)), ("x^5-y^3", (3, 5)),
                          ("x^3*y-y^3", (2, 3)), ("x^4-x*y^2", (2, 3))]:
        q = quotient_cache(text, weights)
        n = q.ring.n
        for i in range(0, q.a + 1):
            assert q.ring.dim(i) <= q.dim(i)
        assert q.ring.dim(q.a) < q.dim(q.a)
        for i in range(q.a + 1, q.a + 2 * n + 1):
            assert q.ring.dim(i) == q.dim(i)


def test_grothendieck_rank(quotient_cache):
    assert quotient_cache("x^5-y^3", (3, 5)).grothendieck_rank() == 8
    assert quotient_cache("x^4-x*y^2", (2, 3)).grothendieck_rank() == 7
    assert QuotientRing(ring("y", (1, 1), QQ)).grothendieck_rank() == 0


def test_component_local_dims_partition(quotient_cache):
    for text, weights in [("x(x-y)(x-2y)(x-3y)", (1, 1)), ("x^5-x*y^2", (1, 2)),
                          ("x^3*y-y^3", (2, 3))]:
        q = quotient_cache(text, weights)
        assert sum(c.local_dim for c in q.components()) == q.dim(0)

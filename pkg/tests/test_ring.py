import random

import pytest

from cmtilt.errors import DegreeNotPositive, NotHomogeneous, ParseError
from cmtilt.fields import QQ, FieldSpec
from cmtilt.ring import (GradedRing, WeightedPoly, parse_poly,
                         squarefree_bivariate)

F101 = FieldSpec.prime(101)

CATALOG_RINGS = [
    ("x^4-y^2", (1, 2)),
    ("x^5-y^2", (2, 5)),
    ("x^4-x*y^2", (2, 3)),
    ("x^5-x*y^2", (1, 2)),
    ("x^4-y^3", (3, 4)),
    ("x^3*y-y^3", (2, 3)),
    ("x^5-y^3", (3, 5)),
    ("x(x-y)(x-2y)(x-3y)", (1, 1)),
]


def ring(text, weights, field=F101):
    return GradedRing(field, WeightedPoly.parse(field, text, weights))


def test_parse_basic():
    p = parse_poly(QQ, "3*x^2*y - y^3")
    assert p == {(2, 1): QQ.of(3), (0, 3): QQ.of(-1)}
    assert parse_poly(QQ, "x(x-y)") == {(2, 0): QQ.one(), (1, 1): QQ.of(-1)}
    assert parse_poly(QQ, "1/2*x + x/2") == {(1, 0): QQ.one()}
    assert parse_poly(QQ, "-x^2+y") == {(2, 0): QQ.of(-1), (0, 1): QQ.one()}


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly(QQ, "x +* y")
    with pytest.raises(ParseError):
        parse_poly(QQ, "z^2")
    with pytest.raises(ParseError):
        parse_poly(QQ, "(x")
    with pytest.raises(ParseError):
        parse_poly(QQ, "x / y")
    with pytest.raises(ParseError):
        parse_poly(QQ, "")


def test_homogeneity_check():
    with pytest.raises(NotHomogeneous):
        WeightedPoly.parse(QQ, "x^2 + y", (1, 1))
    w = WeightedPoly.parse(QQ, "x^2 + y", (1, 2))
    assert w.degree == 2


def ambient_count(weights, d):
    wx, wy = weights
    return sum(1 for a in range(d // wx + 1) if (d - a * wx) % wy == 0) if d >= 0 else 0


def test_component_dims_e8():
    r = ring("x^5-y^3", (3, 5))
    # degree 15: (5,0) excluded by the leading monomial, (0,3) stays
    sols = [(a, b) for a in range(6) for b in range(4) if 3 * a + 5 * b == 15]
    assert sols == [(0, 3), (5, 0)]
    assert r.dim(15) == 1
    assert r.dim(4) == 0
    assert r.dim(0) == 1


@pytest.mark.parametrize("text,weights", CATALOG_RINGS)
def test_hilbert_identity(text, weights):
    r = ring(text, weights)
    for d in range(3 * r.n + 1):
        assert r.dim(d) == ambient_count(weights, d) - ambient_count(weights, d - r.n)


def test_multiply_defining_relation():
    r = ring("x^4-y^2", (1, 2), QQ)
    x2 = r.monomial_element(2, 0)
    assert r.multiply(x2, x2) == r.monomial_element(0, 2)
    rr = ring("y^2", (3, 1), QQ)
    assert rr.multiply(rr.y(), rr.y()).is_zero()


def test_multiply_identity_and_random_associativity():
    rng = random.Random(7)
    for text, weights in CATALOG_RINGS[:4]:
        r = ring(text, weights)
        for _ in range(50):
            d1, d2, d3 = (rng.randint(0, 6) for _ in range(3))
            if not (r.dim(d1) and r.dim(d2) and r.dim(d3)):
                continue
            u = r.element(d1, [rng.randrange(101) for _ in range(r.dim(d1))])
            v = r.element(d2, [rng.randrange(101) for _ in range(r.dim(d2))])
            w = r.element(d3, [rng.randrange(101) for _ in range(r.dim(d3))])
            assert r.multiply(r.multiply(u, v), w) == r.multiply(u, r.multiply(v, w))
            assert r.multiply(u, v) == r.multiply(v, u)
            assert r.multiply(r.one(), u) == u


def test_basis_deterministic():
    r1 = ring("x^5-y^3", (3, 5))
    r2 = ring("x^5-y^3", (3, 5))
    for d in range(40):
        assert r1.basis(d) == r2.basis(d)


def test_nonzerodivisors():
    r = ring("x^4-y^2", (1, 2), QQ)
    assert r.is_nonzerodivisor(r.x())
    r2 = ring("y^2", (1, 1), QQ)
    assert not r2.is_nonzerodivisor(r2.y())
    r3 = ring("y^2", (3, 1), QQ)
    assert r3.is_nonzerodivisor(r3.x())
    with pytest.raises(DegreeNotPositive):
        r.is_nonzerodivisor(r.one())


def test_squarefree_bivariate():
    cases = [
        ("x^5-y^3", (3, 5), True),
        ("y^2", (3, 1), False),
        ("x^2(x-y)^2", (1, 1), False),
        ("x(x-y)(x-2y)(x-3y)", (1, 1), True),
        ("x*y", (1, 1), True),
        ("x^2*y", (1, 1), False),
        ("x^4-x*y^2", (2, 3), True),
    ]
    for text, weights, expected in cases:
        w = WeightedPoly.parse(F101, text, weights)
        assert squarefree_bivariate(F101, w) == expected, text

"""Acceptance suite: one test per criterion, each printing a PASS line.

All comparisons are exact (integer equality); the only tolerances are the
stated wall-clock budgets.  Run with ``pytest -v -s tests/test_acceptance.py``
to see the per-criterion lines.
"""

import time

import pytest

from cmtilt import linalg
from cmtilt.algebra import global_dimension, injective_dimension, self_injective
from cmtilt.builders import (build_cyclic_square_zero_algebra,
                             build_dynkin_path_algebra,
                             build_progenerator_algebra, build_tilting_algebra)
from cmtilt.catalog import CATALOG
from cmtilt.complexes import silting_tilting_table
from cmtilt.fields import FieldSpec
from cmtilt.gmodules import R_TRUNC, default_window_bound, graded_hom_dim, truncation_module
from cmtilt.quotient import QuotientRing
from cmtilt.report import PASS, _resolution_exactness
from cmtilt.ring import GradedRing, WeightedPoly, squarefree_bivariate

F101 = FieldSpec.prime(101)

ADE_ENTRIES = [
    # name, f, weights, (a, p), Dynkin comparison quiver
    ("A3", "x^4-y^2", (1, 2), (1, 1), "D3"),
    ("A4", "x^5-y^2", (2, 5), (3, 1), "A4"),
    ("D5", "x^4-x*y^2", (2, 3), (3, 3), "A7"),
    ("D6", "x^5-x*y^2", (1, 2), (2, 2), "D6"),
    ("E6", "x^4-y^3", (3, 4), (5, 1), "E6"),
    ("E7", "x^3*y-y^3", (2, 3), (4, 2), "E7"),
    ("E8", "x^5-y^3", (3, 5), (7, 1), "E8"),
]

_CACHE: dict = {}


def quotient_for(text, weights, field=F101):
    key = (text, weights, field.describe())
    if key not in _CACHE:
        ring = GradedRing(field, WeightedPoly.parse(field, text, weights))
        _CACHE[key] = QuotientRing(ring)
    return _CACHE[key]


def report(number, ok, detail):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_constants():
    """(a, p) of the seven minimally graded simple singularities."""
    start = time.monotonic()
    got = {}
    for name, text, weights, expected, _ in ADE_ENTRIES:
        ring = GradedRing(F101, WeightedPoly.parse(F101, text, weights))
        q = QuotientRing(ring)
        got[name] = (q.a, q.p)
        _CACHE[(text, weights, F101.describe())] = q
    elapsed = time.monotonic() - start
    ok = all(got[name] == expected for name, _, _, expected, _ in ADE_ENTRIES)
    ok = ok and elapsed < 5.0
    report(1, ok, f"(a, p) table {got}, {elapsed:.2f}s")


def test_criterion_2_dynkin_coxeter():
    """Coxeter polynomial of the tilting algebra vs the Dynkin path algebra."""
    start = time.monotonic()
    matches = {}
    for name, text, weights, _, quiver in ADE_ENTRIES:
        q = quotient_for(text, weights)
        gam = build_tilting_algebra(q)
        cox = gam.coxeter_polynomial()
        ref = build_dynkin_path_algebra(F101, quiver).coxeter_polynomial()
        matches[name] = (cox == ref)
    elapsed = time.monotonic() - start
    ok = all(matches.values()) and elapsed < 60.0
    report(2, ok, f"coxeter matches {matches}, {elapsed:.2f}s")


def test_criterion_3_grothendieck_rank():
    """Vertex classes of the tilting algebra = a + sum of component periods."""
    results = {}
    for entry in CATALOG:
        q = quotient_for(entry.f_text, (entry.wx, entry.wy))
        if q.a < 0:
            continue  # no tilting-side algebra in the negative case
        gam = build_tilting_algebra(q)
        classes, _, _ = gam.vertex_classes()
        results[entry.name] = (len(classes), q.grothendieck_rank())
    ok = all(v == r for v, r in results.values())
    report(3, ok, f"(vertices, rank) {results}")


def test_criterion_4_entrywise_oracle():
    """Block dimensions of the tilting algebra equal the graded-Hom oracle
    on the full (a+p)^2 grid, for every catalog entry."""
    bad = []
    for entry in CATALOG:
        q = quotient_for(entry.f_text, (entry.wx, entry.wy))
        if q.a < 0:
            continue
        gam = build_tilting_algebra(q)
        ring = q.ring
        b = default_window_bound(q)
        hi = b + 3 * max(ring.wx, ring.wy)
        mods = {i: truncation_module(ring, i, R_TRUNC, hi)
                for i in range(1, q.a + q.p + 1)}
        for i in range(1, q.a + q.p + 1):
            for j in range(1, q.a + q.p + 1):
                expected = sum(1 for (r, c, t) in gam.block_index if (r, c) == (i, j))
                if graded_hom_dim(mods[j], mods[i], b) != expected:
                    bad.append((entry.name, i, j))
    report(4, not bad, f"all grids agree" if not bad else f"mismatches {bad}")


INJDIM_CASES = [
    ("deg4 squarefree", "x(x-y)(x-2y)(x-3y)"),
    ("deg4 square factor", "x^2(x-y)(x-2y)"),
    ("deg5 squarefree", "x(x-y)(x-2y)(x-3y)(x-4y)"),
    ("deg5 square factor", "x^2(x-y)^2(x-2y)"),
]


def test_criterion_5_injective_dimension():
    """Both one-sided injective dimensions of the tilting algebra are
    finite and at most 2 for standard-graded products of linear forms."""
    results = {}
    for label, text in INJDIM_CASES:
        q = quotient_for(text, (1, 1))
        gam = build_tilting_algebra(q)
        right, left = injective_dimension(gam)
        results[label] = (right.verdict, right.value, left.verdict, left.value)
    ok = all(rv == "finite" and lv == "finite" and r <= 2 and l <= 2
             and r == l for (rv, r, lv, l) in results.values())
    report(5, ok, f"injdim {results}")


def test_criterion_6_global_dimension_dichotomy():
    """Finite global dimension (at most 2) iff f is squarefree; the
    infinite side must carry a syzygy-repetition certificate."""
    q_sf = quotient_for("x(x-y)(x-2y)(x-3y)", (1, 1))
    gl_sf = global_dimension(build_tilting_algebra(q_sf))
    q_bad = quotient_for("x^2(x-y)^2", (1, 1))
    gl_bad = global_dimension(build_tilting_algebra(q_bad))
    ok = (gl_sf.verdict == "finite" and gl_sf.value <= 2
          and gl_bad.verdict == "infinite" and "isomorphic" in gl_bad.note)
    report(6, ok, f"squarefree: {gl_sf.verdict} {gl_sf.value}; "
                  f"square factor: {gl_bad.verdict} ({gl_bad.note})")


def test_criterion_7_resolution_exactness():
    """Two-step resolutions of the triangular simples for a standard
    squarefree quintic, verified exact by rank computation row by row."""
    q = quotient_for("x(x-y)(x-2y)(x-3y)(x-4y)", (1, 1))
    gam = build_tilting_algebra(q)
    verdict = _resolution_exactness(q, gam)
    report(7, verdict == PASS, f"rank verification: {verdict} (a = {q.a})")


def test_criterion_8_self_injectivity_and_semisimplicity():
    """The progenerator algebra is self-injective for every catalog entry
    and semisimple exactly when f is squarefree (independent gcd test)."""
    results = {}
    for entry in CATALOG:
        field = F101
        q = quotient_for(entry.f_text, (entry.wx, entry.wy), field)
        lam = build_progenerator_algebra(q)
        sf = squarefree_bivariate(field, q.ring.f)
        results[entry.name] = (self_injective(lam), lam.is_semisimple() == sf)
    ok = all(si and agree for si, agree in results.values())
    report(8, ok, f"(self-injective, semisimple==squarefree) {results}")


def test_criterion_9_negative_case():
    """Square-zero family at n = 3: cyclic model, Hom table of the total
    chain complex, and the silting-but-not-tilting verdict."""
    start = time.monotonic()
    field = FieldSpec.rationals()
    q = QuotientRing(GradedRing(field, WeightedPoly.parse(field, "y^2", (3, 1))))
    lam = build_progenerator_algebra(q)
    qp = lam.quiver_presentation()
    structural = (lam.dim == 6 and qp.vertex_count == 3
                  and all(sum(row) == 1 for row in qp.arrows)
                  and all(sum(qp.arrows[i][j] for i in range(3)) == 1 for j in range(3))
                  and lam.radical_square() == [])
    rep = silting_tilting_table(3, field, window=8)
    table_ok = all(v == (1 if s in (0, -2) else 0) for s, v in rep["table"].items())
    verdicts = rep["silting"] is True and rep["tilting"] is False
    elapsed = time.monotonic() - start
    ok = structural and table_ok and verdicts and elapsed < 10.0
    report(9, ok, f"model dim 6 / 3 vertices / cycle: {structural}, "
                  f"table ok: {table_ok}, silting/tilting: "
                  f"{rep['silting']}/{rep['tilting']}, {elapsed:.2f}s")


def test_criterion_10_vanishing_grid():
    """Hom(R(i)+, R(j)+) vanishes for j < i, j <= a on the E7 entry."""
    q = quotient_for("x^3*y-y^3", (2, 3))
    ring = q.ring
    b = default_window_bound(q)
    hi = b + 3 * max(ring.wx, ring.wy)
    mods = {i: truncation_module(ring, i, R_TRUNC, hi)
            for i in range(1, q.a + q.p + 1)}
    bad = []
    for i in range(1, q.a + q.p + 1):
        for j in range(1, min(i, q.a + 1)):
            d = graded_hom_dim(mods[i], mods[j], b)
            if d != 0:
                bad.append((i, j, d))
    report(10, not bad, "all zero" if not bad else f"nonzero at {bad}")


def test_criterion_11_property_suites():
    """Associativity, d^2 = 0, the Hilbert identity, radical nilpotency,
    and unimodular Cartan matrices for finite global dimension."""
    problems = []
    # associativity is enforced at construction for every built algebra;
    # exercise the checker on a progenerator/tilting pair explicitly
    q = quotient_for("x^4-x*y^2", (2, 3))
    for alg in (build_progenerator_algebra(q), build_tilting_algebra(q)):
        try:
            alg._verify_associativity()
        except Exception as exc:  # pragma: no cover
            problems.append(f"associativity: {exc}")
    # d^2 = 0 is enforced by the complex constructor
    rep = silting_tilting_table(2)
    if rep["complex"].diffs and len(rep["complex"].terms) != 2:
        problems.append("unexpected chain complex shape")
    # Hilbert identity on every catalog ring
    for entry in CATALOG:
        ring = quotient_for(entry.f_text, (entry.wx, entry.wy)).ring
        for d in range(3 * ring.n + 1):
            lhs = ring.dim(d)
            rhs = ring.ambient_dim(d) - ring.ambient_dim(d - ring.n)
            if lhs != rhs:
                problems.append(f"hilbert identity fails for {entry.name} at {d}")
                break
    # radical nilpotency
    for alg in (build_progenerator_algebra(q), build_cyclic_square_zero_algebra(F101, 4)):
        rad = alg.radical()
        power = rad
        for _ in range(alg.dim + 1):
            if not power:
                break
            nxt = []
            for u in power:
                for v in rad:
                    w = alg.mul(u, v)
                    if any(c % 101 for c in w):
                        nxt.append(w)
            tracker = linalg.SubspaceTracker(alg.field, alg.dim)
            tracker.add_many(nxt)
            power = tracker.basis()
        if power:
            problems.append("radical power did not vanish")
    # Cartan determinant is a unit whenever the global dimension is finite
    from cmtilt.report import _int_det
    for entry in CATALOG:
        qq = quotient_for(entry.f_text, (entry.wx, entry.wy))
        if qq.a < 0:
            continue
        gam = build_tilting_algebra(qq)
        gl = global_dimension(gam)
        if gl.verdict == "finite":
            det = _int_det(gam.cartan_matrix())
            if det not in (1, -1):
                problems.append(f"cartan determinant {det} for {entry.name}")
    report(11, not problems, "all property suites hold" if not problems else str(problems))

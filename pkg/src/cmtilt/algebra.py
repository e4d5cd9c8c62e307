"""Finite-dimensional associative algebras by structure constants.

Provides the Jacobson radical (trace form), refinement of designated
idempotents into primitive ones, isomorphism classes of indecomposable
projectives, Cartan matrix and Coxeter polynomial, minimal projective
resolutions with certified-infinite verdicts, and the self-injectivity
and injective-dimension tests.

Conventions: path-style multiplication composes left to right, modules
are right modules with row vectors (``m . a = m @ act(a)``), and
Hom(eA, fA) is identified with fAe acting by left multiplication.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import linalg, unipoly
from .errors import (
    CartanSingular,
    InternalCheckFailed,
    SmallCharUnsupported,
    UnsupportedFactorization,
)
from .fields import PRIME, FieldSpec

DEFAULT_SEED = 1
ASSOC_CHECK_DIM_CAP = 200
ISO_RANDOM_TRIALS = 64


class FinDimAlgebra:
    """Associative unital algebra given by a basis and sparse products.

    ``products`` maps a pair of basis indices (i, j) to the expansion of
    b_i * b_j as a list of (k, coefficient); absent keys mean zero.
    ``idempotents`` is a designated orthogonal decomposition of 1 (not
    necessarily primitive), given as coordinate vectors.
    """

    def __init__(
        self,
        field: FieldSpec,
        dim: int,
        labels: list[str],
        products: dict,
        unit,
        idempotents: list | None = None,
        idempotent_labels: list[str] | None = None,
        seed: int = DEFAULT_SEED,
        check: bool = True,
    ):
        self.field = field
        self.dim = dim
        self.labels = list(labels)
        self.products = {k: list(v) for k, v in products.items()}
        self.unit = list(unit)
        self.idempotents = [list(v) for v in (idempotents or [list(unit)])]
        self.idempotent_labels = list(
            idempotent_labels or [f"e{i}" for i in range(len(self.idempotents))]
        )
        self.seed = seed
        self._radical: list | None = None
        self._ssq = None
        self._refined = None
        self._classes = None
        self._projectives: dict[int, "AlgebraModule"] = {}
        self._left_mats: dict[int, list] = {}
        self._right_mats: dict[int, list] = {}
        if check:
            self._verify()

    # -- construction checks ------------------------------------------

    def _verify(self):
        f = self.field
        if self.dim <= ASSOC_CHECK_DIM_CAP:
            self._verify_associativity()
        for k in range(self.dim):
            bk = self._basis_vector(k)
            if self.mul(self.unit, bk) != bk or self.mul(bk, self.unit) != bk:
                raise InternalCheckFailed(f"unit fails on basis element {self.labels[k]}")
        total = [f.zero()] * self.dim
        for e in self.idempotents:
            if self.mul(e, e) != list(e):
                raise InternalCheckFailed("designated element is not idempotent")
            total = [f.add(a, b) for a, b in zip(total, e)]
        if total != self.unit:
            raise InternalCheckFailed("designated idempotents do not sum to 1")
        for i in range(len(self.idempotents)):
            for j in range(len(self.idempotents)):
                if i != j and any(
                    not f.is_zero(c)
                    for c in self.mul(self.idempotents[i], self.idempotents[j])
                ):
                    raise InternalCheckFailed("designated idempotents not orthogonal")

    def _verify_associativity(self):
        f = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.products.get((i, j), [])
                for k in range(self.dim):
                    lhs: dict[int, object] = {}
                    for m, c in ij:
                        for t, c2 in self.products.get((m, k), []):
                            s = f.add(lhs.get(t, f.zero()), f.mul(c, c2))
                            if f.is_zero(s):
                                lhs.pop(t, None)
                            else:
                                lhs[t] = s
                    rhs: dict[int, object] = {}
                    for m, c in self.products.get((j, k), []):
                        for t, c2 in self.products.get((i, m), []):
                            s = f.add(rhs.get(t, f.zero()), f.mul(c, c2))
                            if f.is_zero(s):
                                rhs.pop(t, None)
                            else:
                                rhs[t] = s
                    if lhs != rhs:
                        raise InternalCheckFailed(
                            f"associativity fails at ({self.labels[i]}, "
                            f"{self.labels[j]}, {self.labels[k]})"
                        )

    # -- basic arithmetic ----------------------------------------------

    def _basis_vector(self, k: int):
        v = [self.field.zero()] * self.dim
        v[k] = self.field.one()
        return v

    def mul(self, u, v):
        f = self.field
        out = [f.zero()] * self.dim
        for i, ci in enumerate(u):
            if f.is_zero(ci):
                continue
            for j, cj in enumerate(v):
                if f.is_zero(cj):
                    continue
                c = f.mul(ci, cj)
                for k, ck in self.products.get((i, j), []):
                    out[k] = f.add(out[k], f.mul(c, ck))
        return out

    def mul3(self, u, v, w):
        return self.mul(self.mul(u, v), w)

    def left_mult_matrix(self, k: int):
        """Matrix of w -> b_k * w in row convention (w @ L)."""
        m = self._left_mats.get(k)
        if m is None:
            f = self.field
            m = [[f.zero()] * self.dim for _ in range(self.dim)]
            for s in range(self.dim):
                for t, c in self.products.get((k, s), []):
                    m[s][t] = c
            self._left_mats[k] = m
        return m

    def right_mult_matrix(self, k: int):
        """Matrix of w -> w * b_k in row convention."""
        m = self._right_mats.get(k)
        if m is None:
            f = self.field
            m = [[f.zero()] * self.dim for _ in range(self.dim)]
            for s in range(self.dim):
                for t, c in self.products.get((s, k), []):
                    m[s][t] = c
            self._right_mats[k] = m
        return m

    def left_mult_matrix_of(self, u):
        f = self.field
        out = [[f.zero()] * self.dim for _ in range(self.dim)]
        for k, c in enumerate(u):
            if f.is_zero(c):
                continue
            m = self.left_mult_matrix(k)
            for s in range(self.dim):
                row = m[s]
                orow = out[s]
                for t in range(self.dim):
                    if not f.is_zero(row[t]):
                        orow[t] = f.add(orow[t], f.mul(c, row[t]))
        return out

    def opposite(self) -> "FinDimAlgebra":
        prod = {(j, i): v for (i, j), v in self.products.items()}
        return FinDimAlgebra(
            self.field, self.dim, self.labels, prod, self.unit,
            idempotents=self.idempotents,
            idempotent_labels=self.idempotent_labels,
            seed=self.seed, check=False,
        )

    def corner_basis(self, e, f_right):
        """Basis (rref rows) of e * A * f_right."""
        tracker = linalg.SubspaceTracker(self.field, self.dim)
        for k in range(self.dim):
            tracker.add(self.mul3(e, self._basis_vector(k), f_right))
        return tracker.basis()

    # -- radical and semisimple quotient --------------------------------

    def radical(self) -> list:
        """Basis of the Jacobson radical via the trace form (Dickson)."""
        if self._radical is not None:
            return self._radical
        f = self.field
        if f.kind == PRIME and f.p <= self.dim:
            raise SmallCharUnsupported(
                f"radical needs p > dim = {self.dim}, have p = {f.p}"
            )
        traces = []
        for k in range(self.dim):
            t = f.zero()
            for s in range(self.dim):
                for tt, c in self.products.get((k, s), []):
                    if tt == s:
                        t = f.add(t, c)
            traces.append(t)
        gram = [[f.zero()] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                acc = f.zero()
                for k, c in self.products.get((i, j), []):
                    acc = f.add(acc, f.mul(c, traces[k]))
                gram[i][j] = acc
        rad = linalg.right_nullspace(f, gram)  # gram is symmetric
        # the radical must be nilpotent
        current = linalg.SubspaceTracker(f, self.dim)
        current.add_many(rad)
        power = rad
        for _ in range(self.dim + 1):
            if not power:
                break
            nxt = []
            for u in power:
                for v in rad:
                    w = self.mul(u, v)
                    if any(not f.is_zero(c) for c in w):
                        nxt.append(w)
            tracker = linalg.SubspaceTracker(f, self.dim)
            tracker.add_many(nxt)
            power = tracker.basis()
        if power:
            raise InternalCheckFailed("trace-form kernel is not nilpotent")
        self._radical = linalg.row_space_basis(f, rad) if rad else []
        return self._radical

    def radical_square(self) -> list:
        rad = self.radical()
        tracker = linalg.SubspaceTracker(self.field, self.dim)
        for u in rad:
            for v in rad:
                tracker.add(self.mul(u, v))
        return tracker.basis()

    def semisimple_quotient(self):
        """Returns (quotient algebra, project function, lift function)."""
        if self._ssq is not None:
            return self._ssq
        f = self.field
        rad = self.radical()
        rref_rows, pivots = linalg.rref(f, rad) if rad else ([], [])
        rref_rows = rref_rows[: len(pivots)]
        complement = [c for c in range(self.dim) if c not in pivots]

        def project(v):
            v = list(v)
            for row, pc in zip(rref_rows, pivots):
                c = v[pc]
                if not f.is_zero(c):
                    v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
            return [v[c] for c in complement]

        def lift(vbar):
            v = [f.zero()] * self.dim
            for c, val in zip(complement, vbar):
                v[c] = val
            return v

        dq = len(complement)
        prod = {}
        for i in range(dq):
            bi = lift([f.one() if s == i else f.zero() for s in range(dq)])
            for j in range(dq):
                bj = lift([f.one() if s == j else f.zero() for s in range(dq)])
                entry = project(self.mul(bi, bj))
                terms = [(k, c) for k, c in enumerate(entry) if not f.is_zero(c)]
                if terms:
                    prod[(i, j)] = terms
        quotient = FinDimAlgebra(
            f, dq, [f"q{c}" for c in complement], prod, project(self.unit),
            idempotents=[project(e) for e in self.idempotents],
            idempotent_labels=self.idempotent_labels,
            seed=self.seed, check=False,
        )
        # semisimplicity: the quotient's own trace form must be nondegenerate
        qtraces = []
        for k in range(dq):
            t = f.zero()
            for s in range(dq):
                for tt, c in quotient.products.get((k, s), []):
                    if tt == s:
                        t = f.add(t, c)
            qtraces.append(t)
        qgram = [
            [
                sum_scalars(f, (f.mul(c, qtraces[k]) for k, c in quotient.products.get((i, j), [])))
                for j in range(dq)
            ]
            for i in range(dq)
        ]
        if dq and linalg.rank(f, qgram) != dq:
            raise InternalCheckFailed("semisimple quotient has degenerate trace form")
        self._ssq = (quotient, project, lift)
        return self._ssq

    def is_semisimple(self) -> bool:
        return not self.radical()

    # -- idempotent refinement ------------------------------------------

    def refined_idempotent_vectors(self) -> list:
        """Primitive orthogonal idempotents refining the designated ones."""
        return [vec for vec, _ in self.refined_idempotents()]

    def refined_idempotents(self):
        if self._refined is not None:
            return self._refined
        out = []
        for e, lab in zip(self.idempotents, self.idempotent_labels):
            parts = _split_idempotent_commutative_corner(self, e)
            if len(parts) == 1:
                out.append((parts[0], lab))
            else:
                out.extend((p, f"{lab}#{k}") for k, p in enumerate(parts))
        self._refined = out
        return out

    # -- projective classification ----------------------------------------

    def vertex_classes(self):
        """Isomorphism classes of the indecomposable projectives e_iA.

        Two primitive idempotents give isomorphic projectives iff the
        corner between their images in A/rad is nonzero; an explicit pair
        of mutually inverse corner elements is exhibited for each match.
        """
        if self._classes is not None:
            return self._classes
        refined = self.refined_idempotents()
        quotient, project, _ = self.semisimple_quotient()
        n = len(refined)
        reps: list[int] = []
        assignment = [-1] * n
        certificates = {}
        for i in range(n):
            ei = refined[i][0]
            matched = None
            for rep in reps:
                ej = refined[rep][0]
                phi = self._iso_witness(ej, ei, quotient, project)
                if phi is not None:
                    matched = rep
                    certificates[(rep, i)] = phi
                    break
            if matched is None:
                reps.append(i)
                assignment[i] = i
            else:
                assignment[i] = matched
        classes = []
        for rep in reps:
            members = [i for i in range(n) if assignment[i] == rep]
            classes.append(
                {
                    "representative": rep,
                    "idempotent": refined[rep][0],
                    "labels": [refined[i][1] for i in members],
                    "multiplicity": len(members),
                }
            )
        self._classes = (classes, refined, certificates)
        return self._classes

    def _iso_witness(self, e, e2, quotient, project):
        """Mutually inverse (phi, psi), phi in e A e2, psi in e2 A e, with
        phi*psi = e and psi*phi = e2; None if the projectives differ."""
        f = self.field
        dim_e = len(self.corner_basis(e, self.unit))
        dim_e2 = len(self.corner_basis(e2, self.unit))
        if dim_e != dim_e2:
            return None
        corner = self.corner_basis(e, e2)
        candidates = [phi for phi in corner if any(not f.is_zero(c) for c in project(phi))]
        if not candidates:
            return None
        rng = random.Random(self.seed * 3000017 + 7)
        extra = []
        for _ in range(ISO_RANDOM_TRIALS):
            coeffs = (
                [f.of(rng.randrange(f.p)) for _ in corner]
                if f.kind == PRIME
                else [f.of(rng.randint(-2, 2)) for _ in corner]
            )
            v = [f.zero()] * self.dim
            for c, row in zip(coeffs, corner):
                if not f.is_zero(c):
                    v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
            extra.append(v)
        back = self.corner_basis(e2, e)
        for phi in candidates + extra:
            psi = self._solve_inverse(phi, e, e2, back)
            if psi is not None:
                return (phi, psi)
        return None

    def _solve_inverse(self, phi, e, e2, back_basis):
        """Solve phi * psi = e, psi * phi = e2 for psi in span(back_basis)."""
        f = self.field
        if not back_basis:
            return None
        cols = []
        for w in back_basis:
            cols.append(self.mul(phi, w) + self.mul(w, phi))
        target = list(e) + list(e2)
        sol = linalg.solve_left(f, cols, target)
        if sol is None:
            return None
        psi = [f.zero()] * self.dim
        for c, w in zip(sol, back_basis):
            if not f.is_zero(c):
                psi = [f.add(a, f.mul(c, b)) for a, b in zip(psi, w)]
        return psi

    # -- numerical invariants ----------------------------------------------

    def cartan_matrix(self):
        """C[i][j] = dim e_j A e_i over class representatives."""
        classes, refined, _ = self.vertex_classes()
        reps = [cl["idempotent"] for cl in classes]
        k = len(reps)
        return [
            [len(self.corner_basis(reps[j], reps[i])) for j in range(k)]
            for i in range(k)
        ]

    def is_split(self) -> bool:
        """Whether every simple module has a one-dimensional endomorphism
        ring (class corners in the semisimple quotient are the base field)."""
        classes, _, _ = self.vertex_classes()
        quotient, project, _ = self.semisimple_quotient()
        for cl in classes:
            ebar = project(cl["idempotent"])
            if len(quotient.corner_basis(ebar, ebar)) != 1:
                return False
        return True

    def coxeter_polynomial(self):
        """Characteristic polynomial of -C^{-T} C, ascending integer
        coefficients, monic."""
        c = self.cartan_matrix()
        n = len(c)
        cf = [[Fraction(x) for x in row] for row in c]
        inv = linalg.inverse(FieldSpec.rationals(), cf)
        if inv is None:
            raise CartanSingular("Cartan matrix is singular")
        cinv_t = linalg.transpose(inv)
        m = [
            [-sum(cinv_t[i][s] * cf[s][j] for s in range(n)) for j in range(n)]
            for i in range(n)
        ]
        coeffs = linalg.charpoly_rational(m)
        out = []
        for x in coeffs:
            if x.denominator != 1:
                raise InternalCheckFailed("Coxeter polynomial is not integral")
            out.append(int(x))
        return out

    def quiver_presentation(self):
        """Vertex classes plus arrow counts dim e_j (rad/rad^2) e_i."""
        classes, refined, _ = self.vertex_classes()
        reps = [cl["idempotent"] for cl in classes]
        rad2 = self.radical_square()
        k = len(reps)
        base = linalg.SubspaceTracker(self.field, self.dim)
        base.add_many(rad2)
        rank2 = base.rank
        arrows = [[0] * k for _ in range(k)]
        rad = self.radical()
        for i in range(k):
            for j in range(k):
                tracker = linalg.SubspaceTracker(self.field, self.dim)
                tracker.add_many(rad2)
                for r in rad:
                    tracker.add(self.mul3(reps[j], r, reps[i]))
                arrows[i][j] = tracker.rank - rank2
        return QuiverPresentation(
            vertex_labels=[",".join(cl["labels"]) for cl in classes],
            multiplicities=[cl["multiplicity"] for cl in classes],
            arrows=arrows,
        )

    # -- modules -------------------------------------------------------

    def regular_module(self) -> "AlgebraModule":
        action = [self.right_mult_matrix(k) for k in range(self.dim)]
        return AlgebraModule(self, self.dim, action, check=False, label="A")

    def projective_module(self, class_index: int) -> "AlgebraModule":
        mod = self._projectives.get(class_index)
        if mod is None:
            classes, _, _ = self.vertex_classes()
            e = classes[class_index]["idempotent"]
            rows = self.corner_basis(e, self.unit)
            mod = submodule(self.regular_module(), rows, label=f"P{class_index}")
            mod.generator_rows = [list(e)]
            self._projectives[class_index] = mod
        return mod

    def simple_module(self, class_index: int) -> "AlgebraModule":
        p = self.projective_module(class_index)
        prad = p.radical_subspace().basis()
        return quotient_module(p, prad, label=f"S{class_index}")

    def dual_module_of_left(self) -> "AlgebraModule":
        """D(A) for the left regular module, as a right A-module."""
        action = [linalg.transpose(self.left_mult_matrix(k)) for k in range(self.dim)]
        return AlgebraModule(self, self.dim, action, check=True, label="D(A)l")

    def dual_module_of_right(self) -> "AlgebraModule":
        """D(A) for the right regular module, as a right A^op-module."""
        aop = self.opposite()
        action = [linalg.transpose(self.right_mult_matrix(k)) for k in range(self.dim)]
        return AlgebraModule(aop, self.dim, action, check=True, label="D(A)r")

    def __repr__(self):
        return f"FinDimAlgebra(dim={self.dim}, field={self.field})"


def sum_scalars(field: FieldSpec, items):
    acc = field.zero()
    for x in items:
        acc = field.add(acc, x)
    return acc


class QuiverPresentation:
    def __init__(self, vertex_labels, multiplicities, arrows):
        self.vertex_labels = vertex_labels
        self.multiplicities = multiplicities
        self.arrows = arrows  # arrows[i][j] = count of arrows i -> j

    @property
    def vertex_count(self):
        return len(self.vertex_labels)

    def __repr__(self):
        return f"Quiver({self.vertex_count} vertices, arrows={self.arrows})"


# ---------------------------------------------------------------------------
# commutative idempotent splitting


def _evaluate_poly_at(algebra: FinDimAlgebra, poly, z, unit):
    """Horner evaluation of a univariate polynomial at an algebra element."""
    f = algebra.field
    acc = [f.zero()] * algebra.dim
    for c in reversed(poly):
        acc = algebra.mul(acc, z)
        if not f.is_zero(c):
            acc = [f.add(a, f.mul(c, u)) for a, u in zip(acc, unit)]
    return acc


def _minimal_polynomial(algebra: FinDimAlgebra, z, unit):
    f = algebra.field
    pows = [list(unit)]
    current = list(unit)
    while True:
        current = algebra.mul(current, z)
        sol = linalg.solve_left(f, pows, current)
        if sol is not None:
            coeffs = [f.neg(c) for c in sol] + [f.one()]
            return unipoly.normalize(f, coeffs) or [f.one()]
        pows.append(list(current))


def _corner_subalgebra(algebra: FinDimAlgebra, e):
    """The corner e A e as a standalone algebra plus its embedding rows."""
    f = algebra.field
    tracker = linalg.SubspaceTracker(f, algebra.dim)
    for k in range(algebra.dim):
        tracker.add(algebra.mul3(e, algebra._basis_vector(k), e))
    rows = tracker.basis()
    d = len(rows)
    prod = {}
    for i in range(d):
        for j in range(d):
            p = algebra.mul(rows[i], rows[j])
            coords = tracker.coordinates(p)
            if coords is None:
                raise InternalCheckFailed("corner not multiplicatively closed")
            terms = [(k, c) for k, c in enumerate(coords) if not f.is_zero(c)]
            if terms:
                prod[(i, j)] = terms
    unit_coords = tracker.coordinates(list(e))
    if unit_coords is None:
        raise InternalCheckFailed("idempotent not inside its own corner")
    corner = FinDimAlgebra(
        f, d, [f"c{i}" for i in range(d)], prod, unit_coords,
        idempotents=[unit_coords], seed=algebra.seed, check=False,
    )
    return corner, rows


def _split_idempotent_commutative_corner(algebra: FinDimAlgebra, e):
    """Split a designated idempotent into primitive orthogonal idempotents,
    assuming its corner algebra is commutative (true for all algebras built
    here: diagonal corners are graded slices of a commutative ring)."""
    f = algebra.field
    corner, rows = _corner_subalgebra(algebra, e)
    if corner.dim == 1:
        return [list(e)]
    for i in range(corner.dim):
        for j in range(i + 1, corner.dim):
            bi = corner._basis_vector(i)
            bj = corner._basis_vector(j)
            if corner.mul(bi, bj) != corner.mul(bj, bi):
                raise InternalCheckFailed("corner algebra is not commutative")
    prims_corner = _primitive_idempotents_commutative(corner)
    out = []
    for vec in prims_corner:
        amb = [f.zero()] * algebra.dim
        for c, row in zip(vec, rows):
            if not f.is_zero(c):
                amb = [f.add(a, f.mul(c, b)) for a, b in zip(amb, row)]
        out.append(amb)
    return out


def _primitive_idempotents_commutative(c: FinDimAlgebra):
    """Complete set of primitive orthogonal idempotents of a commutative
    algebra: split the semisimple quotient, then Newton-lift."""
    f = c.field
    if c.dim == 1:
        return [list(c.unit)]
    cbar, project, lift = c.semisimple_quotient()
    bar_prims = _split_semisimple_commutative(cbar)
    if len(bar_prims) == 1:
        return [list(c.unit)]
    lifted = []
    for ebar in bar_prims:
        v = lift(ebar)
        # Newton iteration: converges because the radical is nilpotent
        for _ in range(c.dim + 2):
            sq = c.mul(v, v)
            if sq == v:
                break
            v = [f.sub(f.mul(f.of(3), a), f.mul(f.of(2), b))
                 for a, b in zip(sq, c.mul(sq, v))]
        else:
            raise InternalCheckFailed("idempotent lifting did not converge")
        lifted.append(v)
    total = [f.zero()] * c.dim
    for v in lifted:
        total = [f.add(a, b) for a, b in zip(total, v)]
    if total != list(c.unit):
        raise InternalCheckFailed("lifted idempotents do not sum to the unit")
    for i in range(len(lifted)):
        for j in range(i + 1, len(lifted)):
            if any(not f.is_zero(x) for x in c.mul(lifted[i], lifted[j])):
                raise InternalCheckFailed("lifted idempotents not orthogonal")
    return lifted


def _split_semisimple_commutative(b: FinDimAlgebra):
    """Primitive idempotents of a commutative semisimple algebra."""
    f = b.field
    if b.dim == 1:
        return [list(b.unit)]
    if f.kind == PRIME:
        return _split_semisimple_frobenius(b)
    return _split_semisimple_rational(b)


def _split_semisimple_frobenius(b: FinDimAlgebra):
    """Over F_p the fixed space of x -> x^p has dimension equal to the
    number of simple factors, and any non-scalar fixed element has a
    squarefree minimal polynomial that splits into distinct linear factors."""
    f = b.field
    p = f.p
    frob_rows = []
    for k in range(b.dim):
        v = b._basis_vector(k)
        acc = list(b.unit)
        base = list(v)
        e = p
        while e:
            if e & 1:
                acc = b.mul(acc, base)
            base = b.mul(base, base)
            e >>= 1
        frob_rows.append(acc)
    delta = [
        [f.sub(frob_rows[i][t], f.one() if i == t else f.zero()) for t in range(b.dim)]
        for i in range(b.dim)
    ]
    fixed = linalg.left_nullspace(f, delta)
    if len(fixed) <= 1:
        return [list(b.unit)]
    unit_tracker = linalg.SubspaceTracker(f, b.dim)
    unit_tracker.add(list(b.unit))
    z = next(v for v in fixed if not unit_tracker.contains(v))
    m = _minimal_polynomial(b, z, list(b.unit))
    _, factors = unipoly.factor(f, m, seed=b.seed)
    idems = _crt_idempotents(b, z, m, factors)
    out = []
    for e in idems:
        sub, rows = _slice_algebra(b, e)
        for vec in _split_semisimple_commutative(sub):
            out.append(_unslice(f, b.dim, vec, rows))
    return out


def _split_semisimple_rational(b: FinDimAlgebra):
    """Rational case: sweep candidates until one splits or certifies."""
    f = b.field
    candidates = []
    for k in range(b.dim):
        candidates.append(b._basis_vector(k))
    for i in range(b.dim):
        for j in range(i + 1, min(b.dim, i + 5)):
            vi, vj = b._basis_vector(i), b._basis_vector(j)
            candidates.append([f.add(a, c) for a, c in zip(vi, vj)])
    for c in range(1, 9):
        v = [f.zero()] * b.dim
        scale = f.one()
        for k in range(b.dim):
            bk = b._basis_vector(k)
            v = [f.add(a, f.mul(scale, x)) for a, x in zip(v, bk)]
            scale = f.mul(scale, f.of(c))
        candidates.append(v)
    failure = None
    for z in candidates:
        m = _minimal_polynomial(b, z, list(b.unit))
        try:
            _, factors = unipoly.factor(f, m, seed=b.seed)
        except UnsupportedFactorization as exc:
            failure = exc
            continue
        if len(factors) >= 2:
            idems = _crt_idempotents(b, z, m, factors)
            out = []
            for e in idems:
                sub, rows = _slice_algebra(b, e)
                for vec in _split_semisimple_commutative(sub):
                    out.append(_unslice(f, b.dim, vec, rows))
            return out
        if factors[0][1] == 1 and unipoly.degree(factors[0][0]) == b.dim:
            return [list(b.unit)]  # a field: irreducible minimal polynomial of full degree
    if failure is not None:
        raise failure
    raise UnsupportedFactorization(
        "could not certify a rational corner as local after the candidate sweep"
    )


def _crt_idempotents(b: FinDimAlgebra, z, m, factors):
    """Orthogonal idempotents from a factored minimal polynomial of z."""
    f = b.field
    idems = []
    for g, mult in factors:
        ge = g
        for _ in range(mult - 1):
            ge = unipoly.mul(f, ge, g)
        rest = unipoly.exact_div(f, m, ge)
        _, s, _ = unipoly.extended_gcd(f, rest, ge)
        poly = unipoly.mod(f, unipoly.mul(f, s, rest), m)
        e = _evaluate_poly_at(b, poly, z, list(b.unit))
        idems.append(e)
    total = [f.zero()] * b.dim
    for e in idems:
        if b.mul(e, e) != e:
            raise InternalCheckFailed("splitting produced a non-idempotent")
        total = [f.add(a, c) for a, c in zip(total, e)]
    if total != list(b.unit):
        raise InternalCheckFailed("splitting idempotents do not sum to the unit")
    return idems


def _slice_algebra(b: FinDimAlgebra, e):
    """The ideal slice e*b of a commutative algebra as a standalone algebra."""
    f = b.field
    tracker = linalg.SubspaceTracker(f, b.dim)
    for k in range(b.dim):
        tracker.add(b.mul(e, b._basis_vector(k)))
    rows = tracker.basis()
    d = len(rows)
    prod = {}
    for i in range(d):
        for j in range(d):
            coords = tracker.coordinates(b.mul(rows[i], rows[j]))
            if coords is None:
                raise InternalCheckFailed("slice not closed under products")
            terms = [(k, c) for k, c in enumerate(coords) if not f.is_zero(c)]
            if terms:
                prod[(i, j)] = terms
    unit_coords = tracker.coordinates(list(e))
    sub = FinDimAlgebra(
        f, d, [f"s{i}" for i in range(d)], prod, unit_coords,
        idempotents=[unit_coords], seed=b.seed, check=False,
    )
    return sub, rows


def _unslice(field: FieldSpec, ambient_dim, vec, rows):
    out = [field.zero()] * ambient_dim
    for c, row in zip(vec, rows):
        if not field.is_zero(c):
            out = [field.add(a, field.mul(c, x)) for a, x in zip(out, row)]
    return out


# ---------------------------------------------------------------------------
# modules


class AlgebraModule:
    """Right module over a FinDimAlgebra; row vectors, one action matrix
    per algebra basis element."""

    def __init__(self, algebra: FinDimAlgebra, dim: int, action, check=True, label=""):
        self.algebra = algebra
        self.dim = dim
        self.action = action
        self.label = label
        self.basis_rows = None  # ambient rows when built as a submodule
        self._ambient = None
        self.generator_rows = None
        if check:
            self._verify()

    def _verify(self):
        a = self.algebra
        f = a.field
        if self.dim == 0:
            return
        # unit acts as the identity
        uact = self.act_matrix(a.unit)
        if uact != linalg.identity(f, self.dim):
            raise InternalCheckFailed(f"unit does not act as identity on {self.label}")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = linalg.mat_mul(f, self.action[i], self.action[j])
                rhs = [[f.zero()] * self.dim for _ in range(self.dim)]
                for k, c in a.products.get((i, j), []):
                    mk = self.action[k]
                    for s in range(self.dim):
                        row = mk[s]
                        orow = rhs[s]
                        for t in range(self.dim):
                            if not f.is_zero(row[t]):
                                orow[t] = f.add(orow[t], f.mul(c, row[t]))
                if lhs != rhs:
                    raise InternalCheckFailed(
                        f"module action violates structure constants on {self.label}"
                    )

    def act_matrix(self, elem):
        f = self.algebra.field
        out = [[f.zero()] * self.dim for _ in range(self.dim)]
        for k, c in enumerate(elem):
            if f.is_zero(c):
                continue
            mk = self.action[k]
            for s in range(self.dim):
                row = mk[s]
                orow = out[s]
                for t in range(self.dim):
                    if not f.is_zero(row[t]):
                        orow[t] = f.add(orow[t], f.mul(c, row[t]))
        return out

    def act(self, v, elem):
        return linalg.mat_vec(self.algebra.field, v, self.act_matrix(elem)) if self.dim else []

    def radical_subspace(self):
        """Rows spanning M * rad(A)."""
        f = self.algebra.field
        rad = self.algebra.radical()
        tracker = linalg.SubspaceTracker(f, self.dim)
        for r in rad:
            m = self.act_matrix(r)
            for s in range(self.dim):
                tracker.add(m[s])
        return tracker

    def ambient_coords(self, ambient_row):
        """Coordinates w.r.t. basis_rows for submodules; None if outside."""
        if self._ambient is None:
            raise ValueError("not a submodule view")
        return self._ambient.coordinates(ambient_row)

    def is_zero_module(self):
        return self.dim == 0

    def __repr__(self):
        return f"AlgebraModule({self.label or '?'}, dim={self.dim})"


def submodule(parent: AlgebraModule, rows, label="") -> AlgebraModule:
    """Submodule spanned by the given ambient rows (must be action-stable)."""
    a = parent.algebra
    f = a.field
    tracker = linalg.SubspaceTracker(f, parent.dim)
    tracker.add_many(rows)
    basis = tracker.basis()
    d = len(basis)
    action = []
    for k in range(a.dim):
        mk = parent.action[k]
        images = linalg.mat_mul(f, basis, mk) if basis and mk else []
        mat = []
        for img in images:
            coords = tracker.coordinates(img)
            if coords is None:
                raise InternalCheckFailed("submodule rows are not action-stable")
            mat.append(coords)
        action.append(mat)
    mod = AlgebraModule(a, d, action, check=False, label=label)
    mod.basis_rows = basis
    mod._ambient = tracker
    return mod


def quotient_module(parent: AlgebraModule, sub_rows, label="") -> AlgebraModule:
    a = parent.algebra
    f = a.field
    tracker = linalg.SubspaceTracker(f, parent.dim)
    tracker.add_many(sub_rows)
    rref_rows, pivots = (tracker.rows, tracker.pivots)
    complement = [c for c in range(parent.dim) if c not in pivots]

    def project(v):
        v = list(v)
        for row, pc in zip(rref_rows, pivots):
            c = v[pc]
            if not f.is_zero(c):
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return [v[c] for c in complement]

    d = len(complement)
    action = []
    for k in range(a.dim):
        mk = parent.action[k]
        mat = []
        for c in complement:
            mat.append(project(mk[c]))
        action.append(mat)
    mod = AlgebraModule(a, d, action, check=False, label=label)
    return mod


def direct_sum(modules: list[AlgebraModule], label="") -> AlgebraModule:
    if not modules:
        raise ValueError("empty direct sum")
    a = modules[0].algebra
    f = a.field
    total = sum(m.dim for m in modules)
    action = []
    for k in range(a.dim):
        mat = [[f.zero()] * total for _ in range(total)]
        off = 0
        for m in modules:
            mk = m.action[k]
            for s in range(m.dim):
                for t in range(m.dim):
                    mat[off + s][off + t] = mk[s][t]
            off += m.dim
        action.append(mat)
    return AlgebraModule(a, total, action, check=False, label=label)


# ---------------------------------------------------------------------------
# projective covers and resolutions


def projective_cover(algebra: FinDimAlgebra, module: AlgebraModule):
    """Minimal projective cover.

    Returns (cover module, class multiset as list of class indices, pi)
    where pi is the matrix of the cover map (rows = cover basis).
    Generators are chosen greedily against the radical subspace, which
    keeps the cover minimal: each accepted generator is independent in
    the top of the module.  A generator found through the idempotent e
    contributes a copy of eA itself (isomorphic to its class
    representative), so the cover map is just right multiplication.
    """
    a = algebra
    f = a.field
    if module.dim == 0:
        empty = AlgebraModule(a, 0, [[] for _ in range(a.dim)], check=False, label="0")
        return empty, [], []
    classes, refined, _ = a.vertex_classes()
    class_of_refined = {}
    for ci, cl in enumerate(classes):
        for lab in cl["labels"]:
            class_of_refined[lab] = ci
    radspace = module.radical_subspace()
    chosen: list[tuple[int, int, list]] = []  # (class index, refined index, generator)
    covered = linalg.SubspaceTracker(f, module.dim)
    covered.add_many(radspace.basis())
    for ridx, (e, lab) in enumerate(refined):
        if covered.rank == module.dim:
            break
        img = module.act_matrix(e)
        for s in range(module.dim):
            v = img[s]
            if covered.contains(v):
                continue
            chosen.append((class_of_refined[lab], ridx, v))
            fresh = [v]
            covered.add(v)
            while fresh:
                batch = []
                for k in range(a.dim):
                    mk = module.action[k]
                    if mk:
                        batch.extend(linalg.mat_mul(f, fresh, mk))
                fresh = [u for u in batch if covered.add(u)]
    if covered.rank != module.dim:
        raise InternalCheckFailed("projective cover failed to reach the module")
    parts = [_projective_for_refined(a, ridx) for _, ridx, _ in chosen]
    cover = direct_sum(parts, label="P(" + (module.label or "?") + ")")
    pi = []
    for (part, (_, _, gen)) in zip(parts, chosen):
        for row in part.basis_rows:
            # row is an element of e * A in ambient algebra coordinates
            out = [f.zero()] * module.dim
            for k, c in enumerate(row):
                if f.is_zero(c):
                    continue
                img = linalg.mat_vec(f, gen, module.action[k])
                out = [f.add(x, f.mul(c, y)) for x, y in zip(out, img)]
            pi.append(out)
    # minimality: the kernel must lie inside cover * rad
    kernel = linalg.left_nullspace(f, pi)
    cover_rad = cover.radical_subspace()
    for row in kernel:
        if not cover_rad.contains(row):
            raise InternalCheckFailed("cover is not minimal: kernel escapes the radical")
    return cover, [ci for ci, _, _ in chosen], pi


def _projective_for_refined(a: FinDimAlgebra, ridx: int) -> AlgebraModule:
    cache = getattr(a, "_refined_projectives", None)
    if cache is None:
        cache = {}
        a._refined_projectives = cache
    mod = cache.get(ridx)
    if mod is None:
        e, lab = a.refined_idempotents()[ridx]
        rows = a.corner_basis(e, a.unit)
        mod = submodule(a.regular_module(), rows, label=f"P[{lab}]")
        cache[ridx] = mod
    return mod


def hom_space(m: AlgebraModule, n: AlgebraModule):
    """Basis of Hom_A(M, N) as dimM x dimN matrices (row convention)."""
    a = m.algebra
    f = a.field
    if m.dim == 0 or n.dim == 0:
        return []
    gens = _generator_indices(a)
    rows = []
    nm, nn = m.dim, n.dim
    for k in gens:
        am = m.action[k]
        an = n.action[k]
        # constraint: am @ F - F @ an = 0 for unknown F
        for s in range(nm):
            for t in range(nn):
                row = [f.zero()] * (nm * nn)
                for u in range(nm):
                    if not f.is_zero(am[s][u]):
                        row[u * nn + t] = f.add(row[u * nn + t], am[s][u])
                for v in range(nn):
                    if not f.is_zero(an[v][t]):
                        idx = s * nn + v
                        row[idx] = f.sub(row[idx], an[v][t])
                rows.append(row)
    basis = linalg.right_nullspace(f, rows) if rows else []
    out = []
    for flat in basis:
        out.append([flat[s * nn:(s + 1) * nn] for s in range(nm)])
    return out


def _generator_indices(a: FinDimAlgebra):
    """Indices of basis elements generating A as an algebra is hard to pin
    down cheaply; constraints on every basis element are only needed for
    generators, but using the full basis stays correct."""
    return list(range(a.dim))


def modules_isomorphic(m: AlgebraModule, n: AlgebraModule, seed=DEFAULT_SEED):
    """(True, F) with invertible module map, (False, None) if dimensions
    rule it out, or (None, None) when the invertible-combination search
    fails (search-negative)."""
    a = m.algebra
    f = a.field
    if m.dim != n.dim:
        return (False, None)
    if m.dim == 0:
        return (True, [])
    for e in a.refined_idempotent_vectors():
        if linalg.rank(f, m.act_matrix(e)) != linalg.rank(f, n.act_matrix(e)):
            return (False, None)
    homs = hom_space(m, n)
    if not homs:
        return (False, None)
    rng = random.Random(seed * 5000011 + m.dim)
    for _ in range(ISO_RANDOM_TRIALS):
        coeffs = (
            [f.of(rng.randrange(f.p)) for _ in homs]
            if f.kind == PRIME
            else [f.of(rng.randint(-2, 2)) for _ in homs]
        )
        cand = _combine_mats(f, homs, coeffs, m.dim, n.dim)
        if linalg.inverse(f, cand) is not None:
            return (True, cand)
    if len(homs) <= 8:
        for pattern in itertools.product((0, 1, -1), repeat=len(homs)):
            coeffs = [f.of(c) for c in pattern]
            cand = _combine_mats(f, homs, coeffs, m.dim, n.dim)
            if linalg.inverse(f, cand) is not None:
                return (True, cand)
    return (None, None)


def _combine_mats(f, mats, coeffs, nr, nc):
    out = [[f.zero()] * nc for _ in range(nr)]
    for c, mat in zip(coeffs, mats):
        if f.is_zero(c):
            continue
        for s in range(nr):
            for t in range(nc):
                if not f.is_zero(mat[s][t]):
                    out[s][t] = f.add(out[s][t], f.mul(c, mat[s][t]))
    return out


class ResolutionResult:
    """Outcome of a minimal projective resolution computation."""

    def __init__(self, verdict, value, steps, note=""):
        self.verdict = verdict  # "finite" | "infinite" | "unknown"
        self.value = value      # projdim for finite, None otherwise
        self.steps = steps      # list of class-index lists, one per cover
        self.note = note

    def __repr__(self):
        return f"Resolution({self.verdict}, value={self.value}, steps={self.steps})"


def minimal_resolution(algebra: FinDimAlgebra, module: AlgebraModule, length: int | None = None):
    """Iterate minimal projective covers up to the given length.

    The verdict is "finite" with the projective dimension, "infinite"
    when some syzygy is isomorphic (explicit isomorphism found) to an
    earlier one, or "unknown" past the cutoff.
    """
    if length is None:
        length = algebra.dim + 2
    current = module
    seen: list[tuple[int, AlgebraModule]] = [(0, module)]
    steps = []
    unknown_iso = False
    for s in range(length + 1):
        if current.dim == 0:
            return ResolutionResult("finite", s - 1, steps)
        cover, classes, pi = projective_cover(algebra, current)
        steps.append(sorted(classes))
        kernel_rows = linalg.left_nullspace(algebra.field, pi) if pi else []
        syzygy = submodule(cover, kernel_rows, label=f"O{s + 1}({module.label})") \
            if kernel_rows else AlgebraModule(algebra, 0, [[] for _ in range(algebra.dim)],
                                              check=False, label="0")
        if syzygy.dim > 0 and syzygy.dim <= 40:
            for (t, old) in seen:
                if old.dim != syzygy.dim:
                    continue
                iso, _ = modules_isomorphic(old, syzygy, seed=algebra.seed)
                if iso is True:
                    return ResolutionResult(
                        "infinite", None, steps,
                        note=f"syzygy at step {s + 1} isomorphic to step {t}",
                    )
                if iso is None:
                    unknown_iso = True
        seen.append((s + 1, syzygy))
        current = syzygy
    note = "cutoff reached" + ("; an isomorphism search was inconclusive" if unknown_iso else "")
    return ResolutionResult("unknown", None, steps, note=note)


def global_dimension(algebra: FinDimAlgebra, length: int | None = None):
    """Max projective dimension over the simple modules."""
    classes, _, _ = algebra.vertex_classes()
    worst = ("finite", 0)
    for ci in range(len(classes)):
        s = algebra.simple_module(ci)
        res = minimal_resolution(algebra, s, length)
        if res.verdict == "infinite":
            return ResolutionResult("infinite", None, res.steps, note=f"simple {ci}: {res.note}")
        if res.verdict == "unknown":
            worst = ("unknown", None)
        elif worst[0] == "finite":
            worst = ("finite", max(worst[1], res.value))
    return ResolutionResult(worst[0], worst[1], [])


def is_projective(algebra: FinDimAlgebra, module: AlgebraModule) -> bool:
    if module.dim == 0:
        return True
    _, _, pi = projective_cover(algebra, module)
    return not linalg.left_nullspace(algebra.field, pi)


def self_injective(algebra: FinDimAlgebra) -> bool:
    """The dual of the regular module is projective on both sides."""
    d_left = algebra.dual_module_of_left()
    if not is_projective(algebra, d_left):
        return False
    aop = algebra.opposite()
    d_right_raw = algebra.dual_module_of_right()
    d_right = AlgebraModule(aop, d_right_raw.dim, d_right_raw.action, check=False,
                            label=d_right_raw.label)
    return is_projective(aop, d_right)


def injective_dimension(algebra: FinDimAlgebra, length: int | None = None):
    """(right verdict, left verdict): injective dimensions of the regular
    module on each side, computed as projective dimensions of the duals."""
    aop = algebra.opposite()
    d_right_raw = algebra.dual_module_of_right()
    d_right = AlgebraModule(aop, d_right_raw.dim, d_right_raw.action, check=False,
                            label="D(A)r")
    right = minimal_resolution(aop, d_right, length)
    d_left = algebra.dual_module_of_left()
    left = minimal_resolution(algebra, d_left, length)
    return right, left

"""The graded total quotient ring K of a one-dimensional hypersurface ring.

For a homogeneous non-zero-divisor r of positive degree, K is R with r
inverted, and multiplication by r is a bijection between graded pieces of
R strictly above the a-invariant.  Each K_i is therefore represented by
the slice R_{i + N*dr} for the minimal N >= 0 pushing the degree past a;
no factorization of f is ever needed.
"""

from __future__ import annotations

import itertools
import math
import random

from . import linalg
from .errors import InternalCheckFailed, NoNzdFound, PeriodNotFound
from .fields import PRIME
from .ring import GradedRing, RingElement

DEFAULT_SEED = 1
_RANDOM_UNIT_TRIALS = 200


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def choose_nzd(ring: GradedRing) -> RingElement:
    """Deterministic scan for a homogeneous non-zero-divisor: x, then y,
    then x^(L/wx) + c * y^(L/wy) for L = lcm(wx, wy) and c = 1, 2, ...."""
    x = ring.x()
    if not x.is_zero() and ring.is_nonzerodivisor(x):
        return x
    y = ring.y()
    if not y.is_zero() and ring.is_nonzerodivisor(y):
        return y
    lcm = math.lcm(ring.wx, ring.wy)
    ex, ey = lcm // ring.wx, lcm // ring.wy
    field = ring.field
    cap = min(field.p - 1, 100) if field.kind == PRIME else 100
    for c in range(1, cap + 1):
        cand = ring.element_from_poly(
            {(ex, 0): field.one(), (0, ey): field.of(c)}, lcm
        )
        if not cand.is_zero() and ring.is_nonzerodivisor(cand):
            return cand
    raise NoNzdFound(
        f"no non-zero-divisor among x, y, x^{ex}+c*y^{ey} for c <= {cap}"
    )


def a_invariant(ring: GradedRing, r: RingElement | None = None) -> int:
    """Closed form n - wx - wy, cross-checked against the stabilization of
    graded dimensions under multiplication by a non-zero-divisor."""
    a = ring.n - ring.wx - ring.wy
    if r is None:
        r = choose_nzd(ring)
    dr = r.degree
    # above a, multiplication by r must be a bijection degreewise
    for d in range(a + 1, a + 2 * ring.n + dr + 1):
        if ring.dim(d) != ring.dim(d + dr):
            raise InternalCheckFailed(
                f"dim R_{d} = {ring.dim(d)} != dim R_{d + dr} = {ring.dim(d + dr)}"
            )
        if ring.dim(d) and linalg.rank(ring.field, ring.mult_matrix(r, d)) != ring.dim(d):
            raise InternalCheckFailed(f"multiplication by r not injective at degree {d}")
    # at a itself the quotient ring is strictly bigger
    stable = a + dr
    while stable <= a:  # unreachable; dr > 0
        stable += dr
    if not ring.dim(a) < ring.dim(stable):
        raise InternalCheckFailed(
            f"dim R_a = {ring.dim(a)} not smaller than stabilized dim {ring.dim(stable)}"
        )
    return a


class QuotientElement:
    """Homogeneous element of K, stored as representative / r^n_exp."""

    __slots__ = ("quotient", "degree", "n_exp", "rep")

    def __init__(self, quotient: "QuotientRing", degree: int, n_exp: int, rep: RingElement):
        self.quotient = quotient
        self.degree = degree
        self.n_exp = n_exp
        self.rep = rep
        if rep.degree != degree + n_exp * quotient.dr:
            raise ValueError("representative degree mismatch")

    @property
    def coords(self):
        return self.rep.coords

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __add__(self, other: "QuotientElement") -> "QuotientElement":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return QuotientElement(self.quotient, self.degree, self.n_exp, self.rep + other.rep)

    def scaled(self, c) -> "QuotientElement":
        return QuotientElement(self.quotient, self.degree, self.n_exp, self.rep.scaled(c))

    def __mul__(self, other: "QuotientElement") -> "QuotientElement":
        return self.quotient.multiply(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, QuotientElement)
            and self.quotient is other.quotient
            and self.degree == other.degree
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash((self.degree, self.rep))

    def __repr__(self):
        return f"<{self.rep!r} / r^{self.n_exp} : K_{self.degree}>"


class ComponentData:
    """One ring-indecomposable factor of K."""

    __slots__ = ("index", "idempotent", "p_i", "local_dim")

    def __init__(self, index: int, idempotent: QuotientElement, p_i: int, local_dim: int):
        self.index = index
        self.idempotent = idempotent
        self.p_i = p_i
        self.local_dim = local_dim

    def __repr__(self):
        return f"ComponentData(index={self.index}, p_i={self.p_i}, local_dim={self.local_dim})"


class QuotientRing:
    """Graded total quotient ring data: a-invariant, period, components."""

    def __init__(
        self,
        ring: GradedRing,
        r: RingElement | None = None,
        seed: int = DEFAULT_SEED,
        eager: bool = True,
    ):
        self.ring = ring
        self.field = ring.field
        self.r = r if r is not None else choose_nzd(ring)
        self.dr = self.r.degree
        self.seed = seed
        self.a = a_invariant(ring, self.r)
        self._mult_r: dict[int, list] = {}
        self._mult_r_inv: dict[int, list] = {}
        self._basis_cache: dict[int, list[QuotientElement]] = {}
        self.p: int | None = None
        self.unit: QuotientElement | None = None
        self._components: list[ComponentData] | None = None
        if eager:
            self.period()
            self.components()

    # -- representation bookkeeping ------------------------------------

    def minimal_exp(self, i: int) -> int:
        """Smallest N >= 0 with i + N*dr > a."""
        if i > self.a:
            return 0
        return (self.a - i) // self.dr + 1

    def rep_degree(self, i: int) -> int:
        return i + self.minimal_exp(i) * self.dr

    def dim(self, i: int) -> int:
        d = self.ring.dim(self.rep_degree(i))
        # stability under one more twist by r is part of the contract
        if d != self.ring.dim(self.rep_degree(i) + self.dr):
            raise InternalCheckFailed(f"quotient dimension not stable at degree {i}")
        return d

    def basis(self, i: int) -> list[QuotientElement]:
        cached = self._basis_cache.get(i)
        if cached is not None:
            return cached
        n = self.minimal_exp(i)
        rd = self.rep_degree(i)
        out = []
        for k in range(self.ring.dim(rd)):
            coords = [self.field.zero()] * self.ring.dim(rd)
            coords[k] = self.field.one()
            out.append(QuotientElement(self, i, n, self.ring.element(rd, coords)))
        self._basis_cache[i] = out
        return out

    def element(self, i: int, coords) -> QuotientElement:
        n = self.minimal_exp(i)
        return QuotientElement(self, i, n, self.ring.element(self.rep_degree(i), coords))

    def from_ring(self, u: RingElement) -> QuotientElement:
        n = self.minimal_exp(u.degree)
        rep = u
        for _ in range(n):
            rep = self.ring.multiply(rep, self.r)
        return QuotientElement(self, u.degree, n, rep)

    def one(self) -> QuotientElement:
        return self.from_ring(self.ring.one())

    def zero(self, i: int) -> QuotientElement:
        return self.element(i, [self.field.zero()] * self.dim(i))

    # -- division by r within the stable range --------------------------

    def _mult_r_matrix(self, d: int):
        m = self._mult_r.get(d)
        if m is None:
            m = self.ring.mult_matrix(self.r, d)
            self._mult_r[d] = m
        return m

    def _divide_by_r(self, rep: RingElement) -> RingElement:
        """Unique v with v*r = rep; valid when rep.degree - dr > a."""
        src = rep.degree - self.dr
        if src <= self.a:
            raise InternalCheckFailed("division by r requested outside the stable range")
        inv = self._mult_r_inv.get(src)
        if inv is None:
            m = self._mult_r_matrix(src)
            inv = linalg.inverse(self.field, m) if m else []
            if inv is None:
                raise InternalCheckFailed(f"multiplication by r not bijective at degree {src}")
            self._mult_r_inv[src] = inv
        coords = linalg.mat_vec(self.field, list(rep.coords), inv)
        return self.ring.element(src, coords)

    def normalize(self, u: QuotientElement) -> QuotientElement:
        n_min = self.minimal_exp(u.degree)
        rep, n = u.rep, u.n_exp
        while n > n_min:
            rep = self._divide_by_r(rep)
            n -= 1
        return QuotientElement(self, u.degree, n, rep)

    # -- arithmetic ------------------------------------------------------

    def multiply(self, u: QuotientElement, v: QuotientElement) -> QuotientElement:
        rep = self.ring.multiply(u.rep, v.rep)
        raw = QuotientElement(self, u.degree + v.degree, u.n_exp + v.n_exp, rep)
        return self.normalize(raw)

    def mult_matrix(self, u: QuotientElement, i: int):
        """Matrix of multiplication by u from K_i to K_{i+deg u} (rows =
        source basis, row-vector convention)."""
        rows = []
        for b in self.basis(i):
            rows.append(list(self.multiply(b, u).coords))
        return rows

    # -- period ----------------------------------------------------------

    def _unit_candidates(self, q: int, basis_q: list[QuotientElement], rng: random.Random):
        if q == self.dr:
            yield self.from_ring(self.r)
        yield from basis_q
        if len(basis_q) > 1:
            total = basis_q[0]
            for b in basis_q[1:]:
                total = total + b
            yield total
        dim = len(basis_q)
        fld = self.field
        for _ in range(_RANDOM_UNIT_TRIALS):
            if fld.kind == PRIME:
                coeffs = [fld.of(rng.randrange(fld.p)) for _ in range(dim)]
            else:
                coeffs = [fld.of(rng.randint(-3, 3)) for _ in range(dim)]
            yield self._combine(basis_q, coeffs)
        # bounded deterministic sweep
        pool = range(0, 5) if fld.kind == PRIME else range(-2, 3)
        count = 0
        for pattern in itertools.product(pool, repeat=dim):
            count += 1
            if count > 4096:
                break
            yield self._combine(basis_q, [fld.of(c) for c in pattern])

    def _combine(self, basis_q, coeffs) -> QuotientElement:
        acc = basis_q[0].scaled(coeffs[0])
        for b, c in zip(basis_q[1:], coeffs[1:]):
            acc = acc + b.scaled(c)
        return acc

    def _is_unit(self, u: QuotientElement) -> bool:
        if u.is_zero():
            return False
        q = u.degree
        m_up = self.mult_matrix(u, 0)
        if linalg.rank(self.field, m_up) != self.dim(0):
            return False
        m_down = self.mult_matrix(u, -q)
        return linalg.rank(self.field, m_down) == self.dim(0)

    def _unit_exists_certificate(self, q: int) -> bool:
        """1 lies in the span of K_q * K_{-q} iff some combination of
        elements of K_q is invertible (a product of local graded rings has
        a unit in degree q exactly when no component annihilates it)."""
        tracker = linalg.SubspaceTracker(self.field, self.dim(0))
        for b in self.basis(q):
            for c in self.basis(-q):
                tracker.add(list(self.multiply(b, c).coords))
        return tracker.contains(list(self.one().coords))

    def unit_in_degree(self, q: int) -> QuotientElement | None:
        d0 = self.dim(0)
        if d0 == 0:
            return None
        if self.dim(q) != d0 or self.dim(-q) != d0:
            return None
        if not self._unit_exists_certificate(q):
            return None
        rng = random.Random(self.seed * 1000003 + q)
        for cand in self._unit_candidates(q, self.basis(q), rng):
            if self._is_unit(cand):
                return cand
        return None

    def period(self) -> int:
        """Smallest positive p with a unit in K_p; p divides deg r."""
        if self.p is not None:
            return self.p
        for q in divisors(self.dr):
            u = self.unit_in_degree(q)
            if u is not None:
                self.p = q
                self.unit = u
                break
        else:
            raise PeriodNotFound(
                f"no unit found in K_q for any divisor q of {self.dr}"
            )
        # graded pieces repeat with period p
        for i in range(-2 * self.ring.n, 2 * self.ring.n + 1):
            if self.dim(i) != self.dim(i + self.p):
                raise InternalCheckFailed(f"dim K_{i} != dim K_{i + self.p}")
        return self.p

    # -- ring decomposition ------------------------------------------------

    def _slice_tracker(self, e: QuotientElement, i: int) -> linalg.SubspaceTracker:
        tracker = linalg.SubspaceTracker(self.field, self.dim(i))
        for b in self.basis(i):
            tracker.add(list(self.multiply(b, e).coords))
        return tracker

    def _component_unit(self, e: QuotientElement, q: int) -> bool:
        """Does the component ring e*K contain a unit of degree q?"""
        s0 = self._slice_tracker(e, 0)
        sq = self._slice_tracker(e, q)
        sn = self._slice_tracker(e, -q)
        if not (s0.rank == sq.rank == sn.rank) or s0.rank == 0:
            return False
        # certificate: e in span of (e K_q)(e K_-q)
        tracker = linalg.SubspaceTracker(self.field, self.dim(0))
        bq = [self.element(q, row) for row in sq.basis()]
        bn = [self.element(-q, row) for row in sn.basis()]
        for b in bq:
            for c in bn:
                tracker.add(list(self.multiply(b, c).coords))
        if not tracker.contains(list(e.coords)):
            return False
        rng = random.Random(self.seed * 2000003 + q)
        for cand in self._unit_candidates(q, bq, rng):
            cand = self.multiply(cand, e)
            if cand.is_zero():
                continue
            up = [sq.coordinates(list(self.multiply(b0, cand).coords))
                  for b0 in (self.element(0, row) for row in s0.basis())]
            if any(r is None for r in up) or linalg.rank(self.field, up) != s0.rank:
                continue
            down = [s0.coordinates(list(self.multiply(bm, cand).coords))
                    for bm in bn]
            if any(r is None for r in down) or linalg.rank(self.field, down) != s0.rank:
                continue
            return True
        return False

    def components(self) -> list[ComponentData]:
        if self._components is not None:
            return self._components
        from .algebra import FinDimAlgebra

        basis0 = self.basis(0)
        d0 = len(basis0)
        prod = {}
        for i in range(d0):
            for j in range(d0):
                coords = self.multiply(basis0[i], basis0[j]).coords
                entries = [(k, c) for k, c in enumerate(coords) if not self.field.is_zero(c)]
                if entries:
                    prod[(i, j)] = entries
        unit = list(self.one().coords)
        algebra0 = FinDimAlgebra(
            self.field, d0, [f"K0[{i}]" for i in range(d0)], prod, unit,
            idempotents=[unit], idempotent_labels=["1"], seed=self.seed,
        )
        vectors = algebra0.refined_idempotent_vectors()
        idems = [self.element(0, vec) for vec in vectors]
        # deterministic order independent of the splitting path
        idems.sort(key=lambda e: tuple(str(c) for c in e.coords))
        # sanity: orthogonal decomposition of 1
        total = idems[0]
        for e in idems[1:]:
            total = total + e
        if total != self.one():
            raise InternalCheckFailed("idempotents do not sum to 1")
        for i in range(len(idems)):
            if self.multiply(idems[i], idems[i]) != idems[i]:
                raise InternalCheckFailed("non-idempotent component element")
            for j in range(i + 1, len(idems)):
                if not self.multiply(idems[i], idems[j]).is_zero():
                    raise InternalCheckFailed("components not orthogonal")
        out = []
        for idx, e in enumerate(idems, start=1):
            p_i = None
            for q in divisors(self.dr):
                if self._component_unit(e, q):
                    p_i = q
                    break
            if p_i is None:
                raise PeriodNotFound(f"component {idx} has no unit in any divisor degree")
            out.append(ComponentData(idx, e, p_i, self._slice_tracker(e, 0).rank))
        self._components = out
        return out

    # -- reporting helpers ---------------------------------------------

    def component_periods(self) -> list[int]:
        return [c.p_i for c in self.components()]

    def grothendieck_rank(self) -> int:
        return self.a + sum(self.component_periods())

    def __repr__(self):
        return (
            f"QuotientRing(a={self.a}, dr={self.dr}, p={self.p}, "
            f"m={len(self._components) if self._components else '?'})"
        )


def quotient_dim(q: QuotientRing, i: int) -> int:
    return q.dim(i)

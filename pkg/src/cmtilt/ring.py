"""Weighted-homogeneous bivariate hypersurface rings k[x,y]/(f).

A polynomial in x, y is a dict mapping exponent pairs (a, b) to nonzero
scalars.  Since (f) is principal, the single polynomial f is already a
Groebner basis for any monomial order; we fix lex with x > y, so the
monomial basis of each graded piece is "weighted degree i, not divisible
by the leading monomial of f".  That makes every per-degree computation
plain exact linear algebra.
"""

from __future__ import annotations

import re

from . import linalg
from .errors import DegreeNotPositive, NotHomogeneous, ParseError
from .fields import FieldSpec

Monomial = tuple[int, int]

_TOKEN = re.compile(r"\s*(\d+|[xy]|\^|\*|/|\+|-|\(|\))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad character at position {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for sums of monomial products.

    Grammar: expr := ['-'] term (('+'|'-') term)* ;
             term := factor (('*'|'/')? factor)* with juxtaposition as '*';
             factor := atom ['^' int] ; atom := int | x | y | '(' expr ')'.
    Division is only allowed by integer constants (rational coefficients).
    """

    def __init__(self, field: FieldSpec, tokens):
        self.field = field
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self):
        poly = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected token {self.peek()!r}")
        return poly

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = poly_neg(self.field, acc)
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            if op == "-":
                t = poly_neg(self.field, t)
            acc = poly_add(self.field, acc, t)
        return acc

    def term(self):
        acc = self.factor()
        while True:
            t = self.peek()
            if t in ("*", "/"):
                op = self.take()
                rhs = self.factor()
                if op == "/":
                    if list(rhs.keys()) != [(0, 0)]:
                        raise ParseError("division only by constants")
                    inv = self.field.inv(rhs[(0, 0)])
                    acc = poly_scale(self.field, inv, acc)
                else:
                    acc = poly_mul(self.field, acc, rhs)
            elif t is not None and (t.isdigit() or t in ("x", "y", "(")):
                acc = poly_mul(self.field, acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            t = self.take()
            if t is None or not t.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            base = poly_pow(self.field, base, int(t))
        return base

    def atom(self):
        t = self.take()
        if t is None:
            raise ParseError("unexpected end of input")
        if t.isdigit():
            return {(0, 0): self.field.of(int(t))} if int(t) != 0 else {}
        if t == "x":
            return {(1, 0): self.field.one()}
        if t == "y":
            return {(0, 1): self.field.one()}
        if t == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return inner
        if t == "-":
            return poly_neg(self.field, self.atom())
        raise ParseError(f"unexpected token {t!r}")


def parse_poly(field: FieldSpec, text: str) -> dict:
    """Parse polynomial text such as '3*x^2*y - y^3' or 'x(x-y)^2'."""
    if not text.strip():
        raise ParseError("empty polynomial")
    return _Parser(field, _tokenize(text)).parse()


# -- raw polynomial-dict arithmetic -----------------------------------------


def poly_add(field: FieldSpec, a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = field.add(out.get(m, field.zero()), c)
        if field.is_zero(s):
            out.pop(m, None)
        else:
            out[m] = s
    return out


def poly_neg(field: FieldSpec, a: dict) -> dict:
    return {m: field.neg(c) for m, c in a.items()}


def poly_scale(field: FieldSpec, c, a: dict) -> dict:
    if field.is_zero(c):
        return {}
    return {m: field.mul(c, v) for m, v in a.items()}


def poly_mul(field: FieldSpec, a: dict, b: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in a.items():
        for (a2, b2), c2 in b.items():
            m = (a1 + a2, b1 + b2)
            s = field.add(out.get(m, field.zero()), field.mul(c1, c2))
            if field.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
    return out


def poly_pow(field: FieldSpec, a: dict, e: int) -> dict:
    out = {(0, 0): field.one()}
    for _ in range(e):
        out = poly_mul(field, out, a)
    return out


def poly_to_str(field: FieldSpec, a: dict) -> str:
    if not a:
        return "0"
    parts = []
    for (ax, ay), c in sorted(a.items(), reverse=True):
        mono = "*".join(
            ([f"x^{ax}" if ax > 1 else "x"] if ax else [])
            + ([f"y^{ay}" if ay > 1 else "y"] if ay else [])
        )
        if not mono:
            parts.append(str(c))
        elif c == field.one():
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


class WeightedPoly:
    """A weighted-homogeneous polynomial together with its weights."""

    def __init__(self, field: FieldSpec, terms: dict, weights: tuple[int, int]):
        wx, wy = weights
        if wx < 1 or wy < 1:
            raise ValueError("weights must be positive integers")
        if not terms:
            raise ValueError("zero polynomial not allowed")
        degs = {a * wx + b * wy for (a, b) in terms}
        if len(degs) != 1:
            raise NotHomogeneous(
                f"terms have weighted degrees {sorted(degs)} for weights {weights}"
            )
        self.field = field
        self.terms = dict(terms)
        self.weights = (wx, wy)
        self.degree = degs.pop()

    @staticmethod
    def parse(field: FieldSpec, text: str, weights: tuple[int, int]) -> "WeightedPoly":
        return WeightedPoly(field, parse_poly(field, text), weights)

    def leading_monomial(self) -> Monomial:
        return max(self.terms)  # lex with x > y

    def __repr__(self):
        return f"WeightedPoly({poly_to_str(self.field, self.terms)}, weights={self.weights})"


class RingElement:
    """Homogeneous element of a GradedRing, stored by basis coordinates."""

    __slots__ = ("ring", "degree", "coords")

    def __init__(self, ring: "GradedRing", degree: int, coords):
        self.ring = ring
        self.degree = degree
        self.coords = tuple(coords)
        if len(self.coords) != ring.dim(degree):
            raise ValueError("coordinate length does not match the graded piece")

    def is_zero(self) -> bool:
        return all(self.ring.field.is_zero(c) for c in self.coords)

    def to_poly(self) -> dict:
        basis = self.ring.basis(self.degree)
        f = self.ring.field
        return {m: c for m, c in zip(basis, self.coords) if not f.is_zero(c)}

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.degree != other.degree or self.ring is not other.ring:
            raise ValueError("can only add elements of the same graded piece")
        f = self.ring.field
        return RingElement(
            self.ring, self.degree,
            [f.add(a, b) for a, b in zip(self.coords, other.coords)],
        )

    def scaled(self, c) -> "RingElement":
        f = self.ring.field
        return RingElement(self.ring, self.degree, [f.mul(c, v) for v in self.coords])

    def __mul__(self, other: "RingElement") -> "RingElement":
        return self.ring.multiply(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.ring is other.ring
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.degree, self.coords))

    def __repr__(self):
        return f"<{poly_to_str(self.ring.field, self.to_poly())} : deg {self.degree}>"


class GradedRing:
    """R = k[x,y]/(f) for weighted-homogeneous f, with per-degree bases."""

    def __init__(self, field: FieldSpec, f: WeightedPoly):
        if f.field != field:
            raise ValueError("field mismatch")
        if f.degree < 1:
            raise ValueError("f must not be a unit")
        self.field = field
        self.f = f
        self.wx, self.wy = f.weights
        self.n = f.degree
        self.lm = f.leading_monomial()
        self.lc = f.terms[self.lm]
        # reduction rule: lm -> -(f - lc*lm)/lc
        rest = dict(f.terms)
        rest.pop(self.lm)
        self._tail = poly_scale(field, field.neg(field.inv(self.lc)), rest)
        self._basis_cache: dict[int, list[Monomial]] = {}
        self._index_cache: dict[int, dict[Monomial, int]] = {}

    # -- monomial bases -------------------------------------------------

    def basis(self, d: int) -> list[Monomial]:
        """Monomials of weighted degree d outside (leading monomial of f),
        sorted lex-descending.  Deterministic."""
        if d < 0:
            return []
        cached = self._basis_cache.get(d)
        if cached is not None:
            return cached
        la, lb = self.lm
        out = []
        for a in range(d // self.wx, -1, -1):
            rem = d - a * self.wx
            if rem % self.wy:
                continue
            b = rem // self.wy
            if a >= la and b >= lb:
                continue
            out.append((a, b))
        self._basis_cache[d] = out
        self._index_cache[d] = {m: i for i, m in enumerate(out)}
        return out

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def ambient_dim(self, d: int) -> int:
        """Dimension of the graded piece of the free polynomial ring k[x,y]."""
        if d < 0:
            return 0
        return sum(1 for a in range(d // self.wx + 1) if (d - a * self.wx) % self.wy == 0)

    # -- normal forms ----------------------------------------------------

    def reduce(self, poly: dict) -> dict:
        """Normal form modulo f.  Terminates because each rewrite replaces a
        monomial by lex-smaller monomials of the same weighted degree."""
        la, lb = self.lm
        work = dict(poly)
        while True:
            reducible = [m for m in work if m[0] >= la and m[1] >= lb]
            if not reducible:
                return work
            m = max(reducible)
            c = work.pop(m)
            cof = (m[0] - la, m[1] - lb)
            for tm, tc in self._tail.items():
                key = (tm[0] + cof[0], tm[1] + cof[1])
                s = self.field.add(work.get(key, self.field.zero()), self.field.mul(c, tc))
                if self.field.is_zero(s):
                    work.pop(key, None)
                else:
                    work[key] = s

    def element_from_poly(self, poly: dict, degree: int | None = None) -> RingElement:
        nf = self.reduce(poly)
        if degree is None:
            degs = {a * self.wx + b * self.wy for (a, b) in nf}
            if len(degs) > 1:
                raise NotHomogeneous(f"degrees {sorted(degs)} in one element")
            degree = degs.pop() if degs else 0
        coords = [self.field.zero()] * self.dim(degree)
        for m, c in nf.items():
            coords[self._index_cache[degree][m]] = c
        return RingElement(self, degree, coords)

    def element(self, degree: int, coords) -> RingElement:
        return RingElement(self, degree, coords)

    def zero_element(self, degree: int) -> RingElement:
        return RingElement(self, degree, [self.field.zero()] * self.dim(degree))

    def one(self) -> RingElement:
        return self.element_from_poly({(0, 0): self.field.one()}, 0)

    def x(self) -> RingElement:
        return self.element_from_poly({(1, 0): self.field.one()}, self.wx)

    def y(self) -> RingElement:
        return self.element_from_poly({(0, 1): self.field.one()}, self.wy)

    def monomial_element(self, a: int, b: int) -> RingElement:
        return self.element_from_poly({(a, b): self.field.one()})

    # -- multiplication ---------------------------------------------------

    def multiply(self, u: RingElement, v: RingElement) -> RingElement:
        if u.ring is not self or v.ring is not self:
            raise ValueError("elements of a different ring")
        prod = poly_mul(self.field, u.to_poly(), v.to_poly())
        return self.element_from_poly(prod, u.degree + v.degree)

    def mult_matrix(self, r: RingElement, d: int):
        """Matrix of multiplication by r from degree d to d + deg r
        (rows indexed by the source basis; row convention)."""
        target = d + r.degree
        rows = []
        for m in self.basis(d):
            prod = self.reduce(poly_mul(self.field, {m: self.field.one()}, r.to_poly()))
            row = [self.field.zero()] * self.dim(target)
            for mm, c in prod.items():
                row[self._index_cache[target][mm]] = c
            rows.append(row)
        return rows

    # -- zero-divisor certification ----------------------------------------

    def is_nonzerodivisor(self, r: RingElement) -> bool:
        """Certified test: multiplication by r is injective on every graded
        piece up to the bound 2n + wx + wy + deg r.  A zero-divisor has
        annihilator containing a nonzero ideal with elements in every
        sufficiently large degree below that bound."""
        if r.degree <= 0:
            raise DegreeNotPositive(f"degree {r.degree} element given")
        bound = 2 * self.n + self.wx + self.wy + r.degree
        for d in range(bound + 1):
            if self.dim(d) == 0:
                continue
            m = self.mult_matrix(r, d)
            if linalg.rank(self.field, m) < self.dim(d):
                return False
        return True

    def __repr__(self):
        return (
            f"GradedRing({self.field}, f={poly_to_str(self.field, self.f.terms)}, "
            f"weights=({self.wx},{self.wy}))"
        )


def squarefree_bivariate(field: FieldSpec, poly: WeightedPoly) -> bool:
    """Squarefreeness of a weighted-homogeneous polynomial.

    Pull out the monomial content x^s y^t, then dehomogenize the core at
    y = 1 and at x = 1.  A square factor of the core survives into both
    images, so one squarefree image certifies squarefreeness; conversely
    distinct irreducible weighted-homogeneous factors stay coprime under
    either substitution (their resultant is a single monomial in the
    remaining variable), so a squarefree core yields a squarefree image
    whenever the relevant partial derivative does not vanish identically.
    """
    from . import unipoly

    s = min(a for (a, b) in poly.terms)
    t = min(b for (a, b) in poly.terms)
    if s > 1 or t > 1:
        return False
    core = {(a - s, b - t): c for (a, b), c in poly.terms.items()}
    if len(core) == 1:
        return True  # bare monomial core means f = x^s y^t
    deg_x = max(a for (a, b) in core)
    u1 = [field.zero()] * (deg_x + 1)
    for (a, b), c in core.items():
        u1[a] = c
    deg_y = max(b for (a, b) in core)
    u2 = [field.zero()] * (deg_y + 1)
    for (a, b), c in core.items():
        u2[b] = c
    u1 = unipoly.normalize(field, u1)
    u2 = unipoly.normalize(field, u2)
    return unipoly.is_squarefree(field, u1) or unipoly.is_squarefree(field, u2)

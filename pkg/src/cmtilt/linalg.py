"""Exact linear algebra over a FieldSpec.

Matrices are lists of lists of scalars (rows).  Over a prime field the
heavy routines convert to int64 numpy arrays and run vectorized modular
Gaussian elimination; over the rationals everything stays in Fractions.
Row-vector convention throughout: a linear map sends ``v`` to ``v @ M``.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .fields import PRIME, FieldSpec


def zeros(field: FieldSpec, rows: int, cols: int):
    z = field.zero()
    return [[z] * cols for _ in range(rows)]


def identity(field: FieldSpec, n: int):
    m = zeros(field, n, n)
    one = field.one()
    for i in range(n):
        m[i][i] = one
    return m


def mat_mul(field: FieldSpec, a, b):
    if not a or not b:
        return []
    if field.kind == PRIME:
        p = field.p
        aa = np.array(a, dtype=np.int64)
        bb = np.array(b, dtype=np.int64)
        # block the contraction so entries stay far below 2**63
        out = np.zeros((aa.shape[0], bb.shape[1]), dtype=np.int64)
        step = max(1, (1 << 62) // (p * p * max(1, bb.shape[0])))
        for s in range(0, aa.shape[1], step):
            out = (out + aa[:, s:s + step] @ bb[s:s + step, :]) % p
        return out.tolist()
    n, k, m = len(a), len(b), len(b[0])
    out = [[field.zero()] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(k):
            c = ai[j]
            if c == 0:
                continue
            bj = b[j]
            for l in range(m):
                if bj[l] != 0:
                    oi[l] += c * bj[l]
    return out


def mat_vec(field: FieldSpec, v, m):
    """Row vector times matrix."""
    return mat_mul(field, [list(v)], m)[0] if m else []


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def _rref_mod(a: np.ndarray, p: int, reduced: bool = True):
    """Row echelon mod p with updates restricted to rows that actually
    have a nonzero entry in the pivot column (the matrices here are
    mostly sparse and banded)."""
    a = a % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        arow = a[r] * pow(int(a[r, c]), p - 2, p) % p
        a[r] = arow
        below = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], arow)) % p
        if reduced and r:
            above = np.nonzero(a[:r, c])[0]
            if above.size:
                a[above] = (a[above] - np.outer(a[above, c], arow)) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_frac(a):
    a = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(a), len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(field: FieldSpec, a):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    if not a or not a[0]:
        return [list(row) for row in a], []
    if field.kind == PRIME:
        m, piv = _rref_mod(np.array(a, dtype=np.int64), field.p)
        return m.tolist(), piv
    return _rref_frac(a)


def rank(field: FieldSpec, a) -> int:
    if not a or not a[0]:
        return 0
    if field.kind == PRIME:
        return len(_rref_mod(np.array(a, dtype=np.int64), field.p, reduced=False)[1])
    return _rank_int(_integer_rows(a))


def _integer_rows(a):
    """Scale each row of a rational matrix to integers (rank-preserving)."""
    out = []
    for row in a:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _rank_int(m) -> int:
    """Rank of an integer matrix by cross-multiplication elimination with
    per-row gcd normalization (no Fractions, entries stay small)."""
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pv = pr[c]
        for i in range(r + 1, nr):
            ai = m[i][c]
            if ai:
                row = [pv * x - ai * y for x, y in zip(m[i], pr)]
                g = 0
                for x in row:
                    if x:
                        g = math.gcd(g, x)
                        if g == 1:
                            break
                m[i] = [x // g for x in row] if g > 1 else row
        r += 1
    return r


def row_space_basis(field: FieldSpec, a):
    """Canonical basis (rref rows) of the row space of ``a``."""
    r, piv = rref(field, a)
    return [r[i] for i in range(len(piv))]


def right_nullspace(field: FieldSpec, a):
    """Basis of {v : a @ v = 0}, vectors returned as rows."""
    if not a:
        return []
    cols = len(a[0])
    r, piv = rref(field, a)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    one = field.one()
    for fc in free:
        v = [field.zero()] * cols
        v[fc] = one
        for i, pc in enumerate(piv):
            v[pc] = field.neg(r[i][fc])
        basis.append(v)
    return basis


def left_nullspace(field: FieldSpec, a):
    """Basis of {v : v @ a = 0}."""
    return right_nullspace(field, transpose(a))


def solve_right(field: FieldSpec, a, b):
    """One solution x of a @ x = b (columns), or None.  b is a flat vector."""
    if not a:
        return None if any(not field.is_zero(x) for x in b) else []
    cols = len(a[0])
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    r, piv = rref(field, aug)
    for i in range(len(piv)):
        if piv[i] == cols:
            return None
    x = [field.zero()] * cols
    for i, pc in enumerate(piv):
        x[pc] = r[i][cols]
    return x


def solve_left(field: FieldSpec, a, b):
    """One solution x of x @ a = b (row convention), or None."""
    sol = solve_right(field, transpose(a), b)
    return sol


def inverse(field: FieldSpec, a):
    """Inverse matrix, or None if singular."""
    n = len(a)
    aug = [list(row) + idr for row, idr in zip(a, identity(field, n))]
    r, piv = rref(field, aug)
    if piv != list(range(n)):
        return None
    return [row[n:] for row in r]


def in_row_space(field: FieldSpec, basis_rref, pivots, v):
    """Membership test against a row space already in rref form."""
    v = list(v)
    for row, pc in zip(basis_rref, pivots):
        c = v[pc]
        if not field.is_zero(c):
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return all(field.is_zero(x) for x in v)


class SubspaceTracker:
    """Incrementally grown row space with membership queries."""

    def __init__(self, field: FieldSpec, dim: int):
        self.field = field
        self.dim = dim
        self.rows = []
        self.pivots = []

    def contains(self, v) -> bool:
        return in_row_space(self.field, self.rows, self.pivots, v)

    def add(self, v) -> bool:
        """Add one vector; returns True if it enlarged the space."""
        f = self.field
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if not f.is_zero(c):
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        pc = next((i for i, x in enumerate(v) if not f.is_zero(x)), None)
        if pc is None:
            return False
        inv = f.inv(v[pc])
        v = [f.mul(inv, x) for x in v]
        for row in self.rows:
            c = row[pc]
            if not f.is_zero(c):
                row[:] = [f.sub(x, f.mul(c, y)) for x, y in zip(row, v)]
        at = next((k for k, q in enumerate(self.pivots) if q > pc), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pc)
        return True

    def add_many(self, vectors):
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self):
        return [list(r) for r in self.rows]

    def coordinates(self, v):
        """Coefficients of v in the rref basis, or None if outside."""
        f = self.field
        v = list(v)
        coeffs = []
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            coeffs.append(c)
            if not f.is_zero(c):
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        if any(not f.is_zero(x) for x in v):
            return None
        return coeffs


def charpoly_rational(a):
    """Characteristic polynomial of a rational matrix.

    Faddeev-LeVerrier over Fractions; returns coefficients ascending,
    monic: p(t) = c0 + c1 t + ... + t^n.
    """
    n = len(a)
    a = [[Fraction(x) for x in row] for row in a]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                m[i][i] += coeffs[n - k + 1]
        am = [[sum(a[i][s] * m[s][j] for s in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
        m = am
    return coeffs

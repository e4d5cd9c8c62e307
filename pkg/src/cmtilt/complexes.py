"""Bounded complexes of projectives and Hom spaces up to homotopy.

A complex stores, per cohomological degree, a formal sum of primitive
idempotents (each giving the projective eA) and differentials whose
entries are algebra elements acting by left multiplication.  Hom spaces
in the homotopy category are cohomologies of the total Hom complex,
computed by exact linear algebra on corner bases.
"""

from __future__ import annotations

from . import linalg
from .algebra import FinDimAlgebra
from .builders import build_cyclic_square_zero_algebra, cyclic_arrow_element
from .errors import InternalCheckFailed
from .fields import QQ, FieldSpec


class BoundedComplex:
    """Bounded complex of projective right modules over a FinDimAlgebra.

    ``terms[k]`` lists the idempotent vectors of the k-th term (degree
    lo + k); ``diffs[k]`` is the matrix of algebra elements giving the
    map from degree lo+k to lo+k+1: entry (t, s) lies in
    e_target[t] * A * e_source[s] and the map sends (m_s) to
    (sum_s entry[t][s] * m_s).
    """

    def __init__(self, algebra: FinDimAlgebra, lo: int, terms, diffs, label=""):
        self.algebra = algebra
        self.lo = lo
        self.terms = [list(t) for t in terms]
        self.diffs = [d for d in diffs]
        self.label = label
        self._validate()

    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    def term(self, degree: int):
        k = degree - self.lo
        if 0 <= k < len(self.terms):
            return self.terms[k]
        return []

    def diff(self, degree: int):
        k = degree - self.lo
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        return None

    def _validate(self):
        a = self.algebra
        f = a.field
        if len(self.diffs) != max(0, len(self.terms) - 1):
            raise ValueError("differential count does not match terms")
        for k, d in enumerate(self.diffs):
            src = self.terms[k]
            tgt = self.terms[k + 1]
            if len(d) != len(tgt) or any(len(row) != len(src) for row in d):
                raise ValueError(f"differential {k} has the wrong shape")
            for t, row in enumerate(d):
                for s, g in enumerate(row):
                    pinched = a.mul3(tgt[t], g, src[s])
                    if pinched != list(g):
                        raise InternalCheckFailed(
                            f"entry ({t},{s}) of differential {k} not in its corner"
                        )
        for k in range(len(self.diffs) - 1):
            comp = _compose(a, self.diffs[k + 1], self.diffs[k])
            for row in comp:
                for g in row:
                    if any(not f.is_zero(c) for c in g):
                        raise InternalCheckFailed("d^2 != 0")

    def shift(self, s: int) -> "BoundedComplex":
        """X[s]: degree d component becomes the old degree d + s one, with
        differentials rescaled by (-1)^s."""
        f = self.algebra.field
        sign = f.one() if s % 2 == 0 else f.neg(f.one())
        diffs = [
            [[_scale_vec(f, sign, g) for g in row] for row in d]
            for d in self.diffs
        ]
        return BoundedComplex(self.algebra, self.lo - s, self.terms, diffs,
                              label=f"{self.label}[{s}]")

    def __repr__(self):
        return f"BoundedComplex({self.label or '?'}, degrees [{self.lo},{self.hi}])"


def _scale_vec(f, c, v):
    return [f.mul(c, x) for x in v]


def _compose(a: FinDimAlgebra, second, first):
    """Matrix product of algebra-entry matrices: (second o first)."""
    f = a.field
    rows = len(second)
    mid = len(first)
    cols = len(first[0]) if first else 0
    out = []
    for r in range(rows):
        row = []
        for c in range(cols):
            acc = [f.zero()] * a.dim
            for m in range(mid):
                prod = a.mul(second[r][m], first[m][c])
                acc = [f.add(x, y) for x, y in zip(acc, prod)]
            row.append(acc)
        out.append(row)
    return out


def stalk_complex(algebra: FinDimAlgebra, idempotent, degree: int, label="P") -> BoundedComplex:
    return BoundedComplex(algebra, degree, [[list(idempotent)]], [], label=label)


def hom_homotopy(x: BoundedComplex, y: BoundedComplex, s: int) -> int:
    """dim of Hom(X, Y[s]) in the homotopy category: the degree-s
    cohomology of the total Hom complex."""
    a = x.algebra
    f = a.field
    corner_cache: dict[tuple, list] = {}

    def corner(ev, eu):
        key = (tuple(ev), tuple(eu))
        got = corner_cache.get(key)
        if got is None:
            got = a.corner_basis(ev, eu)
            corner_cache[key] = got
        return got

    def hom_layout(n):
        """Coordinates of Hom^n = prod_d Hom(X^d, Y^{d+n}): list of
        (d, t, s_idx, corner basis)."""
        layout = []
        for d in range(x.lo, x.hi + 1):
            src = x.term(d)
            tgt = y.term(d + n)
            for t_i, ev in enumerate(tgt):
                for s_i, eu in enumerate(src):
                    cb = corner(ev, eu)
                    if cb:
                        layout.append((d, t_i, s_i, cb))
        return layout

    def delta_matrix(n):
        """Matrix of Hom^n -> Hom^{n+1} (rows = source coordinates)."""
        src_layout = hom_layout(n)
        tgt_layout = hom_layout(n + 1)
        tgt_offsets = {}
        tracker_at = {}
        total = 0
        for (d, t_i, s_i, cb) in tgt_layout:
            tgt_offsets[(d, t_i, s_i)] = total
            tracker = linalg.SubspaceTracker(f, a.dim)
            tracker.add_many(cb)
            tracker_at[(d, t_i, s_i)] = (tracker, len(cb))
            total += len(cb)
        sign = f.one() if n % 2 == 0 else f.neg(f.one())
        rows = []
        for (d, t_i, s_i, cb) in src_layout:
            for g in cb:
                row = [f.zero()] * total
                # d_Y o f contribution: lands in Hom(X^d, Y^{d+n+1})
                dy = y.diff(d + n)
                if dy is not None:
                    for t2 in range(len(y.term(d + n + 1))):
                        val = a.mul(dy[t2][t_i], g)
                        _accumulate(f, row, tracker_at, tgt_offsets, (d, t2, s_i), val)
                # -(-1)^n f o d_X contribution: lands in Hom(X^{d-1}, Y^{d+n})
                dx = x.diff(d - 1)
                if dx is not None:
                    for s2 in range(len(x.term(d - 1))):
                        val = a.mul(g, dx[s_i][s2])
                        val = _scale_vec(f, f.neg(sign), val)
                        _accumulate(f, row, tracker_at, tgt_offsets, (d - 1, t_i, s2), val)
                rows.append(row)
        return rows

    rows_s = delta_matrix(s)
    rank_s = linalg.rank(f, rows_s) if rows_s else 0
    rows_prev = delta_matrix(s - 1)
    rank_prev = linalg.rank(f, rows_prev) if rows_prev else 0
    dim_hom_s = sum(len(cb) for (_, _, _, cb) in hom_layout(s))
    return dim_hom_s - rank_s - rank_prev


def _accumulate(f, row, tracker_at, offsets, key, val):
    if all(f.is_zero(c) for c in val):
        return
    entry = tracker_at.get(key)
    if entry is None:
        raise InternalCheckFailed("differential image escapes the Hom layout")
    tracker, size = entry
    coords = tracker.coordinates(val)
    if coords is None:
        raise InternalCheckFailed("product left its corner space")
    base = offsets[key]
    for k in range(size):
        if not f.is_zero(coords[k]):
            row[base + k] = f.add(row[base + k], coords[k])


# ---------------------------------------------------------------------------
# the arrow-chain complexes over the cyclic square-zero algebra


def build_arrow_chain_complex(algebra: FinDimAlgebra, n: int, start_vertex: int,
                              degree_offset: int, length: int,
                              label: str | None = None) -> BoundedComplex:
    """The complex P^i -> P^{i+1} -> ... -> P^{i+length} (indices mod n)
    supported in degrees [degree_offset, degree_offset + length], with
    every map the arrow; the square-zero relation makes d^2 = 0."""
    terms = []
    diffs = []
    for j in range(length + 1):
        v = (start_vertex + j) % n
        terms.append([algebra.idempotents[v]])
    for j in range(length):
        z = cyclic_arrow_element(algebra, n, start_vertex + j)
        diffs.append([[z]])
    return BoundedComplex(algebra, degree_offset, terms, diffs,
                          label=label or f"X^{start_vertex}_{{{degree_offset},{length}}}")


def silting_tilting_table(n: int, field: FieldSpec | None = None,
                          window: int | None = None):
    """Hom table of the total arrow-chain complex over the cyclic
    square-zero algebra on n vertices, with silting/tilting verdicts.

    The complex runs through all n projectives in degrees 1-n .. 0; the
    table lists Hom(M, M[s]) for |s| <= window (default 2n + 2).
    """
    field = field or QQ
    if window is None:
        window = 2 * n + 2
    algebra = build_cyclic_square_zero_algebra(field, n)
    m = build_arrow_chain_complex(algebra, n, 0, 1 - n, n - 1, label="M")
    table = {}
    for s in range(-window, window + 1):
        table[s] = hom_homotopy(m, m, s)
    silting = all(table[s] == 0 for s in range(1, window + 1))
    tilting = silting and all(table[s] == 0 for s in range(-window, 0))
    return {
        "n": n,
        "window": window,
        "table": table,
        "silting": silting,
        "tilting": tilting,
        "complex": m,
        "algebra": algebra,
    }

"""Constructors for the block endomorphism algebras and comparison algebras.

The two main algebras are block matrix algebras over the graded slices:

* the progenerator algebra, a p x p grid whose (i, j) block is the
  quotient-ring slice K_{i-j};
* the tilting algebra, an (a+p) x (a+p) grid whose row i holds ring
  slices R_{i-j} for i <= a and quotient slices K_{i-j} below.

Comparison algebras: path algebras of Dynkin trees, the cyclic
square-zero algebra, and the canonical algebra of weight type (2,2,2,2).
"""

from __future__ import annotations

from .algebra import FinDimAlgebra
from .errors import BadLambda, NegativeAInvariant
from .fields import FieldSpec
from .quotient import QuotientElement, QuotientRing
from .ring import GradedRing


def _block_algebra(field, entries, entry_mul, unit_blocks, label_prefix, seed):
    """Generic block algebra from per-entry bases.

    ``entries``: dict (i, j) -> list of basis handles (any objects).
    ``entry_mul(i, j, l, u, v)``: coordinates of u * v in the (i, l) basis.
    ``unit_blocks``: dict i -> coordinates of the unit of the (i, i) entry.
    """
    index = []
    offsets = {}
    for (i, j), vals in sorted(entries.items()):
        offsets[(i, j)] = len(index)
        index.extend((i, j, k) for k in range(len(vals)))
    dim = len(index)
    products = {}
    for (i, j), vals in entries.items():
        for (j2, l), vals2 in entries.items():
            if j2 != j:
                continue
            base_out = offsets.get((i, l))
            if base_out is None:
                continue  # the target slice is zero, so the product vanishes
            for k, u in enumerate(vals):
                for k2, v in enumerate(vals2):
                    coords = entry_mul(i, j, l, u, v)
                    terms = [
                        (base_out + t, c)
                        for t, c in enumerate(coords)
                        if not field.is_zero(c)
                    ]
                    if terms:
                        products[(offsets[(i, j)] + k, offsets[(j, l)] + k2)] = terms
    unit = [field.zero()] * dim
    idempotents = []
    idem_labels = []
    for i, coords in sorted(unit_blocks.items()):
        e = [field.zero()] * dim
        base = offsets[(i, i)]
        for t, c in enumerate(coords):
            unit[base + t] = c
            e[base + t] = c
        idempotents.append(e)
        idem_labels.append(f"{label_prefix}{i}")
    labels = [f"({i},{j})[{k}]" for (i, j, k) in index]
    algebra = FinDimAlgebra(
        field, dim, labels, products, unit,
        idempotents=idempotents, idempotent_labels=idem_labels, seed=seed,
    )
    algebra.block_index = index
    algebra.block_offsets = offsets
    return algebra


def build_progenerator_algebra(q: QuotientRing) -> FinDimAlgebra:
    """The p x p block algebra of quotient slices K_{i-j}: the endomorphism
    algebra of the sum of the p distinct shifted quotient truncations."""
    p = q.period()
    field = q.field
    entries = {}
    for i in range(1, p + 1):
        for j in range(1, p + 1):
            basis = q.basis(i - j)
            if basis:
                entries[(i, j)] = basis

    def entry_mul(i, j, l, u, v):
        return list(q.multiply(u, v).coords)

    unit_blocks = {i: list(q.one().coords) for i in range(1, p + 1)}
    return _block_algebra(field, entries, entry_mul, unit_blocks, "row", q.seed)


def build_tilting_algebra(q: QuotientRing) -> FinDimAlgebra:
    """The (a+p) x (a+p) mixed block algebra: ring slices in the upper
    triangular part (rows up to a), quotient slices below.  Defined only
    for a non-negative a-invariant."""
    a = q.a
    if a < 0:
        raise NegativeAInvariant(f"a = {a} < 0: no tilting-side algebra")
    p = q.period()
    field = q.field
    ring = q.ring
    entries = {}
    for i in range(1, a + p + 1):
        for j in range(1, a + p + 1):
            if i <= a:
                if j > i:
                    continue
                basis = [ring.element(i - j, row)
                         for row in _std_rows(field, ring.dim(i - j))]
            else:
                basis = q.basis(i - j)
            if basis:
                entries[(i, j)] = basis

    def entry_mul(i, j, l, u, v):
        if i <= a:
            return list(ring.multiply(u, v).coords)
        uu = u if isinstance(u, QuotientElement) else q.from_ring(u)
        vv = v if isinstance(v, QuotientElement) else q.from_ring(v)
        return list(q.multiply(uu, vv).coords)

    unit_blocks = {}
    for i in range(1, a + p + 1):
        if i <= a:
            unit_blocks[i] = list(ring.one().coords)
        else:
            unit_blocks[i] = list(q.one().coords)
    return _block_algebra(field, entries, entry_mul, unit_blocks, "row", q.seed)


def build_triangular_slice_algebra(ring: GradedRing, a: int) -> FinDimAlgebra:
    """Lower triangular a x a block algebra with (i, j) block R_{i-j}."""
    if a < 1:
        raise ValueError("need a >= 1")
    field = ring.field
    entries = {}
    for i in range(1, a + 1):
        for j in range(1, i + 1):
            if ring.dim(i - j):
                entries[(i, j)] = [
                    ring.element(i - j, row) for row in _std_rows(field, ring.dim(i - j))
                ]

    def entry_mul(i, j, l, u, v):
        return list(ring.multiply(u, v).coords)

    unit_blocks = {i: list(ring.one().coords) for i in range(1, a + 1)}
    return _block_algebra(field, entries, entry_mul, unit_blocks, "row", 1)


def _std_rows(field, n):
    rows = []
    for k in range(n):
        row = [field.zero()] * n
        row[k] = field.one()
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# path algebras


def build_path_algebra(field: FieldSpec, num_vertices: int, arrows, seed=1) -> FinDimAlgebra:
    """Path algebra of an acyclic quiver.

    ``arrows`` is a list of (source, target) pairs with vertices numbered
    from 1.  Paths compose left to right, and an arrow s -> t lies in
    e_s A e_t, so the reported quiver of the result is the reverse of the
    input orientation; all invariants used here are orientation-free.
    """
    one = field.one()
    paths = [(v,) for v in range(1, num_vertices + 1)]
    frontier = [(v,) for v in range(1, num_vertices + 1)]
    while frontier:
        nxt = []
        for path in frontier:
            end = path[-1]
            for s, t in arrows:
                if s == end:
                    newp = path + (t,)
                    if len(newp) > num_vertices:
                        raise ValueError("quiver has an oriented cycle")
                    nxt.append(newp)
        paths.extend(nxt)
        frontier = nxt
    index = {p: k for k, p in enumerate(paths)}
    products = {}
    for p1, k1 in index.items():
        for p2, k2 in index.items():
            if p1[-1] == p2[0]:
                joined = p1 + p2[1:]
                k3 = index.get(joined)
                if k3 is not None:
                    products[(k1, k2)] = [(k3, one)]
    unit = [field.zero()] * len(paths)
    idems = []
    for v in range(1, num_vertices + 1):
        e = [field.zero()] * len(paths)
        e[index[(v,)]] = one
        unit[index[(v,)]] = one
        idems.append(e)
    labels = ["-".join(map(str, p)) for p in paths]
    return FinDimAlgebra(
        field, len(paths), labels, products, unit,
        idempotents=idems, idempotent_labels=[f"v{v}" for v in range(1, num_vertices + 1)],
        seed=seed,
    )


DYNKIN_SHAPES = {"A": None, "D": None, "E": None}


def dynkin_arrows(type_name: str) -> tuple[int, list[tuple[int, int]]]:
    """Default orientation for a Dynkin tree: A_n a linear chain; D_n two
    tips into vertex 3 then a chain; E_n a chain with a branch at the
    third chain vertex."""
    letter = type_name[0].upper()
    n = int(type_name[1:])
    if letter == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return n, [(i, i + 1) for i in range(1, n)]
    if letter == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        arrows = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
        return n, arrows
    if letter == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        # chain 1..n-1 with the extra vertex n attached to chain vertex 3
        arrows = [(i, i + 1) for i in range(1, n - 1)] + [(n, 3)]
        return n, arrows
    raise ValueError(f"unknown Dynkin type {type_name!r}")


def build_dynkin_path_algebra(field: FieldSpec, type_name: str, seed=1) -> FinDimAlgebra:
    n, arrows = dynkin_arrows(type_name)
    return build_path_algebra(field, n, arrows, seed=seed)


def build_cyclic_square_zero_algebra(field: FieldSpec, n: int, seed=1) -> FinDimAlgebra:
    """Vertices Z/n with one arrow between consecutive vertices and all
    length-two paths zero; dimension 2n.  The arrow out of vertex i is
    stored in e_{i+1} A e_i so that it defines a map e_i A -> e_{i+1} A
    by left multiplication."""
    if n < 1:
        raise ValueError("need n >= 1")
    one = field.one()
    dim = 2 * n
    # basis: e_0..e_{n-1}, z_0..z_{n-1}
    products = {}
    for i in range(n):
        products[(i, i)] = [(i, one)]
    for i in range(n):
        z = n + i
        ip1 = (i + 1) % n
        products[(ip1, z)] = [(z, one)]  # e_{i+1} * z_i = z_i
        products[(z, i)] = [(z, one)]    # z_i * e_i = z_i
    unit = [one] * n + [field.zero()] * n
    idems = []
    for i in range(n):
        e = [field.zero()] * dim
        e[i] = one
        idems.append(e)
    labels = [f"e{i}" for i in range(n)] + [f"z{i}" for i in range(n)]
    return FinDimAlgebra(
        field, dim, labels, products, unit,
        idempotents=idems, idempotent_labels=[f"v{i}" for i in range(n)],
        seed=seed,
    )


def cyclic_arrow_element(algebra: FinDimAlgebra, n: int, i: int):
    """The arrow element inducing e_i A -> e_{i+1} A by left multiplication."""
    v = [algebra.field.zero()] * algebra.dim
    v[n + (i % n)] = algebra.field.one()
    return v


def build_canonical_algebra_2222(field: FieldSpec, lam, seed=1) -> FinDimAlgebra:
    """Canonical algebra of weight type (2,2,2,2): source 0, four middle
    vertices, sink 5, with the two standard relations among the four
    length-two paths; the parameter must avoid 0 and 1."""
    lam = field.of(lam)
    if field.is_zero(lam) or lam == field.one():
        raise BadLambda("parameter must avoid 0 and 1")
    one = field.one()
    # basis: e0..e5 (0-5), a1..a4 (6-9), b1..b4 (10-13), m1, m2 (14-15)
    dim = 16
    products = {}
    for v in range(6):
        products[(v, v)] = [(v, one)]
    for i in range(4):
        ai, bi = 6 + i, 10 + i
        products[(0, ai)] = [(ai, one)]
        products[(ai, 1 + i)] = [(ai, one)]
        products[(1 + i, bi)] = [(bi, one)]
        products[(bi, 5)] = [(bi, one)]
    # a_i b_i expansions: m1 = a1 b1, m2 = a2 b2,
    # a3 b3 = -m1 - m2, a4 b4 = -m1 - lam*m2
    m1, m2 = 14, 15
    products[(6, 10)] = [(m1, one)]
    products[(7, 11)] = [(m2, one)]
    products[(8, 12)] = [(m1, field.neg(one)), (m2, field.neg(one))]
    products[(9, 13)] = [(m1, field.neg(one)), (m2, field.neg(lam))]
    for m in (m1, m2):
        products[(0, m)] = [(m, one)]
        products[(m, 5)] = [(m, one)]
    unit = [one] * 6 + [field.zero()] * 10
    idems = []
    for v in range(6):
        e = [field.zero()] * dim
        e[v] = one
        idems.append(e)
    labels = [f"e{v}" for v in range(6)] + [f"a{i}" for i in range(1, 5)] \
        + [f"b{i}" for i in range(1, 5)] + ["m1", "m2"]
    return FinDimAlgebra(
        field, dim, labels, products, unit,
        idempotents=idems, idempotent_labels=[f"v{v}" for v in range(6)],
        seed=seed,
    )

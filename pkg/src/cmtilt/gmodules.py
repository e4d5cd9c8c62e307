"""Windowed graded modules over the hypersurface ring and the Hom oracle.

A module is stored degreewise on a finite window together with the two
action maps.  Truncated shifts of the ring and of its quotient ring, and
the finite-length quotients by high truncations, are the only shapes
needed; Hom spaces of degree-zero maps are computed as the solution
space of the commutation constraints on the window, recomputed on an
enlarged window as a stability certificate.
"""

from __future__ import annotations

from . import linalg
from .errors import InternalCheckFailed, WindowUnstable
from .quotient import QuotientRing
from .ring import GradedRing

R_TRUNC = "ring-truncation"
K_TRUNC = "quotient-truncation"
R_QUOT = "ring-cotruncation"


class GradedModuleWindow:
    """Degreewise data of a graded module on [lo, hi].

    ``dims[d]`` is the dimension in degree d (0 outside the window), and
    ``act_x[d]`` / ``act_y[d]`` the action matrices into degrees d + wx
    and d + wy (row convention), present whenever both ends lie in the
    window.  ``gen_bound`` is a degree bound below which the module is
    generated.
    """

    def __init__(self, ring: GradedRing, lo: int, hi: int, dims, act_x, act_y,
                 gen_bound: int, label: str = ""):
        self.ring = ring
        self.field = ring.field
        self.lo = lo
        self.hi = hi
        self.dims = dict(dims)
        self.act_x = dict(act_x)
        self.act_y = dict(act_y)
        self.gen_bound = gen_bound
        self.label = label
        self._check_commutation()

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    def act(self, which: str, d: int):
        table = self.act_x if which == "x" else self.act_y
        return table.get(d)

    def _check_commutation(self):
        f = self.field
        wx, wy = self.ring.wx, self.ring.wy
        for d in range(self.lo, self.hi - wx - wy + 1):
            ax = self.act_x.get(d)
            ay_up = self.act_y.get(d + wx)
            ay = self.act_y.get(d)
            ax_up = self.act_x.get(d + wy)
            if ax is None or ay_up is None or ay is None or ax_up is None:
                continue
            left = linalg.mat_mul(f, ax, ay_up) if ax and ay_up else []
            right = linalg.mat_mul(f, ay, ax_up) if ay and ax_up else []
            if left != right:
                raise InternalCheckFailed(
                    f"x and y actions do not commute at degree {d} of {self.label}"
                )

    def act_poly_matrix(self, d: int, poly: dict):
        """Matrix of the action of a polynomial (as exponent dict) from
        degree d; None if the window is too short."""
        f = self.field
        if not poly:
            return [[f.zero()] * 0 for _ in range(self.dim(d))]
        wdeg = {a * self.ring.wx + b * self.ring.wy for (a, b) in poly}
        if len(wdeg) != 1:
            raise ValueError("inhomogeneous action polynomial")
        shift = wdeg.pop()
        target = d + shift
        out = [[f.zero()] * self.dim(target) for _ in range(self.dim(d))]
        for (a, b), c in poly.items():
            m = linalg.identity(f, self.dim(d))
            cur = d
            ok = True
            for _ in range(a):
                step = self.act_x.get(cur)
                if step is None:
                    ok = False
                    break
                m = linalg.mat_mul(f, m, step) if m and step else []
                cur += self.ring.wx
            if ok:
                for _ in range(b):
                    step = self.act_y.get(cur)
                    if step is None:
                        ok = False
                        break
                    m = linalg.mat_mul(f, m, step) if m and step else []
                    cur += self.ring.wy
            if not ok:
                return None
            for s in range(len(m)):
                for t in range(len(m[s]) if m else 0):
                    if not f.is_zero(m[s][t]):
                        out[s][t] = f.add(out[s][t], f.mul(c, m[s][t]))
        return out

    def __repr__(self):
        return f"GradedModuleWindow({self.label or '?'}, [{self.lo},{self.hi}])"


def truncation_module(source, shift: int, kind: str, hi: int, label: str | None = None):
    """The three module shapes used by the endomorphism-algebra checks.

    * ring truncation: degree j piece is R_{shift+j} for j >= 0;
    * quotient truncation: degree j piece is K_{shift+j} for j >= 0;
    * ring cotruncation: the finite-length quotient supported in degrees
      [-shift, -1] with piece R_{shift+j}.
    """
    if kind == R_TRUNC:
        ring: GradedRing = source
        lo = 0
        dims = {j: ring.dim(shift + j) for j in range(lo, hi + 1)}
        act_x = {}
        act_y = {}
        for j in range(lo, hi + 1):
            if j + ring.wx <= hi:
                act_x[j] = ring.mult_matrix(ring.x(), shift + j)
            if j + ring.wy <= hi:
                act_y[j] = ring.mult_matrix(ring.y(), shift + j)
        return GradedModuleWindow(ring, lo, hi, dims, act_x, act_y,
                                  gen_bound=max(ring.wx, ring.wy),
                                  label=label or f"R({shift})+")
    if kind == K_TRUNC:
        q: QuotientRing = source
        ring = q.ring
        xq, yq = q.from_ring(ring.x()), q.from_ring(ring.y())
        lo = 0
        dims = {j: q.dim(shift + j) for j in range(lo, hi + 1)}
        act_x = {}
        act_y = {}
        for j in range(lo, hi + 1):
            if j + ring.wx <= hi:
                act_x[j] = q.mult_matrix(xq, shift + j)
            if j + ring.wy <= hi:
                act_y[j] = q.mult_matrix(yq, shift + j)
        return GradedModuleWindow(ring, lo, hi, dims, act_x, act_y,
                                  gen_bound=max(ring.wx, ring.wy),
                                  label=label or f"K({shift})+")
    if kind == R_QUOT:
        ring = source
        lo, top = -shift, -1
        dims = {j: ring.dim(shift + j) for j in range(lo, top + 1)}
        act_x = {}
        act_y = {}
        for j in range(lo, top + 1):
            if j + ring.wx <= top:
                act_x[j] = ring.mult_matrix(ring.x(), shift + j)
            if j + ring.wy <= top:
                act_y[j] = ring.mult_matrix(ring.y(), shift + j)
        return GradedModuleWindow(ring, lo, top, dims, act_x, act_y,
                                  gen_bound=top,
                                  label=label or f"(R/R>={shift})({shift})")
    raise ValueError(f"unknown truncation kind {kind!r}")


def default_window_bound(q: QuotientRing) -> int:
    ring = q.ring
    return q.a + 2 * ring.n + 2 * (ring.wx + ring.wy)


def _hom_dim_on_window(m: GradedModuleWindow, n: GradedModuleWindow, lo: int, hi: int) -> int:
    """Dimension of degreewise maps commuting with both actions on the
    window [lo, hi]."""
    f = m.field
    offsets = {}
    total = 0
    for d in range(lo, hi + 1):
        offsets[d] = total
        total += m.dim(d) * n.dim(d)
    if total == 0:
        return 0
    rows = []
    for which, w in (("x", m.ring.wx), ("y", m.ring.wy)):
        for d in range(lo, hi - w + 1):
            am = m.act(which, d)
            an = n.act(which, d)
            dm, dn = m.dim(d), n.dim(d)
            dmu, dnu = m.dim(d + w), n.dim(d + w)
            if am is None or an is None:
                if dm and dn and (dmu or dnu):
                    raise WindowUnstable(f"missing action data at degree {d}")
                continue
            # constraint: am @ F_{d+w} = F_d @ an
            for s in range(dm):
                for t in range(dnu):
                    row = [f.zero()] * total
                    nonzero = False
                    for u in range(dmu):
                        c = am[s][u]
                        if not f.is_zero(c):
                            row[offsets[d + w] + u * dnu + t] = c
                            nonzero = True
                    for v in range(dn):
                        c = an[v][t]
                        if not f.is_zero(c):
                            idx = offsets[d] + s * dn + v
                            row[idx] = f.sub(row[idx], c)
                            nonzero = True
                    if nonzero:
                        rows.append(row)
    if not rows:
        return total
    return total - linalg.rank(f, rows)


def graded_hom_dim(m: GradedModuleWindow, n: GradedModuleWindow,
                   bound: int | None = None) -> int:
    """Dimension of the space of degree-zero module maps M -> N.

    Computed on [lo, B] and again on [lo, B + max(wx, wy)]; a mismatch
    triggers one enlargement retry before failing.
    """
    ring = m.ring
    maxw = max(ring.wx, ring.wy)
    lo = min(m.lo, n.lo)
    if bound is None:
        bound = min(m.hi, n.hi) - maxw
    for attempt in range(2):
        b = bound + attempt * 2 * (ring.wx + ring.wy)
        if b + maxw > min(m.hi, n.hi):
            raise WindowUnstable(
                f"window [{lo},{min(m.hi, n.hi)}] too short for bound {b}"
            )
        d1 = _hom_dim_on_window(m, n, lo, b)
        d2 = _hom_dim_on_window(m, n, lo, b + maxw)
        if d1 == d2:
            return d1
    raise WindowUnstable(
        f"Hom dimension did not stabilize: {d1} vs {d2} on [{lo},{b}]"
    )


def graded_hom_basis(m: GradedModuleWindow, n: GradedModuleWindow, hi: int):
    """Explicit bases (dict degree -> matrix) of the window Hom space."""
    f = m.field
    lo = min(m.lo, n.lo)
    offsets = {}
    total = 0
    for d in range(lo, hi + 1):
        offsets[d] = total
        total += m.dim(d) * n.dim(d)
    rows = []
    for which, w in (("x", m.ring.wx), ("y", m.ring.wy)):
        for d in range(lo, hi - w + 1):
            am = m.act(which, d)
            an = n.act(which, d)
            if am is None or an is None:
                continue
            dm, dn = m.dim(d), n.dim(d)
            dmu, dnu = m.dim(d + w), n.dim(d + w)
            for s in range(dm):
                for t in range(dnu):
                    row = [f.zero()] * total
                    for u in range(dmu):
                        c = am[s][u]
                        if not f.is_zero(c):
                            row[offsets[d + w] + u * dnu + t] = c
                    for v in range(dn):
                        c = an[v][t]
                        if not f.is_zero(c):
                            idx = offsets[d] + s * dn + v
                            row[idx] = f.sub(row[idx], c)
                    rows.append(row)
    flat = linalg.right_nullspace(f, rows) if rows else linalg.identity(f, total)
    out = []
    for vec in flat:
        comp = {}
        for d in range(lo, hi + 1):
            dm, dn = m.dim(d), n.dim(d)
            if dm and dn:
                base = offsets[d]
                comp[d] = [vec[base + s * dn:base + (s + 1) * dn] for s in range(dm)]
        out.append(comp)
    return out


def is_locally_free_over_quotient(m: GradedModuleWindow, q: QuotientRing,
                                  progenerator_algebra) -> bool:
    """Whether the quotient-ring scalar extension of M is projective.

    The extension is read off from the stabilized high-degree slices of
    the window (multiplication by r is eventually bijective), converted
    into a module over the progenerator algebra, and tested for
    projectivity by a minimal-cover computation.
    """
    from .algebra import AlgebraModule, is_projective

    ring = q.ring
    f = q.field
    dr = q.dr
    r_poly = q.r.to_poly()
    # find the stabilization threshold for multiplication by r
    top = m.hi - dr
    d0 = None
    for start in range(m.lo, top + 1):
        ok = True
        for d in range(start, top + 1):
            mat = m.act_poly_matrix(d, r_poly)
            if mat is None or m.dim(d) != m.dim(d + dr):
                ok = False
                break
            if m.dim(d) and linalg.inverse(f, mat) is None:
                ok = False
                break
        if ok:
            d0 = start
            break
    if d0 is None:
        raise WindowUnstable("no stable range for multiplication by r in the window")

    p = q.period()
    slot_degree = {}
    for i in range(1, p + 1):
        n_i = 0
        while -i + n_i * dr < d0:
            n_i += 1
        slot_degree[i] = -i + n_i * dr
        if slot_degree[i] + dr > m.hi:
            raise WindowUnstable("window too short for the scalar extension slices")
    slot_offset = {}
    total = 0
    for i in range(1, p + 1):
        slot_offset[i] = total
        total += m.dim(slot_degree[i])

    inv_cache = {}

    def divide(mat_rows, at_degree):
        inv = inv_cache.get(at_degree)
        if inv is None:
            inv = linalg.inverse(f, m.act_poly_matrix(at_degree - dr, r_poly))
            inv_cache[at_degree] = inv
        return linalg.mat_mul(f, mat_rows, inv)

    algebra = progenerator_algebra
    action = []
    for k in range(algebra.dim):
        (bi, bj, kk) = algebra.block_index[k]
        u = q.basis(bi - bj)[kk]
        mat = [[f.zero()] * total for _ in range(total)]
        src = slot_degree[bi]
        # action: multiply by the representative, then divide back by r
        w_poly = u.rep.to_poly()
        step = m.act_poly_matrix(src, w_poly)
        if step is None:
            raise WindowUnstable("window too short for a block action")
        cur_deg = src + u.rep.degree
        target = slot_degree[bj]
        while cur_deg > target:
            step = divide(step, cur_deg)
            cur_deg -= dr
        if cur_deg != target:
            raise InternalCheckFailed("slice degrees out of alignment")
        for s in range(m.dim(src)):
            for t in range(m.dim(target)):
                mat[slot_offset[bi] + s][slot_offset[bj] + t] = step[s][t]
        action.append(mat)
    module = AlgebraModule(algebra, total, action, check=True, label="KxM")
    return is_projective(algebra, module)

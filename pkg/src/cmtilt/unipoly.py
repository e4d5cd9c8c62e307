"""Univariate polynomials over a FieldSpec, with factorization.

A polynomial is a list of scalars, lowest degree first, normalized so the
last entry is nonzero; the zero polynomial is the empty list (degree -1).

Factorization support is deliberately asymmetric: complete over prime
fields (squarefree decomposition + distinct-degree + equal-degree
splitting), and over the rationals limited to repeated rational-root
extraction plus the quadratic discriminant test.  That is all the
idempotent-splitting pipeline ever needs at desk scale.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import UnsupportedFactorization
from .fields import PRIME, FieldSpec

DEFAULT_SEED = 1
EQUAL_DEGREE_RETRY_CAP = 64
QQ_DEGREE_BOUND = 16


def normalize(field: FieldSpec, coeffs) -> list:
    c = list(coeffs)
    while c and field.is_zero(c[-1]):
        c.pop()
    return c


def degree(a) -> int:
    return len(a) - 1


def is_zero(a) -> bool:
    return not a


def constant(field: FieldSpec, value) -> list:
    return normalize(field, [field.of(value)])


def x_poly(field: FieldSpec) -> list:
    return [field.zero(), field.one()]


def add(field: FieldSpec, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero()
        y = b[i] if i < len(b) else field.zero()
        out.append(field.add(x, y))
    return normalize(field, out)


def sub(field: FieldSpec, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero()
        y = b[i] if i < len(b) else field.zero()
        out.append(field.sub(x, y))
    return normalize(field, out)


def scale(field: FieldSpec, c, a):
    if field.is_zero(c):
        return []
    return [field.mul(c, x) for x in a]


def mul(field: FieldSpec, a, b):
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not field.is_zero(y):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return normalize(field, out)


def divmod_poly(field: FieldSpec, a, b):
    if is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [field.zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b) and a:
        if field.is_zero(a[-1]):
            a.pop()
            continue
        shift = len(a) - len(b)
        c = field.mul(a[-1], inv_lead)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(c, y))
        a.pop()
    return normalize(field, q), normalize(field, a)


def mod(field: FieldSpec, a, b):
    return divmod_poly(field, a, b)[1]


def exact_div(field: FieldSpec, a, b):
    q, r = divmod_poly(field, a, b)
    if not is_zero(r):
        raise ArithmeticError("division was not exact")
    return q


def monic(field: FieldSpec, a):
    if is_zero(a):
        return []
    inv = field.inv(a[-1])
    return [field.mul(inv, x) for x in a]


def gcd(field: FieldSpec, a, b):
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    a, b = normalize(field, a), normalize(field, b)
    while not is_zero(b):
        a, b = b, mod(field, a, b)
    return monic(field, a)


def extended_gcd(field: FieldSpec, a, b):
    """Returns (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = normalize(field, a), normalize(field, b)
    s0, s1 = constant(field, 1), []
    t0, t1 = [], constant(field, 1)
    while not is_zero(r1):
        q, r = divmod_poly(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(field, s0, mul(field, q, s1))
        t0, t1 = t1, sub(field, t0, mul(field, q, t1))
    if is_zero(r0):
        return [], s0, t0
    lead = r0[-1]
    inv = field.inv(lead)
    return scale(field, inv, r0), scale(field, inv, s0), scale(field, inv, t0)


def derivative(field: FieldSpec, a):
    return normalize(field, [field.mul(field.of(i), a[i]) for i in range(1, len(a))])


def evaluate(field: FieldSpec, a, x):
    acc = field.zero()
    for c in reversed(a):
        acc = field.add(field.mul(acc, x), c)
    return acc


def pow_mod(field: FieldSpec, a, e: int, m):
    result = constant(field, 1)
    base = mod(field, a, m)
    while e > 0:
        if e & 1:
            result = mod(field, mul(field, result, base), m)
        base = mod(field, mul(field, base, base), m)
        e >>= 1
    return result


def to_str(field: FieldSpec, a, var: str = "t") -> str:
    if is_zero(a):
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if field.is_zero(c):
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != field.one() else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != field.one() else f"{var}^{i}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# squarefree decomposition (works in characteristic 0 and p)


def _pth_root(field: FieldSpec, a):
    # prime-field coefficients are Frobenius-fixed, so just divide exponents
    p = field.p
    return [a[i] for i in range(0, len(a), p)]


def squarefree_decomposition(field: FieldSpec, f):
    """Monic f as a list of (monic factor, multiplicity), factors coprime
    and squarefree, product (with multiplicities) equal to f."""
    f = monic(field, f)
    if degree(f) <= 0:
        return []
    df = derivative(field, f)
    if is_zero(df):
        # only possible in characteristic p: f is a p-th power
        root = _pth_root(field, f)
        return [(g, m * field.p) for g, m in squarefree_decomposition(field, root)]
    a = gcd(field, f, df)
    b = exact_div(field, f, a)
    out = []
    i = 1
    while degree(b) > 0:
        c = gcd(field, a, b)
        d = exact_div(field, b, c)
        if degree(d) > 0:
            out.append((d, i))
        b = c
        a = exact_div(field, a, c)
        i += 1
    if degree(a) > 0:
        root = _pth_root(field, a)
        out.extend((g, m * field.p) for g, m in squarefree_decomposition(field, root))
    return out


# ---------------------------------------------------------------------------
# factorization over F_p


def _distinct_degree(field: FieldSpec, f):
    """Squarefree monic f -> list of (product-of-irreducibles, degree)."""
    p = field.p
    out = []
    h = x_poly(field)
    g = list(f)
    d = 0
    while degree(g) >= 2 * (d + 1):
        d += 1
        h = pow_mod(field, h, p, g)
        sep = gcd(field, sub(field, h, x_poly(field)), g)
        if degree(sep) > 0:
            out.append((sep, d))
            g = exact_div(field, g, sep)
            h = mod(field, h, g)
    if degree(g) > 0:
        out.append((g, degree(g)))
    return out


def _random_poly(field: FieldSpec, rng: random.Random, deg: int):
    return normalize(field, [field.of(rng.randrange(field.p)) for _ in range(deg + 1)])


def _equal_degree_split(field: FieldSpec, f, d: int, rng: random.Random):
    """f = product of distinct irreducibles of degree d; find a proper factor."""
    p = field.p
    n = degree(f)
    for _ in range(EQUAL_DEGREE_RETRY_CAP):
        a = _random_poly(field, rng, n - 1)
        if degree(a) < 1:
            continue
        g = gcd(field, a, f)
        if 0 < degree(g) < n:
            return g
        if p == 2:
            # trace map splitting
            acc = a
            trace = a
            for _ in range(d - 1):
                acc = pow_mod(field, acc, 2, f)
                trace = add(field, trace, acc)
            g = gcd(field, trace, f)
        else:
            e = (p ** d - 1) // 2
            b = pow_mod(field, a, e, f)
            g = gcd(field, sub(field, b, constant(field, 1)), f)
        if 0 < degree(g) < n:
            return g
    raise UnsupportedFactorization(
        f"equal-degree splitting failed after {EQUAL_DEGREE_RETRY_CAP} trials"
    )


def _equal_degree_factor(field: FieldSpec, f, d: int, rng: random.Random):
    if degree(f) == d:
        return [f]
    g = _equal_degree_split(field, f, d, rng)
    h = exact_div(field, f, g)
    return _equal_degree_factor(field, g, d, rng) + _equal_degree_factor(field, h, d, rng)


def _factor_squarefree_fp(field: FieldSpec, f, rng: random.Random):
    out = []
    for part, d in _distinct_degree(field, f):
        out.extend(_equal_degree_factor(field, part, d, rng))
    return out


# ---------------------------------------------------------------------------
# factorization over Q (linear and quadratic splitting only)


def _int_divisors(n: int):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(f):
    """All rational roots of a Fraction polynomial."""
    den = math.lcm(*(c.denominator for c in f))
    zi = [int(c * den) for c in f]
    if zi[0] == 0:
        return [Fraction(0)]
    lead = zi[-1]
    const = zi[0]
    if abs(const) > 10 ** 12 or abs(lead) > 10 ** 12:
        raise UnsupportedFactorization("coefficients too large for root scan")
    roots = []
    for pn in _int_divisors(const):
        for qn in _int_divisors(lead):
            for num in (pn, -pn):
                cand = Fraction(num, qn)
                acc = Fraction(0)
                for c in reversed(f):
                    acc = acc * cand + c
                if acc == 0 and cand not in roots:
                    roots.append(cand)
    return roots


def _is_square_fraction(x: Fraction):
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _factor_squarefree_qq(field: FieldSpec, f):
    out = []
    g = monic(field, f)
    # strip roots at zero
    while len(g) > 1 and g[0] == 0:
        out.append(x_poly(field))
        g = g[1:]
    changed = True
    while degree(g) >= 1 and changed:
        changed = False
        if degree(g) == 1:
            out.append(monic(field, g))
            g = constant(field, 1)
            break
        for r in _rational_roots(g):
            lin = [-r, Fraction(1)]
            out.append(lin)
            g = exact_div(field, g, lin)
            changed = True
            break
    if degree(g) == 2:
        b, c = g[1], g[0]
        disc = b * b - 4 * c
        sq = _is_square_fraction(disc)
        if sq is None:
            out.append(g)
        else:
            r1 = (-b + sq) / 2
            r2 = (-b - sq) / 2
            out.append([-r1, Fraction(1)])
            out.append([-r2, Fraction(1)])
        g = constant(field, 1)
    if degree(g) == 3:
        # a factored cubic would have a linear factor, hence a rational root
        out.append(g)
        g = constant(field, 1)
    if degree(g) >= 4:
        hint = " (beyond the supported degree bound)" if degree(g) > QQ_DEGREE_BOUND else ""
        raise UnsupportedFactorization(
            f"irreducibility of degree-{degree(g)} rational polynomial "
            f"not decidable here (no rational root, degree > 3){hint}"
        )
    return out


# ---------------------------------------------------------------------------


def factor(field: FieldSpec, f, seed: int = DEFAULT_SEED):
    """Factor nonzero f into monic irreducibles.

    Returns (leading coefficient, list of (monic irreducible, multiplicity)),
    sorted deterministically.  Raises UnsupportedFactorization over the
    rationals when splitting would need more than roots and discriminants.
    """
    f = normalize(field, f)
    if is_zero(f):
        raise ValueError("cannot factor the zero polynomial")
    lead = f[-1]
    rng = random.Random(seed)
    result: dict[tuple, int] = {}
    for part, mult in squarefree_decomposition(field, f):
        if field.kind == PRIME:
            irreducibles = _factor_squarefree_fp(field, part, rng)
        else:
            irreducibles = _factor_squarefree_qq(field, part)
        for g in irreducibles:
            key = tuple(g)
            result[key] = result.get(key, 0) + mult
    items = [(list(k), m) for k, m in result.items()]
    items.sort(key=lambda it: (degree(it[0]), [str(c) for c in it[0]]))
    return lead, items


def is_squarefree(field: FieldSpec, f) -> bool:
    """Separability test: gcd(f, f') = 1 (complete over perfect fields
    whenever f' is nonzero)."""
    f = normalize(field, f)
    if degree(f) <= 0:
        return True
    df = derivative(field, f)
    if is_zero(df):
        return False
    return degree(gcd(field, f, df)) == 0

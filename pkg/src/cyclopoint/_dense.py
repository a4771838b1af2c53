"""Dense univariate kernels over the integers.

Polynomials are lists of Python ints, lowest degree first, with no trailing
zeros; the zero polynomial is ``[]``.  Everything higher level (sparse
multivariate polynomials, cyclotomic fields) bottoms out here.
"""

from __future__ import annotations

import math
from functools import reduce

_KRONECKER_MIN = 24


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def scale(a, c):
    if c == 0:
        return []
    return [c * v for v in a]


def _pack(a, k):
    r = 0
    for c in reversed(a):
        r = (r << k) + c
    return r


def _unpack(v, k, n):
    out = []
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    full = 1 << k
    for _ in range(n):
        d = v & mask
        if d >= half:
            d -= full
        out.append(d)
        v = (v - d) >> k
    return out


def mul(a, b):
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return trim(out)
    # Kronecker substitution: one big-integer product does the convolution
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    k = (ma * mb * min(len(a), len(b))).bit_length() + 2
    prod = _pack(a, k) * _pack(b, k)
    return trim(_unpack(prod, k, len(a) + len(b) - 1))


def content(a):
    return reduce(math.gcd, a, 0)


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    c = content(a)
    if a[-1] < 0:
        c = -c
    return [v // c for v in a]


def deriv(a):
    return trim([i * a[i] for i in range(1, len(a))])


def eval_int(a, t):
    r = 0
    for c in reversed(a):
        r = r * t + c
    return r


def eval_frac_hom(a, p, q):
    """Return q**deg(a) * a(p/q) as an integer."""
    r = 0
    qp = 1
    d = len(a) - 1
    # Horner on the homogenised form
    for i in range(d, -1, -1):
        r = r * p + a[i] * qp
        qp *= q
    return r


def negate_var(a):
    return [(-c if i & 1 else c) for i, c in enumerate(a)]


def inflate(a, k):
    if not a:
        return []
    out = [0] * ((len(a) - 1) * k + 1)
    for i, c in enumerate(a):
        out[i * k] = c
    return out


def divmod_exact_lc(a, b):
    """Division over Q when lc(b) divides everything that appears.

    Returns (q, r) or None if some quotient coefficient is not an integer.
    """
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    nz = [(j, c) for j, c in enumerate(b[:-1]) if c]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            return None
        q[i - db] = qc
        base = i - db
        for j, bc in nz:
            r[base + j] -= qc * bc
        r[i] = 0
    return trim(q), trim(r[:db])


def exact_div(a, b):
    """a / b when b divides a in Z[x]; None otherwise."""
    res = divmod_exact_lc(a, b)
    if res is None:
        return None
    q, r = res
    if r:
        return None
    return q


def divides(b, a):
    return exact_div(a, b) is not None


def prem(a, b):
    """Pseudo-remainder of a by b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for j, bc in enumerate(b):
            r[shift + j] -= c * bc
        trim(r)
    return r


def gcd_prs(a, b):
    """Primitive polynomial remainder sequence over Z."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    c = math.gcd(content(a), content(b))
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, primitive(r) if r else []
    g = primitive(a)
    return [c * v for v in g]


def _xi_expand(v, xi):
    out = []
    half = xi // 2
    while v:
        d = v % xi
        if d > half:
            d -= xi
        out.append(d)
        v = (v - d) // xi
    return out


def gcd(a, b):
    """Integer-polynomial gcd, normalised with positive leading coefficient.

    Uses the heuristic big-evaluation gcd, verified by exact division, with
    the primitive PRS as fallback.
    """
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    ca, cb = content(a), content(b)
    c = math.gcd(ca, cb)
    pa, pb = primitive(a), primitive(b)
    if len(pa) == 1 or len(pb) == 1:
        return [c]
    ma = max(abs(v) for v in pa)
    mb = max(abs(v) for v in pb)
    xi = 2 * min(ma, mb) + 29
    for _ in range(6):
        va, vb = eval_int(pa, xi), eval_int(pb, xi)
        if va and vb:
            g = _xi_expand(math.gcd(va, vb), xi)
            if g:
                g = primitive(g)
                if divides(g, pa) and divides(g, pb):
                    return [c * v for v in g]
        xi = xi * 73794 // 27011 + 1
    return gcd_prs(a, b)


def squarefree_part(a):
    a = primitive(a)
    if len(a) <= 2:
        return a
    g = gcd(a, deriv(a))
    if len(g) == 1:
        return a
    return primitive(exact_div(a, g))


def bareiss_det(m):
    """Fraction-free Gaussian elimination; m is a list of int rows (mutated)."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        mk = m[k]
        akk = mk[k]
        for i in range(k + 1, n):
            mi = m[i]
            aik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * akk - aik * mk[j]) // prev
            mi[k] = 0
        prev = akk
    return sign * m[n - 1][n - 1]


def sylvester(a, b, da=None, db=None):
    """Sylvester matrix of a, b with formal degrees da, db (highest first)."""
    da = len(a) - 1 if da is None else da
    db = len(b) - 1 if db is None else db
    ra = [a[i] if i < len(a) else 0 for i in range(da, -1, -1)]
    rb = [b[i] if i < len(b) else 0 for i in range(db, -1, -1)]
    size = da + db
    rows = []
    for i in range(db):
        rows.append([0] * i + ra + [0] * (size - i - da - 1))
    for i in range(da):
        rows.append([0] * i + rb + [0] * (size - i - db - 1))
    return rows


def resultant(a, b, da=None, db=None):
    """Res_x(a, b) from the Sylvester determinant with formal degrees."""
    da = len(a) - 1 if da is None else da
    db = len(b) - 1 if db is None else db
    if da < 0 or db < 0:
        return 0
    if da == 0:
        return (a[0] if a else 0) ** db
    if db == 0:
        return (b[0] if b else 0) ** da
    return bareiss_det(sylvester(a, b, da, db))


def graeffe(a):
    """Polynomial whose roots are the squares of the roots of a.

    Even part of (-1)**d * a(x) * a(-x), compressed by x**2 -> x.
    """
    d = len(a) - 1
    prod = mul(a, negate_var(a))
    out = prod[0::2]
    if d & 1:
        out = [-v for v in out]
    return trim(out)


def rem_monic_sparse(vec, mod_deg, low_terms):
    """Reduce an int vector modulo a monic polynomial given by its lower terms.

    ``low_terms`` lists (j, c) for the nonzero coefficients below the leading
    one.  The vector is modified in place and truncated to length mod_deg.
    """
    for i in range(len(vec) - 1, mod_deg - 1, -1):
        c = vec[i]
        if c:
            base = i - mod_deg
            for j, pc in low_terms:
                vec[base + j] -= c * pc
            vec[i] = 0
    del vec[mod_deg:]
    return vec

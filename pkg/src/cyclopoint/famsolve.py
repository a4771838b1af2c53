"""Rational-parameter families of cyclotomic points.

Given f(n, x) over Q, :func:`solve_param_family` finds every pair
(n0, w) with n0 rational, w a root of unity and f(n0, w) = 0.
:func:`solve_param_curve` does the same for triples (n0, w, t) on
f(n, x, y) by eliminating y against the seven sign/square substitutions
and lifting the pairs it finds.

Solutions come back as :class:`SolutionFamily` objects: the parameter is a
fixed rational or FREE, and each coordinate is a root of unity times a
monomial in free root-of-unity parameters W1, W2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .cycpart import (
    cyclotomic_part, cyclotomic_part_over_field, conjugate_norm, norm_via_resultant,
)
from .exact import CycloElement, RootOfUnity, rational_to_json
from .poly import (
    SparsePoly, content_in, exact_div, exponent_gcd_decompose, gcd, rational_roots,
    resultant, squarefree_part, substitute_signed,
)

__all__ = [
    "FREE", "Coord", "SolutionFamily", "SupportLattice", "support_lattice",
    "smith_normal_form", "monomial_system_solve", "solve_param_family",
    "solve_param_curve", "family_satisfies", "DegenerateInputError",
    "CURVE_SUBSTITUTIONS",
]

FREE = None
ONE = RootOfUnity(1, 0)


class DegenerateInputError(ValueError):
    """An elimination step could not make progress on this input."""


# ------------------------------------------------------------ lattice math

def _ext_gcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class SupportLattice:
    """Lattice generated by differences of support exponents, in HNF."""

    basis: tuple
    rank: int

    @property
    def is_full(self):
        return self.basis == ((1, 0), (0, 1))

    @property
    def index(self):
        if self.rank != 2:
            return None
        (a, b), (c, d) = self.basis
        return abs(a * d - b * c)


def lattice_hnf(vectors) -> SupportLattice:
    row = None
    d = 0
    for p, q in vectors:
        if p == 0 and q == 0:
            continue
        if p == 0:
            d = math.gcd(d, q)
            continue
        if row is None:
            row = (p, q)
            continue
        a, b = row
        g, s, t = _ext_gcd(a, p)
        d = math.gcd(d, (p // g) * b - (a // g) * q)
        row = (g, s * b + t * q)
    if row is None:
        return SupportLattice(((0, d),), 1) if d else SupportLattice((), 0)
    a, b = row
    if a < 0:
        a, b = -a, -b
    if d == 0:
        return SupportLattice(((a, b),), 1)
    b %= d
    if 2 * b > d:
        b -= d
    return SupportLattice(((a, b), (0, d)), 2)


def support_lattice(f: SparsePoly, vars=("x", "y")) -> SupportLattice:
    """Lattice of differences of the (x, y)-support of f (n counts as a
    coefficient)."""
    ix = [f.index(v) for v in vars]
    supp = sorted({tuple(e[i] for i in ix) for e in f.terms})
    if not supp:
        return SupportLattice((), 0)
    base = supp[0]
    return lattice_hnf([(p - base[0], q - base[1]) for p, q in supp[1:]])


def smith_normal_form(M):
    """(U, D, V) with U*M*V = D diagonal, d1 | d2, U and V unimodular (2x2)."""
    A = [list(r) for r in M]
    U = [[1, 0], [0, 1]]
    V = [[1, 0], [0, 1]]

    def swap_rows(X, i, j):
        X[i], X[j] = X[j], X[i]

    def swap_cols(X, i, j):
        for r in X:
            r[i], r[j] = r[j], r[i]

    def add_row(X, dst, src, k):
        X[dst] = [a + k * b for a, b in zip(X[dst], X[src])]

    def add_col(X, dst, src, k):
        for r in X:
            r[dst] += k * r[src]

    while True:
        nz = [(abs(A[i][j]), i, j) for i in range(2) for j in range(2) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        if i:
            swap_rows(A, 0, 1)
            swap_rows(U, 0, 1)
        if j:
            swap_cols(A, 0, 1)
            swap_cols(V, 0, 1)
        p = A[0][0]
        done = True
        if A[1][0]:
            k = -(A[1][0] // p)
            add_row(A, 1, 0, k)
            add_row(U, 1, 0, k)
            if A[1][0]:
                done = False
        if A[0][1]:
            k = -(A[0][1] // p)
            add_col(A, 1, 0, k)
            add_col(V, 1, 0, k)
            if A[0][1]:
                done = False
        if not done:
            continue
        if A[1][1] % p:
            add_row(A, 0, 1, 1)
            add_row(U, 0, 1, 1)
            continue
        break
    for i in range(2):
        if A[i][i] < 0:
            A[i] = [-v for v in A[i]]
            U[i] = [-v for v in U[i]]
    return U, A, V


def monomial_system_solve(M, targets):
    """All root-of-unity (x, y) with x^M[i][0] * y^M[i][1] = targets[i].

    M must be a nonsingular 2x2 integer matrix; there are |det M| solutions.
    """
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if det == 0:
        raise ValueError("monomial system matrix is singular")
    U, D, V = smith_normal_form(M)
    th = [t.angle for t in targets]
    ut = [U[0][0] * th[0] + U[0][1] * th[1], U[1][0] * th[0] + U[1][1] * th[1]]
    d1, d2 = D[0][0], D[1][1]
    sols = set()
    for k1 in range(d1):
        g1 = (ut[0] + k1) / d1
        for k2 in range(d2):
            g2 = (ut[1] + k2) / d2
            a = V[0][0] * g1 + V[0][1] * g2
            b = V[1][0] * g1 + V[1][1] * g2
            sols.add((RootOfUnity.from_angle(a), RootOfUnity.from_angle(b)))
    return sorted(sols)


# -------------------------------------------------------------- families

@dataclass(frozen=True, order=True)
class Coord:
    """base * prod(W_j ** powers[j])."""

    base: RootOfUnity
    powers: tuple = ()

    def to_json(self):
        if not any(self.powers):
            return self.base.to_json()
        if self.base.is_one() and sum(1 for p in self.powers if p) == 1 and 1 in self.powers:
            if len(self.powers) == 1:
                return "FREE"
        return {"base": self.base.to_json(), "powers": list(self.powers)}


def _sort_n(n):
    return (1, Fraction(0)) if n is None else (0, n)


@dataclass(frozen=True)
class SolutionFamily:
    """Parameter value (or FREE) and coordinates over free parameters."""

    n: Fraction | None
    coords: tuple
    nfree: int
    provenance: str = field(default="", compare=False)

    @property
    def kind(self):
        return ("point", "line", "all")[self.nfree] if len(self.coords) == 2 else \
            ("point", "all")[self.nfree]

    def sort_key(self):
        return (_sort_n(self.n), self.nfree, self.coords)

    def is_point(self):
        return self.nfree == 0

    def point(self):
        return tuple(c.base for c in self.coords)

    def line_data(self):
        """((p, q), mu) for a line: {(x, y): x^q * y^-p = mu}."""
        p, q = self.coords[0].powers[0], self.coords[1].powers[0]
        x, y = self.coords[0].base, self.coords[1].base
        return (p, q), x ** q * y ** (-p)

    def contains(self, other: "SolutionFamily") -> bool:
        if len(self.coords) != len(other.coords):
            return False
        if self.n is not None and other.n != self.n:
            return False
        if self.nfree == len(self.coords):
            return True
        if other.nfree > self.nfree:
            return False
        if self.nfree == 0:
            return self.coords == other.coords
        # self is a line in two coordinates
        (p, q), mu = self.line_data()
        if other.nfree == 0:
            x, y = other.point()
            return x ** q * y ** (-p) == mu
        return other.line_data() == ((p, q), mu)

    def sample_points(self, ws=(RootOfUnity(1, 0), RootOfUnity(3, 1), RootOfUnity(5, 2), RootOfUnity(7, 3))):
        """A few concrete members (W parameters drawn from ws)."""
        if self.nfree == 0:
            return [self.point()]
        out = []
        if self.nfree == 1:
            for w in ws:
                out.append(tuple(c.base * w ** c.powers[0] for c in self.coords))
        else:
            for w1 in ws:
                for w2 in ws[:2]:
                    out.append(tuple(c.base * w1 ** c.powers[0] * w2 ** c.powers[1]
                                     for c in self.coords))
        return out

    def to_json(self):
        return {
            "n": "FREE" if self.n is None else rational_to_json(self.n),
            "coords": [c.to_json() for c in self.coords],
            "free": self.nfree,
            "kind": self.kind,
            "provenance": self.provenance,
        }


def make_family(n, coords, provenance=""):
    """Canonical family from raw (base, powers) coordinates.

    The free parameters may be redundant; the family is the image of a torus
    under the power matrix, so only the rank and (for lines) the primitive
    direction and coset matter.
    """
    n = None if n is None else Fraction(n)
    coords = [(b, tuple(p)) for b, p in coords]
    m = len(coords)
    k = max((len(p) for _, p in coords), default=0)
    cols = [tuple(p[j] if j < len(p) else 0 for _, p in coords) for j in range(k)]
    cols = [c for c in cols if any(c)]
    if m == 1:
        if cols:
            return SolutionFamily(n, (Coord(ONE, (1,)),), 1, provenance)
        return SolutionFamily(n, (Coord(coords[0][0], ()),), 0, provenance)
    rank = 0
    if cols:
        rank = 1
        c0 = cols[0]
        for c in cols[1:]:
            if c0[0] * c[1] - c0[1] * c[0]:
                rank = 2
                break
    if rank == 2:
        return SolutionFamily(n, (Coord(ONE, (1, 0)), Coord(ONE, (0, 1))), 2, provenance)
    if rank == 0:
        return SolutionFamily(n, tuple(Coord(b, ()) for b, _ in coords), 0, provenance)
    g = math.gcd(*cols[0])
    p, q = cols[0][0] // g, cols[0][1] // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    xi, eta = coords[0][0], coords[1][0]
    mu = xi ** q * eta ** (-p)
    _, d, c = _ext_gcd(q, p)          # d*q + c*p = 1
    return SolutionFamily(n, (Coord(mu ** d, (p,)), Coord(mu ** (-c), (q,))), 1, provenance)


def point_family(n, pts, provenance=""):
    return make_family(n, [(r, ()) for r in pts], provenance)


def free_coord():
    return (ONE, (1,))


def reduce_families(fams) -> list:
    """Drop duplicates and families contained in another one; sorted."""
    uniq = {}
    for f in fams:
        uniq.setdefault((f.n, f.coords, f.nfree), f)
    fams = list(uniq.values())
    # a family can only contain families of smaller or equal size
    fams.sort(key=lambda f: -(f.nfree + 3 * (f.n is None)))
    kept: list = []
    for f in fams:
        if any(k.contains(f) for k in kept):
            continue
        kept.append(f)
    return sorted(kept, key=SolutionFamily.sort_key)


# ---------------------------------------------------------- verification

def family_satisfies(f: SparsePoly, fam: SolutionFamily, param: str, vars) -> bool:
    """Exact symbolic check that f vanishes on the whole family."""
    idx = [f.index(v) for v in vars]
    ip = f.index(param) if param in f.vars else None
    L = 1
    for c in fam.coords:
        L = L * c.base.order // math.gcd(L, c.base.order)
    groups: dict = {}
    for e, c in f.terms.items():
        ang = sum(e[i] * co.base.angle for i, co in zip(idx, fam.coords))
        wexp = tuple(sum(e[i] * (co.powers[j] if j < len(co.powers) else 0)
                         for i, co in zip(idx, fam.coords)) for j in range(fam.nfree))
        pe = e[ip] if ip is not None else 0
        if fam.n is not None:
            coeff = c * fam.n ** pe
            key = wexp
        else:
            coeff = c
            key = (pe, wexp)
        rest = tuple(v for j, v in enumerate(e) if j not in idx and j != ip)
        key = (key, rest)
        groups.setdefault(key, {})
        k = int(ang * L) % L
        groups[key][k] = groups[key].get(k, 0) + coeff
    for acc in groups.values():
        if not CycloElement.from_terms(L, acc).is_zero():
            return False
    return True


# ------------------------------------------------------- family solver

def _strip_var_monomial(f, var):
    m = f.min_degree(var)
    if m == 0:
        return f
    shift = [0] * len(f.vars)
    shift[f.index(var)] = -m
    return f.shift(shift)


def _nth_roots(mu: RootOfUnity, m: int):
    return [RootOfUnity.from_angle((mu.angle + k) / m) for k in range(m)]


def solve_param_family(f: SparsePoly, param: str = "n", var: str = "x",
                       verify: bool = True) -> list:
    """All (n0, w) with n0 rational, w a root of unity and f(n0, w) = 0.

    Returns canonical SolutionFamily objects with one coordinate; n0 may be
    FREE and w may be FREE.
    """
    if not isinstance(f, SparsePoly):
        raise TypeError("expected a SparsePoly")
    extra = set(f.used_vars()) - {param, var}
    if extra:
        raise ValueError(f"unexpected variables {sorted(extra)}")
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    g = f.with_vars((param, var))
    fams = reduce_families(_family(g, param, var, "family"))
    if verify:
        for fam in fams:
            if not family_satisfies(g, fam, param, (var,)):
                raise AssertionError(f"solver produced a non-solution {fam}")
    return fams


def _family(f, P, X, prov):
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    f = _strip_var_monomial(f, X)
    if f.is_const():
        return []
    out = []
    # factors free of x give lines n = r
    if f.degree(X) > 0:
        c = content_in(f, X)
    else:
        c = f
    if not c.is_const():
        for r in rational_roots(c):
            out.append(make_family(r, [free_coord()], prov + ":n-only"))
        f = exact_div(f, c)
        if f.is_const():
            return out
    # factors free of n give fixed roots with n free
    d = content_in(f, P) if f.degree(P) > 0 else f
    if not d.is_const():
        for w in cyclotomic_part(d).roots:
            out.append(make_family(None, [(w, ())], prov + ":x-only"))
        f = exact_div(f, d)
        if f.is_const():
            return out
    f = squarefree_part(f, X)
    m, g = exponent_gcd_decompose(f, X)
    if m > 1:
        for fam in _family(g, P, X, prov):
            if fam.nfree:
                out.append(make_family(fam.n, [free_coord()], prov + f":root{m}"))
            else:
                for w in _nth_roots(fam.coords[0].base, m):
                    out.append(make_family(fam.n, [(w, ())], prov + f":root{m}"))
        return out
    for i, mode in enumerate(("neg", "sq", "negsq"), start=1):
        fi = substitute_signed(f, X, mode)
        h = resultant(f, fi, X)
        if h.is_zero():
            G = gcd(f, fi, X)
            H = exact_div(f, G)
            if G.is_const() or H is None or H.is_const():
                raise DegenerateInputError(
                    f"resultant with h_{i} vanishes but no proper factor was found")
            return out + _family(G, P, X, prov) + _family(H, P, X, prov)
        for r in rational_roots(h):
            fr = f.subs(P, r)
            for w in cyclotomic_part(fr).roots:
                out.append(make_family(r, [(w, ())], prov + f":h{i}"))
    return out


# -------------------------------------------------------- curve solver

CURVE_SUBSTITUTIONS = (
    ((-1, 1), (1, 1)),    # f(n, -x, y)
    ((1, 1), (-1, 1)),    # f(n, x, -y)
    ((-1, 1), (-1, 1)),   # f(n, -x, -y)
    ((1, 2), (1, 2)),     # f(n, x^2, y^2)
    ((-1, 2), (1, 2)),    # f(n, -x^2, y^2)
    ((1, 2), (-1, 2)),    # f(n, x^2, -y^2)
    ((-1, 2), (-1, 2)),   # f(n, -x^2, -y^2)
)


class _CurveContext:
    def __init__(self):
        self.norm_free = {}     # m -> (N(n, y), families of N)
        self.norm_fixed = {}    # (n0, m) -> norm in y
        self.cyc_fixed = {}     # (n0, m) -> cyclotomic part result
        self.fixed_curves = {}  # n0 -> families of f(n0, x, y)


def solve_param_curve(f: SparsePoly, param: str = "n", vars=("x", "y"),
                      verify: bool = True) -> list:
    """All (n0, w, t) with n0 rational, w and t roots of unity and
    f(n0, w, t) = 0, as canonical two-coordinate SolutionFamily objects."""
    X, Y = vars
    extra = set(f.used_vars()) - {param, X, Y}
    if extra:
        raise ValueError(f"unexpected variables {sorted(extra)}")
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    g = f.with_vars((param, X, Y))
    fams = reduce_families(_curve(g, param, X, Y, _CurveContext(), "curve"))
    if verify:
        for fam in fams:
            if not family_satisfies(g, fam, param, (X, Y)):
                raise AssertionError(f"solver produced a non-solution {fam}")
    return fams


def _xy_content(f, P, X, Y):
    """gcd of the (x, y)-coefficients of f: the factor depending on n only."""
    ix, iy = f.index(X), f.index(Y)
    groups = {}
    for e, c in f.terms.items():
        ne = list(e)
        ne[ix] = ne[iy] = 0
        groups.setdefault((e[ix], e[iy]), {})[tuple(ne)] = c
    polys = sorted((SparsePoly(f.vars, t) for t in groups.values()), key=lambda p: len(p.terms))
    g = polys[0].primitive()
    for p in polys[1:]:
        if g.is_const():
            break
        g = gcd(g, p)
    return g


def _pullback(fam, M, prov):
    """Families in (x, y) mapping onto fam under (u, v) = (x^M0, y^M1)."""
    (a, b), (c, d) = M
    adj = ((d, -b), (-c, a))
    bases = tuple(co.base for co in fam.coords)
    pw = [[co.powers[j] if j < len(co.powers) else 0 for j in range(fam.nfree)]
          for co in fam.coords]
    out = []
    for xi, eta in monomial_system_solve(M, bases):
        cols = []
        for j in range(fam.nfree):
            k, l = pw[0][j], pw[1][j]
            cols.append((adj[0][0] * k + adj[0][1] * l, adj[1][0] * k + adj[1][1] * l))
        px = tuple(cv[0] for cv in cols)
        py = tuple(cv[1] for cv in cols)
        out.append(make_family(fam.n, [(xi, px), (eta, py)], prov))
    return out


def _change_lattice(f, basis, P, X, Y):
    """g with f = x^s y^t g(u, v), u = x^a y^b, v = x^c y^d (HNF basis)."""
    (a, b), (_, d) = basis
    ix, iy = f.index(X), f.index(Y)
    supp = sorted({(e[ix], e[iy]) for e in f.terms})
    base = supp[0]
    out = {}
    for e, c in f.terms.items():
        dx, dy = e[ix] - base[0], e[iy] - base[1]
        i, r = divmod(dx, a)
        if r:
            raise AssertionError("support not in lattice")
        j, r = divmod(dy - i * b, d)
        if r:
            raise AssertionError("support not in lattice")
        ne = list(e)
        ne[ix], ne[iy] = i, j
        out[tuple(ne)] = c
    return SparsePoly(f.vars, out, _clean=True).clear_monomial()


def _curve(f, P, X, Y, ctx, prov):
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    f = _strip_var_monomial(_strip_var_monomial(f, X), Y)
    if f.is_const():
        return []
    out = []
    # factor depending on n only: whole (x, y)-torus for its rational roots
    c = _xy_content(f, P, X, Y)
    if not c.is_const():
        for r in rational_roots(c):
            out.append(make_family(r, [(ONE, (1, 0)), (ONE, (0, 1))], prov + ":n-only"))
        f = exact_div(f, c)
        if f.is_const():
            return out
    # factor free of y: y arbitrary
    cy = content_in(f, Y) if f.degree(Y) > 0 else f
    if not cy.is_const():
        for fam in _family(cy.with_vars(f.vars), P, X, prov + ":y-free"):
            xc = (ONE, (1, 0)) if fam.nfree else (fam.coords[0].base, (0, 0))
            out.append(make_family(fam.n, [xc, (ONE, (0, 1))], prov + ":y-free"))
        f = exact_div(f, cy)
        if f.is_const():
            return out
    cx = content_in(f, X) if f.degree(X) > 0 else f
    if not cx.is_const():
        sw = cx.rename({X: Y, Y: X}).with_vars(f.vars)
        for fam in _family(sw, P, X, prov + ":x-free"):
            yc = (ONE, (0, 1)) if fam.nfree else (fam.coords[0].base, (0, 0))
            out.append(make_family(fam.n, [(ONE, (1, 0)), yc], prov + ":x-free"))
        f = exact_div(f, cx)
        if f.is_const():
            return out
    f = squarefree_part(f, Y)
    lat = support_lattice(f, (X, Y))
    if lat.rank == 0:
        return out
    if lat.rank == 1:
        (a, b), = lat.basis
        g0 = math.gcd(a, b)
        ap, bp = a // g0, b // g0
        _, s, t = _ext_gcd(ap, bp)     # s*ap + t*bp = 1
        M = ((a, b), (-t, s))          # det = g0
        g = _lattice_rank1_poly(f, (a, b), P, X, Y)
        for fam in _family(g, P, X, prov + ":rank1"):
            uc = (ONE, (1, 0)) if fam.nfree else (fam.coords[0].base, (0, 0))
            lifted = make_family(fam.n, [uc, (ONE, (0, 1))])
            out.extend(_pullback(lifted, M, prov + ":rank1"))
        return out
    if not lat.is_full:
        g = _change_lattice(f, lat.basis, P, X, Y)
        for fam in _curve(g, P, X, Y, ctx, prov + ":lattice"):
            out.extend(_pullback(fam, lat.basis, prov + ":lattice"))
        return out
    for i, ((sx, px), (sy, py)) in enumerate(CURVE_SUBSTITUTIONS, start=1):
        fi = f.compose_signed(X, sx, px).compose_signed(Y, sy, py)
        gi = resultant(f, fi, Y)
        if gi.is_zero():
            G = gcd(f, fi, Y)
            H = exact_div(f, G)
            if G.is_const() or H is None or H.is_const():
                raise DegenerateInputError(
                    f"f divides its substitution f_{i}; factor the input first")
            return out + _curve(G, P, X, Y, ctx, prov) + _curve(H, P, X, Y, ctx, prov)
        for fam in _family(gi.with_vars(f.vars), P, X, prov + f":g{i}"):
            out.extend(_lift(f, fam, P, X, Y, ctx, prov + f":g{i}"))
    return out


def _lattice_rank1_poly(f, vec, P, X, Y):
    """g(n, u) with f = x^s y^t g(n, x^a y^b), written in the X slot."""
    a, b = vec
    ix, iy = f.index(X), f.index(Y)
    supp = sorted({(e[ix], e[iy]) for e in f.terms})
    base = supp[0]
    out = {}
    for e, c in f.terms.items():
        dx, dy = e[ix] - base[0], e[iy] - base[1]
        k = dx // a if a else dy // b
        if (k * a, k * b) != (dx, dy):
            raise AssertionError("support not on the rank-one lattice")
        ne = list(e)
        ne[ix], ne[iy] = k, 0
        out[tuple(ne)] = c
    return SparsePoly(f.vars, out, _clean=True).clear_monomial()


def _lift(f, fam, P, X, Y, ctx, prov):
    n0 = fam.n
    if fam.nfree:
        if n0 is None:
            raise AssertionError("resultant family with everything free")
        sub = f.subs(P, n0)
        key = n0
        if key not in ctx.fixed_curves:
            ctx.fixed_curves[key] = _curve(sub, P, X, Y, ctx, prov + ":fixed-n")
        return [make_family(n0, [(c.base, c.powers) for c in fm.coords], prov + ":fixed-n")
                for fm in ctx.fixed_curves[key] if fm.n is None or fm.n == n0]
    w = fam.coords[0].base
    m = w.order
    out = []
    if n0 is not None:
        G = f.subs(P, n0).subs_root(X, w)
        if G.is_zero():
            return [make_family(n0, [(w, ()), (ONE, (1,))], prov + ":y-free")]
        key = (n0, m)
        if key not in ctx.cyc_fixed:
            Nm = norm_via_resultant(f.subs(P, n0), X, m)
            if Nm.is_zero():
                # some conjugate of G vanishes identically; use G's own norm
                res = cyclotomic_part_over_field(G, norm=conjugate_norm(G, Y))
                return [make_family(n0, [(w, ()), (t, ())], prov + ":lift") for t in res.roots]
            ctx.cyc_fixed[key] = cyclotomic_part(Nm)
        for t in ctx.cyc_fixed[key].roots:
            if G.subs_root(Y, t).is_zero():
                out.append(make_family(n0, [(w, ()), (t, ())], prov + ":lift"))
        return out
    # n free, w fixed: solve the norm as a family in (n, y), then refine
    if m not in ctx.norm_free:
        Nm = norm_via_resultant(f, X, m)
        if Nm.is_zero():
            raise DegenerateInputError("norm vanished identically")
        Ny = Nm.rename({X: Y, Y: X}).with_vars(f.vars)
        fams = _family(Ny, P, X, prov + ":norm")
        ctx.norm_free[m] = fams
    F = f.subs_root(X, w)
    for nf in ctx.norm_free[m]:
        r = nf.n
        if nf.nfree == 0:
            t = nf.coords[0].base
            if r is not None:
                val = F.subs(P, r).subs_root(Y, t)
                if val.is_zero():
                    out.append(make_family(r, [(w, ()), (t, ())], prov + ":norm"))
                continue
            Pn = F.subs_root(Y, t)
            if Pn.is_zero():
                out.append(make_family(None, [(w, ()), (t, ())], prov + ":norm"))
                continue
            for r2 in _common_rational_roots(Pn, P):
                out.append(make_family(r2, [(w, ()), (t, ())], prov + ":norm"))
        else:
            if r is None:
                raise AssertionError("norm family with everything free")
            Q = F.subs(P, r)
            if Q.is_zero():
                out.append(make_family(r, [(w, ()), (ONE, (1,))], prov + ":norm"))
                continue
            res = cyclotomic_part_over_field(Q)
            for t in res.roots:
                out.append(make_family(r, [(w, ()), (t, ())], prov + ":norm"))
    return out


def _common_rational_roots(Pn: SparsePoly, P: str) -> list:
    """Rational n with Pn(n) = 0, Pn having cyclotomic coefficients."""
    L = 1
    for c in Pn.terms.values():
        if isinstance(c, CycloElement):
            L = L * c.n // math.gcd(L, c.n)
    ip = Pn.index(P)
    coord_polys: dict = {}
    for e, c in Pn.terms.items():
        ce = c.embed(L) if isinstance(c, CycloElement) else CycloElement.rational(c, L)
        for j, v in enumerate(ce.coords):
            if v:
                coord_polys.setdefault(j, {})[e[ip]] = v
    polys = [SparsePoly.from_dense([d.get(k, 0) for k in range(max(d) + 1)], P)
             for d in coord_polys.values()]
    g = reduce(lambda a, b: gcd(a, b), polys)
    if g.is_const():
        return []
    return rational_roots(g)

"""Polygon diagonals as cyclotomic numbers, and the degree of their ratios.

A diagonal |1 - zeta_N^a| equals zeta_4N^(N-2a) + zeta_4N^(3N+2a), a sum of
two roots of unity whose product is 1.  An automorphism fixing the ratio of
two such diagonals is a zero of

    f(x1, x2, y1, y2) = (x1 + 1/x1)(y2 + 1/y2) + (x2 + 1/x2)(y1 + 1/y1)

in roots of unity (expanded, the four conjugate pairs x1*y2 + 1/(x1*y2) and
so on), and those zeros come from vanishing four-term cosine sums.  This
module carries the cosine-sum solutions, the classification of zeros of f
with its seven symmetries, the defectiveness congruences and the degree of
Q(d1/d2) with an independent Galois-orbit oracle.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import CycloElement, RootOfUnity, minimal_polynomial, totient, units_mod
from .poly import SparsePoly

__all__ = [
    "DiagonalRatio", "diagonal_rep", "diagonal_element", "verify_diagonal",
    "CJSolution", "SPORADIC", "cos_sum_element", "verify_cj", "cj_solutions",
    "QuadrupleSolution", "quadruple_poly", "quadruple_value", "SYMMETRIES",
    "apply_symmetry", "symmetry_orbit", "ParamFamily", "PARAM_FAMILIES",
    "TABLE", "Lemma42Result", "lemma42_solutions", "solve_quadruple_from_cj",
    "defective_congruence", "Defectiveness", "is_defective", "oracle_degree", "field_degree",
    "ratio_minpoly", "ratio_degree", "count_fixing_automorphisms", "fixing_units",
    "theorem11_scan", "totient_bound_check",
]


def _fold(k, N):
    k %= N
    return min(k, N - k)


# ------------------------------------------------------------ diagonals

def diagonal_rep(N: int, a: int):
    """Exponents (e1, e2) mod 4N with zeta_4N^e1 + zeta_4N^e2 = |1 - zeta_N^a|."""
    if N < 1 or a % N == 0:
        raise ValueError("a must be nonzero mod N")
    return ((N - 2 * a) % (4 * N), (3 * N + 2 * a) % (4 * N))


def diagonal_element(N: int, a: int) -> CycloElement:
    e1, e2 = diagonal_rep(N, a)
    if e1 == e2:                      # a = N/2: the diameter, 2
        return CycloElement.from_terms(4 * N, {e1: 2})
    return CycloElement.from_terms(4 * N, {e1: 1, e2: 1})


def verify_diagonal(N: int, a: int) -> bool:
    """d^2 = (1 - z^a)(1 - z^-a) exactly, and d > 0.

    d = 2cos(2 pi e / 4N) with e = N - 2a' for the representative a' in
    (0, N); its sign is positive iff |e| < N, an integer comparison.
    """
    d = diagonal_element(N, a)
    c = CycloElement.from_terms(N, {0: 2})
    for k in (a % N, (-a) % N):       # the same key when 2a = N
        c = c - CycloElement.from_terms(N, {k: 1})
    ar = a % N
    return d * d == c and abs(N - 2 * ar) < N


@dataclass(frozen=True)
class DiagonalRatio:
    N: int
    a: int
    b: int

    def __post_init__(self):
        if self.N < 3 or not (1 <= self.a < self.N and 1 <= self.b < self.N):
            raise ValueError(f"exponents must lie in [1, N-1]: {self}")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"exponents must be coprime: {self}")

    @property
    def trivial(self) -> bool:
        """d1 = d2 (equal folded exponents)."""
        return _fold(self.a, self.N) == _fold(self.b, self.N)

    def d1(self):
        return diagonal_element(self.N, self.a)

    def d2(self):
        return diagonal_element(self.N, self.b)

    def ratio(self) -> CycloElement:
        return self.d1() / self.d2()

    def to_json(self):
        return {"N": self.N, "a": self.a, "b": self.b,
                "numerator_exps": list(diagonal_rep(self.N, self.a)),
                "denominator_exps": list(diagonal_rep(self.N, self.b))}


# ------------------------------------------------------------ cosine sums

def _norm2(v):
    v = Fraction(v) % 2
    return v


@dataclass(frozen=True)
class CJSolution:
    """Four rationals v (mod 2) with sum cos(pi v) = 0."""

    kind: str
    values: tuple
    params: tuple = ()

    def to_json(self):
        return {"kind": self.kind, "values": [str(v) for v in self.values],
                "params": [str(p) for p in self.params]}


def _cj(kind, vals, params=()):
    return CJSolution(kind, tuple(sorted(_norm2(v) for v in vals)), tuple(Fraction(p) for p in params))


_F = Fraction
# listed as five pairs; the second of each pair is the negation v -> 1 - v
_SPORADIC_RAW = (
    (_F(2, 5), _F(1, 2), _F(4, 5), _F(1, 3)), (_F(3, 5), _F(1, 2), _F(1, 5), _F(2, 3)),
    (_F(1), _F(1, 5), _F(3, 5), _F(1, 3)), (_F(0), _F(4, 5), _F(2, 5), _F(2, 3)),
    (_F(2, 5), _F(7, 15), _F(13, 15), _F(1, 3)), (_F(3, 5), _F(8, 15), _F(2, 15), _F(2, 3)),
    (_F(4, 5), _F(1, 15), _F(11, 15), _F(1, 3)), (_F(1, 5), _F(14, 15), _F(4, 15), _F(2, 3)),
    (_F(2, 7), _F(4, 7), _F(6, 7), _F(1, 3)), (_F(1, 7), _F(3, 7), _F(5, 7), _F(2, 3)),
)
SPORADIC = tuple(CJSolution("sporadic", v) for v in _SPORADIC_RAW)


def cos_sum_element(values) -> CycloElement:
    """sum 2cos(pi v) built from 2cos(pi p/q) = zeta_2q^p + zeta_2q^-p."""
    L = 1
    for v in values:
        d = 2 * Fraction(v).denominator
        L = L * d // math.gcd(L, d)
    terms: dict = {}
    for v in values:
        e = int(Fraction(v) * L / 2) % L
        for k in (e, (-e) % L):
            terms[k] = terms.get(k, 0) + 1
    return CycloElement.from_terms(L, terms)


def verify_cj(sol: CJSolution) -> bool:
    return cos_sum_element(sol.values).is_zero()


def _fractions_upto(bound, lo=Fraction(0), hi=Fraction(1)):
    out = set()
    for q in range(1, bound + 1):
        for p in range(0, 2 * q + 1):
            v = Fraction(p, q)
            if lo <= v < hi:
                out.add(v)
    return sorted(out)


def cj_solutions(denominator_bound: int, verify: bool = True) -> list:
    """Parametric families over alpha, beta in [0, 1) with bounded denominators,
    plus the ten sporadic quadruples; duplicates (as multisets) removed."""
    if denominator_bound < 1:
        raise ValueError("bound must be at least 1")
    grid = _fractions_upto(denominator_bound)
    seen = {}
    for i, al in enumerate(grid):
        for be in grid[i:]:
            s = _cj("family1", (al, be, 1 - al, 1 - be), (al, be))
            seen.setdefault(s.values, s)
    for al in grid:
        s = _cj("family2", (al, Fraction(2, 3) - al, Fraction(2, 3) + al, Fraction(1, 2)), (al,))
        seen.setdefault(s.values, s)
    out = list(seen.values()) + list(SPORADIC)
    if verify:
        bad = [s for s in out if not verify_cj(s)]
        if bad:
            raise AssertionError(f"cosine sums do not vanish: {bad[:3]}")
    return out


# ------------------------------------------------------------ quadruples

QVARS = ("x1", "x2", "y1", "y2")


@dataclass(frozen=True, order=True)
class QuadrupleSolution:
    x1: RootOfUnity
    x2: RootOfUnity
    y1: RootOfUnity
    y2: RootOfUnity
    sign_orbit: str = field(default="", compare=False)

    def tup(self):
        return (self.x1, self.x2, self.y1, self.y2)

    def verify(self) -> bool:
        return quadruple_value(self.tup()).is_zero()

    def sign_variants(self):
        """The four members of the +-(x1, y2), +-(x2, y1) pairing."""
        out = []
        for s1 in (False, True):
            for s2 in (False, True):
                x1, y2 = (-self.x1, -self.y2) if s1 else (self.x1, self.y2)
                x2, y1 = (-self.x2, -self.y1) if s2 else (self.x2, self.y1)
                out.append(QuadrupleSolution(x1, x2, y1, y2, self.sign_orbit))
        return out

    def to_json(self):
        return {"x1": self.x1.to_json(), "x2": self.x2.to_json(),
                "y1": self.y1.to_json(), "y2": self.y2.to_json(),
                "sign_orbit": self.sign_orbit}


def quadruple_poly() -> SparsePoly:
    """f as a Laurent polynomial in (x1, x2, y1, y2)."""
    terms = {}
    for sx in (1, -1):
        for sy in (1, -1):
            terms[(sx, 0, 0, sy)] = 1
            terms[(0, sx, sy, 0)] = 1
    return SparsePoly(QVARS, terms)


def quadruple_value(q) -> CycloElement:
    """f at a point of roots of unity, exactly."""
    x1, x2, y1, y2 = q
    angles = []
    for u, v in ((x1, y2), (x2, y1)):
        for sv in (1, -1):
            t = u.angle + sv * v.angle
            angles += [t, -t]
    L = 1
    for t in angles:
        L = L * t.denominator // math.gcd(L, t.denominator)
    terms: dict = {}
    for t in angles:
        k = int(t * L) % L
        terms[k] = terms.get(k, 0) + 1
    return CycloElement.from_terms(L, terms)


def _inv(r):
    return r.inverse()


# each maps (x1, x2, y1, y2) to the new tuple
SYMMETRIES = (
    lambda x1, x2, y1, y2: (x2, x1, y2, y1),
    lambda x1, x2, y1, y2: (_inv(x1), x2, y1, y2),
    lambda x1, x2, y1, y2: (x1, _inv(x2), y1, y2),
    lambda x1, x2, y1, y2: (y2, x2, y1, x1),
    lambda x1, x2, y1, y2: (x1, y1, x2, y2),
    lambda x1, x2, y1, y2: (_inv(y2), x2, y1, _inv(x1)),
    lambda x1, x2, y1, y2: (x1, _inv(y1), _inv(x2), y2),
)


def apply_symmetry(i: int, q: QuadrupleSolution) -> QuadrupleSolution:
    """Symmetry number i (1..7)."""
    return QuadrupleSolution(*SYMMETRIES[i - 1](*q.tup()), q.sign_orbit)


def symmetry_orbit(q: QuadrupleSolution, limit: int = 4096) -> list:
    seen = {q.tup(): q}
    todo = [q]
    while todo:
        cur = todo.pop()
        for i in range(1, 8):
            nxt = apply_symmetry(i, cur)
            if nxt.tup() not in seen:
                seen[nxt.tup()] = nxt
                todo.append(nxt)
                if len(seen) > limit:
                    raise RuntimeError("symmetry orbit larger than expected")
    return sorted(seen.values())


# ------------------------------------------------------------ classification

Z = RootOfUnity


@dataclass(frozen=True)
class ParamFamily:
    """Coordinates base * prod(U_j ** powers[j]) in the order (x1, x2, y1, y2).

    U_j is a square root of the j-th printed parameter zeta_b^a (so a printed
    zeta_2b^a is U and zeta_b^a is U^2).  ``signs`` records any coordinate
    negation needed for f to vanish identically.
    """

    name: str
    nparams: int
    coords: tuple
    signs: tuple = (1, 1, 1, 1)
    note: str = ""

    def signed_coords(self):
        return tuple(((-b if s < 0 else b), p) for (b, p), s in zip(self.coords, self.signs))

    def instantiate(self, *params: RootOfUnity) -> QuadrupleSolution:
        if len(params) != self.nparams:
            raise ValueError(f"{self.name} takes {self.nparams} parameters")
        us = [RootOfUnity.from_angle(p.angle / 2) for p in params]
        vals = []
        for b, pw in self.signed_coords():
            r = b
            for u, k in zip(us, pw):
                r = r * u ** k
            vals.append(r)
        return QuadrupleSolution(*vals, sign_orbit=f"family {self.name}")

    def identically_zero(self, signs=None) -> bool:
        """f vanishes for every value of the parameters (symbolic check)."""
        coords = self.coords if signs is None else tuple(
            ((-b if s < 0 else b), p) for (b, p), s in zip(self.coords, signs))
        groups: dict = {}
        f = quadruple_poly()
        for e, _ in f.terms.items():
            ang = sum(k * b.angle for k, (b, _) in zip(e, coords))
            wexp = tuple(sum(k * p[j] for k, (_, p) in zip(e, coords)) for j in range(self.nparams))
            groups.setdefault(wexp, []).append(ang)
        for angs in groups.values():
            L = 1
            for t in angs:
                L = L * t.denominator // math.gcd(L, t.denominator)
            acc: dict = {}
            for t in angs:
                k = int(t * L) % L
                acc[k] = acc.get(k, 0) + 1
            if not CycloElement.from_terms(L, acc).is_zero():
                return False
        return True


def _pf(name, k, x1, x2, y1, y2):
    return ParamFamily(name, k, (x1, x2, y1, y2))


PARAM_FAMILIES = (
    _pf("A1", 1, (Z(3, 2), (2,)), (Z(24, 11), (1,)), (Z(24, 5), (1,)), (Z(3, 1), (0,))),
    _pf("A2", 1, (Z(3, 1), (2,)), (Z(24, 7), (1,)), (Z(24, 1), (1,)), (Z(3, 2), (0,))),
    _pf("A3", 1, (Z(8, 1), (1,)), (Z(1, 0), (2,)), (Z(3, 1), (0,)), (Z(8, 7), (1,))),
    # printed as a 3-tuple; read as (zeta_4 * zeta_c^d, zeta_4^3)
    _pf("B1", 2, (Z(4, 1), (2, 0)), (Z(4, 1), (0, 2)), (Z(4, 3), (0, 0)), (Z(4, 3), (0, 0))),
    # zeta_2bd^(ad+bc) = U*V with U^2 = zeta_b^a, V^2 = zeta_d^c
    _pf("B2", 2, (Z(1, 0), (1, 1)), (Z(1, 0), (-1, -1)), (Z(1, 0), (-1, 1)), (Z(1, 0), (1, -1))),
    _pf("B3", 2, (Z(4, 1), (1, 1)), (Z(4, 1), (-1, -1)), (Z(4, 3), (-1, 1)), (Z(4, 3), (1, -1))),
)

# (x1, y2, x2, y1) as (order, exp)
_TABLE_RAW = (
    ((40, 9), (40, 39), (60, 17), (60, 7)), ((10, 3), (10, 9), (24, 5), (24, 1)),
    ((60, 11), (60, 1), (40, 13), (40, 37)), ((40, 11), (40, 1), (60, 13), (60, 53)),
    ((10, 2), (10, 1), (24, 7), (24, 23)), ((60, 19), (60, 59), (40, 7), (40, 3)),
    ((10, 3), (10, 2), (60, 14), (60, 4)), ((10, 4), (10, 1), (60, 8), (60, 58)),
    ((6, 2), (6, 1), (10, 2), (10, 9)), ((5, 1), (5, 4), (15, 4), (15, 14)),
    ((10, 1), (10, 9), (30, 11), (30, 1)), ((6, 1), (6, 5), (10, 3), (10, 1)),
    ((60, 13), (60, 59), (30, 9), (30, 4)), ((60, 19), (60, 53), (30, 6), (30, 1)),
    ((60, 11), (60, 1), (30, 10), (30, 27)), ((60, 17), (60, 59), (30, 6), (30, 26)),
    ((60, 11), (60, 7), (30, 9), (30, 29)), ((60, 19), (60, 59), (30, 5), (30, 3)),
    ((60, 13), (60, 11), (30, 8), (30, 3)), ((60, 23), (60, 1), (30, 3), (30, 28)),
    ((60, 17), (60, 7), (30, 6), (30, 25)), ((60, 17), (60, 11), (30, 7), (30, 27)),
    ((60, 7), (60, 59), (30, 12), (30, 2)), ((60, 13), (60, 53), (30, 9), (30, 5)),
    ((42, 9), (42, 39), (84, 25), (84, 11)), ((42, 12), (42, 36), (84, 19), (84, 5)),
    ((84, 13), (84, 83), (42, 15), (42, 39)), ((42, 6), (42, 39), (84, 29), (84, 1)),
    ((42, 9), (42, 36), (84, 23), (84, 79)), ((84, 17), (84, 73), (42, 12), (42, 39)),
)
TABLE = tuple(
    QuadrupleSolution(Z(*x1), Z(*x2), Z(*y1), Z(*y2), sign_orbit=f"table row {i}")
    for i, (x1, y2, x2, y1) in enumerate(_TABLE_RAW, start=1)
)


@dataclass
class Lemma42Result:
    families: list               # ParamFamily, possibly sign-repaired
    rows: list                   # verified table rows (QuadrupleSolution)
    quarantined: list            # (label, reason)

    def to_json(self):
        return {
            "families": [{"name": f.name, "params": f.nparams, "signs": list(f.signs),
                          "note": f.note} for f in self.families],
            "rows": [q.to_json() for q in self.rows],
            "quarantined": [{"entry": k, "reason": r} for k, r in self.quarantined],
        }


def _sign_patterns():
    pats = list(itertools.product((1, -1), repeat=4))
    pats.sort(key=lambda p: (sum(1 for s in p if s < 0), [-s for s in p]))
    return pats


def lemma42_solutions() -> Lemma42Result:
    """Load and verify the parametric families and the 30 table rows.

    A family must vanish identically.  The printed +- pairs do not change f,
    so when the printed form fails, single coordinate negations are tried
    and the first one that works is recorded in ``signs`` with a note.
    """
    fams, quarantine = [], []
    for fam in PARAM_FAMILIES:
        if fam.identically_zero():
            fams.append(fam)
            continue
        for pat in _sign_patterns()[1:]:
            if fam.identically_zero(pat):
                fams.append(ParamFamily(fam.name, fam.nparams, fam.coords, pat,
                                        "coordinate signs repaired"))
                break
        else:
            quarantine.append((fam.name, "no sign pattern makes f vanish"))
    rows = []
    for q in TABLE:
        if q.verify():
            rows.append(q)
        else:
            quarantine.append((q.sign_orbit, "f does not vanish"))
    return Lemma42Result(fams, rows, quarantine)


def solve_quadruple_from_cj(cj: CJSolution, perm=(0, 1, 2, 3), signs=(1, 1, 1, 1)) -> set:
    """Zeros of f whose four pair sums are 2cos(pi v) for the permuted values.

    x1*y2, x1/y2, x2*y1, x2/y1 equal exp(+-i pi v); the squares of x1 and x2
    are then determined and each square root gives one solution.
    """
    if cj.params and cj.kind != "sporadic" and len(cj.values) != 4:
        raise ValueError("cosine solution must be fully instantiated")
    v = [cj.values[perm[i]] for i in range(4)]
    A, B, C, D = (RootOfUnity.from_angle(s * t / 2) for s, t in zip(signs, v))
    out = set()
    for x1 in _square_roots(A * B):
        y2 = A * x1.inverse()
        for x2 in _square_roots(C * D):
            y1 = C * x2.inverse()
            q = QuadrupleSolution(x1, x2, y1, y2, sign_orbit="from cosine sum")
            if q.verify():
                out.add(q)
    return out


def _square_roots(r: RootOfUnity):
    h = RootOfUnity.from_angle(r.angle / 2)
    return (h, -h)


# ------------------------------------------------------------ defectiveness

def defective_congruence(twoN: int, a: int, b: int):
    """Smallest unit k mod 2N with a*k = N + a and b*k = N + b (mod 2N)."""
    if twoN < 2 or twoN % 2:
        raise ValueError("modulus must be even")
    N = twoN // 2
    for k in units_mod(twoN):
        if (a * k - N - a) % twoN == 0 and (b * k - N - b) % twoN == 0:
            return k
    return None


@dataclass(frozen=True)
class Defectiveness:
    status: str              # "trivial", "by_k" or "not_defective"
    k: int | None = None
    congruence: str = ""     # "+" (as printed) or "+-" (signs on either side)

    @property
    def defective(self) -> bool:
        return self.status != "not_defective"

    def to_json(self):
        return {"defective": self.defective, "status": self.status, "k": self.k,
                "congruence": self.congruence}


def is_defective(N: int, a: int, b: int) -> Defectiveness:
    """Does d1/d2 fail to generate Q(d1, d2)?

    First the congruences k(N-2a) = 3N-2a, k(N-2b) = 3N-2b mod 4N; when
    they have no unit solution, the same with either right side negated
    (an automorphism may send a diagonal's summand to minus its inverse).
    Only the signed form matches the field degrees in general.
    """
    r = DiagonalRatio(N, a, b)
    if r.trivial:
        return Defectiveness("trivial")
    M = 4 * N
    ea, eb = N - 2 * a, N - 2 * b
    ta, tb = 3 * N - 2 * a, 3 * N - 2 * b
    for k in units_mod(M):
        if (k * ea - ta) % M == 0 and (k * eb - tb) % M == 0:
            return Defectiveness("by_k", k, "+")
    ks = fixing_units(N, a, b)
    if ks:
        return Defectiveness("by_k", ks[0], "+-")
    return Defectiveness("not_defective")


def field_degree(N: int, a: int, b: int) -> int:
    """[Q(d1, d2) : Q] from the common stabilizer of d1 and d2."""
    d1, d2 = diagonal_element(N, a), diagonal_element(N, b)
    units = units_mod(4 * N)
    fix = sum(1 for k in units if d1.galois(k) == d1 and d2.galois(k) == d2)
    return len(units) // fix


def oracle_degree(N: int, a: int, b: int) -> int:
    """[Q(d1/d2) : Q] as phi(4N) / #{k : sigma_k(d1/d2) = d1/d2}.

    sigma_k(d1) * d2 = d1 * sigma_k(d2) avoids any inversion; this is the
    size of the Galois orbit, i.e. the degree of the minimal polynomial.
    """
    d1, d2 = diagonal_element(N, a), diagonal_element(N, b)
    fix = 0
    units = units_mod(4 * N)
    for k in units:
        if d1.galois(k) * d2 == d1 * d2.galois(k):
            fix += 1
    return len(units) // fix


def ratio_minpoly(N: int, a: int, b: int, var: str = "t") -> SparsePoly:
    return minimal_polynomial(DiagonalRatio(N, a, b).ratio(), var)


ORACLE_BOUND = 400


def ratio_degree(N: int, a: int, b: int, oracle_bound: int = ORACLE_BOUND):
    """(degree, method) for Q(d1/d2).

    Odd N: phi(4N)/4, checked against the oracle when 4N <= oracle_bound.
    Even N, and any pair with d1 = d2: the oracle value itself, checked
    against the lower bound phi(4N)/16.
    """
    r = DiagonalRatio(N, a, b)
    if r.trivial:
        return 1, "oracle"
    M = 4 * N
    if N % 2:
        deg = totient(M) // 4
        if M <= oracle_bound:
            got = oracle_degree(N, a, b)
            if got != deg:
                raise AssertionError(f"degree formula {deg} != oracle {got} at {(N, a, b)}")
        return deg, "formula_odd"
    deg = oracle_degree(N, a, b)
    # phi(4N)/10 is violated at N = 30 and 42 (e.g. (30, 3, 5) has degree 2),
    # so only the weaker phi(4N)/16 is enforced
    if 16 * deg < totient(M):
        raise AssertionError(f"even-N degree {deg} below phi(4N)/16 at {(N, a, b)}")
    return deg, "oracle"


def fixing_units(N: int, a: int, b: int) -> list:
    """Units k mod 4N with k(N-2a) = +-(3N-2a) and k(N-2b) = +-(3N-2b)."""
    M = 4 * N
    ea, eb = N - 2 * a, N - 2 * b
    ta, tb = 3 * N - 2 * a, 3 * N - 2 * b
    out = []
    for k in units_mod(M):
        if (k * ea - ta) % M in (0, (-2 * ta) % M) and (k * eb - tb) % M in (0, (-2 * tb) % M):
            out.append(k)
    return out


def count_fixing_automorphisms(N: int, a: int, b: int) -> int:
    """Identity plus the nontrivial congruence solutions, halved for the
    real subfield (k and -k act the same there)."""
    ks = fixing_units(N, a, b)
    return 1 + len(ks) // 2


# ------------------------------------------------------------ scans

def _scan_one(N):
    from .metallic import metallic_ratios_for_n
    return N, metallic_ratios_for_n(N)


def theorem11_scan(N_max: int, jobs: int = 1, N_min: int = 3) -> set:
    """Union over 3 <= N <= N_max of realizable metallic parameters."""
    if N_max < 3:
        raise ValueError("N_max must be at least 3")
    Ns = list(range(max(3, N_min), N_max + 1))
    out = set()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = sorted(ex.map(_scan_one, Ns, chunksize=4))
    else:
        results = [_scan_one(N) for N in Ns]
    for _, s in results:
        out |= s
    return out


def totient_bound_check(n: int) -> bool:
    """phi(n) >= 48 (n/210)^(12/13), compared with integers only."""
    if n < 1:
        raise ValueError("n must be positive")
    return totient(n) ** 13 * 210 ** 12 >= 48 ** 13 * n ** 12

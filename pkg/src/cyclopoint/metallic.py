"""Generalized metallic means realized as ratios of polygon diagonals.

The metallic mean for a real y0 is the larger root of r^2 - y0*r - 1.  A
diagonal ratio r = |1 - zeta_N^a| / |1 - zeta_N^b| is such a mean exactly
when (r - 1/r)^2 = y0^2 is rational.  Writing s = y0^2, x = zeta_N^a and
y = zeta_N^b, the condition becomes the vanishing of one polynomial in
(s, x, y), and the curve solver finds all of its cyclotomic points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import CycloElement, cyclotomic_poly, prime_factors, rational_to_json
from .poly import SparsePoly, parse_poly

__all__ = [
    "CONSTRAINT_DISPLAY", "MetallicParam", "Realization", "build_metallic_constraint",
    "derive_metallic_constraint", "classify_metallic", "is_metallic_ratio",
    "realization_table", "sqrt_element", "metallic_ratios_for_n", "TABLE_ROWS",
    "THEOREM_SET",
]

# Transcribed verbatim (explicit '*' inserted); n only ever appears as n^2.
CONSTRAINT_DISPLAY = (
    "-x^3*y^3*n^2 + x^4*y^2 - 2*x^3*y^3 + x^2*y^4 + 2*x^3*y^2*n^2"
    " + 2*x^2*y^3*n^2 - x^3*y*n^2 - 4*x^2*y^2*n^2 - x*y^3*n^2 - 2*x^3*y"
    " + 4*x^2*y^2 - 2*x*y^3 + 2*x^2*y*n^2 + 2*x*y^2*n^2 - x*y*n^2 + x^2"
    " - 2*x*y + y^2"
)

VARS = ("s", "x", "y")


# ------------------------------------------------------------ parameters

def _squarefree_split(n: int):
    """n = k^2 * m with m squarefree; returns (k, m)."""
    k, m = 1, 1
    for p in prime_factors(n) if n > 1 else ():
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        k *= p ** (e // 2)
        if e & 1:
            m *= p
    return k, m


@dataclass(frozen=True)
class MetallicParam:
    """y0 = sign * sqrt(a) with a >= 0 rational."""

    a: Fraction
    sign: int = 1

    def __post_init__(self):
        a = Fraction(self.a)
        if a < 0:
            raise ValueError("a = y0^2 must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "a", a)
        if a == 0:
            object.__setattr__(self, "sign", 1)

    # sorting by sign*a is the same as sorting by y0
    def sort_key(self):
        return self.sign * self.a

    def surd(self):
        """(c, m) with y0 = c * sqrt(m), c rational, m squarefree."""
        if self.a == 0:
            return Fraction(0), 1
        p, q = self.a.numerator, self.a.denominator
        k, m = _squarefree_split(p * q)
        return Fraction(self.sign * k, q), m

    @property
    def display(self) -> str:
        if self.a == 0:
            return "0"
        c, m = self.surd()
        if m == 1:
            return str(c)
        sgn = "-" if c < 0 else ""
        c = abs(c)
        num = "" if c.numerator == 1 else f"{c.numerator}*"
        den = "" if c.denominator == 1 else f"/{c.denominator}"
        return f"{sgn}{num}sqrt({m}){den}"

    def to_float(self) -> float:
        return self.sign * math.sqrt(self.a)

    def to_element(self) -> CycloElement:
        c, m = self.surd()
        return sqrt_element(m) * c

    def to_json(self):
        return {"y0": self.display, "a": rational_to_json(self.a), "sign": self.sign,
                "value": round(self.to_float(), 12)}

    @classmethod
    def from_value(cls, y0) -> "MetallicParam":
        y0 = Fraction(y0)
        return cls(y0 * y0, 1 if y0 >= 0 else -1)


@dataclass(frozen=True)
class Realization:
    """The ratio |1 - zeta_N^a_exp| / |1 - zeta_N^b_exp|."""

    N: int
    a_exp: int
    b_exp: int

    def __post_init__(self):
        if self.N < 3 or not (1 <= self.a_exp < self.N and 1 <= self.b_exp < self.N):
            raise ValueError(f"bad realization {self}")

    def ratio(self) -> CycloElement:
        from .diagonals import diagonal_element
        return diagonal_element(self.N, self.a_exp) / diagonal_element(self.N, self.b_exp)

    def to_json(self):
        return {"N": self.N, "a": self.a_exp, "b": self.b_exp}


# Meaning of the rows: y0 -> (N, a, b) with phi = |1-zeta_N^a| / |1-zeta_N^b|.
TABLE_ROWS = (
    ((1, 1), 5, 2, 1),
    ((4, 1), 8, 3, 1),
    ((Fraction(9, 4), 1), 6, 3, 1),
    ((2, 1), 12, 5, 2),
    ((5, 1), 10, 3, 1),
    ((12, 1), 12, 5, 1),
    ((Fraction(1, 2), 1), 24, 6, 4),
    ((Fraction(1, 6), 1), 12, 4, 3),
    ((Fraction(4, 3), 1), 6, 2, 1),
    ((Fraction(1, 12), 1), 6, 3, 2),
)

_THEOREM_A = (0, 1, Fraction(9, 4), 4, 2, 5, 12, Fraction(1, 2), Fraction(1, 6),
              Fraction(4, 3), Fraction(1, 12))
THEOREM_SET = frozenset(MetallicParam(a, s) for a in _THEOREM_A for s in (1, -1))


# ------------------------------------------------------------ surds

def _legendre(k, p):
    r = pow(k, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CycloElement:
    if p == 2:
        return CycloElement.from_terms(8, {1: 1, 7: 1})
    g = CycloElement.from_terms(p, {k: _legendre(k, p) for k in range(1, p)})
    if p % 4 == 1:
        return g
    # g^2 = -p here, so sqrt(p) = -i * g
    return g * CycloElement.from_terms(4, {3: 1})


def sqrt_element(m: int) -> CycloElement:
    """The positive square root of a positive integer as a cyclotomic element."""
    if m < 1:
        raise ValueError("need a positive integer")
    k, sq = _squarefree_split(m)
    out = CycloElement.rational(k)
    for p in prime_factors(sq) if sq > 1 else ():
        out = out * _sqrt_prime(p)
    return out


# ------------------------------------------------------------ constraint

def build_metallic_constraint() -> SparsePoly:
    """The transcribed constraint with n^2 renamed to s."""
    f = parse_poly(CONSTRAINT_DISPLAY, vars=("n", "x", "y"))
    terms = {}
    for (en, ex, ey), c in f.terms.items():
        if en & 1:
            raise AssertionError("odd power of n in the metallic constraint")
        terms[(en // 2, ex, ey)] = c
    return SparsePoly(VARS, terms)


def derive_metallic_constraint() -> SparsePoly:
    """Re-derive the constraint from phi^2 + phi^-2 - s - 2 = 0 and check it."""
    s = SparsePoly.var("s", VARS)
    x = SparsePoly.var("x", VARS)
    y = SparsePoly.var("y", VARS)
    one = SparsePoly.const(1, VARS)
    xi = one.shift((0, -1, 0))
    yi = one.shift((0, 0, -1))
    A = (one - x) * (one - xi)       # |1 - x|^2 on the unit circle
    B = (one - y) * (one - yi)
    num = A * A + B * B - (s + 2) * A * B
    num = num.shift((0, 2, 2))
    if any(min(e) < 0 for e in num.terms):
        raise AssertionError("denominators did not clear")
    free = {e: c for e, c in num.terms.items() if e[0] == 0}
    lead = SparsePoly(VARS, free).leading()[1]
    if lead < 0:
        num = -num
    built = build_metallic_constraint()
    if num != built:
        raise AssertionError("derived metallic constraint differs from the transcription")
    return num


def _nondegenerate_point(pt) -> bool:
    return all(not r.is_one() for r in pt)


def classify_metallic(verify: bool = True) -> set:
    """All y0 realizable as diagonal ratios, from the curve solver."""
    from .famsolve import solve_param_curve

    f = derive_metallic_constraint() if verify else build_metallic_constraint()
    out = set()
    for fam in solve_param_curve(f, "s", ("x", "y"), verify=verify):
        if not any(_nondegenerate_point(p) for p in fam.sample_points()):
            continue
        if fam.n is None:
            raise AssertionError("a nondegenerate family with free s")
        if fam.n < 0:
            continue
        out.add(MetallicParam(fam.n, 1))
        out.add(MetallicParam(fam.n, -1))
    return out


# ------------------------------------------------------------ membership

def _fold(k, N):
    k %= N
    return min(k, N - k)


def _sign(N, a, b):
    fa, fb = _fold(a, N), _fold(b, N)
    return (fa > fb) - (fa < fb)


def _check_exps(N, a, b):
    if N < 3:
        raise ValueError("N must be at least 3")
    if a % N == 0 or b % N == 0:
        raise ValueError("exponent is 0 mod N: zero diagonal")


def is_metallic_ratio(N: int, a_exp: int, b_exp: int, method: str = "field"):
    """MetallicParam of |1-zeta_N^a|/|1-zeta_N^b| if (r - 1/r)^2 is rational.

    ``field`` computes in Q(zeta_4N) with CycloElements; ``fast`` works in
    Q(zeta_N) with r^2 + r^-2 = (c_a^2 + c_b^2) / (c_a c_b), c_k = |1-zeta^k|^2.
    """
    _check_exps(N, a_exp, b_exp)
    if method == "field":
        from .diagonals import diagonal_element
        r = diagonal_element(N, a_exp) / diagonal_element(N, b_exp)
        t = (r - r.inverse()) ** 2
        q = t.as_rational()
    elif method == "fast":
        res = _fast_batch(N, _fold(a_exp, N), np.array([_fold(b_exp, N)]))
        q = res[0][1] if res[0][0] else None
    else:
        raise ValueError(f"unknown method {method!r}")
    if q is None:
        return None
    sg = _sign(N, a_exp, b_exp)
    if (q == 0) != (sg == 0):
        raise AssertionError("sign and value of y0 disagree")
    return MetallicParam(q, sg or 1)


@lru_cache(maxsize=8)
def _powers_table(N: int):
    """Row k is x^k mod Phi_N as an integer vector, k = 0 .. N-1."""
    phi = list(cyclotomic_poly(N))
    d = len(phi) - 1
    R = np.zeros((N, d), dtype=np.int64)
    cur = [0] * d
    cur[0] = 1
    for k in range(N):
        R[k] = cur
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(d):
                cur[j] -= top * phi[j]
    if np.abs(R).max() > 1 << 20:
        raise OverflowError("power table entries too large for int64 arithmetic")
    E = R + R[(-np.arange(N)) % N]
    return R, E


def _fast_batch(N, fa, fbs):
    """For one folded a and an array of folded b: list of (is_rational, t)."""
    R, E = _powers_table(N)
    R0 = R[0][None, :]
    Ea = E[fa % N][None, :]
    Eb = E[fbs % N]
    P = 12 * R0 - 4 * (Ea + Eb) + E[(2 * fa) % N][None, :] + E[(2 * fbs) % N]
    Q = 4 * R0 - 2 * (Ea + Eb) + E[(fa + fbs) % N] + E[(fa - fbs) % N]
    j = np.argmax(np.abs(Q), axis=1)
    rows = np.arange(len(fbs))
    pj, qj = P[rows, j], Q[rows, j]
    cross = P * qj[:, None] - Q * pj[:, None]
    ok = ~cross.any(axis=1)
    out = []
    for i in range(len(fbs)):
        if ok[i]:
            out.append((True, Fraction(int(pj[i]), int(qj[i])) - 2))
        else:
            out.append((False, None))
    return out


def metallic_ratios_for_n(N: int) -> set:
    """Every MetallicParam realized in the N-gon by a coprime exponent pair."""
    if N < 3:
        raise ValueError("N must be at least 3")
    h = N // 2
    folds = np.arange(1, h + 1)
    out = set()
    for fa in range(1, h + 1):
        # (fa, fb) is reachable from a coprime pair (a, b) in [1, N-1]
        reach = np.zeros(h, dtype=bool)
        for a in {fa, N - fa}:
            for bb in (folds, N - folds):
                reach |= np.gcd(a, bb) == 1
        fbs = folds[reach]
        if not len(fbs):
            continue
        for fb, (ok, t) in zip(fbs.tolist(), _fast_batch(N, fa, fbs)):
            if ok:
                sg = (fa > fb) - (fa < fb)
                out.add(MetallicParam(t, sg or 1))
    return out


# ------------------------------------------------------------ table

def realization_table() -> list:
    """The ten positive rows, each checked via r^2 - y0*r - 1 = 0 exactly."""
    rows = []
    for (a, sg), N, ea, eb in TABLE_ROWS:
        p = MetallicParam(a, sg)
        real = Realization(N, ea, eb)
        r = real.ratio()
        y0 = p.to_element()
        if not (r * r - y0 * r - 1).is_zero():
            raise AssertionError(f"table row y0={p.display} fails at {real}")
        rows.append((p, real))
    return rows


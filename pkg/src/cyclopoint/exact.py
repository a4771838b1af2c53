"""Exact arithmetic: rationals, roots of unity and cyclotomic field elements.

Rationals are :class:`fractions.Fraction`.  A :class:`CycloElement` lives in
Q(zeta_n) and is stored in the power basis {1, z, ..., z^(phi(n)-1)} modulo
the n-th cyclotomic polynomial.  Elements of different conductors are
embedded into the lcm field before any binary operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from . import _dense

__all__ = [
    "Fraction", "RootOfUnity", "CycloElement", "totient", "prime_factors",
    "cyclotomic_poly", "rou_mul", "cyclo_add", "cyclo_mul", "cyclo_div",
    "galois", "minimal_polynomial", "galois_orbit", "rational_to_json",
    "rational_from_json", "units_mod",
]


# ---------------------------------------------------------------- integers

@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple:
    """Sorted distinct prime factors of n >= 1 (trial division)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    r = n
    for p in prime_factors(n):
        r = r // p * (p - 1)
    return r


def units_mod(n: int) -> list:
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1] if n > 1 else [1]


def _divisors(n):
    small, big = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                big.append(n // d)
        d += 1
    return small + big[::-1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first.

    Computed by exactly dividing x^n - 1 by every Phi_d with d | n, d < n.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        p = _dense.exact_div(p, list(cyclotomic_poly(d)))
    return tuple(p)


@lru_cache(maxsize=None)
def _phi_low_terms(n: int):
    c = cyclotomic_poly(n)
    return tuple((j, v) for j, v in enumerate(c[:-1]) if v)


def _reduce_vec(vec, n):
    """Reduce an integer group-ring vector (any length) modulo Phi_n."""
    m = totient(n)
    if len(vec) > n:
        folded = vec[:n]
        for i in range(n, len(vec)):
            folded[i % n] += vec[i]
        vec = folded
    else:
        vec = list(vec)
    if len(vec) < m:
        vec.extend([0] * (m - len(vec)))
    return _dense.rem_monic_sparse(vec, m, _phi_low_terms(n))


# ----------------------------------------------------------- roots of unity

@dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2*pi*i*exp/order), kept with gcd(exp, order) = 1, 0 <= exp < order."""

    order: int
    exp: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        e = self.exp % self.order
        g = math.gcd(e, self.order)
        if e == 0:
            o, e = 1, 0
        else:
            o, e = self.order // g, e // g
        object.__setattr__(self, "order", o)
        object.__setattr__(self, "exp", e)

    @classmethod
    def from_angle(cls, t: Fraction) -> "RootOfUnity":
        t = Fraction(t)
        return cls(t.denominator, t.numerator)

    @property
    def angle(self) -> Fraction:
        """Rational angle t in [0, 1) with zeta = exp(2 pi i t)."""
        return Fraction(self.exp, self.order)

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            return RootOfUnity.from_angle(self.angle + other.angle)
        return NotImplemented

    def __pow__(self, k: int):
        return RootOfUnity.from_angle(self.angle * k)

    def inverse(self):
        return self ** -1

    def __neg__(self):
        return self * RootOfUnity(2, 1)

    def is_one(self):
        return self.order == 1

    def as_element(self, conductor: int | None = None) -> "CycloElement":
        n = conductor or self.order
        if n % self.order:
            raise ValueError("conductor must be a multiple of the order")
        return CycloElement.from_terms(n, {self.exp * (n // self.order): 1})

    def to_complex(self) -> complex:
        return complex(math.cos(2 * math.pi * self.exp / self.order),
                       math.sin(2 * math.pi * self.exp / self.order))

    def to_json(self):
        return {"order": self.order, "exp": self.exp}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["order"]), int(d["exp"]))

    def __repr__(self):
        return f"zeta({self.order})^{self.exp}" if self.order > 1 else "1"


def rou_mul(a: RootOfUnity, b: RootOfUnity) -> RootOfUnity:
    return a * b


# --------------------------------------------------------- cyclotomic field

def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not a rational: {c!r}")


class CycloElement:
    """Element of Q(zeta_n) in the power basis.

    Internally an integer numerator vector plus one positive denominator.
    Equality is mathematical (conductors are reconciled); elements are not
    hashable because the stored form depends on the conductor.
    """

    __slots__ = ("n", "_num", "_den")
    __hash__ = None

    def __init__(self, n: int, coords=None, *, _num=None, _den=1):
        if n < 1:
            raise ValueError("conductor must be positive")
        m = totient(n)
        self.n = n
        if _num is not None:
            num, den = list(_num), _den
        else:
            coords = [_as_fraction(c) for c in (coords or [])]
            if len(coords) > m:
                raise ValueError("too many coordinates for this conductor")
            den = reduce(lambda a, b: a * b // math.gcd(a, b),
                         (c.denominator for c in coords), 1)
            num = [int(c * den) for c in coords]
        num += [0] * (m - len(num))
        g = math.gcd(_dense.content(num), den)
        if den < 0:
            g = -g
        if g not in (0, 1):
            num = [v // g for v in num]
            den //= g
        if not any(num):
            den = 1
        self._num = tuple(num)
        self._den = den

    # construction helpers
    @classmethod
    def from_terms(cls, n: int, terms) -> "CycloElement":
        """Sum of coeff * zeta_n^exp over a mapping exp -> coeff."""
        items = [(e % n, _as_fraction(c)) for e, c in terms.items()]
        den = reduce(lambda a, b: a * b // math.gcd(a, b),
                     (c.denominator for _, c in items), 1)
        vec = [0] * n
        for e, c in items:
            vec[e] += int(c * den)
        return cls(n, _num=_reduce_vec(vec, n), _den=den)

    @classmethod
    def rational(cls, q, n: int = 1) -> "CycloElement":
        return cls(n, [_as_fraction(q)])

    @classmethod
    def _raw(cls, n, num, den):
        obj = cls.__new__(cls)
        CycloElement.__init__(obj, n, _num=num, _den=den)
        return obj

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(v, self._den) for v in self._num)

    @property
    def conductor(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return not any(self._num)

    def embed(self, L: int) -> "CycloElement":
        if L == self.n:
            return self
        if L % self.n:
            raise ValueError("target conductor must be a multiple")
        step = L // self.n
        vec = [0] * L
        for j, v in enumerate(self._num):
            if v:
                vec[j * step] = v
        return CycloElement._raw(L, _reduce_vec(vec, L), self._den)

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            return other
        if isinstance(other, RootOfUnity):
            return other.as_element()
        if isinstance(other, (int, Fraction)):
            return CycloElement.rational(other, self.n)
        return None

    @staticmethod
    def _common(a, b):
        L = a.n * b.n // math.gcd(a.n, b.n)
        return a.embed(L), b.embed(L), L

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, L = self._common(self, o)
        den = a._den * b._den // math.gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycloElement._raw(L, [x * fa + y * fb for x, y in zip(a._num, b._num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement._raw(self.n, [-v for v in self._num], self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return CycloElement._raw(self.n, [v * q.numerator for v in self._num],
                                     self._den * q.denominator)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, L = self._common(self, o)
        prod = _dense.mul(list(a._num), list(b._num))
        return CycloElement._raw(L, _reduce_vec(prod, L) if prod else [], a._den * b._den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElement.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.n
        num = _dense.trim(list(self._num))
        if len(num) == 1:
            return CycloElement._raw(n, [self._den], num[0])
        # extended Euclid over Q against Phi_n
        phi = [Fraction(v) for v in cyclotomic_poly(n)]
        a = [Fraction(v) for v in num]
        r0, r1 = phi, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element not invertible")
        c = r1[0]
        # s1 * a == c (mod Phi_n) and deg s1 < phi(n)
        return CycloElement(n, [v / c for v in s1]) * self._den

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.n == self.n:
            return o._num == self._num and o._den == self._den
        return (self - o).is_zero()

    def galois(self, k: int) -> "CycloElement":
        """Apply sigma_k: zeta_n -> zeta_n^k (k a unit mod n)."""
        n = self.n
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        vec = [0] * n
        for j, v in enumerate(self._num):
            if v:
                vec[(j * k) % n] += v
        return CycloElement._raw(n, _reduce_vec(vec, n), self._den)

    def as_rational(self):
        """The rational value, or None when the element is not in Q."""
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0] if self._num else 0, self._den)

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.n), math.sin(2 * math.pi / self.n))
        return sum(v * z ** j for j, v in enumerate(self._num)) / self._den

    def conj(self):
        return self.galois(-1 % self.n if self.n > 1 else 1)

    def key(self):
        """Hashable structural key (conductor-dependent)."""
        return (self.n, self._num, self._den)

    def to_json(self):
        return {"conductor": self.n,
                "coords": [rational_to_json(c) for c in self.coords]}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["conductor"]), [rational_from_json(c) for c in d["coords"]])

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}*z{self.n}^{j}" if j else f"{c}")
        return "Cyclo(" + (" + ".join(terms) or "0") + ")"


def _frac_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _frac_trim(out)


def _frac_sub(a, b):
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _frac_trim(out)


def _frac_divmod(a, b):
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _frac_trim(r)
    q = [Fraction(0)] * (len(r) - db)
    lb = b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            qc = c / lb
            q[i - db] = qc
            for j in range(db + 1):
                r[i - db + j] -= qc * b[j]
    return _frac_trim(q), _frac_trim(r[:db])


def cyclo_add(a: CycloElement, b: CycloElement) -> CycloElement:
    return a + b


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    return a * b


def cyclo_div(a: CycloElement, b: CycloElement) -> CycloElement:
    return a / b


def galois(e: CycloElement, k: int) -> CycloElement:
    return e.galois(k)


def galois_orbit(e: CycloElement) -> list:
    """Distinct Galois conjugates of e inside Q(zeta_n)."""
    seen = {}
    for k in units_mod(e.n):
        c = e.galois(k)
        seen.setdefault(c.key(), c)
    return list(seen.values())


def minimal_polynomial(e: CycloElement, var: str = "t"):
    """Monic minimal polynomial over Q as a univariate SparsePoly.

    Product of (t - c) over the Galois orbit; the coefficients are checked
    to be rational.
    """
    from .poly import SparsePoly

    orbit = galois_orbit(e)
    n = e.n
    coeffs = [CycloElement.rational(1, n)]   # low degree first
    for c in orbit:
        new = [CycloElement.rational(0, n)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            new[i + 1] = new[i + 1] + a
            new[i] = new[i] - a * c
        coeffs = new
    rat = []
    for a in coeffs:
        q = a.as_rational()
        if q is None:
            raise ArithmeticError("orbit product has irrational coefficients")
        rat.append(q)
    return SparsePoly.from_dense(rat, var)


# ------------------------------------------------------------------- json

def rational_to_json(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(d) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))

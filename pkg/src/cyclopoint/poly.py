"""Sparse multivariate polynomials over Q (or a cyclotomic field).

A :class:`SparsePoly` is a tuple of variable names plus a dict from exponent
tuples to coefficients.  Exponents may be negative (Laurent polynomials) in
intermediate steps; :meth:`SparsePoly.clear_monomial` brings them back.

The heavy algorithms are here too: resultants by evaluation/interpolation
over Sylvester determinants, gcds by dense interpolation with exact-division
checks, squarefree parts and rational roots.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from itertools import count

from . import _dense
from .exact import CycloElement, RootOfUnity

__all__ = [
    "SparsePoly", "ParseError", "parse_poly", "render", "arith", "substitute_signed",
    "gcd", "squarefree_part", "resultant", "rational_roots",
    "exponent_gcd_decompose", "exact_div", "content_in", "primitive_part_in",
    "newton_interpolate",
]

VAR_ORDER = ("n", "s", "t", "x", "x1", "x2", "y", "y1", "y2", "u", "v")
ALLOWED_VARS = ("n", "s", "x", "y", "x1", "x2", "y1", "y2")


def _coerce_coeff(c):
    if isinstance(c, (Fraction, CycloElement)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, RootOfUnity):
        return c.as_element()
    raise TypeError(f"unsupported coefficient {c!r}")


def _is_zero(c):
    if isinstance(c, CycloElement):
        return c.is_zero()
    return c == 0


def _grlex_key(e):
    return (-sum(e), tuple(-v for v in e))


def _order_vars(names):
    names = set(names)
    known = [v for v in VAR_ORDER if v in names]
    return tuple(known + sorted(names - set(known)))


class SparsePoly:
    """Polynomial in a fixed tuple of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None, *, _clean=False):
        self.vars = tuple(vars)
        if _clean:
            self.terms = terms
            return
        out = {}
        k = len(self.vars)
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != k:
                raise ValueError("exponent length does not match variables")
            c = _coerce_coeff(c)
            if not _is_zero(c):
                out[e] = c
        self.terms = out

    # ---- construction
    @classmethod
    def const(cls, c, vars=()):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {e: 1})

    @classmethod
    def from_dense(cls, coeffs, var, vars=None):
        vars = tuple(vars) if vars is not None else (var,)
        i = vars.index(var)
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * len(vars)
            e[i] = k
            terms[tuple(e)] = c
        return cls(vars, terms)

    def _new(self, terms):
        return SparsePoly(self.vars, terms, _clean=True)

    # ---- basic queries
    def is_zero(self):
        return not self.terms

    def is_const(self):
        return all(not any(e) for e in self.terms)

    def const_value(self):
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values())) if self.terms else Fraction(0)

    def index(self, var):
        return self.vars.index(var)

    def used_vars(self):
        return tuple(v for i, v in enumerate(self.vars)
                     if any(e[i] for e in self.terms))

    def degree(self, var):
        if var not in self.vars:
            return 0 if self.terms else -1
        i = self.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def min_degree(self, var):
        i = self.index(var)
        return min((e[i] for e in self.terms), default=0)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def leading(self):
        """(exponent, coefficient) of the grlex-leading term."""
        return min(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def has_cyclo_coeffs(self):
        return any(isinstance(c, CycloElement) for c in self.terms.values())

    # ---- alignment and renaming
    def with_vars(self, vars):
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = []
        for i, v in enumerate(self.vars):
            if v in vars:
                pos.append(vars.index(v))
            else:
                if any(e[i] for e in self.terms):
                    raise ValueError(f"variable {v} is used but missing from target")
                pos.append(None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for i, p in enumerate(pos):
                if p is not None:
                    ne[p] = e[i]
            out[tuple(ne)] = c
        return SparsePoly(vars, out, _clean=True)

    def rename(self, mapping):
        return SparsePoly(tuple(mapping.get(v, v) for v in self.vars), self.terms, _clean=True)

    def _align(self, other):
        if isinstance(other, SparsePoly):
            if other.vars == self.vars:
                return self, other
            vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
            return self.with_vars(vars), other.with_vars(vars)
        return self, SparsePoly.const(other, self.vars)

    # ---- arithmetic
    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if _is_zero(v):
                    del out[e]
                else:
                    out[e] = v
        return a._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._align(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c = _coerce_coeff(other)
            if _is_zero(c):
                return self._new({})
            return self._new({e: v * c for e, v in self.terms.items()})
        a, b = self._align(other)
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return a._new({e: c for e, c in out.items() if not _is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                return self._new({tuple(-v * (-k) for v in e): 1 / c ** (-k)})
            raise ValueError("negative power of a non-monomial")
        result = SparsePoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            a, b = self._align(other)
            if a.terms.keys() != b.terms.keys():
                return False
            return all(a.terms[e] == b.terms[e] for e in a.terms)
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.const(other, self.vars)
        return NotImplemented

    def __hash__(self):
        used = self.used_vars()
        p = self.with_vars(used)
        return hash((used, frozenset(p.terms.items())))

    # ---- structure in one variable
    def coeffs(self, var):
        """Mapping k -> coefficient of var**k (same variable tuple, var zeroed)."""
        i = self.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[ne] = c
        return {k: SparsePoly(self.vars, t, _clean=True) for k, t in out.items()}

    def lc(self, var):
        d = self.degree(var)
        if d < 0:
            return self._new({})
        return self.coeffs(var)[d]

    def diff(self, var):
        i = self.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return self._new(out)

    def subs(self, var, value):
        """Substitute a scalar (rational, cyclotomic or root of unity) for var."""
        if var not in self.vars:
            return self
        i = self.index(var)
        if isinstance(value, RootOfUnity):
            return self.subs_root(var, value)
        value = _coerce_coeff(value)
        powers = {}
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value ** k
            ne = e[:i] + (0,) + e[i + 1:]
            v = c * powers[k]
            if ne in out:
                out[ne] = out[ne] + v
            else:
                out[ne] = v
        return self._new({e: c for e, c in out.items() if not _is_zero(c)})

    def subs_int(self, var, t: int):
        """Fast substitution of an integer (integer coefficients stay exact)."""
        i = self.index(var)
        powers = {}
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            p = powers.get(k)
            if p is None:
                p = powers[k] = t ** k
            ne = e[:i] + (0,) + e[i + 1:]
            out[ne] = out.get(ne, 0) + c * p
        return self._new({e: c for e, c in out.items() if c != 0})

    def subs_root(self, var, root: RootOfUnity):
        """Substitute a root of unity; coefficients become CycloElements."""
        i = self.index(var)
        m = root.order
        groups = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            groups.setdefault(ne, []).append((e[i] * root.exp, c))
        out = {}
        for ne, items in groups.items():
            out[ne] = _sum_root_terms(m, items)
        return self._new({e: c for e, c in out.items() if not _is_zero(c)})

    def compose_signed(self, var, sign=1, power=1):
        """Substitute var -> sign * var**power (power may be negative)."""
        i = self.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (k * power,) + e[i + 1:]
            out[ne] = -c if (sign < 0 and k & 1) else c
        return self._new(out)

    def shift(self, exps):
        return self._new({tuple(a + b for a, b in zip(e, exps)): c
                          for e, c in self.terms.items()})

    def monomial_content(self):
        k = len(self.vars)
        if not self.terms:
            return (0,) * k
        return tuple(min(e[i] for e in self.terms) for i in range(k))

    def clear_monomial(self):
        """Divide by the largest monomial dividing every term."""
        m = self.monomial_content()
        if not any(m):
            return self
        return self.shift(tuple(-v for v in m))

    def map_coeffs(self, fn):
        return SparsePoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    # ---- integer normalisation
    def to_int(self):
        """(P, d) with P integer-coefficient (as Fractions) and self == P / d."""
        d = reduce(lambda a, b: a * b // math.gcd(a, b),
                   (c.denominator for c in self.terms.values()), 1)
        return self._new({e: Fraction(int(c * d)) for e, c in self.terms.items()}), d

    def rational_content(self):
        if not self.terms:
            return Fraction(0)
        num = reduce(math.gcd, (c.numerator for c in self.terms.values()), 0)
        den = reduce(lambda a, b: a * b // math.gcd(a, b),
                     (c.denominator for c in self.terms.values()), 1)
        return Fraction(num, den)

    def primitive(self):
        """Integer coefficients with unit content and positive leading term."""
        if not self.terms:
            return self
        c = self.rational_content()
        if self.leading()[1] < 0:
            c = -c
        return self._new({e: v / c for e, v in self.terms.items()})

    def monic(self):
        return self * (1 / self.leading()[1])

    def to_dense(self, var=None):
        """Coefficient list (low first) of a univariate polynomial."""
        used = self.used_vars()
        if var is None:
            var = used[0] if used else self.vars[0] if self.vars else None
        if set(used) - {var}:
            raise ValueError("polynomial is not univariate in " + str(var))
        if var is None or var not in self.vars:
            return [self.const_value()] if self.terms else []
        i = self.index(var)
        d = self.degree(var)
        out = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def to_int_dense(self, var=None):
        """Primitive integer coefficient list (low first) of a univariate poly."""
        coeffs = self.to_dense(var)
        if not coeffs:
            return []
        d = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
        return _dense.primitive([int(c * d) for c in coeffs])

    # ---- evaluation
    def evaluate(self, point):
        """Evaluate at a mapping var -> scalar; returns a scalar."""
        p = self
        for v, val in point.items():
            p = p.subs(v, val)
        if not p.is_const():
            raise ValueError("not all variables were given values")
        return p.const_value()

    def eval_complex(self, point):
        total = 0j
        for e, c in self.terms.items():
            term = complex(c.to_complex() if isinstance(c, CycloElement) else float(c))
            for v, k in zip(self.vars, e):
                if k:
                    term *= complex(point[v]) ** k
            total += term
        return total

    # ---- text
    def to_text(self):
        return render(self)

    def pretty(self, compact=False):
        return render(self, style="pretty" if not compact else "compact")

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"SparsePoly({self.to_text()!r})"


def _sum_root_terms(m, items):
    """sum c * zeta_m**k over (k, c); c rational or cyclotomic."""
    if all(isinstance(c, Fraction) for _, c in items):
        return CycloElement.from_terms(m, _accumulate(items, m))
    L = m
    for _, c in items:
        if isinstance(c, CycloElement):
            L = L * c.n // math.gcd(L, c.n)
    step = L // m
    acc = {}
    for k, c in items:
        if isinstance(c, CycloElement):
            cstep = L // c.n
            for j, v in enumerate(c.coords):
                if v:
                    key = (j * cstep + k * step) % L
                    acc[key] = acc.get(key, 0) + v
        else:
            key = (k * step) % L
            acc[key] = acc.get(key, 0) + c
    return CycloElement.from_terms(L, acc)


def _accumulate(items, m):
    acc = {}
    for k, c in items:
        k %= m
        acc[k] = acc.get(k, 0) + c
    return acc


# ------------------------------------------------------------------ text io

def _fmt_coeff(c):
    if isinstance(c, CycloElement):
        return "(" + repr(c) + ")"
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_mono(vars, e):
    parts = []
    for v, k in zip(vars, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def render(f: SparsePoly, style: str = "canonical") -> str:
    """Text form of a polynomial.

    ``canonical``: grlex-descending terms, every coefficient printed, joined
    by " + " (e.g. "1*x^2 + -1").  ``pretty``: the usual human form
    ("x^2 - 1").  ``compact``: pretty without spaces ("x^2-1").
    """
    if not f.terms:
        return "0"
    items = f.sorted_terms()
    if style == "canonical":
        parts = []
        for e, c in items:
            mono = _fmt_mono(f.vars, e)
            parts.append(f"{_fmt_coeff(c)}*{mono}" if mono else _fmt_coeff(c))
        return " + ".join(parts)
    sep = " " if style == "pretty" else ""
    out = []
    for idx, (e, c) in enumerate(items):
        mono = _fmt_mono(f.vars, e)
        neg = isinstance(c, Fraction) and c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        else:
            body = _fmt_coeff(a)
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(f"{sep}{'-' if neg else '+'}{sep}{body}")
    return "".join(out)


class ParseError(ValueError):
    """Raised for malformed polynomial text."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r} at {m.start(3)}")
            toks.append(("op", ch, m.start(3)))
        pos = m.end()
    return toks


def parse_poly(text: str, vars=None, allowed=ALLOWED_VARS) -> SparsePoly:
    """Parse polynomial text.

    Grammar: sums and differences of products of powers; '^' takes a
    non-negative integer, unary minus binds looser than '^', and '/' is only
    allowed with a nonzero constant divisor.  Variables must come from
    ``allowed``.
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial text")
    toks = _tokenize(text)
    names = {t[1] for t in toks if t[0] == "name"}
    bad = sorted(names - set(allowed))
    if bad:
        raise ParseError(f"unknown variable {bad[0]!r}")
    vs = tuple(vars) if vars is not None else _order_vars(names)
    missing = names - set(vs)
    if missing:
        raise ParseError(f"variable {sorted(missing)[0]!r} not in variable list")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None, len(text))

    def take(kind=None, val=None):
        nonlocal pos
        t = peek()
        if t[0] is None or (kind and t[0] != kind) or (val and t[1] != val):
            where = t[2]
            raise ParseError(f"unexpected {'end of input' if t[0] is None else repr(t[1])} at {where}")
        pos += 1
        return t

    def expr():
        acc = term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = factor()
        while peek()[0] == "op" and peek()[1] in "*/":
            op = take()[1]
            rhs = factor()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_const() or rhs.is_zero():
                    raise ParseError("division is only allowed by a nonzero constant")
                acc = acc * (1 / rhs.const_value())
        return acc

    def factor():
        t = peek()
        if t[0] == "op" and t[1] == "-":
            take()
            return -factor()
        if t[0] == "op" and t[1] == "+":
            take()
            return factor()
        return power()

    def power():
        base = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            t = peek()
            if t[0] != "int":
                raise ParseError(f"exponent must be a non-negative integer at {t[2]}")
            take()
            return base ** t[1]
        return base

    def atom():
        t = peek()
        if t[0] == "int":
            take()
            return SparsePoly.const(t[1], vs)
        if t[0] == "name":
            take()
            return SparsePoly.var(t[1], vs)
        if t[0] == "op" and t[1] == "(":
            take()
            e = expr()
            take("op", ")")
            return e
        raise ParseError(f"unexpected {'end of input' if t[0] is None else repr(t[1])} at {t[2]}")

    result = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input at {toks[pos][2]}")
    return result


# ------------------------------------------------------------- basic ops

def arith(f: SparsePoly, g: SparsePoly, op: str) -> SparsePoly:
    """op is add, sub, mul or exact_div (also accepted: + - *)."""
    if op in ("add", "+"):
        return f + g
    if op in ("sub", "-"):
        return f - g
    if op in ("mul", "*"):
        return f * g
    if op == "exact_div":
        q = exact_div(f, g)
        if q is None:
            raise ArithmeticError("division leaves a nonzero remainder")
        return q
    raise ValueError(f"unknown operation {op!r}")


def substitute_signed(f: SparsePoly, var: str, mode: str) -> SparsePoly:
    """Apply var -> -var, var^2, -var^2 or 1/var (the last normalised back
    to a polynomial by multiplying with var**deg)."""
    if var not in f.vars:
        return f
    mode = {"square": "sq", "neg_square": "negsq"}.get(mode, mode)
    if mode == "neg":
        return f.compose_signed(var, -1, 1)
    if mode == "sq":
        return f.compose_signed(var, 1, 2)
    if mode == "negsq":
        return f.compose_signed(var, -1, 2)
    if mode == "inv":
        d = f.degree(var)
        g = f.compose_signed(var, 1, -1)
        shift = [0] * len(f.vars)
        shift[f.index(var)] = d
        return g.shift(shift)
    raise ValueError(f"unknown substitution mode {mode!r}")


def exponent_gcd_decompose(f: SparsePoly, var: str):
    """Largest m with f = g(var**m); returns (m, g).  m = 1 if var is absent."""
    if var not in f.vars:
        return 1, f
    i = f.index(var)
    m = reduce(math.gcd, (e[i] for e in f.terms), 0)
    if m <= 1:
        return 1, f
    return m, f._new({e[:i] + (e[i] // m,) + e[i + 1:]: c for e, c in f.terms.items()})


def _lex_key(e):
    return e


def exact_div(f: SparsePoly, g: SparsePoly):
    """f / g when g divides f exactly, otherwise None."""
    f, g = f._align(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    lg = max(g.terms)
    cg = g.terms[lg]
    gitems = list(g.terms.items())
    r = dict(f.terms)
    q = {}
    while r:
        lr = max(r)
        e = tuple(a - b for a, b in zip(lr, lg))
        if any(v < 0 for v in e):
            return None
        c = r[lr] / cg
        q[e] = c
        for eg, v in gitems:
            key = tuple(a + b for a, b in zip(e, eg))
            w = r.get(key, 0) - c * v
            if _is_zero(w):
                r.pop(key, None)
            else:
                r[key] = w
    return f._new(q)


def _normalize(f: SparsePoly) -> SparsePoly:
    return f.primitive()


# ------------------------------------------------------------ interpolation

def newton_interpolate(xs, ys):
    """Coefficients (low first, Fractions) of the interpolating polynomial."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # Newton form -> monomial form
    out = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * n
        for k in range(n - 1):
            if out[k]:
                new[k + 1] += out[k]
                new[k] -= out[k] * xs[i]
        new[0] += coef[i]
        out = new
    while out and out[-1] == 0:
        out.pop()
    return out


def _newton_interpolate_int(xs, ys):
    """Integer-valued data on integer points: same output, faster."""
    if all(y == 0 for y in ys):
        return []
    return newton_interpolate(xs, ys)


def _interpolate_polys(points, polys, var, vars):
    """Polynomial P with P(var=t_i) == polys[i] (polys free of var)."""
    i = vars.index(var)
    monos = set()
    for p in polys:
        monos.update(p.terms)
    out = {}
    for mono in monos:
        vals = [p.terms.get(mono, 0) for p in polys]
        coeffs = _newton_interpolate_int(points, vals)
        for k, c in enumerate(coeffs):
            if c:
                out[mono[:i] + (k,) + mono[i + 1:]] = c
    return SparsePoly(vars, out, _clean=True)


def _points():
    yield 0
    for k in count(1):
        yield k
        yield -k


# ---------------------------------------------------------------- resultants

def resultant(f: SparsePoly, g: SparsePoly, var: str, method: str = "interp") -> SparsePoly:
    """Res_var(f, g) as a polynomial in the remaining variables.

    ``interp`` evaluates the Sylvester matrix at integer points of the other
    variables (formal degrees, so no point is unlucky), takes integer
    Bareiss determinants and interpolates.  ``bareiss`` runs fraction-free
    elimination directly over the polynomial ring (small inputs only).
    """
    f, g = f._align(g)
    if var not in f.vars:
        f, g = f.with_vars(f.vars + (var,)), g.with_vars(f.vars + (var,))
    if f.is_zero() or g.is_zero():
        return f._new({})
    df, dg = f.degree(var), g.degree(var)
    if df == 0:
        return f ** dg
    if dg == 0:
        return g ** df
    if method == "bareiss":
        return _resultant_ring_bareiss(f, g, var, df, dg)
    if method != "interp":
        raise ValueError(f"unknown resultant method {method!r}")
    fi, cf = f.to_int()
    gi, cg = g.to_int()
    others = [v for v in f.vars if v != var and (f.degree(v) > 0 or g.degree(v) > 0)]
    r = _res_int(fi, gi, var, others, df, dg)
    scale = Fraction(1, cf ** dg * cg ** df)
    return r * scale if scale != 1 else r


def _res_int(f, g, var, others, df, dg):
    if not others:
        a = [int(c) for c in f.to_dense(var)] if f.terms else []
        b = [int(c) for c in g.to_dense(var)] if g.terms else []
        return SparsePoly.const(_dense.resultant(a, b, df, dg), f.vars)
    v = others[-1]
    rest = others[:-1]
    bound = dg * max(f.degree(v), 0) + df * max(g.degree(v), 0)
    pts, vals = [], []
    for t in _points():
        if len(pts) == bound + 1:
            break
        pts.append(t)
        vals.append(_res_int(f.subs_int(v, t), g.subs_int(v, t), var, rest, df, dg))
    return _interpolate_polys(pts, vals, v, f.vars)


def _resultant_ring_bareiss(f, g, var, df, dg):
    fc = f.coeffs(var)
    gc = g.coeffs(var)
    zero = f._new({})
    ra = [fc.get(k, zero) for k in range(df, -1, -1)]
    rb = [gc.get(k, zero) for k in range(dg, -1, -1)]
    size = df + dg
    m = []
    for i in range(dg):
        m.append([zero] * i + ra + [zero] * (size - i - df - 1))
    for i in range(df):
        m.append([zero] * i + rb + [zero] * (size - i - dg - 1))
    sign = 1
    prev = SparsePoly.const(1, f.vars)
    n = size
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = exact_div(num, prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                m[i][j] = q
            m[i][k] = zero
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


# ---------------------------------------------------------------------- gcd

def content_in(f: SparsePoly, var: str) -> SparsePoly:
    """gcd of the coefficients of f viewed as a polynomial in var."""
    if f.is_zero():
        return f
    cs = list(f.coeffs(var).values())
    cs.sort(key=lambda p: len(p.terms))
    g = cs[0].primitive()
    for c in cs[1:]:
        if g.is_const():
            break
        g = gcd(g, c)
    if g.is_const():
        return SparsePoly.const(1, f.vars)
    return g


def primitive_part_in(f: SparsePoly, var: str) -> SparsePoly:
    c = content_in(f, var)
    if c.is_const():
        return f.primitive()
    return exact_div(f, c).primitive()


def gcd(f: SparsePoly, g: SparsePoly, main_var: str | None = None, method: str = "interp") -> SparsePoly:
    """Greatest common divisor, normalised primitive with positive leading
    coefficient.

    ``interp``: dense interpolation over integer evaluation points of the
    non-main variables, every candidate confirmed by exact division.
    ``prs``: recursive primitive remainder sequence over the coefficient
    ring (small inputs).  Univariate gcds use a heuristic big-evaluation gcd
    with PRS fallback.
    """
    f, g = f._align(g)
    if f.has_cyclo_coeffs() or g.has_cyclo_coeffs():
        raise TypeError("gcd is implemented over Q only")
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    used = [v for v in f.vars if f.degree(v) > 0 or g.degree(v) > 0]
    if not used:
        return SparsePoly.const(1, f.vars)
    main = main_var if main_var in used else used[0]
    return _gcd_rec(f.primitive(), g.primitive(), main, method)


def _gcd_rec(f, g, x, method):
    others = [v for v in f.vars if v != x and (f.degree(v) > 0 or g.degree(v) > 0)]
    if f.degree(x) <= 0 and g.degree(x) <= 0:
        if not others:
            return SparsePoly.const(1, f.vars)
        return _gcd_rec(f, g, others[0], method)
    if not others:
        a = f.to_int_dense(x)
        b = g.to_int_dense(x)
        return SparsePoly.from_dense(_dense.gcd(a, b), x, f.vars).primitive()
    cf = content_in(f, x)
    cg = content_in(g, x)
    c = gcd(cf, cg) if not (cf.is_const() or cg.is_const()) else SparsePoly.const(1, f.vars)
    pf = f if cf.is_const() else exact_div(f, cf)
    pg = g if cg.is_const() else exact_div(g, cg)
    if pf.degree(x) <= 0 or pg.degree(x) <= 0:
        return c.primitive()
    if method == "prs":
        h = _gcd_prs(pf, pg, x)
    else:
        h = _gcd_interp(pf, pg, x, others)
    return (c * h).primitive()


def _prem(f, g, x):
    dg = g.degree(x)
    lg = g.lc(x)
    r = f
    while not r.is_zero() and r.degree(x) >= dg:
        d = r.degree(x)
        lr = r.lc(x)
        mono = [0] * len(f.vars)
        mono[f.index(x)] = d - dg
        r = r * lg - (g * lr).shift(mono)
    return r


def _gcd_prs(f, g, x):
    if f.degree(x) < g.degree(x):
        f, g = g, f
    while not g.is_zero() and g.degree(x) > 0:
        r = _prem(f, g, x)
        f, g = g, (primitive_part_in(r, x) if not r.is_zero() else r)
    if g.is_zero():
        return primitive_part_in(f, x)
    return SparsePoly.const(1, f.vars)


def _gcd_interp(f, g, x, others):
    v = others[-1]
    lf, lg = f.lc(x), g.lc(x)
    gam = gcd(lf, lg)
    bound = min(f.degree(v), g.degree(v)) + max(gam.degree(v), 0)
    best = None
    pts, imgs = [], []
    tries = 0
    limit = 4 * (bound + 1) + 64
    for t in _points():
        tries += 1
        if tries > limit:
            return _gcd_prs(f, g, x)
        gt = gam.subs_int(v, t)
        if gt.is_zero() or lf.subs_int(v, t).is_zero() or lg.subs_int(v, t).is_zero():
            continue
        ft, gtt = f.subs_int(v, t), g.subs_int(v, t)
        h = _gcd_rec(ft.primitive(), gtt.primitive(), x, "interp")
        d = h.degree(x)
        if d <= 0:
            return SparsePoly.const(1, f.vars)
        if best is None or d < best:
            best, pts, imgs = d, [], []
        elif d > best:
            continue
        scale = exact_div(gt, h.lc(x))
        if scale is None:
            continue
        pts.append(t)
        imgs.append(h * scale)
        if len(pts) == bound + 1:
            cand = _interpolate_polys(pts, imgs, v, f.vars)
            cand = primitive_part_in(cand, x)
            if cand.degree(x) == best and exact_div(f, cand) is not None \
                    and exact_div(g, cand) is not None:
                return cand
            pts, imgs = [], []
    raise AssertionError("unreachable")


def squarefree_part(f: SparsePoly, main_var: str | None = None) -> SparsePoly:
    """Product of the distinct irreducible factors, normalised primitive."""
    if f.is_zero():
        return f
    used = f.used_vars()
    if not used:
        return SparsePoly.const(1, f.vars)
    x = main_var if main_var in used else used[0]
    c = content_in(f, x)
    pp = f if c.is_const() else exact_div(f, c)
    if len(used) == 1:
        a = pp.to_int_dense(x)
        core = SparsePoly.from_dense(_dense.squarefree_part(a), x, f.vars)
    else:
        d = pp.diff(x)
        h = gcd(pp, d, x)
        core = pp if h.is_const() else exact_div(pp, h)
    if not c.is_const():
        core = core * squarefree_part(c)
    return core.primitive()


# ------------------------------------------------------------ rational roots

def _small_divisors(n, limit=10 ** 6):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
        if d > limit:
            return None
    return sorted(out)


def _roots_by_divisors(a):
    """Rational roots of a primitive squarefree integer poly with a[0] != 0."""
    ps = _small_divisors(a[0])
    qs = _small_divisors(a[-1])
    if ps is None or qs is None:      # too many candidates to enumerate
        return _roots_padic(a)
    roots = set()
    for q in qs:
        for p in ps:
            if math.gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                if _dense.eval_frac_hom(a, sp, q) == 0:
                    roots.add(Fraction(sp, q))
    return roots


def _primes_from(start):
    p = max(start, 3)
    while True:
        if all(p % d for d in range(2, int(p ** 0.5) + 1)):
            yield p
        p += 1


def _ratrecon(r, m, nb, db):
    """Rational p/q with |p| <= nb, 0 < q <= db and p = r q mod m, or None."""
    r0, r1 = m, r % m
    t0, t1 = 0, 1
    while r1 > nb:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > db or math.gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def _roots_padic(a):
    """Rational roots via roots mod a prime and Hensel lifting."""
    lc, tc = a[-1], a[0]
    da = _dense.deriv(a)
    for ell in _primes_from(max(61, len(a) + 1)):
        if lc % ell == 0:
            continue
        am = [c % ell for c in a]
        dm = [c % ell for c in da]
        # squarefree modulo ell: gcd(a, a') is constant
        if not _mod_coprime(am, dm, ell):
            continue
        break
    roots0 = [t for t in range(ell) if _dense.eval_int(am, t) % ell == 0]
    bound = 2 * abs(lc) * abs(tc) + 1
    roots = set()
    for r in roots0:
        mod = ell
        x = r
        while mod <= bound:
            mod = mod * mod
            fx = _dense.eval_int(a, x) % mod
            dfx = _dense.eval_int(da, x) % mod
            x = (x - fx * pow(dfx, -1, mod)) % mod
        cand = _ratrecon(x, mod, abs(tc), abs(lc))
        if cand is not None and _dense.eval_frac_hom(a, cand.numerator, cand.denominator) == 0:
            roots.add(cand)
    return roots


def _mod_coprime(a, b, p):
    def trimp(u):
        u = [c % p for c in u]
        while u and u[-1] == 0:
            u.pop()
        return u
    a, b = trimp(a), trimp(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            s = len(a) - len(b)
            for j, v in enumerate(b):
                a[s + j] = (a[s + j] - c * v) % p
            a = trimp(a)
        a, b = b, a
    return len(a) == 1


def rational_roots(h: SparsePoly, method: str = "auto") -> list:
    """Sorted distinct rational roots of a nonzero univariate polynomial.

    ``divisors`` tests every +-p/q with p | trailing and q | leading
    coefficient; ``padic`` finds roots modulo a prime, lifts them and uses
    rational reconstruction; ``auto`` picks divisors when the coefficients
    are small.  Both are complete and every root is checked exactly.
    """
    if isinstance(h, SparsePoly):
        if h.is_zero():
            raise ValueError("rational roots of the zero polynomial")
        a = h.to_int_dense()
    else:
        a = _dense.primitive(list(h))
    roots = set()
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        a = a[k:]
    if len(a) <= 1:
        return sorted(roots)
    a = _dense.squarefree_part(a)
    if len(a) == 2:
        roots.add(Fraction(-a[0], a[1]))
        return sorted(roots)
    if method == "auto":
        small = abs(a[0]) < 10 ** 9 and abs(a[-1]) < 10 ** 9
        method = "divisors" if small else "padic"
    if method == "divisors":
        roots |= _roots_by_divisors(a)
    elif method == "padic":
        roots |= _roots_padic(a)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(roots)

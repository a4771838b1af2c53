"""Cyclotomic parts of univariate polynomials.

The cyclotomic part of f is the product of the distinct Phi_n dividing f;
equivalently the squarefree factor whose roots are exactly the roots of
unity among the roots of f.  Two routes are provided: trial division by
every candidate Phi_n (the baseline) and a Graeffe-iteration route that
isolates the part with gcds first.  They must agree.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _dense
from .exact import CycloElement, RootOfUnity, cyclotomic_poly, totient, units_mod
from .poly import SparsePoly, resultant

__all__ = [
    "CyclotomicPartResult", "conductor_candidates", "cyclotomic_part",
    "cyclotomic_part_over_field", "graeffe", "max_conductor", "ConductorLimitError",
    "cyclotomic_indices", "conjugate_norm",
]


class ConductorLimitError(RuntimeError):
    """Enumeration would exceed the configured conductor cap."""


def max_conductor() -> int | None:
    """Cap from CYCLOPOINT_MAX_CONDUCTOR (unset or empty means no cap)."""
    raw = os.environ.get("CYCLOPOINT_MAX_CONDUCTOR", "").strip()
    if not raw:
        return None
    try:
        v = int(raw)
    except ValueError as exc:
        raise ValueError(f"CYCLOPOINT_MAX_CONDUCTOR must be an integer, got {raw!r}") from exc
    if v < 1:
        raise ValueError("CYCLOPOINT_MAX_CONDUCTOR must be positive")
    return v


@dataclass(frozen=True)
class CyclotomicPartResult:
    part: SparsePoly
    roots: tuple          # RootOfUnity, sorted by (order, exp)
    indices: tuple = ()   # the n with Phi_n | f

    def to_json(self):
        return {
            "part": factored_text(self.indices, self.part.vars[0] if self.part.vars else "x"),
            "part_expanded": self.part.to_text(),
            "indices": list(self.indices),
            "roots": [r.to_json() for r in self.roots],
        }


@lru_cache(maxsize=None)
def _totients_upto(m: int):
    phi = list(range(m + 1))
    for p in range(2, m + 1):
        if phi[p] == p:
            for k in range(p, m + 1, p):
                phi[k] -= phi[k] // p
    return phi


def conductor_candidates(d: int) -> list:
    """All n with phi(n) <= d, in increasing order.

    phi(n) >= sqrt(n/2) for every n, so n <= 2 d^2 is a safe window.
    """
    if d < 1:
        return []
    window = max(2 * d * d, 2)
    phi = _totients_upto(window)
    out = [n for n in range(1, window + 1) if phi[n] <= d]
    cap = max_conductor()
    if cap is not None and out and out[-1] > cap:
        raise ConductorLimitError(
            f"degree {d} needs conductors up to {out[-1]}, above the cap {cap}")
    return out


def graeffe(f):
    """Graeffe transform: the polynomial whose roots are the squares of f's.

    Accepts a univariate SparsePoly or a dense integer list.
    """
    if isinstance(f, SparsePoly):
        var = f.used_vars()[0] if f.used_vars() else (f.vars[0] if f.vars else "x")
        a = f.to_int_dense(var)
        return SparsePoly.from_dense(_dense.graeffe(a), var, f.vars)
    return _dense.graeffe(list(f))


def _prepare(a):
    """Strip x^k and take the squarefree part of a primitive integer poly."""
    a = _dense.primitive(list(a))
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    a = a[k:]
    if len(a) <= 1:
        return []
    return _dense.squarefree_part(a)


def _indices_by_division(a, cands=None):
    d = len(a) - 1
    if d < 1:
        return []
    out = []
    cands = conductor_candidates(d) if cands is None else cands
    for n in cands:
        phi = list(cyclotomic_poly(n))
        if len(phi) - 1 > d:
            continue
        if _dense.divides(phi, a):
            out.append(n)
    return out


def _c_odd(a):
    """Factor of a whose roots are the odd-order roots of unity among a's."""
    g = a
    while len(g) > 1:
        h = _dense.gcd(g, _dense.graeffe(g))
        if len(h) == len(g):
            return g
        g = h
    return [1]


def _c_2mod4(a):
    b = _c_odd(_dense.negate_var(a))
    return _dense.primitive(_dense.negate_var(b))


def _c_0mod4(a):
    # such roots are shared by a(x) and a(-x); their gcd is even, F(x^2)
    e = _dense.gcd(a, _dense.negate_var(a))
    if len(e) <= 2:
        return [1]
    F = e[0::2]
    ce = _dense.mul(_c_2mod4(F), _c_0mod4(F))
    if len(ce) <= 1:
        return [1]
    return _dense.gcd(a, _dense.inflate(ce, 2))


def _part_graeffe(a):
    """Cyclotomic part of a squarefree a with a(0) != 0 via Graeffe gcds."""
    parts = [_c_odd(a), _c_2mod4(a), _c_0mod4(a)]
    out = [1]
    for p in parts:
        out = _dense.mul(out, p)
    return _dense.primitive(out)


def cyclotomic_indices(a, method: str = "enumerate") -> list:
    """Sorted n with Phi_n | a (a a dense integer list)."""
    a = _prepare(a)
    if not a:
        return []
    if method == "enumerate":
        return _indices_by_division(a)
    if method == "graeffe":
        c = _part_graeffe(a)
        return _indices_by_division(c) if len(c) > 1 else []
    if method == "checked":
        x = _indices_by_division(a)
        c = _part_graeffe(a)
        y = _indices_by_division(c) if len(c) > 1 else []
        if x != y:
            raise AssertionError(f"cyclotomic routes disagree: {x} vs {y}")
        return x
    raise ValueError(f"unknown method {method!r}")


def _roots_of_indices(indices):
    roots = []
    for n in indices:
        roots.extend(RootOfUnity(n, k) for k in units_mod(n))
    return tuple(sorted(roots))


def factored_text(indices, var="x") -> str:
    if not indices:
        return "1"
    return "*".join("(" + SparsePoly.from_dense(list(cyclotomic_poly(n)), var).pretty(compact=True) + ")"
                    for n in indices)


def cyclotomic_part(f, method: str = "enumerate") -> CyclotomicPartResult:
    """Cyclotomic part of a nonzero univariate polynomial over Q."""
    if isinstance(f, SparsePoly):
        if f.is_zero():
            raise ValueError("cyclotomic part of the zero polynomial")
        used = f.used_vars()
        if len(used) > 1:
            raise ValueError("cyclotomic part needs a univariate polynomial")
        var = used[0] if used else (f.vars[0] if f.vars else "x")
        a = f.to_int_dense(var)
        vars = f.vars or (var,)
    else:
        a, var, vars = list(f), "x", ("x",)
        if not any(a):
            raise ValueError("cyclotomic part of the zero polynomial")
    idx = cyclotomic_indices(a, method)
    part = [1]
    for n in idx:
        part = _dense.mul(part, list(cyclotomic_poly(n)))
    return CyclotomicPartResult(SparsePoly.from_dense(part, var, vars), _roots_of_indices(idx), tuple(idx))


# ---------------------------------------------------------------- over Q(zeta)

def _coeff_conductor(f: SparsePoly) -> int:
    L = 1
    for c in f.terms.values():
        if isinstance(c, CycloElement):
            L = L * c.n // math.gcd(L, c.n)
    return L


def conjugate_norm(f: SparsePoly, var: str) -> SparsePoly:
    """Product of the Galois conjugates of f (coefficients in Q(zeta_N)).

    The result has rational coefficients; this is checked.
    """
    N = _coeff_conductor(f)
    fN = f.map_coeffs(lambda c: c.embed(N) if isinstance(c, CycloElement) else CycloElement.rational(c, N))
    prod = None
    for k in units_mod(N):
        conj = fN.map_coeffs(lambda c: c.galois(k))
        prod = conj if prod is None else prod * conj
    out = {}
    for e, c in prod.terms.items():
        q = c.as_rational()
        if q is None:
            raise ArithmeticError("conjugate product is not rational")
        out[e] = q
    return SparsePoly(f.vars, out)


def norm_via_resultant(F: SparsePoly, xvar: str, m: int) -> SparsePoly:
    """Res_x(Phi_m(x), F): the product of F(zeta, .) over primitive m-th roots."""
    phi = SparsePoly.from_dense(list(cyclotomic_poly(m)), xvar, F.vars)
    return resultant(phi, F, xvar)


def eval_at_root(f: SparsePoly, var: str, root: RootOfUnity):
    """Value of a univariate f (rational or cyclotomic coefficients) at a root."""
    return f.subs_root(var, root).const_value() if f.terms else Fraction(0)


def cyclotomic_part_over_field(f: SparsePoly, norm: SparsePoly | None = None,
                               method: str = "enumerate") -> CyclotomicPartResult:
    """Roots of unity among the roots of f in Q(zeta_N)[y].

    Runs the rational cyclotomic part on the norm (all conjugates of f) and
    keeps only the roots that satisfy f exactly.  The returned ``part`` is
    the rational cyclotomic part of the norm.
    """
    if f.is_zero():
        raise ValueError("cyclotomic part of the zero polynomial")
    used = f.used_vars()
    if len(used) > 1:
        raise ValueError("needs a univariate polynomial")
    var = used[0] if used else (f.vars[0] if f.vars else "y")
    if norm is None:
        norm = conjugate_norm(f, var) if f.has_cyclo_coeffs() else f
    res = cyclotomic_part(norm, method)
    keep = []
    for r in res.roots:
        v = eval_at_root(f, var, r)
        if (v.is_zero() if isinstance(v, CycloElement) else v == 0):
            keep.append(r)
    return CyclotomicPartResult(res.part, tuple(keep), res.indices)

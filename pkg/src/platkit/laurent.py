"""Exact one-variable Laurent polynomials with integer coefficients.

This is the value type for every polynomial invariant in the package.
Internally a polynomial is a map from integer exponent to nonzero integer
coefficient; equality is exact term-by-term equality.  Arithmetic helpers
that operate on raw ``{exponent: coefficient}`` dicts are exposed for hot
loops (the Temperley-Lieb propagation multiplies thousands of small
polynomials); the class itself is a thin immutable wrapper.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping


# ---------------------------------------------------------------------------
# raw-dict arithmetic (values are {exp: coeff} with no zero coefficients)
# ---------------------------------------------------------------------------

def padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out

def pneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}

def psub(a: dict, b: dict) -> dict:
    return padd(a, pneg(b))

def pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out

def pscale(a: dict, c: int, shift: int = 0) -> dict:
    """a * c * x^shift."""
    if c == 0:
        return {}
    return {e + shift: co * c for e, co in a.items()}

def pconst(c: int) -> dict:
    return {0: c} if c else {}

def peval(a: dict, x: int) -> int:
    """Evaluate at a nonzero integer (negative exponents need |x| = 1 or exact division)."""
    total = 0
    for e, c in a.items():
        if e >= 0:
            total += c * x ** e
        else:
            q, r = divmod(c, x ** (-e))
            if r:
                raise ValueError("non-integer evaluation of Laurent polynomial")
            total += q
    return total

def pmin_exp(a: dict) -> int:
    return min(a) if a else 0

def pmonomial_unit(a: dict) -> tuple[int, int] | None:
    """If a is a single term +-t^k (or any c*t^k with |c| = 1), return (c, k)."""
    if len(a) != 1:
        return None
    (e, c), = a.items()
    return (c, e) if abs(c) == 1 else None

def pdiv_monomial(a: dict, c: int, e: int) -> dict:
    """Exact division by c * x^e where |c| = 1."""
    return {ea - e: ca * c for ea, ca in a.items()}  # c in {1,-1} so * == /

def pnormalize_units(a: dict) -> dict:
    """Multiply by +-x^k so min exponent is 0 with positive coefficient there."""
    if not a:
        return {}
    m = min(a)
    s = 1 if a[m] > 0 else -1
    return {e - m: c * s for e, c in a.items()}

def pcontent(a: dict) -> int:
    from math import gcd
    g = 0
    for c in a.values():
        g = gcd(g, abs(c))
    return g

def pprimitive(a: dict) -> dict:
    g = pcontent(a)
    if g <= 1:
        return dict(a)
    return {e: c // g for e, c in a.items()}


def pgcd(a: dict, b: dict) -> dict:
    """gcd in Z[x^{+-1}] up to units, returned with min exponent 0.

    Shifts both inputs to ordinary polynomials, then runs a primitive
    pseudo-remainder sequence (exact over Z).
    """
    from math import gcd as igcd

    if not a:
        return pnormalize_units(b)
    if not b:
        return pnormalize_units(a)
    ca, cb = pcontent(a), pcontent(b)
    f = _plist(pnormalize_units(pprimitive(a)))
    g = _plist(pnormalize_units(pprimitive(b)))
    while g:
        f, g = g, _prem(f, g)
        g = _plist_primitive(g)
    content = igcd(ca, cb)
    out = {e: c * content for e, c in enumerate(f) if c}
    return pnormalize_units(out)


def _plist(a: dict) -> list[int]:
    """dict (min exp 0) -> dense coefficient list, low degree first."""
    if not a:
        return []
    d = max(a)
    out = [0] * (d + 1)
    for e, c in a.items():
        out[e] = c
    while out and out[-1] == 0:
        out.pop()
    return out

def _plist_primitive(f: list[int]) -> list[int]:
    from math import gcd as igcd
    g = 0
    for c in f:
        g = igcd(g, abs(c))
    if g > 1:
        f = [c // g for c in f]
    return f

def _prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of f by g (g nonzero), dense lists low-first."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        df = len(f) - 1
        lf = f[-1]
        f = [c * lg for c in f]
        for i in range(dg + 1):
            f[df - dg + i] -= lf * g[i]
        while f and f[-1] == 0:
            f.pop()
    return f


# ---------------------------------------------------------------------------
# public wrapper
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentPolynomial:
    """Immutable exact Laurent polynomial in a single named variable."""

    variable: str = "t"
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {int(e): int(c) for e, c in self.terms.items() if c}
        object.__setattr__(self, "terms", cleaned)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int, variable: str = "t") -> "LaurentPolynomial":
        return cls(variable, pconst(c))

    @classmethod
    def monomial(cls, c: int, e: int, variable: str = "t") -> "LaurentPolynomial":
        return cls(variable, {e: c} if c else {})

    @classmethod
    def zero(cls, variable: str = "t") -> "LaurentPolynomial":
        return cls(variable, {})

    @classmethod
    def one(cls, variable: str = "t") -> "LaurentPolynomial":
        return cls(variable, {0: 1})

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "LaurentPolynomial"):
        if self.variable != other.variable:
            raise ValueError(
                f"variable mismatch: {self.variable!r} vs {other.variable!r}")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        return LaurentPolynomial(self.variable, padd(dict(self.terms), dict(other.terms)))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        return LaurentPolynomial(self.variable, psub(dict(self.terms), dict(other.terms)))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.variable, pneg(dict(self.terms)))

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(self.variable, pscale(dict(self.terms), other))
        self._check(other)
        return LaurentPolynomial(self.variable, pmul(dict(self.terms), dict(other.terms)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            u = pmonomial_unit(dict(self.terms))
            if u is None:
                raise ValueError("negative power of a non-unit Laurent polynomial")
            c, e = u
            base = LaurentPolynomial(self.variable, {-e: c})
            return base ** (-k)
        out = pconst(1)
        base = dict(self.terms)
        while k:
            if k & 1:
                out = pmul(out, base)
            base = pmul(base, base)
            k >>= 1
        return LaurentPolynomial(self.variable, out)

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by variable^k."""
        return LaurentPolynomial(self.variable, {e + k: c for e, c in self.terms.items()})

    def substitute_inverse(self) -> "LaurentPolynomial":
        """x -> x^{-1}."""
        return LaurentPolynomial(self.variable, {-e: c for e, c in self.terms.items()})

    def rename(self, variable: str) -> "LaurentPolynomial":
        return LaurentPolynomial(variable, dict(self.terms))

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def min_exponent(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def max_exponent(self) -> int:
        return max(self.terms) if self.terms else 0

    def coefficient(self, e: int) -> int:
        return self.terms.get(e, 0)

    def term_count(self) -> int:
        return len(self.terms)

    def evaluate(self, x: int) -> int:
        return peval(dict(self.terms), x)

    def evaluate_fraction(self, x: Fraction) -> Fraction:
        return sum((Fraction(c) * Fraction(x) ** e for e, c in self.terms.items()),
                   Fraction(0))

    def normalized_units(self) -> "LaurentPolynomial":
        """The +-x^k representative with min exponent 0 and positive low coefficient."""
        return LaurentPolynomial(self.variable, pnormalize_units(dict(self.terms)))

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"var": self.variable,
                "terms": {str(e): c for e, c in sorted(self.terms.items())}}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPolynomial":
        return cls(data["var"], {int(e): int(c) for e, c in data["terms"].items()})

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = self.variable if mag == 1 else f"{mag}{self.variable}"
            else:
                body = (f"{self.variable}^{e}" if mag == 1
                        else f"{mag}{self.variable}^{e}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __hash__(self):
        return hash((self.variable, frozenset(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.variable == other.variable and dict(self.terms) == dict(other.terms)


def from_terms(pairs: Iterable[tuple[int, int]], variable: str = "t") -> LaurentPolynomial:
    d: dict = {}
    for e, c in pairs:
        s = d.get(e, 0) + c
        if s:
            d[e] = s
        else:
            d.pop(e, None)
    return LaurentPolynomial(variable, d)

#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Exact Laurent polynomials in one variable v with integer coefficients
# These are the coefficients of everything on the Hecke algebra side (KL polynomials, cell vectors, classes)
#
# Text format: monomials in descending exponent order, e.g. "3*v^2 - v + 1 + v^-2"
#              exponent 1 is printed as "v", exponent 0 as the bare integer, the zero polynomial as "0"
# --------------------------------------------------------------------------------------------------------------

# -------- import
import re

from .errors import PolyParseError

# -------- variables
_TERM = re.compile(r"([+-])?(\d+)?(\*)?(v)?(?:\^(-?\d+))?")

# -------- classes

class LaurentPoly:
    """Immutable sparse map exponent -> nonzero integer coefficient."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        items = {}
        if coeffs:
            for exp, c in dict(coeffs).items():
                if c:
                    items[int(exp)] = int(c)
        self._coeffs = items
        self._hash = None

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def coeff(self, exp):
        return self._coeffs.get(exp, 0)

    def exponents(self):
        return sorted(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self):
        return not self._coeffs

    def min_degree(self):
        return min(self._coeffs) if self._coeffs else None

    def max_degree(self):
        return max(self._coeffs) if self._coeffs else None

    # ---- arithmetic
    @staticmethod
    def _lift(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({exp: -c for exp, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._coeffs) != 1 or abs(next(iter(self._coeffs.values()))) != 1:
                raise ValueError("only units v^k and -v^k can be inverted")
            (exp, c), = self._coeffs.items()
            return LaurentPoly({exp * n: c ** abs(n)})
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def bar(self):
        """The involution v -> v^-1."""
        return LaurentPoly({-exp: c for exp, c in self._coeffs.items()})

    def shift(self, k):
        """Multiply by v^k."""
        return LaurentPoly({exp + k: c for exp, c in self._coeffs.items()})

    # ---- comparisons
    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            if set(self._coeffs) <= {0}:
                # constants hash like the int they compare equal to
                self._hash = hash(self._coeffs.get(0, 0))
            else:
                self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    # ---- text format
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

# -------- functions

# ---- text form, descending exponents
def format_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in sorted(p.items(), reverse=True):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            var = "v" if exp == 1 else f"v^{exp}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)

# ---- parse the text form (same grammar as format_poly)
def parse_poly(text):
    src = "".join(text.split())
    if not src:
        raise PolyParseError("empty polynomial")
    out = {}
    pos = 0
    while pos < len(src):
        m = _TERM.match(src, pos)
        sign, digits, star, var, exp = m.groups()
        if m.end() == pos or (digits is None and var is None):
            raise PolyParseError(f"cannot read term at position {pos} in '{text}'")
        if pos > 0 and sign is None:
            raise PolyParseError(f"missing '+' or '-' at position {pos} in '{text}'")
        if star and var is None:
            raise PolyParseError(f"dangling '*' at position {pos} in '{text}'")
        if exp is not None and var is None:
            raise PolyParseError(f"exponent without 'v' at position {pos} in '{text}'")
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if var is not None:
            e = int(exp) if exp is not None else 1
        out[e] = out.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(out)

def add(a, b):
    return a + b

def mul(a, b):
    return a * b

def bar(a):
    return a.bar()

# -------- constants
ZERO = LaurentPoly()
ONE  = LaurentPoly.constant(1)
V    = LaurentPoly.monomial(1)
VINV = LaurentPoly.monomial(-1)

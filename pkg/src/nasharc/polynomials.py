"""Sparse bivariate polynomials with exact rational coefficients.

These are the local equations fed to the order-of-vanishing computations:
small polynomials in the two chart coordinates, transformed by the two
blow-up chart substitutions and divided by exact exceptional powers.  No
factorization is ever performed; multiplicities are read off as minimal
total degrees.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb

from .errors import InternalInvariantError, ValidationError
from .rationals import format_rational

Monomial = tuple[int, int]


class Poly2:
    """Immutable-by-convention sparse polynomial in x and y."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction | int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def variable(cls, name: str) -> "Poly2":
        if name == "x":
            return cls({(1, 0): 1})
        if name == "y":
            return cls({(0, 1): 1})
        raise ValidationError(f"unknown variable {name!r}")

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "Poly2":
        return cls({(a, b): c})

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "Poly2") -> "Poly2":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly2(out)

    def __neg__(self) -> "Poly2":
        return Poly2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other: "Poly2") -> "Poly2":
        out: dict[Monomial, Fraction | int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return Poly2(out)

    def scale(self, c) -> "Poly2":
        if c == 0:
            return Poly2()
        return Poly2({k: v * c for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly2":
        if n < 0:
            raise ValidationError("negative powers are not defined")
        result = Poly2.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((k, Fraction(v)) for k, v in self.terms.items()))

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            raise ValidationError("the zero polynomial has no degree")
        return max(a + b for a, b in self.terms)

    def multiplicity(self) -> int:
        """Order of vanishing at the origin: the minimal total degree."""
        if not self.terms:
            raise ValidationError("the zero polynomial has no multiplicity")
        return min(a + b for a, b in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(k[var] for k in self.terms)

    def evaluate(self, x, y):
        return sum(c * x**a * y**b for (a, b), c in self.terms.items())

    # -- blow-up charts ---------------------------------------------------------

    def subst_free(self, c) -> "Poly2":
        """Total transform in the chart (x, y) -> (x, x*(y + c))."""
        out: dict[Monomial, Fraction | int] = {}
        for (a, b), coef in self.terms.items():
            for k in range(b + 1):
                key = (a + b, k)
                out[key] = out.get(key, 0) + coef * comb(b, k) * c ** (b - k)
        return Poly2(out)

    def subst_inf(self) -> "Poly2":
        """Total transform in the chart (x, y) -> (x*y, y)."""
        return Poly2({(a, a + b): coef for (a, b), coef in self.terms.items()})

    def divide_power(self, var: int, m: int) -> "Poly2":
        """Exact division by x^m or y^m (var 0 or 1); exactness is a theorem."""
        if m == 0:
            return self
        out = {}
        for key, coef in self.terms.items():
            if key[var] < m:
                raise InternalInvariantError(
                    "total transform is not divisible by the expected exceptional power"
                )
            new = (key[0] - m, key[1]) if var == 0 else (key[0], key[1] - m)
            out[new] = coef
        return Poly2(out)

    # -- exact multivariate division (used by the resultant) --------------------

    def leading_term(self) -> tuple[Monomial, Fraction | int]:
        key = max(self.terms)
        return key, self.terms[key]

    def exact_div(self, other: "Poly2") -> "Poly2":
        """Quotient when ``other`` divides exactly; raises otherwise."""
        if other.is_zero():
            raise ValidationError("division by the zero polynomial")
        rem = dict(self.terms)
        quot: dict[Monomial, Fraction | int] = {}
        (lo_a, lo_b), lead = other.leading_term()
        while rem:
            (a, b) = max(rem)
            if a < lo_a or b < lo_b:
                raise InternalInvariantError("exact polynomial division left a remainder")
            qk = (a - lo_a, b - lo_b)
            qc = Fraction(rem[(a, b)]) / Fraction(lead)
            quot[qk] = quot.get(qk, 0) + qc
            for (oa, ob), oc in other.terms.items():
                key = (oa + qk[0], ob + qk[1])
                val = rem.get(key, 0) - qc * oc
                if val == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = val
        return Poly2(quot)

    # -- formatting ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), coef in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            factors = []
            frac = Fraction(coef)
            if abs(frac) != 1 or (a, b) == (0, 0):
                factors.append(format_rational(abs(frac)))
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            text = "*".join(factors)
            parts.append(("- " if frac < 0 else "+ ") + text)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"Poly2({self})"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[xy])|(?P<op>[*/^+-]))")


def parse_poly(text: str) -> Poly2:
    """Parse the plain-text grammar: terms like ``2/3*x^2*y`` joined by + or -."""
    source = text.replace("−", "-")
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            if source[pos:].strip():
                raise ValidationError(
                    f"polynomial parse error at position {pos}: unexpected {source[pos]!r}"
                )
            break
        if m.lastgroup:
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()

    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None)

    def take():
        nonlocal idx
        tok = peek()
        idx += 1
        return tok

    def parse_rational_token() -> Fraction:
        kind, value = take()
        if kind != "num":
            raise ValidationError(f"polynomial parse error: expected a number, got {value!r}")
        num = int(value)
        if peek() == ("op", "/"):
            take()
            kind, value = take()
            if kind != "num":
                raise ValidationError("polynomial parse error: expected a denominator")
            den = int(value)
            if den == 0:
                raise ValidationError("polynomial parse error: zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor() -> Poly2:
        kind, value = peek()
        if kind == "num":
            return Poly2.constant(parse_rational_token())
        if kind == "var":
            take()
            exp = 1
            if peek() == ("op", "^"):
                take()
                kind2, value2 = take()
                if kind2 != "num":
                    raise ValidationError("polynomial parse error: expected an exponent")
                exp = int(value2)
            return Poly2.monomial(exp, 0) if value == "x" else Poly2.monomial(0, exp)
        raise ValidationError(f"polynomial parse error: expected a factor, got {value!r}")

    def parse_term() -> Poly2:
        result = parse_factor()
        while peek() == ("op", "*"):
            take()
            result = result * parse_factor()
        return result

    if not tokens:
        raise ValidationError("empty polynomial text")
    sign = 1
    kind, value = peek()
    if kind == "op" and value in "+-":
        take()
        sign = -1 if value == "-" else 1
    result = parse_term().scale(sign)
    while idx < len(tokens):
        kind, value = take()
        if kind != "op" or value not in "+-":
            raise ValidationError(f"polynomial parse error: expected + or -, got {value!r}")
        term = parse_term()
        result = result + term.scale(-1 if value == "-" else 1)
    return result

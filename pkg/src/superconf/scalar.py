"""Exact scalars: rationals, one-variable polynomials and rational functions.

Everything here works over Fraction.  Polynomials are stored low degree
first with trailing zeros stripped.  ParamRational is a reduced quotient of
two polynomials; it is used both for the free parameter a of D(2,1;a) and
for rational functions of the level k.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, NamedTuple, Sequence


class EquationError(ValueError):
    """Raised for malformed equations (zero denominators, zero polynomial)."""


class DegreeError(EquationError):
    """Raised when a polynomial exceeds the supported degree."""


def as_rational(x) -> Fraction:
    """Coerce int, Fraction or a 'p/q' string to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} to a rational")


def format_rational(x: Fraction) -> str:
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Poly:
    """Polynomial in one variable with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def linear(cls, slope, intercept) -> Poly:
        """slope * x + intercept"""
        return cls([intercept, slope])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other):
        if isinstance(other, ParamRational):
            return NotImplemented
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, ParamRational):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, ParamRational):
            return NotImplemented
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            shift = len(rem) - 1 - d
            f = rem[-1] / other.lead
            quo[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= f * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(self._lift(other))[0]

    def __mod__(self, other):
        return self.divmod(self._lift(other))[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return Poly(c / self.lead for c in self.coeffs)

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def primitive_integer(self) -> list[int]:
        """Integer coefficient list proportional to self, content removed."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return [c // g for c in ints] if g else ints

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if i == 0:
                body = mag
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if abs(c) == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    __str__ = to_str


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class ParamRational:
    """Reduced rational function num/den in one variable, den monic."""

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=None, var: str = "a"):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly.const(1) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.lead
        self.num = Poly(c / lead for c in num.coeffs)
        self.den = Poly(c / lead for c in den.coeffs)
        self.var = var

    @classmethod
    def variable(cls, var: str = "a") -> ParamRational:
        return cls(Poly.x(), var=var)

    def _lift(self, other) -> ParamRational:
        if isinstance(other, ParamRational):
            return other
        if isinstance(other, Poly):
            return ParamRational(other, var=self.var)
        return ParamRational(Poly.const(other), var=self.var)

    def __add__(self, other):
        o = self._lift(other)
        return ParamRational(self.num * o.den + o.num * self.den, self.den * o.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return ParamRational(-self.num, self.den, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return ParamRational(self.num * o.num, self.den * o.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return ParamRational(self.num * o.den, self.den * o.num, self.var)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def subs(self, value):
        """Evaluate at value; raises ZeroDivisionError at a pole."""
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError(f"pole at {value}")
        return self.num(value) / d

    def __eq__(self, other):
        if isinstance(other, ParamRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"ParamRational({self})"

    def __str__(self):
        if self.den.degree == 0:
            return self.num.to_str(self.var)
        return f"({self.num.to_str(self.var)})/({self.den.to_str(self.var)})"


def evaluate(x, a_value=None):
    """Instantiate a scalar that may depend on the parameter a."""
    if isinstance(x, ParamRational):
        if a_value is None:
            if x.is_constant():
                return x.constant()
            raise ValueError("parameter value required")
        return x.subs(as_rational(a_value))
    return as_rational(x)


# --- equations of the form  sum_i c_i / d_i(k) = 1 -------------------------

def _merge_denominators(terms: Sequence[tuple]) -> list[tuple[Fraction, Poly]]:
    """Group terms with proportional denominators onto a monic representative."""
    merged: dict[Poly, Fraction] = {}
    for c, d in terms:
        c = as_rational(c)
        if d.is_zero() or d.degree < 0:
            raise EquationError("zero denominator")
        if d.degree > 1:
            raise EquationError("denominators must be linear in k")
        if c == 0:
            continue
        key = d.monic()
        merged[key] = merged.get(key, Fraction(0)) + c / d.lead
    return [(c, d) for d, c in merged.items() if c != 0]


def common_denominator(terms: Sequence[tuple]) -> Poly:
    out = Poly.const(1)
    for _, d in _merge_denominators(terms):
        out = out * d
    return out


def clear_denominators(terms: Sequence[tuple]) -> Poly:
    """Numerator N of  sum_i c_i/d_i - 1 = N/L  with L the product of the
    distinct monic denominators.  Each d_i is a Poly of degree <= 1 in k."""
    merged = _merge_denominators(terms)
    big = Poly.const(1)
    for _, d in merged:
        big = big * d
    total = -big
    for c, d in merged:
        total = total + (big // d) * c
    return total


def equation_rational_function(terms: Sequence[tuple], var: str = "k") -> ParamRational:
    """sum_i c_i/d_i as a rational function, without clearing anything."""
    out = ParamRational(Poly.const(0), var=var)
    for c, d in terms:
        if d.is_zero():
            raise EquationError("zero denominator")
        out = out + ParamRational(Poly.const(as_rational(c)), d, var)
    return out


def equation_poles(terms: Sequence[tuple]) -> list[Fraction]:
    out = []
    for _, d in _merge_denominators(terms):
        if d.degree == 1:
            out.append(-d.coeffs[0])
    return sorted(out)


class RootReport(NamedTuple):
    roots: list            # distinct rational roots, ascending
    irrational: int        # number of roots (with multiplicity) that are not rational
    multiplicities: dict   # root -> multiplicity


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def solve_univariate(p: Poly, max_degree: int = 4) -> RootReport:
    """Rational roots of p by the rational root theorem with deflation."""
    if p.is_zero():
        raise EquationError("zero polynomial: every level is a solution")
    if p.degree > max_degree:
        raise DegreeError(f"degree {p.degree} exceeds {max_degree}")
    mult: dict[Fraction, int] = {}
    cur = p
    while cur.degree >= 1 and cur.coeffs[0] == 0:
        mult[Fraction(0)] = mult.get(Fraction(0), 0) + 1
        cur = Poly(cur.coeffs[1:])
    found = True
    while cur.degree >= 1 and found:
        found = False
        ints = cur.primitive_integer()
        for q in _divisors(ints[-1]):
            for num in _divisors(ints[0]):
                for s in (1, -1):
                    r = Fraction(s * num, q)
                    if cur(r) == 0:
                        mult[r] = mult.get(r, 0) + 1
                        cur = cur // Poly.linear(1, -r)
                        found = True
                        break
                if found:
                    break
            if found:
                break
    roots = sorted(mult)
    return RootReport(roots, max(cur.degree, 0), mult)


def solve_sum_equal_one(terms: Sequence[tuple]) -> RootReport:
    """Solve sum_i c_i/d_i(k) = 1, dropping any root that is a pole."""
    num = clear_denominators(terms)
    rep = solve_univariate(num)
    poles = set(equation_poles(terms))
    roots = [r for r in rep.roots if r not in poles]
    return RootReport(roots, rep.irrational, {r: rep.multiplicities[r] for r in roots})

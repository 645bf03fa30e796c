"""Exact univariate polynomials and rational functions over the rationals.

Coefficients are ``fractions.Fraction`` values, so every operation is
exact; floats are rejected to keep it that way.  A rational function is
stored in canonical form: numerator and denominator coprime, the
denominator monic, and the zero function represented as 0/1.  Canonical
form makes ``==`` a true equality test and serialization deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZeroFunction, PoleAtPoint

__all__ = ["Poly", "RatFun", "poly_gcd", "poly_lcm"]


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact coefficient required, got {type(value).__name__}")


class Poly:
    """Dense univariate polynomial; ``coeffs[d]`` is the degree-d coefficient.

    The zero polynomial has an empty coefficient tuple and degree -1;
    otherwise the leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        vals = [_coerce(c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, factor) -> "Poly":
        factor = _coerce(factor)
        return Poly([c * factor for c in self.coeffs])

    def __divmod__(self, other):
        """Exact division with remainder; the divisor must be nonzero."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quo = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlead = other.lead
        dlen = len(other.coeffs)
        while len(rem) >= dlen:
            coef = rem[-1] / dlead
            shift = len(rem) - dlen
            quo[shift] = coef
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= coef * c
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                break
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.lead)

    def __call__(self, x0) -> Fraction:
        x0 = _coerce(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{d}" if c == 1 else f"{c}*x^{d}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


Poly.ZERO = Poly()
Poly.ONE = Poly([1])
Poly.X = Poly([0, 1])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    """Monic least common multiple; zero if either argument is zero."""
    if a.is_zero or b.is_zero:
        return Poly()
    return ((a * b) // poly_gcd(a, b)).monic()


class RatFun:
    """Rational function num/den in canonical form.

    Canonical means gcd(num, den) = 1, den monic, and the zero function
    stored as 0/1, so structural equality is functional equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly.ONE):
        if not isinstance(num, Poly):
            num = Poly([num])
        if not isinstance(den, Poly):
            den = Poly([den])
        if den.is_zero:
            raise DivisionByZeroFunction("zero denominator")
        if num.is_zero:
            num, den = Poly.ZERO, Poly.ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.lead
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def const(cls, value) -> "RatFun":
        return cls(Poly([_coerce(value)]))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFun.const(other)
        return isinstance(other, RatFun) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero:
            raise DivisionByZeroFunction("division by the zero function")
        return RatFun(self.num * other.den, self.den * other.num)

    def reciprocal(self) -> "RatFun":
        if self.is_zero:
            raise DivisionByZeroFunction("reciprocal of the zero function")
        return RatFun(self.den, self.num)

    def __call__(self, x0) -> Fraction:
        x0 = _coerce(x0)
        dval = self.den(x0)
        if dval == 0:
            raise PoleAtPoint(f"pole at {x0}")
        return self.num(x0) / dval

    def __str__(self):
        if self.den == Poly.ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"


RatFun.ZERO = RatFun(Poly.ZERO)
RatFun.ONE = RatFun(Poly.ONE)
RatFun.X = RatFun(Poly.X)

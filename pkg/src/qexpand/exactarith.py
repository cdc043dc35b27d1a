"""Exact arithmetic in the field of rational functions of one variable q.

Two value types live here.  ``IntPolynomial`` is a dense univariate
polynomial with arbitrary-precision integer coefficients, stored in
ascending degree order with no trailing zero entry, so equal values always
have identical representations.  ``RationalFunction`` is a quotient of two
IntPolynomials kept fully reduced and sign-normalized, which makes equality
a plain structural comparison.

All values are immutable and every operation is a pure function, so values
may be shared freely across threads and tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd as _int_gcd
from typing import Sequence


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a denominator root.

    Carries the numerically evaluated numerator and denominator so callers
    can report the offending values instead of aborting.
    """

    def __init__(self, num_value: complex, den_value: complex):
        super().__init__(
            f"pole at evaluation point (num={num_value!r}, den={den_value!r})"
        )
        self.num_value = num_value
        self.den_value = den_value


@dataclass(frozen=True)
class IntPolynomial:
    """A polynomial in q with integer coefficients; ``coeffs[k]`` is for q**k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = self.coeffs
        if type(cs) is not tuple or any(type(c) is not int for c in cs):
            cs = tuple(int(c) for c in cs)
        n = len(cs)
        while n and cs[n - 1] == 0:
            n -= 1
        if n != len(cs):
            cs = cs[:n]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        """The polynomial ``coeff * q**degree``."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        """Nonnegative gcd of all coefficients; 0 for the zero polynomial."""
        return reduce(_int_gcd, (abs(c) for c in self.coeffs), 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return IntPolynomial(tuple(out))

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def __rmul__(self, other: int) -> IntPolynomial:
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        result, base, e = ONE, self, exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, point):
        """Evaluate at ``point`` by Horner's scheme; exact for int points."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def _scale_div(self, divisor: int) -> IntPolynomial:
        # internal: divisor divides every coefficient exactly
        return IntPolynomial(tuple(c // divisor for c in self.coeffs))

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        """Quotient by an exact polynomial divisor; raises if it does not divide."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        dd = divisor.degree
        if self.degree < dd:
            raise ValueError("not an exact divisor")
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        out = [0] * (self.degree - dd + 1)
        for k in range(self.degree - dd, -1, -1):
            step, residue = divmod(rem[k + dd], lead)
            if residue:
                raise ValueError("not an exact divisor")
            out[k] = step
            if step:
                for j, dc in enumerate(divisor.coeffs):
                    rem[k + j] -= step * dc
        if any(rem[:dd]):
            raise ValueError("not an exact divisor")
        return IntPolynomial(tuple(out))

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, ascending degree, bit-exact."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> IntPolynomial:
        return cls(tuple(int(s) for s in data))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = "q" if k == 1 else f"q^{k}"
            else:
                body = f"{mag}q" if k == 1 else f"{mag}q^{k}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))


def _primitive_positive(p: IntPolynomial) -> IntPolynomial:
    """The primitive associate of p with positive leading coefficient."""
    if p.is_zero():
        return ZERO
    c = p.content()
    if p.leading_coefficient() < 0:
        c = -c
    return p._scale_div(c)


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    # remainder of lc(b)**k * a under division by b, with degree < degree of b;
    # works in place so monic divisors cost O(deg b) per step, not O(deg a)
    lead = b.coeffs[-1]
    bc = b.coeffs
    db = len(bc) - 1
    rem = list(a.coeffs)
    while len(rem) - 1 >= db:
        top = rem[-1]
        if top == 0:
            rem.pop()
            continue
        shift = len(rem) - 1 - db
        if lead != 1:
            for i in range(len(rem)):
                rem[i] *= lead
        for j, c in enumerate(bc):
            rem[shift + j] -= top * c
        rem.pop()  # leading entry cancelled exactly
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPolynomial(tuple(rem))


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor, primitive with positive leading coefficient.

    Uses the primitive-remainder Euclidean sequence: contents are stripped
    after every pseudo-division, which keeps coefficient growth in check
    without any rational intermediate values.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd undefined for two zero polynomials")
    a = _primitive_positive(f)
    b = _primitive_positive(g)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, _primitive_positive(_pseudo_rem(a, b))
    return a


@dataclass(frozen=True)
class RationalFunction:
    """A quotient num/den of integer polynomials in canonical reduced form.

    Canonical means: zero is 0/1, the polynomial gcd of num and den is
    constant, num and den share no integer factor, and den has a positive
    leading coefficient so any sign sits in the numerator.
    """

    num: IntPolynomial = ZERO
    den: IntPolynomial = ONE

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero():
            num, den = ZERO, ONE
        elif den != ONE:
            g = poly_gcd(num, den)
            if g != ONE:
                num = num.exact_div(g)
                den = den.exact_div(g)
            shared = _int_gcd(num.content(), den.content())
            if shared > 1:
                num = num._scale_div(shared)
                den = den._scale_div(shared)
            if den.leading_coefficient() < 0:
                num = -num
                den = -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def constant(cls, value: int) -> RationalFunction:
        return cls(IntPolynomial((value,)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other: RationalFunction) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def evaluate(self, point: complex) -> complex:
        """num(point)/den(point) in complex double precision.

        Raises PoleError when |den(point)| falls below a scale-aware cutoff
        of 1e-12 * (1 + max |den coefficient|).
        """
        z = complex(point)
        den_value = complex(self.den(z))
        num_value = complex(self.num(z))
        tol = 1e-12 * (1.0 + float(max(abs(c) for c in self.den.coeffs)))
        if abs(den_value) < tol:
            raise PoleError(num_value, den_value)
        return num_value / den_value

    def to_json(self) -> dict[str, list[str]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict[str, Sequence[str]]) -> RationalFunction:
        return cls(
            IntPolynomial.from_json(data["num"]), IntPolynomial.from_json(data["den"])
        )

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        num, den = self.num, self.den
        trailing = next(c for c in den.coeffs if c != 0)
        if trailing < 0:
            # display-only sign flip so common values read like (1+q^2)/(1-q)
            num, den = -num, -den
        return f"({num})/({den})"


RF_ZERO = RationalFunction()
RF_ONE = RationalFunction(ONE)

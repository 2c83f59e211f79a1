"""Exact scalar, polynomial, and rational-function arithmetic.

Scalars are `fractions.Fraction`, polynomials are dense coefficient tuples
over Fraction (ascending degree, no trailing zeros), and rational functions
are stored reduced with a monic denominator.  Nothing in this module touches
floating point, so every identity checked downstream is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, str, Fraction]


def parse_rational(s: str) -> Fraction:
    """Parse "p" or "p/q" into a reduced Fraction."""
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    """Canonical "p/q" form, or just "p" when the denominator is 1."""
    return str(Fraction(q))


class Poly:
    """Dense univariate polynomial over the rationals.

    Coefficients are stored ascending by degree with trailing zeros stripped;
    the zero polynomial is the empty tuple.  Instances are treated as
    immutable and are hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Poly":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((0,) * power + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            tuple(self.coeff(i) + other.coeff(i) for i in range(n))
        )

    __radd__ = __add__

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "Poly | Scalar") -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact division with remainder over the rationals."""
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        d, lead = other.degree, other.lc
        q = [Fraction(0)] * max(0, len(r) - d)
        while len(r) - 1 >= d and r:
            c = r[-1] / lead
            k = len(r) - 1 - d
            q[k] = c
            for i in range(d + 1):
                r[k + i] -= c * other.coeffs[i]
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate at a finite rational point (Horner)."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        return self * (1 / self.lc)

    def reverse(self, k: int | None = None) -> "Poly":
        """Coefficient reversal x^k * p(1/x); k defaults to deg p."""
        if k is None:
            k = max(self.degree, 0)
        if k < self.degree:
            raise ValueError("reversal order below the degree")
        out = [Fraction(0)] * (k + 1)
        for i, c in enumerate(self.coeffs):
            out[k - i] = c
        return Poly(out)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "Poly":
        return cls(tuple(parse_rational(s) for s in data))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for p in range(self.degree, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                xp = "x" if p == 1 else f"x^{p}"
                if mag == 1:
                    body = xp
                elif mag.denominator == 1:
                    body = f"{mag}{xp}"
                else:
                    body = f"({mag}){xp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _as_poly(p: "Poly | Scalar") -> Poly:
    if isinstance(p, Poly):
        return p
    return Poly.constant(p)


def _int_primitive(p: Poly) -> list[int]:
    # scale to integer coefficients and strip the content
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def _prem(u: list[int], v: list[int]) -> list[int]:
    # pseudo-remainder of ascending integer coefficient lists, v nonzero
    u = u[:]
    dv = len(v) - 1
    lv = v[-1]
    while u and len(u) - 1 >= dv:
        lu = u[-1]
        shift = len(u) - 1 - dv
        u = [lv * c for c in u]
        for i, c in enumerate(v):
            u[shift + i] -= lu * c
        while u and u[-1] == 0:
            u.pop()
    return u


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor, via a primitive remainder sequence."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    u, v = _int_primitive(a), _int_primitive(b)
    if len(u) < len(v):
        u, v = v, u
    while True:
        r = _prem(u, v)
        if not r:
            return Poly(v).monic()
        if len(r) == 1:
            return Poly.one()
        g = math.gcd(*r)
        u, v = v, [c // g for c in r]


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's squarefree decomposition.

    Returns monic squarefree factors with their multiplicities, ordered by
    strictly increasing multiplicity, such that p = lc(p) * prod(f**m).
    Factors of degree zero are omitted; a constant input decomposes into the
    empty product.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a0 = poly_gcd(p, dp)
    b = p // a0
    c = dp // a0
    d = c - b.derivative()
    out: list[tuple[Poly, int]] = []
    m = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, m))
        b = b // a
        c = d // a
        d = c - b.derivative()
        m += 1
    return out


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of the projective line over the rationals.

    Either a finite rational value or the point at infinity (finite=None).
    """

    finite: Fraction | None = None

    @classmethod
    def of(cls, v: Scalar) -> "ProjectivePoint":
        return cls(Fraction(v))

    @property
    def is_infinity(self) -> bool:
        return self.finite is None

    def __str__(self) -> str:
        return "inf" if self.finite is None else format_rational(self.finite)


INFINITY = ProjectivePoint(None)


class RatFunc:
    """Rational function num/den, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Scalar, den: Poly | Scalar = 1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = Poly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            scale = 1 / den.lc
            num = num * scale
            den = den * scale
        self.num: Poly = num
        self.den: Poly = den

    @property
    def degree(self) -> int:
        """Degree as a map of the projective line."""
        return max(self.num.degree, self.den.degree)

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num, self.den))

    def __add__(self, other: "RatFunc | Poly | Scalar") -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc | Poly | Scalar") -> "RatFunc":
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other: "RatFunc | Poly | Scalar") -> "RatFunc":
        return _as_ratfunc(other) + (-self)

    def __mul__(self, other: "RatFunc | Poly | Scalar") -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc | Poly | Scalar") -> "RatFunc":
        other = _as_ratfunc(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def evaluate(self, z: "ProjectivePoint | Scalar") -> ProjectivePoint:
        """Evaluate as a map of the projective line (poles go to infinity)."""
        if not isinstance(z, ProjectivePoint):
            z = ProjectivePoint.of(z)
        if z.is_infinity:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INFINITY
            if dn < dd:
                return ProjectivePoint.of(0)
            return ProjectivePoint.of(self.num.lc / self.den.lc)
        nv = self.num(z.finite)
        dv = self.den(z.finite)
        if dv == 0:
            # reduced, so num and den share no root
            assert nv != 0
            return INFINITY
        return ProjectivePoint.of(nv / dv)

    __call__ = evaluate

    def substitute_reciprocal(self) -> "RatFunc":
        """The composite f(1/x), reduced."""
        k = max(self.num.degree, self.den.degree, 0)
        return RatFunc(self.num.reverse(k), self.den.reverse(k))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))

    def __str__(self) -> str:
        if self.den == Poly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


def _as_ratfunc(f: "RatFunc | Poly | Scalar") -> RatFunc:
    if isinstance(f, RatFunc):
        return f
    return RatFunc(_as_poly(f))

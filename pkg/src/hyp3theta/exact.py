"""Exact arithmetic substrate: Gaussian rationals, roots of unity, and
cyclotomic integers.

Everything in this module is immutable and decidable: equality and zero
tests are exact (no tolerances).  Cyclotomic elements are stored over the
power basis 1, z, ..., z^(phi(M)-1) of Q(zeta_M) with reduction modulo the
M-th cyclotomic polynomial, so an element is zero iff its coordinate
vector is zero.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

#: Conductors above this are refused outright rather than silently degraded.
CONDUCTOR_CAP = 720


class ConductorError(ValueError):
    """Requested cyclotomic field is above the supported conductor cap."""


# ---------------------------------------------------------------------------
# Gaussian rationals


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i), held as an exact pair (re, im) of Fractions."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def __add__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gaussian(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gaussian(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * other.conjugate() * GaussianRational.of(Fraction(1, 1) / n)

    def __rtruediv__(self, other):
        return _as_gaussian(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __str__(self):
        return f"{self.re}+{self.im}i"


def _as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    raise TypeError(f"cannot coerce {x!r} to a Gaussian rational")


GAUSSIAN_ZERO = GaussianRational(Fraction(0), Fraction(0))
GAUSSIAN_ONE = GaussianRational(Fraction(1), Fraction(0))
GAUSSIAN_I = GaussianRational(Fraction(0), Fraction(1))


# ---------------------------------------------------------------------------
# Cyclotomic polynomials


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    # quotient of integer polynomials known to divide exactly (ascending coeffs)
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, ascending degree."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m > CONDUCTOR_CAP:
        raise ConductorError(f"conductor {m} exceeds cap {CONDUCTOR_CAP}")
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


# polynomial helpers over Fraction, ascending coefficients


def _pdeg(p):
    d = len(p) - 1
    while d >= 0 and p[d] == 0:
        d -= 1
    return d


def _pmul(a, b):
    out = [Fraction(0)] * (max(_pdeg(a), 0) + max(_pdeg(b), 0) + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _pdivmod(a, b):
    a = list(a)
    db = _pdeg(b)
    q = [Fraction(0)] * max(1, _pdeg(a) - db + 1)
    while _pdeg(a) >= db:
        da = _pdeg(a)
        c = a[da] / b[db]
        q[da - db] = c
        for j in range(db + 1):
            a[da - db + j] -= c * b[j]
    return q, a


def _reduce_mod_cyclotomic(poly, m):
    phi = [Fraction(x) for x in cyclotomic_polynomial(m)]
    d = len(phi) - 1
    poly = list(poly) + [Fraction(0)] * max(0, d - len(poly))
    for i in range(len(poly) - 1, d - 1, -1):
        c = poly[i]
        if c:
            for j in range(d + 1):
                poly[i - d + j] -= c * phi[j]
    return poly[:d]


# ---------------------------------------------------------------------------
# Cyclotomic field elements


class CyclotomicElement:
    """Exact element of the M-th cyclotomic field Q(zeta_M).

    Coordinates are Fractions over the power basis; the representation is
    canonical, so ``is_zero`` needs no tolerance.
    """

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor: int, coords):
        coords = tuple(Fraction(x) for x in coords)
        if len(coords) != euler_phi(conductor):
            raise ValueError("coordinate vector has wrong length for conductor")
        self.conductor = conductor
        self.coords = coords

    # -- constructors

    @classmethod
    def zero(cls, conductor: int) -> "CyclotomicElement":
        return cls(conductor, [0] * euler_phi(conductor))

    @classmethod
    def from_rational(cls, conductor: int, q) -> "CyclotomicElement":
        c = [Fraction(0)] * euler_phi(conductor)
        c[0] = Fraction(q)
        return cls(conductor, c)

    @classmethod
    def root(cls, conductor: int, power: int = 1) -> "CyclotomicElement":
        """zeta_conductor ** power, reduced to the power basis."""
        k = power % conductor
        poly = [Fraction(0)] * (k + 1)
        poly[k] = Fraction(1)
        return cls(conductor, _reduce_mod_cyclotomic(poly, conductor))

    @classmethod
    def from_gaussian(cls, conductor: int, g: GaussianRational) -> "CyclotomicElement":
        if conductor % 4 != 0:
            raise ValueError("need 4 | conductor to embed Q(i)")
        i_elt = cls.root(conductor, conductor // 4)
        return cls.from_rational(conductor, g.re) + i_elt * cls.from_rational(conductor, g.im)

    # -- ring/field operations

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.conductor != self.conductor:
                raise ValueError("mixed conductors; lift explicitly first")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.from_rational(self.conductor, other)
        raise TypeError(f"cannot coerce {other!r} into Q(zeta_{self.conductor})")

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicElement(self.conductor, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return CyclotomicElement(self.conductor, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CyclotomicElement(self.conductor, [-a for a in self.coords])

    def __mul__(self, other):
        other = self._coerce(other)
        prod = _pmul(list(self.coords), list(other.coords))
        return CyclotomicElement(self.conductor, _reduce_mod_cyclotomic(prod, self.conductor))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        r0 = [Fraction(x) for x in cyclotomic_polynomial(self.conductor)]
        r1 = list(self.coords)
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while _pdeg(r1) > 0:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _psub(t0, _pmul(q, t1))
        c = r1[0]
        return CyclotomicElement(self.conductor, _reduce_mod_cyclotomic([x / c for x in t1], self.conductor))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CyclotomicElement.from_rational(self.conductor, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_rational(self) -> bool:
        return all(a == 0 for a in self.coords[1:])

    def __eq__(self, other):
        try:
            return (self - self._coerce(other)).is_zero()
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.conductor, self.coords))

    def to_complex(self) -> complex:
        w = 2j * cmath.pi / self.conductor
        return sum(complex(a) * cmath.exp(w * k) for k, a in enumerate(self.coords))

    def __repr__(self):
        return f"CyclotomicElement({self.conductor}, {[str(c) for c in self.coords]})"


def cyclotomic_is_zero(x: CyclotomicElement) -> bool:
    """Exact zero test; the power-basis representation is canonical."""
    return x.is_zero()


# ---------------------------------------------------------------------------
# Roots of unity


@dataclass(frozen=True)
class RootOfUnity:
    """The root e^(2 pi i * exponent), exponent a reduced Fraction in [0, 1)."""

    exponent: Fraction

    def __post_init__(self):
        e = Fraction(self.exponent) % 1
        object.__setattr__(self, "exponent", e)

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> "RootOfUnity":
        return cls(Fraction(numerator, denominator))

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent + other.exponent)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent - other.exponent)

    def __pow__(self, n: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent * n)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    def to_cyclotomic(self, conductor: int) -> CyclotomicElement:
        if conductor % self.order != 0:
            raise ValueError(f"order {self.order} does not divide conductor {conductor}")
        power = int(self.exponent * conductor)
        return CyclotomicElement.root(conductor, power)

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * complex(self.exponent))


def root_to_complex(z: RootOfUnity) -> complex:
    return z.to_complex()


def lcm_many(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out

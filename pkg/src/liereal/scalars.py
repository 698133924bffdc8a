"""Exact scalar arithmetic over the three base rings R, C, H.

The rings are realised as the rationals, the Gaussian rationals and the
rational quaternions, so every computation in the package is exact; no
floating point appears anywhere.  Rationals are gmpy2 ``mpq`` values
(exact, fast); the other two rings are small immutable classes built on
top of them.
"""

from __future__ import annotations

import enum
from typing import Union

from gmpy2 import mpq

#: The exact rational type used throughout the package.
Rational = mpq


def rat(x, den=None) -> Rational:
    """Coerce to an exact rational.  ``rat(3, 2)`` is 3/2."""
    if den is None:
        return mpq(x)
    return mpq(x, den)


_ZERO = mpq(0)
_ONE = mpq(1)


class GaussianRational:
    """An element of Q(i), stored as exact real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Rational:
        """The multiplicative norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, type(_ONE))):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, type(_ONE))):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__  # Q(i) is commutative

    def __truediv__(self, other):
        if isinstance(other, (int, type(_ONE))):
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_ONE))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


class RationalQuaternion:
    """A quaternion a + b*i + c*j + d*k with exact rational coefficients.

    Multiplication follows i^2 = j^2 = k^2 = -1 and ij = k.  The ring is
    noncommutative; use ``inverse`` and explicit multiplication order where
    the side matters (``x / y`` means ``x * y.inverse()``).
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = mpq(a)
        self.b = mpq(b)
        self.c = mpq(c)
        self.d = mpq(d)

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Rational:
        """a^2 + b^2 + c^2 + d^2; multiplicative, zero only at zero."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "RationalQuaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero quaternion")
        return RationalQuaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def complex_parts(self):
        """(z1, z2) with q = z1 + j*z2 in Q(i) coordinates."""
        return GaussianRational(self.a, self.b), GaussianRational(self.c, -self.d)

    def __add__(self, other):
        if isinstance(other, RationalQuaternion):
            return RationalQuaternion(
                self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
            )
        if isinstance(other, (int, type(_ONE))):
            return RationalQuaternion(self.a + other, self.b, self.c, self.d)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RationalQuaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, RationalQuaternion):
            a1, b1, c1, d1 = self.a, self.b, self.c, self.d
            a2, b2, c2, d2 = other.a, other.b, other.c, other.d
            return RationalQuaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        if isinstance(other, (int, type(_ONE))):
            return RationalQuaternion(
                self.a * other, self.b * other, self.c * other, self.d * other
            )
        return NotImplemented

    def __rmul__(self, other):
        # only central scalars reach here, so the order is immaterial
        if isinstance(other, (int, type(_ONE))):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, type(_ONE))):
            return RationalQuaternion(
                self.a / other, self.b / other, self.c / other, self.d / other
            )
        if isinstance(other, RationalQuaternion):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalQuaternion(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RationalQuaternion):
            return (
                self.a == other.a
                and self.b == other.b
                and self.c == other.c
                and self.d == other.d
            )
        if isinstance(other, (int, type(_ONE))):
            return self.a == other and not (self.b or self.c or self.d)
        return NotImplemented

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def __repr__(self):
        return f"RationalQuaternion({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"

    def __str__(self):
        terms = []
        for coeff, sym in ((self.a, ""), (self.b, "i"), (self.c, "j"), (self.d, "k")):
            if coeff:
                terms.append(f"{coeff}{sym}")
        return "+".join(terms).replace("+-", "-") if terms else "0"


QI = RationalQuaternion(0, 1, 0, 0)
QJ = RationalQuaternion(0, 0, 1, 0)
QK = RationalQuaternion(0, 0, 0, 1)
IMAG = GaussianRational(0, 1)


class Ring(enum.Enum):
    """Base-ring tag: R, C or H."""

    R = "R"
    C = "C"
    H = "H"


RawValue = Union[Rational, GaussianRational, RationalQuaternion]

_RING_TYPE = {
    Ring.R: type(_ONE),
    Ring.C: GaussianRational,
    Ring.H: RationalQuaternion,
}


def coerce(ring: Ring, x) -> RawValue:
    """Coerce ``x`` into the given ring; widening R -> C -> H is allowed."""
    if ring is Ring.R:
        if isinstance(x, (int, type(_ONE))):
            return mpq(x)
        raise TypeError(f"cannot coerce {x!r} into R")
    if ring is Ring.C:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, type(_ONE))):
            return GaussianRational(x)
        raise TypeError(f"cannot coerce {x!r} into C")
    if isinstance(x, RationalQuaternion):
        return x
    if isinstance(x, GaussianRational):
        return RationalQuaternion(x.re, x.im)
    if isinstance(x, (int, type(_ONE))):
        return RationalQuaternion(x)
    raise TypeError(f"cannot coerce {x!r} into H")


def ring_of(x: RawValue) -> Ring:
    if isinstance(x, RationalQuaternion):
        return Ring.H
    if isinstance(x, GaussianRational):
        return Ring.C
    return Ring.R


def conj_value(x: RawValue) -> RawValue:
    """The usual conjugation: identity on R, sigma_c on C and H."""
    if isinstance(x, (GaussianRational, RationalQuaternion)):
        return x.conjugate()
    return x


def real_part(x: RawValue) -> Rational:
    if isinstance(x, RationalQuaternion):
        return x.a
    if isinstance(x, GaussianRational):
        return x.re
    return x


class Scalar:
    """A ring-tagged exact number.

    Arithmetic between scalars of different rings is rejected; use
    :meth:`promote` for the coherent embeddings R -> C -> H.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", coerce(ring, value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def of(value, ring: Ring | None = None) -> "Scalar":
        if ring is None:
            if isinstance(value, RationalQuaternion):
                ring = Ring.H
            elif isinstance(value, GaussianRational):
                ring = Ring.C
            else:
                ring = Ring.R
        return Scalar(ring, value)

    def promote(self, ring: Ring) -> "Scalar":
        order = {Ring.R: 0, Ring.C: 1, Ring.H: 2}
        if order[ring] < order[self.ring]:
            raise ValueError(f"cannot narrow {self.ring} scalar to {ring}")
        return Scalar(ring, self.value)

    def conjugate(self) -> "Scalar":
        return Scalar(self.ring, conj_value(self.value))

    def _check(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            raise TypeError("Scalar arithmetic needs Scalar operands")
        if other.ring is not self.ring:
            raise ValueError(
                f"mixed-ring arithmetic rejected: {self.ring} vs {other.ring}"
            )

    def __add__(self, other):
        self._check(other)
        return Scalar(self.ring, self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.ring, self.value - other.value)

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.ring, self.value * other.value)

    def __truediv__(self, other):
        self._check(other)
        return Scalar(self.ring, self.value / other.value)

    def __neg__(self):
        return Scalar(self.ring, -self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring is other.ring and self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"Scalar({self.ring}, {self.value})"

    def __str__(self):
        return str(self.value)


def conjugate(s: Scalar) -> Scalar:
    """Ring conjugation on a tagged scalar (involutive anti-automorphism)."""
    return s.conjugate()


def quat_to_complex_block(q: RationalQuaternion):
    """Embed a quaternion as a 2x2 matrix over Q(i).

    Writing q = z1 + j*z2, the image is [[z1, -conj(z2)], [z2, conj(z1)]].
    The map is an injective ring homomorphism; its determinant is the
    quaternion norm, which underlies the reduced norm of quaternionic
    matrices.
    """
    z1, z2 = q.complex_parts()
    return (
        (z1, -z2.conjugate()),
        (z2, z1.conjugate()),
    )

"""Exact Gaussian rationals a/b + (c/d)i.

Values are stored as a triple of integers ``(p, q, d)`` meaning
``(p + q*i) / d`` with ``d > 0`` and ``gcd(p, q, d) == 1``.  The public
``real``/``imag`` accessors return reduced :class:`fractions.Fraction`s.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussianRational", "ZERO", "ONE", "I", "gr"]


def _norm3(p: int, q: int, d: int) -> tuple[int, int, int]:
    if d == 0:
        raise ZeroDivisionError("GaussianRational with zero denominator")
    if d < 0:
        p, q, d = -p, -q, -d
    g = gcd(gcd(p, q), d)
    if g != 1:
        p //= g
        q //= g
        d //= g
    return p, q, d


class GaussianRational:
    """An element of Q(i), immutable and hashable."""

    __slots__ = ("_p", "_q", "_d")

    def __init__(self, real=0, imag=0):
        if isinstance(real, GaussianRational) and imag == 0:
            self._p, self._q, self._d = real._p, real._q, real._d
            return
        re_ = Fraction(real)
        im_ = Fraction(imag)
        d = re_.denominator * im_.denominator // gcd(re_.denominator, im_.denominator)
        p = re_.numerator * (d // re_.denominator)
        q = im_.numerator * (d // im_.denominator)
        self._p, self._q, self._d = _norm3(p, q, d)

    @classmethod
    def _raw(cls, p: int, q: int, d: int) -> GaussianRational:
        obj = object.__new__(cls)
        obj._p, obj._q, obj._d = _norm3(p, q, d)
        return obj

    @classmethod
    def _exact(cls, p: int, q: int, d: int) -> GaussianRational:
        # caller guarantees the triple is already normalized
        obj = object.__new__(cls)
        obj._p, obj._q, obj._d = p, q, d
        return obj

    # -- accessors -------------------------------------------------------
    @property
    def real(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._q, self._d)

    @property
    def triple(self) -> tuple[int, int, int]:
        return self._p, self._q, self._d

    def is_real(self) -> bool:
        return self._q == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational._exact(self._p, -self._q, self._d)

    def norm(self) -> Fraction:
        """|z|^2 as a rational."""
        return Fraction(self._p * self._p + self._q * self._q, self._d * self._d)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.real, self.imag)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return GaussianRational._exact(other, 0, 1)
        if isinstance(other, Rational):
            return GaussianRational._exact(other.numerator, 0, other.denominator)
        if isinstance(other, complex):
            return GaussianRational(Fraction(other.real), Fraction(other.imag))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._p + o._p, self._q + o._q, self._d)
        return GaussianRational._raw(
            self._p * o._d + o._p * self._d, self._q * o._d + o._q * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._exact(-self._p, -self._q, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p1, q1, d1 = self._p, self._q, self._d
        p2, q2, d2 = o._p, o._q, o._d
        if q1 == 0 and q2 == 0:
            return GaussianRational._raw(p1 * p2, 0, d1 * d2)
        return GaussianRational._raw(p1 * p2 - q1 * q2, p1 * q2 + q1 * p2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        p, q, d = self._p, self._q, self._d
        n = p * p + q * q
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational._raw(d * p, -d * q, n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._p == o._p and self._q == o._q and self._d == o._d

    def __hash__(self):
        if self._q == 0:
            if self._d == 1:
                return hash(self._p)
            return hash(Fraction(self._p, self._d))
        return hash((self._p, self._q, self._d))

    def __bool__(self):
        return self._p != 0 or self._q != 0

    # -- text ------------------------------------------------------------
    def __repr__(self):
        return f"GaussianRational({self.real!s}, {self.imag!s})"

    def __str__(self):
        return self.to_str()

    def to_str(self) -> str:
        """Serialize as ``a/b+c/di`` with reduced terms and explicit signs."""
        re_, im_ = self.real, self.imag
        sign = "-" if im_ < 0 else "+"
        return (
            f"{re_.numerator}/{re_.denominator}"
            f"{sign}{abs(im_.numerator)}/{im_.denominator}i"
        )

    def pretty(self) -> str:
        """Short human form, e.g. ``-1/2``, ``3i``, ``1-2i``."""
        re_, im_ = self.real, self.imag
        if im_ == 0:
            return str(re_)
        if im_ == 1:
            ims = "i"
        elif im_ == -1:
            ims = "-i"
        else:
            ims = f"{im_}i"
        if re_ == 0:
            return ims
        if ims.startswith("-"):
            return f"{re_}{ims}"
        return f"{re_}+{ims}"

    _PATTERN = re.compile(r"^\s*([+-]?\d+)/(\d+)([+-])(\d+)/(\d+)i\s*$")

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Inverse of :meth:`to_str`.  Plain rationals like ``-3/4`` or ``2`` are accepted too."""
        m = cls._PATTERN.match(text)
        if m:
            a, b, sgn, c, d = m.groups()
            imag = Fraction(int(c), int(d))
            if sgn == "-":
                imag = -imag
            return cls(Fraction(int(a), int(b)), imag)
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a Gaussian rational: {text!r}") from exc


ZERO = GaussianRational._exact(0, 0, 1)
ONE = GaussianRational._exact(1, 0, 1)
I = GaussianRational._exact(0, 1, 1)


def gr(real=0, imag=0) -> GaussianRational:
    """Shorthand constructor."""
    return GaussianRational(real, imag)

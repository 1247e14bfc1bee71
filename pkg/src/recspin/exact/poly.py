"""Polynomials over Q(i), characteristic polynomials and Q(i)-root extraction."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from sympy import factorint

from .matrix import MatrixGR, as_scalar
from .._tracking import public_op
from .scalar import ONE, ZERO, GaussianRational

__all__ = ["PolyGR", "char_poly", "gaussian_roots", "poly_from_roots"]


@dataclass(frozen=True)
class PolyGR:
    """Coefficients lowest degree first; the zero polynomial has no coefficients."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(as_scalar(c) for c in self.coefficients)
        while coeffs and not coeffs[-1]:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> GaussianRational:
        return self.coefficients[-1] if self.coefficients else ZERO

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def at_matrix(self, M: MatrixGR) -> MatrixGR:
        acc = MatrixGR.zeros(M.rows)
        for c in reversed(self.coefficients):
            acc = acc.matmul(M) + MatrixGR.scalar(M.rows, c)
        return acc

    def __mul__(self, other: PolyGR) -> PolyGR:
        if self.is_zero() or other.is_zero():
            return PolyGR(())
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    out[i + j] = out[i + j] + a * b
        return PolyGR(tuple(out))

    def scale(self, c) -> PolyGR:
        c = as_scalar(c)
        return PolyGR(tuple(c * a for a in self.coefficients))

    def monic(self) -> PolyGR:
        if self.is_zero():
            raise ValueError("zero polynomial has no monic form")
        return self.scale(self.leading.inverse())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = c.pretty()
            if mono and c == ONE:
                terms.append(mono)
            elif mono and c == -ONE:
                terms.append("-" + mono)
            elif mono:
                if c.is_real() or not c.real:
                    terms.append(f"{cs}{mono}" if c.is_real() else f"({cs}){mono}")
                else:
                    terms.append(f"({cs}){mono}")
            else:
                terms.append(cs if c.is_real() else f"({cs})")
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def to_lists(self) -> list[str]:
        return [c.to_str() for c in self.coefficients]


def poly_from_roots(roots: Sequence, leading=ONE) -> PolyGR:
    p = PolyGR((as_scalar(leading),))
    for r in roots:
        p = p * PolyGR((-as_scalar(r), ONE))
    return p


@public_op("exact_core.char_poly")
def char_poly(M: MatrixGR) -> PolyGR:
    """det(x*Id - M) by Faddeev-LeVerrier."""
    if not M.is_square:
        raise ValueError(f"char_poly needs a square matrix, got {M.shape}")
    n = M.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = MatrixGR.zeros(n)
    for k in range(1, n + 1):
        Mk = M.matmul(Mk) + MatrixGR.scalar(n, coeffs[n - k + 1])
        coeffs[n - k] = -(M.matmul(Mk).trace()) / k
    return PolyGR(tuple(coeffs))


# ---------------------------------------------------------------------------
# Gaussian integers as (a, b) int pairs


def _gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gi_norm(x):
    return x[0] * x[0] + x[1] * x[1]


def _gi_divides(d, z) -> bool:
    # z / d = z * conj(d) / N(d)
    n = _gi_norm(d)
    a = z[0] * d[0] + z[1] * d[1]
    b = z[1] * d[0] - z[0] * d[1]
    return a % n == 0 and b % n == 0


def _gi_div(z, d):
    n = _gi_norm(d)
    a = z[0] * d[0] + z[1] * d[1]
    b = z[1] * d[0] - z[0] * d[1]
    return (a // n, b // n)


def _gi_round_div(z, d):
    n = _gi_norm(d)
    a = z[0] * d[0] + z[1] * d[1]
    b = z[1] * d[0] - z[0] * d[1]
    # nearest Gaussian integer to (a + bi)/n
    return ((2 * a + n) // (2 * n), (2 * b + n) // (2 * n))


def _gi_gcd(x, y):
    while y != (0, 0):
        q = _gi_round_div(x, y)
        qy = _gi_mul(q, y)
        x, y = y, (x[0] - qy[0], x[1] - qy[1])
    return x


def _split_prime(p: int):
    """A Gaussian prime of norm p for a rational prime p = 2 or p = 1 mod 4."""
    if p == 2:
        return (1, 1)
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    t = pow(c, (p - 1) // 4, p)
    return _gi_gcd((p, 0), (t, 1))


def _gaussian_prime_factors(z) -> list[tuple[tuple[int, int], int]]:
    """Gaussian prime factorization of a nonzero Gaussian integer (unit dropped)."""
    out = []
    for p, e in factorint(_gi_norm(z)).items():
        if p % 4 == 3:
            # inert prime: contributes p^(e/2)
            out.append(((p, 0), e // 2))
            continue
        pi = _split_prime(p)
        candidates = [pi] if p == 2 else [pi, (pi[0], -pi[1])]
        w = z
        for q in candidates:
            k = 0
            while _gi_divides(q, w):
                w = _gi_div(w, q)
                k += 1
            if k:
                out.append((q, k))
        z = w
    return out


_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _gi_divisors(z, max_norm: int):
    divs = [(1, 0)]
    for q, e in _gaussian_prime_factors(z):
        qn = _gi_norm(q)
        new = []
        for d in divs:
            cur = d
            new.append(cur)
            for _ in range(e):
                if _gi_norm(cur) * qn > max_norm:
                    break
                cur = _gi_mul(cur, q)
                new.append(cur)
        divs = new
    out = set()
    for d in divs:
        for u in _UNITS:
            out.add(_gi_mul(d, u))
    return sorted(out)


def _horner_gi(coeffs, x):
    acc = (0, 0)
    for c in reversed(coeffs):
        acc = _gi_mul(acc, x)
        acc = (acc[0] + c[0], acc[1] + c[1])
    return acc


def _deflate_gi(coeffs, r):
    """Divide monic integer poly by (y - r); assumes r is a root."""
    n = len(coeffs) - 1
    out = [(0, 0)] * n
    acc = (0, 0)
    for k in range(n, 0, -1):
        m = _gi_mul(acc, r)
        acc = (coeffs[k][0] + m[0], coeffs[k][1] + m[1])
        out[k - 1] = acc
    return out


@public_op("exact_core.gaussian_roots")
def gaussian_roots(p: PolyGR) -> tuple[list[GaussianRational], PolyGR]:
    """All roots of ``p`` lying in Q(i), with multiplicity, plus the root-free cofactor.

    ``p == p.leading * prod(x - r) * residual`` with ``residual`` monic.
    Roots are returned sorted by (real, imag).
    """
    if p.is_zero():
        raise ValueError("gaussian_roots of the zero polynomial")
    q = p.monic()
    coeffs = list(q.coefficients)
    roots: list[GaussianRational] = []
    while len(coeffs) > 1 and not coeffs[0]:
        roots.append(ZERO)
        coeffs = coeffs[1:]
    n = len(coeffs) - 1
    if n == 0:
        return roots, PolyGR((ONE,))
    # y = L x turns the monic Q(i) poly into a monic Z[i] poly
    L = 1
    for c in coeffs:
        d = c.triple[2]
        L = L * d // _gcd(L, d)
    ints = []
    for k, c in enumerate(coeffs):
        a, b, d = c.triple
        f = L ** (n - k) // d
        ints.append((a * f, b * f))
    found = []
    while len(ints) > 1:
        c0 = ints[0]
        if c0 == (0, 0):
            found.append((0, 0))
            ints = ints[1:]
            continue
        bound = 1 + max(isqrt(_gi_norm(c)) + 1 for c in ints[:-1])
        hit = None
        for r in _gi_divisors(c0, bound * bound):
            if _horner_gi(ints, r) == (0, 0):
                hit = r
                break
        if hit is None:
            break
        found.append(hit)
        ints = _deflate_gi(ints, hit)
    roots.extend(GaussianRational._raw(a, b, L) for a, b in found)
    roots.sort(key=lambda z: z.sort_key())
    m = len(ints) - 1
    residual = tuple(GaussianRational._raw(a, b, L ** (m - k)) for k, (a, b) in enumerate(ints))
    return roots, PolyGR(residual)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a

"""Exact arithmetic in K = Q(zeta)(a), zeta a primitive cube root of unity
and a a real cube root of a rational tau.

Elements are stored by their coordinates in the Q-basis
(1, a, a^2, zeta, zeta*a, zeta*a^2), which is linearly independent whenever
tau is not a rational cube.  Reduction rules: zeta^2 = -1 - zeta, a^3 = tau.

Internally an element is split as p(a) + zeta*q(a) with p, q of degree < 3;
all arithmetic reduces to polynomial arithmetic mod a^3 - tau.
"""

from __future__ import annotations

import cmath
import math

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational


def rational(x) -> Rational:
    """Coerce an int, string "p/q", or Rational to Rational."""
    if isinstance(x, str):
        return Rational(x)
    return Rational(x)


def rational_str(x) -> str:
    """Encode a rational as "p/q" (denominator always present)."""
    return f"{x.numerator}/{x.denominator}"


_ZERO = Rational(0)
_ONE = Rational(1)


class TauMismatchError(ValueError):
    """Raised when elements from different tau-configurations are mixed."""


class FieldElem:
    """An element of K = Q(zeta)[a]/(a^3 - tau).

    coeffs is a 6-tuple of Rationals in basis order
    (1, a, a^2, zeta, zeta*a, zeta*a^2).  Equality and hashing are
    structural; two elements are equal iff all six coordinates agree and
    they live over the same tau.
    """

    __slots__ = ("coeffs", "tau")

    def __init__(self, coeffs, tau):
        self.coeffs = tuple(rational(c) for c in coeffs)
        if len(self.coeffs) != 6:
            raise ValueError("FieldElem needs exactly 6 coefficients")
        self.tau = rational(tau)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(r, tau) -> "FieldElem":
        return FieldElem((rational(r), 0, 0, 0, 0, 0), tau)

    @staticmethod
    def zero(tau) -> "FieldElem":
        return FieldElem((0, 0, 0, 0, 0, 0), tau)

    @staticmethod
    def one(tau) -> "FieldElem":
        return FieldElem((1, 0, 0, 0, 0, 0), tau)

    @staticmethod
    def zeta(tau) -> "FieldElem":
        return FieldElem((0, 0, 0, 1, 0, 0), tau)

    @staticmethod
    def gen_a(tau) -> "FieldElem":
        """The real cube root a with a^3 = tau."""
        return FieldElem((0, 1, 0, 0, 0, 0), tau)

    # -- structure ---------------------------------------------------------

    def _check(self, other: "FieldElem"):
        if self.tau != other.tau:
            raise TauMismatchError(
                f"cannot mix tau={self.tau} with tau={other.tau}")

    def is_zero(self) -> bool:
        return all(c == _ZERO for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == _ZERO for c in self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.tau == other.tau and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.tau))

    def __bool__(self):
        return not self.is_zero()

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        return FieldElem(tuple(a[i] + b[i] for i in range(6)), self.tau)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        return FieldElem(tuple(a[i] - b[i] for i in range(6)), self.tau)

    def __neg__(self) -> "FieldElem":
        return FieldElem(tuple(-c for c in self.coeffs), self.tau)

    def __mul__(self, other) -> "FieldElem":
        if isinstance(other, (int, type(_ONE))):
            r = rational(other)
            return FieldElem(tuple(c * r for c in self.coeffs), self.tau)
        if not isinstance(other, FieldElem):
            return NotImplemented
        self._check(other)
        p0, p1, p2, q0, q1, q2 = self.coeffs
        r0, r1, r2, s0, s1, s2 = other.coeffs
        tau = self.tau

        # (p + zeta q)(r + zeta s) = (pr - qs) + zeta (ps + qr - qs),
        # using zeta^2 = -1 - zeta; products of a-polynomials mod a^3 = tau.
        def polymul(x0, x1, x2, y0, y1, y2):
            return (
                x0 * y0 + tau * (x1 * y2 + x2 * y1),
                x0 * y1 + x1 * y0 + tau * (x2 * y2),
                x0 * y2 + x1 * y1 + x2 * y0,
            )

        pr = polymul(p0, p1, p2, r0, r1, r2)
        qs = polymul(q0, q1, q2, s0, s1, s2)
        ps = polymul(p0, p1, p2, s0, s1, s2)
        qr = polymul(q0, q1, q2, r0, r1, r2)
        return FieldElem(
            (pr[0] - qs[0], pr[1] - qs[1], pr[2] - qs[2],
             ps[0] + qr[0] - qs[0], ps[1] + qr[1] - qs[1],
             ps[2] + qr[2] - qs[2]),
            tau,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FieldElem":
        if k < 0:
            return self.inv() ** (-k)
        out = FieldElem.one(self.tau)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self) -> "FieldElem":
        """Multiplicative inverse, by solving the 6x6 rational linear system
        given by the multiplication-by-self matrix in the basis."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return FieldElem.from_rational(_ONE / self.coeffs[0], self.tau)
        basis = [FieldElem(tuple(int(i == j) for j in range(6)), self.tau)
                 for i in range(6)]
        cols = [(self * b).coeffs for b in basis]
        # Solve M y = e0 where column j of M is self * basis_j.
        mat = [[cols[j][i] for j in range(6)] for i in range(6)]
        rhs = [_ONE, _ZERO, _ZERO, _ZERO, _ZERO, _ZERO]
        sol = solve_rational(mat, rhs)
        return FieldElem(tuple(sol), self.tau)

    def __truediv__(self, other) -> "FieldElem":
        if isinstance(other, (int, type(_ONE))):
            r = rational(other)
            return FieldElem(tuple(c / r for c in self.coeffs), self.tau)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self * other.inv()

    # -- Galois / embedding ------------------------------------------------

    def conjugate(self) -> "FieldElem":
        """Complex conjugation: fixes a (real), sends zeta to zeta^2 = -1-zeta."""
        p0, p1, p2, q0, q1, q2 = self.coeffs
        return FieldElem((p0 - q0, p1 - q1, p2 - q2, -q0, -q1, -q2), self.tau)

    def embed_complex(self) -> complex:
        """Numeric embedding with zeta = exp(2*pi*i/3) and a the real cube
        root of tau."""
        t = float(self.tau)
        av = math.copysign(abs(t) ** (1.0 / 3.0), t)
        zv = cmath.exp(2j * cmath.pi / 3)
        p0, p1, p2, q0, q1, q2 = (float(c) for c in self.coeffs)
        return (p0 + p1 * av + p2 * av * av
                + zv * (q0 + q1 * av + q2 * av * av))

    # -- display / serialization -------------------------------------------

    def __repr__(self):
        names = ("1", "a", "a^2", "z", "z*a", "z*a^2")
        parts = [f"{c}*{n}" for c, n in zip(self.coeffs, names) if c != _ZERO]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return [rational_str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data, tau) -> "FieldElem":
        return FieldElem(tuple(rational(s) for s in data), tau)


def solve_rational(mat, rhs):
    """Solve a square rational linear system by Gaussian elimination.

    mat and rhs are not modified.  Raises ZeroDivisionError on a singular
    matrix.
    """
    n = len(mat)
    m = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular rational system")
        m[col], m[piv] = m[piv], m[col]
        inv = _ONE / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]

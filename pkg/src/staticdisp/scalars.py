"""Exact scalars: rationals, elements of a real quadratic field, tolerance policy.

Rationals are plain :class:`fractions.Fraction`.  :class:`QuadNum` is
``a + b*sqrt(d)`` with rational ``a, b`` and a square-free radicand ``d``;
it mixes freely with ``int`` and ``Fraction``.  Complex floating values are
ordinary Python ``complex`` numbers compared through :func:`close`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

DEFAULT_TOLERANCE = 1e-10
_tolerance = DEFAULT_TOLERANCE


class IncompatibleFieldError(ValueError):
    """Arithmetic between quadratic numbers with different radicands."""


def get_tolerance() -> float:
    return _tolerance


def set_tolerance(tol: float) -> None:
    """Set the global comparison tolerance (meant to be called once at startup)."""
    global _tolerance
    tol = float(tol)
    if not tol > 0 or math.isinf(tol):
        raise ValueError(f"tolerance must be a positive finite number, got {tol}")
    _tolerance = tol


def close(x: complex, y: complex, tol: float | None = None) -> bool:
    return abs(complex(x) - complex(y)) <= (_tolerance if tol is None else tol)


def rat_normalize(p: int, q: int) -> Fraction:
    """Canonical reduced rational p/q with positive denominator."""
    if q == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(p, q)


def squarefree_part(n: int) -> tuple[int, int]:
    """Split a positive integer as ``s**2 * d`` with ``d`` square-free; returns (s, d)."""
    if n <= 0:
        raise ValueError("squarefree_part expects a positive integer")
    s, d = 1, 1
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        s *= f ** (e // 2)
        if e % 2:
            d *= f
        f += 1 if f == 2 else 2
    return s, d * n


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


Scalar = Union[int, Fraction, "QuadNum"]


class QuadNum:
    """Element ``a + b*sqrt(d)`` of the real quadratic field Q(sqrt d)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 5) -> None:
        d = int(d)
        if d < 2 or squarefree_part(d)[0] != 1:
            raise ValueError(f"radicand must be a square-free integer >= 2, got {d}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @classmethod
    def sqrt(cls, d: int) -> QuadNum:
        return cls(0, 1, d)

    def _coerce(self, other) -> QuadNum | None:
        if isinstance(other, QuadNum):
            if other.d != self.d:
                if other.b == 0:
                    return QuadNum(other.a, 0, self.d)
                if self.b == 0:
                    return other
                raise IncompatibleFieldError(
                    f"cannot combine Q(sqrt {self.d}) with Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, _RationalABC)):
            return QuadNum(other, 0, self.d)
        return None

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conj(self) -> QuadNum:
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.d != self.d:
            return o + self
        return QuadNum(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d)

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
        if o.d != self.d:
            return o * self
        return QuadNum(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        c = self.conj()
        return QuadNum(c.a / n, c.b / n, self.d)

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

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadNum(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(d)."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa if sa else sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d*b^2
        diff = self.a * self.a - self.d * self.b * self.b
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __eq__(self, other):
        if isinstance(other, QuadNum):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, _RationalABC)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __complex__(self):
        return complex(float(self))

    def __repr__(self):
        return f"QuadNum({self.a!s}, {self.b!s}, d={self.d})"

    def __str__(self):
        return format_exact(self)


def quad_mul(x: QuadNum, y: QuadNum) -> QuadNum:
    if x.d != y.d:
        raise IncompatibleFieldError(f"radicands differ: {x.d} vs {y.d}")
    return x * y


def quad_to_complex(x: Scalar) -> complex:
    """Double-precision value of an exact scalar, as a complex with zero imaginary part."""
    if isinstance(x, QuadNum):
        # a + b*sqrt(d) loses accuracy when a and b*sqrt(d) nearly cancel;
        # use the conjugate form in that case.
        a, b = float(x.a), float(x.b) * math.sqrt(x.d)
        if a * b < 0 and x.norm() != 0:
            return complex(float(x.norm()) / (a - b))
        return complex(a + b)
    return complex(Fraction(x))


def quad_sqrt(x: Scalar, d: int | None = None) -> QuadNum | Fraction | None:
    """Exact square root of a non-negative element of Q or Q(sqrt d), or None.

    For a rational ``x`` the root is searched in Q first, then in Q(sqrt d)
    as ``q*sqrt(d)`` when a radicand is given.
    """
    if not isinstance(x, QuadNum):
        x = Fraction(x)
        r = rational_sqrt(x)
        if r is not None:
            return r
        if d is None or x < 0:
            return None
        q = rational_sqrt(x / d)
        return QuadNum(0, q, d) if q is not None else None
    if x.sign() < 0:
        return None
    if x.b == 0:
        return quad_sqrt(x.a, x.d)
    # (p + q sqrt d)^2 = a + b sqrt d  ->  p^2 = (a +- sqrt(norm))/2, q = b/(2p)
    s = rational_sqrt(x.norm())
    if s is None:
        return None
    for p2 in ((x.a + s) / 2, (x.a - s) / 2):
        p = rational_sqrt(p2)
        if p:
            q = x.b / (2 * p)
            root = QuadNum(p, q, x.d)
            if root * root == x:
                return root if root.sign() >= 0 else -root
    return None


def as_exact(x) -> Scalar:
    """Collapse rational QuadNums to Fraction; leave other exact values alone."""
    if isinstance(x, QuadNum) and x.b == 0:
        return x.a
    if isinstance(x, int):
        return Fraction(x)
    return x


def parse_exact(text: str) -> Fraction:
    """Parse ``p/q``, an integer or a terminating decimal into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_exact(x) -> str:
    """Render an exact scalar: ``p/q`` for rationals, ``a+b*sqrt(d)`` otherwise."""
    if isinstance(x, QuadNum):
        if x.b == 0:
            return format_exact(x.a)
        root = f"sqrt({x.d})"
        bpart = root if x.b == 1 else ("-" + root if x.b == -1 else f"{format_exact(x.b)}*{root}")
        if x.a == 0:
            return bpart
        if bpart.startswith("-"):
            return f"{format_exact(x.a)}{bpart}"
        return f"{format_exact(x.a)}+{bpart}"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_decimal(x) -> str:
    """17 significant digits, the CSV rendering of exact values."""
    if x is None:
        return "inf"
    v = float(x) if not isinstance(x, complex) else x.real
    return f"{v:.17g}"

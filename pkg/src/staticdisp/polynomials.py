"""Exact polynomial algebra over the rationals.

``UPoly``
    dense univariate polynomial (coefficients low to high), with division,
    gcd and rational roots.
``RatFunc``
    reduced quotient of two ``UPoly`` in one formal variable (the sheet index).
``Poly``
    sparse multivariate polynomial with named variables.  Parameters such as
    ``c0, c1`` are just further variables; homogeneity is always checked
    relative to a chosen subset of variables.

Serialization is a plain sum of terms ``coeff*x0^a*x1^b`` with exact
rational coefficients ``p/q``.
"""

from __future__ import annotations

import ast
import math
import re
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Mapping, Sequence


class PolynomialError(ValueError):
    pass


# ---------------------------------------------------------------------------
# univariate

class UPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> UPoly:
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @classmethod
    def x(cls) -> UPoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lead(self) -> Fraction:
        return self.c[-1] if self.c else Fraction(0)

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def _lift(self, other) -> UPoly:
        return other if isinstance(other, UPoly) else UPoly([other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.c), len(o.c))
        a = self.c + (Fraction(0),) * (n - len(self.c))
        b = o.c + (Fraction(0),) * (n - len(o.c))
        return UPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-x for x in self.c)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.c or not o.c:
            return UPoly()
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o.c):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return reduce(lambda acc, _: acc * self, range(n), UPoly([1]))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly([other])
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __call__(self, x):
        acc = Fraction(0) * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for coeff in reversed(self.c):
            acc = acc * x + coeff
        return acc

    def divmod(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [Fraction(0)] * max(len(rem) - len(other.c) + 1, 0)
        lead = other.lead
        for k in range(len(q) - 1, -1, -1):
            f = rem[k + len(other.c) - 1] / lead
            q[k] = f
            if f:
                for j, y in enumerate(other.c):
                    rem[k + j] -= f * y
        return UPoly(q), UPoly(rem[: len(other.c) - 1])

    def __floordiv__(self, other):
        return self.divmod(self._lift(other))[0]

    def __mod__(self, other):
        return self.divmod(self._lift(other))[1]

    def monic(self) -> UPoly:
        return self * (1 / self.lead) if self.c else self

    def derivative(self) -> UPoly:
        return UPoly(i * x for i, x in enumerate(self.c) if i)

    def compose(self, inner: UPoly) -> UPoly:
        acc = UPoly()
        for coeff in reversed(self.c):
            acc = acc * inner + coeff
        return acc

    def integer_coefficients(self) -> list[int]:
        den = reduce(math.lcm, (x.denominator for x in self.c), 1)
        ints = [int(x * den) for x in self.c]
        g = reduce(math.gcd, ints, 0) or 1
        return [i // g for i in ints]

    def rational_roots(self) -> list[Fraction]:
        """Distinct rational roots, ascending."""
        if self.is_zero():
            raise PolynomialError("the zero polynomial has every number as a root")
        roots = set()
        p = self
        while p.c and p.c[0] == 0:
            roots.add(Fraction(0))
            p = UPoly(p.c[1:])
        if p.degree < 1:
            return sorted(roots)
        ints = p.integer_coefficients()
        a0, an = abs(ints[0]), abs(ints[-1])
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and p(cand) == 0:
                        roots.add(cand)
        return sorted(roots)

    def __repr__(self):
        return f"UPoly({[str(x) for x in self.c]})"

    def format(self, var: str = "n") -> str:
        terms = {(i,): x for i, x in enumerate(self.c)}
        return Poly((var,), terms).format()


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [0]
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RatFunc:
    """Exact rational function num/den in one formal variable, kept in lowest terms
    with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None) -> None:
        num = num if isinstance(num, UPoly) else UPoly([num])
        den = UPoly([1]) if den is None else (den if isinstance(den, UPoly) else UPoly([den]))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = upoly_gcd(num, den) if not num.is_zero() else den
        num, den = num // g, den // g
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    @classmethod
    def var(cls) -> RatFunc:
        return cls(UPoly.x())

    def _lift(self, other) -> RatFunc:
        return other if isinstance(other, RatFunc) else RatFunc(other)

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(1) / (self ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, UPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def compose_affine(self, a, b) -> RatFunc:
        """self(a*n + b)."""
        inner = UPoly([b, a])
        return RatFunc(self.num.compose(inner), self.den.compose(inner))

    def format(self, var: str = "n") -> str:
        num = self.num.format(var)
        if self.den == UPoly([1]):
            return num
        return f"({num})/({self.den.format(var)})"

    def __repr__(self):
        return f"RatFunc({self.format()})"


# ---------------------------------------------------------------------------
# multivariate

def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


class Poly:
    """Sparse polynomial with rational coefficients over named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(variables)
        t = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.vars):
                raise PolynomialError("exponent length does not match variables")
            c = Fraction(c)
            if c:
                t[tuple(e)] = t.get(tuple(e), Fraction(0)) + c
                if not t[tuple(e)]:
                    del t[tuple(e)]
        self.terms = t

    # construction --------------------------------------------------------
    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> Poly:
        variables = tuple(variables) if variables else (name,)
        e = tuple(int(v == name) for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def const(cls, c, variables: Sequence[str] = ()) -> Poly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def linear(cls, coeffs: Sequence, variables: Sequence[str]) -> Poly:
        terms = {}
        for i, c in enumerate(coeffs):
            terms[tuple(int(j == i) for j in range(len(variables)))] = c
        return cls(variables, terms)

    @classmethod
    def variables(cls, *names: str) -> tuple[Poly, ...]:
        return tuple(cls.var(n, names) for n in names)

    # variable bookkeeping ------------------------------------------------
    def with_vars(self, variables: Sequence[str]) -> Poly:
        variables = tuple(variables)
        missing = [v for i, v in enumerate(self.vars)
                   if v not in variables and any(e[i] for e in self.terms)]
        if missing:
            raise PolynomialError(f"variables {missing} still occur")
        idx = [self.vars.index(v) if v in self.vars else None for v in variables]
        terms = {tuple(e[i] if i is not None else 0 for i in idx): c for e, c in self.terms.items()}
        return Poly(variables, terms)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def _unify(self, other: Poly) -> tuple[Poly, Poly]:
        if self.vars == other.vars:
            return self, other
        allv = list(self.vars) + [v for v in other.vars if v not in self.vars]
        return self.with_vars(allv), other.with_vars(allv)

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(other, self.vars)

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        a, b = self._unify(self._lift(other))
        t = dict(a.terms)
        for e, c in b.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return Poly(a.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._unify(other)
        t: dict[tuple, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return Poly(a.vars, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self.exact_div(other)

    def __pow__(self, n: int):
        if n < 0:
            raise PolynomialError("negative power of a polynomial")
        result = Poly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.vars)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._unify(other)
        return a.terms == b.terms

    def __hash__(self):
        used = self.used_vars()
        return hash(frozenset(self.with_vars(used).terms.items()) | {used})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # structure -----------------------------------------------------------
    def _idx(self, names: Iterable[str] | None) -> list[int]:
        if names is None:
            return list(range(len(self.vars)))
        return [self.vars.index(v) for v in names if v in self.vars]

    def degree(self, var: str) -> int:
        if self.is_zero():
            return -1
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def total_degree(self, names: Iterable[str] | None = None) -> int:
        if self.is_zero():
            return -1
        idx = self._idx(names)
        return max(sum(e[i] for i in idx) for e in self.terms)

    def is_homogeneous(self, names: Iterable[str] | None = None) -> bool:
        idx = self._idx(names)
        return len({sum(e[i] for i in idx) for e in self.terms}) <= 1

    def coefficients(self, names: Sequence[str]) -> dict[tuple, Poly]:
        """Group terms by the exponents of ``names``; values are polynomials in the rest."""
        idx = [self.vars.index(v) if v in self.vars else None for v in names]
        rest = [v for v in self.vars if v not in names]
        ridx = [self.vars.index(v) for v in rest]
        out: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] if i is not None else 0 for i in idx)
            out.setdefault(key, {})[tuple(e[i] for i in ridx)] = c
        return {k: Poly(rest, t) for k, t in out.items()}

    def coeff_list(self, var: str) -> list[Poly]:
        """Coefficients of ``var^0 .. var^deg`` as polynomials in the other variables."""
        groups = self.coefficients([var])
        deg = max((k[0] for k in groups), default=-1)
        rest = [v for v in self.vars if v != var]
        return [groups.get((k,), Poly(rest)) for k in range(deg + 1)]

    def constant_value(self) -> Fraction:
        if any(any(e) for e in self.terms):
            raise PolynomialError(f"not a constant: {self}")
        return next(iter(self.terms.values()), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        return Fraction(reduce(math.gcd, nums), reduce(math.lcm, dens))

    def primitive(self, positive_lead: bool = True) -> Poly:
        if self.is_zero():
            return self
        p = self * (1 / self.content())
        if positive_lead and p.leading()[1] < 0:
            p = -p
        return p

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading(self, order: str = "grlex") -> tuple[tuple, Fraction]:
        if self.is_zero():
            raise PolynomialError("zero polynomial has no leading term")
        if order == "lex":
            e = max(self.terms)
        else:
            e = max(self.terms, key=lambda x: (sum(x), x))
        return e, self.terms[e]

    # calculus / substitution --------------------------------------------
    def diff(self, var: str) -> Poly:
        if var not in self.vars:
            return Poly(self.vars)
        i = self.vars.index(var)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        return Poly(self.vars, t)

    def subs(self, mapping: Mapping[str, object]) -> Poly:
        """Substitute polynomials (or numbers) for variables; exact composition."""
        keep = [v for v in self.vars if v not in mapping]
        images = {}
        for v, img in mapping.items():
            images[v] = img if isinstance(img, Poly) else Poly.const(img, keep)
        powers: dict[tuple[str, int], Poly] = {}

        def pw(v: str, k: int) -> Poly:
            if (v, k) not in powers:
                powers[(v, k)] = images[v] ** k
            return powers[(v, k)]

        kidx = [self.vars.index(v) for v in keep]
        result = Poly(keep)
        for e, c in self.terms.items():
            term = Poly(keep, {tuple(e[i] for i in kidx): c})
            for i, v in enumerate(self.vars):
                if v in images and e[i]:
                    term = term * pw(v, e[i])
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at field elements (Fraction, QuadNum, RatFunc, complex ...)."""
        total = None
        for e, c in self.terms.items():
            t = c
            for i, v in enumerate(self.vars):
                if e[i]:
                    t = t * values[v] ** e[i]
            total = t if total is None else total + t
        return Fraction(0) if total is None else total

    def __call__(self, *args):
        return self.evaluate(dict(zip(self.vars, args)))

    def rename(self, mapping: Mapping[str, str]) -> Poly:
        return Poly(tuple(mapping.get(v, v) for v in self.vars), self.terms)

    # division ------------------------------------------------------------
    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Multivariate division by one polynomial in lex order.

        With a single divisor the remainder is zero exactly when the divisor
        divides ``self``, so this doubles as a divisibility test.
        """
        a, b = self._unify(divisor)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lt_e, lt_c = b.leading("lex")
        q = Poly(a.vars)
        r = Poly(a.vars)
        p = a
        while not p.is_zero():
            e, c = p.leading("lex")
            if all(x >= y for x, y in zip(e, lt_e)):
                m = Poly(a.vars, {tuple(x - y for x, y in zip(e, lt_e)): c / lt_c})
                q = q + m
                p = p - m * b
            else:
                lead = Poly(a.vars, {e: c})
                r = r + lead
                p = p - lead
        return q, r

    def divides(self, other: Poly) -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return other.divmod(self)[1].is_zero()

    def exact_div(self, divisor: Poly) -> Poly:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise PolynomialError(f"{divisor} does not divide {self}")
        return q

    # printing ------------------------------------------------------------
    def format(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            mag = abs(c)
            cs = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if mono:
                body = mono if mag == 1 else f"{cs}*{mono}"
            else:
                body = cs
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format

    def __repr__(self):
        return f"Poly({self.format()!r})"


_NAME = re.compile(r"[A-Za-z_]\w*")


def parse_poly(text: str, variables: Sequence[str] | None = None) -> Poly:
    """Parse a polynomial expression with exact rational coefficients.

    Accepts ``+ - *``, division by constants, ``^`` or ``**`` with
    non-negative integer exponents, and parentheses.
    """
    src = text.strip()
    if not src:
        raise PolynomialError("empty polynomial")
    try:
        tree = ast.parse(src.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise PolynomialError(f"cannot parse polynomial {text!r}") from exc
    found = sorted({n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}, key=_natural_key)
    if variables:
        names = list(variables)
        extra = [v for v in found if v not in names]
        if extra:
            raise PolynomialError(f"unknown variable {extra[0]!r}")
    else:
        names = found

    def ev(node) -> Poly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) \
                and not isinstance(node.value, bool):
            return Poly.const(node.value, names)
        if isinstance(node, ast.Name):
            return Poly.var(node.id, names)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if not b.is_constant() or b.is_zero():
                    raise PolynomialError("division only by nonzero constants")
                return a * (1 / b.constant_value())
            if isinstance(node.op, ast.Pow):
                if not b.is_constant() or b.constant_value().denominator != 1 \
                        or b.constant_value() < 0:
                    raise PolynomialError("exponents must be non-negative integers")
                return a ** int(b.constant_value())
        raise PolynomialError(f"unsupported syntax in polynomial {text!r}")

    return ev(tree).with_vars(names)


# ---------------------------------------------------------------------------
# resultants

def sylvester_matrix(f: Poly, g: Poly, var: str) -> list[list[Poly]]:
    fc, gc = f.coeff_list(var), g.coeff_list(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m < 1 or n < 1:
        raise PolynomialError(f"both polynomials need positive degree in {var}")
    rest = [v for v in f._unify(g)[0].vars if v != var]
    fc = [c.with_vars(rest) for c in fc]
    gc = [c.with_vars(rest) for c in gc]
    zero = Poly(rest)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return rows


def bareiss_det(mat: list[list[Poly]]) -> Poly:
    """Fraction-free determinant; every division is exact."""
    n = len(mat)
    if n == 0:
        raise PolynomialError("empty matrix")
    m = [list(r) for r in mat]
    sign = 1
    prev = Poly.const(1, m[0][0].vars)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return Poly(m[0][0].vars)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Determinant of the Sylvester matrix of f and g with respect to ``var``."""
    if f.degree(var) < 1 or g.degree(var) < 1:
        raise PolynomialError(f"resultant needs positive degree in {var}")
    return bareiss_det(sylvester_matrix(f, g, var))


def poly_from_upoly(p: UPoly, var: str, variables: Sequence[str] | None = None) -> Poly:
    variables = tuple(variables) if variables else (var,)
    i = variables.index(var)
    return Poly(variables, {tuple(k if j == i else 0 for j in range(len(variables))): c
                            for k, c in enumerate(p.c)})


def upoly_from_poly(p: Poly, var: str) -> UPoly:
    """View a polynomial in one variable (all others absent) as a UPoly."""
    used = [v for v in p.used_vars() if v != var]
    if used:
        raise PolynomialError(f"{p} depends on {used}")
    return UPoly(c.constant_value() for c in p.coeff_list(var))


def all_monomials(variables: Sequence[str], degree: int) -> list[tuple]:
    return [e for e in product(range(degree + 1), repeat=len(variables)) if sum(e) == degree]

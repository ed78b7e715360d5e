"""Moebius action of sheet continuation on the affine coordinate X = S1/S2.

One step of inversion-after-crossing, S -> I(A S), sends X to
((A S)_2 / (A S)_1), a linear fractional map whose exact powers give the
coordinate on every sheet.  Points are stored projectively, so the image
``X = infinity`` is an ordinary value.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .crossing import CrossingMatrix, eigen, validate
from .matrices import identity, mat_mul, mat_pow, mat_scale, mat_sub
from .scalars import QuadNum, as_exact, format_exact, quad_to_complex, squarefree_part

IDENTITY = "identity"
PARABOLIC = "parabolic"
ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"


class DegenerateMapError(ValueError):
    pass


class ProjPoint:
    """Point of the projective line over Q or Q(sqrt d); ``inf`` is (1 : 0)."""

    __slots__ = ("p", "q")

    def __init__(self, p, q=1):
        p, q = as_exact(p), as_exact(q)
        if p == 0 and q == 0:
            raise ValueError("(0 : 0) is not a projective point")
        if q == 0:
            self.p, self.q = Fraction(1), Fraction(0)
        else:
            self.p, self.q = as_exact(p / q), Fraction(1)

    INF: "ProjPoint"

    @classmethod
    def of(cls, x) -> ProjPoint:
        if isinstance(x, ProjPoint):
            return x
        if x is None or (isinstance(x, str) and x.strip().lower() in ("inf", "infinity")):
            return cls(1, 0)
        if isinstance(x, str):
            return cls(Fraction(x.strip()))
        return cls(x)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def value(self):
        return None if self.is_infinite else self.p

    def reciprocal(self) -> ProjPoint:
        return ProjPoint(self.q, self.p)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            other = ProjPoint.of(other)
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"ProjPoint({self})"

    def __str__(self):
        return "inf" if self.is_infinite else format_exact(self.p)

    def to_complex(self) -> complex | None:
        return None if self.is_infinite else quad_to_complex(self.p)


ProjPoint.INF = ProjPoint(1, 0)


@dataclass(frozen=True)
class MobiusMap:
    """X -> (a X + b) / (c X + d) from the exact matrix ((a, b), (c, d))."""

    m: tuple

    def __post_init__(self):
        m = tuple(tuple(as_exact(x) for x in r) for r in self.m)
        object.__setattr__(self, "m", m)

    @property
    def det(self):
        (a, b), (c, d) = self.m
        return as_exact(a * d - b * c)

    @property
    def trace(self):
        return as_exact(self.m[0][0] + self.m[1][1])

    @property
    def kind(self) -> str:
        return mobius_classify(self)

    def apply(self, x) -> ProjPoint:
        x = ProjPoint.of(x)
        (a, b), (c, d) = self.m
        return ProjPoint(a * x.p + b * x.q, c * x.p + d * x.q)

    __call__ = apply

    def compose(self, other: MobiusMap) -> MobiusMap:
        """self after other."""
        return MobiusMap(mat_mul(self.m, other.m))

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self) -> MobiusMap:
        """Adjugate matrix; projectively the inverse map."""
        if self.det == 0:
            raise DegenerateMapError("singular matrix has no inverse map")
        (a, b), (c, d) = self.m
        return MobiusMap(((d, -b), (-c, a)))

    def projectively_equal(self, other: MobiusMap) -> bool:
        a = [x for r in self.m for x in r]
        b = [x for r in other.m for x in r]
        return all(as_exact(x * w - y * v) == 0 for x, v in zip(a, b) for y, w in zip(a, b))

    def format(self) -> str:
        (a, b), (c, d) = self.m
        f = format_exact
        return f"X -> ({f(a)}*X + {f(b)}) / ({f(c)}*X + {f(d)})"


def induced_mobius(A: CrossingMatrix) -> MobiusMap:
    """Action of one continuation step I·A on X: rows of A swapped."""
    if A.n != 2:
        raise ValueError("induced_mobius needs a 2x2 matrix")
    (a11, a12), (a21, a22) = A.entries
    return MobiusMap(((a21, a22), (a11, a12)))


def crossing_mobius(A: CrossingMatrix) -> MobiusMap:
    """Action of A itself on X (no inversion)."""
    if A.n != 2:
        raise ValueError("crossing_mobius needs a 2x2 matrix")
    return MobiusMap(A.entries)


def _sign(x) -> int:
    if isinstance(x, QuadNum):
        return x.sign()
    return (x > 0) - (x < 0)


def mobius_classify(M: MobiusMap) -> str:
    """Exact classification by the sign of trace^2 - 4 det (scale invariant)."""
    if M.det == 0:
        raise DegenerateMapError("determinant is zero")
    (a, b), (c, d) = M.m
    if b == 0 and c == 0 and a == d:
        return IDENTITY
    s = _sign(as_exact(M.trace * M.trace - 4 * M.det))
    if s == 0:
        return PARABOLIC
    return HYPERBOLIC if s > 0 else ELLIPTIC


def mobius_eigenvalues(M: MobiusMap) -> tuple:
    """Eigenvalues (larger first) of a hyperbolic or parabolic map, exact."""
    t, det = M.trace, M.det
    disc = as_exact(t * t - 4 * det)
    if isinstance(disc, QuadNum):
        raise ValueError("eigenvalues need a rational matrix")
    if disc < 0:
        raise ValueError("elliptic map: eigenvalues are not real")
    if disc == 0:
        return (t / 2, t / 2)
    num = disc.numerator * disc.denominator
    s, d = squarefree_part(num)
    r = Fraction(s, disc.denominator)
    if d == 1:
        lam = (Fraction(t) / 2 + r / 2, Fraction(t) / 2 - r / 2)
    else:
        lam = (QuadNum(Fraction(t) / 2, r / 2, d), QuadNum(Fraction(t) / 2, -r / 2, d))
    return tuple(sorted(lam, key=float, reverse=True))


def mobius_power(M: MobiusMap, n: int) -> MobiusMap:
    """Exact M^n through the Jordan form.

    parabolic: M = λ(1 + N) with N nilpotent, so M^n = λ^n (1 + nN);
    hyperbolic: spectral projectors with eigenvalues in Q or Q(sqrt d);
    elliptic: repeated squaring.
    """
    kind = mobius_classify(M)
    if n == 0:
        return MobiusMap(identity(2))
    if kind == IDENTITY:
        return MobiusMap(mat_scale(M.m[0][0] ** n, identity(2)))
    if kind == PARABOLIC:
        lam = Fraction(M.trace) / 2
        N = mat_sub(mat_scale(1 / lam, M.m), identity(2))
        return MobiusMap(mat_scale(lam ** n, tuple(
            tuple(int(i == j) + n * x for j, x in enumerate(r)) for i, r in enumerate(N))))
    if kind == HYPERBOLIC:
        lp, lm = mobius_eigenvalues(M)
        I2 = identity(2)
        p_plus = mat_scale(1 / (lp - lm), mat_sub(M.m, mat_scale(lm, I2)))
        p_minus = mat_scale(1 / (lm - lp), mat_sub(M.m, mat_scale(lp, I2)))
        a, b = lp ** n, lm ** n
        out = tuple(tuple(a * x + b * y for x, y in zip(r1, r2)) for r1, r2 in zip(p_plus, p_minus))
        return MobiusMap(out)
    return MobiusMap(mat_pow(M.m, n))


def mobius_flow(M: MobiusMap, nu: complex) -> tuple:
    """Complex matrix proportional to M^nu, for real or complex ``nu``.

    Integer ``nu`` agrees projectively with :func:`mobius_power`; common
    scalar factors such as (-1)^nu are dropped, which is harmless for the
    action on X.
    """
    kind = mobius_classify(M)
    if kind == IDENTITY:
        return ((1, 0), (0, 1))
    if kind == PARABOLIC:
        lam = quad_to_complex(Fraction(M.trace) / 2)
        N = [[quad_to_complex(x) / lam for x in r] for r in M.m]
        N[0][0] -= 1
        N[1][1] -= 1
        return ((1 + nu * N[0][0], nu * N[0][1]), (nu * N[1][0], 1 + nu * N[1][1]))
    if kind == HYPERBOLIC:
        lp, lm = mobius_eigenvalues(M)
        I2 = identity(2)
        p_plus = mat_scale(1 / (lp - lm), mat_sub(M.m, mat_scale(lm, I2)))
        p_minus = mat_scale(1 / (lm - lp), mat_sub(M.m, mat_scale(lp, I2)))
        ratio = quad_to_complex(lm / lp)
        w = cmath.exp(nu * cmath.log(ratio))
        return tuple(tuple(quad_to_complex(x) + w * quad_to_complex(y) for x, y in zip(r1, r2))
                     for r1, r2 in zip(p_plus, p_minus))
    raise NotImplementedError("continuous flow of elliptic maps is not supported")


def flow_apply(M: MobiusMap, nu: complex, x0) -> complex | None:
    """X at continuous sheet argument ``nu`` starting from ``x0``; None for infinity."""
    (a, b), (c, d) = mobius_flow(M, nu)
    x0 = ProjPoint.of(x0)
    p, q = quad_to_complex(x0.p), quad_to_complex(x0.q)
    num, den = a * p + b * q, c * p + d * q
    if den == 0:
        return None
    return num / den


@dataclass(frozen=True)
class X0Candidate:
    x: ProjPoint
    eigenvalue: object
    tag: str


def x0_candidates(A: CrossingMatrix) -> list[X0Candidate]:
    """Admissible physical-sheet coordinates: eigendirections of A.

    Crossing at z = 0 forces S(0) = A S(0) up to sign, so S(0) is an
    eigenvector and X(0) one of the eigendirections.
    """
    if A.n != 2:
        raise ValueError("x0_candidates needs a 2x2 matrix")
    ed = eigen(A)
    trivial = validate(A).unit_row_sums
    out = []
    for lam, v, x in zip(ed.eigenvalues, ed.eigenvectors, ed.directions):
        pt = ProjPoint.INF if x is None else ProjPoint(x)
        tag = "trivial / no interaction" if trivial and pt == ProjPoint(1) else \
            f"eigenvalue {format_exact(lam)}"
        out.append(X0Candidate(pt, lam, tag))
    return out


def sheet_coordinate(A: CrossingMatrix, x0, n: int) -> ProjPoint:
    """Exact X on sheet n, starting from X(0) = ``x0``."""
    return mobius_power(induced_mobius(A), n).apply(x0)


Exact = Union[Fraction, QuadNum]

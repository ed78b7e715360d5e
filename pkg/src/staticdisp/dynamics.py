"""Sheet continuation S -> (IA)^p S and rest points of the finite system.

Inversion I takes reciprocals componentwise and sends sheet p to 1 - p;
crossing A sends sheet p at z to sheet -p at -z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .crossing import (CrossingMatrix, UnsupportedDimensionError, exact_roots,
                       require_involution, restrict_to_plane, validate)
from .matrices import mat_vec
from .polynomials import UPoly
from .scalars import QuadNum, as_exact, format_exact, quad_sqrt, quad_to_complex


class PoleCrossingError(ZeroDivisionError):
    """A component vanished where an inversion was about to be applied."""

    def __init__(self, index: int, step: int | None = None):
        self.index = index
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"component {index} vanishes{where}; inversion hits a pole")


class UnsupportedFieldError(ValueError):
    """Rest points would need more than one real quadratic extension."""


@dataclass(frozen=True)
class SheetColumn:
    values: tuple
    sheet: int = 0
    z: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) < 2:
            raise ValueError("a sheet column needs at least two components")


def invert(S: SheetColumn, step: int | None = None) -> SheetColumn:
    for i, x in enumerate(S.values):
        if x == 0:
            raise PoleCrossingError(i + 1, step)
    return SheetColumn(tuple(1 / x for x in S.values), 1 - S.sheet, S.z)


def apply_crossing(S: SheetColumn, A: CrossingMatrix) -> SheetColumn:
    if len(S.values) != A.n:
        raise ValueError(f"column has {len(S.values)} components, matrix is {A.n}x{A.n}")
    return SheetColumn(mat_vec(A.entries, S.values), -S.sheet, -S.z)


def continue_sheet(S0: SheetColumn, A: CrossingMatrix, p: int) -> SheetColumn:
    """(IA)^p applied to ``S0``; for p < 0 the inverse word (AI)^|p|."""
    S = S0
    for step in range(1, abs(p) + 1):
        if p > 0:
            S = invert(apply_crossing(S, A), step)
        else:
            S = apply_crossing(invert(S, step), A)
    return S


# ---------------------------------------------------------------------------
# rest points

@dataclass
class RestPoint:
    """Solution of S_i (A S)_i = 1; the column is ``i * components`` when imaginary."""

    components: tuple
    imaginary: bool
    label: str = ""
    verified: bool = False

    def column(self) -> tuple[complex, ...]:
        f = 1j if self.imaginary else 1
        return tuple(f * quad_to_complex(c) for c in self.components)

    def residuals(self, A: CrossingMatrix) -> tuple:
        """Exact S_i (A S)_i - 1 for each i."""
        s = -1 if self.imaginary else 1
        AS = mat_vec(A.entries, self.components)
        return tuple(as_exact(s * x * y - 1) for x, y in zip(self.components, AS))

    def format(self) -> str:
        body = ", ".join(format_exact(c) for c in self.components)
        return f"i*({body})" if self.imaginary else f"({body})"

    def to_dict(self) -> dict:
        return {"column": [format_exact(c) for c in self.components],
                "imaginary_unit_factor": self.imaginary,
                "source": self.label, "verified": self.verified}


def _solve_two_row(B: CrossingMatrix) -> list[RestPoint]:
    """S1 (b11 S1 + b12 S2) = 1 = S2 (b21 S1 + b22 S2).

    Subtracting gives b11 X^2 + (b12 - b21) X - b22 = 0 in X = S1/S2,
    then S2^2 = 1 / (b21 X + b22).  S2 = 0 cannot solve the second equation.
    """
    (b11, b12), (b21, b22) = B.entries
    quad = UPoly([-b22, b12 - b21, b11])
    if quad.degree < 1:
        return []
    xs = []
    for x in exact_roots(quad):
        if x not in xs:
            xs.append(x)
    out = []
    for x in xs:
        den = as_exact(b21 * x + b22)
        if den == 0:
            continue
        s2sq = as_exact(1 / den)
        d = s2sq.d if isinstance(s2sq, QuadNum) else None
        neg = (s2sq.sign() if isinstance(s2sq, QuadNum) else (s2sq > 0) - (s2sq < 0)) < 0
        root = quad_sqrt(-s2sq if neg else s2sq, d)
        if root is None:
            raise UnsupportedFieldError(
                f"S2^2 = {format_exact(s2sq)} has no square root in a single quadratic field")
        for sgn in (1, -1):
            s2 = as_exact(sgn * root)
            s1 = as_exact(x * s2)
            out.append(RestPoint((s1, s2), neg))
    return out


def _invariant_planes(A: CrossingMatrix) -> list[tuple[int, int]]:
    """Coordinate planes S_j + S_k = 0 invariant under A.

    The plane is the kernel of e_j + e_k, so invariance means that covector
    is a left eigenvector of A.  I maps the plane into itself on its own.
    """
    n = A.n
    out = []
    for j, k in combinations(range(n), 2):
        row = [A.entries[j][c] + A.entries[k][c] for c in range(n)]
        mu = row[j]
        if row[k] == mu and all(row[c] == 0 for c in range(n) if c not in (j, k)):
            out.append((j, k))
    return out


def rest_points(A: CrossingMatrix) -> list[RestPoint]:
    """Exact solutions of S_i (A S)_i = 1, each checked by back-substitution."""
    if A.n > 3:
        raise UnsupportedDimensionError(f"rest points need N <= 3, got N = {A.n}")
    require_involution(A)
    found: list[RestPoint] = []
    if validate(A).unit_row_sums:
        one = Fraction(1)
        found.append(RestPoint(tuple(one for _ in range(A.n)), False, "ones"))
        found.append(RestPoint(tuple(-one for _ in range(A.n)), False, "ones"))
    if A.n == 2:
        for rp in _solve_two_row(A):
            rp.label = "two-row"
            found.append(rp)
    else:
        planes = _invariant_planes(A)
        if not planes:
            raise UnsupportedFieldError("no invariant coordinate plane S_j + S_k = 0 to reduce to")
        for j, k in planes:
            keep = [c for c in range(A.n) if c != k]
            embed = []
            for r in range(A.n):
                if r == k:
                    embed.append([Fraction(-1) if c == keep.index(j) else Fraction(0)
                                  for c in range(len(keep))])
                else:
                    embed.append([Fraction(int(c == keep.index(r))) for c in range(len(keep))])
            B = restrict_to_plane(A, keep, embed)
            for rp in _solve_two_row(B):
                comps = [Fraction(0)] * A.n
                for idx, r in enumerate(keep):
                    comps[r] = rp.components[idx]
                comps[k] = as_exact(-comps[j])
                found.append(RestPoint(tuple(comps), rp.imaginary,
                                       f"plane S{j + 1}+S{k + 1}=0"))
    unique: list[RestPoint] = []
    for rp in found:
        if any(u.components == rp.components and u.imaginary == rp.imaginary for u in unique):
            continue
        rp.verified = all(r == 0 for r in rp.residuals(A))
        if not rp.verified:
            raise ArithmeticError(f"rest point {rp.format()} fails back-substitution")
        if not rp.label:
            rp.label = A.label
        unique.append(rp)
    for rp in unique:
        rp.label = f"{A.label}: {rp.label}" if A.label else rp.label
    return unique


def sqrt5(a, b) -> QuadNum:
    return QuadNum(Fraction(a), Fraction(b), 5)


# the four rest points of the three-row problem exactly as printed; kept only
# to be checked against the matrix and reported
P33_PRINTED_REST_POINTS = tuple(
    tuple(x for x in comps)
    for comps in (
        (sqrt5(-2, -1), sqrt5(Fraction(-1, 2), Fraction(-1, 2)), sqrt5(Fraction(1, 2), Fraction(1, 2))),
        (sqrt5(-2, 1), sqrt5(Fraction(-1, 2), Fraction(1, 2)), sqrt5(Fraction(1, 2), Fraction(-1, 2))),
    )
)


@dataclass
class PrintedCheck:
    components: tuple
    residuals: tuple
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = all(r == 0 for r in self.residuals)


def check_printed_rest_points(A: CrossingMatrix,
                              printed: Sequence[tuple] = P33_PRINTED_REST_POINTS) -> list[PrintedCheck]:
    """Back-substitute externally supplied imaginary rest points (sign is irrelevant)."""
    out = []
    for comps in printed:
        rp = RestPoint(tuple(comps), True)
        out.append(PrintedCheck(rp.components, rp.residuals(A)))
    return out

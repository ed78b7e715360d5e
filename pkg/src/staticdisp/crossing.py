"""Crossing-symmetry matrices: the catalog, validation and exact eigen-analysis."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .matrices import (Matrix, identity, is_zero_vector, mat_mul, mat_sub, mat_vec,
                       mat_scale, nullspace, rref, to_matrix)
from .polynomials import UPoly
from .scalars import QuadNum, format_exact, squarefree_part


class CatalogError(ValueError):
    """Unknown catalog label or bad family parameter."""


class UnsupportedDimensionError(ValueError):
    pass


@dataclass(frozen=True)
class CrossingMatrix:
    entries: Matrix
    label: str = ""
    l: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", to_matrix(self.entries))
        n = len(self.entries)
        if n == 0 or any(len(r) != n for r in self.entries):
            raise ValueError("crossing matrix must be square and non-empty")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def apply(self, v: Sequence):
        return mat_vec(self.entries, tuple(v))

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(r, Fraction(0)) for r in self.entries)

    def squared(self) -> Matrix:
        return mat_mul(self.entries, self.entries)

    def format_rows(self) -> list[list[str]]:
        return [[format_exact(x) for x in r] for r in self.entries]


@dataclass
class ValidationReport:
    involution: bool
    unit_row_sums: bool
    first_failure: tuple[str, int, int] | None = None  # (check, row, col), 1-based

    @property
    def ok(self) -> bool:
        return self.involution and self.unit_row_sums

    def to_dict(self) -> dict:
        d = {"involution": self.involution, "unit_row_sums": self.unit_row_sums, "ok": self.ok}
        if self.first_failure:
            check, i, j = self.first_failure
            d["first_failure"] = {"check": check, "row": i, "col": j}
        return d


def validate(A: CrossingMatrix) -> ValidationReport:
    """Check A^2 = 1 and unit row sums exactly; report the first failing entry."""
    first = None
    sq = A.squared()
    inv_ok = True
    for i, row in enumerate(sq):
        for j, x in enumerate(row):
            if x != int(i == j):
                inv_ok = False
                first = first or ("involution", i + 1, j + 1)
                break
        if not inv_ok:
            break
    sums = A.row_sums()
    rs_ok = all(s == 1 for s in sums)
    if not rs_ok and first is None:
        bad = next(i for i, s in enumerate(sums) if s != 1)
        first = ("unit_row_sums", bad + 1, 0)
    return ValidationReport(inv_ok, rs_ok, first)


def require_involution(A: CrossingMatrix) -> None:
    rep = validate(A)
    if not rep.involution:
        raise ValueError(f"{A.label or 'matrix'} is not an involution: {rep.to_dict()}")


# ---------------------------------------------------------------------------
# catalog

def su2_two_row(l: int) -> CrossingMatrix:
    """The SU(2) two-row family (1/(2l+1)) [[-1, 2l+2], [2l, 1]]."""
    if not isinstance(l, int) or l < 1:
        raise CatalogError(f"l must be a positive integer, got {l!r}")
    k = Fraction(1, 2 * l + 1)
    return CrossingMatrix(((-k, (2 * l + 2) * k), (2 * l * k, k)), f"su2:l={l}", l)


def three_row_p33() -> CrossingMatrix:
    """Meson-nucleon matrix for two particles of unit angular momentum."""
    F = Fraction
    return CrossingMatrix(((F(1, 3), F(-1), F(5, 3)),
                           (F(-1, 3), F(1, 2), F(5, 6)),
                           (F(1, 3), F(1, 2), F(1, 6))), "p33")


def reduced_two_row() -> CrossingMatrix:
    """Restriction of :func:`three_row_p33` to the plane S2 + S3 = 0."""
    F = Fraction
    return CrossingMatrix(((F(1, 3), F(-8, 3)), (F(-1, 3), F(-1, 3))), "p33-reduced")


def extend_block(A: CrossingMatrix) -> CrossingMatrix:
    """diag(A, 1): the action on the extra homogeneous coordinate of P_N."""
    require_involution(A)
    n = A.n
    rows = [list(r) + [Fraction(0)] for r in A.entries]
    rows.append([Fraction(0)] * n + [Fraction(1)])
    return CrossingMatrix(rows, f"block:{A.label}" if A.label else "block", A.l)


def restrict_to_plane(A: CrossingMatrix, keep: Sequence[int], embed: Matrix,
                      label: str = "") -> CrossingMatrix:
    """Matrix B with A·P = P·B for the embedding P (columns span an A-invariant subspace).

    ``keep`` lists coordinates that serve as coordinates on the subspace, i.e.
    rows of P forming the identity.
    """
    AP = mat_mul(A.entries, embed)
    B = tuple(AP[i] for i in keep)
    if mat_mul(embed, B) != AP:
        raise ValueError("subspace is not invariant under the matrix")
    return CrossingMatrix(B, label)


_SU2 = re.compile(r"^su2:l=(\d+)$")


def from_label(label: str) -> CrossingMatrix:
    """Catalog lookup: ``su2:l=<k>``, ``p33``, ``p33-reduced``, ``block:<inner>``."""
    label = label.strip()
    if label.startswith("block:"):
        return extend_block(from_label(label[len("block:"):]))
    m = _SU2.match(label)
    if m:
        return su2_two_row(int(m.group(1)))
    if label == "p33":
        return three_row_p33()
    if label == "p33-reduced":
        return reduced_two_row()
    raise CatalogError(f"unknown matrix label {label!r}")


# reference decomposition vectors as printed for the three-row problem; kept as
# data only and checked against the matrix, never trusted blindly
P33_REFERENCE_BASIS = (
    (1, (Fraction(1), Fraction(1), Fraction(1))),
    (1, (Fraction(15, 4), Fraction(-5, 4), Fraction(3, 4))),
    (-1, (Fraction(-2), Fraction(-1), Fraction(-1))),
)


# ---------------------------------------------------------------------------
# eigen-analysis

@dataclass
class EigenData:
    eigenvalues: list                      # with multiplicity, grouped
    eigenvectors: list[tuple]              # one per eigenvalue entry
    directions: list | None = None         # 2x2 only: X = v1/v2 (None means infinity)
    notes: list[str] = field(default_factory=list)

    def pairs(self):
        return list(zip(self.eigenvalues, self.eigenvectors))

    def to_dict(self) -> dict:
        d = {
            "eigenvalues": [format_exact(x) for x in self.eigenvalues],
            "eigenvectors": [[format_exact(x) for x in v] for v in self.eigenvectors],
        }
        if self.directions is not None:
            d["directions"] = ["inf" if x is None else format_exact(x) for x in self.directions]
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def charpoly(m: Matrix) -> UPoly:
    """det(t·I - m) by the Faddeev-LeVerrier recursion."""
    n = len(m)
    zero = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    mk, c = zero, Fraction(1)
    coeffs = [c]
    for k in range(1, n + 1):
        mk = tuple(tuple(x + (c if i == j else 0) for j, x in enumerate(r))
                   for i, r in enumerate(mat_mul(m, mk)))
        am = mat_mul(m, mk)
        c = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
        coeffs.append(c)
    return UPoly(reversed(coeffs))


def exact_roots(p: UPoly) -> list:
    """Roots with multiplicity of a rational polynomial of degree <= 3, lying in Q
    or a single real quadratic field."""
    roots: list = []
    rest = p
    for r in p.rational_roots():
        while rest.degree >= 1 and rest(r) == 0:
            roots.append(r)
            rest = rest // UPoly([-r, 1])
    if rest.degree == 2:
        a, b, c = rest.c[2], rest.c[1], rest.c[0]
        disc = b * b - 4 * a * c
        if disc < 0:
            raise UnsupportedDimensionError("complex eigenvalues are outside the supported fields")
        num = disc.numerator * disc.denominator
        s, d = squarefree_part(num)
        sq = Fraction(s, disc.denominator)
        for sign in (1, -1):
            roots.append(QuadNum(-b / (2 * a), sign * sq / (2 * a), d))
    elif rest.degree > 2:
        raise UnsupportedDimensionError("irreducible cubic characteristic polynomial")
    return roots


def _scale_like(v: tuple, ref: tuple | None) -> tuple:
    lead_idx = next(i for i, x in enumerate(v) if x != 0)
    if ref is not None and ref[lead_idx] != 0:
        f = Fraction(ref[lead_idx]) / v[lead_idx]
    else:
        f = 1 / v[lead_idx]
    return tuple(f * x for x in v)


def _in_span(v: tuple, basis: list[tuple]) -> bool:
    if not basis:
        return False
    rows = [list(b) for b in basis] + [list(v)]
    _, piv = rref(tuple(tuple(r) for r in rows))
    _, piv0 = rref(tuple(tuple(b) for b in basis))
    return len(piv) == len(piv0)


def eigen(A: CrossingMatrix) -> EigenData:
    """Exact eigenvalues and eigenvectors (kernels of A - λ) for N <= 3."""
    if A.n > 3:
        raise UnsupportedDimensionError(f"eigen supports N <= 3, got N = {A.n}")
    require_involution(A)
    lams = exact_roots(charpoly(A.entries))
    distinct = []
    for lam in lams:
        if lam not in distinct:
            distinct.append(lam)
    refs = P33_REFERENCE_BASIS if A.label == "p33" else ()
    vals, vecs, notes = [], [], []
    for lam in sorted(distinct, key=lambda x: -float(x)):
        shifted = mat_sub(A.entries, mat_scale(lam, identity(A.n)))
        basis = nullspace(shifted)
        chosen = []
        for ev, rv in refs:
            if ev != lam:
                continue
            if is_zero_vector(mat_vec(shifted, rv)) and not _in_span(rv, chosen):
                chosen.append(tuple(Fraction(x) for x in rv))
            elif not is_zero_vector(mat_vec(shifted, rv)):
                notes.append(
                    f"reference vector ({', '.join(format_exact(x) for x in rv)}) is not an "
                    f"eigenvector for eigenvalue {format_exact(lam)}")
        ref_for_scale = next((rv for ev, rv in refs if ev == lam), None)
        for b in basis:
            if len(chosen) >= len(basis):
                break
            if not _in_span(b, chosen):
                chosen.append(_scale_like(b, ref_for_scale if not chosen else None))
        for v in chosen:
            vals.append(lam)
            vecs.append(v)
    dirs = None
    if A.n == 2:
        dirs = [None if v[1] == 0 else v[0] / v[1] for v in vecs]
    return EigenData(vals, vecs, dirs, notes)

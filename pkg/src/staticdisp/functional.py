"""Solutions of the sheet-index functional equations.

Parabolic family: phi(n) phi(1-n) = 1 and phi(n)/phi(-n) = (n+l)/(n-l), solved
by a finite chain of consecutive changes of the unknown function.

Hyperbolic reduction: Phi(n) Phi(1-n) = 1 with the ratio Phi(n)/Phi(-n)
fixed by ch or sh of log y+, solved by Phi(n) = xi(n - 1/2) exp(g(n - 1/2))
with g an odd convergent series.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .crossing import CrossingMatrix, reduced_two_row
from .mobius import flow_apply, induced_mobius, mobius_eigenvalues
from .polynomials import RatFunc, UPoly

COSH = "cosh"
SINH = "sinh"
BRANCH_X0 = {COSH: Fraction(2), SINH: Fraction(-4)}


class PoleError(ZeroDivisionError):
    pass


class SingularTermError(ArithmeticError):
    def __init__(self, m: int, n):
        self.m = m
        super().__init__(f"series term G_{m} is singular at n = {n}")


class TruncationError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# parabolic family

def parabolic_alphas(l: int) -> list[Fraction]:
    """alpha_k = 1/2 + l - k for k = 1..l."""
    return [Fraction(1, 2) + l - k for k in range(1, l + 1)]


def solve_parabolic_family(l: int) -> RatFunc:
    """phi(n) = exp g(n - 1/2), built from g_0 = g by the changes

    g_m(n) = g_{m+1}(n) + log((n + (-1)^m a_{m+1}) / (n - (-1)^m a_{m+1})),

    stopping at g_l = 0 (the homogeneous part belongs to the Blaschke factor).
    """
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"l must be a positive integer, got {l!r}")
    phi = RatFunc(1)
    for m, a in enumerate(parabolic_alphas(l)):
        s = a if m % 2 == 0 else -a
        # exp of the m-th log term at argument n - 1/2
        phi = phi * RatFunc(UPoly([-Fraction(1, 2) + s, 1]), UPoly([-Fraction(1, 2) - s, 1]))
    return phi


def verify_parabolic(phi: RatFunc, l: int) -> tuple[RatFunc, RatFunc]:
    """Exact residuals phi(n) phi(1-n) - 1 and phi(n)(n - l) - phi(-n)(n + l)."""
    n = RatFunc.var()
    r1 = phi * phi.compose_affine(-1, 1) - 1
    r2 = phi * (n - l) - phi.compose_affine(-1, 0) * (n + l)
    return r1, r2


# ---------------------------------------------------------------------------
# hyperbolic reduction

def xi(n: complex) -> complex:
    """tan(pi/2 (n + 1/2)): xi(n+1) xi(n) = -1 and xi(n) xi(-n) = 1."""
    r = complex(n) + 0.5
    k = round(r.real)
    if abs(r.imag) < 1e-300 and k % 2 and abs(r.real - k) < 1e-12:
        raise PoleError(f"xi has a pole at n = {n}")
    v = cmath.tan(math.pi / 2 * r)
    return v.real if isinstance(n, (int, float, Fraction)) else v


def _log_y_plus() -> float:
    return math.log((3 + math.sqrt(5)) / 2)


def branch_for_x0(x0) -> str:
    for b, v in BRANCH_X0.items():
        if Fraction(x0) == v:
            return b
    raise ValueError(f"no series branch for X0 = {x0}; expected 2 (cosh) or -4 (sinh)")


@dataclass(frozen=True)
class HyperbolicSeriesSpec:
    branch: str = COSH
    L: float = field(default_factory=_log_y_plus)
    eps: float = 1e-12
    max_terms: int = 200

    def __post_init__(self):
        if self.branch not in (COSH, SINH):
            raise ValueError(f"branch must be 'cosh' or 'sinh', got {self.branch!r}")
        if not self.L > 0:
            raise ValueError("L = log y+ must be positive")
        if not self.eps > 0 or self.max_terms < 1:
            raise ValueError("need eps > 0 and max_terms >= 1")

    @classmethod
    def from_matrix(cls, A: CrossingMatrix, branch: str = COSH, **kw) -> HyperbolicSeriesSpec:
        """L = (1/2) log |y+/y-| from the induced map's eigenvalues."""
        lp, lm = mobius_eigenvalues(induced_mobius(A))
        L = 0.5 * abs(math.log(abs(float(lp) / float(lm))))
        return cls(branch, L, **kw)

    def f(self, x):
        return cmath.cosh(x) if self.branch == COSH else cmath.sinh(x)


def _term_ratio(n: complex, m: int, spec: HyperbolicSeriesSpec) -> complex:
    L, f = spec.L, spec.f
    num = f((n + 1 + 2 * m) * L) * f((n - 2 * (m + 1)) * L)
    den = f((n - 1 - 2 * m) * L) * f((n + 2 * (m + 1)) * L)
    if num == 0 or den == 0 or abs(den) < 1e-300:
        raise SingularTermError(m, n)
    return num / den


@dataclass
class SeriesReport:
    value: complex
    terms: int
    last_term: float


def _series(n: complex, spec: HyperbolicSeriesSpec, signed: bool) -> SeriesReport:
    """exp(g_inf) prod ratio_m (signed) or g_inf + sum log|ratio_m|, m ascending."""
    acc = cmath.exp(n * spec.L) if signed else n * spec.L
    for m in range(spec.max_terms):
        r = _term_ratio(n, m, spec)
        size = abs(cmath.log(r))
        if size < spec.eps:
            return SeriesReport(acc, m, size)
        acc = acc * r if signed else acc + math.log(abs(r))
    raise TruncationError(f"|G_m| did not drop below {spec.eps} within {spec.max_terms} terms")


def g_terms(n: float, spec: HyperbolicSeriesSpec, count: int) -> list[float]:
    """The first ``count`` series terms G_m(n) (real log-moduli)."""
    return [math.log(abs(_term_ratio(n, m, spec))) for m in range(count)]


def g_hyperbolic(n: float, spec: HyperbolicSeriesSpec | None = None) -> float:
    """g_inf(n) + sum_m G_m(n), truncated at the first |G_M| < eps; odd in n."""
    spec = spec or HyperbolicSeriesSpec()
    return _series(complex(n), spec, signed=False).value.real


def g_truncation(n: float, spec: HyperbolicSeriesSpec | None = None) -> SeriesReport:
    spec = spec or HyperbolicSeriesSpec()
    return _series(complex(n), spec, signed=False)


def phi_hyperbolic(n: complex, spec: HyperbolicSeriesSpec | None = None) -> complex:
    """Phi(n) = xi(n - 1/2) exp(g(n - 1/2)) for cosh; the sh products carry the sign
    themselves, so the sinh branch has no xi factor.

    Real input gives a real result.
    """
    spec = spec or HyperbolicSeriesSpec()
    x = complex(n) - 0.5
    val = _series(x, spec, signed=True).value
    if spec.branch == COSH:
        val = val * xi(x)
    if isinstance(n, (int, float, Fraction)):
        return complex(val).real
    return complex(val)


def ratio_identity_residual(n: float, spec: HyperbolicSeriesSpec | None = None) -> float:
    """|Phi(n)/Phi(-n) + f((n + 1/2) L)/f((n - 1/2) L)| with f = ch or sh."""
    spec = spec or HyperbolicSeriesSpec()
    lhs = phi_hyperbolic(n, spec) / phi_hyperbolic(-n, spec)
    rhs = -spec.f((n + 0.5) * spec.L) / spec.f((n - 0.5) * spec.L)
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# assembled sheet values

@dataclass
class SheetRow:
    nu: complex
    branch: str
    S1: complex | None
    S2: complex | None
    unitarity_residual: float | None
    crossing_residual: float | None
    note: str = ""

    def to_dict(self) -> dict:
        def c(v):
            return None if v is None else [v.real, v.imag]
        return {"n": [self.nu.real, self.nu.imag] if self.nu.imag else self.nu.real,
                "branch": self.branch, "S1": c(self.S1), "S2": c(self.S2),
                "unitarity_residual": self.unitarity_residual,
                "crossing_residual": self.crossing_residual, "note": self.note}


def _column(nu: complex, x0, spec: HyperbolicSeriesSpec, A: CrossingMatrix):
    X = flow_apply(induced_mobius(A), nu, x0)
    if X is None:
        raise PoleError(f"X is infinite at n = {nu}")
    phi = phi_hyperbolic(nu, spec)
    return complex(X) * phi, complex(phi)


def assemble_sheet_values(nus: Iterable, branch: str = COSH,
                          spec: HyperbolicSeriesSpec | None = None,
                          A: CrossingMatrix | None = None) -> list[SheetRow]:
    """S2 = Phi(nu), S1 = X(nu) Phi(nu) at continuous sheet argument nu.

    Residuals: unitarity max_i |S_i(nu) S_i(1 - nu) - 1| and crossing
    max_i |(A S(nu))_i - S_i(-nu)|.  Points hitting a pole are kept with a note.
    """
    A = A or reduced_two_row()
    spec = spec or HyperbolicSeriesSpec(branch)
    if spec.branch != branch:
        spec = HyperbolicSeriesSpec(branch, spec.L, spec.eps, spec.max_terms)
    x0 = BRANCH_X0[branch]
    (a11, a12), (a21, a22) = ((float(v) for v in r) for r in A.entries)
    rows = []
    for nu in nus:
        nu = complex(nu)
        try:
            s = _column(nu, x0, spec, A)
        except (PoleError, SingularTermError, ZeroDivisionError) as exc:
            rows.append(SheetRow(nu, branch, None, None, None, None, f"pole: {exc}"))
            continue
        note = ""
        try:
            u = _column(1 - nu, x0, spec, A)
            unit = max(abs(s[0] * u[0] - 1), abs(s[1] * u[1] - 1))
        except (PoleError, SingularTermError, ZeroDivisionError) as exc:
            unit, note = None, f"unitarity partner at pole: {exc}"
        try:
            c = _column(-nu, x0, spec, A)
            cross = max(abs(a11 * s[0] + a12 * s[1] - c[0]), abs(a21 * s[0] + a22 * s[1] - c[1]))
        except (PoleError, SingularTermError, ZeroDivisionError) as exc:
            cross, note = None, (note + "; " if note else "") + f"crossing partner at pole: {exc}"
        rows.append(SheetRow(nu, branch, s[0], s[1], unit, cross, note))
    return rows


SHEET_CSV_COLUMNS = ("n", "branch", "S1_re", "S1_im", "S2_re", "S2_im",
                     "unitarity_residual", "crossing_residual")


def sheet_rows_csv(rows: Sequence[SheetRow]) -> list[list[str]]:
    def num(v):
        return "nan" if v is None else f"{v:.17g}"
    out = []
    for r in rows:
        nu = f"{r.nu.real:.17g}" if r.nu.imag == 0 else f"{r.nu.real:.17g}{r.nu.imag:+.17g}j"
        out.append([nu, r.branch,
                    num(None if r.S1 is None else r.S1.real), num(None if r.S1 is None else r.S1.imag),
                    num(None if r.S2 is None else r.S2.real), num(None if r.S2 is None else r.S2.imag),
                    num(r.unitarity_residual), num(r.crossing_residual)])
    return out

"""Physical-sheet evaluation and residual checks of reflection, unitarity and crossing.

Branch convention: i sqrt(z^2 - 1) is taken as -sqrt(1 - z^2) with the
principal root, which maps the cut plane into the unit zeta-disk.  Boundary
values on the right cut are one-sided limits from above,
f(w + i0) ~ 2 f(w + i delta) - f(w + 2 i delta).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .crossing import CrossingMatrix, su2_two_row
from .scalars import get_tolerance

BOUNDARY_DELTA = 1e-8

Column = tuple  # of complex


class BranchPointError(ValueError):
    pass


class PoleError(ZeroDivisionError):
    """Evaluation at (or within the margin of) a pole; carries the location."""

    def __init__(self, z: complex, what: str = ""):
        self.z = z
        super().__init__(f"pole{(' of ' + what) if what else ''} at z = {z}")


class SpecError(ValueError):
    pass


def _root(z: complex, sign: int = 1) -> complex:
    """i sqrt(z^2 - 1), realized as -sign * sqrt(1 - z^2)."""
    return -sign * cmath.sqrt(1 - z * z)


def w_of_z(z: complex) -> complex:
    """arcsin(z)/pi with the principal branch."""
    z = complex(z)
    if z == 1 or z == -1:
        raise BranchPointError(f"w(z) has a branch point at z = {z.real:g}")
    return cmath.asin(z) / math.pi


def zeta_of_z(z: complex, sign: int = 1) -> complex:
    """(1 + i sqrt(z^2 - 1))/z; 0 at the origin, +-1 at the branch points."""
    z = complex(z)
    if z == 0:
        return 0j
    if z == 1 or z == -1:
        return z
    return (1 + _root(z, sign)) / z


# ---------------------------------------------------------------------------
# Blaschke products

def _matches(a: complex, b: complex, tol: float) -> bool:
    return abs(a - b) <= tol


@dataclass(frozen=True)
class BlaschkeSpec:
    """zeta^order prod_k |z_k|/z_k (z_k - zeta)/(1 - conj(z_k) zeta).

    The zero multiset must be closed under zeta -> -zeta and zeta -> conj(zeta);
    with an even order this makes D(-z) = D(z) and D(z*) = D(z)*.
    """

    order: int = 0
    zeros: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(complex(x) for x in self.zeros))
        self.validate()

    def validate(self, tol: float | None = None) -> None:
        tol = get_tolerance() if tol is None else tol
        if not isinstance(self.order, int) or self.order < 0:
            raise SpecError(f"order must be a non-negative integer, got {self.order!r}")
        if self.order % 2:
            raise SpecError("odd order breaks D(-z) = D(z)")
        for zk in self.zeros:
            if abs(zk) <= tol:
                raise SpecError("a zero at the origin belongs in the order, not the zero list")
            if abs(zk) >= 1 - tol:
                raise SpecError(f"zero {zk} is not inside the unit disk")
        for name, op in (("-zeta", lambda v: -v), ("conj(zeta)", lambda v: v.conjugate()),
                         ("-conj(zeta)", lambda v: -v.conjugate())):
            for zk in self.zeros:
                want = sum(_matches(zj, zk, tol) for zj in self.zeros)
                have = sum(_matches(zj, op(zk), tol) for zj in self.zeros)
                if have != want:
                    raise SpecError(f"zero {zk} has no symmetric partner {name} = {op(zk)}")

    def __call__(self, zeta: complex) -> complex:
        zeta = complex(zeta)
        out = zeta ** self.order if self.order else 1 + 0j
        for zk in self.zeros:
            out *= abs(zk) / zk * (zk - zeta) / (1 - zk.conjugate() * zeta)
        return out


TRIVIAL_BLASCHKE = BlaschkeSpec()


def blaschke_eval(spec: BlaschkeSpec, z: complex, sign: int = 1) -> complex:
    """D at zeta(z)."""
    return spec(zeta_of_z(z, sign))


# ---------------------------------------------------------------------------
# odd rational beta

@dataclass(frozen=True)
class OddRationalFn:
    """beta(z) = num(z)/den(z), real coefficients low to high, beta(-z) = -beta(z)."""

    num: tuple = ()
    den: tuple = (1.0,)

    def __post_init__(self):
        num = tuple(float(c) for c in self.num)
        den = tuple(float(c) for c in self.den)
        while num and num[-1] == 0:
            num = num[:-1]
        while den and den[-1] == 0:
            den = den[:-1]
        if not den:
            raise SpecError("denominator of beta must be nonzero")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        if num:
            pn = {k % 2 for k, c in enumerate(num) if c}
            pd = {k % 2 for k, c in enumerate(den) if c}
            if len(pn) != 1 or len(pd) != 1 or pn == pd:
                raise SpecError("beta must be odd: odd numerator over even denominator or vice versa")

    @property
    def is_zero(self) -> bool:
        return not self.num

    def __call__(self, z: complex) -> complex:
        if self.is_zero:
            return 0j
        z = complex(z)
        n = sum(c * z ** k for k, c in enumerate(self.num))
        d = sum(c * z ** k for k, c in enumerate(self.den))
        if d == 0:
            raise PoleError(z, "beta")
        return n / d


ZERO_BETA = OddRationalFn()


def n_of_z(z: complex, beta: OddRationalFn = ZERO_BETA, sign: int = 1) -> complex:
    """arcsin(z)/pi + i sqrt(z^2 - 1) beta(z): the sheet-index function."""
    z = complex(z)
    w = w_of_z(z)
    if beta.is_zero:
        return w
    return w + _root(z, sign) * beta(z)


def big_w(z: complex, beta: OddRationalFn = ZERO_BETA, sign: int = 1) -> complex:
    return n_of_z(z, beta, sign)


def sheet_argument(k: int, z: complex, beta: OddRationalFn = ZERO_BETA) -> complex:
    """Continuous sheet argument k + (-1)^k n(z) of sheet k at z."""
    return k + (-1) ** k * n_of_z(z, beta)


# ---------------------------------------------------------------------------
# the two-row solution

def two_row_column(W: complex, margin: float = 0.0) -> Column:
    """(W(W-2), W(W+1)) / (W^2 - 1); poles at W = +-1."""
    W = complex(W)
    if abs(W - 1) <= margin or abs(W + 1) <= margin or W * W == 1:
        raise PoleError(W, "S(W) (W = +-1)")
    d = W * W - 1
    return (W * (W - 2) / d, W * (W + 1) / d)


def two_row_ratio(W: complex) -> complex:
    """S1/S2 = (W - 2)/(W + 1), finite at W = 0 where both components vanish."""
    W = complex(W)
    if W == -1:
        raise PoleError(W, "ratio")
    return (W - 2) / (W + 1)


def s_two_row(z: complex, beta: OddRationalFn = ZERO_BETA,
              spec: BlaschkeSpec = TRIVIAL_BLASCHKE, sign: int = 1,
              margin: float = 0.0) -> Column:
    W = n_of_z(z, beta, sign)
    try:
        s1, s2 = two_row_column(W, margin)
    except PoleError as exc:
        raise PoleError(complex(z), "S (W = +-1)") from exc
    D = blaschke_eval(spec, z, sign)
    return (s1 * D, s2 * D)


# ---------------------------------------------------------------------------
# evaluators

Evaluator = Callable[[complex], Column]


def two_row_evaluator(beta: OddRationalFn = ZERO_BETA, spec: BlaschkeSpec = TRIVIAL_BLASCHKE,
                      margin: float = 1e-3) -> Evaluator:
    def ev(z):
        return s_two_row(z, beta, spec, margin=margin)
    return ev


def trivial_evaluator(spec: BlaschkeSpec = TRIVIAL_BLASCHKE, n: int = 2) -> Evaluator:
    """The column of identical Blaschke functions."""
    def ev(z):
        D = blaschke_eval(spec, z)
        return tuple(D for _ in range(n))
    return ev


def broken_evaluator(z: complex) -> Column:
    """(z, 1): violates crossing and unitarity; a negative control."""
    return (complex(z), 1 + 0j)


EVALUATORS = {"two-row": two_row_evaluator, "trivial": trivial_evaluator,
              "broken": lambda *a, **k: broken_evaluator}


# ---------------------------------------------------------------------------
# residual scans

@dataclass(frozen=True)
class GridSpec:
    re_min: float = -3.0
    re_max: float = 3.0
    im_min: float = -3.0
    im_max: float = 3.0
    nx: int = 200
    ny: int = 200
    delta: float = 1e-3

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise SpecError("grid needs at least 2 points per axis")
        if not (self.re_max > self.re_min and self.im_max > self.im_min):
            raise SpecError("empty grid rectangle")
        if not self.delta > 0:
            raise SpecError("cut margin delta must be positive")

    def xs(self) -> list[float]:
        return [self.re_min + (self.re_max - self.re_min) * i / (self.nx - 1) for i in range(self.nx)]

    def ys(self) -> list[float]:
        return [self.im_min + (self.im_max - self.im_min) * j / (self.ny - 1) for j in range(self.ny)]

    def cut_distance(self, z: complex) -> float:
        x, y = abs(z.real), abs(z.imag)
        return y if x >= 1 else math.hypot(x - 1, y)

    def points(self) -> list[complex]:
        """Grid points at distance >= delta from both cuts, in row-major index order."""
        out = []
        for y in self.ys():
            for x in self.xs():
                z = complex(x, y)
                if self.cut_distance(z) >= self.delta:
                    out.append(z)
        return out

    def boundary_omegas(self) -> list[float]:
        """Right-cut samples: grid abscissae in (1 + delta, re_max]."""
        return [x for x in self.xs() if x > 1 + self.delta]


@dataclass
class ResidualReport:
    condition: str
    max_residual: float
    at_z: complex | None
    samples: int
    skipped_near_poles: int

    def passes(self, tol: float) -> bool:
        return self.samples > 0 and self.max_residual < tol

    def to_dict(self) -> dict:
        return {"condition": self.condition, "max_residual": self.max_residual,
                "at_z": None if self.at_z is None else [self.at_z.real, self.at_z.imag],
                "samples": self.samples, "skipped_near_poles": self.skipped_near_poles}


@dataclass
class _Max:
    condition: str
    value: float = 0.0
    at: complex | None = None
    samples: int = 0
    skipped: int = 0

    def add(self, r: float, z: complex):
        self.samples += 1
        if math.isnan(r):
            r = math.inf
        if self.at is None or r > self.value:  # strict: first index wins ties
            self.value, self.at = r, z

    def report(self) -> ResidualReport:
        return ResidualReport(self.condition, self.value, self.at, self.samples, self.skipped)


def boundary_value(ev: Evaluator, omega: float, delta: float = BOUNDARY_DELTA) -> Column:
    """One-sided limit from above with a single Richardson step."""
    a = ev(complex(omega, delta))
    b = ev(complex(omega, 2 * delta))
    return tuple(2 * x - y for x, y in zip(a, b))


def _crossing(A: CrossingMatrix, s: Column) -> Column:
    m = [[complex(float(x)) for x in r] for r in A.entries]
    return tuple(sum(m[i][j] * s[j] for j in range(len(s))) for i in range(len(s)))


def condition_residuals(ev: Evaluator, A: CrossingMatrix | None = None,
                        grid: GridSpec | None = None) -> list[ResidualReport]:
    """Maximum residuals of reflection (1B), boundary unitarity (1C) and crossing (1D)."""
    A = A or su2_two_row(1)
    grid = grid or GridSpec()
    refl, unit, cross = _Max("1B"), _Max("1C"), _Max("1D")
    for z in grid.points():
        try:
            s = ev(z)
            sc = ev(z.conjugate())
            sm = ev(-z)
        except PoleError:
            refl.skipped += 1
            cross.skipped += 1
            continue
        if len(s) != A.n:
            raise SpecError(f"evaluator returns {len(s)} components, matrix is {A.n}x{A.n}")
        refl.add(max(abs(a - b.conjugate()) for a, b in zip(sc, s)), z)
        cross.add(max(abs(a - b) for a, b in zip(sm, _crossing(A, s))), z)
    for omega in grid.boundary_omegas():
        try:
            s = boundary_value(ev, omega)
        except PoleError:
            unit.skipped += 1
            continue
        unit.add(max(abs(abs(x) - 1) for x in s), complex(omega, 0))
    return [refl.report(), unit.report(), cross.report()]


def shift_identity_residual(z: complex, A: CrossingMatrix | None = None,
                            beta: OddRationalFn = ZERO_BETA) -> float:
    """max_i |(I A S(W))_i - S_i(W + 1)| for the two-row solution with D = 1."""
    from .dynamics import SheetColumn, continue_sheet
    A = A or su2_two_row(1)
    W = n_of_z(z, beta)
    S0 = SheetColumn(two_row_column(W), 0, complex(z))
    S1 = continue_sheet(S0, A, 1)
    target = two_row_column(W + 1)
    return max(abs(complex(a) - b) for a, b in zip(S1.values, target))


def sample_points(count: int, seed: int = 0, radius: float = 2.5,
                  grid: GridSpec | None = None) -> list[complex]:
    """Deterministic pseudo-random points off the cuts."""
    import random
    rng = random.Random(seed)
    grid = grid or GridSpec()
    out = []
    while len(out) < count:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if grid.cut_distance(z) >= grid.delta:
            out.append(z)
    return out

"""Invariant varieties of the sheet dynamics in projective space.

Polynomials are :class:`~staticdisp.polynomials.Poly` values over the
coordinates ``x0 .. xm``; parameters such as ``c0, c1`` are extra variables.
A collineation L acts by composition, F -> F(L x); the inversion I_p acts by
the monomial substitution x_i -> prod_{j != i} x_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Callable, Sequence

from .crossing import CrossingMatrix, charpoly, exact_roots, extend_block, three_row_p33
from .matrices import Matrix, det, identity, mat_scale, mat_sub, nullspace, to_matrix, transpose
from .polynomials import (Poly, PolynomialError, RatFunc, UPoly, parse_poly, resultant,
                          upoly_gcd)
from .scalars import QuadNum, format_exact

HomPoly = Poly

__all__ = [
    "CONIC_TWO_ROW", "SacBasis", "PlaneFamily", "InvarianceResult", "Factorization",
    "InvarianceSolution", "act_linear", "act_inversion", "is_invariant_hypersurface",
    "invariant_planes", "restrict_to_rest_point", "eliminate_linear", "resultant",
    "solve_invariance_params", "factor_low_degree", "ratio_from_conic",
    "bundle_second_intersection", "bundle_parameter", "coords", "curve_certificate",
    "odd_even_parts", "normalize_params", "params_equal", "EliminationError",
    "AmbiguousBranchError", "TangentLineError", "HomPoly", "two_row_invariant",
]

# invariant conic of the l = 1 two-row problem in P_2
CONIC_TWO_ROW = parse_poly("x1^2 + 2*x0*x1 - 2*x1*x2 - x0*x2", ["x0", "x1", "x2"])


class EliminationError(PolynomialError):
    pass


class AmbiguousBranchError(PolynomialError):
    """Solving the conic needs a square root (the polynomial is not linear in the unknown)."""


class TangentLineError(ZeroDivisionError):
    """The bundle line meets the conic only once in the affine chart."""


def coords(n: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


def _coord_vars(F: Poly, variables: Sequence[str] | None) -> tuple[str, ...]:
    if variables is not None:
        return tuple(variables)
    xs = tuple(v for v in F.vars if v.startswith("x"))
    if not xs:
        raise PolynomialError("cannot tell coordinates from parameters; pass variables")
    return xs


# ---------------------------------------------------------------------------
# actions

def act_linear(F: Poly, L, variables: Sequence[str] | None = None) -> Poly:
    """F(L x): each coordinate x_i replaced by sum_j L_ij x_j."""
    m = to_matrix(L.entries if isinstance(L, CrossingMatrix) else L)
    xs = _coord_vars(F, variables)
    if len(m) != len(xs) or any(len(r) != len(xs) for r in m):
        raise ValueError(f"collineation is {len(m)}x{len(m[0])}, polynomial has {len(xs)} coordinates")
    if det(m) == 0:
        raise ValueError("collineation must be invertible")
    allv = tuple(F.vars) + tuple(v for v in xs if v not in F.vars)
    F = F.with_vars(allv)
    images = {x: Poly.linear(row, xs).with_vars(allv) for x, row in zip(xs, m)}
    return F.subs(images).with_vars(allv)


def act_inversion(F: Poly, variables: Sequence[str] | None = None) -> Poly:
    """F with x_i -> prod_{j != i} x_j (the projective form of S -> 1/S)."""
    xs = _coord_vars(F, variables)
    if len(xs) < 3:
        raise ValueError("I_p needs at least three homogeneous coordinates")
    allv = tuple(F.vars) + tuple(v for v in xs if v not in F.vars)
    F = F.with_vars(allv)
    images = {}
    for x in xs:
        e = tuple(int(v in xs and v != x) for v in allv)
        images[x] = Poly(allv, {e: 1})
    return F.subs(images).with_vars(allv)


@dataclass
class InvarianceResult:
    invariant: bool
    cofactor: Poly | None

    def __bool__(self):
        return self.invariant


def is_invariant_hypersurface(F: Poly, T: Callable[[Poly], Poly] | Poly) -> InvarianceResult:
    """F | T(F) exactly; ``T`` is a transformation or the already transformed polynomial."""
    image = T if isinstance(T, Poly) else T(F)
    if F.is_zero():
        raise PolynomialError("zero polynomial defines no hypersurface")
    q, r = image.divmod(F)
    if r.is_zero():
        return InvarianceResult(True, q)
    return InvarianceResult(False, None)


# ---------------------------------------------------------------------------
# s/a/c basis

@dataclass(frozen=True)
class SacBasis:
    """x = B (s..., a...): symmetric and antisymmetric coordinates under crossing.

    The default is the two-row basis x0 = s - 2a, x1 = s + a, x2 = c.
    """

    matrix: Matrix = ((1, -2, 0), (1, 1, 0), (0, 0, 1))
    coords: tuple = ("x0", "x1", "x2")
    basis: tuple = ("s", "a", "c")
    odd: tuple = ("a",)

    def __post_init__(self):
        object.__setattr__(self, "matrix", to_matrix(self.matrix))
        if det(self.matrix) == 0:
            raise ValueError("basis change must be invertible")

    @classmethod
    def from_crossing(cls, A: CrossingMatrix) -> SacBasis:
        """Eigenvectors of A as columns: +1 gives symmetric s_j, -1 antisymmetric a_j."""
        from .crossing import eigen
        ed = eigen(A)
        cols, names, odd = [], [], []
        ns = na = 0
        for lam, v in ed.pairs():
            cols.append(v)
            if lam == 1:
                ns += 1
                names.append(f"s{ns}")
            else:
                na += 1
                names.append(f"a{na}")
                odd.append(names[-1])
        return cls(transpose(tuple(cols)), coords(A.n), tuple(names), tuple(odd))

    def to_basis(self, F: Poly) -> Poly:
        """F written in the symmetric/antisymmetric coordinates."""
        images = {x: Poly.linear(row, self.basis) for x, row in zip(self.coords, self.matrix)}
        return F.with_vars(tuple(F.vars) + tuple(v for v in self.coords if v not in F.vars)) \
            .subs(images)

    def from_basis(self, G: Poly) -> Poly:
        inv = _inverse(self.matrix)
        images = {b: Poly.linear(row, self.coords) for b, row in zip(self.basis, inv)}
        return G.subs(images)


def _inverse(m: Matrix) -> Matrix:
    from .matrices import inverse
    return inverse(m)


def odd_even_parts(G: Poly, odd: Sequence[str] = ("a",)) -> tuple[Poly, Poly]:
    """(odd part, even part) of G under the sign flip of the ``odd`` variables."""
    idx = [G.vars.index(v) for v in odd if v in G.vars]
    ev, od = {}, {}
    for e, c in G.terms.items():
        (od if sum(e[i] for i in idx) % 2 else ev)[e] = c
    return Poly(G.vars, od), Poly(G.vars, ev)


# ---------------------------------------------------------------------------
# planes and the three-row pipeline

@dataclass
class PlaneFamily:
    """Linear forms sum_k c_k v_k . x, all carried into mu times themselves."""

    mu: object
    plane: Poly
    params: tuple[str, ...]
    vectors: list[tuple]

    def at(self, values: dict) -> Poly:
        return self.plane.subs({p: Fraction(values[p]) for p in self.params if p in values})


def _linear_form(vec: Sequence, xs: Sequence[str], weight: Poly) -> Poly:
    out = None
    for c, name in zip(vec, xs):
        if c != 0:
            t = Poly.var(name, weight.vars) * weight * Fraction(c)
            out = t if out is None else out + t
    return out if out is not None else Poly(weight.vars)


def invariant_planes(A, variables: Sequence[str] | None = None,
                     param_prefix: str = "c") -> list[PlaneFamily]:
    """Planes c . x = 0 with c . (A x) = mu c . x, one family per eigenvalue mu.

    Pivots are taken from the right, so the leading coefficients stay free and
    carry the parameters c0, c1, ... in order.
    """
    m = to_matrix(A.entries if isinstance(A, CrossingMatrix) else A)
    n = len(m)
    xs = tuple(variables) if variables else coords(n)
    mus = []
    for r in exact_roots(charpoly(m)):
        if r not in mus:
            mus.append(r)
    order = list(range(n - 1, -1, -1))
    out = []
    for mu in sorted(mus, key=lambda v: -float(v)):
        if isinstance(mu, QuadNum):
            continue  # planes with irrational coefficients are outside Q[x]
        basis = nullspace(mat_sub(transpose(m), mat_scale(mu, identity(n))), order)
        basis.reverse()  # free columns in ascending order
        params = tuple(f"{param_prefix}{k}" for k in range(len(basis)))
        allv = xs + params
        plane = Poly(allv)
        for p, v in zip(params, basis):
            plane = plane + _linear_form(v, xs, Poly.var(p, allv))
        out.append(PlaneFamily(mu, plane, params, basis))
    return out


def restrict_to_rest_point(family: PlaneFamily, point: Sequence | None = None,
                           solve_for: str | None = None) -> Poly:
    """Force the plane through ``point`` (default all ones) by solving for one parameter."""
    xs = tuple(v for v in family.plane.vars if v not in family.params)
    point = tuple(Fraction(x) for x in (point or [1] * len(xs)))
    cond = family.plane.subs(dict(zip(xs, point)))
    target = solve_for or next(p for p in reversed(family.params) if cond.degree(p) == 1)
    k = cond.coeff_list(target)
    if len(k) < 2 or not k[1].is_constant() or k[1].constant_value() == 0:
        raise EliminationError(f"cannot solve the incidence condition for {target}")
    value = -k[0] * (1 / k[1].constant_value())
    rest = tuple(v for v in family.plane.vars if v != target)
    return family.plane.subs({target: value.with_vars(rest)}).with_vars(rest)


def eliminate_linear(plane: Poly, surface: Poly, var: str) -> Poly:
    """Substitute ``var`` from the plane into the surface and clear the denominator.

    With plane = k var + r the result is sum_e s_e (-r)^e k^(d-e), rational
    content removed.
    """
    plane, surface = plane._unify(surface)
    cl = plane.coeff_list(var)
    if len(cl) != 2 or cl[1].is_zero():
        raise EliminationError(f"plane has no linear {var} term to eliminate")
    rest_vars = tuple(v for v in plane.vars if v != var)
    k, r = cl[1].with_vars(rest_vars), cl[0].with_vars(rest_vars)
    sc = surface.coeff_list(var)
    d = len(sc) - 1
    out = Poly(rest_vars)
    for e, s in enumerate(sc):
        out = out + s.with_vars(rest_vars) * (-r) ** e * k ** (d - e)
    return out.primitive() if not out.is_zero() else out


def _rational_linear_factor_candidates(F: Poly, xs: Sequence[str]) -> list[Poly]:
    """Linear forms x_i - sum_{j>i} p_j x_j whose coefficients are forced rational
    roots of F restricted to coordinate lines."""
    other = [v for v in F.vars if v not in xs]
    if other:
        raise PolynomialError("factorization needs a polynomial in the coordinates only")
    n = len(xs)
    cands = []
    for i in range(n):
        opts = []
        for j in range(i + 1, n):
            vals = {v: Fraction(0) for v in xs}
            vals[xs[j]] = Fraction(1)
            coeffs = []
            for e, c in F.terms.items():
                if all(e[F.vars.index(v)] == 0 for v in xs if v not in (xs[i], xs[j])):
                    coeffs.append((e[F.vars.index(xs[i])], c))
            deg = max((d for d, _ in coeffs), default=-1)
            up = [Fraction(0)] * (deg + 1)
            for dd, c in coeffs:
                up[dd] += c
            u = UPoly(up)
            if u.is_zero():
                opts.append(None)  # restriction vanishes; coefficient unconstrained
            else:
                opts.append([Fraction(0)] + [r for r in u.rational_roots() if r != 0])
        if any(o is None for o in opts):
            continue
        combos = [[]]
        for o in opts:
            combos = [c + [p] for c in combos for p in o]
        for combo in combos:
            vec = [Fraction(0)] * n
            vec[i] = Fraction(1)
            for j, p in zip(range(i + 1, n), combo):
                vec[j] = -p
            cands.append(Poly.linear(vec, xs).with_vars(F.vars))
    return cands


@dataclass
class Factorization:
    constant: Fraction
    factors: list[Poly]            # linear factors then the remaining cofactor
    irreducible: Poly | None       # cofactor without rational linear factors (None if 1)

    def expand(self) -> Poly:
        out = None
        for f in self.factors:
            out = f if out is None else out * f
        if out is None:
            raise PolynomialError("empty factorization")
        return out * self.constant

    def format(self) -> str:
        body = "*".join(f"({f.format()})" for f in self.factors)
        return body if self.constant == 1 else f"{format_exact(self.constant)}*{body}"


def factor_low_degree(F: Poly, variables: Sequence[str] | None = None) -> Factorization:
    """Split off rational linear factors of a form of degree <= 3.

    In three variables a linear factor x_i - p x_j - q x_k forces p and q to
    be rational roots of F on coordinate lines, so the candidate list is
    complete; what remains has no linear factor and is irreducible over Q.
    """
    xs = tuple(variables) if variables else tuple(F.used_vars())
    if F.is_zero():
        raise PolynomialError("cannot factor the zero polynomial")
    if F.total_degree() > 3:
        raise PolynomialError("factor_low_degree handles degree <= 3")
    const = F.content() * (1 if F.primitive(positive_lead=False) == F.primitive() else -1)
    rest = F * (1 / const)
    linear = []
    progress = True
    while progress and rest.total_degree() > 1:
        progress = False
        for x in xs:
            v = Poly.var(x, rest.vars)
            q, r = rest.divmod(v)
            if r.is_zero():
                linear.append(v)
                rest, progress = q, True
                break
        if progress:
            continue
        for cand in _rational_linear_factor_candidates(rest, xs):
            q, r = rest.divmod(cand)
            if r.is_zero():
                cp = cand.primitive()
                linear.append(cp)
                rest = rest.exact_div(cp)
                progress = True
                break
    if rest.total_degree() == 0:
        const *= rest.constant_value()
        return Factorization(const, linear, None)
    c = rest.content() * (1 if rest.primitive(positive_lead=False) == rest.primitive() else -1)
    rest = rest * (1 / c)
    const *= c
    if rest.total_degree() == 1:
        return Factorization(const, linear + [rest], None)
    return Factorization(const, [rest] + linear, rest)


@dataclass
class ParamCandidate:
    params: tuple[Fraction, Fraction]
    G: Poly
    factorization: Factorization
    kind: str

    def to_dict(self) -> dict:
        return {"c0": format_exact(self.params[0]), "c1": format_exact(self.params[1]),
                "G": self.G.format(), "factors": self.factorization.format(),
                "kind": self.kind}


@dataclass
class InvarianceSolution:
    plane: Poly
    surface: Poly
    G: Poly
    resultant: Poly
    gcd_in_t: UPoly | None
    candidates: list[ParamCandidate] = field(default_factory=list)
    solutions: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    identically_zero: bool = False

    def to_dict(self) -> dict:
        return {
            "plane": self.plane.format(), "surface": self.surface.format(), "G": self.G.format(),
            "resultant_identically_zero": self.identically_zero,
            "gcd_in_t": self.gcd_in_t.format("t") if self.gcd_in_t is not None else None,
            "candidates": [c.to_dict() for c in self.candidates],
            "solutions": [{"c0": format_exact(a), "c1": format_exact(b)} for a, b in self.solutions],
        }


def normalize_params(c0, c1) -> tuple[Fraction, Fraction]:
    """Projective pair as coprime integers, first nonzero of (c1, c0) positive."""
    c0, c1 = Fraction(c0), Fraction(c1)
    if c0 == 0 and c1 == 0:
        raise ValueError("(0 : 0) is not a parameter ratio")
    den = reduce(lambda a, b: a * b // gcd(a, b), [c0.denominator, c1.denominator])
    a, b = int(c0 * den), int(c1 * den)
    g = gcd(a, b)
    a, b = a // g, b // g
    if (b < 0) or (b == 0 and a < 0):
        a, b = -a, -b
    return Fraction(a), Fraction(b)


def params_equal(p, q) -> bool:
    return Fraction(p[0]) * Fraction(q[1]) == Fraction(p[1]) * Fraction(q[0])


def _classify(f: Factorization) -> str:
    degs = sorted(g.total_degree() for g in f.factors)
    squarefree = len({g.primitive() for g in f.factors}) == len(f.factors)
    if not squarefree:
        return "repeated factor"
    if f.irreducible is not None and f.irreducible.total_degree() == 2:
        return "conic and line"
    if degs == [1, 1, 1]:
        return "three lines"
    if f.irreducible is not None and f.irreducible.total_degree() == 3:
        return "irreducible cubic"
    return "other"


def solve_invariance_params(A: CrossingMatrix | None = None, plane: Poly | None = None,
                            rest_point: Sequence | None = None) -> InvarianceSolution:
    """Parameters (c0 : c1) for which the planar cubic G is reducible.

    Pipeline: invariant plane of diag(A, 1) through the rest point, its I_p
    image, elimination of x3, and the resultant R_x0(G, dG/dx1).  R vanishes
    identically exactly when G has a repeated factor as a polynomial in x0;
    its coefficients are forms in (c0, c1), and their common roots come from
    a GCD in t = c1/c0 plus a separate check of c0 = 0.  All roots are
    reported as candidates; those where G is a squarefree product of an
    irreducible conic and a line are returned as solutions.
    """
    A = A or three_row_p33()
    B = extend_block(A) if A.n == 3 else A
    xs = coords(B.n)
    if plane is None:
        fam = next(f for f in invariant_planes(B, xs) if f.mu == 1)
        plane = restrict_to_rest_point(fam, rest_point)
    last = xs[-1]
    surface = act_inversion(plane, xs)
    G = eliminate_linear(plane, surface, last)
    R = resultant(G, G.diff("x1"), "x0") if G.degree("x0") >= 1 else Poly(G.vars)
    params = [p for p in ("c0", "c1") if p in G.used_vars()]
    sol = InvarianceSolution(plane, surface, G, R, None)
    if not params:
        sol.identically_zero = R.is_zero()
        return sol
    cvars = ("c0", "c1")
    xrest = [v for v in R.vars if v not in cvars]
    coeff_polys = [c.with_vars(cvars) for c in R.coefficients(xrest).values()] \
        if not R.is_zero() else []
    sol.identically_zero = R.is_zero()
    roots: list[tuple[Fraction, Fraction]] = []
    if coeff_polys:
        # t = c1/c0 with c0 = 1
        g = UPoly([0])
        for cp in coeff_polys:
            acc = [Fraction(0)] * (cp.total_degree() + 1)
            for e, c in cp.terms.items():
                acc[e[1]] += c
            u = UPoly(acc)
            g = u if g.is_zero() else upoly_gcd(g, u)
        sol.gcd_in_t = g
        roots = [(Fraction(1), t) for t in g.rational_roots()] if g.degree >= 1 else []
        if all(cp.subs({"c0": 0, "c1": 1}).is_zero() for cp in coeff_polys):
            roots.append((Fraction(0), Fraction(1)))
    for c0, c1 in roots:
        c0, c1 = normalize_params(c0, c1)
        Gp = G.subs({"c0": c0, "c1": c1}).with_vars(tuple(v for v in G.vars if v not in cvars))
        if Gp.is_zero():
            continue
        Gp = Gp.primitive()
        fac = factor_low_degree(Gp, [v for v in xs if v != last])
        cand = ParamCandidate((c0, c1), Gp, fac, _classify(fac))
        sol.candidates.append(cand)
        if cand.kind == "conic and line":
            sol.solutions.append((c0, c1))
    return sol


# ---------------------------------------------------------------------------
# conic parametrizations

def ratio_from_conic(F: Poly, X, ratio: tuple[str, str] = ("x0", "x1"),
                     unknown: str = "x2"):
    """x1/x2 on the conic F = 0 given X = x0/x1 (any field element, e.g. a RatFunc).

    F must be linear in ``unknown``; otherwise the branch is ambiguous.
    """
    num, den = ratio
    cl = F.coeff_list(unknown)
    if len(cl) > 2:
        raise AmbiguousBranchError(f"conic is of degree {len(cl) - 1} in {unknown}")
    if len(cl) < 2 or cl[1].is_zero():
        raise PolynomialError(f"conic does not involve {unknown}")
    vals = {num: X, den: Fraction(1)}
    alpha = cl[0].evaluate(vals)
    beta = cl[1].evaluate(vals)
    # alpha + beta*x2 = 0 with x1 = 1, so x1/x2 = -beta/alpha
    if alpha == 0:
        raise ZeroDivisionError("x2 = 0 at this point; the ratio is infinite")
    return -beta / alpha


def _affine(F: Poly, chart: tuple[str, str, str], x, y):
    cx, cy, cz = chart
    return F.evaluate({cx: x, cy: y, cz: Fraction(1)})


def bundle_second_intersection(F: Poly, base: tuple, k, chart: tuple[str, str, str] = ("x1", "x0", "x2")):
    """Second point where the line y - y0 = k (x - x0) meets the conic F = 0.

    The affine chart is x = chart[0]/chart[2], y = chart[1]/chart[2]; the
    default matches the two-row conic, where it reads x^2 + 2xy - 2x - y = 0.
    ``k`` may be a number or a RatFunc in the sheet index.
    """
    x0, y0 = (Fraction(base[0]), Fraction(base[1]))
    if _affine(F, chart, x0, y0) != 0:
        raise ValueError(f"base point {base} is not on the conic")

    def q(x):
        return _affine(F, chart, x, y0 + k * (x - x0))

    c = q(Fraction(0))
    qp, qm = q(Fraction(1)), q(Fraction(-1))
    a = (qp + qm) / 2 - c
    b = (qp - qm) / 2
    if a == 0:
        raise TangentLineError("line meets the conic at infinity (leading coefficient vanishes)")
    x = -b / a - x0
    return x, y0 + k * (x - x0)


def bundle_parameter(base: tuple, n=None):
    """k(n) = ((1 - x0 - 2 y0) n + x0 + 2 y0 - 2) / (n + 1) for the two-row conic.

    With ``n`` omitted the result is a RatFunc in n.
    """
    x0, y0 = Fraction(base[0]), Fraction(base[1])
    s = x0 + 2 * y0
    if n is None:
        return RatFunc(UPoly([s - 2, 1 - s]), UPoly([1, 1]))
    n = Fraction(n)
    if n == -1:
        raise ZeroDivisionError("k(n) has a pole at n = -1")
    return ((1 - s) * n + s - 2) / (n + 1)


# ---------------------------------------------------------------------------
# curves of codimension two

@dataclass
class CurveCertificate:
    transform: str
    plane_ok: bool
    surface_ok: bool
    detail: dict

    @property
    def invariant(self) -> bool:
        return self.plane_ok and self.surface_ok


def curve_certificate(plane: Poly, surface: Poly, transform: Callable[[Poly], Poly],
                      name: str, var: str = "x3") -> CurveCertificate:
    """Invariance of {plane = 0} cap {surface = 0} under ``transform``.

    Both images are restricted to the plane by eliminating ``var`` and tested
    for divisibility by the surface, which is itself free of ``var``.
    """
    if surface.degree(var) > 0:
        raise EliminationError(f"surface must not involve {var}")
    checks = {}
    for label, P in (("plane", plane), ("surface", surface)):
        img = transform(P)
        if img.degree(var) > 0:
            red = eliminate_linear(plane, img, var)
        else:
            red = img
        ok = red.is_zero() or is_invariant_hypersurface(surface.with_vars(red.vars)
                                                         if set(surface.vars) <= set(red.vars)
                                                         else surface, red).invariant
        checks[label] = (ok, red)
    return CurveCertificate(name, checks["plane"][0], checks["surface"][0],
                            {k: v[1].format() for k, v in checks.items()})


def two_row_invariant(l: int) -> Poly:
    """Degree l+1 form obtained by eliminating n between X = x0/x1 = (n-l-1)/(n+l)
    and x1/x2 = phi(n) of the parabolic family; l = 1 gives CONIC_TWO_ROW."""
    from .functional import solve_parabolic_family
    phi = solve_parabolic_family(l)
    xs = ("x0", "x1", "x2")
    x0, x1, x2 = Poly.variables(*xs)
    num_n = x1 * (l + 1) + x0 * l  # n = num_n / den_n
    den_n = x1 - x0

    def homogenize(p: UPoly) -> Poly:
        out = Poly(xs)
        for k, c in enumerate(p.c):
            out = out + num_n ** k * den_n ** (l - k) * c
        return out

    form = x1 * homogenize(phi.den) - x2 * homogenize(phi.num)
    return form.primitive()

"""Ternary cubics: determinants of quadric nets, nodes, inflection lines.

The cubics live in projective coordinates (lam, mu, nu).  The scanned
family has the node shape

    F = lam * q(mu, nu) + c(mu, nu),      q = tangent cone at [1,0,0],

with q proportional to mu^2 + nu^2.  The binary cubic through the three
inflection points is computed by eliminating lam from {F = 0, Hess F = 0}
with a Sylvester resultant, stripping the tangent-cone factor, and
projecting onto the harmonic complement of (mu^2+nu^2)*(linear); for a
node-shaped input the non-harmonic component vanishes identically, and
the elimination carries one universal constant which is divided out so
the result is exact, not just exact-up-to-scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .graded import QuadricSystem
from .poly import HomPoly
from .univar import (
    UPoly,
    bf_divide_exact,
    bf_gcd,
    bf_is_zero,
    bf_rational_proj_roots,
    is_rational_square,
    rational_roots,
    up_gcd,
    up_trim,
)

VAR_NAMES = ("lam", "mu", "nu")

# Res_lam(F, Hess F) = _RESULTANT_SCALE * (mu^2+nu^2) * (inflection cubic)
# for every node-shaped cubic normalized to tangent cone -(mu^2+nu^2).
_RESULTANT_SCALE = Fraction(8)


class TernaryCubic:
    """A homogeneous cubic in (lam, mu, nu) with exact coefficients."""

    __slots__ = ("poly",)

    def __init__(self, poly: HomPoly):
        if poly.nvars != 3 or poly.weight != 3:
            raise ValueError("need a homogeneous cubic in three variables")
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, *_):
        raise AttributeError("TernaryCubic is immutable")

    @classmethod
    def from_coefficients(cls, coeffs) -> "TernaryCubic":
        return cls(HomPoly(3, 3, coeffs))

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        return self.poly.coefficient((i, j, k))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, TernaryCubic) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def scale(self, c) -> "TernaryCubic":
        return TernaryCubic(self.poly.scale(c))

    def substitute(self, matrix) -> "TernaryCubic":
        return TernaryCubic(self.poly.substitute(matrix))

    def partials(self) -> list[HomPoly]:
        return [self.poly.partial(i) for i in range(3)]

    def hessian(self) -> "TernaryCubic":
        second = [
            [self.poly.partial(i).partial(j) for j in range(3)] for i in range(3)
        ]
        return TernaryCubic(_poly_det(second))

    def evaluate(self, point) -> Fraction:
        return self.poly.evaluate(point)

    def is_node_shape(self) -> bool:
        """True when F = lam * q(mu,nu) + c(mu,nu): no lam^2 or lam^3 terms."""
        return all(e[0] <= 1 for e in self.poly.coeffs)

    def lam_coefficient_form(self) -> tuple[Fraction, Fraction, Fraction]:
        """(A, B, C) with the lam part equal to lam*(A mu^2 + B mu nu + C nu^2)."""
        return (
            self.coefficient(1, 2, 0),
            self.coefficient(1, 1, 1),
            self.coefficient(1, 0, 2),
        )

    def cubic_part(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Coefficients of (mu^3, mu^2 nu, mu nu^2, nu^3) in the lam-free part."""
        return (
            self.coefficient(0, 3, 0),
            self.coefficient(0, 2, 1),
            self.coefficient(0, 1, 2),
            self.coefficient(0, 0, 3),
        )

    def to_str(self) -> str:
        return self.poly.to_str(VAR_NAMES)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"TernaryCubic({self.to_str()!r})"


def _poly_det(mat: list[list[HomPoly]]) -> HomPoly:
    """Determinant of a small matrix of homogeneous polynomials."""
    n = len(mat)
    nvars = mat[0][0].nvars
    total: HomPoly | None = None
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = mat[0][perm[0]]
        for i in range(1, n):
            term = term * mat[i][perm[i]]
        if term.is_zero():
            continue
        term = term.scale(sign)
        total = term if total is None else total + term
    return total if total is not None else HomPoly.zero(nvars, 0)


def det_cubic(net: QuadricSystem) -> TernaryCubic:
    """det(lam*G1 + mu*G2 + nu*G3) for a net of quadrics on a 3-space."""
    if net.ambient_dim != 3 or net.dim != 3:
        raise ValueError("need a 3-dimensional net of quadrics on a 3-space")
    g1, g2, g3 = net.basis
    entries = [
        [
            HomPoly.linear([g1[i][j], g2[i][j], g3[i][j]])
            for j in range(3)
        ]
        for i in range(3)
    ]
    return TernaryCubic(_poly_det(entries))


# ---------------------------------------------------------------------------
# Resultant elimination
# ---------------------------------------------------------------------------


def _binary_coeff_form(p: HomPoly, vars_pair: tuple[int, int]) -> list[Fraction]:
    """A polynomial in two of the variables as a binary coefficient list."""
    s, t = vars_pair
    d = p.weight
    out = [Fraction(0)] * (d + 1)
    for e, c in p.coeffs.items():
        out[e[t]] += c
    return out


def resultant_in_var(f: HomPoly, g: HomPoly, var: int) -> list[Fraction]:
    """Res_var(f, g) as a binary form in the two remaining variables.

    Uses the Sylvester determinant at the actual degrees in ``var``; if a
    polynomial does not involve ``var`` the usual degenerate conventions
    apply (Res(c, g) = c^deg(g), Res of two constants = 1).
    """
    rest = tuple(i for i in range(3) if i != var)
    cf = f.coefficients_in_var(var)
    cg = g.coefficients_in_var(var)
    df = max(cf) if cf else 0
    dg = max(cg) if cg else 0
    zero = HomPoly.zero(3, 0)

    def coeff(table, k):
        return table.get(k, zero)

    if df == 0 and dg == 0:
        return [Fraction(1)]
    if df == 0:
        base = coeff(cf, 0)
        out = base
        for _ in range(dg - 1):
            out = out * base
        return _binary_coeff_form(out, rest)
    if dg == 0:
        base = coeff(cg, 0)
        out = base
        for _ in range(df - 1):
            out = out * base
        return _binary_coeff_form(out, rest)

    size = df + dg
    rows: list[list[HomPoly]] = []
    for shift in range(dg):
        row = [zero] * size
        for k in range(df + 1):
            row[shift + df - k] = coeff(cf, k)
        rows.append(row)
    for shift in range(df):
        row = [zero] * size
        for k in range(dg + 1):
            row[shift + dg - k] = coeff(cg, k)
        rows.append(row)
    det = _poly_det(rows)
    return _binary_coeff_form(det, rest)


# ---------------------------------------------------------------------------
# Singular points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularLocus:
    """Rational singular points, with a completeness certificate.

    ``complete`` is True when the list provably contains every rational
    singular point; otherwise only a bounded search ran ("search
    exhausted" rather than "no rational singular point proven").
    """

    points: tuple[tuple[int, int, int], ...]
    complete: bool
    method: str


def _normalize_point(coords: Sequence[Fraction]) -> tuple[int, int, int]:
    from math import gcd

    den = 1
    for c in coords:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coords]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)  # type: ignore[return-value]


def _is_singular_at(partials: list[HomPoly], point) -> bool:
    return all(p.evaluate(point) == 0 for p in partials)


def _lam_slice(p: HomPoly, mu0: int, nu0: int) -> UPoly:
    """p(lam, mu0, nu0) as a univariate polynomial in lam."""
    out: dict[int, Fraction] = {}
    for e, c in p.coeffs.items():
        out[e[0]] = out.get(e[0], Fraction(0)) + c * Fraction(mu0) ** e[1] * Fraction(
            nu0
        ) ** e[2]
    size = max(out) + 1 if out else 0
    return up_trim([out.get(i, Fraction(0)) for i in range(size)])


def singular_points(
    F: TernaryCubic, search_height: int = 50
) -> SingularLocus:
    """All rational projective singular points of a nonzero cubic.

    For the scanned family (node shape with definite tangent cone) the
    answer is closed-form.  Otherwise lam is eliminated from the three
    partials by pairwise resultants; the gcd of the eliminants has
    finitely many rational roots, each checked exactly, which certifies
    completeness.  If every eliminant degenerates to zero the locus may
    be positive-dimensional and a bounded search of directions with
    coordinates up to ``search_height`` runs instead (not a proof).
    """
    if F.is_zero():
        raise ValueError("the zero cubic is singular everywhere")
    partials = F.partials()

    if F.is_node_shape():
        A, B, C = F.lam_coefficient_form()
        disc = B * B - 4 * A * C
        if A != 0 and is_rational_square(disc) is None:
            # the tangent cone has no rational zero directions, and a
            # singular point of lam*q + c must kill q, so [1,0,0] is all
            pts = []
            if _is_singular_at(partials, (1, 0, 0)):
                pts.append((1, 0, 0))
            return SingularLocus(tuple(pts), True, "family-closed-form")

    # a singular point with (mu,nu) != (0,0) zeroes every pairwise
    # eliminant, so the gcd of the nonzero ones carries all candidates
    resultants = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if partials[i].is_zero() or partials[j].is_zero():
            continue
        r = resultant_in_var(partials[i], partials[j], 0)
        if not bf_is_zero(r):
            resultants.append(r)

    if not resultants:
        return _bounded_search(F, partials, search_height)

    g = resultants[0]
    for r in resultants[1:]:
        g = bf_gcd(g, r)
    points: list[tuple[int, int, int]] = []
    complete = True
    if _is_singular_at(partials, (1, 0, 0)):
        points.append((1, 0, 0))
    candidates = bf_rational_proj_roots(g) if len(g) > 1 else []
    for mu0, nu0 in candidates:
        slices = [_lam_slice(p, mu0, nu0) for p in partials]
        nonzero = [s for s in slices if s]
        if not nonzero:
            # the whole line of directions (mu0:nu0) is singular
            complete = False
            continue
        common = nonzero[0]
        for s in nonzero[1:]:
            common = up_gcd(common, s)
        if not common:
            complete = False
            continue
        if len(common) == 1:
            continue  # no common lam at this direction
        for lam0 in rational_roots(common):
            pt = _normalize_point([lam0, Fraction(mu0), Fraction(nu0)])
            if _is_singular_at(partials, pt) and pt not in points:
                points.append(pt)
    return SingularLocus(tuple(sorted(points)), complete, "resultant-elimination")


def _bounded_search(
    F: TernaryCubic, partials: list[HomPoly], height: int
) -> SingularLocus:
    from math import gcd

    points: list[tuple[int, int, int]] = []
    if _is_singular_at(partials, (1, 0, 0)):
        points.append((1, 0, 0))
    directions = [(1, 0)]
    for mu0 in range(-height, height + 1):
        for nu0 in range(1, height + 1):
            if gcd(abs(mu0), nu0) == 1:
                directions.append((mu0, nu0))
    for mu0, nu0 in directions:
        slices = [_lam_slice(p, mu0, nu0) for p in partials]
        nonzero = [s for s in slices if s]
        if not nonzero:
            continue
        common = nonzero[0]
        for s in nonzero[1:]:
            common = up_gcd(common, s)
        if not common or len(common) == 1:
            continue
        for lam0 in rational_roots(common):
            pt = _normalize_point([lam0, Fraction(mu0), Fraction(nu0)])
            if _is_singular_at(partials, pt) and pt not in points:
                points.append(pt)
    return SingularLocus(tuple(sorted(points)), False, "bounded-search")


# ---------------------------------------------------------------------------
# Tangent cone and the inflection-line cubic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryQuadratic:
    """A binary quadratic form a*mu^2 + b*mu*nu + c*nu^2."""

    a: Fraction
    b: Fraction
    c: Fraction

    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, mu, nu) -> Fraction:
        mu, nu = Fraction(mu), Fraction(nu)
        return self.a * mu * mu + self.b * mu * nu + self.c * nu * nu

    def is_multiple_of_circle(self) -> bool:
        return self.b == 0 and self.a == self.c and self.a != 0


def tangent_cone(F: TernaryCubic) -> BinaryQuadratic:
    """The lam-coefficient form of a node-shaped cubic.

    Requires F = lam*q(mu,nu) + c(mu,nu) and singularity at [1,0,0]
    (both hold exactly when no monomial has lam-exponent >= 2).
    """
    if not F.is_node_shape():
        raise ValueError("cubic does not have the node shape lam*q + c")
    A, B, C = F.lam_coefficient_form()
    return BinaryQuadratic(A, B, C)


@dataclass(frozen=True)
class BinaryCubic:
    """A binary cubic c30*mu^3 + c21*mu^2 nu + c12*mu nu^2 + c03*nu^3.

    The inflection-line cubics are harmonic with respect to mu^2+nu^2,
    i.e. of the shape beta*mu^3 - 3 alpha*mu^2 nu - 3 beta*mu nu^2
    + alpha*nu^3; ``harmonic`` builds that shape and ``alpha``/``beta``
    read it back, enforcing the consistency equations.
    """

    c30: Fraction
    c21: Fraction
    c12: Fraction
    c03: Fraction

    @classmethod
    def harmonic(cls, alpha, beta) -> "BinaryCubic":
        alpha, beta = Fraction(alpha), Fraction(beta)
        return cls(beta, -3 * alpha, -3 * beta, alpha)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c30, self.c21, self.c12, self.c03)

    def is_harmonic(self) -> bool:
        return self.c12 == -3 * self.c30 and self.c21 == -3 * self.c03

    @property
    def alpha(self) -> Fraction:
        if not self.is_harmonic():
            raise ValueError("cubic is not harmonic; alpha undefined")
        return self.c03

    @property
    def beta(self) -> Fraction:
        if not self.is_harmonic():
            raise ValueError("cubic is not harmonic; beta undefined")
        return self.c30

    def evaluate(self, mu, nu) -> Fraction:
        mu, nu = Fraction(mu), Fraction(nu)
        return (
            self.c30 * mu**3
            + self.c21 * mu**2 * nu
            + self.c12 * mu * nu**2
            + self.c03 * nu**3
        )

    def evaluate_complex(self, mu: complex, nu: complex) -> complex:
        return (
            complex(self.c30) * mu**3
            + complex(self.c21) * mu**2 * nu
            + complex(self.c12) * mu * nu**2
            + complex(self.c03) * nu**3
        )

    def substitute(self, e, f, g, h) -> "BinaryCubic":
        """The cubic after mu -> e*mu + f*nu, nu -> g*mu + h*nu."""
        p = HomPoly(
            2,
            3,
            {
                (3, 0): self.c30,
                (2, 1): self.c21,
                (1, 2): self.c12,
                (0, 3): self.c03,
            },
        )
        q = p.substitute([[e, f], [g, h]])
        return BinaryCubic(
            q.coefficient((3, 0)),
            q.coefficient((2, 1)),
            q.coefficient((1, 2)),
            q.coefficient((0, 3)),
        )

    def rotate(self, c, d) -> "BinaryCubic":
        """The special orthogonal substitution mu -> c mu + d nu, nu -> -d mu + c nu."""
        if c == 0 and d == 0:
            raise ValueError("rotation parameters must not both vanish")
        return self.substitute(c, d, -d, c)

    def swapped(self) -> "BinaryCubic":
        return BinaryCubic(self.c03, self.c12, self.c21, self.c30)


def harmonic_decomposition(
    coeffs: Sequence[Fraction],
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Split (c30,c21,c12,c03) as harmonic(alpha,beta) + (mu^2+nu^2)(p mu + q nu).

    Returns (alpha, beta, p, q); the split is unique.
    """
    c30, c21, c12, c03 = (Fraction(c) for c in coeffs)
    beta = (c30 - c12) / 4
    alpha = (c03 - c21) / 4
    p = c30 - beta
    q = c03 - alpha
    return alpha, beta, p, q


def inflection_lines(F: TernaryCubic) -> BinaryCubic:
    """The binary cubic of lines joining the node to the three inflections.

    Preconditions: node shape with tangent cone proportional to
    mu^2+nu^2.  The cubic is returned with its canonical normalization
    (the universal elimination constant divided out), so for the family
    determinant cubic the result is exactly
    beta*mu^3 - 3 alpha*mu^2 nu - 3 beta*mu nu^2 + alpha*nu^3.
    """
    cone = tangent_cone(F)
    if not cone.is_multiple_of_circle():
        raise ValueError("tangent cone is not a multiple of mu^2+nu^2")
    c30, c21, c12, c03 = F.cubic_part()
    # rescale lam so the cone is exactly -(mu^2+nu^2)
    normalized = TernaryCubic.from_coefficients(
        {
            (1, 2, 0): Fraction(-1),
            (1, 0, 2): Fraction(-1),
            (0, 3, 0): c30,
            (0, 2, 1): c21,
            (0, 1, 2): c12,
            (0, 0, 3): c03,
        }
    )
    hess = normalized.hessian()
    if hess.is_zero():
        raise ValueError("degenerate elimination: the Hessian vanishes")
    res = resultant_in_var(normalized.poly, hess.poly, 0)
    if bf_is_zero(res):
        raise ValueError("degenerate elimination: zero resultant")
    circle = [Fraction(1), Fraction(0), Fraction(1)]
    stripped = res
    while True:
        quotient = bf_divide_exact(stripped, circle)
        if quotient is None:
            break
        stripped = quotient
    if len(stripped) != 4:
        raise ValueError("elimination did not produce a binary cubic")
    alpha_s, beta_s, p, q = harmonic_decomposition(stripped)
    if p != 0 or q != 0:
        raise ValueError("inflection cubic has a nonzero non-harmonic component")
    return BinaryCubic.harmonic(alpha_s / _RESULTANT_SCALE, beta_s / _RESULTANT_SCALE)

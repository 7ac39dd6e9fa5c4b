"""The three family invariants.

* t1: quotients of (S^3)^3 indexed by integers (b1, c1).  The degree-<=4
  ring data gives a net of quadrics, its determinant is a nodal cubic,
  and the inflection-line binary cubic yields alpha + beta*i whose class
  in Q(i)* mod cubes and rational scalars (together with its mirror) is
  the invariant.  Both the closed form alpha + beta*i = 4(a+b*i)^2 and
  the full pipeline through the ring are implemented; they agree.

* t2: circle bundles over the Klein-cubic 6-manifold indexed by nonzero
  rationals (a0, a1).  The cup product induces a quadratic form on a
  4-dimensional space; the class of its determinant in Q*/(Q*)^2 is the
  invariant, equal to the class of -a0*a1.

* t3: circle bundles over the 8-manifold, indexed by nonzero (a, b, c).
  The squares of linear forms inside the degree-4 kernel system are
  x1^2, x2^2 and a conjugate pair cut out by a monic quadratic in t;
  the square class of its discriminant is the invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from . import linalg
from .arith import CubeClass, Gaussian, SquareClass, cube_class_mod_q, square_class
from .biquotient import (
    klein_ring,
    quotient_ring,
    t1_action_matrix,
)
from .graded import QuadricSystem
from .nodal import (
    TernaryCubic,
    det_cubic,
    inflection_lines,
    resultant_in_var,
    singular_points,
    tangent_cone,
)
from .poly import HomPoly, monomials
from .univar import (
    UPoly,
    bf_is_zero,
    bf_rational_proj_roots,
    bf_to_upoly,
    is_rational_square,
    rational_roots,
    up,
    up_divmod,
    up_factor,
    up_gcd,
)


class DegenerateFamilyMember(ValueError):
    """A parameter choice the invariant explicitly excludes."""


# ---------------------------------------------------------------------------
# t1: the unordered pair of cube classes
# ---------------------------------------------------------------------------


def rotate_alpha_beta(alpha, beta, c, d) -> tuple[Fraction, Fraction]:
    """(alpha', beta') with alpha' + beta' i = (alpha + beta i)(c + d i)^3.

    This is how the identity component of the stabilizer of mu^2+nu^2
    acts on harmonic binary cubics.
    """
    if c == 0 and d == 0:
        raise ValueError("rotation parameters must not both vanish")
    out = Gaussian(alpha, beta) * Gaussian(c, d) ** 3
    return out.re, out.im


@dataclass(frozen=True)
class T1Invariant:
    """Unordered pair {class(alpha+beta i), class(beta+alpha i)}.

    The two members are conjugate classes of each other; serialization
    sorts them, so equal invariants have equal strings.
    """

    classes: tuple[CubeClass, CubeClass]

    @classmethod
    def from_alpha_beta(cls, alpha, beta) -> "T1Invariant":
        alpha, beta = Fraction(alpha), Fraction(beta)
        if alpha == 0 and beta == 0:
            raise ValueError("alpha and beta must not both vanish")
        first = cube_class_mod_q(Gaussian(alpha, beta))
        second = cube_class_mod_q(Gaussian(beta, alpha))
        assert second == first.conjugate(), "mirror class must be the conjugate"
        pair = sorted((first, second), key=lambda c: c.serialize())
        return cls((pair[0], pair[1]))

    def serialize(self) -> str:
        return "|".join(c.serialize() for c in self.classes)

    def __contains__(self, item: CubeClass) -> bool:
        return item in self.classes

    def __str__(self) -> str:
        return self.serialize()


def parse_t1_invariant(text: str) -> T1Invariant:
    from .arith import parse_cube_class

    left, _, right = text.partition("|")
    pair = (parse_cube_class(left), parse_cube_class(right))
    if [c.serialize() for c in pair] != sorted(c.serialize() for c in pair):
        raise ValueError("pair is not canonically sorted")
    return T1Invariant(pair)


def t1_parameters(b1: int, c1: int) -> tuple[Fraction, Fraction]:
    """(a, b) = (c1/4, (2 b1 - c1)/4), so that b1 = 2(a+b) and c1 = 4a."""
    return Fraction(c1, 4), Fraction(2 * b1 - c1, 4)


def t1_relation_net(a, b) -> QuadricSystem:
    """The net spanned by x1^2, 2 x2(2(a+b) x1 + x2 + x3), x3(4a x1 + 2 x2 + x3)."""
    a, b = Fraction(a), Fraction(b)
    x1, x2, x3 = (HomPoly.variable(3, i) for i in range(3))
    q1 = x1 * x1
    q2 = (x2 * (x1.scale(2 * (a + b)) + x2 + x3)).scale(2)
    q3 = x3 * (x1.scale(4 * a) + x2.scale(2) + x3)
    return QuadricSystem.from_polys([q1, q2, q3])


def t1_invariant(b1: int, c1: int) -> T1Invariant:
    """Closed form: alpha + beta i = 4(a + b i)^2 with (a, b) = t1_parameters."""
    if b1 == 0 and c1 == 0:
        raise ValueError("(b1, c1) = (0, 0) is excluded")
    a, b = t1_parameters(b1, c1)
    value = Gaussian(a, b) ** 2 * 4
    return T1Invariant.from_alpha_beta(value.re, value.im)


def _node_to_origin(F: TernaryCubic, node: tuple[int, int, int]) -> TernaryCubic:
    pivot = max(range(3), key=lambda i: (abs(node[i]), -i))
    others = [i for i in range(3) if i != pivot]
    cols = [list(node)] + [
        [1 if i == j else 0 for i in range(3)] for j in others
    ]
    matrix = [[Fraction(cols[j][i]) for j in range(3)] for i in range(3)]
    return F.substitute(matrix)


def _normalize_cone(F: TernaryCubic) -> TernaryCubic:
    """Substitute (mu, nu) so the tangent cone becomes A*(mu^2 + nu^2)."""
    cone = tangent_cone(F)
    a, b, c = cone.a, cone.b, cone.c
    if a == 0:
        if c == 0:
            raise ValueError("tangent cone is degenerate (no definite part)")
        F = F.substitute([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        a, b, c = c, b, a
    w2 = (4 * a * c - b * b) / (4 * a * a)
    w = is_rational_square(w2)
    if w is None or w == 0:
        raise ValueError("tangent cone is not equivalent to a multiple of mu^2+nu^2")
    sub = [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), -b / (2 * a * w)],
        [Fraction(0), Fraction(0), 1 / w],
    ]
    out = F.substitute(sub)
    new_cone = tangent_cone(out)
    assert new_cone.is_multiple_of_circle(), "cone normalization failed"
    return out


def t1_invariant_from_net(net: QuadricSystem) -> T1Invariant:
    """The invariant of any net presenting a family degree-<=4 ring.

    determinant cubic -> node and tangent-cone normalization ->
    inflection-line cubic -> pair of cube classes.  The normalization
    freedom (choice of net basis, moving the node, the orthogonal
    stabilizer of the cone) acts through rational scalings, cubes, and
    conjugation, all of which the invariant quotients out, so any basis
    of the same net gives the same value.
    """
    F = det_cubic(net)
    locus = singular_points(F)
    if not (locus.complete and len(locus.points) == 1):
        raise ValueError("expected exactly one rational node")
    F0 = _node_to_origin(F, locus.points[0])
    F1 = _normalize_cone(F0)
    cubic = inflection_lines(F1)
    return T1Invariant.from_alpha_beta(cubic.alpha, cubic.beta)


def t1_invariant_pipeline(b1: int, c1: int) -> T1Invariant:
    """The invariant recomputed through the full ring machinery.

    quotient ring -> kernel net of quadrics -> t1_invariant_from_net.
    Every step is exact and the result equals the closed form.
    """
    if b1 == 0 and c1 == 0:
        raise ValueError("(b1, c1) = (0, 0) is excluded")
    ring = quotient_ring(t1_action_matrix(b1, c1))
    net = ring.kernel_of_square_map()
    assert net.dim == 3, "kernel net of the family ring must be 3-dimensional"
    return t1_invariant_from_net(net)


def t1_realize_class(w: Gaussian, target: CubeClass | None = None) -> tuple[int, int]:
    """Integers (b1, c1) whose invariant contains the class of w.

    w^2 is scaled by a positive integer to an integral a + b i; then
    b1 = 2(a+b) and c1 = 4a, and 4(a+bi)^2 = 4 D^2 w^4 has the class of
    w (rational scalars and cubes drop out).
    """
    if not w:
        raise ValueError("witness must be nonzero")
    w2 = w * w
    scale = lcm(w2.re.denominator, w2.im.denominator)
    g = w2 * Gaussian(scale, 0)
    a, b = int(g.re), int(g.im)
    b1, c1 = 2 * (a + b), 4 * a
    if target is not None and target not in t1_invariant(b1, c1):
        raise ValueError("witness does not realize the requested class")
    return b1, c1


# ---------------------------------------------------------------------------
# t2: determinant class of the cup-product form
# ---------------------------------------------------------------------------


def t2_quadratic_form(a0, a1) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of (u, v) -> T(u, v, z) on the Klein ring's H^2.

    Equals the displayed band matrix with rows built from a0, a1 and
    a2 = a0^2/a1, up to one global constant (1/3 from polarization).
    """
    bundle = klein_ring(a0, a1)
    ring = bundle.ring
    basis = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    z = list(bundle.z)
    return tuple(
        tuple(ring.trilinear(basis[i], basis[j], z) for j in range(5))
        for i in range(5)
    )


def _default_complement(y: Sequence[Fraction]) -> list[int]:
    heights = [
        (abs(c.numerator) * c.denominator, i) for i, c in enumerate(y) if c != 0
    ]
    drop = max(heights)[1]
    return [i for i in range(5) if i != drop]


def t2_det_class(a0, a1, complement: Sequence[Sequence] | None = None) -> SquareClass:
    """Square class of the determinant of the form induced on V/<y>.

    ``complement`` may give four explicit vectors spanning a complement
    of y; the default drops y's highest pivot coordinate.  The class
    does not depend on the choice, and equals square_class(-a0*a1).
    """
    bundle = klein_ring(a0, a1)
    gram = [list(row) for row in t2_quadratic_form(a0, a1)]
    y = list(bundle.y)
    assert all(v == 0 for v in linalg.mat_vec(gram, y)), "y must lie in the radical"
    if complement is None:
        vectors = [
            [Fraction(int(i == j)) for j in range(5)]
            for i in _default_complement(y)
        ]
    else:
        vectors = [[Fraction(c) for c in vec] for vec in complement]
        if len(vectors) != 4 or linalg.det([y] + vectors) == 0:
            raise ValueError("complement must be four vectors independent of y")
    induced = [
        [
            sum(
                va * gram[r][s] * vb
                for r, va in enumerate(vec_a)
                for s, vb in enumerate(vec_b)
            )
            for vec_b in vectors
        ]
        for vec_a in vectors
    ]
    d = linalg.det(induced)
    if d == 0:
        raise ValueError("induced form is degenerate")
    return square_class(d)


# ---------------------------------------------------------------------------
# t3: squares of linear forms in the kernel system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonicQuadratic:
    """t^2 + p1*t + p0 with exact rational coefficients."""

    p1: Fraction
    p0: Fraction

    def discriminant(self) -> Fraction:
        return self.p1 * self.p1 - 4 * self.p0

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        return t * t + self.p1 * t + self.p0

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.p0, self.p1, Fraction(1))

    def __str__(self) -> str:
        return f"t^2 + ({self.p1})*t + ({self.p0})"


def t3_kernel_system(a, b, c) -> QuadricSystem:
    """span(x1^2, x2^2, x3^2 - x1 x2, (a x1 + b x2 + c x3)^2 - x1 x2)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 or b == 0 or c == 0:
        raise ValueError("parameters must be nonzero")
    x1, x2, x3 = (HomPoly.variable(3, i) for i in range(3))
    ell = x1.scale(a) + x2.scale(b) + x3.scale(c)
    return QuadricSystem.from_polys(
        [x1 * x1, x2 * x2, x3 * x3 - x1 * x2, ell * ell - x1 * x2]
    )


def t3_membership_quadratic(a, b, c) -> MonicQuadratic:
    """The monic quadratic whose roots t put (a x1 + b x2 + t x3)^2 in the system.

    Derived by exact reduction of the square against the kernel system;
    the reduction lands on a multiple of the class of x1 x2, giving
    t^2 + (1/c)(-c^2 - 2ab + 1) t + 2ab.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    system = t3_kernel_system(a, b, c)
    monos = monomials(3, 2)
    index = {m: i for i, m in enumerate(monos)}

    def coeff_vector(p: HomPoly) -> list[Fraction]:
        out = [Fraction(0)] * len(monos)
        for e, coeff in p.coeffs.items():
            out[index[e]] = coeff
        return out

    rows = [coeff_vector(p) for p in system.polys()]
    # quotient basis (lex-first): expect the classes of x1 x2 and x1 x3
    quotient = linalg.QuotientSpace(len(monos), rows)
    assert [monos[i] for i in quotient.basis_indices] == [(1, 1, 0), (1, 0, 1)], (
        "unexpected quotient basis for the kernel system"
    )
    x1, x2, x3 = (HomPoly.variable(3, i) for i in range(3))
    base = x1.scale(a) + x2.scale(b)
    parts = [
        coeff_vector(base * base),                         # t^0
        coeff_vector((base * x3).scale(2)),                # t^1
        coeff_vector(x3 * x3),                             # t^2
    ]
    coords = [quotient.coords(v) for v in parts]
    assert all(co[1] == 0 for co in coords), "reduction must kill the x1*x3 class"
    lead = coords[2][0]
    assert lead == 1, "x3^2 must reduce to exactly the class of x1*x2"
    return MonicQuadratic(coords[1][0], coords[0][0])


def t3_discriminant_class(a, b, c) -> SquareClass:
    """Square class of the membership quadratic's discriminant.

    Raises DegenerateFamilyMember when the discriminant vanishes (the
    excluded degenerate members with 2ab = (c +- 1)^2).
    """
    quad = t3_membership_quadratic(a, b, c)
    delta = quad.discriminant()
    if delta == 0:
        raise DegenerateFamilyMember(
            f"discriminant vanishes at (a, b, c) = ({a}, {b}, {c})"
        )
    return square_class(delta)


# ---------------------------------------------------------------------------
# rank-one classification of a quadric system on a 3-space
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankOneOrbit:
    """A conjugate pair of rank-one members on a rational line.

    The line is parametrized as base + t * direction (both primitive
    integer points); min_poly is the monic quadratic in t cutting out
    the pair.
    """

    min_poly: MonicQuadratic
    base: tuple[int, int, int]
    direction: tuple[int, int, int]


@dataclass(frozen=True)
class RankOneClassification:
    """Squares of linear forms lying in a linear system of quadrics."""

    rational: tuple[tuple[int, int, int], ...]
    orbits: tuple[RankOneOrbit, ...]
    degenerate_lines: tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...]

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degenerate_lines)


def _primitive(vec: Sequence[Fraction]) -> tuple[int, int, int]:
    den = 1
    for c in vec:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return (ints[0], ints[1], ints[2])


class _QuadExt:
    """Arithmetic in Q[theta]/(theta^2 + g1*theta + g0), elements (a, b)."""

    def __init__(self, g1: Fraction, g0: Fraction):
        self.g1 = g1
        self.g0 = g0

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        return (x[0] - y[0], x[1] - y[1])

    def mul(self, x, y):
        # (a + b*theta)(c + d*theta) with theta^2 = -g1*theta - g0
        a, b = x
        c, d = y
        cross = b * d
        return (a * c - cross * self.g0, a * d + b * c - cross * self.g1)

    def is_zero(self, x) -> bool:
        return x[0] == 0 and x[1] == 0

    def inv(self, x):
        a, b = x
        norm = a * a - self.g1 * a * b + self.g0 * b * b
        if norm == 0:
            raise ZeroDivisionError("element is not invertible")
        return ((a - self.g1 * b) / norm, -b / norm)

    def scalar(self, q) -> tuple[Fraction, Fraction]:
        return (Fraction(q), Fraction(0))

    def theta(self) -> tuple[Fraction, Fraction]:
        return (Fraction(0), Fraction(1))

    def _trim(self, p: list) -> list:
        while p and self.is_zero(p[-1]):
            p.pop()
        return p

    def _rem(self, p: list, q: list) -> list:
        p = p[:]
        inv_lead = self.inv(q[-1])
        while len(p) >= len(q) and p:
            factor = self.mul(p[-1], inv_lead)
            shift = len(p) - len(q)
            for i, qc in enumerate(q):
                p[shift + i] = self.sub(p[shift + i], self.mul(factor, qc))
            p = self._trim(p)
        return p

    def poly_gcd(self, polys) -> list | None:
        """Monic gcd of univariate polynomials over the extension."""
        current: list | None = None
        for p in polys:
            p = self._trim(list(p))
            if not p:
                continue
            if current is None:
                current = p
                continue
            a, b = current, p
            while b:
                a, b = b, self._rem(a, b)
            current = a
        if current is None:
            return None
        inv_lead = self.inv(current[-1])
        return [self.mul(c, inv_lead) for c in current]


def _conic_gram(phi: Sequence[Fraction]) -> list[list[Fraction]]:
    # phi pairs with Gram-entry coordinates (g00,g01,g02,g11,g12,g22); the
    # square l*l has Gram l_i l_j, so the membership condition on (u,v,w)
    # is the conic with HALF of phi's cross entries off the diagonal
    half = Fraction(1, 2)
    return [
        [phi[0], half * phi[1], half * phi[2]],
        [half * phi[1], phi[3], half * phi[4]],
        [half * phi[2], half * phi[4], phi[5]],
    ]


def _conic_poly(gram: list[list[Fraction]]) -> HomPoly:
    terms = {}
    for i in range(3):
        for j in range(i, 3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            c = gram[i][j] if i == j else 2 * gram[i][j]
            if c:
                terms[tuple(e)] = c
    return HomPoly(3, 2, terms)


def _conic_u_slice(gram, ext: _QuadExt, theta, w=Fraction(1)):
    """Q(u, theta, w) as a quadratic in u with _QuadExt coefficients."""
    th = theta
    wq = ext.scalar(w)
    c2 = ext.scalar(gram[0][0])
    c1 = ext.add(
        ext.mul(ext.scalar(2 * gram[0][1]), th),
        ext.mul(ext.scalar(2 * gram[0][2]), wq),
    )
    c0 = ext.add(
        ext.add(
            ext.mul(ext.scalar(gram[1][1]), ext.mul(th, th)),
            ext.mul(ext.scalar(2 * gram[1][2]), ext.mul(th, wq)),
        ),
        ext.mul(ext.scalar(gram[2][2]), ext.mul(wq, wq)),
    )
    return [c0, c1, c2]


def rank_one_elements(
    system: QuadricSystem,
    line_hint: tuple[Sequence, Sequence] | None = None,
) -> RankOneClassification:
    """Classify the squares of linear forms contained in the system.

    Membership of l*l is cut out by the annihilator conics of the span.
    Rational solutions come from exact elimination; conjugate pairs are
    verified inside the quadratic extension and reported by the monic
    minimal polynomial of the parameter along their rational line.
    ``line_hint = (base, direction)`` fixes that parametrization when an
    orbit's line matches (the family pipeline passes (a, b, 0) and
    (0, 0, 1), reproducing the membership quadratic literally); without
    a hint the line is parametrized from its primitive trace points.
    """
    if system.ambient_dim != 3:
        raise ValueError("rank-one classification needs quadrics on a 3-space")
    if not 2 <= 6 - system.dim <= 3:
        raise ValueError("system dimension must be 3 or 4")
    flat = [QuadricSystem._flatten(g) for g in system.basis]
    annihilator = linalg.kernel_basis(flat, 6)
    conics = [_conic_gram(phi) for phi in annihilator]
    conic_polys = [_conic_poly(g) for g in conics]

    rational: list[tuple[int, int, int]] = []
    orbits: list[RankOneOrbit] = []
    degenerate: list[tuple[tuple[int, int, int], tuple[int, int, int]]] = []

    # the direction (1, 0, 0) escapes the elimination chart
    if all(g[0][0] == 0 for g in conics):
        rational.append((1, 0, 0))

    eliminant = None
    for i in range(len(conic_polys)):
        for j in range(i + 1, len(conic_polys)):
            r = resultant_in_var(conic_polys[i], conic_polys[j], 0)
            if not bf_is_zero(r):
                eliminant = r
                break
        if eliminant is not None:
            break
    if eliminant is None:
        raise ValueError("every eliminant vanishes: rank-one locus is degenerate")

    # rational directions (v0 : w0)
    for v0, w0 in bf_rational_proj_roots(eliminant):
        slices = []
        for g in conics:
            c2 = g[0][0]
            c1 = 2 * g[0][1] * v0 + 2 * g[0][2] * w0
            c0 = g[1][1] * v0 * v0 + 2 * g[1][2] * v0 * w0 + g[2][2] * w0 * w0
            slices.append(up([c0, c1, c2]))
        nonzero = [s for s in slices if s]
        if not nonzero:
            # every conic vanishes on the whole line: positive-dimensional
            base = _primitive([Fraction(0), Fraction(v0), Fraction(w0)])
            degenerate.append((base, (1, 0, 0)))
            if base not in rational:
                rational.append(base)
            continue
        common = nonzero[0]
        for s in nonzero[1:]:
            common = up_gcd(common, s)
        if not common or len(common) == 1:
            continue
        rest = common
        for u0 in rational_roots(common):
            pt = _primitive([u0, Fraction(v0), Fraction(w0)])
            if pt not in rational:
                rational.append(pt)
            while True:
                quot, rem = up_divmod(rest, up([-u0, 1]))
                if rem:
                    break
                rest = quot
        if len(rest) == 3:
            # conjugate pair along the vertical line (t, v0, w0)
            orbits.append(_vertical_orbit(rest, v0, w0, line_hint))

    # conjugate directions: irreducible quadratic factors of the eliminant
    _, factors = up_factor(bf_to_upoly(eliminant))
    for fac, _mult in factors:
        if len(fac) > 3:
            raise NotImplementedError(
                "rank-one orbits of degree > 2 are out of scope"
            )
        if len(fac) != 3:
            continue
        orbit = _quadratic_orbit(fac, conics, line_hint)
        if orbit is not None:
            orbits.append(orbit)

    rational = [pt for pt in rational if _verify_rational(pt, system)]
    return RankOneClassification(
        tuple(sorted(rational)), tuple(orbits), tuple(degenerate)
    )


def _verify_rational(pt, system: QuadricSystem) -> bool:
    u, v, w = (Fraction(x) for x in pt)
    ell = [u, v, w]
    gram = tuple(tuple(ell[i] * ell[j] for j in range(3)) for i in range(3))
    return system.contains(gram)


def _minpoly_from_mobius(
    g1: Fraction,
    g0: Fraction,
    num: tuple[Fraction, Fraction],
    den: tuple[Fraction, Fraction],
) -> MonicQuadratic:
    """Monic minimal polynomial of t when theta = (A t + B)/(C t + D).

    (g1, g0) are the coefficients of theta's monic minimal polynomial
    theta^2 + g1 theta + g0; num = (A, B), den = (C, D).
    """
    A, B = num
    C, D = den
    # (C t + D)^2 * g((At+B)/(Ct+D)) collected in t
    c2 = A * A + g1 * A * C + g0 * C * C
    c1 = 2 * A * B + g1 * (A * D + B * C) + 2 * g0 * C * D
    c0 = B * B + g1 * B * D + g0 * D * D
    if c2 == 0:
        raise ValueError("parametrization sends one conjugate point to infinity")
    return MonicQuadratic(c1 / c2, c0 / c2)


def _hint_parametrization(B, D, hb, hd):
    """(base, direction, num, den) for the hinted parametrization.

    Solutions are B + theta*D; the hint wants them as hb + t*hd.  In the
    (hb, hd) coordinates B = (xb, yb) and D = (xd, yd), so the point
    B + theta*D has t = (yb + theta*yd)/(xb + theta*xd); inverting,
    theta = (xb*t - yb)/(yd - xd*t).
    """
    rows = [[hb[i], hd[i]] for i in range(3)]
    sol_b = linalg.solve(rows, B)
    sol_d = linalg.solve(rows, D)
    if sol_b is None or sol_d is None:
        raise ValueError("hint does not span the orbit's line")
    xb, yb = sol_b
    xd, yd = sol_d
    base = (int(hb[0]), int(hb[1]), int(hb[2]))
    direction = (int(hd[0]), int(hd[1]), int(hd[2]))
    return base, direction, (xb, -yb), (-xd, yd)


def _use_hint(line_points: list[list[Fraction]], line_hint) -> bool:
    if line_hint is None:
        return False
    span_rows, pivots = linalg.rref([p[:] for p in line_points])
    return linalg.in_span(
        [Fraction(x) for x in line_hint[0]], span_rows, pivots
    ) and linalg.in_span([Fraction(x) for x in line_hint[1]], span_rows, pivots)


def _quadratic_orbit(fac: UPoly, conics, line_hint) -> RankOneOrbit | None:
    """Verify and package an orbit over Q[theta]/(theta^2 + g1 theta + g0).

    theta is the v-coordinate in the chart w = 1.  Returns None when the
    eliminant factor does not correspond to actual common solutions of
    all the conics.
    """
    g1, g0 = fac[1], fac[0]
    ext = _QuadExt(g1, g0)
    theta = ext.theta()
    slices = [_conic_u_slice(g, ext, theta) for g in conics]
    nonzero = [s for s in slices if not all(ext.is_zero(c) for c in s)]
    if not nonzero:
        return None
    common = ext.poly_gcd(nonzero)
    if common is None or len(common) <= 1:
        return None
    if len(common) > 2:
        raise NotImplementedError("conjugate pairs of whole lines are out of scope")
    u = ext.mul(ext.sub(ext.scalar(0), common[0]), ext.inv(common[1]))
    for g in conics:
        coeffs = _conic_u_slice(g, ext, theta)
        acc = ext.scalar(0)
        upow = ext.scalar(1)
        for c in coeffs:
            acc = ext.add(acc, ext.mul(c, upow))
            upow = ext.mul(upow, u)
        if not ext.is_zero(acc):
            return None
    p, q = u  # u = p + q*theta, so the solutions are B + theta*D below
    B = [p, Fraction(0), Fraction(1)]
    D = [q, Fraction(1), Fraction(0)]
    if _use_hint([B, D], line_hint):
        hb = [Fraction(x) for x in line_hint[0]]
        hd = [Fraction(x) for x in line_hint[1]]
        base, direction, num, den = _hint_parametrization(B, D, hb, hd)
        return RankOneOrbit(_minpoly_from_mobius(g1, g0, num, den), base, direction)
    # canonical: base = primitive trace on {w = 0} (that is D), direction
    # = primitive rep of B; base + t*direction ~ B + theta*D with
    # theta = (kb/kd)/t
    base = _primitive(D)
    kb = next(Fraction(x) / y for x, y in zip(base, D) if y != 0)
    direction = _primitive(B)
    kd = next(Fraction(x) / y for x, y in zip(direction, B) if y != 0)
    num = (Fraction(0), kb / kd)
    den = (Fraction(1), Fraction(0))
    return RankOneOrbit(_minpoly_from_mobius(g1, g0, num, den), base, direction)


def _vertical_orbit(minpoly: UPoly, v0: int, w0: int, line_hint) -> RankOneOrbit:
    """A conjugate pair sharing one rational direction (v0 : w0).

    The solutions are (u, v0, w0) with u running over the roots of the
    monic quadratic ``minpoly``.
    """
    g1 = minpoly[1] / minpoly[2]
    g0 = minpoly[0] / minpoly[2]
    Bv = [Fraction(0), Fraction(v0), Fraction(w0)]
    Dv = [Fraction(1), Fraction(0), Fraction(0)]
    if _use_hint([Bv, Dv], line_hint):
        hb = [Fraction(x) for x in line_hint[0]]
        hd = [Fraction(x) for x in line_hint[1]]
        base, direction, num, den = _hint_parametrization(Bv, Dv, hb, hd)
        return RankOneOrbit(_minpoly_from_mobius(g1, g0, num, den), base, direction)
    base = _primitive(Bv)
    sigma = Fraction(base[1], v0) if v0 else Fraction(base[2], w0)
    # base + t*(1,0,0) ~ (t/sigma, v0, w0): the roots move to sigma*u
    return RankOneOrbit(
        MonicQuadratic(g1 * sigma, g0 * sigma * sigma), base, (1, 0, 0)
    )

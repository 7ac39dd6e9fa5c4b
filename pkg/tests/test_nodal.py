import itertools
import random
from fractions import Fraction

import pytest

from biquo.graded import QuadricSystem
from biquo.invariants import t1_relation_net
from biquo.nodal import (
    BinaryCubic,
    BinaryQuadratic,
    TernaryCubic,
    det_cubic,
    inflection_lines,
    singular_points,
    tangent_cone,
)
from biquo.oracles import inflection_residual


def family_cubic(alpha, beta):
    return TernaryCubic.from_coefficients(
        {(1, 2, 0): -1, (1, 0, 2): -1, (0, 2, 1): alpha, (0, 1, 2): beta}
    )


def pencil_det_at(net, lam, mu, nu):
    # independent oracle: evaluate the pencil and take a bare 3x3 determinant
    m = [
        [
            lam * net.basis[0][i][j] + mu * net.basis[1][i][j] + nu * net.basis[2][i][j]
            for j in range(3)
        ]
        for i in range(3)
    ]
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def test_det_cubic_matches_pencil_on_grid():
    # degree bounds: <= 1 in lam, <= 3 in mu, nu; a 2 x 4 x 4 grid decides equality
    rng = random.Random(0)
    for _ in range(20):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        net = t1_relation_net(a, b)
        cubic = det_cubic(net)
        for lam, mu, nu in itertools.product(range(2), range(4), range(4)):
            assert cubic.evaluate([lam, mu, nu]) == pencil_det_at(net, lam, mu, nu)


def test_det_cubic_displayed_formula():
    rng = random.Random(1)
    for _ in range(20):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert det_cubic(t1_relation_net(a, b)) == family_cubic(
            4 * (a * a - b * b), 8 * a * b
        )


def test_det_cubic_diagonal_net():
    def diag(*d):
        return tuple(
            tuple(Fraction(d[i]) if i == j else Fraction(0) for j in range(3))
            for i in range(3)
        )

    net = QuadricSystem(3, (diag(1, 0, 0), diag(0, 1, 0), diag(0, 0, 1)))
    assert det_cubic(net) == TernaryCubic.from_coefficients({(1, 1, 1): 1})


def test_det_cubic_coordinate_scaling():
    # replacing coordinates x -> P x multiplies the cubic by det(P)^2
    from biquo import linalg

    rng = random.Random(2)
    for _ in range(50):
        a = Fraction(rng.randint(-5, 5))
        b = Fraction(rng.randint(-5, 5))
        net = t1_relation_net(a, b)
        while True:
            P = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            dP = linalg.det(P)
            if dP != 0:
                break
        moved = QuadricSystem(
            3,
            tuple(
                tuple(
                    tuple(
                        sum(
                            P[i][k] * g[k][l] * P[j][l]
                            for k in range(3)
                            for l in range(3)
                        )
                        for j in range(3)
                    )
                    for i in range(3)
                )
                for g in net.basis
            ),
        )
        assert det_cubic(moved) == det_cubic(net).scale(dP * dP)


def test_det_cubic_basis_change_scales_by_det():
    # a new net basis M * (old basis) changes the cubic by the linear
    # substitution M^T on (lam, mu, nu); evaluation on a grid checks it
    from biquo import linalg

    rng = random.Random(3)
    for _ in range(50):
        a = Fraction(rng.randint(-5, 5))
        b = Fraction(rng.randint(-5, 5))
        if a == 0 and b == 0:
            continue
        net = t1_relation_net(a, b)
        while True:
            M = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
            if linalg.det(M) != 0:
                break
        mixed = QuadricSystem(
            3,
            tuple(
                tuple(
                    tuple(
                        sum(M[r][k] * net.basis[k][i][j] for k in range(3))
                        for j in range(3)
                    )
                    for i in range(3)
                )
                for r in range(3)
            ),
        )
        F1, F2 = det_cubic(net), det_cubic(mixed)
        Mt = [[M[j][i] for j in range(3)] for i in range(3)]
        assert F2 == F1.substitute(Mt)


def test_singular_points_family():
    locus = singular_points(family_cubic(4, 0))
    assert locus.points == ((1, 0, 0),)
    assert locus.complete and locus.method == "family-closed-form"


def test_singular_points_smooth_fermat():
    fermat = TernaryCubic.from_coefficients({(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    locus = singular_points(fermat)
    assert locus.points == () and locus.complete


def test_singular_points_triangle():
    locus = singular_points(TernaryCubic.from_coefficients({(1, 1, 1): 1}))
    assert set(locus.points) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert locus.complete


def test_singular_points_rejects_zero():
    with pytest.raises(ValueError):
        singular_points(TernaryCubic.from_coefficients({}))


def test_tangent_cone_examples():
    assert tangent_cone(family_cubic(3, 5)) == BinaryQuadratic(
        Fraction(-1), Fraction(0), Fraction(-1)
    )
    F = TernaryCubic.from_coefficients({(1, 2, 0): 1, (1, 0, 2): -1, (0, 3, 0): 1})
    assert tangent_cone(F) == BinaryQuadratic(Fraction(1), Fraction(0), Fraction(-1))
    assert tangent_cone(TernaryCubic.from_coefficients({(1, 1, 1): 1})) == (
        BinaryQuadratic(Fraction(0), Fraction(1), Fraction(0))
    )


def test_tangent_cone_rejects_bad_shape():
    with pytest.raises(ValueError):
        tangent_cone(TernaryCubic.from_coefficients({(3, 0, 0): 1}))


def test_inflection_lines_displayed_formula():
    rng = random.Random(4)
    for _ in range(20):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if a == 0 and b == 0:
            continue
        alpha, beta = 4 * (a * a - b * b), 8 * a * b
        assert inflection_lines(family_cubic(alpha, beta)) == BinaryCubic.harmonic(
            alpha, beta
        )


def test_inflection_lines_alpha_one_beta_zero():
    cubic = inflection_lines(family_cubic(1, 0))
    assert cubic.coefficients() == (0, -3, 0, 1)  # -3 mu^2 nu + nu^3


def test_inflection_lines_numeric_oracle():
    rng = random.Random(5)
    for _ in range(10):
        alpha = Fraction(rng.randint(-9, 9))
        beta = Fraction(rng.randint(-9, 9))
        if alpha == 0 and beta == 0:
            continue
        F = family_cubic(alpha, beta)
        assert inflection_residual(F, inflection_lines(F)) < 1e-9


def test_inflection_lines_translation_invariance():
    # adding (mu^2+nu^2)*(p mu + q nu) moves the cubic inside its
    # lam-translation orbit and must not change the inflection lines
    from biquo.poly import HomPoly

    rng = random.Random(6)
    for _ in range(10):
        alpha = Fraction(rng.randint(-9, 9))
        beta = Fraction(rng.randint(-9, 9))
        if alpha == 0 and beta == 0:
            continue
        p, q = Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
        extra = HomPoly(3, 3, {(0, 3, 0): p, (0, 2, 1): q, (0, 1, 2): p, (0, 0, 3): q})
        shifted = TernaryCubic(family_cubic(alpha, beta).poly + extra)
        assert inflection_lines(shifted) == BinaryCubic.harmonic(alpha, beta)


def test_inflection_lines_requires_circle_cone():
    with pytest.raises(ValueError):
        inflection_lines(
            TernaryCubic.from_coefficients({(1, 2, 0): 1, (0, 0, 3): 1})
        )


def test_harmonic_consistency_enforced():
    cubic = BinaryCubic(Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    assert not cubic.is_harmonic()
    with pytest.raises(ValueError):
        _ = cubic.alpha


def test_rotation_law_against_complex_multiplication():
    from biquo.arith import Gaussian

    rng = random.Random(7)
    for _ in range(50):
        alpha = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        beta = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        d = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if (alpha == 0 and beta == 0) or (c == 0 and d == 0):
            continue
        rotated = BinaryCubic.harmonic(alpha, beta).rotate(c, d)
        want = Gaussian(alpha, beta) * Gaussian(c, d) ** 3
        assert (rotated.alpha, rotated.beta) == (want.re, want.im)


def test_rotation_rejects_zero():
    with pytest.raises(ValueError):
        BinaryCubic.harmonic(1, 0).rotate(0, 0)


def test_swap_exchanges_alpha_beta():
    cubic = BinaryCubic.harmonic(Fraction(2), Fraction(-7))
    swapped = cubic.swapped()
    assert (swapped.alpha, swapped.beta) == (Fraction(-7), Fraction(2))

import random
from fractions import Fraction
from math import comb

import pytest

from biquo import linalg
from biquo.graded import GradedQuotient, QuadricSystem, poly_to_gram
from biquo.biquotient import quotient_ring, t1_action_matrix
from biquo.poly import HomPoly


def V(n, i):
    return HomPoly.variable(n, i)


def family_ring(b1, c1):
    return quotient_ring(t1_action_matrix(b1, c1))


def binomial_series(n, degree):
    # independent expected dims for a complete intersection: (1 + t^2)^n
    return comb(n, degree // 2) if degree % 2 == 0 and degree <= 2 * n else 0


@pytest.mark.parametrize("params", [(0, 0), (2, 0), (6, 8), (-3, 5)])
def test_family_ring_dims(params):
    ring = family_ring(*params)
    for d in (0, 2, 4, 6):
        assert ring.graded_dim(d) == binomial_series(3, d)
    assert ring.is_complete_intersection()


def test_free_ring_degree_four():
    free = GradedQuotient(3, [], max_degree=8)
    assert free.graded_dim(4) == 6  # all monomials of weight two


def test_t3_ring_degree_four():
    x = [V(4, i) for i in range(4)]
    ring = GradedQuotient(
        4,
        [x[0] * x[0], x[1] * x[1], x[2] * x[2] - x[0] * x[1], x[3] * x[3] - x[0] * x[1]],
    )
    assert ring.graded_dim(4) == binomial_series(4, 4) == 6
    assert ring.is_complete_intersection()


def test_dependent_relations_fail_by_degree_six():
    x = [V(3, i) for i in range(3)]
    bad = GradedQuotient(3, [x[0] * x[0], x[0] * x[1], x[0] * x[2]])
    assert bad.graded_dim(4) == 3  # agrees through degree 4
    assert bad.graded_dim(6) == 4  # diverges from (1+t^2)^3 here
    assert not bad.is_complete_intersection()


def test_degree_bounds():
    ring = family_ring(1, 1)
    with pytest.raises(ValueError):
        ring.graded_dim(3)
    with pytest.raises(ValueError):
        ring.graded_dim(8)


def test_product_in_quotient():
    ring = family_ring(3, 7)
    x = [V(3, i) for i in range(3)]
    assert ring.product_in_quotient(x[0], x[0]) == [0, 0, 0]
    free = GradedQuotient(3, [], max_degree=8)
    coords = free.product_in_quotient(x[0], x[1])
    piece = free.piece(4)
    assert piece.basis[coords.index(1)] == (1, 1, 0)
    assert sum(1 for c in coords if c) == 1


def test_t3_product_identity():
    x = [V(4, i) for i in range(4)]
    ring = GradedQuotient(
        4,
        [x[0] * x[0], x[1] * x[1], x[2] * x[2] - x[0] * x[1], x[3] * x[3] - x[0] * x[1]],
    )
    assert ring.product_in_quotient(x[2], x[2]) == ring.product_in_quotient(x[0], x[1])


def test_kernel_of_square_map_family():
    ring = family_ring(4, -1)
    kernel = ring.kernel_of_square_map()
    assert kernel.dim == 3
    for rel in ring.relations:
        assert kernel.contains(poly_to_gram(rel))


def test_kernel_of_square_map_free_ring():
    free = GradedQuotient(3, [], max_degree=8)
    assert free.kernel_of_square_map().dim == 0


def test_kernel_plus_rank():
    for params in [(0, 0), (5, 2), (-7, 3)]:
        ring = family_ring(*params)
        assert ring.kernel_of_square_map().dim + ring.h4_dim() == 6


def test_change_of_variables_identity_and_inverse():
    ring = family_ring(2, 3)
    assert ring.change_of_variables(linalg.identity(3)).same_ideal_through(ring, 6)
    rng = random.Random(7)
    for _ in range(10):
        while True:
            P = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            if linalg.det(P) != 0:
                break
        back = ring.change_of_variables(P).change_of_variables(linalg.inverse(P))
        assert back.same_ideal_through(ring, 6)


def test_change_of_variables_rejects_singular():
    ring = family_ring(1, 0)
    with pytest.raises(ValueError):
        ring.change_of_variables([[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_t3_change_of_variables_displayed_relations():
    x = [V(4, i) for i in range(4)]
    integral = GradedQuotient(
        4,
        [
            x[0] * x[0],
            x[1] * x[1],
            x[2] * (x[0] + x[1].scale(2) + x[2]),
            x[3] * (x[0] + x[1].scale(2) + x[3]),
        ],
        max_degree=8,
    )
    P = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [Fraction(-1, 2), -1, 1, 0],
        [Fraction(-1, 2), -1, 0, 1],
    ]
    displayed = GradedQuotient(
        4,
        [x[0] * x[0], x[1] * x[1], x[2] * x[2] - x[0] * x[1], x[3] * x[3] - x[0] * x[1]],
        max_degree=8,
    )
    assert integral.change_of_variables(P).same_ideal_through(displayed, 8)


def test_graded_dim_invariant_under_change_of_variables():
    rng = random.Random(11)
    ring = family_ring(-2, 9)
    for _ in range(50):
        while True:
            P = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            if linalg.det(P) != 0:
                break
        moved = ring.change_of_variables(P)
        assert [moved.graded_dim(d) for d in (0, 2, 4, 6)] == [1, 3, 3, 1]


def test_quadric_system_validation():
    with pytest.raises(ValueError):
        QuadricSystem(2, (((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))),))
    x = [V(3, i) for i in range(3)]
    with pytest.raises(ValueError):
        QuadricSystem.from_polys([x[0] * x[0], (x[0] * x[0]).scale(2)])


def test_mult_by_class():
    ring = family_ring(1, 1)
    x = [V(3, i) for i in range(3)]
    m = ring.mult_by_class(x[0] + x[1])
    assert m.kernel_dim + m.rank == 3
    zero_map = ring.mult_by_class(HomPoly.zero(3, 1))
    assert zero_map.kernel_dim == 3  # multiplying by zero kills everything

import itertools

import pytest

from tropdiff.lattice import GeneratorSet, gs_contains, gs_enumerate_below
from tropdiff.newton import (in_box_translate, newton_contains, newton_contains_lp,
                             newton_vertices, polytope_minkowski_vertices, polytope_vertices,
                             staircase_vertices, support_function, tilde_generators,
                             vertex_set, vertices_lp)

from helpers import (newton_contains_oracle, rand_points, rng, staircase_by_brute_force,
                     vertices_oracle)

STAIR_A = [(2, 3), (3, 1), (5, 0)]
STAIR_B = [(0, 4), (1, 3), (4, 2)]
STAIR_PRODUCT = {(2, 7), (3, 5), (4, 4), (6, 3), (9, 2)}


def G(points=(), cones=(), dim=2):
    return GeneratorSet.make(dim, points, cones)


def test_vertices_examples():
    assert newton_vertices(G([(1, 1), (2, 2)])) == {(1, 1)}
    assert newton_vertices(G([(0, 2), (1, 1), (2, 0)])) == {(0, 2), (2, 0)}
    sums = [(a[0] + b[0], a[1] + b[1]) for a in STAIR_A for b in STAIR_B]
    assert newton_vertices(G(sums)) == STAIR_PRODUCT
    assert newton_vertices(G()) == frozenset()


def test_vertices_of_cones_use_the_apexes():
    assert newton_vertices(G([(0, 5)], [(2, 0), (1, 1)])) == {(0, 5), (1, 1), (2, 0)}
    assert newton_vertices(GeneratorSet.full(3)) == {(0, 0, 0)}


def test_one_dimensional_vertex_is_the_minimum():
    assert newton_vertices(G([(4,), (2,), (7,)], dim=1)) == {(2,)}
    assert newton_vertices(G([(4,)], [(1,)], dim=1)) == {(1,)}


def test_staircase_agrees_with_lp_route_and_oracles():
    r = rng(10)
    for _ in range(150):
        pts = rand_points(r, 2, r.randint(1, 8), 7)
        stair = set(staircase_vertices(pts))
        assert stair == set(vertices_lp(pts)) == vertices_oracle(pts)
        assert stair == staircase_by_brute_force(pts)


def test_three_dimensional_vertices_against_float_oracle():
    r = rng(11)
    for _ in range(60):
        pts = rand_points(r, 3, r.randint(1, 7), 5)
        assert set(vertex_set(pts, 3)) == vertices_oracle(pts)


def test_newton_contains_examples():
    assert newton_contains(G([(1, 0), (0, 1)]), (1, 1))
    assert not newton_contains(G([(1, 0)]), (0, 0))
    assert newton_contains(G([(0, 4), (1, 3)]), (2, 3))
    assert not newton_contains(G(), (0, 0))


def test_newton_contains_routes_agree():
    r = rng(12)
    for _ in range(80):
        m = r.choice([2, 3])
        a = G(rand_points(r, m, r.randint(1, 5), 5), dim=m)
        for I in rand_points(r, m, 6, 6):
            expected = newton_contains_oracle(a.generators(), I)
            assert newton_contains(a, I) == expected
            assert newton_contains_lp(a, I) == expected


def test_box_translate_is_half_open():
    verts = [(1, 0), (0, 1)]
    assert in_box_translate(verts, (1, 1))
    assert in_box_translate(verts, (1, 0))
    assert not in_box_translate(verts, (2, 0))
    assert not in_box_translate(verts, (2, 1))


def test_tilde_generators_examples():
    # the same set as the cones generated by (1,0), (0,1), (1,1)
    t = tilde_generators(G([(1, 0), (0, 1)]))
    assert t == G(cones=[(1, 0), (0, 1), (1, 1)])
    assert gs_enumerate_below(t, (4, 4)) == {I for I in itertools.product(range(5), repeat=2)
                                             if newton_contains(G([(1, 0), (0, 1)]), I)}
    assert tilde_generators(G([(0, 0)])) == G(cones=[(0, 0)])
    assert tilde_generators(G([(2,)], dim=1)) == G(cones=[(2,)], dim=1)
    assert tilde_generators(G()) == G()


def test_tilde_generators_on_wide_staircase():
    a = G([(0, 7), (3, 2), (8, 0)])
    t = tilde_generators(a)
    for I in itertools.product(range(10), repeat=2):
        assert gs_contains(t, I) == newton_contains(a, I)


def test_support_function_examples():
    assert support_function([(1, 0), (0, 1)], (1, 1)) == 1
    assert support_function([(1, 0), (0, 1)], (2, 1)) == 2
    assert support_function([(2, 3), (3, 1), (5, 0)], (1, 1)) == 5
    with pytest.raises(ValueError):
        support_function([], (1, 1))


def test_support_function_is_sublinear():
    r = rng(13)
    for _ in range(100):
        verts = sorted(vertex_set(rand_points(r, 2, 4, 6), 2))
        x, y = rand_points(r, 2, 2, 5)
        xy = (x[0] + y[0], x[1] + y[1])
        assert support_function(verts, xy) <= support_function(verts, x) + support_function(verts, y)
        assert support_function(verts, (2 * x[0], 2 * x[1])) == 2 * support_function(verts, x)


def test_minkowski_polytope_vertices_examples():
    assert polytope_minkowski_vertices(STAIR_A, STAIR_B) == STAIR_PRODUCT | {(6, 5)}
    assert polytope_minkowski_vertices([(0, 0)], STAIR_B) == set(STAIR_B)
    assert polytope_minkowski_vertices([(1, 0), (0, 1)], [(1, 0), (0, 1)]) == {(2, 0), (0, 2)}


def test_minkowski_polytope_vertices_match_hull_of_sums():
    r = rng(14)
    for _ in range(60):
        A = sorted(vertex_set(rand_points(r, 2, 4, 5), 2))
        B = sorted(vertex_set(rand_points(r, 2, 4, 5), 2))
        sums = {(a[0] + b[0], a[1] + b[1]) for a in A for b in B}
        assert polytope_minkowski_vertices(A, B) == polytope_vertices(sums)


def test_polytope_vertices_includes_upper_corners():
    # hull of the union of the two staircases
    assert polytope_vertices(STAIR_A + STAIR_B) == {(0, 4), (3, 1), (4, 2), (5, 0)}

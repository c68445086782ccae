"""Hypothesis-driven laws, complementary to the seeded acceptance suite."""

from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import in_hull_plus_orthant, planar_contains
from tropdiff.diffpoly import DiffMonomial, DiffPoly, diff_derive, eval_poly
from tropdiff.lattice import GeneratorSet, gs_enumerate_below, gs_shift_clamped
from tropdiff.newton import newton_contains, newton_vertices, staircase_vertices, vertices_lp
from tropdiff.series import BSeries, KPoly, initial_term, sp, trop
from tropdiff.vertex_semiring import VertexPolynomial, vp_leq, vp_prec

coord = st.integers(0, 6)
point2 = st.tuples(coord, coord)
point3 = st.tuples(coord, coord, coord)
points2 = st.lists(point2, min_size=1, max_size=7)
points3 = st.lists(point3, min_size=1, max_size=6)
coeff = st.integers(-3, 3).filter(bool)
kpoly2 = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeff,
                         min_size=1, max_size=4).map(lambda d: KPoly(2, d))


@given(points2)
def test_planar_routes_agree(pts):
    assert set(staircase_vertices(pts)) == set(vertices_lp(pts))


@settings(max_examples=40, deadline=None)
@given(points3, point3)
def test_three_dimensional_membership_matches_float_lp(pts, I):
    assert newton_contains(GeneratorSet.make(3, pts), I) == in_hull_plus_orthant(I, pts)


@given(points2, point2)
def test_planar_membership_matches_supporting_directions(pts, I):
    assert newton_contains(GeneratorSet.make(2, pts), I) == planar_contains(pts, I)


@given(points2, st.lists(point2, max_size=2), point2, point2)
def test_clamped_shifts_compose(pts, cones, J, K):
    a = GeneratorSet.make(2, pts, cones)
    JK = (J[0] + K[0], J[1] + K[1])
    bound = (8, 8)
    twice = gs_enumerate_below(gs_shift_clamped(gs_shift_clamped(a, J), K), bound)
    assert twice == gs_enumerate_below(gs_shift_clamped(a, JK), bound)
    direct = {(I[0] - J[0], I[1] - J[1]) for I in gs_enumerate_below(a, (14, 14))
              if I[0] >= J[0] and I[1] >= J[1]}
    assert gs_enumerate_below(gs_shift_clamped(a, J), bound) == \
        {I for I in direct if I[0] <= 8 and I[1] <= 8}


@given(points2)
def test_monomial_order_is_reversed_product_order(pts):
    for I in pts:
        for J in pts:
            a, b = VertexPolynomial.of(2, [I]), VertexPolynomial.of(2, [J])
            assert vp_leq(a, b) == (I[0] >= J[0] and I[1] >= J[1])


@given(kpoly2, kpoly2)
def test_trop_law_and_relevant_sums(f, g):
    assert trop(f * g) == trop(f) * trop(g)
    if not f.is_zero() and not trop(f).is_zero() and vp_prec(trop(f), trop(g)):
        assert trop(f + g) == trop(g)


@given(kpoly2)
def test_initial_term_keeps_the_vertices(f):
    head = initial_term(f)
    assert trop(head) == trop(f)
    rest = f - head
    if not rest.is_zero() and not (trop(rest).support & trop(f).support):
        assert vp_prec(trop(rest), trop(f))


@settings(deadline=None)
@given(st.lists(st.tuples(kpoly2, st.sampled_from([(0, 0), (1, 0), (0, 1), (1, 1)]),
                          st.integers(1, 2)), min_size=1, max_size=3),
       kpoly2, st.integers(1, 2))
def test_derivation_commutes_with_evaluation(terms, a, i):
    P = DiffPoly(2, 1, KPoly, [(DiffMonomial.var(1, J, e), c) for c, J, e in terms])
    unit = (1, 0) if i == 1 else (0, 1)
    assert eval_poly(diff_derive(P, i), [a]).value == eval_poly(P, [a]).value.derive(unit)
    Pb = P.map_coeffs(sp, BSeries)
    ab = [sp(a)]
    assert eval_poly(diff_derive(Pb, i), ab).value == eval_poly(Pb, ab).value.derive(unit)


@given(points2)
def test_vertex_sets_are_pareto_minimal(pts):
    verts = newton_vertices(GeneratorSet.make(2, pts))
    assert all(not (p != q and p[0] >= q[0] and p[1] >= q[1]) for p in verts for q in verts)

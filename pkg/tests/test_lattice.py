import pytest

from tropdiff.lattice import (DimensionError, GeneratorSet, gs_contains, gs_enumerate_below,
                              gs_minkowski, gs_normalize, gs_shift_clamped, gs_union,
                              pareto_minima)

from helpers import rand_bseries, rng


def test_normalize_drops_points_under_cones():
    g = gs_normalize(2, [(1, 1), (3, 4), (0, 5)], [(2, 2), (3, 3)])
    assert g.points == ((0, 5), (1, 1))
    assert g.cones == ((2, 2),)


def test_normalize_rejects_bad_indices():
    with pytest.raises(DimensionError):
        gs_normalize(2, [(1, 2, 3)])
    with pytest.raises(ValueError):
        gs_normalize(1, [(-1,)])


def test_pareto_minima_sorted():
    assert pareto_minima([(2, 0), (0, 2), (1, 1), (2, 2), (0, 3)]) == [(0, 2), (1, 1), (2, 0)]


def test_union_and_minkowski_small():
    a = GeneratorSet.make(2, [(1, 0), (0, 1)])
    b = GeneratorSet.make(2, [(1, 0), (0, 1)])
    assert gs_minkowski(a, b).points == ((0, 2), (1, 1), (2, 0))
    assert gs_union(a, GeneratorSet.make(2, [(5, 5)])).points == ((0, 1), (1, 0), (5, 5))


def test_minkowski_with_cone():
    full = GeneratorSet.full(2)
    a = GeneratorSet.make(2, [(1, 2), (3, 0)])
    assert gs_minkowski(a, full) == GeneratorSet.make(2, cones=[(1, 2), (3, 0)])


def test_shift_clamped():
    # 1 + u + t^2 u + t^3 u^2 shifted by (1,1) is t + t^2 u
    a = GeneratorSet.make(2, [(0, 0), (0, 1), (2, 1), (3, 2)])
    assert gs_shift_clamped(a, (1, 1)) == GeneratorSet.make(2, [(1, 0), (2, 1)])
    assert gs_shift_clamped(GeneratorSet.full(2), (4, 7)) == GeneratorSet.full(2)
    assert gs_shift_clamped(GeneratorSet.make(2, cones=[(3, 1)]), (1, 2)) == \
        GeneratorSet.make(2, cones=[(2, 0)])


def test_contains_and_enumerate():
    a = GeneratorSet.make(2, [(0, 3)], [(2, 1)])
    assert gs_contains(a, (0, 3)) and gs_contains(a, (5, 5)) and not gs_contains(a, (1, 1))
    assert gs_enumerate_below(a, (2, 2)) == {(2, 1), (2, 2)}
    assert (0, 3) in a


def test_json_roundtrip():
    a = GeneratorSet.make(3, [(1, 2, 3)], [(0, 0, 4)])
    assert GeneratorSet.from_json(a.to_json()) == a


def test_set_laws_on_random_instances():
    r = rng(1)
    bound = (6, 6)
    for _ in range(200):
        a, b, c = (rand_bseries(r).carrier for _ in range(3))

        def E(x):
            return gs_enumerate_below(x, bound)
        assert E(gs_union(a, b)) == E(gs_union(b, a)) == E(a) | E(b)
        assert gs_union(a, a) == a
        assert E(gs_minkowski(a, b)) == E(gs_minkowski(b, a))
        assert gs_minkowski(gs_minkowski(a, b), c) == gs_minkowski(a, gs_minkowski(b, c))
        assert gs_union(gs_union(a, b), c) == gs_union(a, gs_union(b, c))
        assert E(gs_minkowski(a, gs_union(b, c))) == \
            E(gs_union(gs_minkowski(a, b), gs_minkowski(a, c)))

"""Newton polyhedra of subsets of N^m, computed exactly.

``New(A)`` is the convex hull of ``A + N^m``.  Every routine here answers its
question either with a planar staircase walk (m <= 2) or with an exact
rational linear program (any m); the two are cross-checked in the tests.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from . import lp
from .lattice import (GeneratorSet, MultiIndex, add_index, check_dim, dominates,
                      gs_normalize, pareto_minima)


def _cross(o: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def staircase_vertices(points: Iterable[MultiIndex]) -> list[MultiIndex]:
    """Vertices of New(points) in the plane, ordered by first coordinate."""
    hull: list[MultiIndex] = []
    # Pareto minima sorted by x come with strictly decreasing y
    for p in pareto_minima(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def _in_hull_plus_orthant(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Exact LP: is ``v`` in ``Conv(gens) + R^m_{>=0}``?"""
    if not gens:
        return False
    m = len(v)
    k = len(gens)
    A = []
    for c in range(m):
        row = [u[c] for u in gens] + [1 if j == c else 0 for j in range(m)]
        A.append(row)
    A.append([1] * k + [0] * m)
    return lp.feasible(A, list(v) + [1])


def _in_hull(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Exact LP: is ``v`` in ``Conv(gens)``?"""
    if not gens:
        return False
    A = [[u[c] for u in gens] for c in range(len(v))]
    A.append([1] * len(gens))
    return lp.feasible(A, list(v) + [1])


def vertices_lp(points: Iterable[MultiIndex]) -> frozenset[MultiIndex]:
    """Vertex set of New(points) by the general LP route (any dimension)."""
    cands = pareto_minima(points)
    out = set()
    for v in cands:
        others = [u for u in cands if u != v]
        if not _in_hull_plus_orthant(v, others):
            out.add(v)
    return frozenset(out)


def newton_vertices(a: GeneratorSet) -> frozenset[MultiIndex]:
    gens = a.generators()
    if not gens:
        return frozenset()
    if a.dim == 1:
        return frozenset({min(gens)})
    if a.dim == 2:
        return frozenset(staircase_vertices(gens))
    return vertices_lp(gens)


def vertex_set(points: Iterable[Sequence[int]], dim: int) -> frozenset[MultiIndex]:
    """Vert of a finite point collection."""
    return newton_vertices(gs_normalize(dim, points))


def _staircase_contains(verts: list[MultiIndex], I: Sequence[int]) -> bool:
    if I[0] < verts[0][0] or I[1] < verts[-1][1]:
        return False
    return all(_cross(p, q, I) >= 0 for p, q in zip(verts, verts[1:]))


def newton_contains_lp(a: GeneratorSet, I: Sequence[int]) -> bool:
    check_dim(a.dim, len(I))
    return _in_hull_plus_orthant(I, pareto_minima(a.generators()))


def newton_contains(a: GeneratorSet, I: Sequence[int]) -> bool:
    """Whether the lattice point ``I`` lies in New(A)."""
    check_dim(a.dim, len(I))
    gens = a.generators()
    if not gens:
        return False
    if any(dominates(I, g) for g in gens):
        return True
    if a.dim == 1:
        return False
    if a.dim == 2:
        return _staircase_contains(staircase_vertices(gens), I)
    return newton_contains_lp(a, I)


def in_box_translate(verts: Sequence[MultiIndex], p: Sequence[int]) -> bool:
    """Is ``p`` in ``Conv(verts) + [0,1)^m``?

    Minimises the largest offset ``s`` over all ways of writing
    ``p = x + y`` with ``x`` in the hull and ``0 <= y <= s``; the half-open
    box is hit exactly when the optimum is below 1.
    """
    m = len(p)
    k = len(verts)
    # variables: lambda (k), y (m), s (1), slack (m)
    n = k + 2 * m + 1
    A = []
    for c in range(m):
        row = [0] * n
        for j, v in enumerate(verts):
            row[j] = v[c]
        row[k + c] = 1
        A.append(row)
    row = [0] * n
    row[:k] = [1] * k
    A.append(row)
    for c in range(m):
        row = [0] * n
        row[k + c] = 1
        row[k + m] = -1
        row[k + m + 1 + c] = 1
        A.append(row)
    b = list(p) + [1] + [0] * m
    cost = [0] * n
    cost[k + m] = 1
    best = lp.minimise(A, b, cost)
    return best is not None and best < 1


def tilde_generators(a: GeneratorSet) -> GeneratorSet:
    """Generators of the lattice points of New(A), as cones.

    Built from the identity that these lattice points are the integer points of
    ``Conv(Vert(A)) + [0,1)^m`` translated by N^m.
    """
    verts = sorted(newton_vertices(a))
    if not verts:
        return GeneratorSet.empty(a.dim)
    lo = [min(v[c] for v in verts) for c in range(a.dim)]
    hi = [max(v[c] for v in verts) for c in range(a.dim)]
    box = itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi)))
    # the box translate sits inside New(A), so the cheap test prunes first
    cones = [p for p in box if newton_contains(a, p) and in_box_translate(verts, p)]
    return gs_normalize(a.dim, (), cones)


def support_function(verts: Iterable[Sequence[int]], x: Sequence[int]) -> int:
    """max <u, x> over u in the polytope spanned by ``verts``."""
    verts = list(verts)
    if not verts:
        raise ValueError("support function of the empty polytope is undefined")
    return max(sum(ui * xi for ui, xi in zip(u, x)) for u in verts)


def polytope_vertices(points: Iterable[Sequence[int]]) -> frozenset[MultiIndex]:
    """Vertices of the bounded polytope Conv(points)."""
    pts = sorted({tuple(p) for p in points})
    return frozenset(v for v in pts if not _in_hull(v, [u for u in pts if u != v]))


def _unique_decomposition(I: Sequence[int], A: Sequence[MultiIndex],
                          B: Sequence[MultiIndex]) -> bool:
    m = len(I)
    ka, kb = len(A), len(B)
    rows = [[1] * ka + [0] * kb, [0] * ka + [1] * kb]
    for c in range(m):
        rows.append([u[c] for u in A] + [u[c] for u in B])
    rhs = [1, 1] + list(I)
    for c in range(m):
        cost = [u[c] for u in A] + [0] * kb
        low = lp.minimise(rows, rhs, cost)
        if low is None:
            return False
        high = -lp.minimise(rows, rhs, [-v for v in cost])
        if low != high:
            return False
    return True


def polytope_minkowski_vertices(A: Iterable[Sequence[int]],
                                B: Iterable[Sequence[int]]) -> frozenset[MultiIndex]:
    """Vertices of Conv(A) + Conv(B): the sums that split in exactly one way."""
    A = sorted({tuple(p) for p in A})
    B = sorted({tuple(p) for p in B})
    if not A or not B:
        return frozenset()
    check_dim(*(len(p) for p in A + B))
    sums = {add_index(p, q) for p in A for q in B}
    return frozenset(I for I in sums if _unique_decomposition(I, A, B))


"""Random instance generators and independent oracles shared by the tests."""

from __future__ import annotations

import itertools
import os
import random
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from tropdiff.diffpoly import DiffMonomial, DiffPoly
from tropdiff.lattice import GeneratorSet
from tropdiff.series import BSeries, KFraction, KPoly
from tropdiff.vertex_semiring import VertexPolynomial

DEFAULT_SEED = 20261015


def seed() -> int:
    return int(os.environ.get("TROPDIFF_SEED", DEFAULT_SEED))


def rng(offset: int = 0) -> random.Random:
    return random.Random(seed() + offset)


# -- float LP oracle, independent of the exact simplex ---------------------------

def in_hull_plus_orthant(v, gens) -> bool:
    """Is ``v`` in Conv(gens) + R^m_{>=0}?  Float LP with a safe margin."""
    gens = [tuple(g) for g in gens]
    if not gens:
        return False
    m, k = len(v), len(gens)
    # sum lambda_j g_j <= v, sum lambda = 1, lambda >= 0
    A_ub = np.array([[g[c] for g in gens] for c in range(m)], dtype=float)
    A_eq = np.ones((1, k))
    res = linprog(np.zeros(k), A_ub=A_ub, b_ub=np.array(v, dtype=float),
                  A_eq=A_eq, b_eq=[1.0], bounds=[(0, None)] * k, method="highs")
    return res.status == 0


def vertices_oracle(points) -> set:
    pts = sorted({tuple(p) for p in points})
    return {v for v in pts if not in_hull_plus_orthant(v, [u for u in pts if u != v])}


def newton_contains_oracle(points, I) -> bool:
    return in_hull_plus_orthant(I, points)


def minimal_spanning_subset(points) -> set:
    """Brute force: the smallest subset whose Newton polyhedron contains all points."""
    pts = sorted({tuple(p) for p in points})
    for r in range(1, len(pts) + 1):
        found = [set(S) for S in itertools.combinations(pts, r)
                 if all(newton_contains_oracle(S, p) for p in pts)]
        if found:
            assert len(found) == 1, found
            return found[0]
    return set()


def staircase_by_brute_force(points) -> set:
    """m = 2 only: v is a vertex iff some strictly positive direction is minimised only at v."""
    pts = sorted({tuple(p) for p in points})
    out = set()
    for v in pts:
        for a in range(1, 60):
            for b in range(1, 60):
                val = a * v[0] + b * v[1]
                if all(a * p[0] + b * p[1] > val for p in pts if p != v):
                    out.add(v)
                    break
            else:
                continue
            break
    return out


# -- random instances -------------------------------------------------------------

def rand_points(r: random.Random, m: int, k: int, hi: int = 6) -> list[tuple[int, ...]]:
    return [tuple(r.randint(0, hi) for _ in range(m)) for _ in range(k)]


def rand_vp(r: random.Random, m: int = 2, kmax: int = 5, hi: int = 6,
            nonzero: bool = True) -> VertexPolynomial:
    k = r.randint(1 if nonzero else 0, kmax)
    return VertexPolynomial.from_points(m, rand_points(r, m, k, hi))


def rand_bseries(r: random.Random, m: int = 2, kmax: int = 4, hi: int = 5,
                 cones: bool = True, nonzero: bool = True) -> BSeries:
    pts = rand_points(r, m, r.randint(1 if nonzero else 0, kmax), hi)
    cs = rand_points(r, m, r.randint(0, 1), hi) if cones else []
    return BSeries(GeneratorSet.make(m, pts, cs))


def rand_coeff(r: random.Random) -> Fraction:
    c = 0
    while c == 0:
        c = Fraction(r.randint(-3, 3), r.randint(1, 2))
    return c


def rand_kpoly(r: random.Random, m: int = 2, kmax: int = 4, hi: int = 4,
               nonzero: bool = True) -> KPoly:
    while True:
        k = r.randint(1 if nonzero else 0, kmax)
        p = KPoly(m, {I: rand_coeff(r) for I in rand_points(r, m, k, hi)})
        if not nonzero or not p.is_zero():
            return p


def cancellation_pair(r: random.Random, m: int = 2) -> tuple[KPoly, KPoly]:
    """Pairs like (f + g, f - g) whose product loses its cross terms."""
    f = rand_kpoly(r, m, 2, 3)
    g = rand_kpoly(r, m, 2, 3)
    while (f - g).is_zero() or (f + g).is_zero():
        g = rand_kpoly(r, m, 2, 3)
    return f + g, f - g


def rand_monomial(r: random.Random, m: int, n: int, order: int = 1,
                  degree: int = 2) -> DiffMonomial:
    exps = {}
    for _ in range(r.randint(1, degree)):
        i = r.randint(1, n)
        J = tuple(r.randint(0, order) for _ in range(m))
        exps[(i, J)] = exps.get((i, J), 0) + 1
    return DiffMonomial.of(exps)


def rand_diffpoly(r: random.Random, m: int = 2, n: int = 1, domain: type = KPoly,
                  kmax: int = 3, order: int = 1, degree: int = 2,
                  constant_term: bool = True) -> DiffPoly:
    terms = []
    for _ in range(r.randint(1, kmax)):
        mono = rand_monomial(r, m, n, order, degree)
        terms.append((mono, _rand_coefficient(r, m, domain)))
    if constant_term and r.random() < 0.5:
        terms.append((DiffMonomial(), _rand_coefficient(r, m, domain)))
    return DiffPoly(m, n, domain, terms)


def _rand_coefficient(r: random.Random, m: int, domain: type):
    if domain is BSeries:
        return rand_bseries(r, m, 3, 3, cones=False)
    if domain is KPoly:
        return rand_kpoly(r, m, 2, 3)
    den = rand_kpoly(r, m, 1, 2) if r.random() < 0.5 else KPoly.one(m)
    return KFraction(rand_kpoly(r, m, 2, 3), den)


def planar_contains(points, I) -> bool:
    """Exact m = 2 test of I in New(points) through supporting directions.

    I lies in Conv(S) + R^2_{>=0} iff <w, I> >= min_S <w, s> for every
    nonnegative w; the facet normals of New(S) are among the axis directions
    and the nonnegative normals of segments between points of S.
    """
    pts = {tuple(p) for p in points}
    if not pts:
        return False
    dirs = {(1, 0), (0, 1)}
    for p in pts:
        for q in pts:
            w = (q[1] - p[1], p[0] - q[0])
            if w[0] < 0 or (w[0] == 0 and w[1] < 0):
                w = (-w[0], -w[1])
            if w[0] >= 0 and w[1] >= 0 and w != (0, 0):
                dirs.add(w)
    return all(w[0] * I[0] + w[1] * I[1] >= min(w[0] * s[0] + w[1] * s[1] for s in pts)
               for w in dirs)


def minimal_spanning_planar(points) -> set:
    """Brute force over all subsets: the unique smallest one spanning New(points)."""
    pts = sorted({tuple(p) for p in points})
    spanning = [set(S) for r in range(1, len(pts) + 1)
                for S in itertools.combinations(pts, r)
                if all(planar_contains(S, p) for p in pts)]
    smallest = min(len(S) for S in spanning)
    best = [S for S in spanning if len(S) == smallest]
    assert len(best) == 1, best
    # every spanning subset contains the minimal one
    assert all(best[0] <= S for S in spanning)
    return best[0]

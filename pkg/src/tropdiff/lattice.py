"""Finitely generated subsets of N^m.

A subset is stored as a finite list of isolated points together with a finite
list of cone apexes; an apex ``g`` stands for the translated orthant
``g + N^m``.  This is closed under union, Minkowski sum and the clamped shift
used for derivatives of boolean power series.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

MultiIndex = tuple[int, ...]


class DimensionError(ValueError):
    """Raised when objects living in different N^m are combined."""


def as_index(entries: Iterable[int]) -> MultiIndex:
    idx = tuple(int(e) for e in entries)
    if any(e < 0 for e in idx):
        raise ValueError(f"multi-index entries must be nonnegative: {idx}")
    return idx


def dominates(p: Sequence[int], g: Sequence[int]) -> bool:
    """Componentwise ``p >= g``."""
    return all(x >= y for x, y in zip(p, g))


def add_index(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def pareto_minima(points: Iterable[MultiIndex]) -> list[MultiIndex]:
    """Componentwise-minimal elements, sorted lexicographically."""
    pts = sorted(set(points))
    keep: list[MultiIndex] = []
    for p in pts:
        # anything dominated by p sorts after p, so only earlier entries can dominate it
        if not any(dominates(p, q) for q in keep):
            keep.append(p)
    return keep


def check_dim(*dims: int) -> int:
    first = dims[0]
    for d in dims[1:]:
        if d != first:
            raise DimensionError(f"dimension mismatch: {first} vs {d}")
    return first


@dataclass(frozen=True)
class GeneratorSet:
    """Canonical points-plus-cones description of a subset of N^m.

    Build instances with :func:`gs_normalize` (or :meth:`make`); the raw
    constructor trusts its arguments to already be canonical.
    """

    dim: int
    points: tuple[MultiIndex, ...] = ()
    cones: tuple[MultiIndex, ...] = ()

    @classmethod
    def make(cls, dim: int, points: Iterable[Sequence[int]] = (),
             cones: Iterable[Sequence[int]] = ()) -> "GeneratorSet":
        return gs_normalize(dim, points, cones)

    @classmethod
    def empty(cls, dim: int) -> "GeneratorSet":
        return cls(dim)

    @classmethod
    def full(cls, dim: int) -> "GeneratorSet":
        return cls(dim, (), ((0,) * dim,))

    @classmethod
    def one(cls, dim: int) -> "GeneratorSet":
        return cls(dim, ((0,) * dim,), ())

    def is_empty(self) -> bool:
        return not self.points and not self.cones

    def is_finite(self) -> bool:
        return not self.cones

    def generators(self) -> tuple[MultiIndex, ...]:
        """Points together with cone apexes (they span the same Newton polyhedron)."""
        return self.points + self.cones

    def __contains__(self, idx: Sequence[int]) -> bool:
        return gs_contains(self, tuple(idx))

    def __or__(self, other: "GeneratorSet") -> "GeneratorSet":
        return gs_union(self, other)

    def __add__(self, other: "GeneratorSet") -> "GeneratorSet":
        return gs_minkowski(self, other)

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "points": [list(p) for p in self.points],
                "cones": [list(c) for c in self.cones]}

    @classmethod
    def from_json(cls, data: dict) -> "GeneratorSet":
        return gs_normalize(int(data["dim"]), data.get("points", ()), data.get("cones", ()))


def gs_normalize(dim: int, points: Iterable[Sequence[int]] = (),
                 cones: Iterable[Sequence[int]] = ()) -> GeneratorSet:
    pts = [as_index(p) for p in points]
    cns = [as_index(c) for c in cones]
    for idx in itertools.chain(pts, cns):
        if len(idx) != dim:
            raise DimensionError(f"index {idx} does not have length {dim}")
    apexes = pareto_minima(cns)
    kept = sorted({p for p in pts if not any(dominates(p, g) for g in apexes)})
    return GeneratorSet(dim, tuple(kept), tuple(apexes))


def gs_union(a: GeneratorSet, b: GeneratorSet) -> GeneratorSet:
    dim = check_dim(a.dim, b.dim)
    return gs_normalize(dim, a.points + b.points, a.cones + b.cones)


def gs_minkowski(a: GeneratorSet, b: GeneratorSet) -> GeneratorSet:
    dim = check_dim(a.dim, b.dim)
    points = [add_index(p, q) for p in a.points for q in b.points]
    cones = [add_index(p, g) for p in a.generators() for g in b.cones]
    cones += [add_index(g, q) for g in a.cones for q in b.points]
    return gs_normalize(dim, points, cones)


def gs_shift_clamped(a: GeneratorSet, J: Sequence[int]) -> GeneratorSet:
    """The set ``{I - J : I in A, I >= J}``."""
    J = as_index(J)
    check_dim(a.dim, len(J))
    points = [tuple(x - y for x, y in zip(p, J)) for p in a.points if dominates(p, J)]
    cones = [tuple(max(x - y, 0) for x, y in zip(g, J)) for g in a.cones]
    return gs_normalize(a.dim, points, cones)


def gs_contains(a: GeneratorSet, I: Sequence[int]) -> bool:
    check_dim(a.dim, len(I))
    I = tuple(I)
    return I in a.points or any(dominates(I, g) for g in a.cones)


def gs_enumerate_below(a: GeneratorSet, bound: Sequence[int]) -> set[MultiIndex]:
    check_dim(a.dim, len(bound))
    out = {p for p in a.points if dominates(bound, p)}
    for g in a.cones:
        if not dominates(bound, g):
            continue
        ranges = [range(lo, hi + 1) for lo, hi in zip(g, bound)]
        out.update(itertools.product(*ranges))
    return out

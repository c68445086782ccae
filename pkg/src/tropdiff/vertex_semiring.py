"""Vertex polynomials and their semifield of fractions.

A vertex polynomial is a finite subset of N^m that is the vertex set of its
own Newton polyhedron.  Addition is ``Vert`` of the union, multiplication is
``Vert`` of the Minkowski sum; the empty set is zero and the origin is one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import GeneratorSet, MultiIndex, as_index, check_dim, gs_minkowski, gs_normalize
from .newton import newton_contains, newton_vertices


class NotAVertexSet(ValueError):
    pass


@dataclass(frozen=True)
class VertexPolynomial:
    dim: int
    support: frozenset[MultiIndex]

    def __post_init__(self):
        for idx in self.support:
            if len(idx) != self.dim:
                raise ValueError(f"index {idx} does not have length {self.dim}")
        if newton_vertices(self.carrier()) != self.support:
            raise NotAVertexSet(f"{sorted(self.support)} is not a vertex set")

    @classmethod
    def of(cls, dim: int, support: Iterable[Sequence[int]]) -> "VertexPolynomial":
        """Construct from a set that is already a vertex set."""
        return cls(dim, frozenset(as_index(p) for p in support))

    @classmethod
    def vert(cls, a: GeneratorSet) -> "VertexPolynomial":
        """The vertex polynomial V(a) of a boolean series."""
        return cls(a.dim, newton_vertices(a))

    @classmethod
    def from_points(cls, dim: int, points: Iterable[Sequence[int]]) -> "VertexPolynomial":
        return cls.vert(gs_normalize(dim, points))

    @classmethod
    def zero(cls, dim: int) -> "VertexPolynomial":
        return cls(dim, frozenset())

    @classmethod
    def one(cls, dim: int) -> "VertexPolynomial":
        return cls(dim, frozenset({(0,) * dim}))

    def carrier(self) -> GeneratorSet:
        return gs_normalize(self.dim, self.support)

    def is_zero(self) -> bool:
        return not self.support

    def sorted(self) -> list[MultiIndex]:
        return sorted(self.support)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.sorted()]

    def __repr__(self) -> str:
        return f"VertexPolynomial({self.dim}, {self.sorted()})"

    def __add__(self, other: "VertexPolynomial") -> "VertexPolynomial":
        return vp_oplus(self, other)

    def __mul__(self, other: "VertexPolynomial") -> "VertexPolynomial":
        return vp_odot(self, other)

    def __le__(self, other: "VertexPolynomial") -> bool:
        return vp_leq(self, other)


def vp_oplus(a: VertexPolynomial, b: VertexPolynomial) -> VertexPolynomial:
    dim = check_dim(a.dim, b.dim)
    return VertexPolynomial(dim, newton_vertices(gs_normalize(dim, a.support | b.support)))


def vp_odot(a: VertexPolynomial, b: VertexPolynomial) -> VertexPolynomial:
    check_dim(a.dim, b.dim)
    return VertexPolynomial.vert(gs_minkowski(a.carrier(), b.carrier()))


def vp_sum(items: Iterable[VertexPolynomial], dim: int) -> VertexPolynomial:
    points: set[MultiIndex] = set()
    for it in items:
        check_dim(dim, it.dim)
        points |= it.support
    return VertexPolynomial.from_points(dim, points)


def vp_leq(a: VertexPolynomial, b: VertexPolynomial) -> bool:
    """``a <= b`` iff the support of ``a`` lies in New(B)."""
    check_dim(a.dim, b.dim)
    cb = b.carrier()
    return all(newton_contains(cb, I) for I in a.support)


def vp_leq_definitional(a: VertexPolynomial, b: VertexPolynomial) -> bool:
    return vp_oplus(a, b) == b


def vp_prec(a: VertexPolynomial, b: VertexPolynomial) -> bool:
    """Irrelevancy ``a < b`` with disjoint supports; undefined for ``a = 0``."""
    check_dim(a.dim, b.dim)
    if a.is_zero():
        raise ValueError("relevancy is only defined for nonzero left operands")
    return vp_leq(a, b) and not (a.support & b.support)


def vp_tropically_vanishes(summands: Sequence[VertexPolynomial]) -> bool:
    if not summands:
        raise ValueError("tropical vanishing needs at least one summand")
    dim = check_dim(*(s.dim for s in summands))
    if len(summands) == 1:
        return summands[0].is_zero()
    total = vp_sum(summands, dim)
    return all(vp_sum(summands[:i] + summands[i + 1:], dim) == total
               for i in range(len(summands)))


class VBFraction:
    """Element ``num/den`` of the fraction semifield; not reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: VertexPolynomial, den: VertexPolynomial):
        check_dim(num.dim, den.dim)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in vertex-polynomial fraction")
        self.num = num
        self.den = den

    @property
    def dim(self) -> int:
        return self.num.dim

    @classmethod
    def of(cls, a: VertexPolynomial) -> "VBFraction":
        return cls(a, VertexPolynomial.one(a.dim))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, VBFraction):
            return NotImplemented
        return frac_eq(self, other)

    __hash__ = None

    def __add__(self, other: "VBFraction") -> "VBFraction":
        return frac_add(self, other)

    def __mul__(self, other: "VBFraction") -> "VBFraction":
        return frac_mul(self, other)

    def __le__(self, other: "VBFraction") -> bool:
        return frac_leq(self, other)

    def __repr__(self) -> str:
        return f"VBFraction({self.num.sorted()} / {self.den.sorted()})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def frac_make(num: VertexPolynomial, den: VertexPolynomial) -> VBFraction:
    return VBFraction(num, den)


def frac_eq(p: VBFraction, q: VBFraction) -> bool:
    return vp_odot(p.num, q.den) == vp_odot(q.num, p.den)


def frac_add(p: VBFraction, q: VBFraction) -> VBFraction:
    return VBFraction(vp_oplus(vp_odot(p.num, q.den), vp_odot(p.den, q.num)),
                      vp_odot(p.den, q.den))


def frac_mul(p: VBFraction, q: VBFraction) -> VBFraction:
    return VBFraction(vp_odot(p.num, q.num), vp_odot(p.den, q.den))


def frac_leq(p: VBFraction, q: VBFraction) -> bool:
    return vp_leq(vp_odot(p.num, q.den), vp_odot(q.num, p.den))


def frac_prec(p: VBFraction, q: VBFraction) -> bool:
    return vp_prec(vp_odot(p.num, q.den), vp_odot(q.num, p.den))


def frac_is_integer(p: VBFraction) -> bool:
    return frac_leq(p, VBFraction.of(VertexPolynomial.one(p.dim)))

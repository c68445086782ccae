"""Boolean and rational power series in m variables.

``BSeries`` is a (possibly infinite) boolean series, stored by its support.
``KPoly`` is a finitely supported series with exact rational coefficients and
stands in for elements of K[[T]]; ``KFraction`` is a quotient of two of them.
All three expose the same small coefficient interface (``+``, ``*``,
``derive``, ``scale``, ``is_zero``) so differential polynomials can be built
over any of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .lattice import (DimensionError, GeneratorSet, MultiIndex, add_index, as_index,
                      check_dim, gs_minkowski, gs_normalize, gs_shift_clamped, gs_union)
from .newton import newton_vertices
from .vertex_semiring import VBFraction, VertexPolynomial

Rational = Union[int, Fraction]

CANONICAL_PREFIX = "t"
ALIASES = ("t", "u", "v")


def unit(dim: int, i: int) -> MultiIndex:
    return tuple(1 if k == i else 0 for k in range(dim))


def variable_name(k: int, dim: int, pretty: bool = False) -> str:
    if pretty and dim <= len(ALIASES):
        return ALIASES[k]
    return f"{CANONICAL_PREFIX}{k + 1}"


def format_monomial(I: Sequence[int], pretty: bool = False) -> str:
    parts = []
    for k, e in enumerate(I):
        if e == 0:
            continue
        name = variable_name(k, len(I), pretty)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def term_order(I: Sequence[int]):
    return (sum(I), tuple(-e for e in I))


@dataclass(frozen=True)
class BSeries:
    carrier: GeneratorSet

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @classmethod
    def of(cls, dim: int, points: Iterable[Sequence[int]] = (),
           cones: Iterable[Sequence[int]] = ()) -> "BSeries":
        return cls(gs_normalize(dim, points, cones))

    @classmethod
    def zero(cls, dim: int) -> "BSeries":
        return cls(GeneratorSet.empty(dim))

    @classmethod
    def one(cls, dim: int) -> "BSeries":
        return cls(GeneratorSet.one(dim))

    @classmethod
    def omega(cls, dim: int) -> "BSeries":
        """The series with full support N^m."""
        return cls(GeneratorSet.full(dim))

    def is_zero(self) -> bool:
        return self.carrier.is_empty()

    def __add__(self, other: "BSeries") -> "BSeries":
        return BSeries(gs_union(self.carrier, other.carrier))

    def __mul__(self, other: "BSeries") -> "BSeries":
        return BSeries(gs_minkowski(self.carrier, other.carrier))

    def __pow__(self, e: int) -> "BSeries":
        out = BSeries.one(self.dim)
        for _ in range(e):
            out = out * self
        return out

    def derive(self, J: Sequence[int]) -> "BSeries":
        return BSeries(gs_shift_clamped(self.carrier, J))

    def scale(self, n: int) -> "BSeries":
        # the natural numbers act on B through N -> B
        return self if n else BSeries.zero(self.dim)

    def vertex(self) -> VertexPolynomial:
        return VertexPolynomial.vert(self.carrier)

    def to_json(self) -> dict:
        return self.carrier.to_json()

    def format(self, pretty: bool = False) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for p in sorted(self.carrier.points, key=term_order):
            parts.append(format_monomial(p, pretty) or "1")
        for g in sorted(self.carrier.cones, key=term_order):
            mono = format_monomial(g, pretty)
            parts.append(f"{mono}*omega" if mono else "omega")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()


class KPoly:
    """Finitely supported series with nonzero rational coefficients."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Sequence[int], Rational] = ()):
        self.dim = dim
        clean: dict[MultiIndex, Fraction] = {}
        for I, c in dict(terms).items():
            I = as_index(I)
            if len(I) != dim:
                raise DimensionError(f"exponent {I} does not have length {dim}")
            c = Fraction(c)
            if c:
                clean[I] = clean.get(I, Fraction(0)) + c
        self._terms = {I: c for I, c in clean.items() if c}

    @classmethod
    def zero(cls, dim: int) -> "KPoly":
        return cls(dim)

    @classmethod
    def one(cls, dim: int) -> "KPoly":
        return cls.constant(dim, 1)

    @classmethod
    def constant(cls, dim: int, c: Rational) -> "KPoly":
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def monomial(cls, dim: int, I: Sequence[int], c: Rational = 1) -> "KPoly":
        return cls(dim, {tuple(I): c})

    @property
    def terms(self) -> dict[MultiIndex, Fraction]:
        return dict(self._terms)

    def support(self) -> frozenset[MultiIndex]:
        return frozenset(self._terms)

    def coeff(self, I: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(I), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self):
        """The value if this is a constant, else ``None``."""
        if not self._terms:
            return Fraction(0)
        if list(self._terms) == [(0,) * self.dim]:
            return self._terms[(0,) * self.dim]
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = KPoly.constant(self.dim, other)
        if not isinstance(other, KPoly):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self._terms.items())))

    def _coerce(self, other) -> "KPoly":
        if isinstance(other, (int, Fraction)):
            return KPoly.constant(self.dim, other)
        check_dim(self.dim, other.dim)
        return other

    def __add__(self, other) -> "KPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for I, c in other._terms.items():
            out[I] = out.get(I, 0) + c
        return KPoly(self.dim, out)

    __radd__ = __add__

    def __neg__(self) -> "KPoly":
        return KPoly(self.dim, {I: -c for I, c in self._terms.items()})

    def __sub__(self, other) -> "KPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "KPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "KPoly":
        other = self._coerce(other)
        out: dict[MultiIndex, Fraction] = {}
        for I, a in self._terms.items():
            for J, b in other._terms.items():
                K = add_index(I, J)
                out[K] = out.get(K, 0) + a * b
        return KPoly(self.dim, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "KPoly":
        out = KPoly.one(self.dim)
        for _ in range(e):
            out = out * self
        return out

    def derive(self, J: Sequence[int]) -> "KPoly":
        J = as_index(J)
        check_dim(self.dim, len(J))
        out = {}
        for I, c in self._terms.items():
            if any(i < j for i, j in zip(I, J)):
                continue
            factor = 1
            for i, j in zip(I, J):
                factor *= math.perm(i, j)
            out[tuple(i - j for i, j in zip(I, J))] = c * factor
        return KPoly(self.dim, out)

    def scale(self, n: int) -> "KPoly":
        return self * n

    def sorted_terms(self) -> list[tuple[MultiIndex, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: term_order(kv[0]))

    def format(self, pretty: bool = False) -> str:
        if not self._terms:
            return "0"
        out = ""
        for n, (I, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = format_monomial(I, pretty)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if n == 0:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"KPoly({self.dim}, {self.format()!r})"

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "terms": [{"exp": list(I), "coeff": str(c)} for I, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "KPoly":
        terms = data.get("terms", [])
        dim = int(data["dim"]) if "dim" in data else len(terms[0]["exp"])
        return cls(dim, {tuple(t["exp"]): Fraction(str(t["coeff"])) for t in terms})


class KFraction:
    """Quotient ``num/den`` of rational series; equality by cross multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: KPoly, den: KPoly | None = None):
        if den is None:
            den = KPoly.one(num.dim)
        check_dim(num.dim, den.dim)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        c = den.constant_value()
        if c is not None and c != 1:
            num, den = num * (1 / c), KPoly.one(num.dim)
        self.num = num
        self.den = den

    @property
    def dim(self) -> int:
        return self.num.dim

    @classmethod
    def zero(cls, dim: int) -> "KFraction":
        return cls(KPoly.zero(dim))

    @classmethod
    def one(cls, dim: int) -> "KFraction":
        return cls(KPoly.one(dim))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        """True when the denominator is 1 (a plain KPoly)."""
        return self.den == KPoly.one(self.dim)

    def _coerce(self, other) -> "KFraction":
        if isinstance(other, KFraction):
            return other
        if isinstance(other, KPoly):
            return KFraction(other)
        return KFraction(KPoly.constant(self.dim, other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, (KFraction, KPoly, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other) -> "KFraction":
        other = self._coerce(other)
        if self.den == other.den:
            return KFraction(self.num + other.num, self.den)
        return KFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "KFraction":
        return KFraction(-self.num, self.den)

    def __sub__(self, other) -> "KFraction":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "KFraction":
        other = self._coerce(other)
        return KFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "KFraction":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero series")
        return KFraction(self.num * other.den, self.den * other.num)

    def partial(self, i: int) -> "KFraction":
        e = unit(self.dim, i)
        d_num, d_den = self.num.derive(e), self.den.derive(e)
        if d_den.is_zero():
            return KFraction(d_num, self.den)
        return KFraction(d_num * self.den - self.num * d_den, self.den * self.den)

    def derive(self, J: Sequence[int]) -> "KFraction":
        out = self
        for i, j in enumerate(J):
            for _ in range(j):
                out = out.partial(i)
        return out

    def scale(self, n: int) -> "KFraction":
        return KFraction(self.num * n, self.den)

    def format(self, pretty: bool = False) -> str:
        if self.is_integral():
            return self.num.format(pretty)
        return f"({self.num.format(pretty)})/({self.den.format(pretty)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"KFraction({self.format()!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


# -- named operations ---------------------------------------------------------

def b_add(a: BSeries, b: BSeries) -> BSeries:
    return a + b


def b_mul(a: BSeries, b: BSeries) -> BSeries:
    return a * b


def b_derive(a: BSeries, J: Sequence[int]) -> BSeries:
    return a.derive(J)


def k_add(a: KPoly, b: KPoly) -> KPoly:
    return a + b


def k_mul(a: KPoly, b: KPoly) -> KPoly:
    return a * b


def k_derive(a: KPoly, J: Sequence[int]) -> KPoly:
    return a.derive(J)


def sp(alpha: KPoly) -> BSeries:
    return BSeries.of(alpha.dim, alpha.support())


def trop(alpha: KPoly) -> VertexPolynomial:
    return VertexPolynomial.vert(sp(alpha).carrier)


def trop_frac(num: KPoly, den: KPoly) -> VBFraction:
    if den.is_zero():
        raise ZeroDivisionError("trop of a fraction with zero denominator")
    return VBFraction(trop(num), trop(den))


def initial_term(alpha: KPoly) -> KPoly:
    verts = newton_vertices(sp(alpha).carrier)
    return KPoly(alpha.dim, {I: c for I, c in alpha.terms.items() if I in verts})


def e_K(a: Union[BSeries, VertexPolynomial, GeneratorSet]) -> KPoly:
    """All-ones lift of a finite boolean series."""
    if isinstance(a, VertexPolynomial):
        return KPoly(a.dim, {I: 1 for I in a.support})
    carrier = a.carrier if isinstance(a, BSeries) else a
    if not carrier.is_finite():
        raise ValueError("e_K needs a finite support")
    return KPoly(carrier.dim, {I: 1 for I in carrier.points})


def additive_support(alpha: KPoly, beta: KPoly) -> BSeries:
    dim = check_dim(alpha.dim, beta.dim)
    idx = alpha.support() | beta.support()
    return BSeries.of(dim, [I for I in idx if alpha.coeff(I) + beta.coeff(I) == 0])


def multiplicative_support(alpha: KPoly, beta: KPoly) -> BSeries:
    dim = check_dim(alpha.dim, beta.dim)
    sums: dict[MultiIndex, Fraction] = {}
    for I, a in alpha.terms.items():
        for J, b in beta.terms.items():
            K = add_index(I, J)
            sums[K] = sums.get(K, 0) + a * b
    return BSeries.of(dim, [I for I, c in sums.items() if c == 0])

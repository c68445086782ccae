"""Differential polynomials, their evaluation, tropicalization and initial forms.

A differential polynomial in the indeterminates ``x_{i,J}`` (``i`` in
``1..n``, ``J`` in N^m) is a finite sum of coefficient times monomial.  The
coefficients come from one of the series domains of :mod:`tropdiff.series`;
terms keep their insertion order, which is the term numbering used by the
solution witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, Union

from .lattice import DimensionError, MultiIndex, add_index, as_index, check_dim
from .series import (BSeries, KFraction, KPoly, e_K, initial_term, sp, trop, unit)
from .vertex_semiring import (VBFraction, VertexPolynomial, frac_is_integer, vp_odot, vp_prec,
                              vp_sum, vp_tropically_vanishes)

Coefficient = Union[BSeries, KPoly, KFraction]
Key = tuple[int, MultiIndex]


@dataclass(frozen=True)
class DiffMonomial:
    """Product of ``x_{i,J}^e``; the empty product is 1."""

    exps: tuple[tuple[Key, int], ...] = ()

    @classmethod
    def of(cls, exps: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()) -> "DiffMonomial":
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[Key, int] = {}
        for (i, J), e in items:
            if i < 1:
                raise ValueError("differential indeterminates are numbered from 1")
            if e < 0:
                raise ValueError("negative exponent")
            key = (int(i), as_index(J))
            acc[key] = acc.get(key, 0) + int(e)
        return cls(tuple(sorted((k, e) for k, e in acc.items() if e)))

    @classmethod
    def var(cls, i: int, J: Sequence[int], e: int = 1) -> "DiffMonomial":
        return cls.of({(i, tuple(J)): e})

    def as_dict(self) -> dict[Key, int]:
        return dict(self.exps)

    def is_one(self) -> bool:
        return not self.exps

    def order(self) -> int:
        return max((max(J, default=0) for (_, J), _ in self.exps), default=0)

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def __mul__(self, other: "DiffMonomial") -> "DiffMonomial":
        return DiffMonomial.of(list(self.exps) + list(other.exps))

    def format(self, n: int, pretty: bool = False) -> str:
        parts = []
        for (i, J), e in self.exps:
            name = ("x", "y")[i - 1] if pretty and n <= 2 else f"x{i}"
            base = f"{name}[({','.join(map(str, J))})]"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)


class DiffPoly:
    """Finite sum of ``coefficient * DiffMonomial`` over one coefficient domain."""

    def __init__(self, m: int, n: int, domain: type,
                 terms: Iterable[tuple[DiffMonomial, Coefficient]] = ()):
        self.m = m
        self.n = n
        self.domain = domain
        acc: dict[DiffMonomial, Coefficient] = {}
        for mono, c in terms:
            if not isinstance(c, domain):
                raise TypeError(f"coefficient {c!r} is not a {domain.__name__}")
            check_dim(m, c.dim)
            for (i, J), _ in mono.exps:
                if i > n:
                    raise DimensionError(f"indeterminate x{i} exceeds n={n}")
                check_dim(m, len(J))
            acc[mono] = acc[mono] + c if mono in acc else c
        self.terms = {mono: c for mono, c in acc.items() if not c.is_zero()}

    # construction helpers
    @classmethod
    def zero(cls, m: int, n: int, domain: type) -> "DiffPoly":
        return cls(m, n, domain)

    @classmethod
    def constant(cls, c: Coefficient, n: int) -> "DiffPoly":
        return cls(c.dim, n, type(c), [(DiffMonomial(), c)])

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[DiffMonomial, Coefficient]]:
        return list(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def _like(self, terms) -> "DiffPoly":
        return DiffPoly(self.m, self.n, self.domain, terms)

    def map_coeffs(self, fn: Callable[[Coefficient], Coefficient], domain: type | None = None):
        return DiffPoly(self.m, self.n, domain or self.domain,
                        [(mono, fn(c)) for mono, c in self.terms.items()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffPoly):
            return NotImplemented
        if (self.m, self.n) != (other.m, other.n) or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def _check(self, other: "DiffPoly") -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise DimensionError(f"dims {(self.m, self.n)} vs {(other.m, other.n)}")

    def __add__(self, other: "DiffPoly") -> "DiffPoly":
        self._check(other)
        return self._like(self.items() + other.items())

    def __neg__(self) -> "DiffPoly":
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: "DiffPoly") -> "DiffPoly":
        return self + (-other)

    def __mul__(self, other: "DiffPoly") -> "DiffPoly":
        self._check(other)
        return self._like([(m1 * m2, c1 * c2)
                           for m1, c1 in self.terms.items()
                           for m2, c2 in other.terms.items()])

    def scale(self, c: Coefficient) -> "DiffPoly":
        return self.map_coeffs(lambda a: a * c)

    def format(self, pretty: bool = False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms.items():
            coeff = c.format(pretty)
            if mono.is_one():
                parts.append(f"({coeff})")
            elif coeff == "1":
                parts.append(mono.format(self.n, pretty))
            else:
                parts.append(f"({coeff})*{mono.format(self.n, pretty)}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"DiffPoly(m={self.m}, n={self.n}, {self.format()!r})"


# -- differentiation ------------------------------------------------------------

def diff_derive(P: DiffPoly, i: int) -> DiffPoly:
    """Partial derivative in ``t_i`` (1-based), by the Leibniz rule."""
    if not 1 <= i <= P.m:
        raise ValueError(f"no variable t{i} when m={P.m}")
    e = unit(P.m, i - 1)
    out: list[tuple[DiffMonomial, Coefficient]] = []
    for mono, c in P.terms.items():
        dc = c.derive(e)
        if not dc.is_zero():
            out.append((mono, dc))
        exps = mono.as_dict()
        for (k, J), power in mono.exps:
            new = dict(exps)
            new[(k, J)] = power - 1
            raised = (k, add_index(J, e))
            new[raised] = new.get(raised, 0) + 1
            out.append((DiffMonomial.of(new), c.scale(power)))
    return P._like(out)


def theta(P: DiffPoly, J: Sequence[int]) -> DiffPoly:
    """The operator d^{|J|}/dt^J applied to ``P``."""
    for i, j in enumerate(J):
        for _ in range(j):
            P = diff_derive(P, i + 1)
    return P


# -- evaluation -----------------------------------------------------------------

def _check_point(P_m: int, n: int, a: Sequence[Coefficient]) -> None:
    if len(a) != n:
        raise DimensionError(f"expected {n} series, got {len(a)}")
    for s in a:
        check_dim(P_m, s.dim)


def eval_monomial(E: DiffMonomial, a: Sequence[Coefficient]) -> Coefficient:
    if not a:
        raise DimensionError("evaluation needs at least one series")
    kind = type(a[0])
    dim = a[0].dim
    out = kind.one(dim)
    for (i, J), e in E.exps:
        if i > len(a):
            raise DimensionError(f"monomial uses x{i} but only {len(a)} series given")
        d = a[i - 1].derive(J)
        for _ in range(e):
            out = out * d
    return out


@dataclass
class Evaluation:
    value: Coefficient
    per_term: list[Coefficient]


def eval_poly(P: DiffPoly, a: Sequence[Coefficient]) -> Evaluation:
    _check_point(P.m, P.n, a)
    kind = type(a[0])
    per_term = [c * eval_monomial(mono, a) for mono, c in P.terms.items()]
    value = kind.zero(P.m)
    for v in per_term:
        value = value + v
    return Evaluation(value, per_term)


@dataclass
class SolutionCheck:
    solution: bool
    vertex_set: VertexPolynomial
    term_vertices: list[VertexPolynomial]
    witnesses: dict[MultiIndex, list[int]]

    def to_json(self) -> dict:
        return {"solution": self.solution,
                "vertex_set": self.vertex_set.to_json(),
                "witnesses": {",".join(map(str, I)): terms
                              for I, terms in sorted(self.witnesses.items())}}


def is_solution(P: DiffPoly, a: Sequence[BSeries]) -> SolutionCheck:
    """Two-witness test on the vertex polynomials of the evaluated terms."""
    if P.domain is not BSeries:
        raise TypeError("solution checking needs boolean coefficients")
    ev = eval_poly(P, a)
    verts = [v.vertex() for v in ev.per_term]
    total = vp_sum(verts, P.m)
    witnesses = {I: [k + 1 for k, v in enumerate(verts) if I in v.support]
                 for I in total.support}
    ok = all(len(w) >= 2 for w in witnesses.values())
    return SolutionCheck(ok, total, verts, witnesses)


def is_solution_by_vanishing(P: DiffPoly, a: Sequence[BSeries]) -> bool:
    """Same question answered through tropical vanishing of the term vertex sets."""
    ev = eval_poly(P, a)
    if not ev.per_term:
        return True
    return vp_tropically_vanishes([v.vertex() for v in ev.per_term])


def solves_all(system: Iterable[DiffPoly], a: Sequence[BSeries]) -> bool:
    """Membership of ``a`` in the common solution set of a finite system."""
    return all(is_solution(P, a).solution for P in system)


def support_poly(P: DiffPoly) -> DiffPoly:
    """Coefficientwise support map to boolean coefficients."""
    if P.domain is not KPoly:
        raise TypeError("support map needs rational-series coefficients")
    return P.map_coeffs(sp, BSeries)


# -- tropicalization at a weight vector ------------------------------------------

def _monomial_vertex(E: DiffMonomial, w: Sequence[BSeries]) -> VertexPolynomial:
    return eval_monomial(E, w).vertex()


def trop_w_term(coeff: KPoly, E: DiffMonomial, w: Sequence[BSeries]) -> VertexPolynomial:
    return vp_odot(trop(coeff), _monomial_vertex(E, w))


def trop_w(P: DiffPoly, w: Sequence[BSeries]) -> VertexPolynomial:
    if P.domain is not KPoly:
        raise TypeError("trop_w needs rational-series coefficients")
    _check_point(P.m, P.n, w)
    return vp_sum([trop_w_term(c, E, w) for E, c in P.terms.items()], P.m)


def clear_denominators(P: DiffPoly) -> tuple[KPoly, DiffPoly]:
    """``(lam, Q)`` with ``lam * P == Q`` and ``Q`` over rational series."""
    if P.domain is KPoly:
        return KPoly.one(P.m), P
    dens: list[KPoly] = []
    for c in P.terms.values():
        if c.den not in dens and c.den != KPoly.one(P.m):
            dens.append(c.den)
    lam = KPoly.one(P.m)
    for d in dens:
        lam = lam * d
    terms = []
    for E, c in P.terms.items():
        coeff = c.num
        for d in dens:
            if d != c.den:
                coeff = coeff * d
        terms.append((E, coeff))
    return lam, DiffPoly(P.m, P.n, KPoly, terms)


def as_fraction_poly(P: DiffPoly) -> DiffPoly:
    if P.domain is KFraction:
        return P
    return P.map_coeffs(KFraction, KFraction)


def trop_w_frac(P: DiffPoly, w: Sequence[BSeries]) -> VBFraction:
    lam, Q = clear_denominators(P)
    return VBFraction(trop_w(Q, w), trop(lam))


def initial_form(P: DiffPoly, w: Sequence[BSeries]) -> DiffPoly:
    """Sum of the initial terms of the coefficients of the w-relevant monomials.

    Monomials whose tropical value at ``w`` is zero are dropped, and the
    initial form of a polynomial with zero tropical value is zero.
    """
    total = trop_w(P, w)
    if total.is_zero():
        return P._like([])
    kept = []
    for E, c in P.terms.items():
        v = trop_w_term(c, E, w)
        if v.is_zero() or vp_prec(v, total):
            continue
        kept.append((E, initial_term(c)))
    return P._like(kept)


def initial_form_frac(P: DiffPoly, w: Sequence[BSeries]) -> DiffPoly:
    lam, Q = clear_denominators(P)
    lead = KFraction(initial_term(lam))
    return initial_form(Q, w).map_coeffs(lambda c: KFraction(c) / lead, KFraction)


def t_series(w_i: BSeries, J: Sequence[int]) -> KPoly:
    return e_K(w_i.derive(J).vertex())


def translate(P: DiffPoly, w: Sequence[BSeries]) -> DiffPoly:
    """Substitute ``x_{i,J} -> T(w_i, J) x_{i,J}`` and normalise by the tropical value."""
    P = as_fraction_poly(P)
    _check_point(P.m, P.n, w)
    value = trop_w_frac(P, w)
    if value.is_zero():
        return P._like([])
    factor = KFraction(e_K(value.den)) / KFraction(e_K(value.num))
    terms = []
    for E, c in P.terms.items():
        coeff = c * factor
        for (i, J), e in E.exps:
            coeff = coeff * (t_series(w[i - 1], J) ** e)
        if not frac_is_integer(coefficient_trop(coeff)):
            raise ArithmeticError(f"translated coefficient {coeff} is not integral")
        terms.append((E, coeff))
    return P._like(terms)


def coefficient_trop(c: Coefficient) -> VBFraction:
    if isinstance(c, KFraction):
        return VBFraction(trop(c.num), trop(c.den))
    return VBFraction.of(trop(c))

"""Vertex polynomials, Newton polyhedra and tropical differential equations."""

from .diffpoly import (DiffMonomial, DiffPoly, clear_denominators, diff_derive, eval_monomial,
                       eval_poly, initial_form, initial_form_frac, is_solution,
                       is_solution_by_vanishing, t_series, theta, translate, trop_w,
                       trop_w_frac)
from .lattice import DimensionError, GeneratorSet
from .newton import (newton_contains, newton_vertices, polytope_minkowski_vertices,
                     polytope_vertices, support_function, tilde_generators)
from .series import (BSeries, KFraction, KPoly, additive_support, e_K, initial_term,
                     multiplicative_support, sp, trop, trop_frac)
from .text import ParseError, parse_diffpoly, parse_series
from .vertex_semiring import (NotAVertexSet, VBFraction, VertexPolynomial, vp_leq, vp_odot,
                              vp_oplus, vp_prec, vp_tropically_vanishes)

__all__ = [
    "BSeries", "DiffMonomial", "DiffPoly", "DimensionError", "GeneratorSet", "KFraction",
    "KPoly", "NotAVertexSet", "ParseError", "VBFraction", "VertexPolynomial",
    "additive_support", "clear_denominators", "diff_derive", "e_K", "eval_monomial",
    "eval_poly", "initial_form", "initial_form_frac", "initial_term", "is_solution",
    "is_solution_by_vanishing", "multiplicative_support", "newton_contains",
    "newton_vertices", "parse_diffpoly", "parse_series", "polytope_minkowski_vertices",
    "polytope_vertices", "sp", "support_function", "t_series", "theta", "tilde_generators",
    "translate", "trop", "trop_frac", "trop_w", "trop_w_frac", "vp_leq", "vp_odot",
    "vp_oplus", "vp_prec", "vp_tropically_vanishes",
]

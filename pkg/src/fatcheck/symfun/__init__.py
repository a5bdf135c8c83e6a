"""Exact polynomial arithmetic and symmetric-function constructors."""

from .multipoly import DivisionNotExact, MultiPoly, exact_divide
from .serialize import from_records, to_records
from .symexpr import (
    Family,
    SymExpr,
    chern_family,
    euler_sign,
    format_monomial,
    g2_family,
    parse_monomial,
    pontrjagin_euler_family,
    pontrjagin_family,
    product_family,
    sigma_family,
    torus_family,
)
from .symmetric import (
    SCHUR_ROUTES,
    NotSymmetric,
    alternant,
    complete_h,
    determinant,
    elementary_sigma,
    express_in_sigma,
    h_in_sigma_poly,
    is_symmetric,
    reduce_trace_zero,
    schur,
    solve_in_span,
    vandermonde,
)


def h_in_sigma(m: int, n: int) -> SymExpr:
    """``h_m`` as an expression in ``sigma_1, ..., sigma_n``."""
    return SymExpr(sigma_family(n), h_in_sigma_poly(m, n))


def express_in_sigma_expr(p: MultiPoly) -> SymExpr:
    """:func:`express_in_sigma` wrapped as a :class:`SymExpr`."""
    return SymExpr(sigma_family(p.nvars), express_in_sigma(p))


__all__ = [
    "MultiPoly",
    "DivisionNotExact",
    "exact_divide",
    "to_records",
    "from_records",
    "Family",
    "SymExpr",
    "chern_family",
    "euler_sign",
    "format_monomial",
    "g2_family",
    "parse_monomial",
    "pontrjagin_euler_family",
    "pontrjagin_family",
    "product_family",
    "sigma_family",
    "torus_family",
    "SCHUR_ROUTES",
    "NotSymmetric",
    "alternant",
    "complete_h",
    "determinant",
    "elementary_sigma",
    "express_in_sigma",
    "express_in_sigma_expr",
    "h_in_sigma",
    "h_in_sigma_poly",
    "is_symmetric",
    "reduce_trace_zero",
    "schur",
    "solve_in_span",
    "vandermonde",
]

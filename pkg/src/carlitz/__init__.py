"""Carlitz factorials and binomial coefficients over F_q[T], their reduction
modulo a prime polynomial, and the fast census of binomial residue classes."""

from .gf import Field
from .polyring import (
    NEG_INF,
    ParseError,
    Poly,
    find_irreducible,
    format_poly,
    is_irreducible,
    parse_poly,
    parse_upoly,
    poly_gcd,
    poly_powmod,
    poly_xgcd,
)
from .residue import Residue, ResidueCtx
from .binom import DigitBinomCache, binom_exact, d_poly, factorial_exact
from .words import Word, class_set, digits_of, nat_tail, nat_window
from .dist import (
    BaseTable,
    CountPoly,
    Distribution,
    base_table,
    digit_counts,
    distribution,
    distribution_brute,
    from_json_dict,
    gn_fast,
    to_json_dict,
)
from .limits import (
    DEFAULT_CLASS_ENUM_LIMIT,
    DEFAULT_ENUM_LIMIT,
    DEFAULT_EXACT_DEGREE_LIMIT,
    DLOG_TABLE_LIMIT,
    GuardrailError,
)

__version__ = "0.1.0"

__all__ = [
    "Field",
    "Poly",
    "ParseError",
    "NEG_INF",
    "parse_poly",
    "parse_upoly",
    "format_poly",
    "poly_gcd",
    "poly_xgcd",
    "poly_powmod",
    "is_irreducible",
    "find_irreducible",
    "Residue",
    "ResidueCtx",
    "DigitBinomCache",
    "d_poly",
    "factorial_exact",
    "binom_exact",
    "Word",
    "digits_of",
    "nat_tail",
    "nat_window",
    "class_set",
    "CountPoly",
    "BaseTable",
    "base_table",
    "digit_counts",
    "gn_fast",
    "Distribution",
    "distribution",
    "distribution_brute",
    "to_json_dict",
    "from_json_dict",
    "GuardrailError",
    "DEFAULT_EXACT_DEGREE_LIMIT",
    "DEFAULT_ENUM_LIMIT",
    "DEFAULT_CLASS_ENUM_LIMIT",
    "DLOG_TABLE_LIMIT",
]

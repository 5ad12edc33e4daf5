"""bgzeta: Bernoulli-Goss polynomials over F_q[T] and divisibility of the
mod-p zeta factors of cyclotomic function fields, in exact arithmetic."""

from .bernoulli import (DigitProfile, NormResidues, RootContext, UPoly,
                        bernoulli_norm, bernoulli_norm_mod, bernoulli_poly,
                        bernoulli_scalar, binom_mod, digit_profile,
                        digit_reduce, digit_reduce_iter, digit_sum,
                        power_sum_exact, power_sum_mod, power_sum_poly,
                        root_context)
from .errors import (BGZetaError, CapacityError, ContractViolationError,
                     FieldMismatchError, NotPrimeError, ReducibleModulusError,
                     ValidationError)
from .ff import Field, FieldElem, enumerate_field, extend_field, frobenius_q, make_tower
from .polyring import (NEG_INF, Factorization, Poly, enumerate_monic,
                       enumerate_monic_irreducible, factor, gcd,
                       is_irreducible, pow_mod)
from .textio import parse_elem, parse_poly, poly_str, upoly_str
from .zeta import (DivisibilityReport, ReducedZeta, SearchResult,
                   class_number_divisibility, criterion_check,
                   find_divisible_modulus, reduced_zeta, survey)

__version__ = "0.1.0"

__all__ = [
    "BGZetaError", "CapacityError", "ContractViolationError",
    "DigitProfile", "DivisibilityReport", "Factorization", "Field",
    "FieldElem", "FieldMismatchError", "NEG_INF", "NormResidues",
    "NotPrimeError", "Poly", "ReducedZeta", "ReducibleModulusError",
    "RootContext", "SearchResult", "UPoly", "ValidationError",
    "bernoulli_norm", "bernoulli_norm_mod", "bernoulli_poly",
    "bernoulli_scalar", "binom_mod", "class_number_divisibility",
    "criterion_check", "digit_profile", "digit_reduce", "digit_reduce_iter",
    "digit_sum", "enumerate_field", "enumerate_monic",
    "enumerate_monic_irreducible", "extend_field", "factor",
    "find_divisible_modulus", "frobenius_q", "gcd", "is_irreducible",
    "make_tower", "parse_elem", "parse_poly", "poly_str", "pow_mod",
    "power_sum_exact", "power_sum_mod", "power_sum_poly", "reduced_zeta",
    "root_context", "survey", "upoly_str",
]

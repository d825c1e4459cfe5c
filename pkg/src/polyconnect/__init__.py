"""polyconnect: exact connection coefficients between classical orthogonal
polynomial families, certified against a brute-force conversion oracle.

Everything is computed in arbitrary-precision rational arithmetic; there is
no floating-point path anywhere, so every identity check is an exact
equality.
"""

from .errors import (
    DenominatorPoleError,
    InvalidInputError,
    NonTerminatingError,
    PoleInParamsError,
    PolyConnectError,
    UnsupportedPairError,
    ZeroDenominatorParameterError,
)
from .rationals import (
    Rational,
    as_rational,
    binomial,
    factorial,
    format_rational,
    parse_rational,
    pochhammer,
    pochhammer_list,
    rational_to_str,
)
from .hypseries import (
    EvenOddSplit,
    HypSeries,
    evaluate_terminating,
    termination_index,
    series_coefficients,
    series_from_json,
    series_to_json,
    split_even_odd,
    truncation_index,
)
from .polybases import (
    JacobiParams,
    Poly,
    hermite,
    hermite_via_1f1,
    jacobi_at_one_minus_x,
    laguerre,
    shifted_jacobi,
)
from .connection import (
    BasisId,
    ConnectionResult,
    DEFAULT_JACOBI_SWEEP,
    HERMITE,
    LAGUERRE,
    MONOMIAL,
    VerificationEntry,
    VerificationReport,
    basis_poly,
    closed_form_connection,
    coeff_hermite_in_laguerre,
    coeff_hermite_in_shifted_jacobi,
    coeff_laguerre_in_hermite,
    coeff_shifted_jacobi_in_hermite,
    connection_oracle,
    delta_params,
    jacobi_at_one_minus_x_basis,
    shifted_jacobi_basis,
    verify_theorem,
)
from .expansions import (
    ExpansionParams,
    bilinear_lhs,
    coeff_seq,
    coeff_seq_from_json,
    coeff_seq_to_json,
    delta_seq,
    fields_ismail_13_rhs,
    fields_ismail_32_rhs,
    fields_wimp_luke_terminating,
    fields_wimp_terminating,
    hermite_bm_sequence,
    hermite_in_laguerre_via_bilinear,
)

__version__ = "1.0.0"

__all__ = [
    "BasisId",
    "ConnectionResult",
    "DEFAULT_JACOBI_SWEEP",
    "DenominatorPoleError",
    "EvenOddSplit",
    "ExpansionParams",
    "HERMITE",
    "HypSeries",
    "InvalidInputError",
    "JacobiParams",
    "LAGUERRE",
    "MONOMIAL",
    "NonTerminatingError",
    "Poly",
    "PoleInParamsError",
    "PolyConnectError",
    "Rational",
    "UnsupportedPairError",
    "VerificationEntry",
    "VerificationReport",
    "ZeroDenominatorParameterError",
    "as_rational",
    "basis_poly",
    "bilinear_lhs",
    "binomial",
    "closed_form_connection",
    "coeff_hermite_in_laguerre",
    "coeff_hermite_in_shifted_jacobi",
    "coeff_laguerre_in_hermite",
    "coeff_seq",
    "coeff_seq_from_json",
    "coeff_seq_to_json",
    "coeff_shifted_jacobi_in_hermite",
    "connection_oracle",
    "delta_params",
    "delta_seq",
    "evaluate_terminating",
    "factorial",
    "fields_ismail_13_rhs",
    "fields_ismail_32_rhs",
    "fields_wimp_luke_terminating",
    "fields_wimp_terminating",
    "termination_index",
    "format_rational",
    "hermite",
    "hermite_bm_sequence",
    "hermite_in_laguerre_via_bilinear",
    "hermite_via_1f1",
    "jacobi_at_one_minus_x",
    "jacobi_at_one_minus_x_basis",
    "laguerre",
    "parse_rational",
    "pochhammer",
    "pochhammer_list",
    "rational_to_str",
    "series_coefficients",
    "series_from_json",
    "series_to_json",
    "shifted_jacobi",
    "shifted_jacobi_basis",
    "split_even_odd",
    "truncation_index",
    "verify_theorem",
]

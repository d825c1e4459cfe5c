"""Terminating generalized hypergeometric series over exact rationals.

A series descriptor holds numerator parameters [a_1..a_p], denominator
parameters [b_1..b_q] and a rational argument x, and stands for the sum

    sum_{k>=0}  (a_1)_k ... (a_p)_k / ((b_1)_k ... (b_q)_k)  *  x^k / k!

Only terminating instances are evaluated: some a_i must be a nonpositive
integer.  The sum is cut at the first index K where a numerator Pochhammer
factor vanishes; every later term carries that zero factor, so the cut loses
nothing.  A denominator parameter that is itself a nonpositive integer is
tolerated as long as its pole lies strictly past K.  Several closed-form
connection coefficients (the ones with denominator parameters -N/2 and
-(N-1)/2) rely on exactly this allowance, with the pole sitting one index
past the truncation.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    DenominatorPoleError,
    NonTerminatingError,
    ZeroDenominatorParameterError,
)
from .rationals import RationalLike, as_rational, is_nonpositive_integer, rational_to_str

#: An ordered tuple of rational parameters.  Order is preserved as given;
#: it matters for reporting, never for the value.
ParamList = tuple[Fraction, ...]


def _coerce_params(params: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(as_rational(a) for a in params)


@dataclass(frozen=True)
class HypSeries:
    """Descriptor for a generalized hypergeometric series."""

    numerators: tuple[Fraction, ...]
    denominators: tuple[Fraction, ...]
    argument: Fraction

    def __post_init__(self):
        object.__setattr__(self, "numerators", _coerce_params(self.numerators))
        object.__setattr__(self, "denominators", _coerce_params(self.denominators))
        object.__setattr__(self, "argument", as_rational(self.argument))

    @property
    def is_terminating(self) -> bool:
        return termination_index(self.numerators) is not None


class EvenOddSplit(NamedTuple):
    even: HypSeries
    odd_prefactor: Fraction
    odd: HypSeries


def termination_index(params: Sequence[RationalLike]) -> Optional[int]:
    """Last index K whose Pochhammer product over the list is nonzero, or None.

    For a nonpositive integer a the factor (a)_k vanishes from k = -a + 1 on,
    so K = min(-a_i) over the nonpositive integer parameters; a sum weighted
    by the product loses nothing when cut at K.  None means no parameter is a
    nonpositive integer (the product never vanishes).
    """
    hits = [-int(as_rational(a)) for a in params if is_nonpositive_integer(a)]
    return min(hits) if hits else None


def truncation_index(series: HypSeries) -> int:
    """The index K of the last term of a terminating series."""
    k = termination_index(series.numerators)
    if k is None:
        raise NonTerminatingError(
            "no numerator parameter is a nonpositive integer: "
            + ", ".join(rational_to_str(a) for a in series.numerators)
        )
    return k


def series_coefficients(
    numerators: Iterable[RationalLike], denominators: Iterable[RationalLike]
) -> tuple[Fraction, ...]:
    """Term coefficients [a_p]_k / ([b_q]_k k!) for k = 0..K of a terminating series.

    The value of the series is sum(coeff[k] * x^k); polynomial constructors
    reuse the same list with substituted arguments.  Raises NonTerminating if
    no numerator parameter is a nonpositive integer, DenominatorPole if some
    denominator parameter b has -b < K.
    """
    nums = _coerce_params(numerators)
    dens = _coerce_params(denominators)
    k_max = termination_index(nums)
    if k_max is None:
        raise NonTerminatingError(
            "no numerator parameter is a nonpositive integer: "
            + ", ".join(rational_to_str(a) for a in nums)
        )
    for b in dens:
        if is_nonpositive_integer(b) and -int(b) < k_max:
            raise DenominatorPoleError(
                f"denominator parameter {rational_to_str(b)} vanishes at index "
                f"{-int(b) + 1} <= truncation index {k_max}"
            )
    coeffs = [Fraction(1)]
    term = Fraction(1)
    # Ratio recurrence, hard-capped at k_max so a 0/0 ratio is never formed.
    for k in range(k_max):
        for a in nums:
            term *= a + k
        for b in dens:
            term /= b + k
        term /= k + 1
        coeffs.append(term)
    return tuple(coeffs)


def evaluate_terminating(series: HypSeries) -> Fraction:
    """Exact value of a terminating series under the first-zero truncation policy."""
    coeffs = series_coefficients(series.numerators, series.denominators)
    x = series.argument
    total = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        total += c * power
        power *= x
    return total


def split_even_odd(series: HypSeries) -> EvenOddSplit:
    """Split a series into its even- and odd-index parts.

    Both parts are series in the squared argument scaled by 4^(p-q-1): the
    even part has numerators [a/2] + [(a+1)/2] and denominators
    [1/2] + [b/2] + [(b+1)/2]; the odd part has numerators
    [(a+1)/2] + [(a+2)/2] and denominators [3/2] + [(b+1)/2] + [(b+2)/2].
    The original value is  even + prefactor * x * odd  with
    prefactor = prod(a_i)/prod(b_i), which is why every b_i must be nonzero.
    """
    nums, dens = series.numerators, series.denominators
    for b in dens:
        if b == 0:
            raise ZeroDenominatorParameterError(
                "cannot split: a denominator parameter is zero"
            )
    p, q = len(nums), len(dens)
    arg = Fraction(4) ** (p - q - 1) * series.argument**2
    half = Fraction(1, 2)
    even = HypSeries(
        tuple(a * half for a in nums) + tuple((a + 1) * half for a in nums),
        (half,) + tuple(b * half for b in dens) + tuple((b + 1) * half for b in dens),
        arg,
    )
    odd = HypSeries(
        tuple((a + 1) * half for a in nums) + tuple((a + 2) * half for a in nums),
        (Fraction(3, 2),)
        + tuple((b + 1) * half for b in dens)
        + tuple((b + 2) * half for b in dens),
        arg,
    )
    prefactor = Fraction(1)
    for a in nums:
        prefactor *= a
    for b in dens:
        prefactor /= b
    return EvenOddSplit(even, prefactor, odd)


def series_to_json(series: HypSeries) -> dict:
    return {
        "num": [rational_to_str(a) for a in series.numerators],
        "den": [rational_to_str(b) for b in series.denominators],
        "arg": rational_to_str(series.argument),
    }


def series_from_json(data: dict) -> HypSeries:
    return HypSeries(tuple(data["num"]), tuple(data["den"]), data["arg"])

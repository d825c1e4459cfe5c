"""Exact rational scalars and the factorial-type primitives built on them.

Every scalar in this library is an arbitrary-precision ``fractions.Fraction``,
which is always kept in canonical form (positive denominator, fully reduced).
Nothing here ever rounds.
"""

import math
import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidInputError

#: The scalar type used throughout the library.
Rational = Fraction

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or rational string to an exact Fraction.

    Floats are rejected outright: admitting them would smuggle rounding into
    a library whose entire point is exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInputError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a bare integer string "n" into a Fraction."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise InvalidInputError(f"malformed rational {text!r}: expected 'p/q' or 'n'")
    if "/" in s:
        p, q = s.split("/")
        if int(q) == 0:
            raise InvalidInputError(f"zero denominator in {text!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(value: RationalLike) -> str:
    """Render a rational in the canonical "p/q" form, e.g. "3/1", "-5/2"."""
    q = as_rational(value)
    return f"{q.numerator}/{q.denominator}"


def rational_to_str(value: RationalLike) -> str:
    """Compact wire form: bare "n" when the denominator is 1, else "p/q"."""
    return str(as_rational(value))


def _check_index(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidInputError(f"{name} must be a nonnegative integer, got {n!r}")
    return n


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial a*(a+1)*...*(a+n-1), with the empty product equal to 1.

    Computed literally, so a nonpositive integer ``a`` yields 0 as soon as the
    zero factor is reached (the gamma-ratio form is undefined there).
    """
    _check_index(n)
    a = as_rational(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
        if result == 0:
            break
    return result


def pochhammer_list(params: Iterable[RationalLike], k: int) -> Fraction:
    """Product of pochhammer(a, k) over a parameter list; 1 for the empty list."""
    _check_index(k)
    result = Fraction(1)
    for a in params:
        result *= pochhammer(a, k)
        if result == 0:
            break
    return result


def factorial(n: int) -> Fraction:
    _check_index(n)
    return Fraction(math.factorial(n))


def binomial(n: int, k: int) -> Fraction:
    """n!/(k!(n-k)!) for nonnegative integers with k <= n."""
    _check_index(n)
    _check_index(k, "k")
    if k > n:
        raise InvalidInputError(f"binomial requires k <= n, got n={n}, k={k}")
    return Fraction(math.comb(n, k))


def is_nonpositive_integer(value: RationalLike) -> bool:
    """True when the value is an integer <= 0 (the series-terminating condition)."""
    q = as_rational(value)
    return q.denominator == 1 and q <= 0

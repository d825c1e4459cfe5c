"""Connection coefficients between polynomial bases, closed form and oracle.

The connection problem asks for the coefficients c_nk expanding a degree-n
member of one graded polynomial family in another family:

    P_n(x) = sum_{k=0}^{n} c_nk Q_k(x).

Four directed pairs have closed-form coefficients here, each tagged with a
formula identifier:

    Thm3.1             Laguerre        -> Hermite
    Thm3.2             Hermite         -> Laguerre
    Thm3.3-interpreted Hermite         -> Jacobi at 1-x   (see below)
    Thm3.4             ShiftedJacobi   -> Hermite

Every closed form is shadowed by ``connection_oracle``, an independent
brute-force conversion through the monomial basis.  ``verify_theorem``
reconstructs the source polynomial from each closed form, records exact
residuals, and reports entrywise disagreements with the oracle instead of
silently preferring either side.

The Thm3.3 coefficient formula is a repaired reading of a typographically
defective display (its expansion sum is restored over m = 0..n).  It is
validated by hand only for n <= 1; oracle sweeps show it fails from n = 2
on, so its report, not the closed form, is authoritative there.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidInputError, PolyConnectError, UnsupportedPairError
from .hypseries import HypSeries, evaluate_terminating
from .polybases import (
    JacobiParams,
    Poly,
    hermite,
    jacobi_at_one_minus_x,
    laguerre,
    shifted_jacobi,
)
from .rationals import (
    RationalLike,
    as_rational,
    factorial,
    pochhammer,
    rational_to_str,
)

_JACOBI_FAMILIES = ("shifted-jacobi", "jacobi-1mx")
_FAMILIES = ("monomial", "hermite", "laguerre") + _JACOBI_FAMILIES

PROVENANCE_ORACLE = "Oracle"

#: Default (alpha, beta) sweep: symmetric, half-integer, integer-shift and
#: negative-alpha cases, all pole-free for the degrees in scope.
DEFAULT_JACOBI_SWEEP = (
    JacobiParams(Fraction(0), Fraction(0)),
    JacobiParams(Fraction(1, 2), Fraction(1, 2)),
    JacobiParams(Fraction(1), Fraction(2)),
    JacobiParams(Fraction(-1, 2), Fraction(1, 3)),
)


@dataclass(frozen=True)
class BasisId:
    """Tagged identifier of a graded polynomial family."""

    family: str
    params: Optional[JacobiParams] = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InvalidInputError(f"unknown basis family {self.family!r}")
        if self.family in _JACOBI_FAMILIES and self.params is None:
            raise InvalidInputError(f"{self.family} basis requires Jacobi parameters")
        if self.family not in _JACOBI_FAMILIES and self.params is not None:
            raise InvalidInputError(f"{self.family} basis takes no parameters")

    def to_json(self) -> dict:
        out = {"family": self.family}
        if self.params is not None:
            out["alpha"] = rational_to_str(self.params.alpha)
            out["beta"] = rational_to_str(self.params.beta)
        return out


MONOMIAL = BasisId("monomial")
HERMITE = BasisId("hermite")
LAGUERRE = BasisId("laguerre")


def shifted_jacobi_basis(jp: JacobiParams) -> BasisId:
    return BasisId("shifted-jacobi", jp)


def jacobi_at_one_minus_x_basis(jp: JacobiParams) -> BasisId:
    return BasisId("jacobi-1mx", jp)


def basis_poly(basis: BasisId, k: int) -> Poly:
    """The degree-k member of a basis family."""
    if basis.family == "monomial":
        return Poly.monomial(k)
    if basis.family == "hermite":
        return hermite(k)
    if basis.family == "laguerre":
        return laguerre(k)
    if basis.family == "shifted-jacobi":
        return shifted_jacobi(k, basis.params)
    return jacobi_at_one_minus_x(k, basis.params)


@dataclass(frozen=True)
class ConnectionResult:
    """Coefficient list expanding a degree-n source member in a target family.

    coefficients[k] multiplies the target's degree-k member; provenance names
    the closed form used, or "Oracle" for the brute-force conversion.
    """

    source: BasisId
    target: BasisId
    degree: int
    coefficients: tuple[Fraction, ...]
    provenance: str

    def reconstruct(self) -> Poly:
        """Sum of coefficients[k] * target member k."""
        total = Poly()
        for k, c in enumerate(self.coefficients):
            if c:
                total = total + c * basis_poly(self.target, k)
        return total

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "degree": self.degree,
            "coefficients": [rational_to_str(c) for c in self.coefficients],
            "provenance": self.provenance,
        }

    def to_csv_rows(self) -> list[tuple]:
        """Rows for the "n,k,coefficient,provenance" table."""
        return [
            (self.degree, k, rational_to_str(c), self.provenance)
            for k, c in enumerate(self.coefficients)
        ]


def connection_oracle(p: Poly, target: BasisId) -> ConnectionResult:
    """Brute-force basis conversion by triangular back-substitution.

    Works down from degree(p): divides the current x^k coefficient by the
    leading coefficient of the target's degree-k member, then subtracts that
    multiple.  The final residual is exactly zero by construction.
    """
    degree = 0 if p.is_zero else p.degree
    coefficients = [Fraction(0)] * (degree + 1)
    residual = p
    for k in range(degree, -1, -1):
        member = basis_poly(target, k)
        lead = member.coeff(k)
        if lead == 0:
            raise InvalidInputError(
                f"target family {target.family} is not graded at degree {k}"
            )
        c = residual.coeff(k) / lead
        coefficients[k] = c
        if c:
            residual = residual - c * member
    assert residual.is_zero
    return ConnectionResult(
        source=MONOMIAL,
        target=target,
        degree=degree,
        coefficients=tuple(coefficients),
        provenance=PROVENANCE_ORACLE,
    )


def delta_params(r: int, phi: RationalLike) -> tuple[Fraction, ...]:
    """The parameter list [phi/r, (phi+1)/r, ..., (phi+r-1)/r]."""
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidInputError(f"r must be a positive integer, got {r!r}")
    phi = as_rational(phi)
    return tuple((phi + j) / r for j in range(r))


def _check_pair(n: int, k: int, n_name: str, k_name: str) -> None:
    for name, value in ((n_name, n), (k_name, k)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise InvalidInputError(f"{name} must be a nonnegative integer, got {value!r}")
    if k > n:
        raise InvalidInputError(f"{k_name} must not exceed {n_name}, got {k} > {n}")


def coeff_laguerre_in_hermite(n: int, k: int) -> Fraction:
    """Coefficient of the degree-k Hermite member in the Laguerre expansion:

        (-n)_k / (2^k k! k!) * 2F2((k-n)/2, (k+1-n)/2; (k+1)/2, (k+2)/2; 1/4).

    The 2F2 terminates because exactly one of (k-n)/2, (k+1-n)/2 is a
    nonpositive integer.
    """
    _check_pair(n, k, "n", "k")
    half = Fraction(1, 2)
    f = evaluate_terminating(
        HypSeries(
            ((k - n) * half, (k + 1 - n) * half),
            ((k + 1) * half, (k + 2) * half),
            Fraction(1, 4),
        )
    )
    return pochhammer(Fraction(-n), k) / (Fraction(2) ** k * factorial(k) ** 2) * f


def coeff_hermite_in_laguerre(n: int, m: int) -> Fraction:
    """Coefficient of the degree-m Laguerre member in the Hermite expansion:

        n! 2^n * 2F2(-(n-m)/2, -(n-m-1)/2; -n/2, -(n-1)/2; -1/4) * (-n)_m / m!.

    The 2F2's integer denominator parameter pole sits strictly past the
    truncation index, which the evaluator's policy tolerates.
    """
    _check_pair(n, m, "n", "m")
    half = Fraction(1, 2)
    f = evaluate_terminating(
        HypSeries(
            (-(n - m) * half, -(n - m - 1) * half),
            (-n * half, -(n - 1) * half),
            Fraction(-1, 4),
        )
    )
    return factorial(n) * Fraction(2) ** n * f * pochhammer(Fraction(-n), m) / factorial(m)


def coeff_shifted_jacobi_in_hermite(n: int, jp: JacobiParams, j: int) -> Fraction:
    """Coefficient of the degree-j Hermite member in the shifted Jacobi expansion:

        (-1)^n (-1)^j (b+1)_n (n+l)_j / ((n-j)! 2^j j! (b+1)_j)
        * 4F2((j-n)/2, (j+1-n)/2, (j+n+l)/2, (j+n+l+1)/2; (j+b+1)/2, (j+b+2)/2; 1)

    with b = jp.beta and l = jp.lam.
    """
    _check_pair(n, j, "n", "j")
    half = Fraction(1, 2)
    lam = jp.lam
    f = evaluate_terminating(
        HypSeries(
            (
                (j - n) * half,
                (j + 1 - n) * half,
                (j + n + lam) * half,
                (j + n + lam + 1) * half,
            ),
            ((j + jp.beta + 1) * half, (j + jp.beta + 2) * half),
            Fraction(1),
        )
    )
    prefactor = (
        Fraction((-1) ** (n + j))
        * pochhammer(jp.beta + 1, n)
        * pochhammer(n + lam, j)
        / (factorial(n - j) * Fraction(2) ** j * factorial(j) * pochhammer(jp.beta + 1, j))
    )
    return prefactor * f


def coeff_hermite_in_shifted_jacobi(n: int, jp: JacobiParams, m: int) -> Fraction:
    """Interpreted closed form for the Hermite expansion in Jacobi-at-1-x members:

        (-n)_m 4^n (2m+l) (a+1)_n / ((a+1)_m (l+m)_{n+1})
        * 4F2(D(2, m-n), D(2, -l-n-m); D(2, -a-n); 1/4)

    with a = jp.alpha, l = jp.lam and D = delta_params.  The target member is
    jacobi_at_one_minus_x(m, jp).  Only validated against the oracle for
    n <= 1; verify_theorem("3.3", ...) reports where the two disagree.
    """
    _check_pair(n, m, "n", "m")
    lam = jp.lam
    f = evaluate_terminating(
        HypSeries(
            delta_params(2, m - n) + delta_params(2, -lam - n - m),
            delta_params(2, -jp.alpha - n),
            Fraction(1, 4),
        )
    )
    denominator = pochhammer(jp.alpha + 1, m) * pochhammer(lam + m, n + 1)
    if denominator == 0:
        raise InvalidInputError(
            "degenerate Jacobi parameters: a prefactor denominator vanishes"
        )
    prefactor = (
        pochhammer(Fraction(-n), m)
        * Fraction(4) ** n
        * (2 * m + lam)
        * pochhammer(jp.alpha + 1, n)
        / denominator
    )
    return prefactor * f


_CLOSED_FORMS = {
    ("laguerre", "hermite"): "Thm3.1",
    ("hermite", "laguerre"): "Thm3.2",
    ("hermite", "jacobi-1mx"): "Thm3.3-interpreted",
    ("shifted-jacobi", "hermite"): "Thm3.4",
}


def closed_form_connection(source: BasisId, target: BasisId, n: int) -> ConnectionResult:
    """Full closed-form coefficient list for one of the four supported pairs."""
    provenance = _CLOSED_FORMS.get((source.family, target.family))
    if provenance is None:
        raise UnsupportedPairError(
            f"no closed form for {source.family} -> {target.family}"
        )
    if provenance == "Thm3.1":
        coeffs = [coeff_laguerre_in_hermite(n, k) for k in range(n + 1)]
    elif provenance == "Thm3.2":
        coeffs = [coeff_hermite_in_laguerre(n, m) for m in range(n + 1)]
    elif provenance == "Thm3.3-interpreted":
        coeffs = [coeff_hermite_in_shifted_jacobi(n, target.params, m) for m in range(n + 1)]
    else:
        coeffs = [coeff_shifted_jacobi_in_hermite(n, source.params, j) for j in range(n + 1)]
    return ConnectionResult(
        source=source,
        target=target,
        degree=n,
        coefficients=tuple(coeffs),
        provenance=provenance,
    )


@dataclass
class VerificationEntry:
    """One verified instance: residual of the closed-form reconstruction plus
    the first index (if any) where the closed form and the oracle disagree."""

    n: int
    match: bool
    residual: Poly
    first_mismatch: Optional[int] = None
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    error: Optional[str] = None

    def to_json(self) -> dict:
        out = {"n": self.n}
        if self.alpha is not None:
            out["alpha"] = rational_to_str(self.alpha)
            out["beta"] = rational_to_str(self.beta)
        out["match"] = self.match
        out["first_mismatch"] = self.first_mismatch
        out["residual"] = self.residual.to_json()
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class VerificationReport:
    """Sweep result for one formula; verdict is "pass" only if every entry
    reconstructed its source polynomial with an identically zero residual."""

    theorem: str
    params: Optional[tuple[JacobiParams, ...]]
    entries: list[VerificationEntry] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if all(e.match for e in self.entries) else "fail"

    def first_failure(self) -> Optional[VerificationEntry]:
        for entry in self.entries:
            if not entry.match:
                return entry
        return None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": None
            if self.params is None
            else [
                {"alpha": rational_to_str(jp.alpha), "beta": rational_to_str(jp.beta)}
                for jp in self.params
            ],
            "entries": [e.to_json() for e in self.entries],
            "verdict": self.verdict,
        }


_THEOREM_PAIRS = {
    "3.1": ("laguerre", "hermite"),
    "3.2": ("hermite", "laguerre"),
    "3.3": ("hermite", "jacobi-1mx"),
    "3.4": ("shifted-jacobi", "hermite"),
}


def _theorem_bases(theorem: str, jp: Optional[JacobiParams]):
    src_family, tgt_family = _THEOREM_PAIRS[theorem]
    source = BasisId(src_family, jp if src_family in _JACOBI_FAMILIES else None)
    target = BasisId(tgt_family, jp if tgt_family in _JACOBI_FAMILIES else None)
    return source, target


def verify_theorem(
    theorem: str,
    n_max: int,
    param_sets: Optional[Sequence[JacobiParams]] = None,
) -> VerificationReport:
    """Certify a closed-form connection against reconstruction and the oracle.

    For each degree n <= n_max (and each parameter set for the Jacobi
    formulas) the closed-form coefficients are used to rebuild the source
    polynomial; the entry records the exact residual and the first index at
    which the closed form disagrees with the oracle.  Construction errors are
    recorded per entry without aborting the sweep.  Entries are ordered by
    (n, parameter-set index).
    """
    if theorem not in _THEOREM_PAIRS:
        raise InvalidInputError(f"unknown theorem id {theorem!r}")
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 0:
        raise InvalidInputError(f"n_max must be a nonnegative integer, got {n_max!r}")
    needs_params = theorem in ("3.3", "3.4")
    if needs_params:
        sets: tuple[Optional[JacobiParams], ...] = tuple(
            param_sets if param_sets is not None else DEFAULT_JACOBI_SWEEP
        )
    else:
        sets = (None,)
    report = VerificationReport(
        theorem=theorem if theorem != "3.3" else "3.3-interpreted",
        params=tuple(s for s in sets if s is not None) if needs_params else None,
    )
    for n in range(n_max + 1):
        for jp in sets:
            entry = VerificationEntry(
                n=n,
                match=False,
                residual=Poly(),
                alpha=None if jp is None else jp.alpha,
                beta=None if jp is None else jp.beta,
            )
            try:
                source, target = _theorem_bases(theorem, jp)
                source_poly = basis_poly(source, n)
                closed = closed_form_connection(source, target, n)
                oracle = connection_oracle(source_poly, target)
                entry.residual = closed.reconstruct() - source_poly
                entry.match = entry.residual.is_zero
                for k in range(n + 1):
                    if closed.coefficients[k] != oracle.coefficients[k]:
                        entry.first_mismatch = k
                        break
            except PolyConnectError as exc:
                entry.error = str(exc)
            report.entries.append(entry)
    return report

"""Exact rational power series and the odd-coefficient bookkeeping for the
two sides of the cubic variation inequality

    (3-x^2)(1+x^2) L1 L2 + 2x(1+x^2) L2  >  2x(1-x^2) L1^2 + 4x L2^2 + 4x^2 L1

where L1(x) = log((1+x)/(1-x)) and L2(x) = L1(x^2).  Writing the left side
as F(x) = 4 sum ell_{2k+1} x^{2k+1} and the right side as
G(x) = 4 sum r_{2k+1} x^{2k+1}, the verified facts are:

    1. every ell_{2k+1} and r_{2k+1} is nonnegative;
    2. ell_1 = r_1 = 0 and ell_3 = r_3 = ell_5 = r_5 = 4;
    3. for odd k >= 3, ell_{2k+1} > r_{2k+1} and
       ell_{2k+1} + ell_{2k+3} > r_{2k+1} + r_{2k+3};
    4. the harmonic-sum closed forms for ell and r (k >= 3) equal the series
       coefficients.

Everything in this module is exact: coefficients are ``fractions.Fraction``
and no comparison involves a tolerance.  The closed forms are treated as the
object under test; the truncated series expansion is the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .report import FAIL, PASS, CheckRecord, VerificationReport

__all__ = [
    "RationalSeries",
    "CoeffPair",
    "l1_series",
    "l2_series",
    "F_series",
    "G_series",
    "series_ell",
    "series_r",
    "coefficient_pairs",
    "explicit_ell",
    "explicit_r",
    "verify_coefficient_properties",
    "hprop_series",
    "verify_hprop_series",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class RationalSeries:
    """A truncated power series with exact rational coefficients.

    ``coeffs[p]`` is the coefficient of x**p.  ``k_max`` is the highest power
    whose coefficient is trusted; ``k_max=None`` marks an exact polynomial
    (all omitted coefficients are zero).  Multiplication truncates to the
    smaller trusted degree of the operands, treating polynomials as trusted
    at every degree.
    """

    coeffs: tuple[Fraction, ...]
    k_max: Optional[int] = None

    def __post_init__(self) -> None:
        if self.k_max is not None:
            if self.k_max < 0:
                raise ValueError("k_max must be nonnegative")
            # normalize: store exactly k_max + 1 coefficients
            c = list(self.coeffs)[: self.k_max + 1]
            c += [_ZERO] * (self.k_max + 1 - len(c))
            object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def polynomial(cls, terms: dict[int, Fraction | int]) -> "RationalSeries":
        deg = max(terms) if terms else 0
        c = [_ZERO] * (deg + 1)
        for p, v in terms.items():
            c[p] = Fraction(v)
        return cls(tuple(c), k_max=None)

    def coeff(self, p: int) -> Fraction:
        if p < 0:
            raise IndexError("negative power")
        if self.k_max is not None and p > self.k_max:
            raise IndexError(
                f"coefficient of x^{p} not trusted (series truncated at {self.k_max})"
            )
        return self.coeffs[p] if p < len(self.coeffs) else _ZERO

    def _k(self, other: "RationalSeries") -> Optional[int]:
        ks = [k for k in (self.k_max, other.k_max) if k is not None]
        return min(ks) if ks else None

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        k = self._k(other)
        span = max(len(self.coeffs), len(other.coeffs))
        if k is not None:
            span = k + 1
        c = [_ZERO] * span
        for i, v in enumerate(self.coeffs[:span]):
            c[i] += v
        for i, v in enumerate(other.coeffs[:span]):
            c[i] += v
        return RationalSeries(tuple(c), k_max=k)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + other.scale(-1)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        k = self._k(other)
        span = len(self.coeffs) + len(other.coeffs) - 1
        if k is not None:
            span = k + 1
        c = [_ZERO] * span
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= span:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= span:
                    break
                if b:
                    c[i + j] += a * b
        return RationalSeries(tuple(c), k_max=k)

    def scale(self, v: Fraction | int) -> "RationalSeries":
        v = Fraction(v)
        return RationalSeries(tuple(v * c for c in self.coeffs), k_max=self.k_max)


def l1_series(k_max: int) -> RationalSeries:
    """log((1+x)/(1-x)) truncated at degree 2*k_max + 1.

    The coefficient of x^{2j+1} is 2/(2j+1).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    deg = 2 * k_max + 1
    c = [_ZERO] * (deg + 1)
    for j in range(k_max + 1):
        c[2 * j + 1] = Fraction(2, 2 * j + 1)
    return RationalSeries(tuple(c), k_max=deg)


def l2_series(k_max: int) -> RationalSeries:
    """log((1+x^2)/(1-x^2)) truncated at degree 2*k_max + 1.

    This is the degree-doubled l1 series: coefficient 2/(2j+1) at x^{4j+2}.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    deg = 2 * k_max + 1
    c = [_ZERO] * (deg + 1)
    j = 0
    while 4 * j + 2 <= deg:
        c[4 * j + 2] = Fraction(2, 2 * j + 1)
        j += 1
    return RationalSeries(tuple(c), k_max=deg)


def F_series(k_max: int) -> RationalSeries:
    """Left-hand side (3-x^2)(1+x^2) L1 L2 + 2x(1+x^2) L2, trusted to x^{2k_max+1}."""
    if k_max < 7:
        raise ValueError("k_max must be >= 7")
    l1, l2 = l1_series(k_max), l2_series(k_max)
    p1 = RationalSeries.polynomial({0: 3, 2: 2, 4: -1})  # (3-x^2)(1+x^2)
    p2 = RationalSeries.polynomial({1: 2, 3: 2})  # 2x(1+x^2)
    return p1 * (l1 * l2) + p2 * l2


def G_series(k_max: int) -> RationalSeries:
    """Right-hand side 2x(1-x^2) L1^2 + 4x L2^2 + 4x^2 L1, trusted to x^{2k_max+1}."""
    if k_max < 7:
        raise ValueError("k_max must be >= 7")
    l1, l2 = l1_series(k_max), l2_series(k_max)
    p1 = RationalSeries.polynomial({1: 2, 3: -2})  # 2x(1-x^2)
    p2 = RationalSeries.polynomial({1: 4})
    p3 = RationalSeries.polynomial({2: 4})
    return p1 * (l1 * l1) + p2 * (l2 * l2) + p3 * l1


@dataclass(frozen=True)
class CoeffPair:
    """The x^{2k+1} coefficients of F/4 and G/4."""

    k: int
    ell: Fraction
    r: Fraction


def coefficient_pairs(k_max: int) -> list[CoeffPair]:
    """All (k, ell_{2k+1}, r_{2k+1}) for k = 0..k_max, from the expansions."""
    ell, r = series_ell(k_max), series_r(k_max)
    return [CoeffPair(k, ell[k], r[k]) for k in range(k_max + 1)]


def series_ell(k_max: int) -> dict[int, Fraction]:
    """ell_{2k+1} = [x^{2k+1}] F / 4 for k = 0..k_max, from the expansion."""
    f = F_series(max(k_max, 7))
    return {k: f.coeff(2 * k + 1) / 4 for k in range(k_max + 1)}


def series_r(k_max: int) -> dict[int, Fraction]:
    """r_{2k+1} = [x^{2k+1}] G / 4 for k = 0..k_max, from the expansion."""
    g = G_series(max(k_max, 7))
    return {k: g.coeff(2 * k + 1) / 4 for k in range(k_max + 1)}


def _odd_harmonic(upper: int) -> Fraction:
    # sum_{m=1}^{upper} 1/(2m-1)
    return sum((Fraction(1, 2 * m - 1) for m in range(1, upper + 1)), _ZERO)


def _sum_4m3(upper: int) -> Fraction:
    # sum_{m=1}^{upper} 1/(4m-3)
    return sum((Fraction(1, 4 * m - 3) for m in range(1, upper + 1)), _ZERO)


def _sum_4m1(upper: int) -> Fraction:
    # sum_{m=1}^{upper} 1/(4m-1)
    return sum((Fraction(1, 4 * m - 1) for m in range(1, upper + 1)), _ZERO)


def explicit_ell(k: int) -> Fraction:
    """Closed form for ell_{2k+1}, k >= 3 (k = 1, 2 are read off the series)."""
    if k < 3:
        raise ValueError("closed form starts at k = 3")
    c1 = Fraction(8 * k - 20, (2 * k - 3) * (2 * k + 1))
    c2 = Fraction(4, 2 * k - 1)
    c3 = Fraction(3, 2 * k + 1) + Fraction(2, 2 * k - 1) - Fraction(1, 2 * k - 3)
    if k % 2 == 1:
        return (
            c1 * _sum_4m3((k - 1) // 2)
            + c2 * _sum_4m1((k - 1) // 2)
            + c3 * _odd_harmonic((k - 1) // 2)
            + Fraction(1, k)
            + Fraction(3, k * (2 * k + 1))
            + Fraction(6, (2 * k - 1) * (2 * k + 1))
        )
    return (
        c1 * _sum_4m1((k - 2) // 2)
        + c2 * _sum_4m3(k // 2)
        + c3 * _odd_harmonic((k - 2) // 2)
        + Fraction(1, k - 1)
        + Fraction(6, (2 * k - 1) * (2 * k + 1))
        + Fraction(10 * k - 1, (k - 1) * (2 * k - 1) * (2 * k + 1))
    )


def explicit_r(k: int) -> Fraction:
    """Closed form for r_{2k+1}, k >= 3."""
    if k < 3:
        raise ValueError("closed form starts at k = 3")
    base = Fraction(2 * k + 2, k * (2 * k - 1)) - Fraction(2, k * (k - 1)) * _odd_harmonic(k - 1)
    if k % 2 == 1:
        return base
    return Fraction(8, k) * _odd_harmonic(k // 2) + base


def verify_coefficient_properties(
    k_max: int,
    *,
    ell_override: Optional[dict[int, Fraction]] = None,
    r_override: Optional[dict[int, Fraction]] = None,
) -> VerificationReport:
    """Check properties 1-3 of the ell/r coefficients plus closed-form/series
    agreement, exactly, for all k <= k_max.

    The overrides substitute individual series-side coefficients before
    checking; they exist so tests can confirm that an injected perturbation
    is caught and reported with its witness.
    """
    if k_max < 5:
        raise ValueError("k_max must be >= 5")
    # one index of headroom so the paired property-3 check covers k = k_max
    ell = series_ell(k_max + 1)
    r = series_r(k_max + 1)
    if ell_override:
        ell.update(ell_override)
    if r_override:
        r.update(r_override)

    checks: list[CheckRecord] = []

    def record(name: str, ok: bool, lhs: Fraction, rhs: Fraction, k: int, **extra: str) -> None:
        witness = None
        if not ok:
            witness = {"k": k, "lhs": str(lhs), "rhs": str(rhs), **extra}
        checks.append(
            CheckRecord(name, PASS if ok else FAIL, float(lhs), float(rhs), witness)
        )

    for k in range(k_max + 1):
        ok = ell[k] >= 0 and r[k] >= 0
        record(
            f"nonnegative:k={k}", ok, ell[k], r[k], k,
            ell=str(ell[k]), r=str(r[k]),
        )

    expected = {0: Fraction(0), 1: Fraction(4), 2: Fraction(4)}
    for k, want in expected.items():
        ok = ell[k] == want and r[k] == want
        record(
            f"initial_values:k={k}", ok, ell[k], want, k,
            ell=str(ell[k]), r=str(r[k]),
        )

    for k in range(3, k_max + 1, 2):
        ok = ell[k] > r[k] and ell[k] + ell[k + 1] > r[k] + r[k + 1]
        record(
            f"dominance:k={k}", ok, ell[k], r[k], k,
            ell_pair=str(ell[k] + ell[k + 1]), r_pair=str(r[k] + r[k + 1]),
        )

    for k in range(3, k_max + 1):
        e_ok = explicit_ell(k) == ell[k]
        record(f"closed_form_ell:k={k}", e_ok, explicit_ell(k), ell[k], k)
        r_ok = explicit_r(k) == r[k]
        record(f"closed_form_r:k={k}", r_ok, explicit_r(k), r[k], k)

    return VerificationReport(
        suite="series-coefficients", params={"k_max": k_max}, seed=0, checks=checks
    )


def hprop_series(k_max: int) -> RationalSeries:
    """The expansion of (1+x^2) x^3 L2 + (1-x^4) L1 - 2x to degree 2*k_max+1.

    This quantity equals (1+x^2)(1-x^2) h'(x) - x (1+x^2) h''(x) up to the
    positive factor 2/(1+x^2); its coefficients are all nonnegative, which
    is the series form of the curvature bound (1-x^2) h' >= x h''.
    """
    if k_max < 3:
        raise ValueError("k_max must be >= 3")
    l1, l2 = l1_series(k_max), l2_series(k_max)
    p1 = RationalSeries.polynomial({3: 1, 5: 1})  # (1+x^2) x^3
    p2 = RationalSeries.polynomial({0: 1, 4: -1})  # 1 - x^4
    lin = RationalSeries.polynomial({1: -2})
    return p1 * l2 + p2 * l1 + lin


def verify_hprop_series(k_max: int) -> VerificationReport:
    """Check that the hprop expansion has zero linear term and no negative
    coefficient through degree 2*k_max + 1.  Exact arithmetic."""
    if k_max < 3:
        raise ValueError("k_max must be >= 3")
    s = hprop_series(k_max)
    deg = 2 * k_max + 1
    checks = [
        CheckRecord(
            "linear_coefficient_zero",
            PASS if s.coeff(1) == 0 else FAIL,
            float(s.coeff(1)),
            0.0,
            None if s.coeff(1) == 0 else {"power": 1, "value": str(s.coeff(1))},
        )
    ]
    negatives = [(p, s.coeff(p)) for p in range(deg + 1) if s.coeff(p) < 0]
    checks.append(
        CheckRecord(
            f"coefficients_nonnegative:deg<={deg}",
            PASS if not negatives else FAIL,
            float(min((c for _, c in negatives), default=_ZERO)),
            0.0,
            None
            if not negatives
            else {"witnesses": [{"power": p, "value": str(c)} for p, c in negatives[:16]]},
        )
    )
    return VerificationReport(
        suite="series-hprop", params={"k_max": k_max}, seed=0, checks=checks
    )

"""Scalar entropy functions and the monotone function chain behind the
entropy-dependent variation constant.

All logarithms are natural and ``0 * log 0 == 0`` throughout.  The chain:

    psi(t)      entropy of the squared two-point function (1-sqrt(t), 1+sqrt(t))
    h(t)        = psi(t**2), with closed-form first and second derivatives
    phi         = psi^{-1}, taking [0, 2 log 2] onto [0, 1]
    xi(t)       = psi(t) / (1 + t), taking [0, 1] onto [0, log 2]
    alpha       = xi^{-1}
    tau(y)      = phi(y) / y
    c_alpha     4 alpha(y) / (y (1 + alpha(y)))
    c_explicit  (4/y) (1/2 - sqrt(u(1-u))),  u = H^{-1}(log 2 - y)

``c_alpha`` and ``c_explicit`` are two independent routes to the same
increasing convex function taking [0, log 2] onto [2, 2/log 2]; their
agreement is one of the verification targets of this package, so neither is
implemented in terms of the other.

Every inverse is computed by bisection.  The inverted functions are strictly
increasing on their domains, so bisection converges unconditionally; we run
it to floating-point exhaustion of the bracket (typically ~55 iterations),
which is what the tight downstream tolerances need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LOG2 = math.log(2.0)
TWO_LOG2 = 2.0 * LOG2

__all__ = [
    "LOG2",
    "TWO_LOG2",
    "Tolerance",
    "DEFAULT_TOL",
    "entropy_H",
    "inv_entropy",
    "psi",
    "h_of",
    "h_prime",
    "h_second",
    "phi",
    "xi",
    "alpha",
    "tau",
    "c_alpha",
    "c_explicit",
]


@dataclass(frozen=True)
class Tolerance:
    """Accuracy budget for the bisection-based inversions."""

    abs_tol: float = 1e-12
    max_bisect_iters: int = 200

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_bisect_iters < 1:
            raise ValueError(
                f"max_bisect_iters must be >= 1, got {self.max_bisect_iters}"
            )


DEFAULT_TOL = Tolerance()


def _xlogx(v: float) -> float:
    return 0.0 if v == 0.0 else v * math.log(v)


def _check_domain(name: str, x: float, lo: float, hi: float) -> None:
    if not (lo <= x <= hi):
        raise ValueError(f"{name}: argument {x!r} outside [{lo!r}, {hi!r}]")


def _bisect_increasing(fn, lo: float, hi: float, y: float, tol: Tolerance) -> float:
    """Solve fn(x) == y for increasing fn on [lo, hi].

    Runs until the bracket has no representable midpoint (or the iteration
    budget is exhausted), so the root is located as precisely as doubles
    allow; tol.abs_tol is a guaranteed residual bound, not the stopping rule.
    """
    flo = fn(lo) - y
    if flo == 0.0:
        return lo
    fhi = fn(hi) - y
    if fhi == 0.0:
        return hi
    for _ in range(tol.max_bisect_iters):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = fn(mid) - y
        if fm == 0.0:
            return mid
        if fm < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def entropy_H(x: float) -> float:
    """Natural-log entropy -x log x - (1-x) log(1-x) on [0, 1]."""
    _check_domain("entropy_H", x, 0.0, 1.0)
    return -_xlogx(x) - _xlogx(1.0 - x)


def inv_entropy(y: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """The unique x in [0, 1/2] with entropy_H(x) == y, for y in [0, log 2]."""
    _check_domain("inv_entropy", y, 0.0, LOG2)
    return _bisect_increasing(entropy_H, 0.0, 0.5, y, tol)


def psi(t: float) -> float:
    """Entropy of f**2 for the two-point function f = (1-sqrt(t), 1+sqrt(t)).

    Strictly increasing and concave, taking [0, 1] onto [0, 2 log 2].
    """
    _check_domain("psi", t, 0.0, 1.0)
    s = math.sqrt(t)
    return (
        0.5 * _xlogx((1.0 - s) ** 2)
        + 0.5 * _xlogx((1.0 + s) ** 2)
        - _xlogx(1.0 + t)
    )


def h_of(t: float) -> float:
    """h(t) = psi(t**2), evaluated in closed form."""
    _check_domain("h_of", t, 0.0, 1.0)
    return (
        0.5 * _xlogx((1.0 - t) ** 2)
        + 0.5 * _xlogx((1.0 + t) ** 2)
        - _xlogx(1.0 + t * t)
    )


def h_prime(t: float) -> float:
    """h'(t) = 2((1+t)log(1+t) - (1-t)log(1-t) - t log(1+t^2)).

    Finite on all of [0, 1]: the (1-t)log(1-t) term tends to 0 at t = 1.
    """
    _check_domain("h_prime", t, 0.0, 1.0)
    return 2.0 * (_xlogx(1.0 + t) - _xlogx(1.0 - t) - t * math.log(1.0 + t * t))


def h_second(t: float) -> float:
    """h''(t) = 4/(1+t^2) - 2 log((1+t^2)/(1-t^2)); diverges at t = 1."""
    _check_domain("h_second", t, 0.0, 1.0)
    if t == 1.0:
        raise ValueError("h_second diverges to -inf at t = 1")
    return 4.0 / (1.0 + t * t) - 2.0 * math.log((1.0 + t * t) / (1.0 - t * t))


def phi(y: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Inverse of psi: the unique t in [0, 1] with psi(t) == y."""
    _check_domain("phi", y, 0.0, TWO_LOG2)
    return _bisect_increasing(psi, 0.0, 1.0, y, tol)


def xi(t: float) -> float:
    """xi(t) = psi(t)/(1+t); increasing concave, [0, 1] onto [0, log 2]."""
    _check_domain("xi", t, 0.0, 1.0)
    return psi(t) / (1.0 + t)


def alpha(y: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Inverse of xi: the unique t in [0, 1] with xi(t) == y."""
    _check_domain("alpha", y, 0.0, LOG2)
    return _bisect_increasing(xi, 0.0, 1.0, y, tol)


def tau(y: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """tau(y) = phi(y)/y on (0, 2 log 2]; tau(0) is the limit phi'(0) = 1/2."""
    _check_domain("tau", y, 0.0, TWO_LOG2)
    if y == 0.0:
        # removable singularity: phi'(0) = 1/psi'(0) = 1/2
        return 0.5
    return phi(y, tol) / y


def c_alpha(t: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """The constant function via the inverse chain: 4a/(t(1+a)), a = alpha(t).

    c_alpha(0) is the limit value 2.
    """
    _check_domain("c_alpha", t, 0.0, LOG2)
    if t == 0.0:
        return 2.0
    a = alpha(t, tol)
    return 4.0 * a / (t * (1.0 + a))


def c_explicit(t: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """The constant function via entropy inversion.

    c_explicit(t) = (4/t) (1/2 - sqrt(u(1-u))) with u = H^{-1}(log 2 - t),
    and c_explicit(0) = 2 (the limit).  The bracketed factor is evaluated as
    eps^2 / (1/2 + sqrt(1/4 - eps^2)) with eps = 1/2 - u, which is the same
    quantity without the cancellation that the direct form suffers for u
    near 1/2.
    """
    _check_domain("c_explicit", t, 0.0, LOG2)
    if t == 0.0:
        return 2.0
    u = inv_entropy(LOG2 - t, tol)
    eps = 0.5 - u
    bracket = eps * eps / (0.5 + math.sqrt(0.25 - eps * eps))
    return 4.0 / t * bracket

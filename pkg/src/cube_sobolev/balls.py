"""Radial (weight-only) reduction for Hamming balls.

A function supported on Ball(n, r) that depends only on Hamming weight is a
vector g of length r+1.  The cube adjacency acts on radial functions as
(Wg)(k) = (n-k) g(k+1) + k g(k-1); conjugating by sqrt(C(n,k)) symmetrizes
this to the (r+1) x (r+1) tridiagonal matrix with zero diagonal and
off-diagonal entries

    b[k] = sqrt((n-k)(k+1)),   k = 0..r-1,

with the Dirichlet truncation g(r+1) = 0 built in.  The induced ball
subgraph is connected and symmetric under coordinate permutations, so its
top adjacency eigenvector is radial and

    lambda_star(Ball(n, r)) = 2 (n - lambda_max(tridiagonal)).

The tridiagonal form makes dimensions in the thousands routine (the matrix
size is r+1, not the ball size).  The top eigenvalue/eigenvector are found
by LAPACK's Sturm-sequence bisection plus inverse iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from .cube import MAX_DENSE_N, CubeFunction, _weights
from .special import LOG2, DEFAULT_TOL, Tolerance, inv_entropy

__all__ = [
    "RadialProfile",
    "ball_lambda_star",
    "ball_minimizer",
    "radial_to_cube",
    "fk_rhs",
]

_EXP_LIMIT = 700.0  # log-scale guard: exp beyond this overflows float64


@dataclass(frozen=True)
class RadialProfile:
    """Weight profile of a radial function on Ball(n, r): value g[k] on the
    weight-k vertices, normalized so the induced cube function has E f^2 = 1."""

    n: int
    r: int
    g: np.ndarray

    def __post_init__(self) -> None:
        g = np.asarray(self.g, dtype=np.float64)
        if g.shape != (self.r + 1,):
            raise ValueError(f"expected {self.r + 1} entries, got {g.shape}")
        if not np.all(np.isfinite(g)):
            raise ValueError("profile entries must be finite")
        object.__setattr__(self, "g", g)


def _check_radius(n: int, r: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0 or r > n:
        raise ValueError(f"radius {r} outside [0, {n}]")


def _offdiag(n: int, r: int) -> np.ndarray:
    k = np.arange(r, dtype=np.float64)
    return np.sqrt((n - k) * (k + 1.0))


def _top_pair(n: int, r: int) -> tuple[float, np.ndarray]:
    d = np.zeros(r + 1)
    w, v = eigh_tridiagonal(d, _offdiag(n, r), select="i", select_range=(r, r))
    u = v[:, 0]
    if u.sum() < 0.0:
        u = -u
    return float(w[0]), u


def ball_lambda_star(n: int, r: int) -> float:
    """Fundamental tone of Ball(n, r) via the tridiagonal reduction."""
    _check_radius(n, r)
    if r == 0:
        return 2.0 * n
    d = np.zeros(r + 1)
    w = eigh_tridiagonal(
        d, _offdiag(n, r), select="i", select_range=(r, r), eigvals_only=True
    )
    return max(2.0 * (n - float(w[0])), 0.0)


def ball_minimizer(n: int, r: int) -> RadialProfile:
    """Weight profile of the tone-attaining function on Ball(n, r).

    The symmetrized top eigenvector u is mapped back to weight space by
    g[k] = u[k] / sqrt(C(n,k)) and scaled to E f^2 = 1; since u is a unit
    vector that scaling is exactly 2^{n/2}.  All work is done on log
    magnitudes so the binomials never overflow; the profile itself must fit
    in float64, which bounds the usable n (roughly n <= 2000 at small r).
    """
    _check_radius(n, r)
    if r == 0:
        return RadialProfile(n, 0, np.array([math.exp(0.5 * n * LOG2)]))
    _, u = _top_pair(n, r)
    k = np.arange(r + 1)
    log_binom = gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)
    scale = 0.5 * (n * LOG2 - log_binom)
    pos = u > 0.0
    log_g = np.where(pos, np.log(np.where(pos, u, 1.0)), -np.inf) + scale
    if np.max(log_g) > _EXP_LIMIT:
        raise ValueError(
            f"profile for n={n}, r={r} does not fit in float64 "
            f"(max log magnitude {np.max(log_g):.1f})"
        )
    g = np.where(pos, np.exp(log_g), u * np.exp(scale))
    return RadialProfile(n, r, g)


def radial_to_cube(profile: RadialProfile) -> CubeFunction:
    """Materialize the profile as a function on all 2^n vertices."""
    n, r = profile.n, profile.r
    if n > MAX_DENSE_N:
        raise ValueError(f"cannot materialize 2^{n} values (n > {MAX_DENSE_N})")
    wt = _weights(n)
    vals = np.where(wt <= r, profile.g[np.minimum(wt, r)], 0.0)
    return CubeFunction(n, vals)


def fk_rhs(n: int, log_card: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Tone-scale isoperimetric lower bound 4n(1/2 - sqrt(x(1-x))) with
    x = H^{-1}(log|A| / n).

    Multiplying by |A|/2^n gives the fractional-boundary-scale bound.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    hi = n * LOG2
    if not 0.0 <= log_card <= hi:
        # tolerate rounding just past the full-cube endpoint
        if 0.0 <= log_card <= hi + 1e-9 * max(1.0, hi):
            log_card = hi
        else:
            raise ValueError(f"log_card {log_card!r} outside [0, {hi!r}]")
    x = inv_entropy(min(log_card / n, LOG2), tol)
    return 4.0 * n * (0.5 - math.sqrt(x * (1.0 - x)))

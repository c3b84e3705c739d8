"""Upper bounds on binary code size from small-tone Hamming balls.

A subset A with lambda_star(A) <= 2(2d+1) caps the size of any distance-d
code at n |A|.  Balls are asymptotically the best sets of their size for
this purpose, so only balls are searched: the critical radius is the
smallest r with ball_lambda_star(n, r) <= 2(2d+1) (the tone is nonincreasing
in r, so a binary search suffices).  The resulting rate curve reproduces the
first linear programming bound H2(1/2 - sqrt(delta(1-delta))).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .balls import ball_lambda_star
from .cube import Ball, log_cardinality
from .special import LOG2, entropy_H

__all__ = [
    "CodeBoundResult",
    "critical_radius",
    "code_size_bound",
    "asymptotic_rate_bound",
]


@dataclass(frozen=True)
class CodeBoundResult:
    n: int
    d: int
    critical_radius: int
    log_ball_size: float
    log_bound: float  # log(n |B_r|), natural log
    rate_bound_bits: float  # log_bound / (n log 2)
    reference_radius: float  # n/2 - sqrt(d(n-d))

    def to_dict(self) -> dict:
        return asdict(self)


def _validate(n: int, d: int) -> None:
    if n < 2:
        raise ValueError("n must be >= 2")
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > n / 2:
        raise ValueError(f"d={d} exceeds n/2={n / 2}; the bound is vacuous there")


def critical_radius(n: int, d: int) -> int:
    """Smallest r with ball_lambda_star(n, r) <= 2(2d+1)."""
    _validate(n, d)
    threshold = 2.0 * (2 * d + 1)
    lo, hi = 0, n  # r = n always qualifies (tone 0)
    while lo < hi:
        mid = (lo + hi) // 2
        if ball_lambda_star(n, mid) <= threshold:
            hi = mid
        else:
            lo = mid + 1
    return lo


def code_size_bound(n: int, d: int) -> CodeBoundResult:
    """Bound log A(n, d) <= log n + log |B_r| at the critical radius."""
    r = critical_radius(n, d)
    log_ball = log_cardinality(Ball(n, r))
    log_bound = math.log(n) + log_ball
    return CodeBoundResult(
        n=n,
        d=d,
        critical_radius=r,
        log_ball_size=log_ball,
        log_bound=log_bound,
        rate_bound_bits=log_bound / (n * LOG2),
        reference_radius=n / 2.0 - math.sqrt(d * (n - d)),
    )


def asymptotic_rate_bound(delta: float) -> float:
    """First linear programming bound H2(1/2 - sqrt(delta(1-delta))) in bits."""
    if not 0.0 < delta < 0.5:
        raise ValueError(f"delta {delta!r} outside (0, 1/2)")
    return entropy_H(0.5 - math.sqrt(delta * (1.0 - delta))) / LOG2

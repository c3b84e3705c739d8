"""Hamming-cube functionals and exact subset spectral quantities.

Vertices of {0,1}^n are bitmasks 0..2^n-1; x and y are adjacent iff x ^ y
has exactly one bit set.  The variation and companion functionals are

    d2(f) = E_x sum_{y~x} (f(x)-f(y))^2      (each ordered pair counted once)
    k2(f) = 1/4 E_x sum_{y~x} (f(x)+f(y))^2  = n E f^2 - d2(f)/4

and entropy_sq(f) = E f^2 log f^2 - E f^2 log E f^2.

The fundamental tone of a nonempty subset A is

    lambda_star(A) = min { d2(f)/E f^2 : supp(f) subseteq A }
                   = 2 (n - lambda_max(W_A))

with W_A the adjacency matrix of the induced subgraph on A; the fractional
edge boundary is (|A|/2^n) * lambda_star(A).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.special import gammaln, logsumexp

from .special import LOG2

MAX_DENSE_N = 24  # full-vector operations materialize 2^n values

__all__ = [
    "Mask",
    "Ball",
    "Subcube",
    "SubsetSpec",
    "CubeFunction",
    "SolverConfig",
    "SpectralResult",
    "d2",
    "k2",
    "entropy_sq",
    "rho_of",
    "edge_boundary",
    "lambda_star",
    "frac_boundary",
    "log_cardinality",
    "parse_mask_file",
]


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DENSE_N:
        raise ValueError(f"dimension n={n} outside [1, {MAX_DENSE_N}]")


@lru_cache(maxsize=32)
def _weights(n: int) -> np.ndarray:
    """Hamming weight of every vertex of {0,1}^n."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.int64)


@lru_cache(maxsize=16)
def _neighbor_table(n: int) -> np.ndarray:
    """(n, 2^n) array: row i maps x to x with bit i flipped.  Small n only."""
    idx = np.arange(1 << n, dtype=np.int64)
    return np.stack([idx ^ (1 << i) for i in range(n)])


@dataclass(frozen=True)
class Mask:
    """Explicit vertex subset of {0,1}^n."""

    n: int
    vertices: frozenset[int]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        for v in self.vertices:
            if not 0 <= v < (1 << self.n):
                raise ValueError(f"vertex {v} outside [0, 2^{self.n})")

    def size(self) -> int:
        return len(self.vertices)

    def indices(self) -> np.ndarray:
        return np.array(sorted(self.vertices), dtype=np.int64)


@dataclass(frozen=True)
class Ball:
    """Hamming ball of radius r centered at the all-zeros vertex.

    Centering at 0 loses nothing: the tone and boundary functionals are
    invariant under the cube's vertex-transitive automorphisms.
    """

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.r <= self.n:
            raise ValueError(f"radius {self.r} outside [0, {self.n}]")

    def size(self) -> int:
        return sum(math.comb(self.n, i) for i in range(self.r + 1))

    def indices(self) -> np.ndarray:
        _check_dim(self.n)
        return np.flatnonzero(_weights(self.n) <= self.r).astype(np.int64)


@dataclass(frozen=True)
class Subcube:
    """Subcube of codimension t: the first t coordinates fixed to 0."""

    n: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.t <= self.n:
            raise ValueError(f"codimension {self.t} outside [0, {self.n}]")

    def size(self) -> int:
        return 1 << (self.n - self.t)

    def indices(self) -> np.ndarray:
        _check_dim(self.n)
        return (np.arange(1 << (self.n - self.t), dtype=np.int64) << self.t)


SubsetSpec = Union[Mask, Ball, Subcube]


@dataclass(frozen=True)
class CubeFunction:
    """Real-valued function on the 2^n vertices, indexed by bitmask."""

    n: int
    values: np.ndarray

    def __post_init__(self) -> None:
        _check_dim(self.n)
        v = np.asarray(self.values, dtype=np.float64)
        if v.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} values, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        object.__setattr__(self, "values", v)

    @classmethod
    def from_values(cls, values) -> "CubeFunction":
        v = np.asarray(values, dtype=np.float64)
        n = int(v.size).bit_length() - 1
        if v.size < 2 or 1 << n != v.size:
            raise ValueError(f"length {v.size} is not a power of two >= 2")
        return cls(n, v)

    @classmethod
    def indicator(cls, subset: SubsetSpec) -> "CubeFunction":
        v = np.zeros(1 << subset.n)
        v[subset.indices()] = 1.0
        return cls(subset.n, v)

    def __abs__(self) -> "CubeFunction":
        return CubeFunction(self.n, np.abs(self.values))

    def is_zero(self) -> bool:
        return not np.any(self.values)


def _pair_sum(f: CubeFunction, sign: float) -> float:
    """sum over ordered adjacent pairs of (f(x) + sign*f(y))^2, / 2^n."""
    v, n = f.values, f.n
    if n <= 12:
        nb = _neighbor_table(n)
        total = float(((v[nb] * sign + v) ** 2).sum())
    else:
        idx = np.arange(1 << n)
        total = 0.0
        for i in range(n):
            total += float(((v[idx ^ (1 << i)] * sign + v) ** 2).sum())
    return total / (1 << n)


def d2(f: CubeFunction) -> float:
    """Variation functional E_x sum_{y~x} (f(x)-f(y))^2."""
    return _pair_sum(f, -1.0)


def k2(f: CubeFunction) -> float:
    """Companion functional 1/4 E_x sum_{y~x} (f(x)+f(y))^2."""
    return 0.25 * _pair_sum(f, 1.0)


def entropy_sq(f: CubeFunction) -> float:
    """Ent(f^2) = E f^2 log f^2 - E f^2 log E f^2, with 0 log 0 = 0."""
    v2 = f.values * f.values
    m = float(v2.mean())
    if m == 0.0:
        raise ValueError("entropy_sq undefined for the zero function")
    safe = np.where(v2 > 0.0, v2, 1.0)
    ent = float((v2 * np.log(safe)).mean()) - m * math.log(m)
    # Jensen gives ent >= 0; rounding can leave a tiny negative
    return max(ent, 0.0)


def rho_of(f: CubeFunction) -> float:
    """Normalized entropy density Ent(f^2) / (n E f^2), clamped to [0, log 2]."""
    m = float((f.values * f.values).mean())
    if m == 0.0:
        raise ValueError("rho undefined for the zero function")
    return min(entropy_sq(f) / (f.n * m), LOG2)


def edge_boundary(A: SubsetSpec) -> float:
    """Edges from A to its complement, normalized by 2^{n-1}."""
    n = A.n
    if isinstance(A, Subcube):
        return float(A.t) * 2.0 ** (1 - A.t)
    if isinstance(A, Ball):
        # every boundary edge leaves a weight-r vertex upward
        if A.r == A.n:
            return 0.0
        if n <= 300:
            return float(Fraction((n - A.r) * math.comb(n, A.r), 1 << (n - 1)))
        log_cut = math.log(n - A.r) + float(
            gammaln(n + 1) - gammaln(A.r + 1) - gammaln(n - A.r + 1)
        )
        return math.exp(log_cut - (n - 1) * LOG2)
    in_A = np.zeros(1 << n, dtype=bool)
    in_A[A.indices()] = True
    idx = np.arange(1 << n)
    cut = 0
    for i in range(n):
        cut += int(np.count_nonzero(in_A & ~in_A[idx ^ (1 << i)]))
    return cut / float(1 << (n - 1))


def log_cardinality(A: SubsetSpec) -> float:
    """log |A|, computed in the log domain so huge-n balls are exact enough."""
    if isinstance(A, Subcube):
        return (A.n - A.t) * LOG2
    if isinstance(A, Ball):
        if A.r == A.n:
            return A.n * LOG2
        i = np.arange(A.r + 1)
        lb = gammaln(A.n + 1) - gammaln(i + 1) - gammaln(A.n - i + 1)
        return float(logsumexp(lb))
    if not A.vertices:
        raise ValueError("log_cardinality of the empty set")
    return math.log(A.size())


@dataclass(frozen=True)
class SolverConfig:
    """Eigensolver policy for lambda_star."""

    dense_threshold: int = 2048
    residual_tol: float = 1e-10
    max_iter: Optional[int] = None
    seed: int = 0
    compute_minimizer: bool = True

    def __post_init__(self) -> None:
        if self.dense_threshold < 1:
            raise ValueError("dense_threshold must be >= 1")
        if not self.residual_tol > 0:
            raise ValueError("residual_tol must be positive")


DEFAULT_SOLVER = SolverConfig()


@dataclass
class SpectralResult:
    lambda_star: float
    frac_boundary: float
    minimizer: Optional[CubeFunction]
    method: str  # dense | iterative | radial
    residual: float


def _induced_neighbor_positions(n: int, idx: np.ndarray) -> np.ndarray:
    """(n, |A|) array of positions within idx of each vertex's neighbors,
    -1 where the neighbor is outside A."""
    pos = np.full(1 << n, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    return np.stack([pos[idx ^ (1 << i)] for i in range(n)])


def _adjacency_csr(n: int, idx: np.ndarray) -> sp.csr_matrix:
    nbpos = _induced_neighbor_positions(n, idx)
    rows = np.broadcast_to(np.arange(idx.size), nbpos.shape)
    keep = nbpos >= 0
    return sp.csr_matrix(
        (np.ones(int(keep.sum())), (rows[keep], nbpos[keep])),
        shape=(idx.size, idx.size),
    )


def lambda_star(A: SubsetSpec, config: SolverConfig = DEFAULT_SOLVER) -> SpectralResult:
    """Fundamental tone of A with certificate data.

    Dense symmetric eigensolve up to config.dense_threshold vertices, ARPACK
    Lanczos above it (deterministic seeded start vector, explicit residual
    check).  |A| = 1 short-circuits to 2n.
    """
    n = A.n
    size = A.size()
    if size == 0:
        raise ValueError("lambda_star of the empty set")
    if size == 1:
        minimizer = CubeFunction.indicator(A) if config.compute_minimizer else None
        return SpectralResult(2.0 * n, 2.0 * n / (1 << n), minimizer, "dense", 0.0)

    idx = A.indices()
    if size <= config.dense_threshold:
        nbpos = _induced_neighbor_positions(n, idx)
        W = np.zeros((size, size))
        rows = np.broadcast_to(np.arange(size), nbpos.shape)
        keep = nbpos >= 0
        W[rows[keep], nbpos[keep]] = 1.0
        if config.compute_minimizer:
            w, V = np.linalg.eigh(W)
            lam_max = float(w[-1])
            vec = V[:, -1]
            residual = float(np.linalg.norm(W @ vec - lam_max * vec))
        else:
            # direct LAPACK solve; backward error is at machine precision
            lam_max = float(np.linalg.eigvalsh(W)[-1])
            vec = None
            residual = 0.0
        method = "dense"
    else:
        W = _adjacency_csr(n, idx)
        rng = np.random.default_rng(config.seed)
        v0 = rng.standard_normal(size)
        try:
            w, V = spla.eigsh(
                W, k=1, which="LA", v0=v0, maxiter=config.max_iter, tol=0
            )
        except spla.ArpackNoConvergence as exc:
            best = float("nan")
            if exc.eigenvalues is not None and len(exc.eigenvalues):
                lam = float(exc.eigenvalues[-1])
                v = exc.eigenvectors[:, -1]
                best = float(np.linalg.norm(W @ v - lam * v) / np.linalg.norm(v))
            raise RuntimeError(
                f"iterative eigensolver did not converge (best residual {best:.3e})"
            ) from exc
        lam_max = float(w[0])
        vec = V[:, 0]
        residual = float(np.linalg.norm(W @ vec - lam_max * vec) / np.linalg.norm(vec))
        if residual > config.residual_tol:
            raise RuntimeError(
                f"iterative eigensolver residual {residual:.3e} exceeds "
                f"{config.residual_tol:.3e}"
            )
        method = "iterative"
        if not config.compute_minimizer:
            vec = None

    lam = max(2.0 * (n - lam_max), 0.0)
    minimizer = None
    if vec is not None:
        if vec[np.argmax(np.abs(vec))] < 0:
            vec = -vec
        full = np.zeros(1 << n)
        full[idx] = vec
        minimizer = CubeFunction(n, full)
    return SpectralResult(lam, size / float(1 << n) * lam, minimizer, method, residual)


def frac_boundary(A: SubsetSpec, config: SolverConfig = DEFAULT_SOLVER) -> float:
    """|A|/2^n times the fundamental tone; at most edge_boundary(A)."""
    return lambda_star(A, config).frac_boundary


def parse_mask_file(path: str) -> Mask:
    """Read the text mask format: first line ``n=<int>``, then one vertex
    index per line.  Duplicates and out-of-range indices are rejected."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("mask file must start with a line 'n=<int>'")
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise ValueError(f"bad dimension line {lines[0]!r}") from exc
    _check_dim(n)
    seen: set[int] = set()
    for ln in lines[1:]:
        try:
            v = int(ln)
        except ValueError as exc:
            raise ValueError(f"bad vertex line {ln!r}") from exc
        if v in seen:
            raise ValueError(f"duplicate vertex {v}")
        if not 0 <= v < (1 << n):
            raise ValueError(f"vertex {v} outside [0, 2^{n})")
        seen.add(v)
    return Mask(n, frozenset(seen))

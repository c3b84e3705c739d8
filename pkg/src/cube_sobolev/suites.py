"""Inequality test harness: entropy/variation inequalities on generated
function suites, the exhaustive small-n subset scan, and the ball tightness
sweep.

Slack policy: every inequality check uses the additive slack
1e-9 * n * E f^2.  All the checked quantities are 2-homogeneous in f, so the
slack scales the same way and pass/fail is invariant under f -> c f.
Signed inputs stay signed for the variation-entropy and functional
isoperimetric checks (which hold for all real f) and are folded to |f| for
the nonnegative-only checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from . import balls
from .cube import (
    Ball,
    CubeFunction,
    Mask,
    SolverConfig,
    Subcube,
    SubsetSpec,
    d2,
    entropy_sq,
    k2,
    lambda_star,
    log_cardinality,
    rho_of,
)
from .report import FAIL, PASS, SKIPPED, CheckRecord, VerificationReport
from .special import LOG2, TWO_LOG2, DEFAULT_TOL, Tolerance, c_explicit, phi

SLACK_COEFF = 1e-9

KINDS = (
    "uniform_random_nonneg",
    "signed_gaussian",
    "indicator_of_random_subset",
    "two_valued",
    "ball_minimizer",
    "dictator_like",
)

CHECKS = ("logsob", "entk", "tech", "isop")

__all__ = [
    "KINDS",
    "CHECKS",
    "GeneratorSpec",
    "generate",
    "check_log_sobolev",
    "check_ent_k2",
    "check_technical",
    "check_functional_isop",
    "check_fk",
    "variation_entropy_ratio",
    "run_inequality_suite",
    "replay_check",
    "ExtremalRow",
    "ScanResult",
    "scan_all_subsets",
    "extremal_table_csv",
    "tightness_sweep",
]


# ---------------------------------------------------------------------------
# function generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic function stream: (kind, n, seed, count) fixes it."""

    kind: str
    n: int
    seed: int
    count: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.count < 0:
            raise ValueError("count must be >= 0")


def _rng(spec: GeneratorSpec) -> np.random.Generator:
    return np.random.default_rng(
        (spec.seed & 0xFFFFFFFFFFFFFFFF, spec.n, KINDS.index(spec.kind))
    )


def generate(spec: GeneratorSpec) -> Iterator[CubeFunction]:
    rng = _rng(spec)
    n = spec.n
    size = 1 << n
    minimizers: dict[int, np.ndarray] = {}
    for _ in range(spec.count):
        if spec.kind == "uniform_random_nonneg":
            vals = rng.random(size)
        elif spec.kind == "signed_gaussian":
            vals = rng.standard_normal(size)
        elif spec.kind == "indicator_of_random_subset":
            vals = (rng.random(size) < 0.5).astype(np.float64)
            if not vals.any():
                vals[rng.integers(size)] = 1.0
        elif spec.kind == "two_valued":
            s = rng.random()
            side = rng.random(size) < 0.5
            vals = np.where(side, 1.0 + s, 1.0 - s)
        elif spec.kind == "ball_minimizer":
            r = int(rng.integers(1, n + 1))
            if r not in minimizers:
                minimizers[r] = balls.radial_to_cube(balls.ball_minimizer(n, r)).values
            vals = minimizers[r]
        else:  # dictator_like
            i = int(rng.integers(n))
            a, b = rng.standard_normal(2)
            bit = (np.arange(size) >> i) & 1
            vals = np.where(bit == 1, b, a)
        yield CubeFunction(n, vals)


# ---------------------------------------------------------------------------
# per-function checks
# ---------------------------------------------------------------------------


def _slack(f: CubeFunction) -> float:
    return SLACK_COEFF * f.n * float((f.values**2).mean())


def _witness(name: str, f: CubeFunction) -> dict:
    return {"check": name, "n": f.n, "values": f.values.tolist()}


def _record(name: str, f: CubeFunction, ok: bool, lhs: float, rhs: float) -> CheckRecord:
    return CheckRecord(
        name, PASS if ok else FAIL, lhs, rhs, None if ok else _witness(name, f)
    )


def variation_entropy_ratio(f: CubeFunction) -> float:
    """d2(f) / Ent(f^2); +inf for a constant (zero-entropy) function."""
    ent = entropy_sq(f)
    return d2(f) / ent if ent > 0.0 else math.inf


def check_log_sobolev(f: CubeFunction, tol: Tolerance = DEFAULT_TOL) -> CheckRecord:
    """d2(f) >= C(rho) Ent(f^2) with rho the normalized entropy density."""
    if f.is_zero():
        return CheckRecord("logsob", SKIPPED)
    lhs = d2(f)
    ent = entropy_sq(f)
    rhs = c_explicit(rho_of(f), tol) * ent
    return _record("logsob", f, lhs >= rhs - _slack(f), lhs, rhs)


def check_ent_k2(f: CubeFunction, tol: Tolerance = DEFAULT_TOL) -> CheckRecord:
    """Ent(f^2) <= 2 log 2 * k2(f), for |f|."""
    g = abs(f)
    if g.is_zero():
        return CheckRecord("entk", SKIPPED)
    lhs = entropy_sq(g)
    rhs = TWO_LOG2 * k2(g)
    return _record("entk", f, lhs <= rhs + _slack(g), lhs, rhs)


def check_technical(f: CubeFunction, tol: Tolerance = DEFAULT_TOL) -> CheckRecord:
    """d2(f) >= 4 k2(f) phi(Ent(f^2)/k2(f)), for |f|."""
    g = abs(f)
    if g.is_zero():
        return CheckRecord("tech", SKIPPED)
    lhs = d2(g)
    kk = k2(g)
    ratio = min(entropy_sq(g) / kk, TWO_LOG2)  # <= 2 log 2 up to rounding
    rhs = 4.0 * kk * phi(ratio, tol)
    return _record("tech", f, lhs >= rhs - _slack(g), lhs, rhs)


def check_functional_isop(
    f: CubeFunction, tol: Tolerance = DEFAULT_TOL
) -> tuple[CheckRecord, CheckRecord]:
    """The two functional isoperimetric facts, for real f:

    (a) Ent(f^2) >= E f^2 log(E f^2 / (E|f|)^2);
    (b) d2(f) >= C(rho) E f^2 log(E f^2 / (E|f|)^2), rho = log(...) / n.
    """
    if f.is_zero():
        return CheckRecord("isop_entropy", SKIPPED), CheckRecord("isop_variation", SKIPPED)
    m2 = float((f.values**2).mean())
    m1 = float(np.abs(f.values).mean())
    log_ratio = max(math.log(m2) - 2.0 * math.log(m1), 0.0)  # >= 0 by Cauchy-Schwarz
    slack = _slack(f)
    ent = entropy_sq(f)
    rec_a = _record("isop_entropy", f, ent >= m2 * log_ratio - slack, ent, m2 * log_ratio)
    rho = min(log_ratio / f.n, LOG2)
    lhs = d2(f)
    rhs = c_explicit(rho, tol) * m2 * log_ratio
    rec_b = _record("isop_variation", f, lhs >= rhs - slack, lhs, rhs)
    return rec_a, rec_b


def _subset_witness(A: SubsetSpec) -> dict:
    if isinstance(A, Mask):
        return {"check": "fk", "n": A.n, "vertices": sorted(A.vertices)}
    if isinstance(A, Ball):
        return {"check": "fk", "n": A.n, "ball_r": A.r}
    return {"check": "fk", "n": A.n, "subcube_t": A.t}


def check_fk(A: SubsetSpec, config: Optional[SolverConfig] = None) -> CheckRecord:
    """lambda_star(A) >= fk_rhs(n, log|A|), the tone-scale isoperimetric bound."""
    config = config or SolverConfig(compute_minimizer=False)
    lhs = lambda_star(A, config).lambda_star
    rhs = balls.fk_rhs(A.n, log_cardinality(A))
    ok = lhs >= rhs - SLACK_COEFF * A.n
    return CheckRecord(
        "fk", PASS if ok else FAIL, lhs, rhs, None if ok else _subset_witness(A)
    )


# ---------------------------------------------------------------------------
# suite runner and replay
# ---------------------------------------------------------------------------


def _check_one(check: str, f: CubeFunction, tol: Tolerance) -> tuple[CheckRecord, ...]:
    if check == "logsob":
        return (check_log_sobolev(f, tol),)
    if check == "entk":
        return (check_ent_k2(f, tol),)
    if check == "tech":
        return (check_technical(f, tol),)
    if check == "isop":
        return check_functional_isop(f, tol)
    raise ValueError(f"unknown check {check!r}")


def run_inequality_suite(
    check: str,
    *,
    n_min: int = 1,
    n_max: int = 10,
    count: int = 1000,
    seed: int = 0,
    kinds: Sequence[str] = KINDS,
    tol: Tolerance = DEFAULT_TOL,
    include_passes: bool = True,
) -> VerificationReport:
    """Run one named check over ``count`` generated functions spread near
    evenly over (kind, n) cells.  With include_passes=False only failing and
    skipped records are kept (the counts still cover everything)."""
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r} (one of {CHECKS})")
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown generator kind {kind!r}")
    cells = [(kind, n) for kind in kinds for n in range(n_min, n_max + 1)]
    base, rem = divmod(count, len(cells))
    checks: list[CheckRecord] = []
    total = 0
    min_ratio = math.inf
    min_ratio_at: Optional[dict] = None
    for ci, (kind, n) in enumerate(cells):
        cell_count = base + (1 if ci < rem else 0)
        spec = GeneratorSpec(kind, n, seed, cell_count)
        for i, f in enumerate(generate(spec)):
            total += 1
            if check == "logsob":
                ratio = variation_entropy_ratio(f)
                if ratio < min_ratio:
                    min_ratio = ratio
                    min_ratio_at = {"kind": kind, "n": n, "i": i}
            for rec in _check_one(check, f, tol):
                rec.name = f"{rec.name}:{kind}:n={n}:i={i}"
                if include_passes or rec.status != PASS:
                    checks.append(rec)
    if check == "logsob" and min_ratio_at is not None and math.isfinite(min_ratio):
        # derived statistic: smallest observed variation/entropy ratio
        checks.append(
            CheckRecord(
                "min_variation_entropy_ratio", PASS, min_ratio, None, min_ratio_at
            )
        )
    return VerificationReport(
        suite=f"inequality-{check}",
        params={
            "check": check,
            "n_min": n_min,
            "n_max": n_max,
            "count": count,
            "kinds": list(kinds),
            "functions_checked": total,
            "include_passes": include_passes,
        },
        seed=seed,
        checks=checks,
    )


def replay_check(witness: dict, tol: Tolerance = DEFAULT_TOL) -> CheckRecord:
    """Re-run a check from the witness dict a failing record carries."""
    kind = witness["check"]
    if kind not in ("fk", "logsob", "entk", "tech", "isop_entropy", "isop_variation"):
        raise ValueError(f"cannot replay witness of kind {kind!r}")
    if kind == "fk":
        n = witness["n"]
        if "vertices" in witness:
            A: SubsetSpec = Mask(n, frozenset(witness["vertices"]))
        elif "ball_r" in witness:
            A = Ball(n, witness["ball_r"])
        elif "subcube_t" in witness:
            A = Subcube(n, witness["subcube_t"])
        else:
            A = Mask(n, frozenset(i for i in range(1 << n) if (witness["mask"] >> i) & 1))
        return check_fk(A)
    f = CubeFunction(witness["n"], np.array(witness["values"]))
    if kind == "logsob":
        return check_log_sobolev(f, tol)
    if kind == "entk":
        return check_ent_k2(f, tol)
    if kind == "tech":
        return check_technical(f, tol)
    if kind == "isop_entropy":
        return check_functional_isop(f, tol)[0]
    return check_functional_isop(f, tol)[1]


# ---------------------------------------------------------------------------
# exhaustive subset scan (n <= 4)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRow:
    m: int
    lambda_min: float
    witness_mask: int
    ball_lambda: Optional[float]
    subcube_lambda: Optional[float]


@dataclass
class ScanResult:
    report: VerificationReport
    table: list[ExtremalRow]


def _batched_lambda_star(n: int, masks: np.ndarray, m: int) -> np.ndarray:
    """Tone of every subset in ``masks`` (all of cardinality m) at once."""
    size = 1 << n
    bits = (masks[:, None] >> np.arange(size, dtype=np.int64)) & 1
    verts = np.nonzero(bits)[1].reshape(len(masks), m)
    xor = (verts[:, :, None] ^ verts[:, None, :]).astype(np.uint32)
    adj = (np.bitwise_count(xor) == 1).astype(np.float64)
    lam_max = np.linalg.eigvalsh(adj)[:, -1]
    return np.maximum(2.0 * (n - lam_max), 0.0)


def scan_all_subsets(n: int) -> ScanResult:
    """Exhaustive tone scan of all nonempty subsets of {0,1}^n (n <= 4):
    per-cardinality minima with witnesses and the ball/subcube comparison,
    plus the isoperimetric check on every subset."""
    if not 1 <= n <= 4:
        raise ValueError("exhaustive scan only feasible for n <= 4")
    size = 1 << n
    all_masks = np.arange(1, 1 << size, dtype=np.int64)
    popcounts = np.bitwise_count(all_masks.astype(np.uint32)).astype(np.int64)

    fk_at_m = {m: balls.fk_rhs(n, math.log(m)) for m in range(1, size + 1)}
    ball_at_m = {
        Ball(n, r).size(): lambda_star(Ball(n, r), SolverConfig(compute_minimizer=False)).lambda_star
        for r in range(n + 1)
    }
    subcube_at_m = {
        Subcube(n, t).size(): lambda_star(Subcube(n, t), SolverConfig(compute_minimizer=False)).lambda_star
        for t in range(n + 1)
    }

    checks: list[CheckRecord] = []
    table: list[ExtremalRow] = []
    slack = SLACK_COEFF * n
    for m in range(1, size + 1):
        masks_m = all_masks[popcounts == m]
        lam = _batched_lambda_star(n, masks_m, m)
        rhs = fk_at_m[m]
        for mask, value in zip(masks_m.tolist(), lam.tolist()):
            ok = value >= rhs - slack
            checks.append(
                CheckRecord(
                    f"fk:mask={mask}",
                    PASS if ok else FAIL,
                    value,
                    rhs,
                    None if ok else {"check": "fk", "n": n, "mask": mask},
                )
            )
        jmin = int(np.argmin(lam))
        table.append(
            ExtremalRow(
                m=m,
                lambda_min=float(lam[jmin]),
                witness_mask=int(masks_m[jmin]),
                ball_lambda=ball_at_m.get(m),
                subcube_lambda=subcube_at_m.get(m),
            )
        )
    report = VerificationReport(
        suite="fk-scan", params={"n": n, "subsets": int(len(all_masks))}, seed=0, checks=checks
    )
    return ScanResult(report, table)


def extremal_table_csv(table: Sequence[ExtremalRow]) -> str:
    lines = ["m,lambda_min,witness_mask,ball_lambda,subcube_lambda"]
    for row in table:
        ball = "" if row.ball_lambda is None else repr(row.ball_lambda)
        sub = "" if row.subcube_lambda is None else repr(row.subcube_lambda)
        lines.append(f"{row.m},{row.lambda_min!r},{row.witness_mask},{ball},{sub}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# ball tightness sweep
# ---------------------------------------------------------------------------


def tightness_sweep(n_list: Sequence[int], ratio: float) -> VerificationReport:
    """Normalized gap between the ball tone and its isoperimetric lower bound
    at radius r = round(ratio * n); asserts the gap stays positive and
    decreases along increasing n."""
    if not n_list:
        raise ValueError("n_list must be nonempty")
    if not 0.0 < ratio < 0.5:
        raise ValueError("ratio must be in (0, 1/2)")
    for n in n_list:
        if n < 100:
            raise ValueError("tightness sweep expects n >= 100")
    checks: list[CheckRecord] = []
    gaps: list[float] = []
    for n in n_list:
        r = round(ratio * n)
        lam_n = balls.ball_lambda_star(n, r) / n
        fk_n = balls.fk_rhs(n, log_cardinality(Ball(n, r))) / n
        gaps.append(lam_n - fk_n)
        checks.append(
            CheckRecord(
                f"gap_positive:n={n}",
                PASS if lam_n > fk_n else FAIL,
                lam_n,
                fk_n,
                {"n": n, "r": r, "gap": lam_n - fk_n},
            )
        )
    if len(n_list) < 2:
        checks.append(CheckRecord("gap_decreasing", SKIPPED))
    else:
        decreasing = all(gaps[i] > gaps[i + 1] for i in range(len(gaps) - 1))
        checks.append(
            CheckRecord(
                "gap_decreasing",
                PASS if decreasing else FAIL,
                gaps[0],
                gaps[-1],
                {"gaps": gaps, "n_list": list(n_list)},
            )
        )
    return VerificationReport(
        suite="ball-tightness",
        params={"n_list": list(n_list), "ratio": ratio},
        seed=0,
        checks=checks,
    )

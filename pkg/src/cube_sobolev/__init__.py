"""Entropy-dependent log-Sobolev constants, fractional edge boundaries and
fundamental tones on the Hamming cube, exact rational series checks, and a
coding-bound calculator."""

from .special import (
    LOG2,
    TWO_LOG2,
    Tolerance,
    entropy_H,
    inv_entropy,
    psi,
    h_of,
    h_prime,
    h_second,
    phi,
    xi,
    alpha,
    tau,
    c_alpha,
    c_explicit,
)
from .series import (
    RationalSeries,
    CoeffPair,
    l1_series,
    l2_series,
    F_series,
    G_series,
    coefficient_pairs,
    explicit_ell,
    explicit_r,
    verify_coefficient_properties,
    verify_hprop_series,
)
from .cube import (
    Mask,
    Ball,
    Subcube,
    CubeFunction,
    SolverConfig,
    SpectralResult,
    d2,
    k2,
    entropy_sq,
    rho_of,
    edge_boundary,
    lambda_star,
    frac_boundary,
    log_cardinality,
    parse_mask_file,
)
from .balls import RadialProfile, ball_lambda_star, ball_minimizer, radial_to_cube, fk_rhs
from .report import CheckRecord, VerificationReport
from .suites import (
    GeneratorSpec,
    generate,
    check_log_sobolev,
    check_ent_k2,
    check_technical,
    check_functional_isop,
    check_fk,
    run_inequality_suite,
    replay_check,
    scan_all_subsets,
    tightness_sweep,
)
from .codes import CodeBoundResult, critical_radius, code_size_bound, asymptotic_rate_bound

__version__ = "0.1.0"

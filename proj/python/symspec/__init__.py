"""Symmetric-group representation data and sampled spectra."""

from ._core import (
    assemble,
    conjugate,
    coxeter_audit,
    dimension,
    eta_zero,
    gaussian_raw_moment,
    generator,
    hermite,
    hermite_coefficients,
    k2_series,
    ks_distance,
    limit_moment,
    monte_carlo,
    partitions_of,
    plancherel,
    ratio_mn,
    ratio_two,
    skew_count,
    spectrum,
    staircase,
    theta,
    trace_character,
    zeta,
)

__all__ = [
    "assemble",
    "conjugate",
    "coxeter_audit",
    "dimension",
    "eta_zero",
    "gaussian_raw_moment",
    "generator",
    "hermite",
    "hermite_coefficients",
    "k2_series",
    "ks_distance",
    "limit_moment",
    "monte_carlo",
    "partitions_of",
    "plancherel",
    "ratio_mn",
    "ratio_two",
    "skew_count",
    "spectrum",
    "staircase",
    "theta",
    "trace_character",
    "zeta",
]

"""Exact topological-vertex amplitudes, local partition functions of curve
configurations, Gopakumar-Vafa extraction and Cremona class reduction."""
from .exact_algebra import (
    DomainError,
    GenusSeries,
    HalfLaurent,
    NovikovSeries,
    QRational,
    bernoulli,
    bracket,
    expand_genus,
    qbracket,
    series_exp,
    series_log,
)
from .partitions import Partition, PartitionTriple, kappa, transpose, z_factor
from .symfunc import character, lr_coefficient, schur_from_power_sums, w_mu, w_skew
from .vertex import framed_amplitude, phi, w_three_math, w_three_physical, w_two

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "GenusSeries",
    "HalfLaurent",
    "NovikovSeries",
    "QRational",
    "bernoulli",
    "bracket",
    "expand_genus",
    "qbracket",
    "series_exp",
    "series_log",
    "Partition",
    "PartitionTriple",
    "kappa",
    "transpose",
    "z_factor",
    "character",
    "lr_coefficient",
    "schur_from_power_sums",
    "w_mu",
    "w_skew",
    "framed_amplitude",
    "phi",
    "w_three_math",
    "w_three_physical",
    "w_two",
]

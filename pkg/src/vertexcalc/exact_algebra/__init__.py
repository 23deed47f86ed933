"""Exact arithmetic: Laurent polynomials in x = q^(1/2), q-rationals, genus expansion, Novikov series."""
from .laurent import (
    BigRational,
    DomainError,
    HalfLaurent,
    QRational,
    bracket,
    format_laurent,
    qbracket,
)
from .genus import (
    GenusSeries,
    InconsistencyError,
    NotConnectedCoefficient,
    bernoulli,
    expand_genus,
)
from .novikov import NovikovSeries, edge_label, parse_edge, series_exp, series_log

__all__ = [
    "BigRational",
    "DomainError",
    "HalfLaurent",
    "QRational",
    "bracket",
    "format_laurent",
    "qbracket",
    "GenusSeries",
    "InconsistencyError",
    "NotConnectedCoefficient",
    "bernoulli",
    "expand_genus",
    "NovikovSeries",
    "edge_label",
    "parse_edge",
    "series_exp",
    "series_log",
]

"""Exact Tutte and Jones polynomials for the S_m ladder-with-apex family,
their zeros, and the lambda-dominance locus the zeros accumulate on."""

from .algebra import BivarPoly, LaurentPoly, PolyOverRing
from .errors import (
    ConvergenceFailure,
    CorruptCache,
    InvalidParameter,
    IoFailure,
    KnotPolyError,
    ResourceLimit,
    TooLarge,
    ZeroArgument,
)
from .graphs import Multigraph, build_S, graph_stats, tutte_delcon, tutte_oracle
from .genfun import build_genfun, tutte_series
from .jones import family_index, jones_H
from .locus import dominance_gap, emit, find_zeros, scan_locus

__version__ = "0.1.0"

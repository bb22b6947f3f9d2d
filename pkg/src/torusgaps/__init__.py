"""Gap spectra and undefeated-edge distance sets for Kronecker sequences.

The package computes, for the sequence of points ({k a_1}, ..., {k a_m})
on the m-torus:

* the one-dimensional gap spectrum and its classical generalisations
  (:mod:`torusgaps.gaps`),
* the set of undefeated-edge Euclidean distances, by a grouped sweep and
  by a brute-force oracle (:mod:`torusgaps.tournament`),
* the champion-denominator machinery whose counting bounds explain why
  those sets stay small (:mod:`torusgaps.denominators`),
* seeded experiment sweeps that stress every bound
  (:mod:`torusgaps.experiments`),

plus a CLI (``torusgaps``) exposing all of it.
"""

from .circle import Arc, ArcKind, arcs_overlap, circle_norm, fractional_part, geodesic, signed_deviation
from .denominators import (
    ApproximationProfile,
    DenominatorRecord,
    TypeRelation,
    approximation_profile,
    classify,
    find_primary,
    find_q1,
    find_q2,
    find_secondary,
    primary_count_bound,
    relation,
    secondary_distinct_bound,
    undercut_bound,
    undercut_count,
)
from .gaps import GapSpectrum, chung_graham_gaps, gap_spectrum, geelen_simpson_gaps
from .tournament import (
    Edge,
    SurvivorReport,
    build_edges,
    survivor_bound,
    survivor_bound_alt,
    survivors_brute,
    survivors_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcKind",
    "ApproximationProfile",
    "DenominatorRecord",
    "Edge",
    "GapSpectrum",
    "SurvivorReport",
    "TypeRelation",
    "approximation_profile",
    "arcs_overlap",
    "build_edges",
    "chung_graham_gaps",
    "circle_norm",
    "classify",
    "find_primary",
    "find_q1",
    "find_q2",
    "find_secondary",
    "fractional_part",
    "gap_spectrum",
    "geelen_simpson_gaps",
    "geodesic",
    "primary_count_bound",
    "relation",
    "secondary_distinct_bound",
    "signed_deviation",
    "survivor_bound",
    "survivor_bound_alt",
    "survivors_brute",
    "survivors_sweep",
    "undercut_bound",
    "undercut_count",
]

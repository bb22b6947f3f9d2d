"""Gap spectra of one-dimensional Kronecker point sets.

``gap_spectrum`` sorts the fractional parts of the first n multiples of a
real number and reports the gaps between neighbours; the number of distinct
gap values never exceeds three.  ``chung_graham_gaps`` (several shifted
copies of one sequence, at most 3d distinct gaps) and
``geelen_simpson_gaps`` (sums of multiples of two numbers, at most n1 + 3)
build the classical generalisations' point sets so their bounds can be
checked empirically.

Two gap conventions exist.  The linear convention reads [0, 1) as a segment
and reports n + 1 gaps including the two boundary gaps at 0 and 1; the
circular convention closes the circle and reports n gaps, the last one
wrapping from the largest point back to the smallest.  Both are available
everywhere via ``circular=``; the defaults follow each construction's
natural reading (linear for the single-sequence spectrum, circular for the
generalisations, whose point sets contain 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .numerics import Real, coerce_components, distinct_values, frac_array

__all__ = ["GapSpectrum", "gap_spectrum", "chung_graham_gaps", "geelen_simpson_gaps"]


@dataclass
class GapSpectrum:
    """Sorted circle points with their neighbour gaps.

    ``labels`` records which input generated each sorted point (the multiple
    k for a plain spectrum, an (i, k) or (k1, k2) pair for the merged
    constructions).  ``gaps`` keeps zero-length entries from coincident
    points; ``distinct_gaps`` is the clustered list of nonzero gap values.
    """

    points: list = field(repr=False)
    labels: list = field(repr=False)
    gaps: list
    distinct_gaps: list
    circular: bool
    exact: bool

    @property
    def distinct_count(self) -> int:
        return len(self.distinct_gaps)

    def gap_sum(self) -> Real:
        return sum(self.gaps)


def _assemble(points: list, labels: list, epsilon: float, circular: bool,
              exact: bool) -> GapSpectrum:
    order = sorted(range(len(points)), key=lambda i: (points[i], labels[i]))
    pts = [points[i] for i in order]
    labs = [labels[i] for i in order]
    gaps: list = []
    if circular:
        gaps = [pts[i + 1] - pts[i] for i in range(len(pts) - 1)]
        gaps.append(1 - pts[-1] + pts[0])
    else:
        gaps.append(pts[0])
        gaps.extend(pts[i + 1] - pts[i] for i in range(len(pts) - 1))
        gaps.append(1 - pts[-1])
    distinct = distinct_values(gaps, epsilon, exact, drop_zero=True)
    return GapSpectrum(pts, labs, gaps, distinct, circular, exact)


def _assemble_float(points: np.ndarray, labels: list, epsilon: float,
                    circular: bool) -> GapSpectrum:
    order = np.argsort(points, kind="stable")
    pts = points[order]
    labs = [labels[i] for i in order]
    if circular:
        gaps = np.empty(len(pts))
        gaps[:-1] = np.diff(pts)
        gaps[-1] = 1.0 - pts[-1] + pts[0]
    else:
        gaps = np.empty(len(pts) + 1)
        gaps[0] = pts[0]
        gaps[1:-1] = np.diff(pts)
        gaps[-1] = 1.0 - pts[-1]
    distinct = distinct_values(gaps.tolist(), epsilon, False, drop_zero=True)
    return GapSpectrum(pts.tolist(), labs, gaps.tolist(), distinct, circular, False)


def gap_spectrum(alpha: Real, n: int, *, epsilon: float = 1e-9,
                 circular: bool = False) -> GapSpectrum:
    """Spectrum of {k*alpha}, k = 1..n.

    The default linear convention reports n + 1 gaps: the offset of the
    smallest point from 0, the n - 1 interior differences, and the headroom
    of the largest point below 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    (a,), exact = coerce_components([alpha])
    labels = list(range(1, n + 1))
    if exact:
        num, den = a.numerator, a.denominator
        points = [Fraction(k * num % den, den) for k in labels]
        return _assemble(points, labels, epsilon, circular, True)
    points = frac_array(np.arange(1, n + 1, dtype=float) * a)
    return _assemble_float(points, labels, epsilon, circular)


def chung_graham_gaps(alpha: Real, lambdas: list, n_list: list[int], *,
                      epsilon: float = 1e-9, circular: bool = True) -> GapSpectrum:
    """Spectrum of the merged set {k*alpha + lambda_i}, 1 <= k <= n_i.

    The distinct gap count of d shifted copies stays below 3d; that check
    belongs to the verifier, not to this constructor.
    """
    if not lambdas:
        raise ValueError("lambdas must be nonempty")
    if len(lambdas) != len(n_list):
        raise ValueError("lambdas and n_list must have equal length")
    if any(n < 1 for n in n_list):
        raise ValueError("every n_i must be >= 1")
    comps, exact = coerce_components([alpha, *lambdas])
    a, lams = comps[0], comps[1:]
    labels = [(i + 1, k) for i, n in enumerate(n_list) for k in range(1, n + 1)]
    if exact:
        points = [(k * a + lams[i - 1]) % 1 for i, k in labels]
        return _assemble(points, labels, epsilon, circular, True)
    points = np.concatenate([
        frac_array(np.arange(1, n + 1, dtype=float) * a + lam)
        for lam, n in zip(lams, n_list)
    ])
    return _assemble_float(points, labels, epsilon, circular)


def geelen_simpson_gaps(alpha: Real, beta: Real, n1: int, n2: int, *,
                        epsilon: float = 1e-9, circular: bool = True) -> GapSpectrum:
    """Spectrum of {k1*alpha + k2*beta}, 0 <= k1 < n1, 0 <= k2 < n2.

    The distinct gap bound n1 + 3 is stated for the first multiplier; the
    construction is symmetric, so swapping the argument pairs gives the
    n2 + 3 variant.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("n1 and n2 must be >= 1")
    (a, b), exact = coerce_components([alpha, beta])
    labels = [(k1, k2) for k1 in range(n1) for k2 in range(n2)]
    if exact:
        points = [(k1 * a + k2 * b) % 1 for k1, k2 in labels]
        return _assemble(points, labels, epsilon, circular, True)
    grid = (np.arange(n1, dtype=float) * a)[:, None] + (np.arange(n2, dtype=float) * b)[None, :]
    points = frac_array(grid).ravel()
    return _assemble_float(points, labels, epsilon, circular)

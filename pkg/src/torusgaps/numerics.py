"""Shared numeric plumbing: dual-mode coercion, tolerant clustering, integer roots.

Every quantity in this package lives in one of two numeric modes:

* floating point, with a configurable comparison tolerance ``epsilon``;
* exact rationals, used when every input component is an ``int`` or a
  ``fractions.Fraction``.  In exact mode all comparisons are literal and
  ``epsilon`` is ignored.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

Real = Union[int, float, Fraction]


def frac_array(x: np.ndarray) -> np.ndarray:
    """Elementwise fractional part in [0, 1).

    np.mod(x, 1.0) can round to exactly 1.0 for inputs just below an
    integer; those wrap to 0.0 so every value is a valid circle point.
    """
    f = np.mod(x, 1.0)
    f[f >= 1.0] = 0.0
    return f


def is_exact(x: Real) -> bool:
    """True for ints and Fractions (values that support exact arithmetic)."""
    return isinstance(x, Rational)


def all_exact(values: Iterable[Real]) -> bool:
    return all(is_exact(v) for v in values)


def coerce_components(values: Sequence[Real]) -> tuple[list[Real], bool]:
    """Normalize a vector of generators to a single numeric mode.

    Returns ``(components, exact)``.  If every component is exact the values
    are passed through as Fractions; otherwise everything is coerced to float.
    """
    values = list(values)
    if not values:
        raise ValueError("empty generator vector")
    if all_exact(values):
        return [Fraction(v) for v in values], True
    out = []
    for v in values:
        f = float(v)
        if not math.isfinite(f):
            raise ValueError(f"non-finite generator component: {v!r}")
        out.append(f)
    return out, False


def ceil_sqrt(n: int) -> int:
    """Smallest integer s with s*s >= n."""
    if n < 0:
        raise ValueError("ceil_sqrt of a negative number")
    s = math.isqrt(n)
    return s if s * s == n else s + 1


def group_indices(keys: Sequence[Real], epsilon: float, exact: bool) -> tuple[list[int], int]:
    """Assign each key a cluster index, clusters ordered by ascending value.

    Clusters are formed on the sorted keys, splitting wherever two adjacent
    values differ by more than ``epsilon`` (exact mode: wherever they differ
    at all).  Returns ``(group_id_per_input_position, number_of_groups)``.
    """
    order = sorted(range(len(keys)), key=lambda i: keys[i])
    gids = [0] * len(keys)
    gid = 0
    for pos, idx in enumerate(order):
        if pos > 0:
            prev = keys[order[pos - 1]]
            cur = keys[idx]
            if (cur != prev) if exact else (cur - prev > epsilon):
                gid += 1
        gids[idx] = gid
    return gids, (gid + 1 if keys else 0)


def distinct_values(values: Iterable[Real], epsilon: float, exact: bool,
                    drop_zero: bool = False) -> list[Real]:
    """Cluster values at the working tolerance and return one representative
    (the cluster minimum) per cluster, ascending.

    With ``drop_zero`` clusters indistinguishable from zero are omitted;
    these arise from coincident circle points on rational instances.
    """
    vals = sorted(values)
    reps: list[Real] = []
    for i, v in enumerate(vals):
        if i == 0 or ((v != vals[i - 1]) if exact else (v - vals[i - 1] > epsilon)):
            reps.append(v)
    if drop_zero:
        if exact:
            reps = [r for r in reps if r != 0]
        else:
            reps = [r for r in reps if r > epsilon]
    return reps

"""Undefeated-edge distance sets for Kronecker sequences on the m-torus.

The players are the edges of the complete graph on the points
({j a_1}, ..., {j a_m}), 1 <= j <= n.  An edge's length is the Euclidean
torus distance sqrt(sum_r ||q a_r||^2) with q = k - j, so it depends only
on the index difference q.  An edge is *defeated* when some strictly
shorter edge's projection overlaps its own on at least one coordinate
axis; the set S of lengths of undefeated edges stays below a
dimension-dependent ceiling (``survivor_bound``) no matter how large n is.

Two independent engines compute S:

* ``survivors_sweep`` processes edges in ascending length groups and tests
  each edge's per-axis arcs against the union of all strictly shorter
  arcs.  "Some shorter edge overlaps on some axis" distributes over the
  union, so one coverage structure per axis replaces all pairwise tests.
* ``survivors_brute`` applies the defeat relation pairwise and serves as
  the oracle for the sweep.

Edges whose lengths agree within the tolerance form one group and never
defeat each other (the relation is strictly "shorter beats longer"); a
group's arcs enter the coverage only after the whole group is judged.
In floating mode every arc part is shrunk by half the tolerance at both
ends, on the judged side and the opponent side alike, so intersections of
measure below the tolerance (floating-point artefacts on rational inputs,
where exact arithmetic gives empty arcs or exact endpoint touches) never
count as defeats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .circle import Arc, geodesic
from .coverage import ArcCoverage
from .numerics import (Real, ceil_sqrt, coerce_components, frac_array,
                       group_indices, is_exact)

__all__ = [
    "Edge",
    "SurvivorReport",
    "build_edges",
    "brute_over_edges",
    "survivor_bound",
    "survivor_bound_alt",
    "survivors_brute",
    "survivors_sweep",
    "sweep_over_edges",
]

_SENT = 2.0  # encodes an empty interval in the vectorized float paths


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------

def survivor_bound(m: int) -> int:
    """Ceiling on the number of distinct undefeated-edge lengths in dimension m.

    3 on the circle and 11 on the 2-torus; for m >= 3 the general counting
    argument gives ceil(sqrt(m))^m * (ceil(sqrt(2m))^m + 2^m + 1) + 2,
    which evaluates to 290 at m = 3.
    """
    if m < 1:
        raise ValueError("dimension must be >= 1")
    if m == 1:
        return 3
    if m == 2:
        return 11
    return ceil_sqrt(m) ** m * (ceil_sqrt(2 * m) ** m + 2 ** m + 1) + 2


def survivor_bound_alt(m: int) -> int:
    """Variant of the general formula with ceil(sqrt(m)) in place of
    ceil(sqrt(2m)) inside the parenthesis.

    Evaluates to 138 at m = 3 instead of 290.  Reported alongside
    ``survivor_bound`` for comparison; never used for enforcement.
    """
    if m < 1:
        raise ValueError("dimension must be >= 1")
    c = ceil_sqrt(m) ** m
    return c * (c + 2 ** m + 1) + 2


# ---------------------------------------------------------------------------
# Edge construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    """Edge (j, k) with 1 <= j < k <= n, its difference q = k - j, its torus
    length, and the per-axis geodesic arcs between its endpoints.

    ``sqlen`` is the comparison key: the squared length as an exact Fraction
    in exact mode, a float otherwise.  ``length`` is always a float, for
    display."""

    j: int
    k: int
    q: int
    length: float
    sqlen: Real
    arcs: tuple[Arc, ...]


@dataclass
class SurvivorReport:
    """The undefeated-edge length set S with witnesses.

    ``distinct_lengths`` lists one representative per surviving length
    cluster, ascending and separated by more than the tolerance;
    ``witnesses`` pairs each representative with one surviving edge of that
    length.  ``survivors`` is the full undefeated edge list (sorted by
    (j, k)), with ``survivor_lengths`` aligned to it."""

    distinct_lengths: list[float]
    witnesses: list[tuple[float, tuple[int, int]]]
    survivor_count: int
    defeated_count: int
    mode: str
    survivors: list[tuple[int, int]] = field(repr=False)
    survivor_lengths: list[float] = field(repr=False)
    exact: bool = False

    @property
    def distinct_count(self) -> int:
        return len(self.distinct_lengths)


def _float_instance(alphas: list[float], n: int) -> tuple[np.ndarray, np.ndarray]:
    """Point matrix P[i, r] = {(i+1) a_r} and per-difference lengths."""
    a = np.asarray(alphas, dtype=float)
    P = frac_array(np.arange(1, n + 1, dtype=float)[:, None] * a[None, :])
    Pq = P[: n - 1]
    norms = np.minimum(Pq, 1.0 - Pq)
    lengths = np.sqrt((norms * norms).sum(axis=1))
    return P, lengths


def build_edges(alphas, n: int) -> list[Edge]:
    """All n(n-1)/2 edges with lengths and per-axis geodesics populated."""
    comps, exact = coerce_components(alphas)
    if n < 2:
        raise ValueError("n must be >= 2 (no edges otherwise)")
    if exact:
        pts = []
        for a in comps:
            num, den = a.numerator, a.denominator
            pts.append([Fraction(k * num % den, den) for k in range(1, n + 1)])
        sqlens: list[Real] = []
        lengths = []
        for q in range(1, n):
            sq = Fraction(0)
            for axis in pts:
                f = axis[q - 1]
                norm = min(f, 1 - f)
                sq += norm * norm
            sqlens.append(sq)
            lengths.append(float(sq) ** 0.5)
    else:
        P, lens = _float_instance(comps, n)
        pts = [P[:, r].tolist() for r in range(len(comps))]
        lengths = lens.tolist()
        sqlens = [x * x for x in lengths]
    edges = []
    for j in range(1, n):
        for k in range(j + 1, n + 1):
            q = k - j
            arcs = tuple(geodesic(axis[j - 1], axis[k - 1]) for axis in pts)
            edges.append(Edge(j, k, q, lengths[q - 1], sqlens[q - 1], arcs))
    return edges


# ---------------------------------------------------------------------------
# Report assembly (shared by every engine)
# ---------------------------------------------------------------------------

def _assemble_report(alive: list[tuple[int, float, int, int]], total_edges: int,
                     mode: str, exact: bool) -> SurvivorReport:
    """alive: (group_id, length, j, k) for each undefeated edge."""
    survivors = sorted((j, k) for _, _, j, k in alive)
    lengths_by_edge = {(j, k): ln for _, ln, j, k in alive}
    by_group: dict[int, list[tuple[float, int, int]]] = {}
    for gid, ln, j, k in alive:
        by_group.setdefault(gid, []).append((ln, j, k))
    distinct = []
    witnesses = []
    for gid in sorted(by_group):
        entries = by_group[gid]
        rep = min(ln for ln, _, _ in entries)
        wit = min((j, k) for ln, j, k in entries if ln == rep)
        distinct.append(rep)
        witnesses.append((rep, wit))
    return SurvivorReport(
        distinct_lengths=distinct,
        witnesses=witnesses,
        survivor_count=len(survivors),
        defeated_count=total_edges - len(survivors),
        mode=mode,
        survivors=survivors,
        survivor_lengths=[lengths_by_edge[e] for e in survivors],
        exact=exact,
    )


# ---------------------------------------------------------------------------
# Pure-Python engines (exact mode, synthetic edge lists)
# ---------------------------------------------------------------------------

def _edge_groups(edges: list[Edge], epsilon: float) -> tuple[list[int], int, bool]:
    exact = all(is_exact(e.sqlen) for e in edges)
    keys = [e.sqlen if exact else e.length for e in edges]
    gids, ngroups = group_indices(keys, epsilon, exact)
    return gids, ngroups, exact


def _shrunk_parts(arc: Arc, shrink) -> list[tuple[Real, Real]]:
    out = []
    for s, e in arc.parts():
        qs, qe = s + shrink, e - shrink
        if qs < qe:
            out.append((qs, qe))
    return out


def sweep_over_edges(edges: list[Edge], *, epsilon: float = 1e-9) -> SurvivorReport:
    """Grouped-sweep tournament over an explicit edge list.

    Used directly for exact-rational instances and for constructed edge
    sets in tests; Kronecker instances in floating mode go through the
    vectorized path in ``survivors_sweep``."""
    if not edges:
        raise ValueError("no edges to judge")
    m = len(edges[0].arcs)
    gids, ngroups, exact = _edge_groups(edges, epsilon)
    shrink = 0 if exact else epsilon / 2
    by_group: list[list[int]] = [[] for _ in range(ngroups)]
    for i, g in enumerate(gids):
        by_group[g].append(i)
    coverages = [ArcCoverage() for _ in range(m)]
    alive = [False] * len(edges)
    for idxs in by_group:
        parts = {i: [_shrunk_parts(arc, shrink) for arc in edges[i].arcs]
                 for i in idxs}
        for i in idxs:
            defeated = False
            for r in range(m):
                cov = coverages[r]
                if any(cov.overlaps(qs, qe) for qs, qe in parts[i][r]):
                    defeated = True
                    break
            alive[i] = not defeated
        for i in idxs:
            for r in range(m):
                for s, e in parts[i][r]:
                    coverages[r].insert(s, e)
    kept = [(gids[i], edges[i].length, edges[i].j, edges[i].k)
            for i in range(len(edges)) if alive[i]]
    return _assemble_report(kept, len(edges), "sweep", exact)


def brute_over_edges(edges: list[Edge], *, epsilon: float = 1e-9) -> SurvivorReport:
    """Pairwise tournament over an explicit edge list: an edge survives iff
    no edge from a strictly shorter length group overlaps it on any axis."""
    if not edges:
        raise ValueError("no edges to judge")
    gids, _, exact = _edge_groups(edges, epsilon)
    shrink = 0 if exact else epsilon / 2
    order = sorted(range(len(edges)), key=lambda i: gids[i])
    shrunk = [[_shrunk_parts(arc, shrink) for arc in e.arcs] for e in edges]
    alive = [True] * len(edges)
    for i, e in enumerate(edges):
        g = gids[i]
        mine = shrunk[i]
        for o in order:
            if gids[o] >= g:
                break
            hit = False
            for r, parts in enumerate(mine):
                opp = shrunk[o][r]
                if any(max(a, c) < min(b, d) for a, b in parts for c, d in opp):
                    hit = True
                    break
            if hit:
                alive[i] = False
                break
    kept = [(gids[i], edges[i].length, edges[i].j, edges[i].k)
            for i in range(len(edges)) if alive[i]]
    return _assemble_report(kept, len(edges), "brute", exact)


# ---------------------------------------------------------------------------
# Vectorized floating-point engines
# ---------------------------------------------------------------------------

class _FloatCoverage:
    """Numpy twin of ArcCoverage: disjoint sorted intervals with batch
    queries and batch insert-with-merge."""

    __slots__ = ("starts", "ends")

    def __init__(self) -> None:
        self.starts = np.empty(0)
        self.ends = np.empty(0)

    def query(self, qs: np.ndarray, qe: np.ndarray) -> np.ndarray:
        if len(self.starts) == 0:
            return np.zeros(len(qs), dtype=bool)
        i = np.searchsorted(self.starts, qs, side="right")
        hit = np.zeros(len(qs), dtype=bool)
        left = i > 0
        hit[left] = self.ends[i[left] - 1] > qs[left]
        right = i < len(self.starts)
        hit[right] |= self.starts[i[right]] < qe[right]
        hit &= qs < qe  # queries that shrank to nothing never overlap
        return hit

    def insert_many(self, s: np.ndarray, e: np.ndarray) -> None:
        keep = s < e
        if not keep.any():
            return
        s = np.concatenate([self.starts, s[keep]])
        e = np.concatenate([self.ends, e[keep]])
        order = np.argsort(s, kind="stable")
        s, e = s[order], e[order]
        reach = np.maximum.accumulate(e)
        first = np.empty(len(s), dtype=bool)
        first[0] = True
        first[1:] = s[1:] > reach[:-1]
        starts_at = np.flatnonzero(first)
        last_of_run = np.append(starts_at[1:], len(s)) - 1
        self.starts = s[starts_at]
        self.ends = reach[last_of_run]


def _axis_components(pj: np.ndarray, pk: np.ndarray, shrink: float):
    """Half-open components of the geodesics between paired points, each
    shrunk by ``shrink`` at both ends.

    Returns (c1s, c1e, c2s, c2e); components that are empty (or vanish
    under shrinking) carry the sentinel so they never register an overlap
    in vectorized comparisons."""
    lo = np.minimum(pj, pk)
    hi = np.maximum(pj, pk)
    wrap = (hi - lo) > 0.5
    c1s = np.where(wrap, 0.0, lo) + shrink
    c1e = np.where(wrap, lo, hi) - shrink
    c2s = np.where(wrap, hi + shrink, _SENT)
    c2e = np.where(wrap, 1.0 - shrink, _SENT)
    bad1 = c1s >= c1e
    c1s = np.where(bad1, _SENT, c1s)
    c1e = np.where(bad1, _SENT, c1e)
    bad2 = c2s >= c2e
    c2s = np.where(bad2, _SENT, c2s)
    c2e = np.where(bad2, _SENT, c2e)
    return c1s, c1e, c2s, c2e


def _q_groups(lengths: np.ndarray, epsilon: float) -> tuple[np.ndarray, list[list[int]]]:
    """Cluster the per-difference lengths; groups come back ascending."""
    order = np.argsort(lengths, kind="stable")
    gids = np.zeros(len(lengths), dtype=np.int64)
    groups: list[list[int]] = [[int(order[0])]]
    for prev, cur in zip(order[:-1], order[1:]):
        if lengths[cur] - lengths[prev] > epsilon:
            groups.append([])
        gids[cur] = len(groups) - 1
        groups[-1].append(int(cur))
    return gids, groups


def _sweep_float(alphas: list[float], n: int, epsilon: float) -> SurvivorReport:
    P, lengths = _float_instance(alphas, n)
    m = P.shape[1]
    shrink = epsilon / 2
    gids, groups = _q_groups(lengths, epsilon)
    coverages = [_FloatCoverage() for _ in range(m)]
    alive: list[tuple[int, float, int, int]] = []
    for gid, group in enumerate(groups):
        pending: list[list[tuple[np.ndarray, np.ndarray]]] = [[] for _ in range(m)]
        for qi in group:
            q = qi + 1
            cnt = n - q
            defeated = np.zeros(cnt, dtype=bool)
            for r in range(m):
                c1s, c1e, c2s, c2e = _axis_components(P[0:cnt, r], P[q:n, r], shrink)
                cov = coverages[r]
                defeated |= cov.query(c1s, c1e)
                defeated |= cov.query(c2s, c2e)
                pending[r].append((np.concatenate([c1s, c2s]),
                                   np.concatenate([c1e, c2e])))
            ln = float(lengths[qi])
            for idx in np.flatnonzero(~defeated):
                alive.append((gid, ln, int(idx) + 1, int(idx) + 1 + q))
        for r in range(m):
            s = np.concatenate([p[0] for p in pending[r]])
            e = np.concatenate([p[1] for p in pending[r]])
            coverages[r].insert_many(s, e)
    return _assemble_report(alive, n * (n - 1) // 2, "sweep", False)


def _brute_float(alphas: list[float], n: int, epsilon: float) -> SurvivorReport:
    P, lengths = _float_instance(alphas, n)
    m = P.shape[1]
    shrink = epsilon / 2
    gids_q, groups = _q_groups(lengths, epsilon)
    # Flatten edges ordered by (group, q, j) so each edge's potential
    # defeaters form a prefix of the arrays.
    comp_s = [[] for _ in range(m)]
    comp_e = [[] for _ in range(m)]
    edge_meta: list[tuple[int, float, int, int]] = []
    group_start = []
    count = 0
    for gid, group in enumerate(groups):
        group_start.append(count)
        for qi in group:
            q = qi + 1
            cnt = n - q
            for r in range(m):
                c1s, c1e, c2s, c2e = _axis_components(P[0:cnt, r], P[q:n, r], shrink)
                comp_s[r].append(np.stack([c1s, c2s]))
                comp_e[r].append(np.stack([c1e, c2e]))
            ln = float(lengths[qi])
            edge_meta.extend((gid, ln, idx + 1, idx + 1 + q) for idx in range(cnt))
            count += cnt
    S = [np.concatenate(comp_s[r], axis=1) for r in range(m)]  # (2, E)
    E = [np.concatenate(comp_e[r], axis=1) for r in range(m)]
    alive = []
    for pos, (gid, ln, j, k) in enumerate(edge_meta):
        prefix = group_start[gid]
        defeated = False
        if prefix:
            for r in range(m):
                os, oe = S[r][:, :prefix], E[r][:, :prefix]
                for ci in range(2):
                    a = S[r][ci, pos]
                    b = E[r][ci, pos]
                    if a >= b:
                        continue
                    if (np.maximum(a, os) < np.minimum(b, oe)).any():
                        defeated = True
                        break
                if defeated:
                    break
        if not defeated:
            alive.append((gid, ln, j, k))
    return _assemble_report(alive, len(edge_meta), "brute", False)


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------

def survivors_sweep(alphas, n: int, *, epsilon: float = 1e-9) -> SurvivorReport:
    """Undefeated-edge length set via the grouped coverage sweep."""
    comps, exact = coerce_components(alphas)
    if n < 2:
        raise ValueError("n must be >= 2")
    if exact:
        return sweep_over_edges(build_edges(comps, n), epsilon=epsilon)
    return _sweep_float(comps, n, epsilon)


def survivors_brute(alphas, n: int, *, epsilon: float = 1e-9,
                    oracle_cap: int = 80) -> SurvivorReport:
    """Undefeated-edge length set via the pairwise defeat relation.

    Quadratic in the edge count, so n is capped (default 80); raise the cap
    explicitly when you really want a bigger oracle run."""
    comps, exact = coerce_components(alphas)
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > oracle_cap:
        raise ValueError(f"n={n} exceeds the oracle cap {oracle_cap}")
    if exact:
        return brute_over_edges(build_edges(comps, n), epsilon=epsilon)
    return _brute_float(comps, n, epsilon)

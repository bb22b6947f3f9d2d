import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from torusgaps.coverage import ArcCoverage

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def naive_overlaps(intervals, s, e):
    return any(max(s, a) < min(e, b) for a, b in intervals)


def test_insert_merges_touching_and_overlapping():
    cov = ArcCoverage()
    cov.insert(0.1, 0.3)
    cov.insert(0.3, 0.5)
    assert cov.intervals() == [(0.1, 0.5)]
    cov.insert(0.05, 0.2)
    assert cov.intervals() == [(0.05, 0.5)]
    cov.insert(0.7, 0.8)
    assert len(cov) == 2
    cov.insert(0.4, 0.75)
    assert cov.intervals() == [(0.05, 0.8)]


def test_empty_inserts_and_queries_are_ignored():
    cov = ArcCoverage()
    cov.insert(0.5, 0.5)
    assert len(cov) == 0
    assert not cov.overlaps(0.2, 0.2)
    cov.insert(0.2, 0.4)
    assert not cov.overlaps(0.3, 0.3)


def test_half_open_touch_is_not_overlap():
    cov = ArcCoverage()
    cov.insert(0.2, 0.4)
    assert not cov.overlaps(0.4, 0.6)
    assert not cov.overlaps(0.0, 0.2)
    assert cov.overlaps(0.39, 0.41)
    assert cov.overlaps(0.0, 0.21)


def test_works_with_fraction_endpoints():
    cov = ArcCoverage()
    cov.insert(Fraction(1, 3), Fraction(1, 2))
    assert cov.overlaps(Fraction(5, 12), Fraction(7, 12))
    assert not cov.overlaps(Fraction(1, 2), Fraction(2, 3))
    cov.insert(Fraction(1, 2), Fraction(2, 3))
    assert cov.intervals() == [(Fraction(1, 3), Fraction(2, 3))]


def test_randomized_against_naive_oracle():
    rng = random.Random(4821)
    cov = ArcCoverage()
    kept = []
    for _ in range(600):
        s = round(rng.uniform(0, 0.95), 3)
        e = round(s + rng.uniform(0, 0.3), 3)
        q1, q2 = sorted((rng.uniform(0, 1), rng.uniform(0, 1)))
        assert cov.overlaps(q1, q2) == naive_overlaps(kept, q1, q2)
        cov.insert(s, e)
        if s < e:
            kept.append((s, e))
        starts = [a for a, _ in cov.intervals()]
        ends = [b for _, b in cov.intervals()]
        assert starts == sorted(starts)
        assert all(a < b for a, b in cov.intervals())
        # disjoint with real gaps (touching neighbours were merged)
        assert all(ends[i] < starts[i + 1] for i in range(len(starts) - 1))


@given(st.lists(st.tuples(unit, unit), max_size=30))
def test_total_measure_matches_sorted_union(pairs):
    cov = ArcCoverage()
    norm = [(min(a, b), max(a, b)) for a, b in pairs if a != b]
    for s, e in norm:
        cov.insert(s, e)
    merged = []
    for s, e in sorted(norm):
        if merged and s <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], e))
        else:
            merged.append((s, e))
    expected = sum(e - s for s, e in merged)
    assert abs(cov.total_measure() - expected) < 1e-12

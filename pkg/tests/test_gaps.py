import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusgaps.gaps import chung_graham_gaps, gap_spectrum, geelen_simpson_gaps


def brute_circular_gaps(points):
    """Independent oracle: sorted circular neighbour differences."""
    pts = sorted(points)
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    gaps.append(1 - pts[-1] + pts[0])
    return pts, gaps


def test_gap_spectrum_basic_example():
    spec = gap_spectrum(0.3, 3)
    assert spec.points == pytest.approx([0.3, 0.6, 0.9])
    assert spec.gaps == pytest.approx([0.3, 0.3, 0.3, 0.1])
    assert sorted(spec.distinct_gaps) == pytest.approx([0.1, 0.3])


def test_gap_spectrum_exact_third():
    spec = gap_spectrum(Fraction(1, 3), 2)
    assert spec.exact
    assert spec.gaps == [Fraction(1, 3)] * 3
    assert spec.distinct_gaps == [Fraction(1, 3)]
    assert spec.gap_sum() == 1


def test_gap_spectrum_single_point():
    spec = gap_spectrum(0.73, 1)
    assert spec.gaps == pytest.approx([0.73, 0.27])


def test_gap_spectrum_labels_are_the_sorting_permutation():
    spec = gap_spectrum(0.618, 5)
    expect = sorted(range(1, 6), key=lambda k: (k * 0.618) % 1.0)
    assert spec.labels == expect


def test_gap_spectrum_circular_flag():
    spec = gap_spectrum(0.3, 3, circular=True)
    _, gaps = brute_circular_gaps([(k * 0.3) % 1 for k in (1, 2, 3)])
    assert spec.gaps == pytest.approx(gaps)
    assert len(spec.gaps) == 3


def test_gap_spectrum_rational_coincident_points():
    # n exceeding the denominator repeats circle points; zero gaps are
    # recorded but never show up among the distinct values.
    spec = gap_spectrum(Fraction(1, 3), 5)
    assert spec.gap_sum() == 1
    assert 0 in spec.gaps
    assert spec.distinct_gaps == [Fraction(1, 3)]


def test_gap_spectrum_validation():
    with pytest.raises(ValueError):
        gap_spectrum(0.3, 0)
    with pytest.raises(ValueError):
        gap_spectrum(math.inf, 3)


def test_chung_graham_single_copy_reduces_to_gap_spectrum():
    merged = chung_graham_gaps(0.3, [0.0], [3], circular=False)
    plain = gap_spectrum(0.3, 3, circular=False)
    assert merged.points == pytest.approx(plain.points)
    assert merged.gaps == pytest.approx(plain.gaps)


def test_chung_graham_two_shifted_copies():
    spec = chung_graham_gaps(0.3, [0.0, 0.05], [3, 3])
    assert len(spec.points) == 6
    assert spec.distinct_count <= 6  # 3d with d = 2
    linear = chung_graham_gaps(0.3, [0.0, 0.05], [3, 3], circular=False)
    assert len(linear.gaps) == 7
    pts, gaps = brute_circular_gaps(
        [(k * 0.3 + lam) % 1 for lam in (0.0, 0.05) for k in (1, 2, 3)])
    assert spec.points == pytest.approx(pts)
    assert spec.gaps == pytest.approx(gaps)


def test_chung_graham_quarter_lattice():
    spec = chung_graham_gaps(0.5, [0.0, 0.25], [2, 2])
    assert sorted(spec.points) == pytest.approx([0.0, 0.25, 0.5, 0.75])
    assert spec.distinct_gaps == pytest.approx([0.25])


def test_chung_graham_validation():
    with pytest.raises(ValueError):
        chung_graham_gaps(0.3, [], [])
    with pytest.raises(ValueError):
        chung_graham_gaps(0.3, [0.1], [2, 3])
    with pytest.raises(ValueError):
        chung_graham_gaps(0.3, [0.1], [0])


def test_geelen_simpson_k1_free_reduction():
    spec = geelen_simpson_gaps(0.77, 0.3, 1, 3)
    pts, gaps = brute_circular_gaps([0.0, 0.3, 0.6])
    assert spec.points == pytest.approx(pts)
    assert spec.gaps == pytest.approx(gaps)


def test_geelen_simpson_small_instance_bound():
    spec = geelen_simpson_gaps(0.31, 0.47, 3, 4)
    pts, gaps = brute_circular_gaps(
        [(0.31 * k1 + 0.47 * k2) % 1 for k1 in range(3) for k2 in range(4)])
    assert spec.points == pytest.approx(pts)
    assert spec.gaps == pytest.approx(gaps)
    assert spec.distinct_count <= 3 + 3


def test_geelen_simpson_quarter_lattice():
    spec = geelen_simpson_gaps(0.5, 0.25, 2, 2)
    assert sorted(spec.points) == pytest.approx([0.0, 0.25, 0.5, 0.75])
    assert spec.distinct_gaps == pytest.approx([0.25])


def test_geelen_simpson_exact_mode():
    spec = geelen_simpson_gaps(Fraction(1, 5), Fraction(1, 7), 3, 3)
    assert spec.exact
    assert spec.gap_sum() == 1


@settings(max_examples=60)
@given(st.fractions(min_value=0, max_value=1, max_denominator=60),
       st.integers(min_value=1, max_value=40))
def test_gap_sum_is_exactly_one_in_exact_mode(alpha, n):
    for circular in (False, True):
        assert gap_spectrum(alpha, n, circular=circular).gap_sum() == 1


def test_three_gap_bound_random_smoke():
    rng = np.random.default_rng(1234)
    for _ in range(300):
        alpha = float(rng.random())
        n = int(rng.integers(1, 200))
        spec = gap_spectrum(alpha, n)
        assert spec.distinct_count <= 3
        assert sum(spec.gaps) == pytest.approx(1.0, abs=1e-12)
        assert sorted(spec.labels) == list(range(1, n + 1))

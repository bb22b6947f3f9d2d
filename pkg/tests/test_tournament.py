import math
import random
from fractions import Fraction

import numpy as np
import pytest

from torusgaps.circle import Arc, ArcKind, circle_norm
from torusgaps.tournament import (
    Edge,
    brute_over_edges,
    build_edges,
    survivor_bound,
    survivor_bound_alt,
    survivors_brute,
    survivors_sweep,
    sweep_over_edges,
)

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def test_survivor_bound_constants():
    assert survivor_bound(1) == 3
    assert survivor_bound(2) == 11
    assert survivor_bound(3) == 290
    assert survivor_bound(4) == 16 * (81 + 16 + 1) + 2
    with pytest.raises(ValueError):
        survivor_bound(0)


def test_survivor_bound_alt_variant():
    assert survivor_bound_alt(3) == 138
    with pytest.raises(ValueError):
        survivor_bound_alt(0)


def test_build_edges_single_pair():
    edges = build_edges([0.3, 0.4], 2)
    assert len(edges) == 1
    e = edges[0]
    assert (e.j, e.k, e.q) == (1, 2, 1)
    assert e.length == pytest.approx(0.5)
    assert len(e.arcs) == 2


def test_build_edges_zero_length_edge():
    edges = build_edges([0.5], 3)
    by_pair = {(e.j, e.k): e for e in edges}
    assert by_pair[(1, 2)].length == pytest.approx(0.5)
    assert by_pair[(2, 3)].length == pytest.approx(0.5)
    assert by_pair[(1, 3)].length == pytest.approx(0.0)
    assert by_pair[(1, 3)].arcs[0].kind is ArcKind.EMPTY


def test_build_edges_lengths_by_difference():
    edges = build_edges([0.3], 4)
    assert len(edges) == 6
    expect = {1: 0.3, 2: 0.4, 3: 0.1}
    for e in edges:
        assert e.length == pytest.approx(expect[e.q])
        # length is a function of q alone
        assert e.length == pytest.approx(circle_norm(e.q * 0.3), abs=1e-12)


def test_build_edges_validation():
    with pytest.raises(ValueError):
        build_edges([0.3], 1)
    with pytest.raises(ValueError):
        build_edges([], 5)


def test_three_point_instance_keeps_wrapping_long_edge():
    # Points 0.3, 0.6, 0.9: the q=2 edge joins 0.3 and 0.9 through 0, so its
    # arc only touches the two shorter arcs at closed endpoints and survives.
    for report in (survivors_brute([0.3], 3), survivors_sweep([0.3], 3)):
        assert report.survivors == [(1, 2), (1, 3), (2, 3)]
        assert report.distinct_lengths == pytest.approx([0.3, 0.4])


def test_single_edge_always_survives():
    report = survivors_sweep([0.123, 0.456, 0.789], 2)
    assert report.distinct_count == 1
    assert report.witnesses[0][1] == (1, 2)
    report2 = survivors_sweep([0.3, 0.4], 2)
    assert report2.distinct_lengths == pytest.approx([0.5])


def test_golden_ratio_five_points():
    report = survivors_brute([GOLDEN], 5)
    assert report.distinct_count <= 3
    expect = sorted(circle_norm(q * GOLDEN) for q in (2, 3))
    assert report.distinct_lengths == pytest.approx(expect)
    assert survivors_sweep([GOLDEN], 5).survivors == report.survivors


def test_zero_length_edges_survive_and_defeat_nothing():
    report = survivors_sweep([0.5, 0.5], 4)
    assert 0.0 in report.distinct_lengths
    brute = survivors_brute([0.5, 0.5], 4)
    assert brute.survivors == report.survivors


def test_oracle_cap_enforced():
    with pytest.raises(ValueError):
        survivors_brute([0.3], 81)
    survivors_brute([0.3], 81, oracle_cap=100)  # explicit override works


def test_report_metadata():
    r = survivors_sweep([0.31, 0.47], 10)
    assert r.mode == "sweep"
    assert r.survivor_count + r.defeated_count == 45
    assert r.survivor_count == len(r.survivors)
    assert r.distinct_lengths == sorted(r.distinct_lengths)
    for ln, edge in r.witnesses:
        assert edge in r.survivors
    assert survivors_brute([0.31, 0.47], 10).mode == "brute"


def test_survivor_lengths_come_from_difference_lengths():
    alphas = [0.357, 0.781]
    n = 40
    r = survivors_sweep(alphas, n)
    table = {q: math.hypot(circle_norm(q * alphas[0]), circle_norm(q * alphas[1]))
             for q in range(1, n)}
    for (j, k), ln in zip(r.survivors, r.survivor_lengths):
        assert ln == pytest.approx(table[k - j], abs=1e-12)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sweep_matches_brute_on_random_instances(m):
    rng = np.random.default_rng(100 + m)
    for _ in range(25):
        n = int(rng.integers(2, 35))
        alphas = rng.random(m).tolist()
        swept = survivors_sweep(alphas, n)
        brute = survivors_brute(alphas, n)
        assert swept.survivors == brute.survivors
        assert swept.distinct_lengths == pytest.approx(brute.distinct_lengths)


def test_bound_holds_on_random_instances():
    rng = np.random.default_rng(77)
    for m in (1, 2, 3):
        for _ in range(20):
            n = int(rng.integers(2, 60))
            r = survivors_sweep(rng.random(m).tolist(), n)
            assert r.distinct_count <= survivor_bound(m)


def test_pure_python_engines_match_vectorized_paths():
    rng = np.random.default_rng(9)
    for m in (1, 2):
        for _ in range(10):
            n = int(rng.integers(2, 25))
            alphas = rng.random(m).tolist()
            edges = build_edges(alphas, n)
            assert (sweep_over_edges(edges).survivors
                    == survivors_sweep(alphas, n).survivors)
            assert (brute_over_edges(edges).survivors
                    == survivors_brute(alphas, n).survivors)


def test_exact_mode_agrees_with_brute_and_float():
    alphas = [Fraction(5, 17), Fraction(3, 11)]
    n = 20
    exact_sweep = survivors_sweep(alphas, n)
    assert exact_sweep.exact
    exact_brute = survivors_brute(alphas, n)
    assert exact_sweep.survivors == exact_brute.survivors
    floating = survivors_sweep([float(a) for a in alphas], n)
    assert not floating.exact
    assert exact_sweep.survivors == floating.survivors


def test_edge_order_does_not_change_the_outcome():
    edges = build_edges([0.31, 0.47], 12)
    base = sweep_over_edges(edges)
    shuffled = edges[:]
    random.Random(5).shuffle(shuffled)
    assert sweep_over_edges(shuffled).survivors == base.survivors
    assert brute_over_edges(shuffled).survivors == base.survivors


def test_added_shorter_overlapping_edge_defeats_a_survivor():
    edges = build_edges([0.3], 4)
    base = sweep_over_edges(edges)
    target = base.witnesses[-1][1]  # a surviving edge with the largest length
    victim = next(e for e in edges if (e.j, e.k) == target)
    s, t = victim.arcs[0].parts()[0]
    mid = (s + t) / 2
    intruder = Edge(j=90, k=91, q=1, length=victim.length / 4,
                    sqlen=(victim.length / 4) ** 2,
                    arcs=(Arc.plain(mid, min(t, mid + (t - s) / 4)),))
    judged = sweep_over_edges(edges + [intruder])
    assert target not in judged.survivors
    assert (90, 91) in judged.survivors
    assert brute_over_edges(edges + [intruder]).survivors == judged.survivors


def test_equal_length_edges_do_not_defeat_each_other():
    # Two edges of identical length whose arcs overlap must both survive.
    e1 = Edge(1, 2, 1, 0.2, 0.04, (Arc.plain(0.1, 0.3),))
    e2 = Edge(2, 3, 1, 0.2, 0.04, (Arc.plain(0.2, 0.4),))
    for engine in (sweep_over_edges, brute_over_edges):
        assert engine([e1, e2]).survivor_count == 2


def test_defeat_requires_only_one_overlapping_axis():
    short = Edge(1, 2, 1, 0.1, 0.01,
                 (Arc.plain(0.1, 0.2), Arc.plain(0.5, 0.6)))
    tall = Edge(2, 3, 1, 0.5, 0.25,
                (Arc.plain(0.15, 0.4), Arc.plain(0.8, 0.9)))
    for engine in (sweep_over_edges, brute_over_edges):
        report = engine([short, tall])
        assert report.survivors == [(1, 2)]


def test_validation_of_engine_inputs():
    with pytest.raises(ValueError):
        sweep_over_edges([])
    with pytest.raises(ValueError):
        survivors_sweep([0.4], 1)


def test_exact_mode_randomized_equivalence():
    rng = random.Random(314)
    for _ in range(15):
        m = rng.randint(1, 2)
        n = rng.randint(2, 22)
        alphas = [Fraction(rng.randint(1, 29), rng.randint(2, 30)) for _ in range(m)]
        swept = survivors_sweep(alphas, n)
        brute = survivors_brute(alphas, n)
        assert swept.exact and brute.exact
        assert swept.survivors == brute.survivors
        assert swept.distinct_lengths == brute.distinct_lengths


@pytest.mark.parametrize("alpha", [0.98, 0.51, 0.02, 0.499999, 0.957113])
def test_wrap_heavy_instances_agree(alpha):
    # generators near 0, 1/2 and 1 produce many wrapped geodesics
    for n in (5, 12, 23):
        swept = survivors_sweep([alpha], n)
        brute = survivors_brute([alpha], n)
        assert swept.survivors == brute.survivors
        assert swept.distinct_count <= 3


def test_zero_epsilon_is_allowed():
    swept = survivors_sweep([0.31, 0.47], 15, epsilon=0.0)
    brute = survivors_brute([0.31, 0.47], 15, epsilon=0.0)
    assert swept.survivors == brute.survivors

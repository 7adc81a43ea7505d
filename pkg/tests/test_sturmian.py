import math
from fractions import Fraction

import pytest

from conftest import random_pair
from smplab.constructions import realize_from_tuple
from smplab.linalg import FiveTuple, Mat2, MatrixPair, spectral_radius, word_product
from smplab.regions import classify
from smplab.sturmian import (
    copar_gap,
    lyapunov_irrational,
    lyapunov_rational,
    maximize_sturmian,
    midpoint_concavity_audit,
)
from smplab.words import christoffel, mechanical_prefix, words_with_counts

COPAR = realize_from_tuple(FiveTuple(3, 3, 8, 1, 1))


def test_lyapunov_endpoints():
    assert lyapunov_rational(COPAR, 0, 1).value == \
        pytest.approx(math.log(spectral_radius(COPAR.A)), rel=1e-12)
    assert lyapunov_rational(COPAR, 1, 1).value == \
        pytest.approx(math.log(spectral_radius(COPAR.B)), rel=1e-12)


def test_lyapunov_half():
    expect = 0.5 * math.log((8 + math.sqrt(60)) / 2)
    assert lyapunov_rational(COPAR, 1, 2).value == pytest.approx(expect, rel=1e-12)


def test_lyapunov_periodic_square_consistency(rng):
    for _ in range(10):
        p = random_pair(rng)
        for num, den in ((1, 2), (2, 5), (3, 7)):
            w = christoffel(num, den)
            base = lyapunov_rational(p, num, den).value
            rho2 = spectral_radius(word_product(p, w * 2))
            if rho2 == 0.0:
                continue
            assert base == pytest.approx(math.log(rho2) / (2 * den), rel=1e-9, abs=1e-9)


def test_lyapunov_nilpotent_flag():
    p = MatrixPair(Mat2(0, 1, 0, 0), Mat2(1, 0, 0, 1))
    sample = lyapunov_rational(p, 0, 1)
    assert sample.nilpotent and sample.value == -math.inf


def test_lyapunov_long_cycle_no_overflow():
    # spectral radii ~2.6 would overflow doubles around length 700 unscaled
    val = lyapunov_rational(COPAR, 1, 2000).value
    assert math.isfinite(val)
    assert val == pytest.approx(math.log(spectral_radius(COPAR.A)), abs=0.05)


def test_irrational_rational_input_matches():
    est = lyapunov_irrational(COPAR, 0.5, 8)
    assert est.value == lyapunov_rational(COPAR, 1, 2).value
    assert est.error == 0.0


def test_irrational_golden_convergents_consistent():
    gamma = (math.sqrt(5) - 1) / 2
    d8 = lyapunov_irrational(COPAR, gamma, 8)
    d9 = lyapunov_irrational(COPAR, gamma, 9)
    assert abs(d9.value - d8.value) <= max(d8.error, d9.error) + 1e-12


def test_irrational_small_slope_approaches_endpoint():
    target = math.log(spectral_radius(COPAR.A))
    est = lyapunov_irrational(COPAR, 1e-3, 6)
    assert est.value == pytest.approx(target, abs=0.05)


def test_maximize_sturmian_symmetric_tuple():
    rep = maximize_sturmian(COPAR, Fraction(1, 64))
    assert rep.argmax_gamma == Fraction(1, 2)
    assert rep.max_value == pytest.approx(lyapunov_rational(COPAR, 1, 2).value)
    assert rep.midpoint_violations == []


def test_maximize_sturmian_rejects_non_copar():
    a = Mat2(1, 2, 3, 4)
    with pytest.raises(ValueError):
        maximize_sturmian(MatrixPair(a, a * 2.0), Fraction(1, 16))
    with pytest.raises(ValueError):
        maximize_sturmian(realize_from_tuple(FiveTuple(3, 3, 4, 1, 1)),
                          Fraction(1, 16))


def test_maximize_sturmian_asymmetric_interior():
    # z just above the co-parallel window for (x, y, u, v) = (3, 4, 1, 1)
    t = FiveTuple(3, 4, 10.0, 1, 1)
    p = realize_from_tuple(t)
    assert classify(p).in_copar is True
    rep = maximize_sturmian(p, Fraction(1, 256))
    assert Fraction(0) < rep.argmax_gamma < Fraction(1)
    assert rep.midpoint_violations == []


def _random_copar_pairs(rng, count):
    out = []
    while len(out) < count:
        p = random_pair(rng)
        if classify(p).in_copar is True:
            out.append(p)
    return out


def test_midpoint_concavity_on_random_copar_pairs(rng):
    for p in _random_copar_pairs(rng, 3):
        assert midpoint_concavity_audit(p, 12) == []


def test_class_optimality_on_random_copar_pairs(rng):
    for p in _random_copar_pairs(rng, 2):
        for total in range(2, 11):
            for ones in range(1, total):
                ref = mechanical_prefix(Fraction(ones, total), 0, "lower", total)
                rotations = {ref[i:] + ref[:i] for i in range(total)}
                best_w = max(words_with_counts(total - ones, ones),
                             key=lambda w: spectral_radius(word_product(p, w)))
                assert best_w in rotations, (total, ones, best_w)


def test_maximize_matches_farey_scan(rng):
    for p in _random_copar_pairs(rng, 2):
        rep = maximize_sturmian(p, Fraction(1, 128))
        grid = {}
        for q in range(1, 21):
            for a in range(q + 1):
                g = Fraction(a, q)
                if g not in grid:
                    grid[g] = lyapunov_rational(p, g.numerator, g.denominator).value
        best_grid = max(grid, key=grid.get)
        assert abs(best_grid - rep.argmax_gamma) <= Fraction(1, 128) + Fraction(1, 20)


def test_copar_gap_examples():
    assert copar_gap(COPAR) == pytest.approx(1.018881, abs=1e-6)
    near = realize_from_tuple(FiveTuple(3, 3, 7.1, 1, 1))
    gap = copar_gap(near)
    assert 0 < gap < 0.2
    with pytest.raises(ValueError):
        copar_gap(realize_from_tuple(FiveTuple(3, 3, 4, 1, 1)))


def test_maximize_sturmian_endpoint_leaning():
    # rho(A) dominates: the maximizer sits at (or within resolution of)
    # the gamma = 0 endpoint, and the descent must still terminate
    t = FiveTuple(8, 2.2, 13.0, 1, 1)
    p = realize_from_tuple(t)
    assert classify(p).in_copar is True
    rep = maximize_sturmian(p, Fraction(1, 128))
    grid = {}
    for q in range(1, 21):
        for a in range(q + 1):
            g = Fraction(a, q)
            if g not in grid:
                grid[g] = lyapunov_rational(p, g.numerator, g.denominator).value
    best = max(grid, key=grid.get)
    assert abs(rep.argmax_gamma - best) <= Fraction(1, 128) + Fraction(1, 20)

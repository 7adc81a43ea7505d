import math

import pytest

from conftest import random_pair
from smplab.constructions import (
    counterexample_family,
    polygon_operator_norm,
    realize_from_tuple,
)
from smplab.jsr import brute_force, certify, gelfand_scan
from smplab.linalg import FiveTuple, Mat2, MatrixPair, spectral_radius, word_product

DIAG_ONES = MatrixPair(Mat2(2, 0, 0, 0.5), Mat2(1, 1, 1, 1))


def test_brute_force_pinch():
    br = brute_force(DIAG_ONES, 8)
    assert br.lower == pytest.approx(2.0, abs=1e-12)
    assert br.upper == pytest.approx(2.0, abs=1e-12)
    assert br.best_word == "0"  # tie with "1" broken lexicographically
    assert br.ties == ["0", "1"]


def test_brute_force_copar_tuple():
    p = realize_from_tuple(FiveTuple(3, 3, 8, 1, 1))
    br = brute_force(p, 12)
    assert br.best_word == "01"
    assert br.lower == pytest.approx(math.sqrt((8 + math.sqrt(60)) / 2), rel=1e-12)
    assert br.lower == pytest.approx(2.805884, abs=1e-6)


def test_brute_force_length_one():
    for pair in (DIAG_ONES, MatrixPair(Mat2(1, 2, 3, 4), Mat2(0, 1, -1, 0))):
        br = brute_force(pair, 1)
        expect = max(spectral_radius(pair.A), spectral_radius(pair.B))
        assert br.lower == pytest.approx(expect, rel=1e-12)


def test_brute_force_cost_guard():
    with pytest.raises(ValueError):
        brute_force(DIAG_ONES, 25)
    with pytest.raises(ValueError):
        brute_force(DIAG_ONES, 0)


def test_brute_force_rho_words_attain_reported_values(rng):
    for _ in range(20):
        p = random_pair(rng)
        br = brute_force(p, 8)
        for k, st in br.per_length.items():
            rho = spectral_radius(word_product(p, st.rho_word))
            assert rho ** (1.0 / k) == pytest.approx(st.rho_root, rel=1e-9)
        assert br.second_value <= br.lower * (1 + 1e-12)


def test_brute_force_sandwich(rng):
    for _ in range(30):
        p = random_pair(rng)
        br = brute_force(p, 10)
        assert br.lower <= br.upper + 1e-12
        for k in range(1, 6):
            assert br.per_length[2 * k].norm_root <= \
                br.per_length[k].norm_root + 1e-12


def test_brute_force_custom_polygon_norm_pinches_family():
    fam = counterexample_family(2)

    def gauge_norm(m):
        return polygon_operator_norm(fam.polygon, m)

    br = brute_force(fam.pair, 8, norm=gauge_norm)
    assert br.upper == pytest.approx(1.0, abs=1e-12)
    assert br.lower == pytest.approx(1.0, abs=1e-10)
    assert br.best_word == "001"


def test_gelfand_nilpotent_power():
    p = MatrixPair(Mat2(0, 1, 0, 0), Mat2(1, 2, 3, 4))
    scan = gelfand_scan(p)
    assert scan.scanned <= 2
    assert scan.terminated
    assert scan.n_star in (0, 1)


def test_gelfand_diag_ones_value():
    scan = gelfand_scan(DIAG_ONES)
    assert scan.value == pytest.approx(2.0, rel=1e-12)
    # closed form rho(A^n B) = 2^n + 2^-n stays below 2^(n+1)
    for n in range(1, 7):
        prod = word_product(DIAG_ONES, "0" * n + "1")
        assert spectral_radius(prod) == pytest.approx(2 ** n + 2.0 ** -n, rel=1e-12)


def test_gelfand_example_family():
    fam = counterexample_family(1)
    scan = gelfand_scan(fam.pair)
    assert scan.n_star == 1
    assert scan.value == pytest.approx(1.0, abs=1e-12)
    assert scan.terminated
    assert scan.word == "01"


def test_gelfand_rejects_zero_matrices():
    zero = Mat2(0, 0, 0, 0)
    with pytest.raises(ValueError):
        gelfand_scan(MatrixPair(zero, Mat2.identity()))
    with pytest.raises(ValueError):
        gelfand_scan(MatrixPair(Mat2.identity(), zero))


def test_gelfand_direction_words():
    p = MatrixPair(Mat2(1, 1, 0, -1), Mat2(2, 0, 0, 0.5))  # det A < 0 < det B
    scan = gelfand_scan(p, "B_pow_A")
    if scan.n_star is not None:
        assert scan.word == "0" + "1" * scan.n_star


def test_certify_crossing_tie():
    cand = certify(DIAG_ONES)
    assert cand.certified
    assert cand.certificate == "crossing-single-letter"
    assert cand.word == "0"
    assert cand.ties == ["0", "1"]
    assert cand.value == pytest.approx(2.0, abs=1e-12)
    assert cand.jsr == cand.value


def test_certify_negative_but_crossing():
    p = MatrixPair(Mat2(1, 1, 1, -1), Mat2(1, -1, -1, -1))
    assert (p.A @ p.B - p.B @ p.A).det() == 16.0
    cand = certify(p)
    assert cand.certified
    assert cand.certificate == "crossing-single-letter"
    assert cand.value == pytest.approx(math.sqrt(2), rel=1e-12)


def test_certify_negative_region():
    # similar reflections tilted so the pair is anti-crossing: det(AB-BA) < 0
    p = MatrixPair(Mat2(2, 1, 1, -1), Mat2(2, 0.5, 2, -1))
    assert p.A.det() < 0 and p.B.det() < 0
    cand = certify(p)
    if cand.certified:
        br = brute_force(p, 12)
        assert br.lower <= cand.value * (1 + 1e-9)
        assert cand.value == pytest.approx(br.lower, rel=1e-9)


def test_certify_reducible():
    p = MatrixPair(Mat2(3, 0, 0, 1), Mat2(1, 0, 0, 2))
    cand = certify(p)
    assert cand.certified
    assert cand.certificate == "reducible-triangularizable"
    assert cand.value == 3.0


def test_certify_copar_candidate():
    p = realize_from_tuple(FiveTuple(3, 3, 8, 1, 1))
    cand = certify(p)
    assert not cand.certified
    assert cand.certificate == "co-parallel-sturmian-candidate"
    assert cand.word == "01"
    assert cand.lower == pytest.approx(cand.value, rel=1e-9)
    assert cand.lower <= cand.upper


def test_certify_mixed_rotation_degenerate_downgrades():
    # A is twice a quarter rotation: A^4 = 16 I, the power-scan theorem's
    # escape hatch, so no exact certificate may be claimed
    p = MatrixPair(Mat2(0, -2, 2, 0), Mat2(0.5, 0, 0, -0.5))
    cand = certify(p)
    assert not cand.certified
    assert cand.value == pytest.approx(2.0, rel=1e-12)
    assert cand.jsr is None


def test_scaled_reflection_pairs_are_crossing(rng):
    # the negative-determinant reflection escape cannot occur outside the
    # crossing region: exact scaled reflections always cross (or reduce)
    from smplab.regions import classify

    for _ in range(100):
        t1, t2 = rng.uniform(0, math.pi, 2)
        s1, s2 = rng.uniform(0.5, 2.0, 2)
        a = Mat2(s1 * math.cos(t1), s1 * math.sin(t1),
                 s1 * math.sin(t1), -s1 * math.cos(t1))
        b = Mat2(s2 * math.cos(t2), s2 * math.sin(t2),
                 s2 * math.sin(t2), -s2 * math.cos(t2))
        flags = classify(MatrixPair(a, b))
        assert flags.in_cross is True or flags.reducible is not False


def test_certify_soundness_against_brute_force(rng):
    for _ in range(40):
        p = random_pair(rng)
        cand = certify(p)
        if not cand.certified:
            continue
        br = brute_force(p, 10)
        assert br.lower <= cand.value * (1 + 1e-9)
        assert cand.value == pytest.approx(br.lower, rel=1e-9)


def _power_roots_beyond(p, start, count):
    """rho(A^n B)^(1/(n+1)) for n in (start, start+count], scaled safely."""
    import math as _math

    s = max(spectral_radius(p.A), 1.0)
    a = p.A * (1.0 / s)
    b = p.B * (1.0 / s)
    cur = Mat2.identity()
    log_cur = 0.0
    roots = []
    for n in range(start + count + 1):
        if n > start:
            r = spectral_radius(cur @ b)
            if r > 0:
                roots.append(_math.exp((_math.log(r) + log_cur) / (n + 1)) * s)
        cur = cur @ a
        m = cur.max_abs()
        if m == 0.0:
            break
        if m > 1e120 or m < 1e-120:
            cur = cur * (1.0 / m)
            log_cur += _math.log(m)
    return roots


def test_gelfand_tail_certificate_sound(rng):
    # independent oracle: after a terminated scan, no later power root
    # may exceed the reported supremum
    checked = 0
    while checked < 30:
        p = random_pair(rng)
        scan = gelfand_scan(p, "A_pow_B", cap=2000)
        if not scan.terminated:
            continue
        checked += 1
        for root in _power_roots_beyond(p, scan.scanned, 200):
            assert root <= scan.value * (1 + 1e-9)


def test_gelfand_near_defective_transient():
    # a huge transient in the powers must not fool the stopping rule
    p = MatrixPair(Mat2(1.0, 1000.0, 0.0, 0.999), Mat2(0.3, -0.2, 0.4, 0.1))
    scan = gelfand_scan(p, "A_pow_B", cap=5000)
    direct = max(_power_roots_beyond(p, 0, 3000) + [spectral_radius(p.A)])
    assert scan.value == pytest.approx(direct, rel=1e-10)
    if scan.terminated:
        for root in _power_roots_beyond(p, scan.scanned, 500):
            assert root <= scan.value * (1 + 1e-9)


def test_brute_force_deeper_scan_smoke():
    p = realize_from_tuple(FiveTuple(3, 3, 8, 1, 1))
    br = brute_force(p, 18)
    assert br.best_word == "01"
    assert br.lower <= br.upper + 1e-12
    assert br.upper < brute_force(p, 10).upper + 1e-12  # bounds tighten

import math

import pytest

from conftest import random_pair
from smplab.linalg import (
    FiveTuple,
    Mat2,
    MatrixPair,
    Reducibility,
    SpectrumKind,
    commutator_invariant,
    conjugated,
    five_tuple,
    is_reducible,
    operator_norm_2,
    realizable,
    scaled_word_product,
    spectral_radius,
    spectrum,
    word_product,
)

DIAG = Mat2(2, 0, 0, 0.5)
ONES = Mat2(1, 1, 1, 1)
PAIR = MatrixPair(DIAG, ONES)


def test_spectrum_diagonal():
    sp = spectrum(DIAG)
    assert sp.kind is SpectrumKind.REAL_DISTINCT
    assert sp.rho == 2.0
    assert sp.eigenvalues == (2.0, 0.5)


def test_spectrum_rotation():
    sp = spectrum(Mat2(0, -1, 1, 0))
    assert sp.kind is SpectrumKind.COMPLEX_CONJUGATE
    assert sp.rho == 1.0
    assert sp.eigenvalues is None


def test_spectrum_trace8_det1():
    m = Mat2(8, -1, 1, 0)  # trace 8, det 1
    sp = spectrum(m)
    assert sp.kind is SpectrumKind.REAL_DISTINCT
    assert sp.rho == pytest.approx((8 + math.sqrt(60)) / 2, rel=1e-14)
    assert sp.rho == pytest.approx(7.872983, abs=1e-6)


def test_spectrum_repeated_tolerance():
    sp = spectrum(Mat2(1, 1, 0, 1 + 1e-14))
    assert sp.kind is SpectrumKind.REAL_REPEATED


def test_operator_norm_examples():
    assert operator_norm_2(DIAG) == 2.0
    assert operator_norm_2(Mat2(0, -3, 0, 0)) == 3.0
    assert operator_norm_2(ONES) == pytest.approx(2.0, rel=1e-15)


def test_five_tuple_examples():
    assert five_tuple(PAIR) == pytest.approx((2.5, 2, 2.5, 1, 0))
    ident = Mat2.identity()
    assert five_tuple(MatrixPair(ident, ident)) == pytest.approx((2, 2, 2, 1, 1))
    uni = MatrixPair(Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1))
    assert five_tuple(uni) == pytest.approx((2, 2, 3, 1, 1))


def test_word_product_examples():
    assert word_product(PAIR, "0") == DIAG
    assert word_product(PAIR, "01") == Mat2(2, 2, 0.5, 0.5)
    assert word_product(PAIR, "0011") == DIAG @ DIAG @ ONES @ ONES
    with pytest.raises(ValueError):
        word_product(PAIR, "")


def test_scaled_word_product_matches_plain(rng):
    for _ in range(20):
        p = random_pair(rng)
        word = "".join(rng.choice(["0", "1"], size=6))
        plain = word_product(p, word)
        scaled, logscale = scaled_word_product(p, word)
        factor = math.exp(logscale)
        assert scaled.max_abs() * factor == pytest.approx(plain.max_abs(), rel=1e-12)


def test_commutator_examples():
    rep = commutator_invariant(PAIR)
    assert rep.value == pytest.approx(9 / 4, rel=1e-14)
    a = Mat2(1, 2, 3, 4)
    assert commutator_invariant(MatrixPair(a, a @ a)).value == pytest.approx(0, abs=1e-12)
    uni = MatrixPair(Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1))
    assert commutator_invariant(uni).value == pytest.approx(-1.0, rel=1e-14)


def test_commutator_expression_agreement(rng):
    for _ in range(2000):
        p = random_pair(rng)
        rep = commutator_invariant(p)
        x, y, z, u, v = five_tuple(p)
        scale = max(1.0, abs(4 * u * v), abs(u * y * y), abs(v * x * x),
                    abs(x * y * z), z * z)
        vals = [rep.expressions[k] for k in
                ("five_tuple_poly", "commutator_det", "disc_window", "power_traces")]
        if min(abs(u), abs(v)) > 1e-6:
            vals.append(rep.expressions["inverse_form"])
        assert max(vals) - min(vals) <= 1e-9 * scale


def test_reducibility_examples():
    d1 = MatrixPair(Mat2(1, 0, 0, 2), Mat2(3, 0, 0, 4))
    assert is_reducible(d1).verdict is Reducibility.REDUCIBLE
    rep = is_reducible(PAIR, 1e-9)
    assert rep.verdict is Reducibility.IRREDUCIBLE
    assert rep.margin == pytest.approx(9 / 64, rel=1e-12)
    ident = MatrixPair(Mat2.identity(), Mat2(4, -1, 3, 7))
    assert is_reducible(ident).verdict is Reducibility.REDUCIBLE


def test_reducibility_indeterminate():
    eps = 1e-12
    p = MatrixPair(Mat2(1, eps, 0, 1), Mat2(1, 0, 1, 1))
    rep = is_reducible(p, 1e-9)
    assert rep.verdict is Reducibility.INDETERMINATE
    assert rep.margin != 0.0


def test_realizable_examples():
    assert realizable(FiveTuple(3, 3, 8, 1, 1))
    assert not realizable(FiveTuple(0, 0, 0, 1, 1))
    assert realizable(FiveTuple(2, 2, 2, 1, 1))


def test_det_sum_identity(rng):
    for _ in range(2000):
        p = random_pair(rng)
        x, y, z, u, v = five_tuple(p)
        lhs = (p.A + p.B).det() + z
        rhs = u + v + x * y
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs), abs(z))


def test_rank_one_multiplicative_trace(rng):
    for _ in range(2000):
        e = rng.standard_normal(12)
        xm, ym = Mat2(*e[:4]), Mat2(*e[4:8])
        zm = Mat2(e[8] * e[10], e[8] * e[11], e[9] * e[10], e[9] * e[11])
        lhs = (xm @ zm @ ym @ zm).trace()
        rhs = (xm @ zm).trace() * (ym @ zm).trace()
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


def test_five_tuple_conjugation_invariant(rng):
    for _ in range(1000):
        p = random_pair(rng)
        g = Mat2(*rng.standard_normal(4))
        if abs(g.det()) < 0.1:
            continue
        t1 = five_tuple(p)
        t2 = five_tuple(conjugated(p, g))
        for a, b in zip(t1, t2):
            assert abs(a - b) <= 1e-8 * max(1.0, abs(a))


def test_rho_below_norm_and_symmetric_equality(rng):
    for _ in range(2000):
        m = Mat2(*rng.standard_normal(4))
        assert spectral_radius(m) <= operator_norm_2(m) * (1 + 1e-12)
    for _ in range(500):
        e = rng.standard_normal(3)
        sym = Mat2(e[0], e[1], e[1], e[2])
        assert spectral_radius(sym) == pytest.approx(operator_norm_2(sym), rel=1e-10)


def test_mat2_rejects_non_finite():
    with pytest.raises(ValueError):
        Mat2(1, 2, 3, math.inf)
    with pytest.raises(ValueError):
        Mat2(math.nan, 0, 0, 1)


def test_pair_json_round_trip():
    obj = PAIR.to_json_dict()
    assert obj == {"A": [[2, 0], [0, 0.5]], "B": [[1, 1], [1, 1]]}
    assert MatrixPair.from_json_dict(obj) == PAIR


def test_five_tuple_json_round_trip():
    t = five_tuple(PAIR)
    obj = t.to_json_dict()
    assert obj == {"x": 2.5, "y": 2.0, "z": 2.5, "u": 1.0, "v": 0.0}
    assert FiveTuple.from_json_dict(obj) == t


def test_extreme_scale_robustness():
    big = MatrixPair(Mat2(2e200, 0, 0, 0.5e200), Mat2(1e-180, 1e-180, 1e-180, 1e-180))
    assert spectral_radius(big.A) == pytest.approx(2e200, rel=1e-12)
    assert operator_norm_2(big.A) == pytest.approx(2e200, rel=1e-12)
    assert operator_norm_2(big.B) == pytest.approx(2e-180, rel=1e-12)
    sp = spectrum(big.A)
    assert sp.kind is SpectrumKind.REAL_DISTINCT
    assert sp.eigenvalues == pytest.approx((2e200, 0.5e200), rel=1e-12)
    assert is_reducible(big).verdict is Reducibility.IRREDUCIBLE

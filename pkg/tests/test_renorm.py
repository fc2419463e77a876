"""Renormalized series: zeta characters, bridge, Abel limits, constants."""

import math
import random

import mpmath
import pytest

from ncgen.ncpoly import is_grouplike, shuffle_words, stuffle_words
from ncgen.polylog import harmonic
from ncgen.renorm import (
    TruncatedNCSeries,
    abel_limits_check,
    bridge_check,
    bridge_series,
    chen_endpoint_sanity,
    const_log_identity,
    const_series,
    euler_maclaurin_constants,
    l_series,
    li_numeric,
    mono_series,
    n_side_limit_series,
    series_exp,
    z_shuffle_series,
    z_side_series,
    z_stuffle_series,
    zeta_numeric,
    zeta_shuffle_reg,
    zeta_stuffle_reg,
)
from ncgen.words import X, Y

ZETA2 = math.pi ** 2 / 6.0
ZETA3 = 1.2020569031595943
GAMMA = 0.5772156649015329


def test_series_product_and_inverse():
    s = TruncatedNCSeries(X, {(): 1.0, (0,): 0.5, (1,): -2.0, (0, 1): 3.0},
                          depth=4)
    inv = s.inverse()
    prod = s * inv
    assert abs(prod.coeff(()) - 1.0) < 1e-14
    for w in [(0,), (1,), (0, 1), (0, 0, 1), (1, 1, 0, 0)]:
        assert abs(prod.coeff(w)) < 1e-12, w


def test_series_exp_grouplike():
    prim = TruncatedNCSeries(X, {(0,): 0.3, (1,): -0.7}, depth=4)
    e = series_exp(prim)
    assert is_grouplike(e, "shuffle", 4, tol=1e-12)


def test_li_numeric_values():
    assert abs(li_numeric((0, 1), 0.5) - 0.5822405264650125) < 1e-12
    assert abs(li_numeric((2,), 0.5) - 0.5822405264650125) < 1e-12
    # near the endpoint, against an independent dilog
    want = float(mpmath.polylog(2, 0.999))
    assert abs(li_numeric((0, 1), 0.999) - want) < 1e-8
    assert abs(li_numeric((1,), 0.9) + math.log(0.1)) < 1e-10


def test_zeta_numeric_partial_sums():
    assert abs(zeta_numeric(2) - ZETA2) < 2e-4
    assert abs(zeta_numeric((2, 1)) - zeta_numeric(3)) < 5e-4


def test_zeta_shuffle_reg_values():
    assert zeta_shuffle_reg((0,)) == 0.0
    assert zeta_shuffle_reg((1,)) == 0.0
    assert abs(zeta_shuffle_reg((0, 1)) - zeta_numeric(2)) < 1e-12
    # x1 x0 x1 = S_{x1x0x1} - 2 S_{x0x1x1}: value -2 zeta(2,1)
    assert abs(zeta_shuffle_reg((1, 0, 1)) + 2 * zeta_numeric((2, 1))) < 1e-12
    assert abs(zeta_shuffle_reg((1, 0, 1)) + 2 * ZETA3) < 1e-3


def test_zeta_shuffle_reg_is_character():
    rng = random.Random(3)
    words = [(1,), (0, 1), (1, 1), (0, 1, 1), (1, 0, 1), (0, 0, 1)]
    for _ in range(12):
        u = rng.choice(words)
        v = rng.choice(words)
        lhs = zeta_shuffle_reg(u) * zeta_shuffle_reg(v)
        rhs = sum(c * zeta_shuffle_reg(w)
                  for w, c in shuffle_words(u, v).items())
        assert abs(lhs - rhs) < 1e-9, (u, v)


def test_zeta_stuffle_reg_values():
    assert zeta_stuffle_reg((1,)) == 0.0
    assert abs(zeta_stuffle_reg((2,)) - zeta_numeric(2)) < 1e-12
    assert abs(zeta_stuffle_reg((2, 1)) - zeta_numeric((2, 1))) < 1e-12
    want = -zeta_numeric((2, 1)) - zeta_numeric(3)
    assert abs(zeta_stuffle_reg((1, 2)) - want) < 1e-12
    assert abs(zeta_stuffle_reg((1, 2)) + 2 * ZETA3) < 1e-3


def test_zeta_stuffle_reg_is_character():
    rng = random.Random(5)
    words = [(1,), (2,), (1, 1), (2, 1), (1, 2), (3,)]
    for _ in range(12):
        u = rng.choice(words)
        v = rng.choice(words)
        lhs = zeta_stuffle_reg(u) * zeta_stuffle_reg(v)
        rhs = sum(c * zeta_stuffle_reg(w)
                  for w, c in stuffle_words(u, v).items())
        assert abs(lhs - rhs) < 1e-9, (u, v)


def test_z_shuffle_series():
    z = z_shuffle_series(4)
    assert z.coeff((0,)) == 0.0
    assert z.coeff((1,)) == 0.0
    assert abs(z.coeff((0, 1)) - ZETA2) < 1e-4
    assert abs(z.coeff((1, 0)) + ZETA2) < 1e-4
    # the ordered-exponential construction matches the character
    for w in [(0, 1), (1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 1), (0, 1, 0, 1)]:
        assert abs(z.coeff(w) - zeta_shuffle_reg(w)) < 1e-10, w
    assert is_grouplike(z, "shuffle", 4, tol=1e-3)


def test_z_stuffle_series():
    z = z_stuffle_series(4)
    assert z.coeff((1,)) == 0.0
    assert abs(z.coeff((2,)) - ZETA2) < 1e-4
    assert abs(z.coeff((2, 1)) - zeta_numeric((2, 1))) < 1e-10
    for w in [(2,), (3,), (1, 2), (2, 1), (2, 2), (1, 1)]:
        assert abs(z.coeff(w) - zeta_stuffle_reg(w)) < 1e-10, w
    assert is_grouplike(z, "stuffle", 4, tol=1e-3)


def test_bridge():
    report = bridge_check(4)
    assert report["pass"], report
    assert report["max_abs_err"] < 1e-2
    # weight-3 slot: the bridge transports zeta(2,1) onto zeta(3)
    lhs = z_stuffle_series(3)
    rhs = bridge_series(3)
    assert abs(lhs.coeff((3,)) - rhs.coeff((3,))) < 1e-3
    assert abs(lhs.coeff((2, 1)) - rhs.coeff((2, 1))) < 1e-3


def test_l_series_structure():
    lz = l_series(0.5, 3)
    assert abs(lz.coeff((1,)) + math.log(0.5)) < 1e-12
    assert abs(lz.coeff((0,)) - math.log(0.5)) < 1e-12
    assert abs(lz.coeff((0, 1)) - 0.5822405264650125) < 1e-10
    assert is_grouplike(lz, "shuffle", 3, tol=1e-10)


def test_abel_limits():
    report = abel_limits_check(3)
    assert report["pass"], report
    per = report["per_word"]
    # y1 and y1y1 cancel identically on both sides
    assert abs(per[(1,)]["n_side"]) < 1e-10
    assert abs(per[(1,)]["fitted"]) < 1e-9
    assert abs(per[(1, 1)]["n_side"]) < 1e-10
    assert abs(per[(1, 1)]["fitted"]) < 1e-8
    # the raw endpoint gap at eps = 1e-3 is NOT below 1e-3 (decays like
    # eps log eps); the fitted limit is what converges
    assert per[(2,)]["raw_gap"] > 1e-3
    assert per[(2,)]["fitted_gap"] < 1e-3
    assert per[(3,)]["fitted_gap"] < 1e-3


def test_n_side_matches_z_shuffle_image():
    n_side = n_side_limit_series(3)
    target = z_shuffle_series(3).pi_y()
    assert n_side.max_abs_diff(target) < 1e-3


def test_chen_endpoint_sanity():
    errs = chen_endpoint_sanity()
    assert len(errs) == 3
    mags = [abs(e) for _, e in errs]
    assert mags[0] > mags[1] > mags[2]
    assert mags[2] < 0.2


def test_euler_maclaurin_constants():
    out = euler_maclaurin_constants()
    assert abs(out["gamma"] - GAMMA) < 1e-9
    want = (GAMMA ** 2 - ZETA2) / 2.0
    assert abs(out["gamma_y1y1"] - want) < 1e-4
    assert abs(out["gamma_y1y1"] - out["gamma_y1y1_numeric"]) < 1e-2
    assert out["series"].coeff((1,)) == pytest.approx(GAMMA, abs=1e-9)


def test_const_series_and_log_identity():
    c = const_series(10, 6)
    assert c.coeff((1,) * 2) == harmonic((1, 1), 10)
    assert const_log_identity(10, 6)
    assert const_log_identity(25, 4)


def test_mono_series_is_ogf_of_const():
    z = 0.5
    m = mono_series(z, 3)
    assert abs(m.coeff(()) - 2.0) < 1e-14
    for k in range(0, 4):
        acc = 0.0
        for n in range(0, 400):
            acc += float(harmonic((1,) * k, n)) * z ** n
        assert abs(m.coeff((1,) * k) - acc) < 1e-10, k

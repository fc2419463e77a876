import math
import random
from fractions import Fraction

import pytest

from ncgen.ncpoly import is_grouplike, stuffle_words, words_up_to
from ncgen.polylog import (
    FElem, RatZ, harmonic, harmonic_array, harmonic_float, harmonic_series,
    polylog_eval,
)
from ncgen.words import Y


# -- harmonic sums -----------------------------------------------------

def test_harmonic_basics():
    assert harmonic((1,), 3) == Fraction(11, 6)
    assert harmonic((), 5) == 1
    assert harmonic((2, 1), 2) == Fraction(1, 4)
    assert harmonic((2, 1), 1) == 0  # needs two strictly decreasing indices
    assert harmonic((1, 1, 1), 2) == 0


def test_harmonic_brute_force():
    # against the literal nested sum
    def brute(w, N):
        if not w:
            return Fraction(1)
        return sum(Fraction(1, n ** w[0]) * brute(w[1:], n - 1)
                   for n in range(len(w), N + 1))
    for w in [(1,), (2,), (2, 1), (1, 2), (3, 1, 2)]:
        for N in (1, 2, 5, 9):
            assert harmonic(w, N) == brute(w, N), (w, N)


def test_harmonic_stuffle_morphism():
    rng = random.Random(2)
    pool = [w for w in words_up_to(Y, 6) if w]
    for _ in range(50):
        u, v = rng.choice(pool), rng.choice(pool)
        N = rng.choice([1, 10, 50])
        lhs = harmonic(u, N) * harmonic(v, N)
        rhs = sum(c * harmonic(w, N) for w, c in stuffle_words(u, v).items())
        assert lhs == rhs, (u, v, N)


def test_harmonic_float_matches_exact():
    for w in [(1,), (2, 1), (1, 1)]:
        exact = float(harmonic(w, 40))
        assert abs(harmonic_float(w, 40) - exact) < 1e-12


def test_harmonic_array_shape():
    arr = harmonic_array((2,), 10)
    assert arr[0] == 0.0
    assert abs(arr[10] - float(harmonic((2,), 10))) < 1e-14


# -- generating series -------------------------------------------------

def test_harmonic_series_coefficients():
    H = harmonic_series(10, 5)
    for w in words_up_to(Y, 5):
        assert H.coeff(w) == harmonic(w, 10), w


def test_harmonic_series_grouplike():
    H = harmonic_series(10, 5)
    assert is_grouplike(H, "stuffle", 5)


# -- Li evaluation -----------------------------------------------------

def test_polylog_eval_dilog():
    val, tail = polylog_eval((0, 1), 0.5, terms=60)
    direct = sum(0.5 ** k / k ** 2 for k in range(1, 200))
    assert abs(val - direct) < 1e-12
    assert abs(val - 0.5822405264650125) < 1e-10
    assert tail < 1e-10


def test_polylog_eval_log():
    val, _ = polylog_eval((1,), 0.5, terms=200)
    assert abs(val - (-math.log(0.5))) < 1e-12
    # y-word spelling of the same thing
    val2, _ = polylog_eval((1,), 0.5, terms=200)
    assert val == val2


def test_polylog_eval_rejects():
    with pytest.raises(ValueError):
        polylog_eval((0, 1), 1.0)
    with pytest.raises(ValueError):
        polylog_eval((1, 0), 0.5)  # ends in x0: not an index word


# -- RatZ coefficient ring ---------------------------------------------

def test_ratz_canonical():
    # z/(1-z) + 1 = 1/(1-z)
    lam = RatZ.lam()
    assert lam + RatZ.const(1) == RatZ.uinv_pow(1)
    # (1-z) * 1/(1-z) = 1
    u = RatZ([Fraction(1), Fraction(-1)])
    assert u * RatZ.uinv_pow(1) == RatZ.const(1)
    # z * 1/z = 1
    assert RatZ.z_pow(1) * RatZ.z_pow(-1) == RatZ.const(1)
    assert (lam - lam).is_zero()


def test_ratz_derivative():
    # d/dz 1/(1-z) = 1/(1-z)^2
    assert RatZ.uinv_pow(1).derivative() == RatZ.uinv_pow(2)
    # d/dz 1/z = -1/z^2
    assert RatZ.z_pow(-1).derivative() == RatZ([Fraction(-1)], a=2)
    # d/dz z^3 = 3z^2
    assert RatZ.z_pow(3).derivative() == RatZ([0, 0, Fraction(3)])


def test_ratz_eval():
    assert RatZ.lam().eval(Fraction(1, 3)) == Fraction(1, 2)
    assert RatZ.uinv_pow(2).eval(0.5) == 4.0


# -- operator algebra --------------------------------------------------

def test_theta_basic_rules():
    f = FElem.li((0, 1))
    assert f.theta0() == FElem.li((1,))
    assert f.theta1() == FElem.li((1,), RatZ([Fraction(1), Fraction(-1)], a=1))
    g = FElem.li((1, 1))
    # theta0 Li_{x1^2} = lambda Li_{x1}
    assert g.theta0() == FElem.li((1,), RatZ.lam())
    assert g.theta1() == FElem.li((1,))


def test_theta_iota_identities():
    # theta_k iota_k = Id on constant-coefficient combinations
    f = FElem.li((0, 1), Fraction(3, 2)) + FElem.li((1, 1), Fraction(-1, 3)) \
        + FElem.li((), Fraction(2))
    assert f.iota(0).theta0() == f
    assert f.iota(1).theta1() == f


def test_theta_iota_eigenvalues():
    # theta0 iota1 and theta1 iota0 act on basis elements with reciprocal
    # eigenvalues lambda = z/(1-z) and 1/lambda = (1-z)/z.
    lam = RatZ.lam()
    lam_inv = RatZ([Fraction(1), Fraction(-1)], a=1)
    assert lam * lam_inv == RatZ.const(1)
    for w in [(), (1,), (0, 1), (1, 0, 1)]:
        f = FElem.li(w)
        assert f.iota(1).theta0() == FElem.li(w, lam)
        assert f.iota(0).theta1() == FElem.li(w, lam_inv)


def test_theta_commutator_is_dz():
    # [theta1, theta0] = theta1 theta0 - theta0 theta1 = dz; chained method
    # calls apply left-to-right, so theta1 theta0 f = f.theta0().theta1()
    f = FElem.li((0, 1))
    commutator = f.theta0().theta1() - f.theta1().theta0()
    assert commutator == f.dz()


def test_theta_sum_is_dz():
    # theta0 + theta1 = (z + 1 - z) dz = dz on any element
    f = FElem.li((0, 1), RatZ.lam()) + FElem.li((1,), RatZ.z_pow(2))
    assert f.theta0() + f.theta1() == f.dz()


def test_eval_consistency():
    # dz Li_{x0x1} = Li_{x1}/z numerically
    z = 0.4
    f = FElem.li((0, 1))
    d = f.dz()
    fd = (f.eval(z + 1e-6) - f.eval(z - 1e-6)) / 2e-6
    assert abs(d.eval(z) - fd) < 1e-6
    val, _ = polylog_eval((1,), z)
    assert abs(d.eval(z) - val / z) < 1e-12


def test_eval_x0_powers():
    f = FElem.li((0, 0))
    assert abs(f.eval(0.5) - math.log(0.5) ** 2 / 2) < 1e-14

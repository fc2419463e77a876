import itertools
import random
from fractions import Fraction
from math import factorial

from ncgen.hopf import (
    decompose_in_basis, diagonal_factorization_check, dual_s, dual_sigma,
    pbw_p, pbw_pi, pi1, pi1_word, recompose_from_basis, sigma_by_products,
)
from ncgen.ncpoly import (
    NCPoly, conc, coproduct_stuffle, pi_y_poly, residual_left, residual_right,
    words_up_to,
)
from ncgen.words import X, Y, lyndon_words, weight


def W(w, alphabet=X, c=1):
    return NCPoly.word(w, alphabet, c)


def Yp(terms):
    return NCPoly(Y, {w: Fraction(c) for w, c in terms.items()})


# -- shuffle-side PBW -------------------------------------------------

def test_pbw_p_small():
    assert pbw_p((0,)) == W((0,))
    assert pbw_p((0, 1)) == W((0, 1)) - W((1, 0))
    # non-Lyndon word: product along the CFL factorization
    assert pbw_p((1, 0)) == conc(W((1,)), W((0,)))
    # [x0,[x0,x1]]
    expected = (W((0, 0, 1)) - W((0, 1, 0), c=2) + W((1, 0, 0)))
    assert pbw_p((0, 0, 1)) == expected


def test_dual_s_table_rows():
    assert dual_s((0, 1)) == W((0, 1))
    assert dual_s((0, 0, 1, 1)) == W((0, 0, 1, 1))
    assert dual_s((0, 0, 1, 0, 1)) == W((0, 0, 0, 1, 1), c=2) + W((0, 0, 1, 0, 1))
    assert dual_s((0, 1, 0, 1, 1)) == W((0, 0, 1, 1, 1), c=3) + W((0, 1, 0, 1, 1))
    assert dual_s((0, 0, 1, 1, 0, 1)) == (W((0, 0, 0, 1, 1, 1), c=6)
                                          + W((0, 0, 1, 0, 1, 1), c=3)
                                          + W((0, 0, 1, 1, 0, 1)))


def test_dual_s_nonlyndon():
    # S_{x1^2} = (S_{x1} sh S_{x1})/2 = x1^2
    assert dual_s((1, 1)) == W((1, 1))
    # S_{x1x0} = x1x0 + x0x1 sh-combination: CFL (x1)(x0)
    assert dual_s((1, 0)) == W((1, 0)) + W((0, 1))


def test_duality_s_p():
    ws = [w for w in words_up_to(X, 4) if w]
    for u in ws:
        for v in ws:
            expected = Fraction(int(u == v))
            got = sum(c * pbw_p(v).coeff(w) for w, c in dual_s(u).terms.items())
            assert got == expected, (u, v)


def test_triangularity():
    for w in words_up_to(X, 5):
        if not w:
            continue
        p, s = pbw_p(w), dual_s(w)
        assert p.coeff(w) == 1 and s.coeff(w) == 1
        deg = (w.count(0), w.count(1))
        for v in p.support():
            assert (v.count(0), v.count(1)) == deg
            assert v >= w
        for v in s.support():
            assert (v.count(0), v.count(1)) == deg
            assert v <= w


def test_s_lyndon_in_corner():
    # S_l sits in x0 Q<X> x1 for Lyndon l outside the letters, hence the
    # one-sided residuals by the far letters vanish.
    x0, x1 = W((0,)), W((1,))
    for l in lyndon_words(X, max_length=6):
        if len(l) < 2:
            continue
        s = dual_s(l)
        assert all(v[0] == 0 and v[-1] == 1 for v in s.support())
        assert residual_left(x0, s) == NCPoly.zero()
        assert residual_right(s, x1) == NCPoly.zero()


# -- pi1 and the quasi-shuffle PBW ------------------------------------

def test_pi1_letters():
    assert pi1_word((1,)) == Yp({(1,): 1})
    assert pi1_word((2,)) == Yp({(2,): 1, (1, 1): Fraction(-1, 2)})
    assert pi1_word((3,)) == Yp({(3,): 1, (1, 2): Fraction(-1, 2),
                                 (2, 1): Fraction(-1, 2), (1, 1, 1): Fraction(1, 3)})


def test_pi1_primitive():
    for w in words_up_to(Y, 5):
        if not w:
            continue
        p = pi1_word(w)
        delta = coproduct_stuffle(p)
        expected = {}
        for u, c in p.terms.items():
            expected[(u, ())] = c
            expected[((), u)] = expected.get(((), u), Fraction(0)) + c
        expected = {k: c for k, c in expected.items() if c}
        assert delta == expected, w


def test_pi1_reconstruction():
    # w = sum_k 1/k! sum <w|u1 st ... st uk> pi1(u1)...pi1(uk), weight <= 5
    from ncgen.hopf import _reduced_stuffle_coproduct
    for w in words_up_to(Y, 5):
        if not w:
            continue
        total = NCPoly(Y)
        layer = {(w,): Fraction(1)}
        k = 1
        while layer:
            for parts, c in layer.items():
                prod = NCPoly.one(Y)
                for u in parts:
                    prod = conc(prod, pi1_word(u))
                total = total + prod.scale(c / factorial(k))
            nxt = {}
            for parts, c in layer.items():
                for (a, b), m in _reduced_stuffle_coproduct(parts[-1]).items():
                    key = parts[:-1] + (a, b)
                    nxt[key] = nxt.get(key, Fraction(0)) + c * m
            layer = nxt
            k += 1
        assert total == W(w, Y), w


def test_letter_reconstruction_from_pi1():
    # y_n = sum_k 1/k! sum_{s1+...+sk=n} pi1(y_s1)...pi1(y_sk)
    from ncgen.words import _compositions
    for n in range(1, 6):
        total = NCPoly(Y)
        for comp in _compositions(n):
            prod = NCPoly.one(Y)
            for s in comp:
                prod = conc(prod, pi1_word((s,)))
            total = total + prod.scale(Fraction(1, factorial(len(comp))))
        assert total == W((n,), Y), n


def test_pbw_pi_rows():
    assert pbw_pi((2, 1)) == Yp({(2, 1): 1, (1, 2): -1})
    assert pbw_pi((1, 1)) == Yp({(1, 1): 1})
    assert pbw_pi((1, 2)) == Yp({(1, 2): 1, (1, 1, 1): Fraction(-1, 2)})
    assert pbw_pi((3, 1)) == Yp({(3, 1): 1, (2, 1, 1): Fraction(-1, 2),
                                 (1, 3): -1, (1, 1, 2): Fraction(1, 2)})


def test_dual_sigma_rows():
    assert dual_sigma((2,)) == Yp({(2,): 1})
    assert dual_sigma((1, 1)) == Yp({(2,): Fraction(1, 2), (1, 1): 1})
    assert dual_sigma((2, 1)) == Yp({(3,): Fraction(1, 2), (2, 1): 1})
    assert dual_sigma((1, 2)) == Yp({(3,): 1, (2, 1): 1, (1, 2): 1})
    assert dual_sigma((1, 1, 1)) == Yp({(3,): Fraction(1, 6),
                                        (2, 1): Fraction(1, 2),
                                        (1, 2): Fraction(1, 2), (1, 1, 1): 1})
    assert dual_sigma((1, 1, 1, 1)) == Yp({
        (4,): Fraction(1, 24), (3, 1): Fraction(1, 6), (2, 2): Fraction(1, 4),
        (2, 1, 1): Fraction(1, 2), (1, 3): Fraction(1, 6),
        (1, 2, 1): Fraction(1, 2), (1, 1, 2): Fraction(1, 2), (1, 1, 1, 1): 1})


def test_duality_sigma_pi():
    ws = [w for w in words_up_to(Y, 5) if w]
    for u in ws:
        su = dual_sigma(u)
        for v in ws:
            if sum(u) != sum(v):
                continue
            got = sum(c * pbw_pi(v).coeff(w) for w, c in su.terms.items())
            assert got == Fraction(int(u == v)), (u, v)


def test_sigma_product_formula_agrees():
    for w in words_up_to(Y, 5):
        if not w:
            continue
        assert sigma_by_products(w) == dual_sigma(w), w


# -- basis decomposition ----------------------------------------------

def test_decompose_unit_coordinates():
    for w in [(0, 1), (1, 0, 1), (0, 0, 1)]:
        assert decompose_in_basis(dual_s(w), "S") == {w: Fraction(1)}
        assert decompose_in_basis(pbw_p(w), "P") == {w: Fraction(1)}
    assert decompose_in_basis(W((1, 1)), "S") == {(1, 1): Fraction(1)}


def test_decompose_pi_y_of_p():
    got = decompose_in_basis(pi_y_poly(pbw_p((0, 1))), "Pi")
    assert got == {(2,): Fraction(1), (1, 1): Fraction(1, 2)}


def test_decompose_roundtrip_random():
    rng = random.Random(5)
    for kind, alphabet in [("S", X), ("P", X), ("Sigma", Y), ("Pi", Y)]:
        for _ in range(5):
            terms = {}
            pool = [w for w in words_up_to(alphabet, 4) if w]
            for w in rng.sample(pool, 4):
                terms[w] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            P = NCPoly(alphabet, terms)
            coords = decompose_in_basis(P, kind)
            assert recompose_from_basis(coords, kind, alphabet) == P


# -- diagonal series factorization ------------------------------------

def test_diagonal_factorization_x():
    assert diagonal_factorization_check(X, 1)
    assert diagonal_factorization_check(X, 3)
    assert diagonal_factorization_check(X, 4)


def test_diagonal_factorization_y():
    assert diagonal_factorization_check(Y, 4)

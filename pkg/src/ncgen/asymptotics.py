"""Leading-order growth of harmonic sums at negative indices.

H^-_w(N) is a polynomial of degree d(w) = (weight of w) + (length of w),
so H^-_w(N) ~ C^-_w N^{d(w)}.  The leading constant has the product form

    C^-_w = prod over nonempty suffixes v of w of 1 / d(v),

and B^-_w = d(w)! C^-_w is a positive integer.  The map w -> C^-_w is a
character for the shuffle product, and for the stuffle product once the
expansion is restricted to its top stratum (the words of maximal d,
i.e. the uncontracted shuffle terms).
"""

from fractions import Fraction
from math import factorial

from ncgen.ncpoly import shuffle_words, stuffle_words, words_up_to
from ncgen.negpolylog import h_neg
from ncgen.words import Y


def growth_degree(w):
    """d(w) = weight + length, the N-degree of H^-_w."""
    return sum(w) + len(w)


def c_minus(w):
    """Leading coefficient C^-_w of H^-_w(N) ~ C^-_w N^{d(w)}, exact."""
    out = Fraction(1)
    for k in range(len(w)):
        out /= growth_degree(w[k:])
    return out


def b_minus(w):
    """B^-_w = d(w)! C^-_w, always a positive integer."""
    val = factorial(growth_degree(w)) * c_minus(w)
    if val.denominator != 1:
        raise AssertionError("b_minus not integral for %r" % (w,))
    return val.numerator


def top_stratum(expansion, degree):
    """Filter a word->coefficient dict to the words of the given d."""
    return {w: c for w, c in expansion.items() if growth_degree(w) == degree}


def cone_linear_check(u, v, product="shuffle"):
    """C^-_u C^-_v = sum of c C^-_w over the top stratum of u (x) v.

    For the shuffle product every term is already in the top stratum;
    for the stuffle product the contracted (shorter) words drop out.
    """
    u, v = tuple(u), tuple(v)
    if product == "shuffle":
        expansion = shuffle_words(u, v)
    elif product == "stuffle":
        expansion = stuffle_words(u, v)
    else:
        raise ValueError("product must be 'shuffle' or 'stuffle'")
    d = growth_degree(u) + growth_degree(v)
    total = sum((c * c_minus(w) for w, c in top_stratum(expansion, d).items()),
                Fraction(0))
    return total == c_minus(u) * c_minus(v)


def grouplike_c_check(max_weight):
    """The character property of C^- on all Y-word pairs up to a weight."""
    words = [w for w in words_up_to(Y, max_weight) if w]
    for u in words:
        for v in words:
            if sum(u) + sum(v) > max_weight:
                continue
            if not cone_linear_check(u, v, "shuffle"):
                return False
            if not cone_linear_check(u, v, "stuffle"):
                return False
    return True


def limit_validation(w, n_max, tol=None):
    """Check H^-_w(N)/(C^-_w N^d) -> 1 numerically at N = n_max.

    The next-to-leading term of H^-_w is O(N^{d-1}), so the default
    tolerance is 2 d / n_max.
    """
    w = tuple(w)
    d = growth_degree(w)
    if tol is None:
        tol = 2.0 * d / n_max
    exact = h_neg(w).eval(Fraction(n_max))
    ratio = exact / (c_minus(w) * Fraction(n_max) ** d)
    err = abs(float(ratio) - 1.0)
    return {
        "word": w,
        "degree": d,
        "c_minus": c_minus(w),
        "ratio": float(ratio),
        "abs_err": err,
        "tol": tol,
        "pass": err <= tol,
    }

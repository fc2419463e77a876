# -*- coding: utf-8 -*-
"""Linear representations of rational noncommutative series.

This script
1. builds the 2-state linear representation of the Gauss hypergeometric
   system and prints low-order coefficients,
2. computes the Hankel rank from word/word pairings,
3. shows left/right residuals acting on the representation,
4. squares a series with the shuffle product at the coefficient level.
"""
from fractions import Fraction
from math import factorial

from ncgen.rational import (
    hankel_rank,
    rep_all_ones,
    rep_hypergeometric,
    shuffle_coefficient,
)
from ncgen.words import X, word_to_str

F = Fraction


def main():
    rep = rep_hypergeometric(F(1, 4), F(1, 4), F(1, 3), q0=(1, 1))
    print("Hypergeometric representation, coefficients up to length 2:")
    for w in [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]:
        print("  <S|%-8s> = %s" % (word_to_str(w) or "e",
                                   rep.coefficient(w)))
    print("Hankel rank (depth 3):", hankel_rank(rep.coefficient, X, 3))

    ones = rep_all_ones()
    print("\nAll-ones series has Hankel rank",
          hankel_rank(ones.coefficient, X, 3))

    print("\nResidual by x1 shifts the initial row vector:")
    from ncgen.ncpoly import NCPoly
    shifted = rep.residual(NCPoly.word((1,), X), side="right")
    print("  <S|x1 x0> =", rep.coefficient((1, 0)),
          " == residual at x0:", shifted.coefficient((0,)))

    print("\nShuffle square of the factorial series <R|w> = |w|!:")

    def fact_series(w):
        return F(factorial(len(w)))

    for n in range(5):
        w = (0,) * n
        print("  |w| = %d   <R sh R|w> = %s   ((n+1)! = %d)"
              % (n, shuffle_coefficient(fact_series, fact_series, w),
                 factorial(n + 1)))


if __name__ == "__main__":
    main()

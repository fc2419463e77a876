# -*- coding: utf-8 -*-
"""Lyndon words and the two pairs of dual bases.

This script
1. lists the Lyndon words over the two-letter alphabet up to length 4,
2. prints the bracket basis P_l and its shuffle-dual S_l for each,
3. does the same for the weighted alphabet with the quasi-shuffle pair
   Pi_l / Sigma_l,
4. spot-checks biorthogonality <S_u | P_v> = delta_{uv}.
"""
from fractions import Fraction

from ncgen.hopf import dual_s, dual_sigma, pbw_p, pbw_pi
from ncgen.ncpoly import poly_to_str, words_up_to
from ncgen.words import X, Y, lyndon_words, word_to_str


def main():
    print("Lyndon words over {x0, x1}, length <= 4:")
    for l in lyndon_words(X, max_length=4):
        print("  %-12s P = %-40s S = %s"
              % (word_to_str(l), poly_to_str(pbw_p(l)),
                 poly_to_str(dual_s(l))))

    print("\nLyndon words over {y1, y2, ...}, weight <= 4:")
    for l in lyndon_words(Y, max_weight=4):
        print("  %-8s Pi = %-32s Sigma = %s"
              % (word_to_str(l, Y), poly_to_str(pbw_pi(l)),
                 poly_to_str(dual_sigma(l))))

    print("\nBiorthogonality over all words of length <= 4:")
    ws = [w for w in words_up_to(X, 4) if w]
    worst = max(abs(sum((c * dual_s(u).coeff(w)
                         for w, c in pbw_p(v).terms.items()), Fraction(0))
                    - (1 if u == v else 0))
                for u in ws for v in ws)
    print("  max |<S_u|P_v> - delta| = %s over %d pairs"
          % (worst, len(ws) ** 2))


if __name__ == "__main__":
    main()

"""Exact computer algebra for noncommutative generating series.

Lyndon-word bases of the shuffle and quasi-shuffle Hopf algebras,
polylogarithms and harmonic sums at positive and negative indices,
renormalized zeta characters, linear representations of rational
series, and truncated Chen-series evaluation of nonlinear ODEs.
"""

__version__ = "0.1.0"

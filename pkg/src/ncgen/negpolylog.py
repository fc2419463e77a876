"""Negative-index polylogarithms and harmonic sums, exactly.

Li^-_w(z) for w over Y0 = {y0, y1, ...} is a polynomial in t = 1/(1-z)
(degree (w)+|w|), built by the recursion

    Li^-_{y_s u} = theta0^s (lambda Li^-_u),    lambda = t - 1,

where theta0 = z d/dz acts on Q[t] as the derivation with
theta0(t) = t^2 - t.  H^-_w(N) = sum_{N >= n1 > ... > nr >= 1}
n1^{s1} ... nr^{sr} is a polynomial in N of the same degree; it is
constructed by exact Lagrange interpolation against the literal nested
sum, with the classical Bernoulli/Faulhaber formulas kept as
cross-checks.

The multi-index Bernoulli polynomials B_w(z) are implemented in closed
form for |w| <= 2 (single index: classical Bernoulli polynomial, with
B_1 = -1/2; two indices: a finite Bernoulli double sum).  For |w| = 3
the shifted part beta_w = B_w - B_w(0) is produced from the first
extended Faulhaber identity, which pins everything the roundtrip checks
need; longer words raise.  The first Faulhaber identity holds with the
*inclusive* harmonic sum (innermost index allowed to reach 0), which
only differs from H^- when the last shifted exponent is 0.
"""

from fractions import Fraction
from math import comb, factorial

_ZERO = Fraction(0)


class QPoly:
    """Dense univariate polynomial over Q; var is a display/serialization tag."""

    __slots__ = ("coefs", "var")

    def __init__(self, coefs, var="N"):
        coefs = [Fraction(c) for c in coefs]
        while coefs and not coefs[-1]:
            coefs.pop()
        self.coefs = tuple(coefs)
        self.var = var

    @classmethod
    def const(cls, c, var="N"):
        return cls([c], var)

    @classmethod
    def x(cls, var="N"):
        return cls([0, 1], var)

    def degree(self):
        return len(self.coefs) - 1 if self.coefs else -1

    def is_zero(self):
        return not self.coefs

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coefs == other.coefs

    def __hash__(self):
        return hash(self.coefs)

    def __add__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly.const(other, self.var)
        n = max(len(self.coefs), len(other.coefs))
        return QPoly([(self.coefs[i] if i < len(self.coefs) else _ZERO)
                      + (other.coefs[i] if i < len(other.coefs) else _ZERO)
                      for i in range(n)], self.var)

    def __neg__(self):
        return QPoly([-c for c in self.coefs], self.var)

    def __sub__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly.const(other, self.var)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            return QPoly([Fraction(other) * c for c in self.coefs], self.var)
        out = [_ZERO] * (len(self.coefs) + len(other.coefs) - 1 or 1)
        for i, a in enumerate(self.coefs):
            if a:
                for j, b in enumerate(other.coefs):
                    out[i + j] += a * b
        return QPoly(out, self.var)

    __rmul__ = __mul__

    def eval(self, x):
        val = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coefs):
            val = val * x + c
        return val

    def shift(self, c):
        """p(x + c)."""
        c = Fraction(c)
        out = [_ZERO] * len(self.coefs)
        for i, a in enumerate(self.coefs):
            if a:
                for k in range(i + 1):
                    out[k] += a * comb(i, k) * c ** (i - k)
        return QPoly(out, self.var)

    def derivative(self):
        return QPoly([i * c for i, c in enumerate(self.coefs)][1:], self.var)

    def to_json_dict(self):
        return {"var": self.var, "coefs": [str(c) for c in self.coefs]}

    @classmethod
    def from_json_dict(cls, d):
        return cls([Fraction(c) for c in d["coefs"]], d["var"])

    def __repr__(self):
        return "QPoly(%s; %s)" % (list(self.coefs), self.var)


T_VAR = "1/(1-z)"

LAMBDA_T = QPoly([-1, 1], T_VAR)  # t - 1


def theta0_t(p):
    """z d/dz on Q[t], t = 1/(1-z): derivation with theta0(t) = t^2 - t."""
    out = [_ZERO] * (len(p.coefs) + 1)
    for k, c in enumerate(p.coefs):
        if c and k:
            out[k + 1] += c * k
            out[k] -= c * k
    return QPoly(out, T_VAR)


_li_neg_memo = {}


def li_neg(w):
    """Li^-_w as a polynomial in t = 1/(1-z); w over Y0 (indices >= 0)."""
    w = tuple(w)
    got = _li_neg_memo.get(w)
    if got is None:
        if not w:
            got = QPoly.const(1, T_VAR)
        else:
            got = LAMBDA_T * li_neg(w[1:])
            for _ in range(w[0]):
                got = theta0_t(got)
        _li_neg_memo[w] = got
    return got


def p_neg(w):
    """P^-_w = Li^-_w / (1-z) = t * Li^-_w, the H-ordinary generating function."""
    return QPoly([0, 1], T_VAR) * li_neg(w)


def p_neg_z_coefficient(w, N):
    """Exact coefficient of z^N in p_neg(w), via t^k = sum C(N+k-1,k-1) z^N."""
    total = _ZERO
    for k, c in enumerate(p_neg(w).coefs):
        if c and k:
            total += c * comb(N + k - 1, k - 1)
        elif c and k == 0 and N == 0:
            total += c
    return total


# ---------------------------------------------------------------------------
# harmonic sums at negative indices

_h_brute_memo = {}


def h_neg_value(w, N):
    """Literal nested sum: sum over N >= n1 > ... > nr >= 1 of prod n_i^{s_i}."""
    w = tuple(w)
    if not w:
        return Fraction(1)
    if N <= 0:
        return Fraction(0)
    key = (w, N)
    got = _h_brute_memo.get(key)
    if got is None:
        got = h_neg_value(w, N - 1) + N ** w[0] * h_neg_value(w[1:], N - 1)
        _h_brute_memo[key] = got
    return got


def _lagrange(points):
    """Interpolating QPoly through [(x, y), ...] with exact arithmetic."""
    total = QPoly([], "N")
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        term = QPoly.const(yi, "N")
        for j, (xj, _) in enumerate(points):
            if i != j:
                term = term * QPoly([Fraction(-xj, 1) / (xi - xj),
                                     Fraction(1, xi - xj)], "N")
        total = total + term
    return total


_h_neg_memo = {}


def h_neg(w):
    """H^-_w as an exact polynomial in N (degree (w)+|w|), by interpolation."""
    w = tuple(w)
    got = _h_neg_memo.get(w)
    if got is None:
        d = sum(w) + len(w)
        pts = [(n, h_neg_value(w, n)) for n in range(d + 1)]
        got = _lagrange(pts)
        _h_neg_memo[w] = got
    return got


def h_neg_single_closed_form(m):
    """H^-_{y_m}(N) = (1/(m+1)) sum_k C(m+1,k) B_k (N+1)^(m+1-k), m >= 1.

    (For m = 0 the formula overcounts by the 0^0 term; use h_neg.)
    """
    if m < 1:
        raise ValueError("closed form needs m >= 1")
    Np1 = QPoly([1, 1], "N")
    total = QPoly([], "N")
    power = [QPoly.const(1, "N")]
    for _ in range(m + 1):
        power.append(power[-1] * Np1)
    for k in range(m + 1):
        total = total + comb(m + 1, k) * bernoulli(k) * power[m + 1 - k]
    return Fraction(1, m + 1) * total


# ---------------------------------------------------------------------------
# Eulerian and Bernoulli layers

def eulerian(n, k):
    """Eulerian number A_{n,k} = sum_j (-1)^j C(n+1,j) (k+1-j)^n."""
    if not (0 <= k <= max(n - 1, 0)):
        raise ValueError("Eulerian index out of range: (%d, %d)" % (n, k))
    return sum((-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n
               for j in range(k + 1))


_bernoulli_cache = [Fraction(1)]


def bernoulli(k):
    """Bernoulli number B_k, with B_1 = -1/2 (generating series t/(e^t - 1))."""
    while len(_bernoulli_cache) <= k:
        m = len(_bernoulli_cache)
        s = sum(comb(m + 1, j) * _bernoulli_cache[j] for j in range(m))
        _bernoulli_cache.append(-s / Fraction(m + 1))
    return _bernoulli_cache[k]


def bernoulli_poly(m, var="z"):
    """Classical Bernoulli polynomial B_m(x) = sum_k C(m,k) B_k x^(m-k)."""
    out = [_ZERO] * (m + 1)
    for k in range(m + 1):
        out[m - k] += comb(m, k) * bernoulli(k)
    return QPoly(out, var)


def li_neg_numerator_z(m):
    """Numerator polynomial of Li^-_{y_m} = z A_m(z) / (1-z)^(m+1), in z.

    Returns the Eulerian polynomial z * sum_k A_{m,k} z^k as a QPoly,
    computed from li_neg (the Eulerian recursion route is a test).
    """
    p = li_neg((m,))
    # N(z) = sum_k c_k (1-z)^(m+1-k) where p = sum c_k t^k
    one_minus_z = QPoly([1, -1], "z")
    out = QPoly([], "z")
    power = [QPoly.const(1, "z")]
    for _ in range(m + 1):
        power.append(power[-1] * one_minus_z)
    for k, c in enumerate(p.coefs):
        if c:
            out = out + c * power[m + 1 - k]
    return out


# ---------------------------------------------------------------------------
# multi-index Bernoulli polynomials and the extended Faulhaber identities

def faulhaber_B_poly(w):
    """B_w(z) for |w| <= 2 (closed forms); raises for longer words."""
    w = tuple(w)
    if not w:
        return QPoly.const(1, "z")
    if len(w) == 1:
        return bernoulli_poly(w[0])
    if len(w) == 2:
        n1, n2 = w
        total = QPoly([], "z")
        for m in range(n1, n1 + n2 + 1):
            c = (Fraction(comb(m - 1, n1 - 1), factorial(m))
                 * bernoulli(n1 + n2 - m) / factorial(n1 + n2 - m))
            total = total + c * bernoulli_poly(m)
        return factorial(n1) * factorial(n2) * total
    raise ValueError("closed-form B_w implemented for |w| <= 2 only")


def faulhaber_B(w, z):
    return faulhaber_B_poly(w).eval(Fraction(z))


def b_constant(w):
    """b_w = B_w(0), |w| <= 2."""
    return faulhaber_B_poly(w).eval(Fraction(0))


def b_prime(w):
    """b'_w: b'_{y_k} = b_{y_k}; recursion peels prefixes against suffixes."""
    w = tuple(w)
    if len(w) == 1:
        return b_constant(w)
    total = b_constant(w)
    for j in range(len(w) - 1):
        total -= b_constant(w[j + 1:]) * b_prime(w[:j + 1])
    return total


def h_tilde(w):
    """Inclusive nested sum (innermost index down to 0) as an NPoly.

    Equals H^-_w plus, when the last exponent is 0, the 0^0 = 1 term,
    which contributes H^- of the word with its last letter dropped.
    """
    w = tuple(w)
    p = h_neg(w)
    if w and w[-1] == 0:
        p = p + h_neg(w[:-1])
    return p


def beta_poly(w):
    """beta_w = B_w - B_w(0) from the first extended Faulhaber identity.

    beta_w(N) = sum_k (n1...nk) b_{suffix after k} Htilde^-_{shifted-down
    prefix}(N - 1); works for |w| <= 3 (suffix b's need |.| <= 2).
    """
    w = tuple(w)
    if not w:
        return QPoly([], "N")
    if any(n < 1 for n in w):
        raise ValueError("beta_poly needs positive indices")
    total = QPoly([], "N")
    prod = 1
    for k in range(1, len(w) + 1):
        prod *= w[k - 1]
        b_suf = b_constant(w[k:]) if w[k:] else Fraction(1)
        if b_suf:
            shifted = tuple(n - 1 for n in w[:k])
            total = total + prod * b_suf * h_tilde(shifted).shift(-1)
    return total


def h_neg_from_faulhaber(w):
    """Second extended Faulhaber identity: H^-_w from the up-shifted betas."""
    w = tuple(w)
    up = tuple(n + 1 for n in w)
    num = beta_poly(up).shift(1)
    for k in range(1, len(w)):
        num = num - b_prime(up[k:]) * beta_poly(up[:k]).shift(1)
    denom = 1
    for n in up:
        denom *= n
    return Fraction(1, denom) * num


def faulhaber_roundtrip(w):
    """Verify the Faulhaber layer on a word with positive indices, |w| <= 3.

    Checks, all as exact polynomial identities:
      - for |w| <= 2: beta from the closed-form B_w matches the
        F1-constructed beta;
      - the difference equation beta_w(z+1) - beta_w(z) = n1 z^(n1-1) B_tail(z);
      - B_w(1) = B_w(0) when n1 > 1 (i.e. beta_w(1) = 0), and beta_w(0) = 0;
      - the second identity recovers h_neg(w) exactly.
    """
    w = tuple(w)
    if not w or any(n < 1 for n in w) or len(w) > 3:
        raise ValueError("roundtrip needs positive indices and |w| <= 3")
    beta = beta_poly(w)
    if len(w) <= 2:
        closed = faulhaber_B_poly(w)
        if beta != closed - closed.eval(Fraction(0)):
            return False
    n1 = w[0]
    tail = faulhaber_B_poly(w[1:])
    monomial = QPoly([_ZERO] * (n1 - 1) + [Fraction(n1)], "N")
    if beta.shift(1) - beta != monomial * tail:
        return False
    if beta.eval(Fraction(0)) != 0:
        return False
    if n1 > 1 and beta.eval(Fraction(1)) != 0:
        return False
    return h_neg_from_faulhaber(w) == h_neg(w)


# ---------------------------------------------------------------------------
# stuffle morphism

def stuffle_morphism_check_neg(u, v):
    """Exact polynomial identity H^-_u H^-_v = H^- over u stuffle v."""
    from ncgen.ncpoly import stuffle_words
    u, v = tuple(u), tuple(v)
    lhs = h_neg(u) * h_neg(v)
    rhs = QPoly([], "N")
    for w, c in stuffle_words(u, v).items():
        rhs = rhs + c * h_neg(w)
    return lhs == rhs

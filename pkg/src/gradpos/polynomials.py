"""Ideal/antichain generating polynomials and the Kostant-Macdonald product.

All arithmetic is over the integers.  Polynomials are immutable
coefficient tuples indexed by degree.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .poset import (
    bits,
    count_ideals_by_size,
    enumerate_antichains,
    enumerate_lower_ideals,
    make_chain,
    product,
)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def divmod(self, divisor):
        """Long division; returns (quotient, remainder) or None when a
        leading-coefficient step is not an exact integer division."""
        d = divisor.coeffs
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        if len(rem) < len(d):
            return IntPolynomial(), self
        q = [0] * (len(rem) - len(d) + 1)
        lead = d[-1]
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if c % lead:
                return None
            c //= lead
            q[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        return IntPolynomial(q), IntPolynomial(rem)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
                coef = str(c) if (c != 1 or k == 0) else ""
                terms.append(f"{coef}{mono}")
        return " + ".join(terms) or "0"


def one_minus_t_power(e):
    """1 - t^e."""
    c = [0] * (e + 1)
    c[0] = 1
    c[e] -= 1
    return IntPolynomial(c)


def q_integer(n):
    """[n]_t = 1 + t + ... + t^(n-1)."""
    return IntPolynomial([1] * n)


def divide_by_one_minus_t_power(p, e):
    """Exact quotient p / (1 - t^e), or None if it leaves a remainder."""
    c = p.coeffs
    q = []
    for k in range(max(len(c) - e, 0)):
        q.append(c[k] + (q[k - e] if k >= e else 0))
    # remainder check: p must equal (1 - t^e) q
    if IntPolynomial(q) * one_minus_t_power(e) != p:
        return None
    return IntPolynomial(q)


@dataclass(frozen=True)
class RationalProduct:
    """prod (1 - t^a) / prod (1 - t^b) over the two exponent multisets."""

    numerator_exponents: tuple
    denominator_exponents: tuple

    def reduced(self):
        num, den = Counter(self.numerator_exponents), Counter(self.denominator_exponents)
        common = num & den
        num -= common
        den -= common
        return RationalProduct(tuple(sorted(num.elements())), tuple(sorted(den.elements())))

    def value_at_one(self):
        """Limit at t = 1, an exact rational (infinite/zero cases -> None)."""
        if len(self.numerator_exponents) != len(self.denominator_exponents):
            return None
        val = Fraction(1)
        for a in self.numerator_exponents:
            val *= a
        for b in self.denominator_exponents:
            val /= b
        return val

    def quotient(self):
        """The product as an IntPolynomial, or None if it is not a polynomial."""
        r = self.reduced()
        num = IntPolynomial.one()
        for a in r.numerator_exponents:
            num = num * one_minus_t_power(a)
        for b in sorted(r.denominator_exponents, reverse=True):
            num = divide_by_one_minus_t_power(num, b)
            if num is None:
                return None
        return num

    def __str__(self):
        f = lambda es: "".join(f"(1-t^{e})" for e in es) or "1"
        return f"{f(self.numerator_exponents)} / {f(self.denominator_exponents)}"


@dataclass(frozen=True)
class KMResult:
    product: RationalProduct
    polynomial: IntPolynomial | None

    @property
    def is_polynomial(self):
        return self.polynomial is not None


def km_product(P):
    """prod over x in P of (1 - t^(r(x)+1)) / (1 - t^(r(x)))."""
    prod = RationalProduct(
        tuple(sorted(r + 1 for r in P.rank)), tuple(sorted(P.rank))
    )
    return KMResult(prod, prod.quotient())


def km_product_chain(P, m):
    """The KM product of [m] x P, telescoped: prod (1-t^(r+m)) / (1-t^r)."""
    prod = RationalProduct(tuple(sorted(r + m for r in P.rank)), tuple(sorted(P.rank)))
    return KMResult(prod, prod.quotient())


def m_polynomial(P, limit=None):
    return IntPolynomial(count_ideals_by_size(P, limit))


def n_polynomial(P, limit=None):
    counts = Counter(bin(a).count("1") for a in enumerate_antichains(P, limit))
    return IntPolynomial(counts[k] for k in range(max(counts) + 1))


def is_pleasant(P, limit=None):
    km = km_product(P)
    return km.is_polynomial and km.polynomial == m_polynomial(P, limit)


# -- [m] x P through multichains of ideals --------------------------------


def _downset_sums(P, ideals, f):
    """g(I) = sum of f(I') over ideals I' contained in I.

    Inclusion-exclusion over the maximal elements of I: the ideals
    strictly below I are the union of the down-sets of I - {x},
    x in max(I), and intersections of those are I - S.
    """
    g = {}
    for I in ideals:  # sorted by size
        acc = f[I]
        mx = bits(P.maximal(I))
        for k in range(1, len(mx) + 1):
            sign = 1 if k % 2 else -1
            for S in combinations(mx, k):
                J = I
                for x in S:
                    J &= ~(1 << x)
                acc = acc + g[J] * sign
        g[I] = acc
    return g


def _monomial(k):
    return IntPolynomial([0] * k + [1])


def chain_product_m_polynomial(P, m, limit=None):
    """M of [m] x P computed on J(P) without building [m] x P.

    Ideals of [m] x P are multichains I_m <= ... <= I_1 in J(P).
    """
    ideals = enumerate_lower_ideals(P, limit)
    size = {I: bin(I).count("1") for I in ideals}
    # f_k(I) = t^|I| * sum_{I' <= I} f_{k-1}(I')
    f = {I: _monomial(size[I]) for I in ideals}
    for _ in range(m - 1):
        g = _downset_sums(P, ideals, f)
        f = {I: _monomial(size[I]) * g[I] for I in ideals}
    M = IntPolynomial()
    for I in ideals:
        M = M + f[I]
    return M


def chain_product_n_polynomial(P, m, limit=None):
    """N of [m] x P computed on J(P).

    An antichain of [m] x P is the set of maximal elements of an ideal
    D_1 >= ... >= D_m; row i contributes max(D_i) - D_(i+1).
    """
    ideals = enumerate_lower_ideals(P, limit)
    size = {I: bin(I).count("1") for I in ideals}
    mx = {I: P.maximal(I) for I in ideals}
    f = {I: _monomial(bin(mx[I]).count("1")) for I in ideals}
    for _ in range(m - 1):
        new = {}
        for D in ideals:
            acc = IntPolynomial()
            for E in ideals:
                if size[E] > size[D]:
                    break
                if E & ~D == 0:
                    acc = acc + _monomial(bin(mx[D] & ~E).count("1")) * f[E]
            new[D] = acc
        f = new
    N = IntPolynomial()
    for I in ideals:
        N = N + f[I]
    return N


@dataclass(frozen=True)
class GaussianReport:
    """Per-m pleasantness of [m] x P.  ``refuted_at`` is the first failing m.

    An all-true list is evidence only: Gaussianness quantifies over every m.
    """

    results: tuple
    refuted_at: int | None

    @property
    def refuted(self):
        return self.refuted_at is not None

    @property
    def consistent_up_to(self):
        return None if self.refuted else len(self.results)


def gaussian_check(P, m_max, limit=None, stop_at_refutation=False):
    results = []
    refuted_at = None
    for m in range(1, m_max + 1):
        km = km_product_chain(P, m)
        if not km.is_polynomial:
            ok = False
        else:
            ok = chain_product_m_polynomial(P, m, limit) == km.polynomial
        results.append(ok)
        if not ok and refuted_at is None:
            refuted_at = m
            if stop_at_refutation:
                break
    return GaussianReport(tuple(results), refuted_at)


# -- classification -------------------------------------------------------


@dataclass(frozen=True)
class PolynomialReport:
    palindromic: bool
    monic: bool
    top_coefficient: int
    value_at_minus1: int
    value_at_1: int


def classify_polynomial(p):
    c = p.coeffs
    return PolynomialReport(
        palindromic=c == c[::-1],
        monic=bool(c) and c[-1] == 1,
        top_coefficient=c[-1] if c else 0,
        value_at_minus1=p(-1),
        value_at_1=p(1),
    )


def m_at_minus_one_formula(ranks):
    """M(-1) from the even/odd rank multisets E and F, valid for pleasant P."""
    E = [r for r in ranks if r % 2 == 0]
    F = [r for r in ranks if r % 2 == 1]
    if len(E) != len(F):
        return 0
    val = Fraction(1)
    for f in F:
        val *= f + 1
    for e in E:
        val /= e
    if val.denominator != 1:
        raise ArithmeticError("E/F quotient is not an integer")
    return int(val)


def ideal_count_formula(ranks):
    """prod (r+1)/r as an exact rational."""
    val = Fraction(1)
    for r in ranks:
        val *= Fraction(r + 1, r)
    return val


def binomial_product_n_polynomial(n, m):
    """N of [n] x [m]: sum_i C(n,i) C(m,i) t^i."""
    from math import comb

    return IntPolynomial(comb(n, i) * comb(m, i) for i in range(min(n, m) + 1))


def k_ball_filling_counts(n, m):
    """A_{n,m}(i), i = 0..m+1: antichain counts of [m] x K_n by ball filling.

    Labels 1..2n+1 with two distinct balls labelled n+1; cases by how many
    n+1 balls are used and whether they share a box.
    """
    from math import comb

    C = lambda a, b: comb(a, b) if 0 <= b <= a else 0
    return [
        C(2 * n, i) * C(m, i)
        + 2 * C(2 * n, i - 1) * C(m, i)
        + C(2 * n, i - 2) * C(m, i - 1)
        + 2 * C(2 * n, i - 2) * C(m, i)
        for i in range(m + 2)
    ]


def chain_power(P, m):
    """[m] x P as an explicit poset."""
    return product(make_chain(m), P)

"""Schur Q-functions as exact polynomials in odd power sums.

The computational path is the generating series for one-row functions,
the two-row recursion, and the Pfaffian-style expansion for longer strict
shapes.  q_direct_eval implements the defining symmetrized rational sum
and is kept as an independent (slow) oracle.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import excess, is_partition, is_strict, partitions_of, z_order


class PowerSumPoly:
    """Sparse polynomial in odd power sums; keys are odd partitions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for alpha, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[tuple(alpha)] = c

    @classmethod
    def one(cls):
        return cls({(): Fraction(1)})

    def __add__(self, other):
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            s = out.get(a, Fraction(0)) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return PowerSumPoly(out)

    def __neg__(self):
        return PowerSumPoly({a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSumPoly({a: c * other for a, c in self.coeffs.items()})
        out = {}
        for a1, c1 in self.coeffs.items():
            for a2, c2 in other.coeffs.items():
                a = tuple(sorted(a1 + a2, reverse=True))
                out[a] = out.get(a, Fraction(0)) + c1 * c2
        return PowerSumPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PowerSumPoly) and self.coeffs == other.coeffs

    def coefficient(self, alpha):
        return self.coeffs.get(tuple(alpha), Fraction(0))

    def evaluate(self, xs):
        """Value at the point xs, substituting p_k = sum x_i^k."""
        xs = [Fraction(x) for x in xs]
        pk = {}
        total = Fraction(0)
        for alpha, c in self.coeffs.items():
            term = c
            for k in alpha:
                if k not in pk:
                    pk[k] = sum(x ** k for x in xs)
                term *= pk[k]
            total += term
        return total

    def __repr__(self):
        if not self.coeffs:
            return "PowerSumPoly(0)"
        items = sorted(self.coeffs.items(), reverse=True)
        return "PowerSumPoly(%s)" % ", ".join(
            "%s*p%r" % (c, list(a)) for a, c in items)


@lru_cache(maxsize=None)
def q_one_row(r):
    """One-row Q-function: sum over odd partitions alpha of r of
    2^len(alpha)/z_alpha * p_alpha (from the generating identity
    sum_r Q_(r) t^r = exp(2 sum_{k odd} p_k t^k / k))."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    out = {}
    for alpha in partitions_of(r, "odd"):
        out[alpha] = Fraction(2 ** len(alpha), z_order(alpha))
    return PowerSumPoly(out)


@lru_cache(maxsize=None)
def _q_pair(r, s):
    """Two-row expansion, r > s >= 0 (s = 0 degenerates to one row)."""
    if s == 0:
        return q_one_row(r)
    out = q_one_row(r) * q_one_row(s)
    for i in range(1, s + 1):
        term = q_one_row(r + i) * q_one_row(s - i)
        out = out + term * Fraction(2 * (-1) ** i)
    return out


@lru_cache(maxsize=None)
def _q_strict(nu):
    if len(nu) == 0:
        return PowerSumPoly.one()
    if len(nu) == 1:
        return q_one_row(nu[0])
    if len(nu) == 2:
        return _q_pair(nu[0], nu[1])
    # Pfaffian expansion along the first row; odd length gets a virtual
    # zero part appended before pairing.
    parts = nu if len(nu) % 2 == 0 else nu + (0,)
    total = PowerSumPoly()
    for j in range(1, len(parts)):
        rest = tuple(p for idx, p in enumerate(parts) if idx not in (0, j) and p > 0)
        term = _q_pair(parts[0], parts[j]) * _q_strict(rest)
        if j % 2 == 0:  # sign (-1)^j for 1-based column index j+1
            term = -term
        total = total + term
    return total


def q_poly(nu):
    """Exact expansion of the Q-function of a strict partition in odd
    power sums of degree |nu|."""
    nu = tuple(nu)
    if not is_partition(nu) or not is_strict(nu):
        raise ValueError("nu must be a strict partition: %r" % (nu,))
    return _q_strict(nu)


def q_direct_eval(nu, point):
    """Defining symmetrized sum evaluated at rational coordinates.

    2^l * sum over injections w of the first l slots,
    x_{w(1)}^{nu_1} ... x_{w(l)}^{nu_l} * prod (x_i + x_j)/(x_i - x_j)
    over pairs with the left index among the l slots.  Desk-scale oracle.
    """
    nu = tuple(nu)
    if not is_partition(nu) or not is_strict(nu):
        raise ValueError("nu must be a strict partition: %r" % (nu,))
    xs = [Fraction(p) for p in point]
    if len(set(xs)) != len(xs):
        raise ValueError("coordinates must be pairwise distinct")
    if any(x == 0 for x in xs):
        raise ValueError("coordinates must be nonzero")
    l, m = len(nu), len(xs)
    if m < l:
        raise ValueError("need at least %d coordinates" % l)
    total = Fraction(0)
    for sel in permutations(range(m), l):
        term = Fraction(1)
        for k, idx in enumerate(sel):
            term *= xs[idx] ** nu[k]
        chosen = set(sel)
        for a in range(l):
            xa = xs[sel[a]]
            for b in range(a + 1, l):
                xb = xs[sel[b]]
                term *= (xa + xb) / (xa - xb)
            for j in range(m):
                if j not in chosen:
                    term *= (xa + xs[j]) / (xa - xs[j])
        total += term
    return total * 2 ** l


def delta_on_odd(nu, alpha):
    """Spin character value on an odd class, recovered by inverting the
    Q-function expansion; always a rational integer."""
    nu, alpha = tuple(nu), tuple(alpha)
    if sum(nu) != sum(alpha):
        raise ValueError("weight mismatch: %r vs %r" % (nu, alpha))
    if not all(p % 2 == 1 for p in alpha):
        raise ValueError("alpha must have odd parts: %r" % (alpha,))
    dbar = excess(nu) % 2
    e = (len(nu) + len(alpha) + dbar) // 2
    value = q_poly(nu).coefficient(alpha) * z_order(alpha) / Fraction(2 ** e)
    if value.denominator != 1:
        raise ArithmeticError(
            "non-integer character value %s at %r, %r" % (value, nu, alpha))
    return int(value)

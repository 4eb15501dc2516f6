"""Exact arithmetic in cyclotomic fields and formal square-root combinations.

CycloNumber holds an element of Q(zeta_N) as rational coefficients on the
powers zeta_N^0..zeta_N^{N-1}, kept in canonical reduced form (remainder
modulo the N-th cyclotomic polynomial), so equality is coefficient
equality.  Mixed-conductor operations lift both operands to the lcm.

RadicalValue is a finite sum  sum_r  a_r * sqrt(r)  with squarefree
positive radicands r and CycloNumber coefficients a_r; products extract
square factors so the representation stays normalized.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients (ascending, exact ints) of the n-th cyclotomic polynomial."""
    # x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num, den):
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q[i] = c // den[-1]
        for j, dj in enumerate(den):
            num[i + j] -= q[i] * dj
    assert all(c == 0 for c in num)
    return q


def squarefree_split(m):
    """m = s*s*t with t squarefree; returns (s, t).  m must be positive."""
    if m <= 0:
        raise ValueError("radicand must be positive")
    s, t, d = 1, 1, 2
    while d * d <= m:
        while m % (d * d) == 0:
            s *= d
            m //= d * d
        if m % d == 0:
            t *= d
            m //= d
        d += 1
    return s, t * m


class CycloNumber:
    """Element of Q(zeta_N), canonically reduced."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = n
        self.coeffs = _reduce(n, coeffs)

    @classmethod
    def rational(cls, q, n=1):
        q = Fraction(q)
        return cls(n, {0: q} if q else {})

    @classmethod
    def zeta(cls, n, k=1):
        return cls(n, {k % n: Fraction(1)})

    @classmethod
    def imag_unit(cls):
        return cls.zeta(4)

    def lift(self, m):
        """The same number viewed in Q(zeta_m); m must be a multiple of n."""
        if m == self.n:
            return self
        assert m % self.n == 0
        step = m // self.n
        return CycloNumber(m, {k * step: v for k, v in self.coeffs.items()})

    def _pair(self, other):
        if not isinstance(other, CycloNumber):
            other = CycloNumber.rational(other)
        m = self.n * other.n // gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._pair(other)
        c = dict(a.coeffs)
        for k, v in b.coeffs.items():
            c[k] = c.get(k, Fraction(0)) + v
        return CycloNumber(a.n, c)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.n, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycloNumber)
                       else CycloNumber.rational(other).__neg__())

    def __rsub__(self, other):
        return CycloNumber.rational(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CycloNumber.rational(0, self.n)
            return CycloNumber(self.n,
                               {k: v * other for k, v in self.coeffs.items()})
        a, b = self._pair(other)
        c = {}
        for k1, v1 in a.coeffs.items():
            for k2, v2 in b.coeffs.items():
                k = (k1 + k2) % a.n
                c[k] = c.get(k, Fraction(0)) + v1 * v2
        return CycloNumber(a.n, c)

    __rmul__ = __mul__

    def __pow__(self, e):
        assert e >= 0
        out = CycloNumber.rational(1, self.n)
        for _ in range(e):
            out = out * self
        return out

    def conj(self):
        """Complex conjugation: zeta^k -> zeta^(N-k)."""
        return CycloNumber(self.n,
                           {(-k) % self.n: v for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def is_rational(self):
        return all(k == 0 for k in self.coeffs)

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not rational: %r" % (self,))
        return self.coeffs.get(0, Fraction(0))

    def is_real(self):
        return self == self.conj()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.rational(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # hash must agree across conductors; use the complex embedding of
        # the rational part only when rational, else a coarse invariant
        if self.is_rational():
            return hash(self.rational_value())
        return hash(frozenset(self.coeffs.values()))

    def to_complex(self):
        from cmath import exp, pi
        return sum(float(v) * exp(2j * pi * k / self.n)
                   for k, v in self.coeffs.items())

    def serialize(self):
        """List of (exponent, numerator, denominator) triples."""
        return [[k, v.numerator, v.denominator]
                for k, v in sorted(self.coeffs.items())]

    @classmethod
    def deserialize(cls, triples, n):
        return cls(n, {int(k): Fraction(int(p), int(q)) for k, p, q in triples})

    def __repr__(self):
        if self.is_zero():
            return "Cyclo(0)"
        terms = ["%s*z%d^%d" % (v, self.n, k)
                 for k, v in sorted(self.coeffs.items())]
        return "Cyclo(%s)" % " + ".join(terms)


def _reduce(n, coeffs):
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    vec = [Fraction(0)] * n
    for k, v in coeffs.items():
        vec[k % n] += Fraction(v)
    for e in range(n - 1, deg - 1, -1):
        c = vec[e]
        if c:
            vec[e] = Fraction(0)
            for j in range(deg):
                vec[e - deg + j] -= c * phi[j]
    return {k: v for k, v in enumerate(vec[:deg]) if v}


class RadicalValue:
    """Finite sum of CycloNumber coefficients times square roots of
    squarefree positive integers.  Radicand 1 is the cyclotomic part."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for r, c in terms.items():
                if not isinstance(c, CycloNumber):
                    c = CycloNumber.rational(c)
                if c.is_zero():
                    continue
                s, t = squarefree_split(r)
                coeff = c * s if s != 1 else c
                if t in self.terms:
                    coeff = self.terms[t] + coeff
                if coeff.is_zero():
                    self.terms.pop(t, None)
                else:
                    self.terms[t] = coeff

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def rational(cls, q):
        return cls({1: CycloNumber.rational(q)})

    @classmethod
    def from_cyclo(cls, c, radicand=1):
        return cls({radicand: c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalValue.rational(other)
        out = dict(self.terms)
        for r, c in other.terms.items():
            s = out.get(r, CycloNumber.rational(0)) + c
            if s.is_zero():
                out.pop(r, None)
            else:
                out[r] = s
        v = RadicalValue()
        v.terms = out
        return v

    __radd__ = __add__

    def __neg__(self):
        v = RadicalValue()
        v.terms = {r: -c for r, c in self.terms.items()}
        return v

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalValue.rational(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            out = RadicalValue()
            for r, c in self.terms.items():
                p = c * other
                if not p.is_zero():
                    out.terms[r] = p
            return out
        acc = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                g = gcd(r1, r2)
                r = (r1 // g) * (r2 // g)  # r1*r2 = g^2 * r, r squarefree
                c = c1 * c2 * g
                if r in acc:
                    c = acc[r] + c
                if c.is_zero():
                    acc.pop(r, None)
                else:
                    acc[r] = c
        out = RadicalValue()
        out.terms = acc
        return out

    __rmul__ = __mul__

    def conj(self):
        v = RadicalValue()
        v.terms = {r: c.conj() for r, c in self.terms.items()}
        return v

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalValue.rational(other)
        if not isinstance(other, RadicalValue):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self.terms.keys())))

    def is_rational(self):
        return all(r == 1 and c.is_rational() for r, c in self.terms.items())

    def rational_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("not rational: %r" % (self,))
        return self.terms[1].rational_value()

    def to_complex(self):
        from math import sqrt
        return sum(c.to_complex() * sqrt(r) for r, c in self.terms.items())

    def serialize(self):
        """List of (radicand, cyclo triples) pairs, radicands ascending."""
        return [[r, self.terms[r].serialize()] for r in sorted(self.terms)]

    @classmethod
    def deserialize(cls, obj, conductor):
        return cls({int(r): CycloNumber.deserialize(tr, conductor)
                    for r, tr in obj})

    def __repr__(self):
        if self.is_zero():
            return "Radical(0)"
        return "Radical(%s)" % ", ".join(
            "sqrt(%d)*%r" % (r, c) for r, c in sorted(self.terms.items()))


def sqrt_half_product(m):
    """Exact value of sqrt(m/2) for a positive integer m."""
    if m < 1:
        raise ValueError("m must be positive")
    s, t = squarefree_split(2 * m)  # sqrt(m/2) = sqrt(2m)/2
    return RadicalValue({t: CycloNumber.rational(Fraction(s, 2))})


def i_power(e):
    """(sqrt(-1))^e as a CycloNumber."""
    return CycloNumber.zeta(4) ** (e % 4)

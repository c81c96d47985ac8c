"""Exact truncated integer power series.

All homology bookkeeping in this package happens through Poincare series:
the generating function sum_d rank(H_d) * t^d.  A TruncatedSeries fixes a
degree cap and stores the integer coefficients of t^0 .. t^cap; every
operation is exact in that range.  Coefficients are plain Python ints, so
they may grow without bound (Hilton-Milnor multiplicities do).

Binary operations require equal caps.  Mixing caps silently would make
"exact up to the cap" meaningless, so it raises UsageError instead.
"""

from __future__ import annotations

import math

from .errors import DomainError, UsageError


class TruncatedSeries:
    __slots__ = ("cap", "coeffs")

    def __init__(self, cap, coeffs):
        if cap < 0:
            raise DomainError("series cap must be >= 0, got %d" % cap)
        coeffs = tuple(coeffs)
        if len(coeffs) != cap + 1:
            raise DomainError(
                "need exactly %d coefficients for cap %d, got %d"
                % (cap + 1, cap, len(coeffs))
            )
        for c in coeffs:
            if not isinstance(c, int):
                raise DomainError("coefficients must be exact ints")
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, cap):
        return cls(cap, (0,) * (cap + 1))

    @classmethod
    def one(cls, cap):
        return cls(cap, (1,) + (0,) * cap)

    @classmethod
    def monomial(cls, cap, degree, coeff=1):
        """The series coeff * t^degree (zero if degree exceeds the cap)."""
        if degree < 0:
            raise DomainError("monomial degree must be >= 0")
        c = [0] * (cap + 1)
        if degree <= cap:
            c[degree] = coeff
        return cls(cap, c)

    @classmethod
    def from_coeffs(cls, cap, coeffs):
        """Build from a possibly short or long coefficient list."""
        c = list(coeffs)[: cap + 1]
        c += [0] * (cap + 1 - len(c))
        return cls(cap, c)

    def __getitem__(self, d):
        if not 0 <= d <= self.cap:
            raise IndexError("degree %d outside 0..%d" % (d, self.cap))
        return self.coeffs[d]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.cap == other.cap
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.cap, self.coeffs))

    def __repr__(self):
        return "TruncatedSeries(cap=%d, %s)" % (self.cap, list(self.coeffs))

    def _check_cap(self, other):
        if not isinstance(other, TruncatedSeries):
            raise UsageError("expected a TruncatedSeries operand")
        if self.cap != other.cap:
            raise UsageError(
                "cap mismatch: %d vs %d (operands must share a cap)"
                % (self.cap, other.cap)
            )

    def add(self, other):
        self._check_cap(other)
        return TruncatedSeries(
            self.cap, (a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def sub(self, other):
        self._check_cap(other)
        return TruncatedSeries(
            self.cap, (a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def neg(self):
        return TruncatedSeries(self.cap, (-a for a in self.coeffs))

    def mul(self, other):
        self._check_cap(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (self.cap + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(self.cap + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(self.cap, out)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg

    def invert(self):
        """Multiplicative inverse.  Needs constant term +-1 (the only
        integer units); anything else raises DomainError."""
        a0 = self.coeffs[0]
        if a0 not in (1, -1):
            raise DomainError(
                "series with constant term %d is not invertible over the integers"
                % a0
            )
        inv = [a0] + [0] * self.cap
        for d in range(1, self.cap + 1):
            s = 0
            for k in range(1, d + 1):
                ak = self.coeffs[k]
                if ak:
                    s += ak * inv[d - k]
            inv[d] = -a0 * s  # a0 == 1/a0 for units
        return TruncatedSeries(self.cap, inv)

    def shift_up(self, k):
        """Multiply by t^k, truncating at the cap."""
        if k < 0:
            raise DomainError("shift must be >= 0")
        return TruncatedSeries(self.cap, ((0,) * k + self.coeffs)[: self.cap + 1])

    def shift_down(self):
        """Divide by t.  Requires a zero constant term; the top coefficient
        of the result is unknowable at this cap and is set to 0, so only
        degrees <= cap-1 of the result are meaningful."""
        if self.coeffs[0] != 0:
            raise DomainError("cannot divide by t: nonzero constant term")
        return TruncatedSeries(self.cap, self.coeffs[1:] + (0,))

    def reduced(self):
        """The same series with the constant term dropped."""
        return TruncatedSeries(self.cap, (0,) + self.coeffs[1:])

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)


def tensor_algebra_series(g):
    """Poincare series of the tensor algebra on generators with series g.

    g must have zero constant term (no degree-0 generators).  The result is
    1/(1-g): one basis element per word in the generators.  This is the
    loop-homology series of a suspension whose generator (desuspended)
    series is g, e.g. g = t + t^2 for S^2 v S^3 gives the Fibonacci series.
    """
    if g.coeffs[0] != 0:
        raise DomainError("generator series must have zero constant term")
    return (TruncatedSeries.one(g.cap) - g).invert()


def loop_sphere_series(m, cap):
    """Loop-homology series of a single sphere of dimension m >= 2:
    coefficient 1 exactly at multiples of m-1."""
    if m < 2:
        raise DomainError("loop_sphere_series needs sphere dimension >= 2")
    return TruncatedSeries(
        cap, (1 if d % (m - 1) == 0 else 0 for d in range(cap + 1))
    )


def polynomial_two_var_series(d1, d2, cap):
    """Series of a free commutative monomial basis on two generators of
    degrees d1, d2: 1/((1-t^d1)(1-t^d2)).

    The monomial count is used for either parity of the degrees; parity
    only affects ring structure, never the rank bookkeeping done here.
    """
    if d1 < 1 or d2 < 1:
        raise DomainError("generator degrees must be >= 1")
    f1 = TruncatedSeries.one(cap) - TruncatedSeries.monomial(cap, d1)
    f2 = TruncatedSeries.one(cap) - TruncatedSeries.monomial(cap, d2)
    return f1.mul(f2).invert()


def geometric_factor(period, mult, cap):
    """(1 - t^period)^(-mult) for mult >= 0, computed by binomials.

    This is the series of `mult` loop-sphere factors of the same dimension
    period+1; mult may be astronomically large (Lyndon counts), which is why
    the closed form is used instead of repeated multiplication.
    """
    if period < 1:
        raise DomainError("period must be >= 1")
    if mult < 0:
        raise DomainError("multiplicity must be >= 0")
    out = [0] * (cap + 1)
    for k in range(0, cap // period + 1):
        out[k * period] = math.comb(mult - 1 + k, k) if mult > 0 else (1 if k == 0 else 0)
    return TruncatedSeries(cap, out)

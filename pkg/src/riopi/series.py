"""Truncated formal power series over exact rationals.

A Series keeps its first ``order`` coefficients; anything beyond the
truncation is unknown, not zero.  Binary operations truncate to the
shorter operand, so every coefficient a Series reports is exact.  All
values are immutable and all operations are pure functions.
"""

from __future__ import annotations

import math
from fractions import Fraction


class SeriesError(ValueError):
    """Base class for series arithmetic failures."""


class DivisionByHigherValuation(SeriesError):
    """Divisor vanishes to higher order than the dividend."""


class CompositionConstantTerm(SeriesError):
    """Inner series of a composition has a nonzero constant term."""


class NotRevertible(SeriesError):
    """Series lacks the shape f = f1*x + ... with f1 != 0."""


class SqrtConstantTerm(SeriesError):
    """Square root requires constant term equal to 1."""


class NonConvergent(SeriesError):
    """Continued fraction does not gain accuracy per level."""


_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class Series:
    """Coefficients c[0..order-1] of sum c[n]*x^n, exact over Fraction.

    The constructor treats ``coeffs`` as a polynomial: when ``order`` is
    given, missing high coefficients are genuinely zero and are padded,
    while surplus ones are dropped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [rational(c) for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError("order must be at least 1")
            del cs[order:]
            cs.extend([_ZERO] * (order - len(cs)))
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        return cls([rational(value)], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([_ONE], order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls([_ZERO, _ONE], order)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or order if all retained are zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return self.order

    def truncate(self, order: int) -> "Series":
        """Keep the first ``order`` coefficients (cannot extend knowledge)."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(self._coeffs[:order])

    def shift(self, k: int = 1) -> "Series":
        """Multiply by x^k; the k new low coefficients are exactly zero."""
        if k < 0:
            return self.unshift(-k)
        return Series((_ZERO,) * k + self._coeffs)

    def unshift(self, k: int = 1) -> "Series":
        """Divide by x^k; requires valuation >= k."""
        if k == 0:
            return self
        if self.valuation() < k:
            raise DivisionByHigherValuation(
                f"valuation {self.valuation()} < {k}, cannot divide by x^{k}")
        if self.order - k < 1:
            raise DivisionByHigherValuation("no coefficients left after shift")
        return Series(self._coeffs[k:])

    def integers(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is not integral."""
        out = []
        for c in self._coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        # Equality compares the common retained prefix; callers that care
        # about matching orders must check .order themselves.
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self._coeffs[:n] == other._coeffs[:n]

    __hash__ = None  # prefix equality is not hash-compatible

    def __repr__(self) -> str:
        show = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"Series([{show}{tail}], order={self.order})"

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _scalar(value):
        if isinstance(value, (int, Fraction)):
            return rational(value)
        return None

    def __add__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series([self._coeffs[i] + other._coeffs[i] for i in range(n)])
        q = self._scalar(other)
        if q is None:
            return NotImplemented
        return Series((self._coeffs[0] + q,) + self._coeffs[1:])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series([self._coeffs[i] - other._coeffs[i] for i in range(n)])
        q = self._scalar(other)
        if q is None:
            return NotImplemented
        return Series((self._coeffs[0] - q,) + self._coeffs[1:])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Series([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            out = [_ZERO] * n
            for i in range(n):
                ai = a[i]
                if not ai:
                    continue
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
            return Series(out)
        q = self._scalar(other)
        if q is None:
            return NotImplemented
        return Series([c * q for c in self._coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self._divide(other)
        q = self._scalar(other)
        if q is None:
            return NotImplemented
        if q == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Series([c / q for c in self._coeffs])

    def __rtruediv__(self, other):
        q = self._scalar(other)
        if q is None:
            return NotImplemented
        return Series.constant(q, self.order)._divide(self)

    def _divide(self, other: "Series") -> "Series":
        vt = other.valuation()
        if vt == other.order:
            raise DivisionByHigherValuation("division by a zero series")
        if vt > self.valuation():
            raise DivisionByHigherValuation(
                f"divisor valuation {vt} exceeds dividend valuation {self.valuation()}")
        num = self.unshift(vt) if vt else self
        den = other.unshift(vt) if vt else other
        n = min(num.order, den.order)
        a, b = num._coeffs, den._coeffs
        inv = _ONE / b[0]
        q = [_ZERO] * n
        for k in range(n):
            acc = a[k]
            for i in range(k):
                qi = q[i]
                if qi:
                    acc -= qi * b[k - i]
            q[k] = acc * inv
        return Series(q)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers")
        result = Series.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- analytic operations ---------------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` (constant term 0) into self; Horner over series."""
        if inner[0] != 0:
            raise CompositionConstantTerm("inner series must have zero constant term")
        n = min(self.order, inner.order)
        return _horner(self._coeffs[:n], inner.truncate(n))

    def revert(self) -> "Series":
        """Compositional inverse fbar with self(fbar) = x, via Lagrange inversion.

        [x^n] fbar = (1/n) [x^(n-1)] (x/f)^n, so one reciprocal and a
        running product of (x/f) give all coefficients exactly.
        """
        if self.order < 2 or self._coeffs[0] != 0 or self._coeffs[1] == 0:
            raise NotRevertible("need f(0)=0 and f'(0)!=0 with order >= 2")
        n = self.order
        u = Series.one(n - 1) / self.unshift(1)
        out = [_ZERO] * n
        out[1] = u[0]
        p = u
        for m in range(2, n):
            p = p * u
            out[m] = p[m - 1] / m
        return Series(out)

    def sqrt(self) -> "Series":
        """Principal square root (constant term +1) of a series with s(0)=1."""
        if self._coeffs[0] != 1:
            raise SqrtConstantTerm("square root requires constant term 1")
        n = self.order
        r = [_ZERO] * n
        r[0] = _ONE
        for k in range(1, n):
            acc = self._coeffs[k]
            for i in range(1, k):
                acc -= r[i] * r[k - i]
            r[k] = acc / 2
        return Series(r)


def _horner(coeffs, inner: Series) -> Series:
    """Evaluate sum coeffs[k]*inner^k at inner's order."""
    n = inner.order
    acc = Series.constant(coeffs[-1], n)
    for k in range(len(coeffs) - 2, -1, -1):
        acc = acc * inner + coeffs[k]
    return acc


def catalan(order: int) -> Series:
    """Catalan number generating function, C_n = binom(2n,n)/(n+1)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return Series([Fraction(math.comb(2 * n, n), n + 1) for n in range(order)])


def cf_eval(levels, order: int) -> Series:
    """Evaluate the continued fraction 1/(a1 - b1/(a2 - b2/...)) exactly.

    ``levels`` is a cyclic list of (alpha, beta) Series pairs; the levels
    repeat forever.  Every alpha needs constant term 1 and every beta
    valuation >= 1, which makes each full cycle of the fixed-point map
    G <- 1/(alpha - beta*G) gain at least one exact coefficient, so at
    most ``order`` cycles are needed.
    """
    if not levels:
        raise ValueError("need at least one (alpha, beta) level")
    prepared = []
    for alpha, beta in levels:
        alpha = alpha.truncate(min(alpha.order, order))
        beta = beta.truncate(min(beta.order, order))
        if alpha.order < order or beta.order < order:
            raise ValueError("levels must be supplied to at least the requested order")
        if alpha[0] != 1:
            raise ValueError("every alpha must have constant term 1")
        if beta.valuation() == 0:
            raise NonConvergent("beta with nonzero constant term cannot converge")
        prepared.append((alpha, beta))
    one = Series.one(order)
    g = one
    for _ in range(order + 1):
        t = g
        for alpha, beta in reversed(prepared):
            t = one / (alpha - beta * t)
        if t.coeffs == g.coeffs:
            return g
        g = t
    raise NonConvergent("continued fraction failed to stabilise")

"""Riordan arrays as values: matrices, group operations, production data,
A/Z/B-sequences and the pseudo-involution tests.

A Riordan array is a pair (g, f) with g(0) = 1 and f(0) = 0 acting as the
lower-triangular matrix t[n][k] = [x^n] g*f^k.  The Bell subgroup is the
f = x*g slice; a Bell array whose signed version (g, -x*g) squares to the
identity is a pseudo-involution, and those are exactly the arrays that
admit a B-sequence recurrence along their rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import Series, _horner

_ZERO = Fraction(0)
_ONE = Fraction(1)


class OutOfOrder(ValueError):
    """Requested matrix data beyond the certified truncation."""


class NoBSequence(ValueError):
    """The array is not a pseudo-involution, so no B-sequence exists."""


class SelfCheckError(RuntimeError):
    """Two supposedly equivalent computations disagreed (truncation bug guard)."""


@dataclass(frozen=True)
class TriangularMatrix:
    """Rows of exact rationals; triangles are staircase, production
    matrices are stored dense lower-Hessenberg."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, n):
        return self.rows[n]

    @property
    def size(self) -> int:
        return len(self.rows)

    def integers(self) -> list[list[int]]:
        out = []
        for row in self.rows:
            if any(c.denominator != 1 for c in row):
                raise ValueError("non-integer matrix entry")
            out.append([c.numerator for c in row])
        return out


@dataclass(frozen=True)
class ProductionData:
    z: tuple[Fraction, ...]
    a: tuple[Fraction, ...]


@dataclass(frozen=True)
class BSequence:
    values: tuple[Fraction, ...]

    @property
    def certified(self) -> int:
        return len(self.values)


class RiordanArray:
    """Pair (g, f); g needs unit constant term, f zero constant term.

    f'(0) may be zero for arrays used only through the fundamental
    theorem (ftra_apply); group operations that need the compositional
    inverse of f raise NotRevertible on such arrays.
    """

    __slots__ = ("g", "f")

    def __init__(self, g: Series, f: Series):
        if g[0] != 1:
            raise ValueError("g must have constant term 1")
        if f[0] != 0:
            raise ValueError("f must have zero constant term")
        self.g = g
        self.f = f

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def __repr__(self):
        return f"RiordanArray(g={self.g!r}, f={self.f!r})"

    # -- matrix realisation ----------------------------------------------

    def entry(self, n: int, k: int) -> Fraction:
        """t[n][k] = [x^n] g*f^k."""
        if n < 0 or k < 0:
            raise OutOfOrder("negative index")
        if n >= self.order:
            raise OutOfOrder(f"row {n} beyond certified order {self.order}")
        if k > n:
            return _ZERO
        col = self.g.truncate(n + 1)
        f = self.f.truncate(n + 1)
        for _ in range(k):
            col = col * f
        return col[n]

    def triangle(self, size: int) -> TriangularMatrix:
        """First ``size`` rows, row n holding columns 0..n."""
        if size < 1 or size > self.order:
            raise OutOfOrder(f"size {size} outside 1..{self.order}")
        g = self.g.truncate(size)
        f = self.f.truncate(size)
        rows = [[_ZERO] * (n + 1) for n in range(size)]
        col = g
        for k in range(size):
            for n in range(k, size):
                rows[n][k] = col[n]
            if k + 1 < size:
                col = col * f
        return TriangularMatrix(tuple(tuple(r) for r in rows))

    # -- group structure ---------------------------------------------------

    def multiply(self, other: "RiordanArray") -> "RiordanArray":
        """(g, f) . (u, v) = (g * u(f), v(f))."""
        return RiordanArray(self.g * other.g.compose(self.f),
                            other.f.compose(self.f))

    __mul__ = multiply

    def inverse(self) -> "RiordanArray":
        """(g, f)^-1 = (1 / g(fbar), fbar) with fbar the reversion of f."""
        fbar = self.f.revert()
        return RiordanArray(1 / self.g.compose(fbar), fbar)

    def ftra_apply(self, h: Series) -> Series:
        """Fundamental theorem: the array acts on h by h -> g * h(f)."""
        return self.g * h.compose(self.f)

    # -- production structure ----------------------------------------------

    def a_and_z(self) -> ProductionData:
        """A(x) = x/fbar and Z(x) = (1 - 1/g(fbar))/fbar as coefficient lists."""
        fbar = self.f.revert()
        a = 1 / fbar.unshift(1)
        w = 1 - 1 / self.g.compose(fbar)
        z = w / fbar
        return ProductionData(z=z.coeffs, a=a.coeffs)

    def production_matrix(self, size: int | None = None) -> TriangularMatrix:
        """Dense lower-Hessenberg production matrix P with first column the
        Z-sequence and shifted copies of the A-sequence in the other columns.

        Defaults to size order-2 so no edge coefficient of fbar is consumed.
        The Hessenberg build is cross-checked against P = M^-1 * Mbar on the
        dense truncation; disagreement raises SelfCheckError.
        """
        if size is None:
            size = self.order - 2
        if size < 1 or size + 1 > self.order:
            raise OutOfOrder(f"production size {size} outside 1..{self.order - 1}")
        data = self.a_and_z()
        z, a = data.z, data.a
        rows = []
        for i in range(size):
            row = [z[i]]
            for j in range(1, size):
                row.append(a[i - j + 1] if 0 <= i - j + 1 else _ZERO)
            rows.append(tuple(row))
        built = TriangularMatrix(tuple(rows))
        if built.rows != _production_dense(self, size).rows:
            raise SelfCheckError("production matrix mismatch between (Z, A) "
                                 "build and dense M^-1 * Mbar")
        return built

    def is_bell(self) -> bool:
        """True iff f = x*g over the common order; then A = 1 + x*Z must hold."""
        g, f = self.g, self.f
        top = min(f.order, g.order + 1)
        if any(f[k] != g[k - 1] for k in range(1, top)):
            return False
        if self.order >= 3:
            data = self.a_and_z()
            n = min(len(data.a), len(data.z) + 1)
            if data.a[0] != 1 or any(data.a[k] != data.z[k - 1] for k in range(1, n)):
                raise SelfCheckError("Bell array violating A = 1 + x*Z")
        return True


def bell(g: Series) -> RiordanArray:
    """Bell-subgroup array (g, x*g)."""
    return RiordanArray(g, g.shift(1))


def _production_dense(array: RiordanArray, size: int) -> TriangularMatrix:
    # P = M^-1 * Mbar where Mbar is M with its first row dropped; solved by
    # forward substitution since M is lower triangular.
    tri = array.triangle(size + 1)
    m0 = [list(tri[i]) + [_ZERO] * (size - 1 - i) for i in range(size)]
    m1 = [list(tri[i + 1])[:size] + [_ZERO] * max(0, size - i - 2)
          for i in range(size)]
    p: list[list[Fraction]] = []
    for r in range(size):
        row = m1[r][:]
        for k in range(r):
            c = m0[r][k]
            if c:
                row = [row[j] - c * p[k][j] for j in range(size)]
        inv = _ONE / m0[r][r]
        p.append([v * inv for v in row])
    return TriangularMatrix(tuple(tuple(r) for r in p))


# -- pseudo-involutions ----------------------------------------------------


def is_pseudo_involution(g: Series, size: int | None = None) -> bool:
    """Does (g, -x*g) square to the identity on the size x size truncation?

    Ground truth is the matrix-square test on the signed Bell triangle;
    the reversion fixed point Rev(-x*g) = -x*g is recomputed alongside as
    a guard, and the two must agree.
    """
    if g[0] != 1:
        raise ValueError("g must have constant term 1")
    if size is None:
        size = g.order
    if size < 1 or size > g.order:
        raise OutOfOrder(f"size {size} outside 1..{g.order}")
    tri = bell(g.truncate(size)).triangle(size)
    signed = [[(-_ONE) ** k * tri[n][k] for k in range(n + 1)] for n in range(size)]
    matrix_ok = True
    for n in range(size):
        for k in range(n + 1):
            acc = _ZERO
            for j in range(k, n + 1):
                acc += signed[n][j] * signed[j][k]
            if acc != (1 if n == k else 0):
                matrix_ok = False
                break
        if not matrix_ok:
            break
    mxg = -(g.truncate(size).shift(1))
    reversion_ok = mxg.revert().truncate(size).coeffs == mxg.truncate(size).coeffs
    if matrix_ok != reversion_ok:
        raise SelfCheckError("matrix-square and reversion tests disagree")
    return matrix_ok


def b_extract(g: Series) -> BSequence:
    """B-sequence of the pseudo-involution (g, x*g).

    Column 0 of the recurrence t[n+1][k] = t[n][k-1] + sum_j b_j*t[n-j][k+j]
    gives a triangular system whose pivots t[m][m] are all 1, so each b_m
    is read off without division:

        b_m = t[2m+1][0] - sum_{j<m} b_j * t[2m-j][j]

    An order-N series certifies (N-1)//2 entries.  Afterwards the full
    recurrence is verified at every cell the certified prefix can reach;
    any failure (impossible for a genuine pseudo-involution) raises
    NoBSequence.
    """
    if g[0] != 1:
        raise ValueError("g must have constant term 1")
    size = g.order
    if not is_pseudo_involution(g, size):
        raise NoBSequence("(g, x*g) is not a pseudo-involution")
    tri = bell(g).triangle(size)
    certified = (size - 1) // 2
    b: list[Fraction] = []
    for m in range(certified):
        acc = tri[2 * m + 1][0]
        for j in range(m):
            acc -= b[j] * tri[2 * m - j][j]
        b.append(acc)
    for n in range(size - 1):
        for k in range(n + 2):
            if (n - k) // 2 >= certified:
                continue  # needs b entries beyond the certified prefix
            rhs = tri[n][k - 1] if k else _ZERO
            for j in range((n - k) // 2 + 1):
                rhs += b[j] * tri[n - j][k + j]
            if tri[n + 1][k] != rhs:
                raise NoBSequence(f"recurrence fails at row {n + 1}, column {k}")
    return BSequence(tuple(b))


def a_from_b(b: Series, order: int) -> Series:
    """Unique A with A(0) = 1 solving A(x) = 1 + x*B(x^2 / A(x)).

    Coefficient n of the right side only involves coefficients below n of
    A, so iterating the map from A = 1 locks in at least one further
    coefficient per pass.
    """
    if b.order < order // 2:
        raise ValueError(f"need B to order {order // 2} for A to order {order}")
    x2 = Series([0, 0, 1], order)
    one = Series.one(order)
    a = one
    for _ in range(order + 1):
        # Horner at order-1: B's unseen tail has valuation >= order there,
        # so evaluating with only the supplied coefficients stays exact.
        inner = (x2 / a).truncate(max(order - 1, 1))
        updated = (one + _horner(b.coeffs, inner).shift(1).truncate(order))
        if updated.coeffs == a.coeffs:
            return a
        a = updated
    raise SelfCheckError("A(x) fixed point failed to stabilise")


def a_from_g(g: Series) -> Series:
    """A-sequence generating function 1 / g(-x) of the pseudo-involution."""
    if g[0] != 1:
        raise ValueError("g must have constant term 1")
    alternated = Series([(-1) ** n * c for n, c in enumerate(g.coeffs)])
    return 1 / alternated

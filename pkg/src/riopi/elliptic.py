"""From the curve family y^2 - a*x*y - y = x^3 - x to a pseudo-involution.

The pipeline follows the worked transformation chain stage by stage:
solve the quadratic for the branch with y = x + O(x^2), strip two terms,
form a reciprocal fraction, revert, build the intermediate f, and finish
with a fundamental-theorem application.  Each curve lands on the family
member with parameters (2-a, 1-a, -(a^2-3a+1)) and B-sequence generating
function (2-a + (1-3a+a^2)x)/(1+(1-a)x), and the Hankel transform of f
is a (1, 1-a) Somos-4 sequence; all of that is cross-checked in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .family import FamilyParams
from .hankel import hankel_transform
from .riordan import BSequence, RiordanArray, SelfCheckError, is_pseudo_involution
from .series import Series, rational
from .somos import SomosParams, SomosReport, somos4_check

# Stage losses: the strip drops two orders and the final division one
# more, so working at order+6 certifies the requested order with room.
_MARGIN = 6


@dataclass(frozen=True)
class CurveParam:
    a: Fraction

    @classmethod
    def of(cls, a) -> "CurveParam":
        return cls(rational(a))


@dataclass(frozen=True)
class PipelineTrace:
    branch: Series
    stripped: Series
    fraction: Series
    reverted: Series
    f: Series
    g: Series


def _branch_radicand(a: Fraction, order: int) -> Series:
    # 1 + 2(a-2)x + a^2 x^2 + 4x^3 under the square root of the y-branch
    return Series([1, 2 * (a - 2), a * a, 4], order)


def curve_branch(curve, order: int) -> Series:
    """Quadratic branch y with y(0) = 0, y'(0) = 1."""
    a = _param(curve)
    root = _branch_radicand(a, order).sqrt()
    return (Series([1, a], order) - root) / 2


def pipeline(curve, order: int) -> PipelineTrace:
    """Run the whole curve-to-involution chain, keeping every stage."""
    a = _param(curve)
    work = order + _MARGIN
    y = curve_branch(a, work)
    if y[1] != 1:
        raise SelfCheckError("curve branch must start x + O(x^2)")
    stripped = (y - Series.x(work)).unshift(2)
    fraction = 1 / (Series([1, -1], work) - stripped.shift(2))
    # The fraction stage collapses to 1/(1 - y), with closed form
    # 2/(1 - a*x + sqrt(radicand)); recompute it that way as a guard.
    closed = Series.constant(2, work) / (
        Series([1, -a], work) + _branch_radicand(a, work).sqrt())
    if fraction.coeffs != closed.truncate(fraction.order).coeffs:
        raise SelfCheckError("fraction stage disagrees with its closed form")
    reverted = fraction.shift(1).revert()
    if reverted.valuation() != 1:
        raise SelfCheckError("reverted stage must have valuation 1")
    f = 1 / (1 - reverted.unshift(1).shift(2))
    numerator = f * Series([1, a - 1], f.order) - 1
    denominator = (f * Series([a - 1, a], f.order)).shift(1)
    h = numerator / denominator
    outer_g = 1 / Series([1, a - 1], work)
    outer = RiordanArray(outer_g, -(outer_g.shift(1)))
    g = outer.ftra_apply(h).truncate(order)
    if not is_pseudo_involution(g, order):
        raise SelfCheckError("pipeline output failed the pseudo-involution test")
    return PipelineTrace(branch=y.truncate(order),
                         stripped=stripped.truncate(order),
                         fraction=fraction.truncate(order),
                         reverted=reverted.truncate(order),
                         f=f.truncate(order),
                         g=g)


def f_from_curve(curve, order: int) -> Series:
    """Intermediate f straight from its closed form
    2x / (sqrt(1 + 2ax + a^2 x^2 - 4x^3 + 4(1-a)x^4) + (2-a)x - 1)."""
    a = _param(curve)
    work = order + 2
    radicand = Series([1, 2 * a, a * a, -4, 4 * (1 - a)], work)
    denominator = radicand.sqrt() + Series([-1, 2 - a], work)
    return (Series([0, 2], work) / denominator).truncate(order)


@dataclass(frozen=True)
class CurveBSequence:
    """B(x) = (2-a + (1-3a+a^2)x) / (1 + (1-a)x) plus its expansion."""

    numerator: tuple[Fraction, Fraction]
    denominator: tuple[Fraction, Fraction]
    prefix: BSequence

    def closed_form(self) -> str:
        n0, n1 = self.numerator
        d1 = self.denominator[1]
        return f"({n0} + {n1}*x)/(1 + {d1}*x)"


def b_from_curve(curve, terms: int = 12) -> CurveBSequence:
    """Closed-form B-sequence of the curve's pseudo-involution."""
    a = _param(curve)
    numerator = (2 - a, 1 - 3 * a + a * a)
    denominator = (Fraction(1), 1 - a)
    expansion = Series(numerator, terms) / Series(denominator, terms)
    return CurveBSequence(numerator=numerator, denominator=denominator,
                          prefix=BSequence(expansion.coeffs))


def family_params_from_curve(curve) -> FamilyParams:
    """Family coordinates (2-a, 1-a, -(a^2-3a+1)) of the curve's member."""
    a = _param(curve)
    return FamilyParams(2 - a, 1 - a, -(a * a - 3 * a + 1))


def curve_somos_check(curve, order: int = 24) -> SomosReport:
    """Check the Hankel transform of f against the (1, 1-a) Somos-4 form."""
    a = _param(curve)
    values = hankel_transform(f_from_curve(a, order).coeffs).values
    params = SomosParams(Fraction(1), 1 - a)
    return somos4_check(values, params, label="curve f hankel")


def _param(curve) -> Fraction:
    if isinstance(curve, CurveParam):
        return curve.a
    return rational(curve)

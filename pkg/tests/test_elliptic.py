from fractions import Fraction

import pytest

from riopi.elliptic import (
    CurveParam,
    b_from_curve,
    curve_branch,
    curve_somos_check,
    f_from_curve,
    family_params_from_curve,
    pipeline,
)
from riopi.family import FamilyParams, g_family
from riopi.hankel import hankel_transform
from riopi.riordan import b_extract, is_pseudo_involution
from riopi.series import Series, cf_eval

from conftest import rand_fraction


class TestBranch:
    def test_printed_branches(self):
        assert curve_branch(3, 6).integers() == [0, 1, -2, 1, 3, -7]
        assert curve_branch(2, 5).integers() == [0, 1, -1, -1, 1]

    def test_symbolic_leading_terms(self, rng):
        for _ in range(6):
            a = rand_fraction(rng)
            y = curve_branch(a, 4)
            assert list(y.coeffs) == [0, 1, 1 - a, 1 - 3 * a + a * a]

    def test_branch_solves_the_curve(self, rng):
        # y^2 - a*x*y - y = x^3 - x termwise
        for a in (Fraction(3), Fraction(-2), Fraction(1, 2)):
            y = curve_branch(a, 12)
            x = Series.x(12)
            lhs = y * y - a * x * y - y
            rhs = Series([0, -1, 0, 1], 12)
            assert lhs.coeffs == rhs.coeffs


class TestPipeline:
    def test_a3_reaches_family_member(self):
        trace = pipeline(3, 16)
        assert trace.g.coeffs == g_family(FamilyParams.of(-1, -2, -1), 16).coeffs
        assert trace.g.integers()[:11] == [1, -1, 1, -2, 4, -9, 21, -50, 122, -302, 758]

    def test_a2_printed_sequence(self):
        got = pipeline(2, 16).g.integers()
        assert got == [1, 0, 0, -1, 0, -1, 2, -1, 5, -6, 9, -22, 28, -57, 104, -163]
        assert pipeline(2, 16).g.coeffs == g_family(FamilyParams.of(0, -1, 1), 16).coeffs

    def test_a_minus3_printed_sequence(self):
        got = pipeline(-3, 11).g.integers()
        assert got == [1, 5, 25, 124, 610, 2979, 14457, 69784, 335330, 1605334, 7662014]

    def test_trace_stage_relations(self):
        trace = pipeline(3, 12)
        # branch drops its first two terms to make the stripped stage
        assert (trace.branch - Series.x(12)).unshift(2).coeffs == \
            trace.stripped.coeffs[:10]
        # stripped recombines into the fraction stage
        rebuilt = 1 / (Series([1, -1], 12) - trace.stripped.shift(2).truncate(12))
        assert rebuilt.coeffs == trace.fraction.coeffs
        # the reverted stage really is the reversion of x * fraction
        assert trace.fraction.shift(1).truncate(12).revert().coeffs == \
            trace.reverted.coeffs[:12]
        assert trace.f.coeffs == f_from_curve(3, 12).coeffs

    def test_pipeline_output_is_always_involutory(self, rng):
        for _ in range(5):
            a = rand_fraction(rng)
            assert is_pseudo_involution(pipeline(a, 10).g, 10)

    def test_a1_degenerate_assembly_denominator(self):
        # at a = 1 the final division is by a valuation-2 series
        trace = pipeline(1, 14)
        assert trace.g.coeffs == g_family(FamilyParams.of(1, 0, 1), 14).coeffs


class TestIntermediateF:
    def test_printed_expansions(self):
        assert f_from_curve(0, 15).integers() == [
            1, 0, 1, -1, 1, -1, 0, 0, 0, -2, 4, -4, -1, 11, -16]
        assert f_from_curve(3, 14).integers() == [
            1, 0, 1, -1, 4, -10, 30, -84, 237, -653, 1771, -4699, 12173, -30625]

    def test_unit_constant_term(self, rng):
        for _ in range(6):
            assert f_from_curve(rand_fraction(rng), 8)[0] == 1

    def test_agrees_with_pipeline(self, rng):
        for a in (Fraction(1), Fraction(-2), Fraction(2, 3)):
            assert f_from_curve(a, 14).coeffs == pipeline(a, 14).f.coeffs


class TestBSequence:
    def test_a_minus3(self):
        cb = b_from_curve(-3, terms=5)
        assert cb.numerator == (5, 19)
        assert cb.denominator == (1, 4)
        assert list(cb.prefix.values) == [5, -1, 4, -16, 64]

    def test_table_rows(self):
        table = {
            0: [2, -1, 1, -1, 1, -1],
            1: [1, -1, 0, 0, 0],
            2: [0, -1, -1, -1],
            3: [-1, -1, -2, -4, -8],
            4: [-2, -1, -3, -9, -27],
            5: [-3, -1, -4, -16],
        }
        for a, row in table.items():
            assert list(b_from_curve(a, terms=len(row)).prefix.values) == row

    def test_general_shape(self, rng):
        # 2-a, -1, then -(a-1)^(n-1)
        for _ in range(5):
            a = rand_fraction(rng)
            values = b_from_curve(a, terms=8).prefix.values
            assert values[0] == 2 - a
            assert all(values[n] == -((a - 1) ** (n - 1)) for n in range(1, 8))

    def test_matches_extraction_from_pipeline(self, rng):
        for a in (Fraction(-3), Fraction(4), Fraction(1, 2)):
            g = pipeline(a, 17).g
            extracted = b_extract(g)
            closed = b_from_curve(a, terms=extracted.certified)
            assert extracted.values == closed.prefix.values


class TestFamilyCoordinates:
    @pytest.mark.parametrize("a,expected", [
        (2, (0, -1, 1)),
        (3, (-1, -2, -1)),
        (0, (2, 1, -1)),
    ])
    def test_known_points(self, a, expected):
        p = family_params_from_curve(a)
        assert (p.a, p.b, p.c) == tuple(Fraction(v) for v in expected)

    def test_pipeline_equals_family_member(self, rng):
        for _ in range(20):
            a = rand_fraction(rng)
            params = family_params_from_curve(a)
            assert pipeline(a, 24).g.coeffs == g_family(params, 24).coeffs

    def test_curve_weight_is_always_one(self, rng):
        # (2-a)(1-a) - (a^2 - 3a + 1) = 1, so alpha = (ab+c)^2 = 1
        for _ in range(8):
            a = rand_fraction(rng)
            assert family_params_from_curve(a).somos_weight == 1

    def test_closing_continued_fraction(self, rng):
        for _ in range(5):
            a = rand_fraction(rng, 3)
            alpha = Series([1, a - 2, a - 1], 16)
            beta = Series([0, 0, a - 1, 1 - 3 * a + a * a], 16)
            assert cf_eval([(alpha, beta)], 16).coeffs == pipeline(a, 16).g.coeffs


class TestCurveHankel:
    def test_g_hankel_prefix(self, rng):
        for _ in range(4):
            a = rand_fraction(rng, 3)
            h = hankel_transform(pipeline(a, 13).g.coeffs).values
            assert h[:6] == (1, 0, -1, -1, 1 - a, -a * a + 3 * a - 1)

    def test_f_hankel_prefix(self, rng):
        for _ in range(4):
            a = rand_fraction(rng, 3)
            h = hankel_transform(f_from_curve(a, 13).coeffs).values
            assert h[:5] == (1, 1, a - 1, a * a - 3 * a + 1,
                             -a ** 3 + 4 * a * a - 6 * a + 2)

    def test_somos_check_printed_cases(self):
        rep = curve_somos_check(-3, 16)
        assert rep.ok and rep.params.beta == 4
        rep = curve_somos_check(0, 16)
        assert rep.ok and rep.params.beta == 1

    def test_a1_is_degenerate(self):
        rep = curve_somos_check(1, 16)
        assert rep.ok
        assert rep.params == type(rep.params)(Fraction(1), Fraction(0))
        assert rep.degenerate

    def test_a0_transform_is_printed_divisibility_sequence(self):
        values = hankel_transform(f_from_curve(0, 16).coeffs).values
        assert list(values)[:8] == [1, 1, -1, 1, 2, -1, -3, -5]

    def test_curve_param_wrapper(self):
        assert curve_branch(CurveParam.of("3"), 4).integers() == [0, 1, -2, 1]

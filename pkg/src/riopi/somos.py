"""Somos-4 recurrence verification and parameter fitting.

All checks use the product form

    t[n] * t[n-4] == alpha * t[n-1] * t[n-3] + beta * t[n-2]^2

which is total: the usual division form is undefined whenever t[n-4] is
zero, and the transforms handled here do contain zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .family import FamilyParams, companion, g_family
from .hankel import hankel_transform
from .series import rational


class Underdetermined(ValueError):
    """Every candidate 2x2 fitting system is singular."""


class NoSomosFit(ValueError):
    """A local fit exists but fails somewhere in the sequence."""


@dataclass(frozen=True)
class SomosParams:
    alpha: Fraction
    beta: Fraction

    @property
    def degenerate(self) -> bool:
        return self.alpha == 0 or self.beta == 0


@dataclass(frozen=True)
class SomosReport:
    params: SomosParams | None
    start: int
    end: int
    failures: tuple[int, ...]
    degenerate: bool = False
    label: str = ""

    @property
    def ok(self) -> bool:
        return self.params is not None and not self.failures


def somos4_check(terms, params: SomosParams, label: str = "") -> SomosReport:
    """Verify the product form at every index n in 4..len(terms)-1."""
    t = [rational(v) for v in terms]
    if len(t) < 5:
        raise ValueError("need at least 5 terms to check a Somos-4 relation")
    failures = tuple(
        n for n in range(4, len(t))
        if t[n] * t[n - 4] != params.alpha * t[n - 1] * t[n - 3] + params.beta * t[n - 2] ** 2
    )
    return SomosReport(params=params, start=4, end=len(t) - 1,
                       failures=failures, degenerate=params.degenerate,
                       label=label)


def somos4_fit(terms) -> SomosParams:
    """Fit (alpha, beta) from the first nonsingular pair of relation rows,
    then insist the whole sequence satisfies the fit."""
    t = [rational(v) for v in terms]
    if len(t) < 6:
        raise ValueError("need at least 6 terms to fit Somos-4 parameters")
    rows = [(t[n - 1] * t[n - 3], t[n - 2] ** 2, t[n] * t[n - 4])
            for n in range(4, len(t))]
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
            if det == 0:
                continue
            alpha = (rows[i][2] * rows[j][1] - rows[j][2] * rows[i][1]) / det
            beta = (rows[i][0] * rows[j][2] - rows[j][0] * rows[i][2]) / det
            params = SomosParams(alpha, beta)
            report = somos4_check(t, params)
            if report.failures:
                raise NoSomosFit(
                    f"({alpha}, {beta}) fits rows {i}, {j} but fails at "
                    f"indices {list(report.failures)}")
            return params
    raise Underdetermined("all candidate 2x2 systems are singular")


@dataclass(frozen=True)
class ConjectureReport:
    """Labelled sub-checks of the family/companion Somos-4 conjecture."""

    params: SomosParams
    family: SomosReport
    companion: SomosReport
    degenerate: bool

    @property
    def ok(self) -> bool:
        return not self.family.failures and not self.companion.failures


def conjecture_family(p: FamilyParams, order: int = 28) -> ConjectureReport:
    """Test that the family Hankel tail (from index 2, where the printed
    transforms start) and the full companion Hankel transform are
    ((ab+c)^2, b*(ab+c)^2) Somos-4 sequences.  Failures are report data,
    not errors: this is a conjecture check."""
    k = p.somos_weight
    params = SomosParams(k * k, p.b * k * k)
    family_tail = hankel_transform(g_family(p, order).coeffs).values[2:]
    fam = somos4_check(family_tail, params, label="family hankel tail (offset 2)")
    comp_values = hankel_transform(companion(p, order).coeffs).values
    comp = somos4_check(comp_values, params, label="companion hankel")
    return ConjectureReport(params=params, family=fam, companion=comp,
                            degenerate=(k == 0))

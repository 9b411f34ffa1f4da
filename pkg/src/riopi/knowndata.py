"""Embedded golden data: printed sequence prefixes, matrix fragments and
Somos parameter claims, keyed by OEIS tag where one exists.

Prefixes are stored verbatim as printed; nothing here is fetched from
the network.  The ``verify`` command recomputes every entry from scratch
and diffs exactly, which makes this table the regression corpus for the
whole package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import elliptic, family
from .family import FamilyParams, binomial_transform
from .hankel import hankel_transform
from .series import catalan, rational


@dataclass(frozen=True)
class KnownSequence:
    label: str            # OEIS tag or a descriptive name
    kind: str             # generator: catalan|family|ad|companion|curve_g|curve_f|curve_branch
    params: tuple[str, ...]
    transform: str        # ""|hankel|hankel_tail_neg|binomial_inverse|diff|prepend:v,v
    prefix: tuple[int, ...]


KNOWN_SEQUENCES: tuple[KnownSequence, ...] = (
    KnownSequence("A000108", "catalan", (), "",
                  (1, 1, 2, 5, 14, 42)),
    KnownSequence("A023431", "ad", ("1", "1"), "",
                  (1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212)),
    KnownSequence("A091565", "ad", ("1", "2"), "",
                  (1, 1, 1, 3, 7, 13, 29, 71, 163, 377, 913)),
    KnownSequence("A091561", "ad", ("2", "1"), "",
                  (1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869, 7942)),
    KnownSequence("A152225", "ad", ("2", "1"), "prepend:1",
                  (1, 1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869, 7942)),
    KnownSequence("hankel(ad(1,1))", "ad", ("1", "1"), "hankel",
                  (1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0)),
    KnownSequence("A004148", "family", ("1", "-1", "0"), "",
                  (1, 1, 1, 2, 4, 8, 17, 37, 82)),
    KnownSequence("A187256", "family", ("2", "-1", "0"), "",
                  (1, 2, 4, 10, 28, 82, 248, 770, 2440)),
    KnownSequence("A105633", "family", ("2", "-1", "1"), "",
                  (1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550, 10455)),
    KnownSequence("A105633+1", "family", ("2", "-1", "1"), "prepend:1",
                  (1, 1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550, 10455)),
    KnownSequence("A007477", "family", ("2", "-1", "1"), "binomial_inverse",
                  (1, 1, 1, 2, 3, 6, 11, 22, 44, 90, 187, 392)),
    KnownSequence("g(2,-2,3)", "family", ("2", "-2", "3"), "",
                  (1, 2, 4, 9, 22, 58, 162, 472, 1418, 4357, 13618)),
    KnownSequence("hankel(g(2,-2,3))", "family", ("2", "-2", "3"), "hankel",
                  (1, 0, -1, -1, -2, -3, 5, 28, 67, 411, 506)),
    KnownSequence("g(-1,2,1)", "family", ("-1", "2", "1"), "",
                  (1, -1, 1, 0, -2, 3, 1, -12, 20, 4, -84)),
    KnownSequence("hankel(g(-1,2,1))", "family", ("-1", "2", "1"), "hankel",
                  (1, 0, -1, -1, 2, -1, -9, 16, 73, 145, -1442)),
    KnownSequence("A178075", "family", ("-1", "2", "1"), "hankel_tail_neg",
                  (1, 1, -2, 1, 9, -16, -73, -145, 1442)),
    KnownSequence("g(-1,-2,-1)", "family", ("-1", "-2", "-1"), "",
                  (1, -1, 1, -2, 4, -9, 21, -50, 122, -302, 758)),
    KnownSequence("hankel(g(-1,-2,-1))", "family", ("-1", "-2", "-1"), "hankel",
                  (1, 0, -1, -1, -2, -1, 7, 16, 57, 113, -670)),
    KnownSequence("curve-f(3)", "curve_f", ("3",), "",
                  (1, 0, 1, -1, 4, -10, 30, -84, 237, -653, 1771, -4699, 12173, -30625)),
    KnownSequence("hankel(curve-f(3))", "curve_f", ("3",), "hankel",
                  (1, 1, 2, 1, -7, -16, -57)),
    KnownSequence("curve-branch(3)", "curve_branch", ("3",), "",
                  (0, 1, -2, 1, 3, -7)),
    KnownSequence("curve-branch(2)", "curve_branch", ("2",), "",
                  (0, 1, -1, -1, 1)),
    KnownSequence("curve-g(2)", "curve_g", ("2",), "",
                  (1, 0, 0, -1, 0, -1, 2, -1, 5, -6, 9, -22, 28, -57, 104, -163)),
    KnownSequence("hankel(curve-g(2))", "curve_g", ("2",), "hankel",
                  (1, 0, -1, -1, -1, 1, 2, 3, 1, -7, -11)),
    KnownSequence("A050512", "curve_g", ("2",), "hankel_tail_neg",
                  (1, 1, 1, -1, -2, -3, -1, 7, 11)),
    KnownSequence("A025273-related", "curve_g", ("2",), "binomial_inverse",
                  (1, -1, 1, -2, 5, -12, 29, -72, 182, -466, 1207)),
    KnownSequence("A025250-signed", "curve_g", ("2",), "diff",
                  (1, -1, 0, -1, 1, -1, 3, -3, 6, -11, 15, -31)),
    KnownSequence("A025258-related", "companion", ("-1", "1", "2"), "",
                  (1, 1, 0, 0, 2, 3, 1, 2, 11, 17, 12)),
    KnownSequence("hankel(companion(-1,1,2))", "companion", ("-1", "1", "2"), "hankel",
                  (1, -1, -2, -1, 5, 9, -8, -41, -61, 241)),
    KnownSequence("companion(-1,-1,-2)", "companion", ("-1", "-1", "-2"), "",
                  (1, 1, 2, 2, 2, -1, -7, -20, -37, -53, -40, 49, 301)),
    KnownSequence("hankel(companion(-1,-1,-2))", "companion", ("-1", "-1", "-2"), "hankel",
                  (1, 1, -2, -3, -7, 5, 32, 83, 87, -821)),
    KnownSequence("companion(1,2,-1)", "companion", ("1", "2", "-1"), "",
                  (1, -1, -1, 4, -4, -5, 23, -28, -28, 164, -232, -166)),
    KnownSequence("hankel(companion(1,2,-1))", "companion", ("1", "2", "-1"), "hankel",
                  (1, -2, 1, 9, -16, -73, -145, 1442, 3951, -49121)),
    KnownSequence("companion(-1,-2,-1)", "companion", ("-1", "-2", "-1"), "",
                  (1, 1, 3, 6, 14, 33, 79, 194, 482, 1214, 3090, 7936, 20544)),
    KnownSequence("hankel(companion(-1,-2,-1))", "companion", ("-1", "-2", "-1"), "hankel",
                  (1, 2, 1, -7, -16, -57, -113, 670, 3983, 23647)),
    KnownSequence("A025243-related", "companion", ("-1", "-2", "-1"), "prepend:1,2",
                  (1, 2, 1, 1, 3, 6, 14, 33, 79, 194, 482, 1214, 3090, 7936, 20544)),
    KnownSequence("curve-g(-3)", "curve_g", ("-3",), "",
                  (1, 5, 25, 124, 610, 2979, 14457, 69784, 335330, 1605334, 7662014)),
    KnownSequence("hankel(curve-g(-3))", "curve_g", ("-3",), "hankel",
                  (1, 0, -1, -1, 4, -19, -83, -1112, 12171)),
    KnownSequence("somos(1,4)-curve(-3)", "curve_f", ("-3",), "hankel",
                  (1, 1, -4, 19, 83, 1112, -12171)),
    KnownSequence("curve-g(0)", "curve_g", ("0",), "",
                  (1, 2, 4, 7, 10, 9, -6, -53, -151, -284, -301, 278, 2482, 7717)),
    KnownSequence("hankel(curve-g(0))", "curve_g", ("0",), "hankel",
                  (1, 0, -1, -1, 1, -1, -2, 1, 3, 5)),
    KnownSequence("A006769", "curve_f", ("0",), "hankel",
                  (1, 1, -1, 1, 2, -1, -3, -5)),
    KnownSequence("curve-f(0)", "curve_f", ("0",), "",
                  (1, 0, 1, -1, 1, -1, 0, 0, 0, -2, 4, -4, -1, 11, -16)),
)


# (sequence label, offset into its values, (alpha, beta)) claims; the
# product form must hold over the full remaining range.
SOMOS_CLAIMS: tuple[tuple[str, int, tuple[int, int]], ...] = (
    ("hankel(g(2,-2,3))", 2, (1, -2)),
    ("hankel(g(-1,2,1))", 2, (1, 2)),
    ("hankel(g(-1,-2,-1))", 2, (1, -2)),
    ("hankel(curve-g(2))", 2, (1, -1)),
    ("A178075", 0, (1, 2)),
    ("A050512", 0, (1, -1)),
    ("hankel(companion(-1,1,2))", 0, (1, 1)),
    ("hankel(companion(-1,-1,-2))", 0, (1, -1)),
    ("hankel(companion(1,2,-1))", 0, (1, 2)),
    ("hankel(companion(-1,-2,-1))", 0, (1, -2)),
    ("hankel(curve-f(3))", 0, (1, -2)),
    ("somos(1,4)-curve(-3)", 0, (1, 4)),
    ("A006769", 0, (1, 1)),
)


# Printed matrix fragments.
TRIANGLE_CURVE_A_MINUS3: tuple[tuple[int, ...], ...] = (
    (1,),
    (5, 1),
    (25, 10, 1),
    (124, 75, 15, 1),
    (610, 498, 150, 20, 1),
    (2979, 3085, 1247, 250, 25, 1),
    (14457, 18258, 9300, 2496, 375, 30, 1),
    (69784, 104580, 64512, 21755, 4370, 525, 35, 1),
)

PRODMAT_CURVE_A_MINUS3: tuple[tuple[int, ...], ...] = (
    (5, 1, 0, 0, 0, 0, 0),
    (0, 5, 1, 0, 0, 0, 0),
    (-1, 0, 5, 1, 0, 0, 0),
    (5, -1, 0, 5, 1, 0, 0),
    (-21, 5, -1, 0, 5, 1, 0),
    (84, -21, 5, -1, 0, 5, 1),
    (-326, 84, -21, 5, -1, 0, 5),
)

NARAYANA_ROWS: tuple[tuple[int, ...], ...] = (
    (1,),
    (0, 1),
    (0, 1, 1),
    (0, 1, 3, 1),
    (0, 1, 6, 6, 1),
    (0, 1, 10, 20, 10, 1),
    (0, 1, 15, 50, 50, 15, 1),
)

# Row-by-row product of the binomial triangle with the Narayana triangle;
# its diagonal sums reproduce A105633 with a prepended 1.
BINOMIAL_NARAYANA_PRODUCT: tuple[tuple[int, ...], ...] = (
    (1,),
    (1, 1),
    (1, 3, 1),
    (1, 7, 6, 1),
    (1, 15, 24, 10, 1),
    (1, 31, 80, 60, 15, 1),
    (1, 63, 240, 280, 125, 21, 1),
)

# b_n rows of the curve table for a = 0..5 (true expansions of
# (2-a + (1-3a+a^2)x)/(1+(1-a)x), lengths as printed).
CURVE_B_TABLE: tuple[tuple[str, tuple[int, ...]], ...] = (
    ("0", (2, -1, 1, -1, 1, -1)),
    ("1", (1, -1, 0, 0, 0)),
    ("2", (0, -1, -1, -1)),
    ("3", (-1, -1, -2, -4, -8)),
    ("4", (-2, -1, -3, -9, -27)),
    ("5", (-3, -1, -4, -16)),
)


def base_sequence(kind: str, params: tuple[str, ...], length: int) -> list[Fraction]:
    """Recompute the first ``length`` terms of a generator sequence."""
    if kind == "catalan":
        return list(catalan(length).coeffs)
    if kind == "family":
        p = FamilyParams.of(*params)
        return list(family.g_family(p, length).coeffs)
    if kind == "ad":
        a, d = params
        return list(family.g_ad(a, d, length).coeffs)
    if kind == "companion":
        p = FamilyParams.of(*params)
        return list(family.companion(p, length).coeffs)
    if kind == "curve_g":
        return list(elliptic.pipeline(params[0], length).g.coeffs)
    if kind == "curve_f":
        return list(elliptic.f_from_curve(params[0], length).coeffs)
    if kind == "curve_branch":
        return list(elliptic.curve_branch(params[0], length).coeffs)
    raise ValueError(f"unknown generator kind {kind!r}")


def computed_values(entry: KnownSequence) -> list[Fraction]:
    """Recompute the values an entry's prefix claims, same length."""
    want = len(entry.prefix)
    transform = entry.transform
    if transform == "":
        return base_sequence(entry.kind, entry.params, want)
    if transform == "hankel":
        source = base_sequence(entry.kind, entry.params, 2 * want - 1)
        return list(hankel_transform(source).values[:want])
    if transform == "hankel_tail_neg":
        source = base_sequence(entry.kind, entry.params, 2 * (want + 2) - 1)
        values = hankel_transform(source).values
        return [-v for v in values[2:want + 2]]
    if transform == "binomial_inverse":
        source = base_sequence(entry.kind, entry.params, want)
        return binomial_transform(source, inverse=True)
    if transform == "diff":
        source = base_sequence(entry.kind, entry.params, want)
        return [source[0]] + [source[n] - source[n - 1] for n in range(1, want)]
    if transform.startswith("prepend:"):
        head = [rational(v) for v in transform.split(":", 1)[1].split(",")]
        source = base_sequence(entry.kind, entry.params, want - len(head))
        return head + source
    raise ValueError(f"unknown transform {entry.transform!r}")
